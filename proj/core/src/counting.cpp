#include "bilab/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "bilab/errors.hpp"

namespace bilab {

namespace {

GaussianRational exact_value(const Mat2Q& m, const Point& p, const Point& q) {
    const GaussianRational& px = p.x.exact();
    const GaussianRational& py = p.y.exact();
    const GaussianRational& qx = q.x.exact();
    const GaussianRational& qy = q.y.exact();
    return px * (m.a * qx + m.b * qy) + py * (m.c * qx + m.d * qy);
}

NumericComplex numeric_value(const Mat2C& m, const Point& p, const Point& q) {
    const NumericComplex& px = p.x.numeric();
    const NumericComplex& py = p.y.numeric();
    const NumericComplex& qx = q.x.numeric();
    const NumericComplex& qy = q.y.numeric();
    return px * (m.a * qx + m.b * qy) + py * (m.c * qx + m.d * qy);
}

mpfr_prec_t set_precision(const PointSet& s) {
    mpfr_prec_t prec = 64;
    for (const auto& p : s.points) {
        prec = std::max(prec, p.x.numeric().precision());
        prec = std::max(prec, p.y.numeric().precision());
    }
    return prec;
}

/// Run worker(t) on threads 0..count-1 and join; count 1 stays inline.
template <typename Worker>
void run_split(unsigned count, Worker worker) {
    if (count <= 1) {
        worker(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
}

} // namespace

BilinearForm::BilinearForm(Mat2Q coeffs) : m(std::move(coeffs)) {
    if (m.det().is_zero()) throw SingularMatrix("bilinear form needs an invertible matrix");
}

BilinearForm BilinearForm::dot() { return BilinearForm(mat2q_identity()); }

BilinearForm BilinearForm::area() {
    return BilinearForm(Mat2Q{GaussianRational(0), GaussianRational(1),
                              GaussianRational(-1), GaussianRational(0)});
}

Scalar BilinearForm::operator()(const Point& p, const Point& q) const {
    if (p.mode() != q.mode()) throw ModeMismatch("pairing needs both points in one mode");
    if (p.mode() == Mode::Exact) return Scalar(exact_value(m, p, q));
    mpfr_prec_t prec = std::max(std::max(p.x.numeric().precision(), p.y.numeric().precision()),
                                std::max(q.x.numeric().precision(), q.y.numeric().precision()));
    return Scalar(numeric_value(to_numeric(m, prec), p, q));
}

ValueHistogram value_histogram(const BilinearForm& f, const PointSet& s1, const PointSet& s2,
                               unsigned threads, const std::optional<BigFloat>& tol) {
    if (s1.mode != s2.mode) throw ModeMismatch("histogram needs both sets in one mode");
    ValueHistogram h;
    h.mode = s1.mode;
    h.m1 = s1.size();
    h.m2 = s2.size();
    const size_t total = h.m1 * h.m2;
    if (total == 0) return h;

    const unsigned workers =
        static_cast<unsigned>(std::min<size_t>(std::max(threads, 1u), total));
    const size_t chunk = (total + workers - 1) / workers;
    auto slice = [&](unsigned t) {
        size_t lo = std::min<size_t>(static_cast<size_t>(t) * chunk, total);
        size_t hi = std::min<size_t>(lo + chunk, total);
        return std::pair<size_t, size_t>{lo, hi};
    };

    if (h.mode == Mode::Exact) {
        std::vector<std::map<GaussianRational, size_t, GaussianLess>> local(workers);
        run_split(workers, [&](unsigned t) {
            auto [lo, hi] = slice(t);
            for (size_t i = lo; i < hi; ++i)
                ++local[t][exact_value(f.m, s1.points[i / h.m2], s2.points[i % h.m2])];
        });
        std::map<GaussianRational, size_t, GaussianLess> merged;
        for (const auto& part : local)
            for (const auto& [value, count] : part) merged[value] += count;
        h.entries.reserve(merged.size());
        for (auto& [value, count] : merged) h.entries.emplace_back(Scalar(value), count);
        return h;
    }

    mpfr_prec_t prec = std::max(set_precision(s1), set_precision(s2));
    Mat2C mn = to_numeric(f.m, prec);
    std::vector<std::vector<NumericComplex>> local(workers);
    run_split(workers, [&](unsigned t) {
        auto [lo, hi] = slice(t);
        local[t].reserve(hi - lo);
        for (size_t i = lo; i < hi; ++i)
            local[t].push_back(numeric_value(mn, s1.points[i / h.m2], s2.points[i % h.m2]));
    });
    std::vector<NumericComplex> values;
    values.reserve(total);
    for (auto& part : local)
        for (auto& v : part) values.push_back(std::move(v));
    std::sort(values.begin(), values.end(),
              [](const NumericComplex& a, const NumericComplex& b) {
                  return NumericComplex::lex_less(a, b);
              });

    BigFloat eps = tol ? *tol : default_tolerance(prec);
    size_t at = 0;
    while (at < values.size()) {
        const NumericComplex& rep = values[at];
        size_t run = at + 1;
        while (run < values.size() && NumericComplex::close(values[run], rep, eps)) ++run;
        h.entries.emplace_back(Scalar(rep), run - at);
        at = run;
    }
    return h;
}

QuadrupleReport quadruple_report(const ValueHistogram& h) {
    if (h.m1 != h.m2) throw NonSquareInput();
    QuadrupleReport r;
    r.m = h.m1;
    r.distinct = h.distinct();
    r.coincidences = 0;
    for (const auto& [value, count] : h.entries) {
        mpz_class c(static_cast<unsigned long>(count));
        r.coincidences += c * c;
    }
    if (r.distinct == 0) {
        r.bound = 0;
        r.satisfied = true;
        return r;
    }
    mpz_class mz(static_cast<unsigned long>(r.m));
    mpz_class m2(mz * mz);
    mpz_class m4(m2 * m2);
    mpz_class dz(static_cast<unsigned long>(r.distinct));
    r.bound = Rational(m4, dz);
    r.bound.canonicalize();
    r.satisfied = mpz_class(r.coincidences * dz) >= m4;
    return r;
}

mpz_class incidence_crosscheck(const BilinearForm& f, const PointSet& s1, const PointSet& s2,
                               const std::optional<BigFloat>& tol) {
    if (s1.mode != s2.mode) throw ModeMismatch("crosscheck needs both sets in one mode");
    const size_t total = s1.size() * s2.size();
    mpz_class q = 0;
    if (total == 0) return q;

    if (s1.mode == Mode::Exact) {
        std::vector<GaussianRational> values;
        values.reserve(total);
        for (size_t i = 0; i < total; ++i)
            values.push_back(exact_value(f.m, s1.points[i / s2.size()], s2.points[i % s2.size()]));
        for (const auto& a : values)
            for (const auto& b : values)
                if (a == b) ++q;
        return q;
    }

    mpfr_prec_t prec = std::max(set_precision(s1), set_precision(s2));
    Mat2C mn = to_numeric(f.m, prec);
    std::vector<NumericComplex> values;
    values.reserve(total);
    for (size_t i = 0; i < total; ++i)
        values.push_back(numeric_value(mn, s1.points[i / s2.size()], s2.points[i % s2.size()]));
    BigFloat eps = tol ? *tol : default_tolerance(prec);
    for (const auto& a : values)
        for (const auto& b : values)
            if (NumericComplex::close(a, b, eps)) ++q;
    return q;
}

double fit_exponent(const std::vector<std::pair<unsigned long, unsigned long>>& samples) {
    if (samples.size() < 3) throw InsufficientSamples("need at least three samples");
    for (size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].first == 0 || samples[i].second == 0)
            throw InsufficientSamples("sizes and counts must be positive");
        if (i > 0 && samples[i].first <= samples[i - 1].first)
            throw InsufficientSamples("sizes must be strictly increasing");
    }
    const size_t n = samples.size();
    double sx = 0, sy = 0;
    for (const auto& [size, count] : samples) {
        sx += std::log(static_cast<double>(size));
        sy += std::log(static_cast<double>(count));
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double num = 0, den = 0;
    for (const auto& [size, count] : samples) {
        const double dx = std::log(static_cast<double>(size)) - mx;
        num += dx * (std::log(static_cast<double>(count)) - my);
        den += dx * dx;
    }
    return num / den;
}

} // namespace bilab
