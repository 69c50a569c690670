#include "bilab/lab.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "bilab/curve.hpp"
#include "bilab/errors.hpp"

namespace bilab {

namespace {

void validate(const ExperimentConfig& cfg) {
    if (cfg.curve_text.has_value() == cfg.progression.has_value())
        throw ParseError("an experiment needs exactly one point source: a curve or a progression");
    if (cfg.sizes.size() < 3)
        throw ParseError("an experiment needs at least three sizes to fit a growth exponent");
    for (size_t i = 0; i < cfg.sizes.size(); ++i) {
        if (cfg.sizes[i] < 2)
            throw ParseError("experiment sizes must be at least 2");
        if (i > 0 && cfg.sizes[i] <= cfg.sizes[i - 1])
            throw ParseError("experiment sizes must be strictly increasing");
    }
    if (cfg.progression && cfg.mode != Mode::Exact)
        throw ParseError("progression sets are exact; use a curve source for numeric experiments");
    if (cfg.precision < 64)
        throw ParseError("experiment precision must be at least 64 bits");
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    BilinearForm form(cfg.form);

    std::optional<Curve> curve;
    unsigned degree_hint = 0;
    if (cfg.curve_text) {
        curve = Curve::parse(*cfg.curve_text);
        degree_hint = curve->degree();
    } else {
        const auto& pr = *cfg.progression;
        // Degree of the model the progression lies on: x^k = y^l, or
        // x^k y^|l| = 1 when l < 0.
        long k = pr.k < 0 ? -pr.k : pr.k;
        long l = pr.l < 0 ? -pr.l : pr.l;
        degree_hint = static_cast<unsigned>(pr.l < 0 ? k + l : (k > l ? k : l));
    }

    ExperimentResult result;
    for (unsigned n : cfg.sizes) {
        auto t0 = std::chrono::steady_clock::now();

        PointSet s = cfg.progression
            ? geometric_progression_set(cfg.progression->k, cfg.progression->l,
                                        n, cfg.progression->base)
            : sample_curve_points(*curve, n, cfg.mode, cfg.seed, cfg.precision);

        ExperimentRow row;
        row.n = n;
        row.m_star = prune_star(s, degree_hint).points.size();

        ValueHistogram hist = value_histogram(form, s, s, cfg.threads);
        QuadrupleReport report = quadruple_report(hist);
        if (!report.satisfied)
            throw InternalInvariant("a histogram violated the coincidence bound Q >= m^4 / distinct");

        row.distinct = hist.distinct();
        row.coincidences = report.coincidences;
        row.bound = report.bound;
        row.satisfied = report.satisfied;

        auto t1 = std::chrono::steady_clock::now();
        row.ms = static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
        result.rows.push_back(std::move(row));
    }

    std::vector<std::pair<unsigned long, unsigned long>> samples;
    samples.reserve(result.rows.size());
    for (const auto& row : result.rows)
        samples.emplace_back(row.n, row.distinct);
    result.slope = fit_exponent(samples);
    return result;
}

std::string experiment_csv(const ExperimentResult& result) {
    std::ostringstream os;
    os << "n,m_star,distinct,Q,bound,satisfied,ms\n";
    for (const auto& row : result.rows) {
        os << row.n << ',' << row.m_star << ',' << row.distinct << ','
           << row.coincidences.get_str() << ',' << row.bound.get_str() << ','
           << (row.satisfied ? 1 : 0) << ',' << row.ms << '\n';
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", result.slope);
    os << "# slope " << buf << '\n';
    return os.str();
}

} // namespace bilab
