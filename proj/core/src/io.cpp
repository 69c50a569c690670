#include "bilab/io.hpp"

#include <utility>

#include "json.hpp"

#include "bilab/errors.hpp"

namespace bilab {

namespace {

using json = nlohmann::ordered_json;

constexpr unsigned kMaxExponent = 4096;

std::string numeric_text(const NumericComplex& z) {
    return z.re.to_string() + " " + z.im.to_string();
}

NumericComplex numeric_from_text(const std::string& s, mpfr_prec_t prec) {
    auto cut = s.find(' ');
    if (cut == std::string::npos || cut == 0 || cut + 1 >= s.size())
        throw ParseError("numeric coordinate must read '<re> <im>': '" + s + "'");
    return {BigFloat::from_string(s.substr(0, cut), prec),
            BigFloat::from_string(s.substr(cut + 1), prec)};
}

json exact_matrix(const Mat2Q& m) {
    return json::array({json::array({m.a.str(), m.b.str()}),
                        json::array({m.c.str(), m.d.str()})});
}

json numeric_matrix(const Mat2C& m) {
    return json::array({json::array({numeric_text(m.a), numeric_text(m.b)}),
                        json::array({numeric_text(m.c), numeric_text(m.d)})});
}

json certificate_json(const AutCertificate& cert) {
    json j;
    switch (cert.kind) {
        case CertKind::Exact:
            j["kind"] = "exact";
            j["matrix"] = exact_matrix(*cert.matrix_exact);
            j["lambda"] = cert.lambda_exact->str();
            break;
        case CertKind::Cyclotomic:
            j["kind"] = "cyclotomic";
            j["order"] = cert.cyclotomic_order();
            j["display"] = cert.str();
            break;
        case CertKind::Numeric:
            j["kind"] = "numeric";
            break;
    }
    j["matrix_numeric"] = numeric_matrix(cert.matrix_numeric);
    j["lambda_numeric"] = numeric_text(cert.lambda_numeric);
    return j;
}

template <typename Fn>
auto guarded(const Fn& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON input: ") + e.what());
    }
}

unsigned small_exponent(const json& j, const char* key) {
    long long v = j.at(key).get<long long>();
    if (v < 0 || v > static_cast<long long>(kMaxExponent))
        throw ParseError("exponent out of range");
    return static_cast<unsigned>(v);
}

} // namespace

std::string to_json(const BiPoly& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms) {
        json t;
        t["dx"] = m.dx;
        t["dy"] = m.dy;
        t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    json j;
    j["terms"] = std::move(terms);
    return j.dump(2);
}

std::string to_json(const SpecialVerdict& v) {
    json j;
    j["verdict"] = curve_class_name(v.tag);
    j["k"] = v.k;
    j["l"] = v.l;
    if (v.witness) {
        j["witness"] = exact_matrix(*v.witness);
        j["scale"] = v.scale ? v.scale->str() : "";
    }
    if (v.witness_numeric) {
        j["witness_numeric"] = numeric_matrix(*v.witness_numeric);
        if (v.scale_numeric) j["scale_numeric"] = numeric_text(*v.scale_numeric);
    }
    j["witness_exact"] = v.witness_exact;
    j["assumed_irreducible"] = v.irreducibility_assumed;
    j["reason"] = v.reason;
    return j.dump(2);
}

std::string to_json(const AutGroup& g) {
    json j;
    j["infinite"] = g.infinite;
    if (g.family) {
        json fam;
        fam["k"] = g.family->k;
        fam["l"] = g.family->l;
        if (g.family->witness) fam["witness"] = exact_matrix(*g.family->witness);
        if (g.family->witness_numeric)
            fam["witness_numeric"] = numeric_matrix(*g.family->witness_numeric);
        fam["description"] = g.family->description;
        j["family"] = std::move(fam);
    }
    j["size"] = g.size();
    json certs = json::array();
    for (const auto& cert : g.certificates) certs.push_back(certificate_json(cert));
    j["certificates"] = std::move(certs);
    return j.dump(2);
}

std::string to_json(const PointSet& s) {
    json j;
    j["mode"] = s.mode == Mode::Exact ? "exact" : "numeric";
    j["star"] = s.star;
    if (s.mode == Mode::Numeric) {
        mpfr_prec_t prec = 64;
        for (const auto& p : s.points) prec = std::max(prec, p.x.numeric().precision());
        j["precision"] = static_cast<long>(prec);
    }
    json pts = json::array();
    for (const auto& p : s.points) {
        if (s.mode == Mode::Exact)
            pts.push_back(json::array({p.x.exact().str(), p.y.exact().str()}));
        else
            pts.push_back(json::array({numeric_text(p.x.numeric()), numeric_text(p.y.numeric())}));
    }
    j["points"] = std::move(pts);
    return j.dump(2);
}

std::string to_json(const ValueHistogram& h) {
    json j;
    j["mode"] = h.mode == Mode::Exact ? "exact" : "numeric";
    j["m1"] = h.m1;
    j["m2"] = h.m2;
    j["distinct"] = h.distinct();
    json entries = json::array();
    for (const auto& [value, count] : h.entries) {
        json e;
        e["value"] = value.str();
        e["count"] = count;
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j.dump(2);
}

std::string to_json(const QuadrupleReport& r) {
    json j;
    j["n"] = r.m;
    j["distinct"] = r.distinct;
    j["Q"] = r.coincidences.get_str();
    j["bound"] = r.bound.get_str();
    j["satisfied"] = r.satisfied;
    return j.dump(2);
}

BiPoly bipoly_from_json(const std::string& text) {
    return guarded([&] {
        json j = json::parse(text);
        BiPoly f;
        for (const auto& t : j.at("terms")) {
            unsigned dx = small_exponent(t, "dx");
            unsigned dy = small_exponent(t, "dy");
            GaussianRational c = parse_gaussian(t.at("c").get<std::string>());
            if (c.is_zero()) continue;
            f = f + BiPoly::monomial(dx, dy, c);
        }
        return f;
    });
}

PointSet pointset_from_json(const std::string& text) {
    return guarded([&] {
        json j = json::parse(text);
        std::string mode = j.at("mode").get<std::string>();
        if (mode != "exact" && mode != "numeric")
            throw ParseError("mode must be 'exact' or 'numeric'");
        PointSet s;
        s.mode = mode == "exact" ? Mode::Exact : Mode::Numeric;
        s.star = j.value("star", false);
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(j.value("precision", 256));
        if (prec < 64) throw ParseError("precision must be at least 64");
        for (const auto& entry : j.at("points")) {
            if (!entry.is_array() || entry.size() != 2)
                throw ParseError("each point must be a two-element array");
            std::string xs = entry[0].get<std::string>();
            std::string ys = entry[1].get<std::string>();
            if (s.mode == Mode::Exact)
                s.push({Scalar(parse_gaussian(xs)), Scalar(parse_gaussian(ys))});
            else
                s.push({Scalar(numeric_from_text(xs, prec)), Scalar(numeric_from_text(ys, prec))});
        }
        return s;
    });
}

Mat2Q mat2q_from_json(const std::string& text) {
    return guarded([&] {
        json j = json::parse(text);
        if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
            !j[1].is_array() || j[1].size() != 2)
            throw ParseError("matrix must be a 2x2 array of scalar strings");
        return Mat2Q{parse_gaussian(j[0][0].get<std::string>()),
                     parse_gaussian(j[0][1].get<std::string>()),
                     parse_gaussian(j[1][0].get<std::string>()),
                     parse_gaussian(j[1][1].get<std::string>())};
    });
}

} // namespace bilab
