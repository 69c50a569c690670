#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bilab/errors.hpp"
#include "bilab/io.hpp"
#include "bilab/lab.hpp"

using namespace bilab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Flag values name either a file or inline content.
std::string text_or_file(const std::string& arg) {
    std::ifstream in(arg);
    if (!in) return arg;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Curve load_curve(const std::string& arg) {
    std::string text = text_or_file(arg);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{')
        return Curve(bipoly_from_json(text));
    return Curve::parse(text);
}

Mat2Q load_matrix(const std::string& arg) {
    if (arg == "I") return mat2q_identity();
    if (arg == "A")
        return Mat2Q{GaussianRational(0), GaussianRational(1),
                     GaussianRational(-1), GaussianRational(0)};
    return mat2q_from_json(slurp(arg));
}

Mode parse_mode(const std::string& arg) {
    if (arg == "exact") return Mode::Exact;
    if (arg == "numeric") return Mode::Numeric;
    throw ParseError("mode must be 'exact' or 'numeric': " + arg);
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(out);
    if (!os) throw ParseError("cannot write file: " + out);
    os << text;
    if (text.empty() || text.back() != '\n') os << '\n';
}

std::optional<BigFloat> parse_tol(const std::string& tol, mpfr_prec_t prec) {
    if (tol.empty()) return std::nullopt;
    return BigFloat::from_string(tol, prec);
}

std::string experiment_json(const ExperimentResult& r) {
    nlohmann::ordered_json j;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json e;
        e["n"] = row.n;
        e["m_star"] = row.m_star;
        e["distinct"] = row.distinct;
        e["Q"] = row.coincidences.get_str();
        e["bound"] = row.bound.get_str();
        e["satisfied"] = row.satisfied;
        e["ms"] = row.ms;
        j["rows"].push_back(std::move(e));
    }
    j["slope"] = r.slope;
    return j.dump(2);
}

int run_guarded(const std::function<void()>& fn) {
    try {
        fn();
        return 0;
    } catch (const InternalInvariant& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "rejected: " << e.what() << '\n';
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"laboratory for distinct values of bilinear forms on plane algebraic curves"};
    app.require_subcommand(1);

    std::string curve_arg, points_arg, points2_arg, matrix_arg = "I";
    std::string mode_arg = "exact", base_arg = "2", tol_arg, out_arg, format_arg = "csv";
    std::vector<long> progression_arg;
    std::vector<unsigned> sizes_arg;
    unsigned n_arg = 0, threads_arg = 1;
    long precision_arg = 256;
    unsigned long long seed_arg = 1;
    bool assume_irreducible = false, star_arg = false, crosscheck_arg = false;

    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", out_arg, "write the result to this file instead of stdout");
    };
    auto add_precision = [&](CLI::App* sub) {
        sub->add_option("--precision", precision_arg, "working precision in bits (default 256)");
    };

    CLI::App* classify = app.add_subcommand(
        "classify", "decide whether a curve carries an infinite family of linear symmetries");
    classify->add_option("--curve", curve_arg, "curve as polynomial text, or a file with text or JSON")
        ->required();
    add_precision(classify);
    classify->add_flag("--assume-irreducible", assume_irreducible,
                       "trust the curve to be absolutely irreducible if heuristics cannot decide");
    add_out(classify);

    CLI::App* autos = app.add_subcommand(
        "autos", "enumerate the linear automorphisms of an irreducible curve");
    autos->add_option("--curve", curve_arg, "curve as polynomial text, or a file with text or JSON")
        ->required();
    add_precision(autos);
    autos->add_flag("--assume-irreducible", assume_irreducible,
                    "trust the curve to be absolutely irreducible if heuristics cannot decide");
    add_out(autos);

    CLI::App* generate = app.add_subcommand(
        "generate", "produce a point set on a curve or a geometric-progression model set");
    generate->add_option("--curve", curve_arg, "sample fibers of this curve");
    generate->add_option("--progression", progression_arg,
                         "exponents k l of the model x^k = y^l (l < 0 for x^k y^|l| = 1)")
        ->expected(2);
    generate->add_option("--base", base_arg, "progression base, an exact scalar (default 2)");
    generate->add_option("--n", n_arg, "number of points")->required();
    generate->add_option("--mode", mode_arg, "exact or numeric sampling (default exact)");
    generate->add_option("--seed", seed_arg, "abscissa seed for fiber sampling (default 1)");
    add_precision(generate);
    generate->add_flag("--star", star_arg, "keep one point per proportionality class");
    add_out(generate);

    CLI::App* count = app.add_subcommand(
        "count", "histogram the bilinear-form values over a pair of point sets");
    count->add_option("--points", points_arg, "point-set JSON file")->required();
    count->add_option("--points2", points2_arg, "second point-set JSON file (default: reuse --points)");
    count->add_option("--matrix", matrix_arg, "form matrix: preset I or A, or a JSON file (default I)");
    count->add_option("--threads", threads_arg, "worker threads (default 1)");
    count->add_option("--tol", tol_arg, "dedup tolerance for numeric sets (default 2^(-precision/2))");
    add_precision(count);
    add_out(count);

    CLI::App* quadruples = app.add_subcommand(
        "quadruples", "coincidence count and Cauchy-Schwarz bound for one point set");
    quadruples->add_option("--points", points_arg, "point-set JSON file")->required();
    quadruples->add_option("--matrix", matrix_arg, "form matrix: preset I or A, or a JSON file (default I)");
    quadruples->add_option("--threads", threads_arg, "worker threads (default 1)");
    quadruples->add_option("--tol", tol_arg, "dedup tolerance for numeric sets (default 2^(-precision/2))");
    quadruples->add_flag("--crosscheck", crosscheck_arg,
                         "recount coincidences value by value and require exact agreement");
    add_precision(quadruples);
    add_out(quadruples);

    CLI::App* experiment = app.add_subcommand(
        "experiment", "sweep point-set sizes, histogram each, and fit the growth exponent");
    experiment->add_option("--curve", curve_arg, "sample fibers of this curve");
    experiment->add_option("--progression", progression_arg,
                           "exponents k l of the model x^k = y^l (l < 0 for x^k y^|l| = 1)")
        ->expected(2);
    experiment->add_option("--base", base_arg, "progression base, an exact scalar (default 2)");
    experiment->add_option("--sizes", sizes_arg, "point-set sizes, strictly increasing (at least three)")
        ->required()
        ->delimiter(',');
    experiment->add_option("--matrix", matrix_arg, "form matrix: preset I or A, or a JSON file (default I)");
    experiment->add_option("--mode", mode_arg, "exact or numeric sampling (default exact)");
    experiment->add_option("--seed", seed_arg, "abscissa seed for fiber sampling (default 1)");
    experiment->add_option("--threads", threads_arg, "worker threads (default 1)");
    experiment->add_option("--format", format_arg, "csv or json (default csv)");
    add_precision(experiment);
    add_out(experiment);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto prec = static_cast<mpfr_prec_t>(precision_arg);

    if (app.got_subcommand(classify))
        return run_guarded([&] {
            emit(to_json(load_curve(curve_arg).classify(prec)), out_arg);
        });

    if (app.got_subcommand(autos))
        return run_guarded([&] {
            Curve c = load_curve(curve_arg);
            AutGroup g = enumerate_automorphisms(c, prec);
            if (!assume_irreducible && !g.infinite && c.classify(prec).irreducibility_assumed)
                std::cerr << "note: absolute irreducibility was assumed, not proven; "
                             "pass --assume-irreducible to accept it silently\n";
            emit(to_json(g), out_arg);
        });

    if (app.got_subcommand(generate))
        return run_guarded([&] {
            if (curve_arg.empty() == progression_arg.empty())
                throw ParseError("pass exactly one of --curve and --progression");
            PointSet s;
            unsigned hint = 0;
            if (!progression_arg.empty()) {
                long k = progression_arg[0], l = progression_arg[1];
                s = geometric_progression_set(k, l, n_arg, Scalar(parse_gaussian(base_arg)));
                long ka = k < 0 ? -k : k, la = l < 0 ? -l : l;
                hint = static_cast<unsigned>(l < 0 ? ka + la : std::max(ka, la));
            } else {
                Curve c = load_curve(curve_arg);
                s = sample_curve_points(c, n_arg, parse_mode(mode_arg), seed_arg, prec);
                hint = c.degree();
            }
            if (star_arg) s = prune_star(s, hint);
            emit(to_json(s), out_arg);
        });

    if (app.got_subcommand(count))
        return run_guarded([&] {
            PointSet s1 = pointset_from_json(slurp(points_arg));
            PointSet s2 = points2_arg.empty() ? s1 : pointset_from_json(slurp(points2_arg));
            BilinearForm form(load_matrix(matrix_arg));
            emit(to_json(value_histogram(form, s1, s2, threads_arg, parse_tol(tol_arg, prec))),
                 out_arg);
        });

    if (app.got_subcommand(quadruples))
        return run_guarded([&] {
            PointSet s = pointset_from_json(slurp(points_arg));
            BilinearForm form(load_matrix(matrix_arg));
            auto tol = parse_tol(tol_arg, prec);
            ValueHistogram h = value_histogram(form, s, s, threads_arg, tol);
            QuadrupleReport r = quadruple_report(h);
            if (crosscheck_arg && incidence_crosscheck(form, s, s, tol) != r.coincidences)
                throw InternalInvariant("histogram and incidence recount disagree on Q");
            emit(to_json(r), out_arg);
        });

    if (app.got_subcommand(experiment))
        return run_guarded([&] {
            ExperimentConfig cfg;
            if (!curve_arg.empty()) cfg.curve_text = load_curve(curve_arg).str();
            if (!progression_arg.empty())
                cfg.progression = ProgressionSpec{progression_arg[0], progression_arg[1],
                                                  parse_gaussian(base_arg)};
            cfg.form = load_matrix(matrix_arg);
            cfg.sizes = sizes_arg;
            cfg.mode = parse_mode(mode_arg);
            cfg.seed = seed_arg;
            cfg.precision = prec;
            cfg.threads = threads_arg;
            ExperimentResult r = run_experiment(cfg);
            if (format_arg == "csv")
                emit(experiment_csv(r), out_arg);
            else if (format_arg == "json")
                emit(experiment_json(r), out_arg);
            else
                throw ParseError("format must be 'csv' or 'json': " + format_arg);
        });

    return 2;
}
