#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bilab/counting.hpp"

namespace bilab {

/// Model-curve point source (b^(l i), b^(k i)) instead of fiber sampling.
struct ProgressionSpec {
    long k = 1;
    long l = 1;
    GaussianRational base = GaussianRational(2);
};

/// One growth experiment: draw point sets of the given sizes from a single
/// source, histogram the pairing over S x S, and fit the growth exponent.
/// Exactly one of curve_text and progression must be set.
struct ExperimentConfig {
    std::optional<std::string> curve_text;
    std::optional<ProgressionSpec> progression;
    Mat2Q form = mat2q_identity();
    std::vector<unsigned> sizes;
    Mode mode = Mode::Exact;
    uint64_t seed = 1;
    mpfr_prec_t precision = 256;
    unsigned threads = 1;
};

struct ExperimentRow {
    unsigned n = 0;
    size_t m_star = 0;
    size_t distinct = 0;
    mpz_class coincidences;
    Rational bound;
    bool satisfied = false;
    long ms = 0;
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;
    double slope = 0.0;
};

/// Runs the rows in order. Identical configs give identical results except
/// for the ms timings; the thread count never changes any count.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// "n,m_star,distinct,Q,bound,satisfied,ms" rows plus a final slope line.
std::string experiment_csv(const ExperimentResult& result);

} // namespace bilab
