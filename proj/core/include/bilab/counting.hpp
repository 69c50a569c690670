#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bilab/mat2.hpp"
#include "bilab/points.hpp"

namespace bilab {

/// Nondegenerate pairing B(p, q) = p^T M q.
struct BilinearForm {
    Mat2Q m;

    explicit BilinearForm(Mat2Q coeffs);
    /// Dot pairing, M = identity.
    static BilinearForm dot();
    /// Area pairing, M = [[0, 1], [-1, 0]]: B(p, q) = det of the rows p, q.
    static BilinearForm area();

    Scalar operator()(const Point& p, const Point& q) const;
};

/// Distinct values of B over S1 x S2 with multiplicities, canonically
/// ordered. Exact histograms compare values exactly; numeric ones merge
/// values within the dedup tolerance of their precision.
struct ValueHistogram {
    Mode mode = Mode::Exact;
    size_t m1 = 0;
    size_t m2 = 0;
    std::vector<std::pair<Scalar, size_t>> entries;

    size_t distinct() const { return entries.size(); }
    size_t pairs() const { return m1 * m2; }
};

/// Histogram of all m1 * m2 values. The thread count only splits the work;
/// the result is identical for every positive count. tol overrides the
/// dedup tolerance on numeric sets and is ignored for exact ones.
ValueHistogram value_histogram(const BilinearForm& f, const PointSet& s1, const PointSet& s2,
                               unsigned threads = 1,
                               const std::optional<BigFloat>& tol = std::nullopt);

/// Coincidence statistics of a square histogram: Q counts ordered value
/// agreements B(p_i, q_j) = B(p_k, q_l), and Cauchy-Schwarz forces
/// Q >= m^4 / distinct.
struct QuadrupleReport {
    size_t m = 0;
    size_t distinct = 0;
    mpz_class coincidences;
    Rational bound;
    bool satisfied = false;
};

QuadrupleReport quadruple_report(const ValueHistogram& h);

/// Q recounted the long way, over all ordered pairs of index pairs. Exact
/// sets use exact equality; numeric sets compare within tol (defaulting to
/// the dedup tolerance of their precision).
mpz_class incidence_crosscheck(const BilinearForm& f, const PointSet& s1, const PointSet& s2,
                               const std::optional<BigFloat>& tol = std::nullopt);

/// Least-squares slope of log(count) over log(n). Needs at least three
/// samples with strictly increasing n and positive counts.
double fit_exponent(const std::vector<std::pair<unsigned long, unsigned long>>& samples);

} // namespace bilab
