#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bilab/curve.hpp"
#include "bilab/cyclotomic.hpp"
#include "bilab/mat2.hpp"
#include "bilab/points.hpp"

namespace bilab {

/// Strongest arithmetic level at which a symmetry was verified.
enum class CertKind { Exact, Cyclotomic, Numeric };

/*
 * One linear symmetry f(T x) = lambda f(x) of a curve. The matrix is stored
 * at the strongest level that verified it by substitution: Gaussian rational
 * entries, entries in a cyclotomic field Q(zeta_n), or complex big-floats.
 * A numeric shadow of the matrix and factor is always present so downstream
 * consumers can sort, dedup, and compose without caring about the level.
 */
struct AutCertificate {
    CertKind kind = CertKind::Numeric;

    std::optional<Mat2Q> matrix_exact;
    std::optional<GaussianRational> lambda_exact;

    std::optional<Mat2Cyclo> matrix_cyclo;
    std::optional<CycloNum> lambda_cyclo;

    Mat2C matrix_numeric;
    NumericComplex lambda_numeric;

    bool exactly_verified() const { return kind != CertKind::Numeric; }
    /// Order of the cyclotomic field carrying the entries; 4 when they are
    /// Gaussian rationals, 0 when the certificate is merely numeric.
    unsigned cyclotomic_order() const;

    std::string str() const;
};

/*
 * The one-parameter family alpha -> W diag(alpha^l, alpha^k) W^-1 carried by
 * a curve linearly equivalent to the model x^k = y^l. The witness satisfies
 * f(W x) = s * model(x), so conjugating the diagonal family of the model
 * through W yields symmetries of the curve itself.
 */
struct InfiniteFamily {
    long k = 0;
    long l = 0;
    std::optional<Mat2Q> witness;
    std::optional<Mat2C> witness_numeric;
    std::string description;
};

/// Every invertible T with f(T x) proportional to f: either an infinite
/// family (line or special curve) or the full finite list of certificates.
struct AutGroup {
    bool infinite = false;
    std::optional<InfiniteFamily> family;
    std::vector<AutCertificate> certificates;
    size_t size() const { return certificates.size(); }
};

/// The scalar maps alpha * identity among the symmetries: all alpha with
/// f(alpha x, alpha y) proportional to f. Infinite exactly when f is
/// homogeneous; otherwise the g-th roots of unity, g the gcd of the gaps
/// between the degrees of the homogeneous components.
struct ScalingReport {
    std::vector<Scalar> factors;
    bool infinite = false;
    unsigned order = 0;
};

ScalingReport scaling_automorphisms(const Curve& c, mpfr_prec_t prec = 256);

/// Exact test: the proportionality factor when f(t x) = lambda f(x), else
/// nullopt. Singular input throws SingularMatrix.
std::optional<GaussianRational> is_automorphism(const Curve& c, const Mat2Q& t);
std::optional<CycloNum> is_automorphism(const Curve& c, const Mat2Cyclo& t);
/// Numeric test: every coefficient of f(t x) must match lambda f within tol.
std::optional<NumericComplex> is_automorphism(const Curve& c, const Mat2C& t, const BigFloat& tol);

/*
 * Full enumeration of the linear symmetries of an irreducible curve.
 * Lines and special curves report their infinite family; otherwise the
 * finite group is enumerated through the action on the directions cut out
 * by the homogeneous components and every candidate is verified by
 * substitution before certification. Throws Error when the input is
 * visibly not irreducible.
 */
AutGroup enumerate_automorphisms(const Curve& c, mpfr_prec_t prec = 256);

/// The transform N_jl^-1 N_ik, where N_ab stacks the coordinates of p_a and
/// p_b as rows; exact points only. Throws SingularNjl when N_jl has no
/// inverse and ModeMismatch on numeric coordinates.
Mat2Q graph_transform(const Point& pi, const Point& pj, const Point& pk, const Point& pl);

struct BadPair {
    size_t i = 0;
    size_t j = 0;
};

struct BadPairReport {
    std::vector<BadPair> bad;
    size_t pair_count = 0;        // ordered pairs examined: m(m-1)
    size_t automorphisms_hit = 0; // distinct transforms that proved to be symmetries
};

/*
 * An ordered pair (i, j) of indices into s is bad when some graph transform
 * N_jl^-1 N_ik built from two further indices k != i, l != j, k != l is a
 * symmetry of the curve: such a pair forces coincidences among the values
 * of every bilinear form on s. Exact point sets only.
 */
BadPairReport detect_bad_pairs(const PointSet& s, const Curve& c);

} // namespace bilab
