#pragma once

#include <optional>
#include <string>

#include "bilab/bipoly.hpp"
#include "bilab/mat2.hpp"

namespace bilab {

enum class CurveClass { Line, Special, NotSpecial, NotIrreducible, Unknown };

std::string curve_class_name(CurveClass c);

/*
 * Outcome of the shape test. "Special" means linearly equivalent to the
 * model x^k = y^l with coprime exponents (l < 0 encodes x^k y^|l| = 1);
 * such curves are exactly the ones carrying a one-parameter family of
 * linear symmetries. A witness maps the curve onto the model, is verified
 * by substitution before being reported, and is exact whenever the two
 * distinguished directions lie in Q(i).
 */
struct SpecialVerdict {
    CurveClass tag = CurveClass::Unknown;
    long k = 0;
    long l = 0;
    std::optional<Mat2Q> witness;                  // f(Wx) = scale * model
    std::optional<GaussianRational> scale;
    std::optional<Mat2C> witness_numeric;          // fallback when directions leave Q(i)
    std::optional<NumericComplex> scale_numeric;
    bool witness_exact = false;
    bool irreducibility_assumed = false;
    std::string reason;
};

struct DirectionProfile {
    DirectionSet asymptotes;                 // directions of the top form
    std::optional<DirectionSet> tangents;    // directions of the lowest form, at the origin
    unsigned distinct_union = 0;             // exact count of distinct directions overall
};

/// Plane curve f(x, y) = 0 over Q(i), kept in normalized form.
class Curve {
public:
    explicit Curve(BiPoly f);
    static Curve parse(const std::string& text) { return Curve(parse_bipoly(text)); }

    const BiPoly& poly() const { return f_; }
    unsigned degree() const { return static_cast<unsigned>(f_.total_degree()); }
    bool contains_origin() const { return f_.low_degree() >= 1; }

    /// Membership test; exact points compare exactly, numeric points need a
    /// tolerance (defaulting to the point precision's dedup tolerance).
    bool contains(const Scalar& x, const Scalar& y,
                  const std::optional<BigFloat>& tol = std::nullopt) const;

    DirectionProfile direction_profile(mpfr_prec_t prec = 256) const;

    SpecialVerdict classify(mpfr_prec_t prec = 256) const;

    /// The image curve under an invertible exact map: zero set of f(m^-1 x).
    Curve image(const Mat2Q& m) const;

    friend bool operator==(const Curve& a, const Curve& b) { return a.f_ == b.f_; }
    friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

    std::string str() const { return f_.str(); }

private:
    BiPoly f_;
};

/// The model curve for a Special verdict: x^k - y^l for l > 0, else
/// x^k y^|l| - 1.
BiPoly special_model(long k, long l);

} // namespace bilab
