#pragma once

#include <complex>
#include <vector>

#include "cheby/poly.hpp"
#include "cheby/roots.hpp"

namespace cheby {

/// A point on the Riemann sphere: either a finite complex value or infinity.
class SpherePoint {
  public:
    SpherePoint() = default;
    SpherePoint(Complex v) : v_(v) {}  // NOLINT: implicit by design
    SpherePoint(double v) : v_(v) {}   // NOLINT
    static SpherePoint infinity() {
        SpherePoint p;
        p.inf_ = true;
        return p;
    }

    bool is_infinity() const { return inf_; }
    /// Finite value; only meaningful when !is_infinity().
    Complex value() const { return v_; }

    bool operator==(const SpherePoint& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }

  private:
    Complex v_{};
    bool inf_ = false;
};

/// Chordal distance on the sphere, range [0, 2].
double spherical_distance(const SpherePoint& a, const SpherePoint& b);

/// Rational map num/den with reduction bookkeeping.  `lead_ratio` is the
/// ratio of leading coefficients of the pair as originally constructed
/// (before reduction, which cannot change it); for a map fixing infinity with
/// deg num = deg den + 1 the multiplier at infinity is 1/lead_ratio.
struct RationalMap {
    Polynomial num;
    Polynomial den;
    bool reduced = false;
    int degree = 0;  // max(deg num, deg den) after reduction
    Complex lead_ratio{};

    /// Extended-precision coefficient shadows carried from construction (same
    /// length as the published coefficient vectors when present).  Evaluation
    /// prefers these: for badly scaled instances the published double
    /// coefficients alone carry representation noise that evaluation at
    /// ill-conditioned points amplifies by factors of 1e8 or more.
    std::vector<std::complex<long double>> num_ext;
    std::vector<std::complex<long double>> den_ext;

    /// Evaluate on the sphere.  Large |z| switches to the reciprocal chart
    /// (reversed-coefficient Horner) so nothing overflows; a point where the
    /// denominator vanishes exactly maps to infinity; a point where both
    /// sides vanish to machine precision throws IndeterminateValue.
    SpherePoint operator()(const SpherePoint& z) const;
};

/// Reduce num/den by cancelling the root clusters they share (root matching,
/// not coefficient gcd), then package as a RationalMap.
RationalMap make_rational(Polynomial num, Polynomial den, double tol = kDefaultClusterTol);

/// Reduction by greedy verified deflation at candidate locations (refined
/// clusters of the denominator's known factors).  At each location, factors
/// are cancelled one at a time for as long as both polynomials verifiably
/// vanish there at rounding level, so only genuine common structure is
/// removed.  Suited to maps whose cancellation pattern depends on a free
/// parameter and has no single closed-form census.
RationalMap reduce_common_verified(Polynomial num, Polynomial den,
                                   std::vector<RootCluster> candidates);

/// A prescribed common factor (z - location)^count to cancel from both sides.
struct DeflationOrder {
    Complex location{};
    int count = 0;
};

/// Reduction by factor counts that are known exactly from the construction
/// of the pair (the factor census of num at the den's roots), rather than
/// detected numerically: detection from computed coefficients misjudges high
/// vanishing orders, the census cannot.  Each deflation point is polished to
/// the numerator's own nearby zero, and every deflation is still verified --
/// the numerator must evaluate to a rounding-level value there -- so a wrong
/// census throws instead of producing a misreduced map.
RationalMap reduce_with_orders(Polynomial num, Polynomial den,
                               const std::vector<DeflationOrder>& orders);

/// Local degree of R at z0: multiplicity with which R takes the value R(z0)
/// there, computed from Taylor data in suitable charts (reciprocal chart at
/// infinity and at poles).  Equals 1 + (order of R' s zero) at regular
/// points, deg R at a full branch point.
int local_degree(const RationalMap& r, const SpherePoint& z0, double tol = 1e-9);

namespace detail {

/// Internal construction entry points taking coefficients straight from the
/// extended-precision builders, so the published doubles and the evaluation
/// shadows are rounded from the same vectors exactly once.  Semantics match
/// the Polynomial-based functions above, which forward here.
RationalMap reduce_common_verified_ext(std::vector<std::complex<long double>> num,
                                       std::vector<std::complex<long double>> den,
                                       std::vector<RootCluster> candidates);
RationalMap reduce_with_orders_ext(std::vector<std::complex<long double>> num,
                                   std::vector<std::complex<long double>> den,
                                   const std::vector<DeflationOrder>& orders);

}  // namespace detail

}  // namespace cheby
