#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cheby/chebyshev.hpp"

namespace cheby {

enum class StabilityClass {
    superattracting,          // |m| < 1e-9
    attracting,               // |m| < 1 - band
    repelling,                // |m| > 1 + band
    rationally_indifferent,   // |m| ~ 1, m within 1e-6 of a root of unity of order <= 24
    irrationally_indifferent  // |m| ~ 1 otherwise
};

const char* to_string(StabilityClass c);

struct FixedPointRecord {
    SpherePoint location;
    Complex multiplier{};
    StabilityClass cls = StabilityClass::repelling;
    bool extraneous = false;          // not a root of p (infinity always is)
    int multiplicity = 1;             // as a root of F - zG (1 for infinity)
    std::optional<int> root_multiplicity;  // set when the point is a root of p
    std::string note;                 // non-empty only when a sanity check tripped
};

/// Multiplier of C_p at a root of multiplicity k: (k-1)(2k-1) / (2 k^2).
double root_multiplier(int k);
/// Multiplier of C_p at infinity for deg p = d: 2 d^2 / (2 d^2 - 3 d + 1).
double infinity_multiplier(int d);

/// Width of the indifference band around |m| = 1.
inline constexpr double kIndifferenceBand = 1e-9;

StabilityClass classify_multiplier(Complex m);

/// All fixed points of C_p on the sphere: the finite ones are the roots of
/// F(z) - z G(z) (with cluster multiplicity), infinity is appended as a
/// simple fixed point with multiplier from the stored lead ratio.  Records
/// are sorted by location (finite first, lexicographic by re then im).
/// When a record's multiplicity and multiplier disagree about parabolicity
/// (multiplicity >= 2 without multiplier ~ 1, or vice versa) the record
/// carries a diagnostic note instead of raising.
std::vector<FixedPointRecord> find_fixed_points(const Polynomial& p,
                                                double tol = kDefaultClusterTol);

/// The finite extraneous fixed points located independently as the solutions
/// of L_p(z) = -2, repeated per multiplicity.  Roots of p never appear
/// (L_p takes the value (k-1)/k there).
std::vector<Complex> extraneous_from_convexity(const Polynomial& p,
                                               double tol = kDefaultClusterTol);

}  // namespace cheby
