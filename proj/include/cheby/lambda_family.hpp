#pragma once

#include <string>
#include <vector>

#include "cheby/fixed_points.hpp"

namespace cheby {

/// Constant term of the normalized cubic z^3 + 3z + psi(lambda) whose
/// Chebyshev map has an extraneous fixed point of multiplier lambda at
/// -1/sqrt(5 - lambda):
///   psi(lambda) = (3 lambda^2 - 39 lambda + 124) / (5 - lambda)^{3/2}
/// with the principal square root.  lambda = 5 and lambda = 6 admit no such
/// cubic and throw ForbiddenLambda.
Complex psi(Complex lambda);

/// p_lambda = z^3 + 3z + psi(lambda).
Polynomial lambda_polynomial(Complex lambda);

/// The closed-form map
///   (5z^7 + 6z^5 - 5 psi z^4 - 3 z^3 - 12 psi z^2 - psi^2 z - 3 psi)
///   / (9 (z^2+1)^3),
/// used as a cross-check against chebyshev_map(lambda_polynomial(lambda)).
RationalMap lambda_map_closed_form(Complex lambda);

/// Roots of the extraneous-fixed-point quartic 4z^4 + 9z^2 + psi z + 3,
/// repeated per multiplicity.  The distinguished root -1/sqrt(5-lambda) is
/// verified by direct substitution and listed first.
std::vector<Complex> extraneous_quartic(Complex lambda);

struct BoundCheck {
    std::string name;
    bool pass = false;
    double measured = 0;  // the quantity the bound constrains
    std::string detail;
};

/// The bracketing facts used to locate the dynamically relevant points for
/// real lambda in [-1, 1]: each check name, verdict, and measured value.
///   real_root_bracket        p_lambda has its real root r in (-2, -1)
///   alpha_bracket            real extraneous root alpha in (-2/s, -1/s], s = sqrt(5-lambda)
///   critical_value_bound     C_lambda(1/sqrt 5) < -7.449 < r
///   horizontal_preimage      some x0 in (-1/sqrt 5, 0) has C_lambda(x0) = r
///   ordering_chain           r < -3/s < -2/s < alpha
///   nonreal_extraneous       non-real quartic roots zeta: |zeta|^2 in (3/2, 9/2),
///                            multiplier modulus > 13/3, and |zeta|^2 = -3s/(4 alpha)
std::vector<BoundCheck> lemma_bound_audit(double lambda);

/// Real root of p_lambda (bisection inside the bracket above).
double real_root_of_lambda_poly(double lambda);
/// Real root alpha of the extraneous quartic for real lambda <= 1.
double real_extraneous_root(double lambda);

/// The other parameter value sharing the same map: psi is strictly decreasing
/// on (-inf, 1) and increasing on (1, 5), so each lambda in [-1, 1) has a
/// twin lambda' in (1, delta] with psi(lambda') = psi(lambda); twin(1) = 1.
double twin_multiplier(double lambda);
/// delta = twin of -1, i.e. the solution of psi(delta) = psi(-1) in (1, 5).
double twin_upper_limit();

struct LambdaFamilyRecord {
    Complex lambda{};
    Complex psi_value{};
    Polynomial p_lambda;
    RationalMap c_lambda;
    Complex distinguished_extraneous{};
    std::vector<Complex> other_extraneous;
    Complex distinguished_multiplier{};  // measured C_lambda' at the distinguished point
    bool closed_form_agrees = false;     // built map vs closed form at sample points
    std::vector<FixedPointRecord> fixed_points;
    std::vector<BoundCheck> bound_checks;  // filled for real lambda in [-1, 1]
};

/// Assemble the full record for one parameter value.
LambdaFamilyRecord lambda_record(Complex lambda);

}  // namespace cheby
