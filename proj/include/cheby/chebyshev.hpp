#pragma once

#include "cheby/rational.hpp"

namespace cheby {

/// The convexity ratio L_p = p p'' / (p')^2 as a reduced rational map.
RationalMap convexity_ratio(const Polynomial& p);

/// Chebyshev iteration map of p:
///   C_p(z) = z - (1 + L_p(z)/2) p(z)/p'(z)
///          = (2 z p'^3 - 2 p p'^2 - p^2 p'') / (2 p'^3), reduced.
/// Requires deg p >= 2 and p not a monomial (those collapse to a linear map).
RationalMap chebyshev_map(const Polynomial& p);

/// Derivative of the Chebyshev map, built directly as
///   C_p'(z) = p^2 (3 p''^2 - p' p''') / (2 p'^4), reduced.
/// Unlike pointwise differentiation this evaluates cleanly at multiple roots.
RationalMap chebyshev_derivative(const Polynomial& p);

/// One-parameter family containing the Chebyshev map (sigma = 0) and
/// Halley's method (sigma = 1/2):
///   H_p^sigma(z) = z - (1 + p p'' / (2 ((p')^2 - sigma p p''))) p/p'.
RationalMap halley_map(const Polynomial& p, Complex sigma);

/// Map of the rescaled instance p(alpha z + beta), built in one sweep.  For a
/// badly scaled frame this is far more accurate than composing first and then
/// calling the one-argument overload: the coefficients of the composition are
/// never rounded to working precision on the way in, so the scaling identity
///   H_{p o T} = T^{-1} o H_p o T
/// survives to near the arithmetic floor even where the composed instance is
/// ill-conditioned.  Requires frame.alpha != 0.
RationalMap halley_map(const Polynomial& p, const AffineMap& frame, Complex sigma);

}  // namespace cheby
