#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "cheby/errors.hpp"

namespace cheby {

using Complex = std::complex<double>;

/// Invertible affine change of variable z -> alpha*z + beta.
struct AffineMap {
    Complex alpha{1.0};
    Complex beta{0.0};

    Complex operator()(Complex z) const { return alpha * z + beta; }
    AffineMap inverse() const;
    /// this ∘ other, i.e. z -> this(other(z)).
    AffineMap compose(const AffineMap& other) const;
};

/// Dense univariate polynomial over the complex numbers, coefficients stored
/// ascending (coeff[k] multiplies z^k).  Exact trailing zeros are trimmed on
/// construction so leading() is nonzero for any nonzero polynomial.
class Polynomial {
  public:
    Polynomial() = default;  // the zero polynomial
    explicit Polynomial(std::vector<Complex> coeffs);

    static Polynomial constant(Complex c);
    /// Product of (z - root)^multiplicity over the given pairs, times lead.
    static Polynomial from_roots(const std::vector<std::pair<Complex, int>>& roots,
                                 Complex lead = Complex{1.0});

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coefficients() const { return coeffs_; }
    Complex coefficient(int k) const;
    Complex leading() const;

    /// Horner evaluation.
    Complex operator()(Complex z) const;
    /// Evaluation that also accumulates sum_k |a_k| |z|^k, the natural scale
    /// against which |p(z)| should be judged "zero".
    Complex eval_with_scale(Complex z, double& scale) const;

    Polynomial derivative() const;
    Polynomial derivative(int order) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(Complex scale) const;

    /// p(alpha*z + beta) expanded in z.
    Polynomial compose_affine(const AffineMap& t) const;
    /// Quotient after synthetic division by (z - root); the remainder is dropped.
    Polynomial deflate(Complex root) const;
    /// Multiply by z^k (shift coefficients up).
    Polynomial times_power(int k) const;

    /// Coefficients of p(c + t) as a polynomial in t, plus per-coefficient
    /// magnitude totals of the shift computation (the companion run in
    /// absolute values).  The totals bound how much cancellation each output
    /// coefficient went through, so `rounding ~ degree * eps * total`.
    std::pair<std::vector<Complex>, std::vector<double>> taylor_at(Complex c) const;

    double max_coefficient_magnitude() const;

  private:
    std::vector<Complex> coeffs_;
};

Polynomial operator*(Complex scale, const Polynomial& p);

/// Monic + centered normal form: returns (q, T) with T(z) = alpha*z + beta,
/// q = (p ∘ T) / lead(p ∘ T), q monic with vanishing z^{d-1} coefficient.
/// alpha is the principal d-th root of 1/leading(p) (argument in (-pi/d, pi/d]).
std::pair<Polynomial, AffineMap> normalize_monic_centered(const Polynomial& p);

}  // namespace cheby
