#include "cheby/poly.hpp"

#include <algorithm>
#include <cmath>

#include "precision.hpp"

namespace cheby {

AffineMap AffineMap::inverse() const {
    if (alpha == Complex{0.0}) throw DegenerateInput("affine map with alpha = 0 is not invertible");
    return {1.0 / alpha, -beta / alpha};
}

AffineMap AffineMap::compose(const AffineMap& other) const {
    return {alpha * other.alpha, alpha * other.beta + beta};
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == Complex{0.0}) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Complex c) { return Polynomial{{c}}; }

Polynomial Polynomial::from_roots(const std::vector<std::pair<Complex, int>>& roots,
                                  Complex lead) {
    Polynomial p = constant(lead);
    for (const auto& [root, mult] : roots) {
        Polynomial factor{{-root, 1.0}};
        for (int i = 0; i < mult; ++i) p = p * factor;
    }
    return p;
}

Complex Polynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<size_t>(k)];
}

Complex Polynomial::leading() const {
    if (is_zero()) throw DegenerateInput("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc{};
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
}

Complex Polynomial::eval_with_scale(Complex z, double& scale) const {
    Complex acc{};
    double mag = 0;
    const double az = std::abs(z);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * z + coeffs_[i];
        mag = mag * az + std::abs(coeffs_[i]);
    }
    scale = mag;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Polynomial{std::move(d)};
}

Polynomial Polynomial::derivative(int order) const {
    Polynomial p = *this;
    for (int i = 0; i < order; ++i) p = p.derivative();
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Complex> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        Complex a = i < coeffs_.size() ? coeffs_[i] : Complex{};
        Complex b = i < rhs.coeffs_.size() ? rhs.coeffs_[i] : Complex{};
        out[i] = a + b;
    }
    return Polynomial{std::move(out)};
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + rhs * Complex{-1.0};
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Complex> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial{std::move(out)};
}

Polynomial Polynomial::operator*(Complex scale) const {
    std::vector<Complex> out = coeffs_;
    for (auto& c : out) c *= scale;
    return Polynomial{std::move(out)};
}

Polynomial operator*(Complex scale, const Polynomial& p) { return p * scale; }

Polynomial Polynomial::compose_affine(const AffineMap& t) const {
    // Carried in extended precision so the substitution injects no noise
    // above the representation floor of the rounded result.
    std::vector<detail::LC> lifted;
    lifted.reserve(coeffs_.size());
    for (const auto& c : coeffs_) lifted.push_back(detail::widen(c));
    return detail::round_ext(
        detail::compose_affine_ext(lifted, detail::widen(t.alpha), detail::widen(t.beta)));
}

Polynomial Polynomial::deflate(Complex root) const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Complex> q(coeffs_.size() - 1);
    Complex carry = coeffs_.back();
    for (size_t i = coeffs_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = coeffs_[i] + root * carry;
    }
    return Polynomial{std::move(q)};
}

Polynomial Polynomial::times_power(int k) const {
    if (is_zero()) return {};
    std::vector<Complex> out(coeffs_.size() + static_cast<size_t>(k));
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
    return Polynomial{std::move(out)};
}

std::pair<std::vector<Complex>, std::vector<double>> Polynomial::taylor_at(Complex c) const {
    // Repeated synthetic division; a[j] ends as the t^j coefficient of p(c+t).
    // The companion runs the same recurrence in absolute values, producing a
    // bound on the magnitudes that flowed into each output coefficient.
    std::vector<Complex> a = coeffs_;
    std::vector<double> bound(a.size());
    for (auto& b : bound) b = 0;
    for (size_t i = 0; i < a.size(); ++i) bound[i] = std::abs(a[i]);
    const double ac = std::abs(c);
    const size_t n = a.size();
    if (n == 0) return {a, bound};
    for (size_t j = 0; j + 1 < n; ++j) {
        for (size_t i = n - 1; i-- > j;) {
            a[i] += c * a[i + 1];
            bound[i] += ac * bound[i + 1];
        }
    }
    return {a, bound};
}

double Polynomial::max_coefficient_magnitude() const {
    double m = 0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

std::pair<Polynomial, AffineMap> normalize_monic_centered(const Polynomial& p) {
    const int d = p.degree();
    if (d < 1) throw DegenerateInput("normalization needs degree >= 1");
    const Complex lead = p.leading();
    // Principal d-th root of 1/lead: argument lands in (-pi/d, pi/d].
    const Complex alpha = std::exp(std::log(1.0 / lead) / static_cast<double>(d));
    const Complex beta = -p.coefficient(d - 1) / (static_cast<double>(d) * lead);
    AffineMap t{alpha, beta};
    Polynomial q = p.compose_affine(t);
    q = q * (1.0 / q.leading());  // kill residual rounding in the lead
    return {q, t};
}

}  // namespace cheby
