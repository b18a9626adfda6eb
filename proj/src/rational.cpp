#include "cheby/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "precision.hpp"

namespace cheby {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kVanishRel = 1e-14;  // relative vanishing threshold at evaluation

std::vector<Complex> reversed(const Polynomial& p) {
    std::vector<Complex> c = p.coefficients();
    std::reverse(c.begin(), c.end());
    return c;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

double spherical_distance(const SpherePoint& a, const SpherePoint& b) {
    if (a.is_infinity() && b.is_infinity()) return 0;
    if (a.is_infinity() || b.is_infinity()) {
        Complex z = a.is_infinity() ? b.value() : a.value();
        return 2.0 / std::sqrt(1.0 + std::norm(z));
    }
    return 2.0 * std::abs(a.value() - b.value()) /
           std::sqrt((1.0 + std::norm(a.value())) * (1.0 + std::norm(b.value())));
}

SpherePoint RationalMap::operator()(const SpherePoint& z) const {
    const int dn = num.degree();
    const int dd = den.degree();
    if (z.is_infinity()) {
        if (dn > dd) return SpherePoint::infinity();
        if (dn < dd) return SpherePoint{Complex{0.0}};
        return SpherePoint{num.leading() / den.leading()};
    }
    const Complex v = z.value();
    using detail::LC;
    // Evaluate the extended shadows when construction left them (and nobody
    // has edited the published polynomials out from under them since).
    const bool shadowed = !num_ext.empty() && !den_ext.empty() &&
                          num_ext.size() == num.coefficients().size() &&
                          den_ext.size() == den.coefficients().size();
    if (std::abs(v) <= 1.0) {
        long double sf, sg;
        LC lv = detail::widen(v);
        LC f = shadowed ? detail::eval_extended(num_ext, lv, &sf)
                        : detail::eval_extended(num.coefficients(), lv, &sf);
        LC g = shadowed ? detail::eval_extended(den_ext, lv, &sg)
                        : detail::eval_extended(den.coefficients(), lv, &sg);
        bool f_zero = std::abs(f) <= kVanishRel * sf;
        bool g_zero = std::abs(g) <= kVanishRel * sg;
        if (g == LC{} || (g_zero && std::abs(g) <= 16 * kEps * sg)) {
            if (f_zero) throw IndeterminateValue("num and den both vanish: map not reduced here");
            return SpherePoint::infinity();
        }
        LC q = f / g;
        Complex out{static_cast<double>(q.real()), static_cast<double>(q.imag())};
        if (!finite(out)) return SpherePoint::infinity();
        return SpherePoint{out};
    }
    // Reciprocal chart: p(z) = z^deg * rev(p)(1/z) keeps every evaluation on
    // coefficients of a polynomial in |w| < 1.
    const LC w = LC{1.0L, 0.0L} / detail::widen(v);
    long double sf, sg;
    LC f = shadowed ? detail::eval_reversed_extended(num_ext, w, &sf)
                    : detail::eval_reversed_extended(num.coefficients(), w, &sf);
    LC g = shadowed ? detail::eval_reversed_extended(den_ext, w, &sg)
                    : detail::eval_reversed_extended(den.coefficients(), w, &sg);
    bool f_zero = std::abs(f) <= kVanishRel * sf;
    bool g_zero = std::abs(g) <= kVanishRel * sg;
    if (g == LC{} || (g_zero && std::abs(g) <= 16 * kEps * sg)) {
        if (f_zero) throw IndeterminateValue("num and den both vanish: map not reduced here");
        return SpherePoint::infinity();
    }
    LC q = f / g;
    // Reattach z^(dn - dd), watching for overflow toward infinity.
    int k = dn - dd;
    const LC lv = detail::widen(v);
    for (; k > 0; --k) {
        q *= lv;
        if (!std::isfinite(static_cast<double>(q.real())) ||
            !std::isfinite(static_cast<double>(q.imag())))
            return SpherePoint::infinity();
    }
    for (; k < 0; ++k) q *= w;
    Complex out{static_cast<double>(q.real()), static_cast<double>(q.imag())};
    if (!finite(out)) return SpherePoint::infinity();
    return SpherePoint{out};
}

namespace detail {

namespace {

Complex narrow(LC z) {
    return Complex{static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Shared packaging: junk-trim, round the published views, attach the shadows
// (unless rounding trimmed further, which only near-underflow coefficients
// can cause -- then the views stand alone and evaluation uses them).
RationalMap finish_ext(std::vector<LC> numl, std::vector<LC> denl, Complex lead_ratio) {
    RationalMap r;
    r.lead_ratio = lead_ratio;
    trim_ext(numl);
    trim_ext(denl);
    r.num = round_ext(numl);
    r.den = round_ext(denl);
    r.reduced = true;
    r.degree = std::max(r.num.degree(), r.den.degree());
    if (r.num.coefficients().size() == numl.size()) r.num_ext = std::move(numl);
    if (r.den.coefficients().size() == denl.size()) r.den_ext = std::move(denl);
    return r;
}

long double scale_at(const std::vector<LC>& coeffs, Complex z) {
    long double s;
    eval_extended(coeffs, widen(z), &s);
    return s;
}

}  // namespace

RationalMap reduce_common_verified_ext(std::vector<LC> numl, std::vector<LC> denl,
                                       std::vector<RootCluster> candidates) {
    trim_ext(numl);
    trim_ext(denl);
    if (denl.empty()) throw DegenerateInput("rational map with zero denominator");
    if (numl.empty()) {
        RationalMap r;
        r.den = Polynomial::constant(narrow(denl.back()));
        r.reduced = true;
        return r;
    }
    const Complex lead_ratio = narrow(numl.back() / denl.back());
    // Smallest local numerator scale first, for the same reason as in
    // reduce_with_orders_ext.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&numl](const RootCluster& a, const RootCluster& b) {
                         return scale_at(numl, a.location) < scale_at(numl, b.location);
                     });
    for (const auto& c : candidates) {
        for (int i = 0; i < c.multiplicity && numl.size() > 1 && denl.size() > 1; ++i) {
            LC w = newton_snap_ext(numl, widen(c.location), c.multiplicity - i,
                                   1e-4L * (1.0L + std::abs(c.location)));
            long double sn, sd;
            LC nv = eval_extended(numl, w, &sn);
            LC dv = eval_extended(denl, w, &sd);
            // A factor is cancelled only when both sides vanish there at
            // rounding level.  The bar must sit close to that level: judged
            // against the companion scale, a polynomial's value at a generic
            // point inside its root cloud can dip to 1e-9 of the scale by
            // conditioning alone, while a genuine shared zero of extended
            // coefficients measures below 1e-14 of it.
            if (std::abs(nv) > 1e-12L * std::max(sn, 1e-300L) ||
                std::abs(dv) > 1e-12L * std::max(sd, 1e-300L))
                break;
            numl = deflate_ext(numl, w);
            denl = deflate_ext(denl, w);
        }
    }
    return finish_ext(std::move(numl), std::move(denl), lead_ratio);
}

RationalMap reduce_with_orders_ext(std::vector<LC> numl, std::vector<LC> denl,
                                   const std::vector<DeflationOrder>& orders) {
    trim_ext(numl);
    trim_ext(denl);
    if (denl.empty()) throw DegenerateInput("rational map with zero denominator");
    if (numl.empty()) {
        RationalMap r;
        r.den = Polynomial::constant(narrow(denl.back()));
        r.reduced = true;
        return r;
    }
    const Complex lead_ratio = narrow(numl.back() / denl.back());
    // Deflate where the numerator's local magnitude is smallest first: the
    // remainder absorbed by a deflation perturbs the polynomial by an amount
    // tied to the local scale there, which would swamp the verification at a
    // location whose own scale is orders of magnitude smaller.
    std::vector<DeflationOrder> sorted = orders;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&numl](const DeflationOrder& a, const DeflationOrder& b) {
                         return scale_at(numl, a.location) < scale_at(numl, b.location);
                     });
    for (const auto& o : sorted) {
        for (int i = 0; i < o.count; ++i) {
            // Deflate at the numerator's own nearby zero rather than at the
            // cluster center: within the clustering resolution both describe
            // the same factor, and the computed zero minimizes the remainder
            // the deflation absorbs.
            LC w = newton_snap_ext(numl, widen(o.location), o.count - i,
                                   1e-4L * (1.0L + std::abs(o.location)));
            long double s;
            LC v = eval_extended(numl, w, &s);
            if (std::abs(v) > 1e-6L * std::max(s, 1e-300L))
                throw NonConvergence(
                    "structural reduction: numerator fails to vanish where the factor census "
                    "requires");
            numl = deflate_ext(numl, w);
            denl = deflate_ext(denl, w);
        }
    }
    return finish_ext(std::move(numl), std::move(denl), lead_ratio);
}

}  // namespace detail

RationalMap reduce_common_verified(Polynomial num, Polynomial den,
                                   std::vector<RootCluster> candidates) {
    return detail::reduce_common_verified_ext(detail::lift(num), detail::lift(den),
                                              std::move(candidates));
}

RationalMap reduce_with_orders(Polynomial num, Polynomial den,
                               const std::vector<DeflationOrder>& orders) {
    return detail::reduce_with_orders_ext(detail::lift(num), detail::lift(den), orders);
}

RationalMap make_rational(Polynomial num, Polynomial den, double tol) {
    if (den.is_zero()) throw DegenerateInput("rational map with zero denominator");
    if (num.is_zero() || den.degree() == 0) {
        RationalMap r;
        r.lead_ratio = num.is_zero() ? Complex{} : num.leading() / den.leading();
        r.num = std::move(num);
        r.den = std::move(den);
        r.reduced = true;
        r.degree = std::max(std::max(r.num.degree(), r.den.degree()), 0);
        return r;
    }
    std::vector<RootCluster> common = gcd_roots(num, den, tol);
    Complex lead_ratio = num.leading() / den.leading();
    for (const auto& c : common) {
        for (int i = 0; i < c.multiplicity; ++i) {
            num = num.deflate(c.location);
            den = den.deflate(c.location);
        }
    }
    RationalMap r;
    r.lead_ratio = lead_ratio;
    r.num = std::move(num);
    r.den = std::move(den);
    r.reduced = true;
    r.degree = std::max(r.num.degree(), r.den.degree());
    return r;
}

namespace {

// Power series division n/d to `len` terms; requires d[0] != 0.
std::vector<Complex> series_div(const std::vector<Complex>& n, const std::vector<Complex>& d,
                                size_t len) {
    std::vector<Complex> s(len);
    for (size_t k = 0; k < len; ++k) {
        Complex acc = k < n.size() ? n[k] : Complex{};
        for (size_t i = 1; i <= k && i < d.size(); ++i) acc -= d[i] * s[k - i];
        s[k] = acc / d[0];
    }
    return s;
}

int first_significant(const std::vector<Complex>& s, size_t from, double tol) {
    double scale = 1.0;
    for (const auto& c : s) scale = std::max(scale, std::abs(c));
    for (size_t k = from; k < s.size(); ++k)
        if (std::abs(s[k]) > tol * scale) return static_cast<int>(k);
    return static_cast<int>(s.size()) - 1;
}

// Vanishing order of shifted coefficients judged against the cancellation
// totals that produced them.
int order_from(const std::vector<Complex>& shifted, const std::vector<double>& bound, int deg) {
    for (size_t j = 0; j < shifted.size(); ++j) {
        double floor = 500.0 * std::max(1, deg) * kEps * bound[j] + 1e-280;
        if (std::abs(shifted[j]) > floor) return static_cast<int>(j);
    }
    return static_cast<int>(shifted.size());
}

}  // namespace

int local_degree(const RationalMap& r, const SpherePoint& z0, double tol) {
    const size_t len = static_cast<size_t>(std::max(r.degree, 1)) + 2;
    if (z0.is_infinity()) {
        const int dn = r.num.degree();
        const int dd = r.den.degree();
        if (dn != dd) {
            // Value is infinity (dn > dd) or zero (dn < dd): in the w-chart the
            // relevant series is w^|dn-dd| * (bounded unit), leads nonzero.
            return std::abs(dn - dd);
        }
        std::vector<Complex> s = series_div(reversed(r.num), reversed(r.den), len);
        s[0] = Complex{0.0};  // subtract the value
        return first_significant(s, 1, tol);
    }
    auto [nsh, nb] = r.num.taylor_at(z0.value());
    auto [dsh, db] = r.den.taylor_at(z0.value());
    int ord_num = order_from(nsh, nb, r.num.degree());
    int ord_den = order_from(dsh, db, r.den.degree());
    if (ord_den > 0) {
        if (ord_num >= ord_den)
            throw IndeterminateValue("local degree at a common zero: map not reduced");
        // Pole: 1/R has a zero of exactly ord_den - ord_num there.
        return ord_den - ord_num;
    }
    std::vector<Complex> s = series_div(nsh, dsh, len);
    s[0] = Complex{0.0};
    return first_significant(s, 1, tol);
}

}  // namespace cheby
