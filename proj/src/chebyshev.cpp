#include "cheby/chebyshev.hpp"

#include <cmath>

#include "precision.hpp"

namespace cheby {

namespace {

void require_proper(const Polynomial& p, const char* who) {
    if (p.degree() < 2)
        throw DegenerateInput(std::string(who) + ": need degree >= 2");
    int nonzero = 0;
    for (const auto& c : p.coefficients())
        if (c != Complex{0.0}) ++nonzero;
    if (nonzero <= 1)
        throw DegenerateInput(std::string(who) + ": monomials collapse to a linear map");
}

// Same decision rule (and gray zone) as the census classifier, so the census
// and the reduction can never disagree silently about a critical point.
bool cluster_is_root(const Polynomial& p, Complex c, double tol = kDefaultClusterTol) {
    double pv = std::abs(p(c));
    double th = tol * std::pow(std::max(1.0, std::abs(c)), p.degree()) *
                std::max(p.max_coefficient_magnitude(), 1e-300);
    if (pv > 0.1 * th && pv < 10.0 * th)
        throw AmbiguousClassification("cannot decide whether a critical point is a root of p");
    return pv <= th;
}

// Common-factor census at the critical points of p for numerators built from
// p and its derivatives over a power of p'.  At a root of p where p' vanishes
// to order mu the factor count is root_scale * mu (complete cancellation of
// the denominator's factor there); at a free critical point it is
// free_scale * (mu - 1), the exact vanishing order inherited from p''.
std::vector<DeflationOrder> critical_cancellations(const Polynomial& p,
                                                   const std::vector<RootCluster>& crit,
                                                   int root_scale, int free_scale) {
    std::vector<DeflationOrder> orders;
    for (const auto& c : crit) {
        int count = cluster_is_root(p, c.location) ? root_scale * c.multiplicity
                                                   : free_scale * (c.multiplicity - 1);
        if (count > 0) orders.push_back({c.location, count});
    }
    return orders;
}

}  // namespace

RationalMap convexity_ratio(const Polynomial& p) {
    require_proper(p, "convexity ratio");
    Polynomial dp = p.derivative();
    auto pl = detail::lift(p);
    auto dpl = detail::lift(dp);
    auto ddpl = detail::lift(p.derivative(2));
    return detail::reduce_with_orders_ext(detail::conv(pl, ddpl), detail::conv(dpl, dpl),
                                          critical_cancellations(p, refined_roots(dp), 2, 1));
}

RationalMap chebyshev_map(const Polynomial& p) {
    require_proper(p, "Chebyshev map");
    Polynomial dp = p.derivative();
    auto pl = detail::lift(p);
    auto dpl = detail::lift(dp);
    auto ddpl = detail::lift(p.derivative(2));
    auto dp2 = detail::conv(dpl, dpl);
    auto dp3 = detail::conv(dp2, dpl);
    // num = 2 z (p')^3 - 2 p (p')^2 - p^2 p''
    std::vector<detail::LC> numl;
    detail::add_scaled(numl, {2.0L}, dp3, 1);
    detail::add_scaled(numl, {-2.0L}, detail::conv(pl, dp2));
    detail::add_scaled(numl, {-1.0L}, detail::conv(detail::conv(pl, pl), ddpl));
    std::vector<detail::LC> denl;
    detail::add_scaled(denl, {2.0L}, dp3);
    return detail::reduce_with_orders_ext(std::move(numl), std::move(denl),
                                          critical_cancellations(p, refined_roots(dp), 3, 1));
}

RationalMap chebyshev_derivative(const Polynomial& p) {
    require_proper(p, "Chebyshev map derivative");
    Polynomial dp = p.derivative();
    auto pl = detail::lift(p);
    auto dpl = detail::lift(dp);
    auto ddpl = detail::lift(p.derivative(2));
    auto dddpl = detail::lift(p.derivative(3));
    // num = p^2 (3 p''^2 - p' p'''),  den = 2 (p')^4
    std::vector<detail::LC> bracket;
    detail::add_scaled(bracket, {3.0L}, detail::conv(ddpl, ddpl));
    detail::add_scaled(bracket, {-1.0L}, detail::conv(dpl, dddpl));
    auto dp2 = detail::conv(dpl, dpl);
    std::vector<detail::LC> denl;
    detail::add_scaled(denl, {2.0L}, detail::conv(dp2, dp2));
    return detail::reduce_with_orders_ext(detail::conv(detail::conv(pl, pl), bracket),
                                          std::move(denl),
                                          critical_cancellations(p, refined_roots(dp), 4, 2));
}

namespace {

// Shared construction from extended coefficients of the target polynomial,
// so a caller composing p with a frame first loses nothing to intermediate
// rounding.  `view` is the rounded polynomial the census helpers inspect.
RationalMap halley_from_ext(const std::vector<detail::LC>& pl, const Polynomial& view,
                            Complex sigma) {
    auto dpl = detail::derivative_ext(pl);
    auto ddpl = detail::derivative_ext(dpl);
    // q = (p')^2 - sigma p p''
    std::vector<detail::LC> ql = detail::conv(dpl, dpl);
    detail::add_scaled(ql, -detail::widen(sigma), detail::conv(pl, ddpl));
    Polynomial q = detail::lower(ql);
    if (q.is_zero()) throw DegenerateInput("Halley-family map: degenerate sigma");
    // den = 2 p' q,  num = z den - 2 p q - p^2 p''
    std::vector<detail::LC> denl;
    detail::add_scaled(denl, {2.0L}, detail::conv(dpl, ql));
    std::vector<detail::LC> numl;
    detail::add_scaled(numl, {1.0L}, denl, 1);
    detail::add_scaled(numl, {-2.0L}, detail::conv(pl, ql));
    detail::add_scaled(numl, {-1.0L}, detail::conv(detail::conv(pl, pl), ddpl));
    // The cancellation pattern depends on sigma (e.g. one full factor of p'
    // joins the numerator exactly when sigma = 1/2), so reduction proceeds by
    // verified deflation at the denominator's clusters rather than by census.
    std::vector<RootCluster> clusters = refined_roots(view.derivative());
    if (q.degree() >= 1) {
        std::vector<RootCluster> qc = refined_roots(q);
        clusters.insert(clusters.end(), qc.begin(), qc.end());
    }
    return detail::reduce_common_verified_ext(std::move(numl), std::move(denl),
                                              std::move(clusters));
}

}  // namespace

RationalMap halley_map(const Polynomial& p, Complex sigma) {
    require_proper(p, "Halley-family map");
    return halley_from_ext(detail::lift(p), p, sigma);
}

RationalMap halley_map(const Polynomial& p, const AffineMap& frame, Complex sigma) {
    if (frame.alpha == Complex{0.0})
        throw DegenerateInput("Halley-family map: frame with alpha = 0 is not a coordinate change");
    auto gl = detail::compose_affine_ext(detail::lift(p), detail::widen(frame.alpha),
                                         detail::widen(frame.beta));
    Polynomial g = detail::round_ext(gl);
    require_proper(g, "Halley-family map");
    return halley_from_ext(gl, g, sigma);
}

}  // namespace cheby
