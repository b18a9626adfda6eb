#include "cheby/fixed_points.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "precision.hpp"

namespace cheby {

const char* to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::superattracting: return "superattracting";
        case StabilityClass::attracting: return "attracting";
        case StabilityClass::repelling: return "repelling";
        case StabilityClass::rationally_indifferent: return "rationally indifferent";
        case StabilityClass::irrationally_indifferent: return "irrationally indifferent";
    }
    return "unknown";
}

double root_multiplier(int k) {
    double kk = static_cast<double>(k);
    return (kk - 1.0) * (2.0 * kk - 1.0) / (2.0 * kk * kk);
}

double infinity_multiplier(int d) {
    double dd = static_cast<double>(d);
    return 2.0 * dd * dd / (2.0 * dd * dd - 3.0 * dd + 1.0);
}

StabilityClass classify_multiplier(Complex m) {
    double mag = std::abs(m);
    if (mag < 1e-9) return StabilityClass::superattracting;
    if (mag < 1.0 - kIndifferenceBand) return StabilityClass::attracting;
    if (mag > 1.0 + kIndifferenceBand) return StabilityClass::repelling;
    // On the unit circle: rational rotation number (root of unity) up to a
    // modest order means parabolic behaviour.
    for (int order = 1; order <= 24; ++order) {
        Complex power{1.0, 0.0};
        for (int i = 0; i < order; ++i) power *= m;
        if (std::abs(power - Complex{1.0, 0.0}) < 1e-6) return StabilityClass::rationally_indifferent;
    }
    return StabilityClass::irrationally_indifferent;
}

namespace {

bool complex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// p p'' + 2 (p')^2, the polynomial whose zeros away from the roots of p are
// exactly the extraneous fixed points (the -2 level set of the convexity
// ratio).  Built straight from p: the reduced maps' coefficients carry
// construction noise that ill-conditioned root constellations amplify past
// 1e-8, so both censuses polish their locations against this one equation,
// which pins the shared zeros to near machine accuracy.
Polynomial direct_level_equation(const Polynomial& p) {
    auto pl = detail::lift(p);
    auto dpl = detail::lift(p.derivative());
    std::vector<detail::LC> e = detail::conv(pl, detail::lift(p.derivative(2)));
    detail::add_scaled(e, {2.0L}, detail::conv(dpl, dpl));
    return detail::lower(e);
}

Complex polish_extraneous(const Polynomial& level, Complex z, int multiplicity) {
    return detail::newton_snap(level, z, multiplicity, 1e-4 * (1.0 + std::abs(z)));
}

}  // namespace

std::vector<FixedPointRecord> find_fixed_points(const Polynomial& p, double tol) {
    RationalMap map = chebyshev_map(p);
    RationalMap deriv = chebyshev_derivative(p);

    // Finite fixed points are the roots of F(z) - z G(z).
    Polynomial equation = map.num - map.den.times_power(1);
    std::vector<FixedPointRecord> records;

    // Refined locations: a raw multiplicity-k cluster mean sits ~eps^(2/k)
    // off the true root, which for k >= 3 is outside the match radius below.
    std::vector<RootCluster> root_clusters = refined_roots(p, tol);
    std::vector<Complex> extraneous = extraneous_from_convexity(p, tol);
    Polynomial level = direct_level_equation(p);

    for (const auto& c : refined_roots(equation, tol)) {
        FixedPointRecord rec;
        rec.location = c.location;
        rec.multiplicity = c.multiplicity;

        // Match against the roots of p; anything else is extraneous.
        for (const auto& rc : root_clusters) {
            double radius = 1e-6 * std::max(1.0, std::abs(rc.location));
            if (std::abs(rc.location - c.location) <= radius) {
                rec.root_multiplicity = rc.multiplicity;
                break;
            }
        }
        rec.extraneous = !rec.root_multiplicity.has_value();
        // An extraneous fixed point of multiplicity m is an m-fold zero of
        // the level equation; polishing against it sheds the fixed-point
        // equation's own coefficient noise.
        if (rec.extraneous)
            rec.location = polish_extraneous(level, c.location, c.multiplicity);
        rec.multiplier = deriv(rec.location.value()).value();
        rec.cls = classify_multiplier(rec.multiplier);

        if (rec.root_multiplicity) {
            double expect = root_multiplier(*rec.root_multiplicity);
            if (std::abs(rec.multiplier - Complex{expect, 0.0}) > 1e-6 * std::max(1.0, expect))
                rec.note = "multiplier deviates from the root-multiplicity formula";
        } else {
            bool matched = false;
            for (const auto& x : extraneous)
                if (std::abs(x - rec.location.value()) <= 1e-6 * std::max(1.0, std::abs(x)))
                    matched = true;
            if (!matched) rec.note = "not found among the solutions of L = -2";
        }
        if (rec.multiplicity > 1 &&
            std::abs(rec.multiplier - Complex{1.0, 0.0}) > 1e-6)
            rec.note = "multiple fixed point whose multiplier is not 1";

        records.push_back(std::move(rec));
    }

    std::sort(records.begin(), records.end(),
              [](const FixedPointRecord& a, const FixedPointRecord& b) {
                  return complex_less(a.location.value(), b.location.value());
              });

    // The point at infinity is always a simple repelling fixed point.
    FixedPointRecord inf;
    inf.location = SpherePoint::infinity();
    inf.multiplier = Complex{1.0, 0.0} / map.lead_ratio;
    inf.cls = classify_multiplier(inf.multiplier);
    inf.extraneous = true;
    inf.multiplicity = 1;
    inf.note = "fixed point at infinity";
    records.push_back(std::move(inf));

    // Sanity: total multiplicity of finite fixed points should equal deg C_p.
    int total = 0;
    for (const auto& r : records)
        if (!r.location.is_infinity()) total += r.multiplicity;
    if (total != map.degree && !records.empty()) {
        std::ostringstream os;
        os << "finite fixed-point multiplicities sum to " << total << ", map degree is " << map.degree;
        records.front().note = records.front().note.empty()
                                   ? os.str()
                                   : records.front().note + "; " + os.str();
    }
    return records;
}

std::vector<Complex> extraneous_from_convexity(const Polynomial& p, double tol) {
    RationalMap ratio = convexity_ratio(p);
    // Solve L(z) = -2  <=>  num + 2 den = 0.
    Polynomial equation = ratio.num + Complex{2.0, 0.0} * ratio.den;
    std::vector<Complex> out;
    if (equation.degree() < 1) return out;
    Polynomial level = direct_level_equation(p);
    for (const auto& c : refined_roots(equation, tol)) {
        // Discard spurious solutions where the ratio's denominator also
        // vanishes (common factors already removed, but stay defensive).
        double dv = std::abs(ratio.den(c.location));
        double scale = std::max(1.0, ratio.den.max_coefficient_magnitude()) *
                       std::pow(std::max(1.0, std::abs(c.location)), ratio.den.degree());
        if (dv <= 1e-12 * scale) continue;
        Complex z = polish_extraneous(level, c.location, c.multiplicity);
        for (int i = 0; i < c.multiplicity; ++i) out.push_back(z);
    }
    std::sort(out.begin(), out.end(), complex_less);
    return out;
}

}  // namespace cheby
