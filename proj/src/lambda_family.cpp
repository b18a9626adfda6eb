#include "cheby/lambda_family.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace cheby {

Complex psi(Complex lambda) {
    if (lambda == Complex{5.0, 0.0} || lambda == Complex{6.0, 0.0})
        throw ForbiddenLambda("lambda = 5 and lambda = 6 do not define a family member");
    Complex numer = 3.0 * lambda * lambda - 39.0 * lambda + Complex{124.0, 0.0};
    return numer / std::pow(Complex{5.0, 0.0} - lambda, 1.5);
}

Polynomial lambda_polynomial(Complex lambda) {
    return Polynomial{{psi(lambda), Complex{3.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}}};
}

RationalMap lambda_map_closed_form(Complex lambda) {
    Complex ps = psi(lambda);
    Polynomial num{{-3.0 * ps, -ps * ps, -12.0 * ps, Complex{-3.0, 0.0}, -5.0 * ps,
                    Complex{6.0, 0.0}, Complex{0.0, 0.0}, Complex{5.0, 0.0}}};
    Polynomial den{{Complex{9.0, 0.0}, Complex{0.0, 0.0}, Complex{27.0, 0.0}, Complex{0.0, 0.0},
                    Complex{27.0, 0.0}, Complex{0.0, 0.0}, Complex{9.0, 0.0}}};
    RationalMap map;
    map.num = std::move(num);
    map.den = std::move(den);
    map.reduced = true;
    map.degree = 7;
    map.lead_ratio = Complex{5.0 / 9.0, 0.0};
    return map;
}

namespace {

// Cofactor of (z + 1/s) in the extraneous quartic, s = sqrt(5 - lambda):
//   4z^3 - (4/s) z^2 + ((49 - 9 lambda)/(5 - lambda)) z + 3s.
Polynomial extraneous_cofactor(Complex lambda) {
    Complex five_minus = Complex{5.0, 0.0} - lambda;
    Complex s = std::sqrt(five_minus);
    return Polynomial{{3.0 * s, (Complex{49.0, 0.0} - 9.0 * lambda) / five_minus,
                       -4.0 / s, Complex{4.0, 0.0}}};
}

Polynomial extraneous_quartic_poly(Complex lambda) {
    return Polynomial{{Complex{3.0, 0.0}, psi(lambda), Complex{9.0, 0.0}, Complex{0.0, 0.0},
                       Complex{4.0, 0.0}}};
}

double bisect(const std::function<double(double)>& f, double a, double b) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) throw NonConvergence("bisection bracket does not straddle zero");
    for (int i = 0; i < 200 && b - a > 1e-16 * std::max(1.0, std::abs(a) + std::abs(b)); ++i) {
        double mid = 0.5 * (a + b);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

std::string describe(std::initializer_list<std::pair<const char*, double>> vals) {
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    for (const auto& [name, v] : vals) {
        if (!first) os << ", ";
        os << name << "=" << v;
        first = false;
    }
    return os.str();
}

}  // namespace

std::vector<Complex> extraneous_quartic(Complex lambda) {
    Complex s = std::sqrt(Complex{5.0, 0.0} - lambda);
    Complex distinguished = -1.0 / s;
    Polynomial quartic = extraneous_quartic_poly(lambda);
    double residual = std::abs(quartic(distinguished));
    double scale = quartic.max_coefficient_magnitude() *
                   std::pow(std::max(1.0, std::abs(distinguished)), 4);
    if (residual > 1e-9 * scale)
        throw NonConvergence("-1/sqrt(5-lambda) fails to satisfy the extraneous quartic");

    std::vector<Complex> out{distinguished};
    for (const auto& c : refined_roots(extraneous_cofactor(lambda))) {
        for (int i = 0; i < c.multiplicity; ++i) out.push_back(c.location);
    }
    std::sort(out.begin() + 1, out.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

double real_root_of_lambda_poly(double lambda) {
    Polynomial p = lambda_polynomial(Complex{lambda, 0.0});
    auto f = [&](double x) { return p(Complex{x, 0.0}).real(); };
    return bisect(f, -2.0, -1.0);
}

double real_extraneous_root(double lambda) {
    Polynomial cubic = extraneous_cofactor(Complex{lambda, 0.0});
    double s = std::sqrt(5.0 - lambda);
    auto f = [&](double x) { return cubic(Complex{x, 0.0}).real(); };
    double a = -2.0 / s;
    double b = -1.0 / s;
    double fb = f(b);
    double scale = std::max(1.0, cubic.max_coefficient_magnitude());
    if (std::abs(fb) <= 1e-12 * scale) return b;  // boundary case lambda = 1
    return bisect(f, a, b);
}

std::vector<BoundCheck> lemma_bound_audit(double lambda) {
    std::vector<BoundCheck> checks;
    double s = std::sqrt(5.0 - lambda);
    Polynomial p = lambda_polynomial(Complex{lambda, 0.0});
    double psi_v = psi(Complex{lambda, 0.0}).real();
    RationalMap closed = lambda_map_closed_form(Complex{lambda, 0.0});
    Polynomial cubic = extraneous_cofactor(Complex{lambda, 0.0});

    double r = real_root_of_lambda_poly(lambda);
    double alpha = real_extraneous_root(lambda);

    {
        BoundCheck c;
        c.name = "real_root_bracket";
        double at_m1 = psi_v - 4.0;
        double at_m2 = psi_v - 14.0;
        c.pass = at_m1 > 0.0 && at_m2 < 0.0 && r > -2.0 && r < -1.0;
        c.measured = r;
        c.detail = describe({{"p(-1)", at_m1}, {"p(-2)", at_m2}, {"r", r}});
        checks.push_back(std::move(c));
    }
    {
        BoundCheck c;
        c.name = "alpha_bracket";
        c.pass = alpha > -2.0 / s && alpha <= -1.0 / s + 1e-12;
        c.measured = alpha;
        c.detail = describe({{"-2/s", -2.0 / s}, {"alpha", alpha}, {"-1/s", -1.0 / s}});
        checks.push_back(std::move(c));
    }
    double inv_sqrt5 = 1.0 / std::sqrt(5.0);
    {
        BoundCheck c;
        c.name = "critical_value_bound";
        double cv = closed(Complex{inv_sqrt5, 0.0}).value().real();
        double formula =
            -std::sqrt(5.0) * (25.0 * psi_v * psi_v + 140.0 * std::sqrt(5.0) * psi_v + 8.0) / 1944.0;
        c.pass = cv < -7.449 && -7.449 < r && std::abs(cv - formula) <= 1e-9 * std::abs(formula);
        c.measured = cv;
        c.detail = describe({{"C(1/sqrt5)", cv}, {"closed_form", formula}, {"r", r}});
        checks.push_back(std::move(c));
    }
    {
        BoundCheck c;
        c.name = "horizontal_preimage";
        auto g = [&](double x) { return closed(Complex{x, 0.0}).value().real() - r; };
        double a = -inv_sqrt5 + 1e-12;
        double b = -1e-12;
        bool straddles = (g(a) > 0.0) != (g(b) > 0.0);
        double x0 = 0.0;
        if (straddles) {
            x0 = bisect(g, a, b);
            c.pass = std::abs(g(x0)) <= 1e-8 * std::max(1.0, std::abs(r));
        }
        c.measured = x0;
        c.detail = describe({{"x0", x0}, {"C(x0)-r", straddles ? g(x0) : g(a)}});
        checks.push_back(std::move(c));
    }
    {
        BoundCheck c;
        c.name = "ordering_chain";
        c.pass = r < -3.0 / s && -3.0 / s < -2.0 / s && -2.0 / s < alpha + 1e-15;
        double margin = std::min({-3.0 / s - r, -2.0 / s - (-3.0 / s), alpha - (-2.0 / s)});
        c.measured = margin;
        c.detail = describe({{"r", r}, {"-3/s", -3.0 / s}, {"-2/s", -2.0 / s}, {"alpha", alpha}});
        checks.push_back(std::move(c));
    }
    {
        BoundCheck c;
        c.name = "nonreal_extraneous";
        Complex zeta{};
        bool found = false;
        for (const auto& cl : refined_roots(cubic)) {
            if (cl.location.imag() > 1e-8) {
                zeta = cl.location;
                found = true;
            }
        }
        if (found) {
            double mod2 = std::norm(zeta);
            double vieta = -3.0 * s / (4.0 * alpha);
            RationalMap deriv = chebyshev_derivative(p);
            double mult_mod = std::abs(deriv(zeta).value());
            c.pass = mod2 > 1.5 && mod2 < 4.5 && std::abs(mod2 - vieta) <= 1e-9 * vieta &&
                     mult_mod > 13.0 / 3.0;
            c.measured = mult_mod;
            c.detail = describe({{"|zeta|^2", mod2}, {"-3s/(4 alpha)", vieta},
                                 {"multiplier_modulus", mult_mod}});
        } else {
            c.detail = "no non-real cofactor root found";
        }
        checks.push_back(std::move(c));
    }
    return checks;
}

double twin_upper_limit() {
    static const double delta = [] {
        double target = psi(Complex{-1.0, 0.0}).real();
        auto g = [&](double x) { return psi(Complex{x, 0.0}).real() - target; };
        return bisect(g, 1.0, 4.9);
    }();
    return delta;
}

double twin_multiplier(double lambda) {
    if (lambda == 1.0) return 1.0;
    double target = psi(Complex{lambda, 0.0}).real();
    if (lambda < 1.0) {
        // psi increases on (1, 5); the twin lives in (1, delta].
        auto g = [&](double x) { return psi(Complex{x, 0.0}).real() - target; };
        return bisect(g, 1.0, twin_upper_limit() + 1e-9);
    }
    // psi decreases on (-inf, 1); mirror search for lambda > 1.
    auto g = [&](double x) { return psi(Complex{x, 0.0}).real() - target; };
    double lo = -1.0 - 1e-9;
    while (g(lo) < 0.0) lo -= 1.0;  // widen until psi(lo) >= target
    double hi = 1.0;
    double a = lo, b = hi;  // g decreasing: g(a) >= 0 >= g(b)
    for (int i = 0; i < 200 && b - a > 1e-16 * std::max(1.0, std::abs(a) + std::abs(b)); ++i) {
        double mid = 0.5 * (a + b);
        if (g(mid) > 0.0)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

LambdaFamilyRecord lambda_record(Complex lambda) {
    LambdaFamilyRecord rec;
    rec.lambda = lambda;
    rec.psi_value = psi(lambda);
    rec.p_lambda = lambda_polynomial(lambda);
    rec.c_lambda = chebyshev_map(rec.p_lambda);

    std::vector<Complex> ext = extraneous_quartic(lambda);
    rec.distinguished_extraneous = ext.front();
    rec.other_extraneous.assign(ext.begin() + 1, ext.end());

    RationalMap deriv = chebyshev_derivative(rec.p_lambda);
    rec.distinguished_multiplier = deriv(rec.distinguished_extraneous).value();

    RationalMap closed = lambda_map_closed_form(lambda);
    rec.closed_form_agrees = true;
    for (int i = 0; i < 24; ++i) {
        double t = 2.0 * 3.14159265358979323846 * i / 24.0;
        Complex z = Complex{0.1, 0.0} + 1.7 * Complex{std::cos(t), std::sin(t)};
        if (spherical_distance(rec.c_lambda(z), closed(z)) > 1e-9) rec.closed_form_agrees = false;
    }

    rec.fixed_points = find_fixed_points(rec.p_lambda);
    if (lambda.imag() == 0.0 && lambda.real() >= -1.0 && lambda.real() <= 1.0)
        rec.bound_checks = lemma_bound_audit(lambda.real());
    return rec;
}

}  // namespace cheby
