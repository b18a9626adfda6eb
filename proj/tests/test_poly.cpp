#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cheby/poly.hpp"
#include "cheby/roots.hpp"
#include "oracles.hpp"

using cheby::AffineMap;
using cheby::Complex;
using cheby::Polynomial;

namespace {

Polynomial cubic_plus(double a, double b) {
    return Polynomial{{Complex{b}, Complex{a}, Complex{0.0}, Complex{1.0}}};
}

bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("construction trims and evaluates") {
    Polynomial p{{Complex{11.0}, Complex{3.0}, Complex{0.0}, Complex{1.0}}};
    CHECK(p.degree() == 3);
    CHECK(close(p(Complex{0.0}), Complex{11.0}));

    Polynomial cube{{Complex{-1.0}, Complex{0.0}, Complex{0.0}, Complex{1.0}}};
    CHECK(close(cube(Complex{1.0}) , Complex{0.0}));

    Polynomial dbl = Polynomial::from_roots({{Complex{1.0}, 2}, {Complex{-2.0}, 1}});
    CHECK(dbl.degree() == 3);
    CHECK(close(dbl(Complex{-2.0}), Complex{0.0}));
    CHECK(close(dbl(Complex{1.0}), Complex{0.0}));

    Polynomial trimmed{{Complex{2.0}, Complex{1.0}, Complex{0.0}, Complex{0.0}}};
    CHECK(trimmed.degree() == 1);
    CHECK(trimmed.leading() == Complex{1.0});
}

TEST_CASE("zero polynomial is flagged and rejected where degree >= 1 is needed") {
    Polynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK_THROWS_AS(zero.leading(), cheby::DegenerateInput);
    CHECK_THROWS_AS(cheby::roots(zero), cheby::DegenerateInput);
    CHECK_THROWS_AS(cheby::normalize_monic_centered(Polynomial::constant(Complex{4.0})),
                    cheby::DegenerateInput);
}

TEST_CASE("derivatives") {
    double a = -2.3, b = 0.7;
    Polynomial p = cubic_plus(a, b);
    Polynomial dp = p.derivative();
    CHECK(dp.degree() == 2);
    CHECK(close(dp.coefficient(0), Complex{a}));
    CHECK(close(dp.coefficient(2), Complex{3.0}));
    CHECK(close(dp.coefficient(1), Complex{0.0}));

    CHECK(Polynomial::constant(Complex{5.0}).derivative().is_zero());

    Polynomial ddp = cubic_plus(3.0, 11.0).derivative(2);
    CHECK(ddp.degree() == 1);
    CHECK(close(ddp.coefficient(1), Complex{6.0}));
    CHECK(close(ddp.coefficient(0), Complex{0.0}));
}

TEST_CASE("arithmetic agrees with evaluation") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> ac, bc;
        for (int i = 0; i <= 4; ++i) ac.push_back(rng.point(2.0));
        for (int i = 0; i <= 3; ++i) bc.push_back(rng.point(2.0));
        Polynomial A{ac}, B{bc};
        for (int s = 0; s < 5; ++s) {
            Complex z = rng.point(1.5);
            CHECK(close((A + B)(z), A(z) + B(z), 1e-10));
            CHECK(close((A - B)(z), A(z) - B(z), 1e-10));
            CHECK(close((A * B)(z), A(z) * B(z), 1e-9));
            CHECK(close((A * Complex{0.0, 2.0})(z), Complex{0.0, 2.0} * A(z), 1e-10));
        }
        // product rule, checked pointwise
        Polynomial lhs = (A * B).derivative();
        Polynomial rhs = A.derivative() * B + A * B.derivative();
        for (int s = 0; s < 3; ++s) {
            Complex z = rng.point(1.5);
            CHECK(close(lhs(z), rhs(z), 1e-8));
        }
    }
}

TEST_CASE("affine composition and inversion") {
    oracle::Rng rng(12);
    for (int trial = 0; trial < 15; ++trial) {
        AffineMap t{rng.point(1.0) + Complex{1.5, 0.0}, rng.point(2.0)};
        AffineMap inv = t.inverse();
        Complex z = rng.point(3.0);
        CHECK(close(inv(t(z)), z, 1e-12));
        CHECK(close(t.compose(inv)(z), z, 1e-12));

        std::vector<Complex> pc;
        for (int i = 0; i <= 5; ++i) pc.push_back(rng.point(1.5));
        Polynomial p{pc};
        Polynomial q = p.compose_affine(t);
        for (int s = 0; s < 4; ++s) {
            Complex w = rng.point(2.0);
            CHECK(close(q(w), p(t(w)), 1e-8));
        }
    }
}

TEST_CASE("taylor shift matches direct evaluation") {
    oracle::Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Complex> pc;
        for (int i = 0; i <= 6; ++i) pc.push_back(rng.point(2.0));
        Polynomial p{pc};
        Complex c = rng.point(1.5);
        auto [shifted, totals] = p.taylor_at(c);
        REQUIRE(shifted.size() == pc.size());
        REQUIRE(totals.size() == pc.size());
        Polynomial ps{shifted};
        for (int s = 0; s < 4; ++s) {
            Complex t = rng.point(0.5);
            CHECK(close(ps(t), p(c + t), 1e-9));
        }
        // the absolute-value companion run bounds every output coefficient
        for (size_t i = 0; i < shifted.size(); ++i)
            CHECK(std::abs(shifted[i]) <= totals[i] + 1e-12);
    }
}

TEST_CASE("deflation and times_power") {
    Polynomial p = Polynomial::from_roots({{Complex{2.0}, 1}, {Complex{-1.0, 1.0}, 1}});
    Polynomial q = p.deflate(Complex{2.0});
    CHECK(q.degree() == 1);
    CHECK(close(q(Complex{-1.0, 1.0}), Complex{0.0}, 1e-12));
    Polynomial zp = q.times_power(2);
    CHECK(zp.degree() == 3);
    CHECK(close(zp.coefficient(0), Complex{0.0}));
    CHECK(close(zp.coefficient(1), Complex{0.0}));
    CHECK(close(zp(Complex{0.7, 0.2}), q(Complex{0.7, 0.2}) * Complex{0.7, 0.2} * Complex{0.7, 0.2},
                1e-12));
}

TEST_CASE("eval_with_scale accumulates the absolute-value run") {
    Polynomial p{{Complex{1.0}, Complex{-2.0}, Complex{3.0}}};
    double scale = 0.0;
    Complex v = p.eval_with_scale(Complex{-1.0}, scale);
    CHECK(close(v, Complex{6.0}));
    CHECK(scale == doctest::Approx(6.0));  // 1 + 2 + 3 at |z| = 1
    CHECK(p.max_coefficient_magnitude() == doctest::Approx(3.0));
}

TEST_CASE("monic centered normal form") {
    SUBCASE("already monic and centered: identity") {
        Polynomial p = cubic_plus(3.0, 11.0);
        auto [q, t] = cheby::normalize_monic_centered(p);
        CHECK(close(t.alpha, Complex{1.0}));
        CHECK(close(t.beta, Complex{0.0}));
        for (int k = 0; k <= 3; ++k) CHECK(close(q.coefficient(k), p.coefficient(k), 1e-12));
    }
    SUBCASE("2z^3 + 6z^2 centers to alpha z - 1 with alpha^3 = 1/2") {
        Polynomial p{{Complex{0.0}, Complex{0.0}, Complex{6.0}, Complex{2.0}}};
        auto [q, t] = cheby::normalize_monic_centered(p);
        CHECK(close(t.alpha * t.alpha * t.alpha, Complex{0.5}, 1e-12));
        CHECK(close(t.beta, Complex{-1.0}, 1e-12));
        CHECK(close(q.leading(), Complex{1.0}, 1e-12));
        CHECK(close(q.coefficient(2), Complex{0.0}, 1e-12));
    }
    SUBCASE("(z-a)^3 + beta lands on a rescaled z^3 - 1 form") {
        Complex a{0.4, -1.1};
        Complex beta = Complex{0.7, 0.3};
        Polynomial p = Polynomial::from_roots({{a, 3}}) + Polynomial::constant(beta);
        auto [q, t] = cheby::normalize_monic_centered(p);
        CHECK(close(q.leading(), Complex{1.0}, 1e-12));
        CHECK(close(q.coefficient(2), Complex{0.0}, 1e-12));
        CHECK(close(q.coefficient(1), Complex{0.0}, 1e-12));  // pure cube plus constant
        // the normalized polynomial is z^3 + c with c = beta / lead(p∘T)
        CHECK(std::abs(q.coefficient(0)) > 0.0);
    }
    SUBCASE("random polynomials: q is monic, centered, and conjugate to p") {
        oracle::Rng rng(14);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Complex> pc;
            int d = 2 + static_cast<int>(rng.uniform() * 4.0);
            for (int i = 0; i < d; ++i) pc.push_back(rng.point(2.0));
            pc.push_back(rng.point(1.0) + Complex{1.2, 0.0});
            Polynomial p{pc};
            auto [q, t] = cheby::normalize_monic_centered(p);
            CHECK(close(q.leading(), Complex{1.0}, 1e-10));
            CHECK(std::abs(q.coefficient(q.degree() - 1)) < 1e-10);
            Complex z = rng.point(1.0);
            Complex lead = p.leading() * std::pow(t.alpha, d);
            CHECK(close(q(z) * lead, p(t(z)), 1e-8 * (1.0 + std::abs(p(t(z))))));
        }
    }
}

TEST_CASE("root finding: canonical examples") {
    SUBCASE("(z-1)^2 (z+2)") {
        Polynomial p = Polynomial::from_roots({{Complex{1.0}, 2}, {Complex{-2.0}, 1}});
        auto cl = cheby::refined_roots(p);
        REQUIRE(cl.size() == 2);
        std::sort(cl.begin(), cl.end(),
                  [](const auto& a, const auto& b) { return a.location.real() < b.location.real(); });
        CHECK(close(cl[0].location, Complex{-2.0}, 1e-9));
        CHECK(cl[0].multiplicity == 1);
        CHECK(close(cl[1].location, Complex{1.0}, 1e-7));
        CHECK(cl[1].multiplicity == 2);
    }
    SUBCASE("z^3 - 1: cube roots of unity") {
        Polynomial p{{Complex{-1.0}, Complex{0.0}, Complex{0.0}, Complex{1.0}}};
        auto cl = cheby::refined_roots(p);
        REQUIRE(cl.size() == 3);
        for (const auto& c : cl) {
            CHECK(c.multiplicity == 1);
            CHECK(std::abs(std::abs(c.location) - 1.0) < 1e-10);
            CHECK(close(c.location * c.location * c.location, Complex{1.0}, 1e-9));
        }
    }
    SUBCASE("z^3 + 3z + 11: one real root in (-2,-1), one conjugate pair") {
        Polynomial p = cubic_plus(3.0, 11.0);
        double oracle_root = oracle::bisect(
            [](double x) { return x * x * x + 3.0 * x + 11.0; }, -2.0, -1.0);
        auto cl = cheby::refined_roots(p);
        REQUIRE(cl.size() == 3);
        int reals = 0;
        for (const auto& c : cl) {
            if (std::abs(c.location.imag()) < 1e-9) {
                ++reals;
                CHECK(c.location.real() == doctest::Approx(oracle_root).epsilon(1e-10));
                CHECK(c.location.real() > -2.0);
                CHECK(c.location.real() < -1.0);
            }
        }
        CHECK(reals == 1);
        // conjugate pair
        Complex pair[2];
        int n = 0;
        for (const auto& c : cl)
            if (std::abs(c.location.imag()) >= 1e-9) pair[n++] = c.location;
        REQUIRE(n == 2);
        CHECK(close(pair[0], std::conj(pair[1]), 1e-9));
    }
}

TEST_CASE("root finding agrees with an independent solver on random polynomials") {
    oracle::Rng rng(15);
    for (int trial = 0; trial < 25; ++trial) {
        int d = 2 + static_cast<int>(rng.uniform() * 5.0);
        std::vector<Complex> pc;
        for (int i = 0; i < d; ++i) pc.push_back(rng.point(2.0));
        pc.push_back(Complex{1.0});
        Polynomial p{pc};
        auto mine = cheby::aberth_roots(p);
        auto theirs = oracle::dk_roots(pc);
        REQUIRE(mine.size() == theirs.size());
        // match greedily; random coefficients keep roots simple and separated
        std::vector<bool> used(theirs.size(), false);
        for (Complex m : mine) {
            double best = 1e18;
            size_t bi = 0;
            for (size_t i = 0; i < theirs.size(); ++i) {
                if (used[i]) continue;
                double dd = std::abs(m - theirs[i]);
                if (dd < best) {
                    best = dd;
                    bi = i;
                }
            }
            used[bi] = true;
            CHECK(best < 1e-7);
        }
    }
}

TEST_CASE("multiple-root clustering recovers exact multiplicities") {
    oracle::Rng rng(16);
    for (int trial = 0; trial < 10; ++trial) {
        Complex a = rng.point(1.5);
        Complex b = rng.point(1.5);
        if (std::abs(a - b) < 0.8) b += Complex{1.6, 0.0};
        int ka = 2 + static_cast<int>(rng.uniform() * 3.0);  // 2..4
        Polynomial p = Polynomial::from_roots({{a, ka}, {b, 1}});
        auto cl = cheby::refined_roots(p);
        REQUIRE(cl.size() == 2);
        for (const auto& c : cl) {
            if (c.multiplicity == 1) {
                CHECK(close(c.location, b, 1e-8));
            } else {
                CHECK(c.multiplicity == ka);
                CHECK(close(c.location, a, 1e-8));
            }
        }
    }
}

TEST_CASE("gcd_roots") {
    Polynomial a = Polynomial::from_roots({{Complex{1.0}, 1}});
    Polynomial b = Polynomial::from_roots({{Complex{-1.0}, 1}});
    CHECK(cheby::gcd_roots(a, b).empty());

    Polynomial sq = Polynomial::from_roots({{Complex{1.0}, 1}, {Complex{-1.0}, 1}});
    Polynomial dbl = Polynomial::from_roots({{Complex{1.0}, 2}});
    auto common = cheby::gcd_roots(sq, dbl);
    REQUIRE(common.size() == 1);
    CHECK(close(common[0].location, Complex{1.0}, 1e-8));
    CHECK(common[0].multiplicity == 1);
}
