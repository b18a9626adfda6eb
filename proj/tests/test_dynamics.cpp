#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "cheby/chebyshev.hpp"
#include "cheby/dynamics.hpp"
#include "cheby/lambda_family.hpp"
#include "oracles.hpp"

using cheby::Attractor;
using cheby::AttractorKind;
using cheby::AttractorSet;
using cheby::Complex;
using cheby::OrbitOutcome;
using cheby::Polynomial;
using cheby::RationalMap;
using cheby::SpherePoint;

namespace {

Polynomial cube_roots_of_unity() {
    return Polynomial{{Complex{-1.0}, Complex{0.0}, Complex{0.0}, Complex{1.0}}};
}

Polynomial double_root_cubic() {  // (z-1)^2 (z+2)
    return Polynomial::from_roots({{Complex{1.0}, 2}, {Complex{-2.0}, 1}});
}

const Attractor* find_attractor(const AttractorSet& att, Complex where, double tol = 1e-6) {
    for (const auto& a : att.items)
        if (std::abs(a.location - where) < tol) return &a;
    return nullptr;
}

int count_roots(const AttractorSet& att) {
    return static_cast<int>(
        std::count_if(att.items.begin(), att.items.end(), [](const Attractor& a) { return a.is_root; }));
}

}  // namespace

TEST_CASE("attractor census for the cubic family") {
    // lambda = 0: three superattracting roots plus a superattracting
    // extraneous point at -1/sqrt 5 (its multiplier is the parameter).
    auto att0 = cheby::attractors_of(cheby::lambda_polynomial(Complex{0.0}));
    CHECK(att0.items.size() == 4);
    CHECK(count_roots(att0) == 3);
    CHECK(!att0.has_parabolic());
    const Attractor* extra = find_attractor(att0, Complex{-1.0 / std::sqrt(5.0)});
    REQUIRE(extra != nullptr);
    CHECK(!extra->is_root);
    CHECK(extra->kind == AttractorKind::superattracting);
    CHECK(std::abs(extra->multiplier) < 1e-9);

    // lambda = 1: the extraneous point is parabolic at -1/2 with multiplier 1.
    auto att1 = cheby::attractors_of(cheby::lambda_polynomial(Complex{1.0}));
    CHECK(att1.items.size() == 4);
    CHECK(count_roots(att1) == 3);
    CHECK(att1.has_parabolic());
    const Attractor* para1 = find_attractor(att1, Complex{-0.5});
    REQUIRE(para1 != nullptr);
    CHECK(para1->kind == AttractorKind::parabolic);
    CHECK(std::abs(para1->multiplier - Complex{1.0}) < 1e-8);

    // lambda = -1: parabolic at -1/sqrt 6 with multiplier -1.
    auto attm = cheby::attractors_of(cheby::lambda_polynomial(Complex{-1.0}));
    CHECK(attm.items.size() == 4);
    CHECK(attm.has_parabolic());
    const Attractor* param = find_attractor(attm, Complex{-1.0 / std::sqrt(6.0)});
    REQUIRE(param != nullptr);
    CHECK(param->kind == AttractorKind::parabolic);
    CHECK(std::abs(param->multiplier - Complex{-1.0}) < 1e-8);

    // ids follow the deterministic (re, im) ordering
    for (const auto& att : {att0, att1, attm})
        for (size_t i = 0; i < att.items.size(); ++i) {
            CHECK(att.items[i].id == static_cast<int>(i));
            if (i > 0) {
                const Complex a = att.items[i - 1].location;
                const Complex b = att.items[i].location;
                CHECK((a.real() < b.real() ||
                       (a.real() == b.real() && a.imag() < b.imag())));
            }
        }
}

TEST_CASE("attractor census outside the family") {
    auto att3 = cheby::attractors_of(cube_roots_of_unity());
    CHECK(att3.items.size() == 3);  // extraneous points all have multiplier 5
    CHECK(count_roots(att3) == 3);
    for (const auto& a : att3.items) CHECK(a.kind == AttractorKind::superattracting);

    auto attd = cheby::attractors_of(double_root_cubic());
    CHECK(attd.items.size() == 2);  // extraneous multipliers 9 and 49/9 repel
    const Attractor* simple = find_attractor(attd, Complex{-2.0});
    REQUIRE(simple != nullptr);
    CHECK(simple->kind == AttractorKind::superattracting);
    const Attractor* dbl = find_attractor(attd, Complex{1.0});
    REQUIRE(dbl != nullptr);
    CHECK(dbl->kind == AttractorKind::attracting);
    CHECK(std::abs(dbl->multiplier - Complex{3.0 / 8.0}) < 1e-9);
}

TEST_CASE("default budget selection") {
    auto plain = cheby::attractors_of(cube_roots_of_unity());
    auto parabolic = cheby::attractors_of(cheby::lambda_polynomial(Complex{1.0}));
    CHECK(cheby::default_budget(plain, 0) == cheby::kAttractingBudget);
    CHECK(cheby::default_budget(parabolic, 0) == cheby::kParabolicBudget);
    CHECK(cheby::default_budget(parabolic, 777) == 777);
}

TEST_CASE("orbit classification reaches the expected attractors") {
    // z^3 - 1 from z0 = 2 settles on the root 1
    Polynomial p = cube_roots_of_unity();
    RationalMap map = cheby::chebyshev_map(p);
    auto att = cheby::attractors_of(p);
    auto res = cheby::classify_orbit(map, SpherePoint{Complex{2.0}}, att, 2000);
    CHECK(res.outcome == OrbitOutcome::converged);
    REQUIRE(res.attractor >= 0);
    CHECK(std::abs(att.items[res.attractor].location - Complex{1.0}) < 1e-8);
    CHECK(res.iterations > 0);
    CHECK(res.iterations < 2000);

    // lambda = 0 from z0 = -10 runs right along the axis into the real root
    Polynomial p0 = cheby::lambda_polynomial(Complex{0.0});
    auto att0 = cheby::attractors_of(p0);
    auto res0 = cheby::classify_orbit(cheby::chebyshev_map(p0), SpherePoint{Complex{-10.0}}, att0,
                                      2000);
    CHECK(res0.outcome == OrbitOutcome::converged);
    REQUIRE(res0.attractor >= 0);
    CHECK(std::abs(att0.items[res0.attractor].location -
                   Complex{cheby::real_root_of_lambda_poly(0.0)}) < 1e-8);
}

TEST_CASE("parabolic creep classification") {
    double inv_s5 = 1.0 / std::sqrt(5.0);

    // lambda = 1: the free critical point creeps into the parabolic -1/2
    Polynomial p1 = cheby::lambda_polynomial(Complex{1.0});
    auto att1 = cheby::attractors_of(p1);
    auto res1 = cheby::classify_orbit(cheby::chebyshev_map(p1), SpherePoint{Complex{-inv_s5}},
                                      att1, cheby::kParabolicBudget);
    CHECK(res1.outcome == OrbitOutcome::parabolic_converged);
    REQUIRE(res1.attractor >= 0);
    CHECK(std::abs(att1.items[res1.attractor].location - Complex{-0.5}) < 1e-8);
    CHECK(res1.iterations <= cheby::kParabolicBudget);

    // lambda = -1: multiplier -1 halves the approach rate, yet the widened
    // entry window keeps the detection cost of the same order
    Polynomial pm = cheby::lambda_polynomial(Complex{-1.0});
    auto attm = cheby::attractors_of(pm);
    auto resm = cheby::classify_orbit(cheby::chebyshev_map(pm), SpherePoint{Complex{-inv_s5}},
                                      attm, cheby::kParabolicBudget);
    CHECK(resm.outcome == OrbitOutcome::parabolic_converged);
    REQUIRE(resm.attractor >= 0);
    CHECK(std::abs(attm.items[resm.attractor].location - Complex{-1.0 / std::sqrt(6.0)}) < 1e-8);
    CHECK(resm.iterations < 10000);
}

TEST_CASE("exact parabolic preimages are flagged, not crept into") {
    Polynomial p1 = cheby::lambda_polynomial(Complex{1.0});
    RationalMap map = cheby::chebyshev_map(p1);
    auto att = cheby::attractors_of(p1);

    // the parabolic point itself counts as its own 0-step preimage
    auto self = cheby::classify_orbit(map, SpherePoint{Complex{-0.5}}, att, cheby::kParabolicBudget);
    CHECK(self.outcome == OrbitOutcome::preimage_of_parabolic);
    CHECK(self.iterations == 0);

    // a genuine 1-step preimage: a root of num + den/2 away from -1/2,
    // polished until the image lands within the exact-hit tolerance
    Polynomial q = map.num + 0.5 * map.den;
    auto qc = q.coefficients();
    auto dqc = oracle::differentiate(qc);
    bool tested = false;
    for (const auto& cluster : cheby::roots(q)) {
        Complex z = cluster.location;
        if (std::abs(z - Complex{-0.5}) < 0.3) continue;
        if (std::abs(z - Complex{0.0, 1.0}) < 0.3) continue;
        if (std::abs(z - Complex{0.0, -1.0}) < 0.3) continue;
        for (int k = 0; k < 8; ++k) z -= oracle::horner(qc, z) / oracle::horner(dqc, z);
        auto res = cheby::classify_orbit(map, SpherePoint{z}, att, cheby::kParabolicBudget);
        CHECK(res.outcome == OrbitOutcome::preimage_of_parabolic);
        CHECK(res.iterations == 1);
        REQUIRE(res.attractor >= 0);
        CHECK(std::abs(att.items[res.attractor].location - Complex{-0.5}) < 1e-8);
        tested = true;
        break;
    }
    CHECK(tested);
}

TEST_CASE("pole hits and tiny budgets") {
    Polynomial p = cube_roots_of_unity();
    RationalMap map = cheby::chebyshev_map(p);
    auto att = cheby::attractors_of(p);

    // the pole at the origin maps straight to infinity
    auto pole = cheby::classify_orbit(map, SpherePoint{Complex{0.0}}, att, 2000);
    CHECK(pole.outcome == OrbitOutcome::undecided);
    CHECK(pole.hit_infinity);

    // starting exactly at infinity is flagged immediately
    auto inf = cheby::classify_orbit(map, SpherePoint::infinity(), att, 2000);
    CHECK(inf.outcome == OrbitOutcome::undecided);
    CHECK(inf.hit_infinity);
    CHECK(inf.iterations == 0);

    // a budget too small to decide anything is reported as exhausted
    auto starved = cheby::classify_orbit(map, SpherePoint{Complex{2.0}}, att, 3);
    CHECK(starved.outcome == OrbitOutcome::budget_exhausted);
    CHECK(starved.iterations == 3);
}

TEST_CASE("orbit traces subsample the run") {
    Polynomial p = cube_roots_of_unity();
    RationalMap map = cheby::chebyshev_map(p);
    auto att = cheby::attractors_of(p);
    auto trace = cheby::trace_orbit(map, SpherePoint{Complex{2.0}}, att, 2000);
    CHECK(trace.outcome == OrbitOutcome::converged);
    REQUIRE(!trace.samples.empty());
    CHECK(trace.samples.size() <= 300);
    CHECK(!trace.start.is_infinity());
    CHECK(trace.start.value() == Complex{2.0});
    CHECK(trace.samples.front() == trace.start);
    auto res = cheby::classify_orbit(map, SpherePoint{Complex{2.0}}, att, 2000);
    CHECK(trace.iterations == res.iterations);
    CHECK(trace.attractor == res.attractor);
}

TEST_CASE("outcome and verdict names") {
    CHECK(std::strcmp(cheby::to_string(OrbitOutcome::converged), "converged") == 0);
    CHECK(std::strcmp(cheby::to_string(OrbitOutcome::parabolic_converged), "parabolic-converged") ==
          0);
    CHECK(std::strcmp(cheby::to_string(OrbitOutcome::preimage_of_parabolic),
                      "preimage-of-parabolic") == 0);
    CHECK(std::strcmp(cheby::to_string(OrbitOutcome::budget_exhausted), "budget-exhausted") == 0);
    CHECK(std::strcmp(cheby::to_string(OrbitOutcome::undecided), "undecided") == 0);
    CHECK(std::strcmp(cheby::to_string(cheby::EvidenceVerdict::evidence_consistent),
                      "evidence-consistent") == 0);
    CHECK(std::strcmp(cheby::to_string(cheby::EvidenceVerdict::inconclusive), "inconclusive") == 0);
}

TEST_CASE("critical orbit audit on the canonical cubics") {
    // z^3 - 1: three superattracting roots are their own critical orbits; the
    // order-5 pole at the origin is a marked Julia point.
    auto rep = cheby::critical_orbit_audit(cube_roots_of_unity());
    CHECK(rep.pass);
    int marked = 0, settled_roots = 0;
    for (const auto& e : rep.entries) {
        if (e.julia_marked) {
            ++marked;
            CHECK(!e.point.is_infinity());
            CHECK(std::abs(e.point.value()) < 1e-8);
            CHECK(e.local_deg == 5);
        } else {
            CHECK(e.outcome == OrbitOutcome::converged);
            CHECK(e.local_deg == 3);  // simple roots are full local branch points
            ++settled_roots;
        }
    }
    CHECK(marked == 1);
    CHECK(settled_roots == 3);

    // lambda = 1: free critical points at +-1/sqrt 5, double poles at +-i
    auto rep1 = cheby::critical_orbit_audit(cheby::lambda_polynomial(Complex{1.0}));
    CHECK(rep1.pass);
    bool crept = false;
    int pole_entries = 0;
    for (const auto& e : rep1.entries) {
        if (e.outcome == OrbitOutcome::parabolic_converged) crept = true;
        if (e.julia_marked) {
            ++pole_entries;
            CHECK(std::abs(std::abs(e.point.value().imag()) - 1.0) < 1e-8);
            CHECK(e.local_deg == 3);
        }
    }
    CHECK(crept);
    CHECK(pole_entries == 2);

    // lambda = -1: same layout, and the parabolic orbit resolves quickly
    auto repm = cheby::critical_orbit_audit(cheby::lambda_polynomial(Complex{-1.0}));
    CHECK(repm.pass);
    bool crept_m = false;
    for (const auto& e : repm.entries)
        if (e.outcome == OrbitOutcome::parabolic_converged) {
            crept_m = true;
            CHECK(e.iterations < 10000);
        }
    CHECK(crept_m);
}

TEST_CASE("unbounded basin ray probe") {
    Polynomial p0 = cheby::lambda_polynomial(Complex{0.0});
    double r0 = cheby::real_root_of_lambda_poly(0.0);
    auto rep = cheby::unbounded_basin_probe(p0, Complex{r0});
    CHECK(rep.pass);
    CHECK(rep.samples.size() == 8);
    for (const auto& s : rep.samples) {
        CHECK(s.converged);
        CHECK(s.moved_right);
        CHECK(s.x <= -10.0);
    }
    CHECK(rep.samples.front().x == doctest::Approx(-10.0));
    CHECK(rep.samples.back().x == doctest::Approx(-1e7));

    // the one-step inequality the probe relies on, checked against the map
    RationalMap map = cheby::chebyshev_map(p0);
    for (double x : {-15.0, -300.0, -2e4, -5e6}) {
        Complex fx = oracle::rational_eval(map.num.coefficients(), map.den.coefficients(),
                                           Complex{x});
        CHECK(std::abs(fx.imag()) < 1e-9 * std::abs(fx.real()));
        CHECK(fx.real() > x);
    }

    // negative control: the left ray of z^2 - 1 belongs to the root -1, so
    // probing the basin of +1 must fail
    Polynomial sq{{Complex{-1.0}, Complex{0.0}, Complex{1.0}}};
    auto bad = cheby::unbounded_basin_probe(sq, Complex{1.0});
    CHECK(!bad.pass);
}

TEST_CASE("pole boundary probe") {
    // z^3 - 1 against the basin of the root 1: the single pole at 0 shows a
    // genuinely mixed circle at every radius
    auto rep = cheby::pole_boundary_probe(cube_roots_of_unity(), Complex{1.0});
    CHECK(rep.pass);
    REQUIRE(rep.poles.size() == 1);
    CHECK(std::abs(rep.poles[0].pole) < 1e-8);
    CHECK(rep.poles[0].multiplicity == 5);
    REQUIRE(!rep.poles[0].fraction.empty());
    for (double f : rep.poles[0].fraction) {
        CHECK(f > 0.0);
        CHECK(f < 1.0);
    }

    // (z-1)^2 (z+2) against the basin of -2: pole at -1 of order 3
    auto repd = cheby::pole_boundary_probe(double_root_cubic(), Complex{-2.0});
    CHECK(repd.pass);
    REQUIRE(repd.poles.size() == 1);
    CHECK(std::abs(repd.poles[0].pole - Complex{-1.0}) < 1e-8);
    CHECK(repd.poles[0].multiplicity == 3);

    // negative control: iterating the polynomial z^2 - 1 itself (denominator
    // 1) offers no pole at all, so the probe cannot support the claim
    RationalMap plain = cheby::make_rational(Polynomial{{Complex{-1.0}, Complex{0.0}, Complex{1.0}}},
                                             Polynomial::constant(Complex{1.0}));
    AttractorSet fake;
    Attractor a;
    a.id = 0;
    a.location = Complex{0.0};
    a.kind = AttractorKind::attracting;
    fake.items.push_back(a);
    auto none = cheby::pole_boundary_probe(plain, fake, 0, {}, 500);
    CHECK(!none.pass);
    CHECK(none.poles.empty());
}

TEST_CASE("connectivity evidence for the five canonical maps") {
    struct Case {
        Polynomial p;
        size_t attractors;
        std::vector<Complex> poles;
        Complex ray_target;
        bool parabolic;
    };
    std::vector<Case> cases;
    cases.push_back({cheby::lambda_polynomial(Complex{-1.0}), 4,
                     {Complex{0.0, -1.0}, Complex{0.0, 1.0}},
                     Complex{cheby::real_root_of_lambda_poly(-1.0)}, true});
    cases.push_back({cheby::lambda_polynomial(Complex{0.0}), 4,
                     {Complex{0.0, -1.0}, Complex{0.0, 1.0}},
                     Complex{cheby::real_root_of_lambda_poly(0.0)}, false});
    cases.push_back({cheby::lambda_polynomial(Complex{1.0}), 4,
                     {Complex{0.0, -1.0}, Complex{0.0, 1.0}},
                     Complex{cheby::real_root_of_lambda_poly(1.0)}, true});
    cases.push_back({cube_roots_of_unity(), 3, {Complex{0.0}}, Complex{1.0}, false});
    cases.push_back({double_root_cubic(), 2, {Complex{-1.0}}, Complex{-2.0}, false});

    for (const auto& c : cases) {
        auto ev = cheby::connectivity_evidence(c.p);
        INFO("case with ", c.attractors, " attractors: ", ev.note);
        CHECK(ev.verdict == cheby::EvidenceVerdict::evidence_consistent);
        CHECK(ev.attractors.items.size() == c.attractors);
        CHECK(ev.critical_orbits.pass);
        CHECK(ev.ray.pass);
        CHECK(ev.poles.pass);
        CHECK(std::abs(ev.ray_attractor - c.ray_target) < 1e-8);
        REQUIRE(ev.poles.poles.size() == c.poles.size());
        std::vector<Complex> got;
        for (const auto& pc : ev.poles.poles) got.push_back(pc.pole);
        std::sort(got.begin(), got.end(), [](Complex x, Complex y) {
            return x.imag() != y.imag() ? x.imag() < y.imag() : x.real() < y.real();
        });
        for (size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - c.poles[i]) < 1e-8);
        CHECK(ev.attractors.has_parabolic() == c.parabolic);
        bool any_parabolic_orbit = false;
        for (const auto& e : ev.critical_orbits.entries)
            if (e.outcome == OrbitOutcome::parabolic_converged) any_parabolic_orbit = true;
        CHECK(any_parabolic_orbit == c.parabolic);
    }
}
