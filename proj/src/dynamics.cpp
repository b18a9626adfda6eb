#include "cheby/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace cheby {

const char* to_string(OrbitOutcome o) {
    switch (o) {
        case OrbitOutcome::converged: return "converged";
        case OrbitOutcome::parabolic_converged: return "parabolic-converged";
        case OrbitOutcome::preimage_of_parabolic: return "preimage-of-parabolic";
        case OrbitOutcome::budget_exhausted: return "budget-exhausted";
        case OrbitOutcome::undecided: return "undecided";
    }
    return "unknown";
}

const char* to_string(EvidenceVerdict v) {
    return v == EvidenceVerdict::evidence_consistent ? "evidence-consistent" : "inconclusive";
}

bool AttractorSet::has_parabolic() const {
    for (const auto& a : items)
        if (a.kind == AttractorKind::parabolic) return true;
    return false;
}

int default_budget(const AttractorSet& att, int budget) {
    if (budget > 0) return budget;
    return att.has_parabolic() ? kParabolicBudget : kAttractingBudget;
}

AttractorSet attractors_of(const Polynomial& p, double tol) {
    AttractorSet set;
    for (const auto& rec : find_fixed_points(p, tol)) {
        if (rec.location.is_infinity()) continue;
        bool keep = rec.cls == StabilityClass::superattracting ||
                    rec.cls == StabilityClass::attracting ||
                    rec.cls == StabilityClass::rationally_indifferent;
        if (!keep) continue;
        Attractor a;
        a.location = rec.location.value();
        a.multiplier = rec.multiplier;
        a.is_root = rec.root_multiplicity.has_value();
        if (rec.cls == StabilityClass::superattracting)
            a.kind = AttractorKind::superattracting;
        else if (rec.cls == StabilityClass::rationally_indifferent)
            a.kind = AttractorKind::parabolic;
        else
            a.kind = AttractorKind::attracting;
        set.items.push_back(a);
    }
    std::sort(set.items.begin(), set.items.end(), [](const Attractor& a, const Attractor& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    for (size_t i = 0; i < set.items.size(); ++i) set.items[i].id = static_cast<int>(i);
    return set;
}

namespace {

// Rotation order of a multiplier on the unit circle (1 when none applies).
int rotation_order(Complex m) {
    Complex power{1.0, 0.0};
    for (int q = 1; q <= 24; ++q) {
        power *= m;
        if (std::abs(power - Complex{1.0, 0.0}) < 1e-6) return q;
    }
    return 1;
}

constexpr double kConvergenceTol2 = kConvergenceTol * kConvergenceTol;
constexpr double kPreimageTol2 = 1e-13 * 1e-13;
constexpr double kCreepEnter = 1e-4;
constexpr int kAttractStreak = 10;
constexpr int kCreepStreak = 50;
constexpr double kFarField2 = 1e8 * 1e8;
constexpr int kFarStreak = 1000;

struct Target {
    Complex loc{};
    double inv1pn = 1.0;  // 1 / (1 + |loc|^2), for squared chordal distances
    bool parabolic = false;
    int q = 1;                 // rotation order of the multiplier
    double enter = kCreepEnter;     // creep window radius, (1e-4)^(1/q)
    std::array<double, 24> hist{};  // distances from the last q checks
    int filled = 0;
    int streak = 0;
};

}  // namespace

StepResult classify_orbit(const RationalMap& r, SpherePoint z0, const AttractorSet& att,
                          int budget, std::vector<SpherePoint>* samples, int sample_stride) {
    std::vector<Target> targets;
    targets.reserve(att.items.size());
    for (const auto& a : att.items) {
        Target t;
        t.loc = a.location;
        t.inv1pn = 1.0 / (1.0 + std::norm(a.location));
        t.parabolic = a.kind == AttractorKind::parabolic;
        if (t.parabolic) {
            t.q = rotation_order(a.multiplier);
            // A rotation-order-q parabolic point is approached at rate n^(-1/q),
            // so a fixed entry radius would make the iteration count to reach the
            // creep window grow like its q-th power; this keeps it order-independent.
            t.enter = std::pow(kCreepEnter, 1.0 / t.q);
        }
        targets.push_back(t);
    }
    if (sample_stride < 1) sample_stride = 1;

    StepResult res;
    SpherePoint z = z0;
    int far_streak = 0;
    for (int it = 0; it < budget; ++it) {
        if (samples && it % sample_stride == 0) samples->push_back(z);
        if (z.is_infinity()) {
            res.outcome = OrbitOutcome::undecided;
            res.hit_infinity = true;
            res.iterations = it;
            return res;
        }
        Complex zv = z.value();
        double zn = std::norm(zv);
        if (zn > kFarField2) {
            if (++far_streak >= kFarStreak) {
                res.outcome = OrbitOutcome::undecided;
                res.iterations = it;
                return res;
            }
        } else {
            far_streak = 0;
        }
        double invz = 1.0 / (1.0 + zn);
        for (size_t ti = 0; ti < targets.size(); ++ti) {
            Target& t = targets[ti];
            double d2 = std::norm(zv - t.loc) * t.inv1pn * invz;
            if (!t.parabolic) {
                if (d2 < kConvergenceTol2) {
                    if (++t.streak >= kAttractStreak) {
                        res.outcome = OrbitOutcome::converged;
                        res.attractor = static_cast<int>(ti);
                        res.iterations = it;
                        return res;
                    }
                } else {
                    t.streak = 0;
                }
                continue;
            }
            if (d2 < kPreimageTol2) {
                res.outcome = OrbitOutcome::preimage_of_parabolic;
                res.attractor = static_cast<int>(ti);
                res.iterations = it;
                return res;
            }
            double d = std::sqrt(d2);
            bool creeping = false;
            int idx = t.filled % t.q;
            if (t.filled >= t.q) {
                double prev = t.hist[static_cast<size_t>(idx)];  // distance q checks ago
                creeping = d < t.enter && d < prev && d > 0.8 * prev;
            }
            t.hist[static_cast<size_t>(idx)] = d;
            ++t.filled;
            if (creeping) {
                if (++t.streak >= kCreepStreak) {
                    res.outcome = OrbitOutcome::parabolic_converged;
                    res.attractor = static_cast<int>(ti);
                    res.iterations = it;
                    return res;
                }
            } else {
                t.streak = 0;
            }
        }
        try {
            z = r(z);
        } catch (const IndeterminateValue&) {
            res.outcome = OrbitOutcome::undecided;
            res.iterations = it;
            return res;
        }
    }
    res.outcome = OrbitOutcome::budget_exhausted;
    res.iterations = budget;
    return res;
}

OrbitTrace trace_orbit(const RationalMap& r, SpherePoint z0, const AttractorSet& att,
                       int budget) {
    OrbitTrace trace;
    trace.start = z0;
    int stride = std::max(1, budget / 256);
    StepResult res = classify_orbit(r, z0, att, budget, &trace.samples, stride);
    trace.outcome = res.outcome;
    trace.attractor = res.attractor;
    trace.iterations = res.iterations;
    return trace;
}

namespace {

bool settled(OrbitOutcome o) {
    return o == OrbitOutcome::converged || o == OrbitOutcome::parabolic_converged ||
           o == OrbitOutcome::preimage_of_parabolic;
}

int nearest_attractor(const AttractorSet& att, Complex where) {
    int best = -1;
    double best_d = 0;
    for (const auto& a : att.items) {
        double d = std::abs(a.location - where);
        if (best < 0 || d < best_d) {
            best = a.id;
            best_d = d;
        }
    }
    return best;
}

}  // namespace

CriticalOrbitReport critical_orbit_audit(const Polynomial& p, int budget) {
    RationalMap map = chebyshev_map(p);
    RationalMap deriv = chebyshev_derivative(p);
    AttractorSet att = attractors_of(p);
    budget = default_budget(att, budget);

    CriticalOrbitReport rep;
    // Multiple poles are branch points whose orbit is pole -> infinity -> ...:
    // they sit on the Julia set by fiat.
    for (const auto& c : refined_roots(map.den)) {
        if (c.multiplicity < 2) continue;
        CriticalPointRecord rec;
        rec.point = c.location;
        rec.local_deg = c.multiplicity;
        rec.julia_marked = true;
        rec.outcome = OrbitOutcome::undecided;
        rep.entries.push_back(rec);
    }
    // Finite critical points away from the poles: zeros of the reduced C'.
    for (const auto& c : refined_roots(deriv.num)) {
        CriticalPointRecord rec;
        rec.point = c.location;
        rec.local_deg = 1 + c.multiplicity;
        StepResult res = classify_orbit(map, SpherePoint{c.location}, att, budget);
        rec.outcome = res.outcome;
        rec.attractor = res.attractor;
        rec.iterations = res.iterations;
        rec.julia_marked = res.hit_infinity;
        rep.entries.push_back(rec);
    }
    rep.pass = !rep.entries.empty();
    for (const auto& rec : rep.entries)
        if (!rec.julia_marked && !settled(rec.outcome)) rep.pass = false;
    return rep;
}

RayProbeReport unbounded_basin_probe(const Polynomial& p, Complex attractor, int ray_samples,
                                     int budget) {
    RationalMap map = chebyshev_map(p);
    AttractorSet att = attractors_of(p);
    budget = default_budget(att, budget);
    int target = nearest_attractor(att, attractor);

    RayProbeReport rep;
    int n = std::max(2, ray_samples);
    for (int j = 0; j < n; ++j) {
        // log-spaced from -10 down to -1e7 (safely inside the far-field cap)
        double expo = 1.0 + 6.0 * j / (n - 1);
        RaySample s;
        s.x = -std::pow(10.0, expo);
        StepResult res = classify_orbit(map, SpherePoint{Complex{s.x, 0.0}}, att, budget);
        s.converged = settled(res.outcome) && res.attractor == target;
        s.iterations = res.iterations;
        SpherePoint image = map(SpherePoint{Complex{s.x, 0.0}});
        s.moved_right = !image.is_infinity() && image.value().real() > s.x;
        rep.samples.push_back(s);
    }
    rep.pass = target >= 0;
    for (const auto& s : rep.samples)
        if (!s.converged || !s.moved_right) rep.pass = false;
    return rep;
}

PoleProbeReport pole_boundary_probe(const RationalMap& r, const AttractorSet& att,
                                    int target_attractor, std::vector<double> eps_list,
                                    int budget) {
    budget = default_budget(att, budget);
    if (eps_list.empty()) eps_list = {1e-2, 3e-3, 1e-3};
    PoleProbeReport rep;
    std::vector<RootCluster> poles = refined_roots(r.den);
    if (poles.empty() || target_attractor < 0) {
        rep.pass = false;
        return rep;
    }
    rep.pass = true;
    constexpr int kCirclePoints = 64;
    for (const auto& pc : poles) {
        PoleCircleResult res;
        res.pole = pc.location;
        res.multiplicity = pc.multiplicity;
        for (double e : eps_list) {
            int hits = 0;
            for (int k = 0; k < kCirclePoints; ++k) {
                double t = 2.0 * 3.14159265358979323846 * k / kCirclePoints;
                Complex z = pc.location + e * Complex{std::cos(t), std::sin(t)};
                StepResult sr = classify_orbit(r, SpherePoint{z}, att, budget);
                if (settled(sr.outcome) && sr.attractor == target_attractor) ++hits;
            }
            res.eps.push_back(e);
            res.fraction.push_back(static_cast<double>(hits) / kCirclePoints);
        }
        double last = res.fraction.back();
        bool ok = last > 0.0 && last < 1.0;
        if (!ok) {
            // accept a fraction marching strictly toward balance as eps shrinks
            ok = true;
            for (size_t i = 1; i < res.fraction.size(); ++i)
                if (std::abs(res.fraction[i] - 0.5) >= std::abs(res.fraction[i - 1] - 0.5)) ok = false;
        }
        res.pass = ok;
        if (!ok) rep.pass = false;
        rep.poles.push_back(std::move(res));
    }
    return rep;
}

PoleProbeReport pole_boundary_probe(const Polynomial& p, Complex attractor,
                                    std::vector<double> eps_list, int budget) {
    RationalMap map = chebyshev_map(p);
    AttractorSet att = attractors_of(p);
    return pole_boundary_probe(map, att, nearest_attractor(att, attractor), std::move(eps_list),
                               budget);
}

ConnectivityEvidence connectivity_evidence(const Polynomial& p, int budget) {
    ConnectivityEvidence ev;
    ev.attractors = attractors_of(p);
    ev.critical_orbits = critical_orbit_audit(p, budget);

    // The unboundedness claims are made for the leftmost real attractor.
    int target = -1;
    for (const auto& a : ev.attractors.items) {
        if (std::abs(a.location.imag()) > 1e-8) continue;
        if (target < 0 || a.location.real() < ev.attractors.items[target].location.real())
            target = a.id;
    }
    std::ostringstream note;
    if (target < 0) {
        if (!ev.attractors.items.empty()) {
            target = 0;  // items are sorted by real part: index 0 is leftmost
            note << "no real attractor; probing the leftmost one; ";
        } else {
            ev.note = "no attractors found";
            return ev;
        }
    }
    ev.ray_attractor = ev.attractors.items[target].location;
    ev.ray = unbounded_basin_probe(p, ev.ray_attractor, 8, budget);
    RationalMap map = chebyshev_map(p);
    ev.poles = pole_boundary_probe(map, ev.attractors, target, {}, budget);

    if (!ev.critical_orbits.pass) note << "a critical orbit failed to settle; ";
    if (!ev.ray.pass) note << "the ray probe failed; ";
    if (!ev.poles.pass) note << "a pole circle failed; ";
    ev.note = note.str();
    ev.verdict = (ev.critical_orbits.pass && ev.ray.pass && ev.poles.pass)
                     ? EvidenceVerdict::evidence_consistent
                     : EvidenceVerdict::inconclusive;
    return ev;
}

}  // namespace cheby
