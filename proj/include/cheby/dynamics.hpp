#pragma once

#include <string>
#include <vector>

#include "cheby/fixed_points.hpp"

namespace cheby {

enum class OrbitOutcome {
    converged,              // settled at an attracting/superattracting point
    parabolic_converged,    // crept into a parabolic point along a petal
    preimage_of_parabolic,  // hit the parabolic point exactly in finitely many steps
    budget_exhausted,       // still wandering when the budget ran out
    undecided               // stuck at/near the repelling fixed point at infinity
};

const char* to_string(OrbitOutcome o);

enum class AttractorKind { superattracting, attracting, parabolic };

struct Attractor {
    int id = -1;
    Complex location{};
    AttractorKind kind = AttractorKind::attracting;
    Complex multiplier{};
    bool is_root = false;  // root of p vs extraneous
};

struct AttractorSet {
    std::vector<Attractor> items;
    bool has_parabolic() const;
};

/// The forward invariant targets an orbit can settle on: every fixed point
/// of C_p with |multiplier| < 1 plus the rationally indifferent (parabolic)
/// ones.  Sorted by location for determinism.
AttractorSet attractors_of(const Polynomial& p, double tol = kDefaultClusterTol);

inline constexpr int kAttractingBudget = 2000;
inline constexpr int kParabolicBudget = 200000;
inline constexpr double kConvergenceTol = 1e-10;  // spherical, 10 consecutive hits

struct OrbitTrace {
    SpherePoint start;
    std::vector<SpherePoint> samples;  // subsampled, at most ~256 entries
    OrbitOutcome outcome = OrbitOutcome::undecided;
    int attractor = -1;
    int iterations = 0;
};

struct StepResult {
    OrbitOutcome outcome = OrbitOutcome::undecided;
    int attractor = -1;
    int iterations = 0;
    bool hit_infinity = false;  // the orbit landed exactly on infinity (pole hit)
};

/// Core iteration kernel behind trace_orbit and the renderer.  Supplying a
/// sample sink records every sample_stride-th point; the decision logic is
/// identical either way.
StepResult classify_orbit(const RationalMap& r, SpherePoint z0, const AttractorSet& att,
                          int budget, std::vector<SpherePoint>* samples = nullptr,
                          int sample_stride = 1);

/// budget <= 0 resolves to the parabolic or plain attracting default.
int default_budget(const AttractorSet& att, int budget);

/// Iterate R from z0 against the attractor set.  Attracting targets use the
/// spherical tolerance above; parabolic targets use a creep test (distance
/// below 1e-4, strictly decreasing, ratio near 1 for a sustained run) since
/// no fixed tolerance is reached in reasonable time.  Orbits that linger
/// within the |z| > 1e8 neighborhood of infinity for 1000 straight steps are
/// undecided (infinity repels: nothing converges there).
OrbitTrace trace_orbit(const RationalMap& r, SpherePoint z0, const AttractorSet& att,
                       int budget);

struct CriticalPointRecord {
    SpherePoint point;
    int local_deg = 2;
    OrbitOutcome outcome = OrbitOutcome::undecided;
    int attractor = -1;
    bool julia_marked = false;  // landed on a pole / infinity (marked Julia points)
    int iterations = 0;
};

struct CriticalOrbitReport {
    std::vector<CriticalPointRecord> entries;
    bool pass = false;  // every critical orbit met an attractor or a marked Julia point
};

/// Track every critical point of C_p (zeros of the derivative's numerator,
/// multiple poles, and infinity if it is a branch point).  This is the
/// geometric-finiteness evidence: pass means no critical orbit wanders.
CriticalOrbitReport critical_orbit_audit(const Polynomial& p, int budget = 0);

struct RaySample {
    double x = 0;
    bool converged = false;
    bool moved_right = false;  // C(x) > x, the one-step progress the claim rests on
    int iterations = 0;
};

struct RayProbeReport {
    std::vector<RaySample> samples;
    bool pass = false;
};

/// Evidence that the immediate basin of the given real attractor is
/// unbounded to the left: points x = -10, -100, ... plus log-spaced fillers
/// all converge to it, and C(x) > x at every sampled x below the attractor.
RayProbeReport unbounded_basin_probe(const Polynomial& p, Complex attractor,
                                     int ray_samples = 8, int budget = 0);

struct PoleCircleResult {
    Complex pole{};
    int multiplicity = 1;
    std::vector<double> eps;
    std::vector<double> fraction;  // fraction of the 64-point circle attracted
    bool pass = false;
};

struct PoleProbeReport {
    std::vector<PoleCircleResult> poles;
    bool pass = false;  // no finite poles -> fail (nothing supports the claim)
};

/// Evidence that every pole of C_p lies on the boundary of the given
/// attractor's basin: on small circles around each pole the attracted
/// fraction must be strictly between 0 and 1 (or trend into that range as
/// the radius shrinks).
PoleProbeReport pole_boundary_probe(const RationalMap& r, const AttractorSet& att,
                                    int target_attractor, std::vector<double> eps_list,
                                    int budget = 0);
PoleProbeReport pole_boundary_probe(const Polynomial& p, Complex attractor,
                                    std::vector<double> eps_list = {}, int budget = 0);

enum class EvidenceVerdict { evidence_consistent, inconclusive };

const char* to_string(EvidenceVerdict v);

struct ConnectivityEvidence {
    EvidenceVerdict verdict = EvidenceVerdict::inconclusive;
    AttractorSet attractors;
    CriticalOrbitReport critical_orbits;
    RayProbeReport ray;        // against the leftmost real attractor
    PoleProbeReport poles;     // same target
    Complex ray_attractor{};   // which attractor the unbounded-basin claim used
    std::string note;
};

/// Bundle of dynamical probes backing the simply-connected / unbounded
/// immediate basin picture: critical orbit audit + unbounded ray probe +
/// pole boundary probe, all against the leftmost real attractor.
ConnectivityEvidence connectivity_evidence(const Polynomial& p, int budget = 0);

}  // namespace cheby
