#pragma once

#include <vector>

#include "cheby/poly.hpp"

namespace cheby {

/// Relative radius used when merging nearby computed roots into one cluster.
inline constexpr double kDefaultClusterTol = 1e-8;

struct RootCluster {
    Complex location{};   // cluster mean
    int multiplicity = 0;
    double residual = 0;  // max |p| over cluster members
};

/// All d roots of p as raw points (no clustering), via the Aberth-Ehrlich
/// simultaneous iteration.  Exact zero roots at the origin are split off
/// first.  Throws NonConvergence if the backward-error stopping criterion is
/// not met for every point within `max_sweeps`.
std::vector<Complex> aberth_roots(const Polynomial& p, int max_sweeps = 200);

/// Roots of p merged into clusters.  Two points merge when their inclusion
/// disks overlap; the disk radius is the larger of tol*max(1,|z|) and a
/// Newton-correction bound 3*d*|p/p'| that grows near a multiple root, where
/// a multiplicity-k cluster is numerically smeared over a radius ~ eps^(1/k).
/// Cluster location is the member mean, multiplicity the member count.
std::vector<RootCluster> roots(const Polynomial& p, double tol = kDefaultClusterTol);

/// Newton-refine the location of a multiplicity-k cluster using the
/// (k-1)-th derivative, which has a simple root there.  Falls back to the
/// initial guess if the refinement wanders further than `leash`.
Complex refine_cluster_location(const Polynomial& p, Complex guess, int multiplicity,
                                double leash);

/// roots(p) with every cluster location Newton-refined.
std::vector<RootCluster> refined_roots(const Polynomial& p, double tol = kDefaultClusterTol);

/// Common roots of a and b with min multiplicity, by matching root clusters
/// of both within tol*max(1,|location|).  Coprime inputs give an empty list.
std::vector<RootCluster> gcd_roots(const Polynomial& a, const Polynomial& b,
                                   double tol = kDefaultClusterTol);

}  // namespace cheby
