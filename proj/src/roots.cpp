#include "cheby/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace cheby {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Strip exact zero roots at the origin; returns how many were removed.
int strip_origin_roots(std::vector<Complex>& coeffs) {
    int stripped = 0;
    while (coeffs.size() > 1 && coeffs.front() == Complex{0.0}) {
        coeffs.erase(coeffs.begin());
        ++stripped;
    }
    return stripped;
}

struct EvalPair {
    Complex p;
    Complex dp;
    double scale;  // sum |a_k| |z|^k
};

EvalPair horner2(const std::vector<Complex>& a, Complex z) {
    Complex p{}, dp{};
    double s = 0;
    const double az = std::abs(z);
    for (size_t i = a.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[i];
        s = s * az + std::abs(a[i]);
    }
    return {p, dp, s};
}

}  // namespace

std::vector<Complex> aberth_roots(const Polynomial& poly, int max_sweeps) {
    if (poly.is_zero()) throw DegenerateInput("root finding on the zero polynomial");
    std::vector<Complex> a = poly.coefficients();
    std::vector<Complex> out;
    const int zeros = strip_origin_roots(a);
    out.assign(static_cast<size_t>(zeros), Complex{0.0});
    const int d = static_cast<int>(a.size()) - 1;
    if (d == 0) return out;
    if (d == 1) {
        out.push_back(-a[0] / a[1]);
        return out;
    }

    // Starting ring: radius from the constant/leading terms clamped by the
    // Cauchy bound, angles offset so no symmetry axis of the polynomial can
    // trap the configuration.
    double cauchy = 0;
    for (int i = 0; i < d; ++i) cauchy = std::max(cauchy, std::abs(a[i] / a[d]));
    cauchy += 1.0;
    double r0 = std::pow(std::abs(a[0] / a[d]), 1.0 / d);
    if (!(r0 > 1e-6 * cauchy)) r0 = 0.5 * cauchy;
    r0 = std::min(r0, cauchy);

    std::vector<Complex> z(d);
    for (int k = 0; k < d; ++k) {
        double th = 2.0 * std::numbers::pi * (k + 0.25) / d + 0.79;
        z[k] = r0 * Complex{std::cos(th), std::sin(th)};
    }

    std::vector<bool> done(d, false);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool all_done = true;
        for (int k = 0; k < d; ++k) {
            if (done[k]) continue;
            EvalPair e = horner2(a, z[k]);
            if (std::abs(e.p) <= 100.0 * kEps * e.scale) {
                done[k] = true;
                continue;
            }
            all_done = false;
            Complex dp = e.dp;
            if (dp == Complex{0.0}) {
                // Sitting on a critical point: nudge off deterministically.
                z[k] += (1e-6 + 1e-6 * std::abs(z[k])) * Complex{std::cos(k + 1.0), std::sin(k + 1.0)};
                continue;
            }
            Complex newton = e.p / dp;
            Complex repel{};
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                Complex diff = z[k] - z[j];
                if (diff == Complex{0.0}) diff = Complex{1e-14 * (1.0 + std::abs(z[k])), 0.0};
                repel += 1.0 / diff;
            }
            Complex denom = 1.0 - newton * repel;
            Complex w = std::abs(denom) < 1e-300 ? newton : newton / denom;
            z[k] -= w;
            if (std::abs(w) <= 4.0 * kEps * (1.0 + std::abs(z[k]))) done[k] = true;
        }
        if (all_done) break;
    }

    for (int k = 0; k < d; ++k) {
        EvalPair e = horner2(a, z[k]);
        if (!(std::abs(e.p) <= 1e5 * kEps * std::max(e.scale, 1e-300)))
            throw NonConvergence("root iteration residual above tolerance after sweep budget");
    }
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

std::vector<RootCluster> roots(const Polynomial& p, double tol) {
    std::vector<Complex> pts = aberth_roots(p);
    const int n = static_cast<int>(pts.size());
    if (n == 0) return {};
    const int d = p.degree();

    // Inclusion radius per point: the tol disk from the merge contract, or a
    // Newton-correction bound that inflates inside a numerically smeared
    // multiple-root cluster.
    std::vector<double> radius(n);
    const auto& a = p.coefficients();
    for (int i = 0; i < n; ++i) {
        EvalPair e = horner2(a, pts[i]);
        double r = tol * std::max(1.0, std::abs(pts[i]));
        if (std::abs(e.dp) > 0) r = std::max(r, 3.0 * d * std::abs(e.p / e.dp));
        radius[i] = r;
    }

    DisjointSet ds(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(pts[i] - pts[j]) <= radius[i] + radius[j]) ds.unite(i, j);

    std::vector<RootCluster> clusters;
    std::vector<int> rep(n, -1);
    for (int i = 0; i < n; ++i) {
        int root = ds.find(i);
        if (rep[root] < 0) {
            rep[root] = static_cast<int>(clusters.size());
            clusters.push_back({});
        }
        RootCluster& c = clusters[rep[root]];
        c.location += pts[i];
        c.multiplicity += 1;
        double s;
        c.residual = std::max(c.residual, std::abs(p.eval_with_scale(pts[i], s)));
    }
    for (auto& c : clusters) c.location /= static_cast<double>(c.multiplicity);
    std::sort(clusters.begin(), clusters.end(), [](const RootCluster& x, const RootCluster& y) {
        if (x.location.real() != y.location.real()) return x.location.real() < y.location.real();
        return x.location.imag() < y.location.imag();
    });
    return clusters;
}

Complex refine_cluster_location(const Polynomial& p, Complex guess, int multiplicity,
                                double leash) {
    // The mean of a multiplicity-k cluster is only eps^(2/k) accurate; the
    // (k-1)-th derivative has a simple root at the true location, so Newton
    // on it recovers full precision.
    Polynomial g = p.derivative(multiplicity - 1);
    Complex z = guess;
    for (int it = 0; it < 40; ++it) {
        double scale;
        Complex val = g.eval_with_scale(z, scale);
        Complex der = g.derivative()(z);
        if (der == Complex{0.0}) break;
        Complex step = val / der;
        z -= step;
        if (std::abs(z - guess) > leash) return guess;
        if (std::abs(step) <= 4.0 * kEps * (1.0 + std::abs(z))) break;
    }
    return z;
}

std::vector<RootCluster> refined_roots(const Polynomial& p, double tol) {
    std::vector<RootCluster> cs = roots(p, tol);
    for (auto& c : cs) {
        if (c.multiplicity < 2) {
            c.location = refine_cluster_location(p, c.location, 1, 1e-4 * (1.0 + std::abs(c.location)));
        } else {
            double leash = 0.3 * (1.0 + std::abs(c.location));
            c.location = refine_cluster_location(p, c.location, c.multiplicity, leash);
        }
    }
    return cs;
}

std::vector<RootCluster> gcd_roots(const Polynomial& a, const Polynomial& b, double tol) {
    if (a.degree() < 1 || b.degree() < 1) return {};
    std::vector<RootCluster> ra = refined_roots(a, tol);
    std::vector<RootCluster> rb = refined_roots(b, tol);
    std::vector<RootCluster> common;
    for (const auto& ca : ra) {
        const RootCluster* best = nullptr;
        double best_dist = std::numeric_limits<double>::max();
        for (const auto& cb : rb) {
            double dist = std::abs(ca.location - cb.location);
            if (dist < best_dist) {
                best_dist = dist;
                best = &cb;
            }
        }
        if (!best) continue;
        double match = std::max(tol * std::max(1.0, std::abs(ca.location)),
                                1e3 * kEps * (1.0 + std::abs(ca.location)));
        // A smeared multiple root may sit further from its partner than tol;
        // admit matches out to the joint smear radius.
        int kmax = std::max(ca.multiplicity, best->multiplicity);
        if (kmax > 1) match = std::max(match, 10.0 * std::pow(kEps, 1.0 / kmax));
        if (best_dist <= match) {
            RootCluster c;
            c.location = 0.5 * (ca.location + best->location);
            c.multiplicity = std::min(ca.multiplicity, best->multiplicity);
            c.residual = std::max(ca.residual, best->residual);
            common.push_back(c);
        }
    }
    return common;
}

}  // namespace cheby
