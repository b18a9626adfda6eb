#include "cheby/degree.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <thread>

namespace cheby {

namespace {

// Threshold against which a value of q at c counts as zero: tol * max(1,|c|)^deg
// times the coefficient scale of q.
double zero_threshold(const Polynomial& q, Complex c, double tol) {
    return tol * std::pow(std::max(1.0, std::abs(c)), q.degree()) *
           std::max(q.max_coefficient_magnitude(), 1e-300);
}

}  // namespace

std::vector<RootCluster> special_critical_points(const Polynomial& p, double tol) {
    if (p.degree() < 2) return {};
    Polynomial dp = p.derivative();
    Polynomial ddp = dp.derivative();
    std::vector<RootCluster> out;
    for (const auto& c : refined_roots(dp, tol)) {
        double pv = std::abs(p(c.location));
        double pth = zero_threshold(p, c.location, tol);
        if (pv > 0.1 * pth && pv < 10.0 * pth)
            throw AmbiguousClassification("cannot decide whether the critical point is a root of p");
        if (pv <= pth) continue;  // multiple root of p, not special
        if (ddp.is_zero()) continue;
        double sv = std::abs(ddp(c.location));
        double sth = zero_threshold(ddp, c.location, tol);
        bool flat = sv <= sth;
        if (!flat && sv < 10.0 * sth)
            throw AmbiguousClassification("p'' at the critical point sits in the threshold gray zone");
        // Structure check: p''(c) = 0 exactly when c is a multiple root of p'.
        if (flat != (c.multiplicity >= 2))
            throw AmbiguousClassification("critical cluster multiplicity and p'' threshold disagree");
        if (flat) out.push_back(c);
    }
    return out;
}

DegreeBreakdown predicted_degree(const Polynomial& p, double tol) {
    if (p.degree() < 2) throw DegenerateInput("degree prediction needs degree >= 2");
    DegreeBreakdown b;
    for (const auto& c : roots(p, tol)) {
        if (c.multiplicity == 1)
            ++b.m;
        else if (c.multiplicity == 2)
            ++b.n;
        else
            ++b.r;
    }
    for (const auto& c : special_critical_points(p, tol)) {
        ++b.s;
        b.B += c.multiplicity;
    }
    b.predicted = 3 * (b.m + b.n + b.r) - 2 - b.B + b.s;
    b.actual = chebyshev_map(p).degree;
    b.agrees = b.predicted == b.actual;
    return b;
}

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }
    int pick(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Complex point(double radius) { return {uniform(-radius, radius), uniform(-radius, radius)}; }
};

// Sampled points pairwise separated by at least `sep`.
std::vector<Complex> separated_points(Rng& rng, int count, double sep) {
    std::vector<Complex> pts;
    while (static_cast<int>(pts.size()) < count) {
        Complex cand = rng.point(2.0);
        bool ok = true;
        for (const auto& q : pts)
            if (std::abs(cand - q) < sep) ok = false;
        if (ok) pts.push_back(cand);
    }
    return pts;
}

// Antiderivative of q with constant term zero.
Polynomial integrate(const Polynomial& q) {
    std::vector<Complex> out(q.coefficients().size() + 1);
    for (size_t i = 0; i < q.coefficients().size(); ++i)
        out[i + 1] = q.coefficients()[i] / static_cast<double>(i + 1);
    return Polynomial{std::move(out)};
}

// Partitions of d into parts >= 1 listed descending, e.g. 4 -> {4},{3,1},{2,2},{2,1,1},{1,1,1,1}.
std::vector<std::vector<int>> partitions(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

CorpusEntry from_multiplicities(Rng& rng, const std::vector<int>& mult, const char* kind) {
    CorpusEntry e;
    e.kind = kind;
    std::vector<Complex> pts = separated_points(rng, static_cast<int>(mult.size()), 0.9);
    std::vector<std::pair<Complex, int>> roots;
    for (size_t i = 0; i < mult.size(); ++i) {
        roots.emplace_back(pts[i], mult[i]);
        if (mult[i] == 1)
            ++e.m;
        else if (mult[i] == 2)
            ++e.n;
        else
            ++e.r;
    }
    e.p = Polynomial::from_roots(roots);
    // Root products have no special critical points with probability one, but
    // the census must be exact: reject draws whose critical points come
    // suspiciously close to flat (cheap, and keeps the ground truth honest).
    e.s = 0;
    e.B = 0;
    e.expected_degree = 3 * (e.m + e.n + e.r) - 2;
    return e;
}

bool inflection_too_close(const Polynomial& p) {
    // True when some simple critical point nearly annihilates p'' as well.
    Polynomial dp = p.derivative();
    Polynomial ddp = dp.derivative();
    for (const auto& c : refined_roots(dp)) {
        if (c.multiplicity >= 2) continue;
        double sv = std::abs(ddp(c.location));
        if (sv <= 1e-3 * std::max(1.0, ddp.max_coefficient_magnitude())) return true;
    }
    return false;
}

}  // namespace

std::vector<CorpusEntry> make_degree_corpus(std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<CorpusEntry> corpus;
    int turn = 0;
    while (static_cast<int>(corpus.size()) < count) {
        int which = turn++ % 6;
        if (which == 0) {  // generic simple roots
            int d = rng.pick(2, 6);
            corpus.push_back(from_multiplicities(rng, std::vector<int>(d, 1), "generic"));
        } else if (which == 1) {  // random multiplicity pattern, >= 2 distinct roots
            int d = rng.pick(3, 6);
            auto parts = partitions(d);
            std::vector<std::vector<int>> usable;
            for (const auto& pt : parts)
                if (pt.size() >= 2 && pt[0] >= 2) usable.push_back(pt);
            corpus.push_back(
                from_multiplicities(rng, usable[static_cast<size_t>(rng.pick(0, static_cast<int>(usable.size()) - 1))],
                                    "multiplicity"));
        } else if (which == 2) {  // exactly two distinct roots: degree is always 4
            int d = rng.pick(2, 6);
            int j = rng.pick(1, d - 1);
            corpus.push_back(from_multiplicities(rng, {std::max(j, d - j), std::min(j, d - j)}, "two-root"));
        } else if (which == 3) {  // unicritical (z-a)^d + b
            int d = rng.pick(2, 6);
            Complex a = rng.point(1.5);
            Complex b{0.0};
            while (std::abs(b) < 0.4) b = rng.point(1.5);
            CorpusEntry e;
            e.kind = "unicritical";
            e.p = Polynomial::from_roots({{a, d}}) + Polynomial::constant(b);
            e.m = d;
            e.s = d >= 3 ? 1 : 0;
            e.B = d >= 3 ? d - 1 : 0;
            e.expected_degree = 3 * d - 2 - e.B + e.s;
            corpus.push_back(e);
        } else if (which == 4 || which == 5) {
            // Integrate a prescribed p' so the critical structure is exact.
            // which == 5 additionally pins a double root of p at one simple
            // critical point.
            bool with_double = which == 5;
            int dprime = rng.pick(with_double ? 3 : 2, 5);
            auto parts = partitions(dprime);
            std::vector<std::vector<int>> usable;
            for (const auto& pt : parts) {
                bool has_multiple = pt[0] >= 2;
                bool has_simple = pt.back() == 1;
                if (has_multiple && (!with_double || has_simple)) usable.push_back(pt);
            }
            if (usable.empty()) continue;
            const auto& pat = usable[static_cast<size_t>(rng.pick(0, static_cast<int>(usable.size()) - 1))];
            std::vector<Complex> pts = separated_points(rng, static_cast<int>(pat.size()), 0.9);
            std::vector<std::pair<Complex, int>> crit;
            for (size_t i = 0; i < pat.size(); ++i) crit.emplace_back(pts[i], pat[i]);
            Polynomial dp = Polynomial::from_roots(crit, Complex{static_cast<double>(dprime + 1)});
            Polynomial anti = integrate(dp);
            CorpusEntry e;
            e.kind = with_double ? "double+special" : "special";
            int d = dprime + 1;
            if (with_double) {
                Complex beta = crit.back().first;  // a simple critical point
                e.p = anti - Polynomial::constant(anti(beta));
                e.n = 1;
                e.m = d - 2;
            } else {
                Complex k{0.0};
                bool ok = false;
                for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
                    k = rng.point(2.0) + Complex{0.0, 0.5};
                    ok = true;
                    for (const auto& [c, mult] : crit)
                        if (std::abs(anti(c) + k) < 0.3) ok = false;
                }
                if (!ok) continue;
                e.p = anti + Polynomial::constant(k);
                e.m = d;
            }
            // All critical values away from zero except the pinned one.
            bool clean = true;
            for (size_t i = 0; i + (with_double ? 1 : 0) < crit.size(); ++i)
                if (std::abs(e.p(crit[i].first)) < 0.2) clean = false;
            if (!clean) continue;
            for (const auto& [c, mult] : crit) {
                if (mult >= 2) {
                    ++e.s;
                    e.B += mult;
                }
            }
            e.expected_degree = 3 * (e.m + e.n + e.r) - 2 - e.B + e.s;
            corpus.push_back(e);
        }
        if (!corpus.empty() && (corpus.back().kind == "generic" || corpus.back().kind == "multiplicity") &&
            inflection_too_close(corpus.back().p))
            corpus.pop_back();  // resample: accidental near-special structure
    }
    return corpus;
}

DegreeAuditReport degree_audit(const std::vector<CorpusEntry>& corpus, double tol, int workers) {
    DegreeAuditReport report;
    report.rows.resize(corpus.size());
    if (workers < 1) workers = 1;

    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            DegreeAuditRow& row = report.rows[i];
            row.index = static_cast<int>(i);
            row.kind = corpus[i].kind;
            row.degree = corpus[i].p.degree();
            try {
                row.breakdown = predicted_degree(corpus[i].p, tol);
                const CorpusEntry& e = corpus[i];
                row.census_matches_truth = row.breakdown.m == e.m && row.breakdown.n == e.n &&
                                           row.breakdown.r == e.r && row.breakdown.s == e.s &&
                                           row.breakdown.B == e.B;
                if (!row.census_matches_truth) row.note = "numeric census differs from construction";
            } catch (const AmbiguousClassification& ex) {
                row.ambiguous = true;
                row.note = ex.what();
            } catch (const std::exception& ex) {
                row.note = std::string("error: ") + ex.what();
            }
        }
    };

    if (workers == 1 || corpus.size() < 2) {
        work(0, corpus.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (corpus.size() + workers - 1) / static_cast<size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            size_t b = static_cast<size_t>(w) * chunk;
            size_t e = std::min(corpus.size(), b + chunk);
            if (b >= e) break;
            pool.emplace_back(work, b, e);
        }
        for (auto& t : pool) t.join();
    }

    for (const auto& row : report.rows) {
        if (row.ambiguous) {
            ++report.ambiguous;
            continue;
        }
        if (!row.note.empty() && !row.census_matches_truth) ++report.census_mismatches;
        if (!row.breakdown.agrees) ++report.disagreements;
        if (row.breakdown.actual == 5) ++report.degree_five_count;
    }
    report.pass = report.disagreements == 0 && report.census_mismatches == 0 &&
                  report.degree_five_count == 0;
    return report;
}

void write_degree_report_jsonl(const DegreeAuditReport& report, std::ostream& out) {
    for (const auto& row : report.rows) {
        const DegreeBreakdown& b = row.breakdown;
        out << "{\"index\":" << row.index << ",\"kind\":\"" << row.kind << "\",\"degree\":" << row.degree
            << ",\"m\":" << b.m << ",\"n\":" << b.n << ",\"r\":" << b.r << ",\"s\":" << b.s
            << ",\"B\":" << b.B << ",\"predicted\":" << b.predicted << ",\"actual\":" << b.actual
            << ",\"agrees\":" << (b.agrees ? "true" : "false")
            << ",\"ambiguous\":" << (row.ambiguous ? "true" : "false") << "}\n";
    }
}

void write_degree_report_csv(const DegreeAuditReport& report, std::ostream& out) {
    out << "degree,m,n,r,s,B,predicted,actual,agrees\n";
    for (const auto& row : report.rows) {
        const DegreeBreakdown& b = row.breakdown;
        out << row.degree << ',' << b.m << ',' << b.n << ',' << b.r << ',' << b.s << ',' << b.B << ','
            << b.predicted << ',' << b.actual << ',' << (b.agrees ? 1 : 0) << '\n';
    }
}

}  // namespace cheby
