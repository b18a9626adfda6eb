#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cheby/chebyshev.hpp"

namespace cheby {

/// Census of the structures that determine deg C_p:
///   m, n, r  distinct roots of p of multiplicity 1, 2, >= 3
///   s, B     count of distinct special critical points / sum of their
///            multiplicities as roots of p'  (a special critical point is a
///            c with p'(c) = 0 = p''(c) but p(c) != 0)
/// and the resulting degree prediction 3(m+n+r) - 2 - B + s.
struct DegreeBreakdown {
    int m = 0;
    int n = 0;
    int r = 0;
    int s = 0;
    int B = 0;
    int predicted = 0;
    int actual = 0;
    bool agrees = false;
};

/// Special critical points of p with their multiplicities as roots of p'.
/// Throws AmbiguousClassification when |p''(c)| falls in the gray zone
/// around the zero threshold where the answer would be a coin flip.
std::vector<RootCluster> special_critical_points(const Polynomial& p,
                                                 double tol = kDefaultClusterTol);

/// Fill a DegreeBreakdown for p: counts from roots(p) and
/// special_critical_points(p), actual from chebyshev_map(p).degree.
DegreeBreakdown predicted_degree(const Polynomial& p, double tol = kDefaultClusterTol);

/// One corpus member with its ground truth known exactly from construction.
struct CorpusEntry {
    Polynomial p;
    std::string kind;  // generator family
    int m = 0, n = 0, r = 0, s = 0, B = 0;
    int expected_degree = 0;  // 3(m+n+r) - 2 - B + s from the exact census
};

/// Deterministic corpus over degrees 2..6 mixing: generic simple roots,
/// prescribed multiplicity patterns, two-root binomials (z-a)^j (z-b)^k,
/// unicritical polynomials, and polynomials integrated from a prescribed p'
/// so as to carry special critical points.  Root separation is kept >= ~0.8
/// so cluster identification is never in doubt.
std::vector<CorpusEntry> make_degree_corpus(std::uint64_t seed, int count);

struct DegreeAuditRow {
    int index = 0;
    std::string kind;
    int degree = 0;
    DegreeBreakdown breakdown;
    bool census_matches_truth = false;  // numeric m,n,r,s,B equal the constructed ones
    bool ambiguous = false;
    std::string note;
};

struct DegreeAuditReport {
    std::vector<DegreeAuditRow> rows;
    int disagreements = 0;      // predicted != actual among non-ambiguous rows
    int census_mismatches = 0;  // numeric census != constructed census
    int ambiguous = 0;
    int degree_five_count = 0;  // impossible-degree check, must stay 0
    bool pass = false;
};

/// Run the degree prediction over the corpus (workers > 1 splits the corpus;
/// the report is assembled in index order so the output is identical for any
/// worker count).
DegreeAuditReport degree_audit(const std::vector<CorpusEntry>& corpus,
                               double tol = kDefaultClusterTol, int workers = 1);

/// Report writers: one JSON object per line / CSV with header
/// degree,m,n,r,s,B,predicted,actual,agrees.
void write_degree_report_jsonl(const DegreeAuditReport& report, std::ostream& out);
void write_degree_report_csv(const DegreeAuditReport& report, std::ostream& out);

}  // namespace cheby
