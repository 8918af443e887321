#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orb/action.hpp"
#include "orb/catalog.hpp"
#include "orb/graph.hpp"
#include "orb/group.hpp"
#include "orb/structure.hpp"

namespace orb {

/// Outcome of matching an instance against the classification branches.
/// Tags:
///   not-applicable            graph not an F-graph, or a single-prime group
///   two-elementary-factors    no singular vertex; G = P x Q, both elementary abelian
///   trivial-core-d8           O_p = 1, Sylow 2 dihedral of order 8
///   trivial-core-q8d8         O_p = 1, Sylow 2 extraspecial of order 32
///   core-frobenius-quotient   O_p = F(G) self-centralizing, G/F near-Frobenius
///   core-sl24-nonsplit        O_p = F(G) self-centralizing, G/F = SL(2,4)
///   core-sl24-p5              same with p = 5
///   quasisimple-sl25          G quasisimple, G = SL(2,5)
///   quasisimple-other         G quasisimple but not an identified witness
///   core-times-simple         G = O_p x E(G) with simple E(G) = PSL(2,5)
///   split-core-frobenius      1 != O_p != F(G); G/O_p Frobenius over F/O_p
///   no-branch-matches         every branch test failed (counterexample candidate)
struct TheoremCase {
    std::string tag;
    std::string detail;        // witnesses in words (orders, primes, quotients)
    bool unwitnessed = false;  // branch has no catalog witness; verified negatively
};

struct ChecklistItem {
    std::string id;      // "a", "c", "f", "g", "h", "i", "j", "l", "m"
    std::string status;  // "pass" | "fail" | "sampled"
    std::string witness; // failure witness or cap note
};

struct SingularData {
    int vertex = -1;
    int rep = -1;
    int rep_order = 0;
    int orbit_size = 0;
};

struct AnalysisReport {
    std::string group_name;
    std::string action_name;
    int group_order = 0;
    std::vector<int> orbit_sizes; // ascending, identity excluded
    std::string shape;
    std::optional<SingularData> singular;
    std::vector<int> pi;
    int center_order = 1;
    int fitting_order = 1;
    std::vector<std::pair<int, int>> core_orders; // (p, |O_p|)
    StructureFlags flags;
    TheoremCase theorem_case;
    std::vector<ChecklistItem> checklist; // empty unless singular and |pi| >= 2
    int triangle_count = 0;
};

AnalysisReport analyze(const FiniteGroup& g, const ActionSpec& action);

/// Deterministic JSON rendering of a report (byte-stable).
std::string report_json(const AnalysisReport& report);

TheoremCase classify_theorem_case(const FiniteGroup& g, const ActionSpec& action,
                                  const CommutingGraph& graph, const OrbitPartition& orbits);

std::vector<ChecklistItem> prop2_checklist(const FiniteGroup& g, const ActionSpec& action,
                                           const OrbitPartition& orbits,
                                           const CommutingGraph& graph);

/// Four pairwise-commuting nonidentity elements lying in four distinct
/// full-Aut orbits. Such a clique survives every refinement of the orbit
/// partition, so no A <= Aut(G) can make the orbit graph an F-graph.
std::optional<std::array<int, 4>> refute_by_aut_clique(const FiniteGroup& g,
                                                       long long budget = 50'000'000);

struct ScanItem {
    std::string id;     // "C1:<entry>", "C2:<entry>", ...
    std::string status; // "pass" | "fail" | "skip"
    std::string detail;
};

struct CorollaryReport {
    std::vector<ScanItem> items;
    bool all_pass() const;
};

/// Batch scans for the inner-action structure claim (C1), the classic
/// commuting graph claim (C2), the acyclic-star claim (C3) and the coprime
/// claim (C5) over the catalog. Entries whose group order exceeds
/// inner_scan_bound skip the C1 candidate enumeration.
CorollaryReport corollary_scans(const std::vector<CatalogEntry>& entries,
                                int inner_scan_bound = 500);

struct VerifyOutcome {
    std::string entry;
    std::string action;
    AnalysisReport report;
    std::vector<std::string> mismatches; // empty means the expectations hold
};

/// analyze() every catalog action and diff the result against its recorded
/// expectations. threads > 1 analyzes entries concurrently (same output).
std::vector<VerifyOutcome> verify_catalog(const std::vector<CatalogEntry>& entries,
                                          int threads = 1);

} // namespace orb
