#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "orb/constructors.hpp"
#include "orb/verifier.hpp"

using namespace orb;

namespace {

const std::vector<CatalogEntry>& catalog() {
    static std::vector<CatalogEntry> c = paper_catalog();
    return c;
}

} // namespace

TEST_CASE("classifier lands on the expected branch for every catalog action") {
    for (const auto& e : catalog()) {
        for (const auto& a : e.actions) {
            INFO(e.name, "/", a.name);
            AnalysisReport r = analyze(e.group, a.action);
            CHECK(r.theorem_case.tag != "no-branch-matches");
            REQUIRE(a.expected.theorem_case.has_value());
            CHECK(r.theorem_case.tag == *a.expected.theorem_case);
        }
    }
}

TEST_CASE("checklist passes wherever it applies and is empty elsewhere") {
    for (const auto& e : catalog()) {
        for (const auto& a : e.actions) {
            INFO(e.name, "/", a.name);
            AnalysisReport r = analyze(e.group, a.action);
            bool applies = r.singular.has_value() && r.pi.size() >= 2 &&
                           r.shape != "NotConnected" && r.shape != "NotFGraph";
            if (!applies) {
                CHECK(r.checklist.empty());
                continue;
            }
            CHECK_FALSE(r.checklist.empty());
            for (const auto& item : r.checklist) {
                INFO("item ", item.id, ": ", item.witness);
                CHECK(item.status != "fail");
            }
        }
    }
}

TEST_CASE("analysis reports are deterministic and mirror the graph") {
    const CatalogEntry& e = catalog()[0]; // z3-z4
    AnalysisReport r1 = analyze(e.group, e.actions[0].action);
    AnalysisReport r2 = analyze(e.group, e.actions[0].action);
    CHECK(report_json(r1) == report_json(r2));
    CHECK(r1.orbit_sizes == std::vector<int>{1, 2, 2, 2, 4});
    CHECK(r1.shape == "FGraphWithSingular");
    REQUIRE(r1.singular.has_value());
    CHECK(r1.singular->rep_order == 2);
    CHECK(r1.singular->orbit_size == 1);
    CHECK(r1.theorem_case.tag == "split-core-frobenius");
    std::string j = report_json(r1);
    CHECK(j.find("\"order\": 12") != std::string::npos);
    CHECK(j.find("split-core-frobenius") != std::string::npos);
}

TEST_CASE("a commuting quadruple in distinct orbits refutes sl(2,7)") {
    MatGroup s = sl2(7);
    auto w = refute_by_aut_clique(s.group);
    REQUIRE(w.has_value());
    ActionSpec aut = full_aut(s.group);
    OrbitPartition orbits = orbit_partition(s.group, aut);
    std::set<int> os;
    for (int x : *w) {
        CHECK(x != 0);
        os.insert(orbits.orbit_of[x]);
        for (int y : *w) CHECK(s.group.commute(x, y));
    }
    CHECK(os.size() == 4);
}

TEST_CASE("sl(2,9) admits no refuting clique: its full-Aut graph is a friendship graph") {
    // The full automorphism group has order 1440, twice the subgroup
    // generated by inner maps and the field automorphism: the diagonal
    // automorphism (conjugation by diag(a,1), a a nonsquare) fuses the two
    // classes of order-3 elements, and likewise collapses each element
    // order to a single orbit. The resulting orbit graph is Friendship(3),
    // so no four pairwise-commuting elements can lie in four distinct
    // orbits and refute_by_aut_clique correctly returns nothing.
    MatGroup s = sl2(9);
    CHECK_FALSE(refute_by_aut_clique(s.group).has_value());
    ActionSpec aut = full_aut(s.group);
    std::vector<std::vector<int>> perms;
    for (const auto& a : aut.generators) perms.push_back(a.image);
    CHECK(permutation_group(720, perms, "aut-sl29", 5000).group.order() == 1440);
    OrbitPartition orbits = orbit_partition(s.group, aut);
    // one orbit per element order: sizes 1,80,80,90,144,144,180
    std::map<int, std::set<int>> by_order;
    for (int x = 1; x < 720; ++x)
        by_order[s.group.element_order(x)].insert(orbits.orbit_of[x]);
    for (const auto& [o, os] : by_order) CHECK(os.size() == 1);
    AnalysisReport r = analyze(s.group, aut);
    CHECK(r.shape == "Friendship(3)");
    CHECK(r.theorem_case.tag == "quasisimple-other");
    CHECK(r.theorem_case.unwitnessed);
}

TEST_CASE("no refuting clique exists in the positive catalog witnesses") {
    // groups whose full-Aut orbit graph is an F-graph can have no such clique
    CHECK_FALSE(refute_by_aut_clique(sl2(5).group).has_value());
    CHECK_FALSE(refute_by_aut_clique(dicyclic12()).has_value());
}

TEST_CASE("corollary scans pass over the whole catalog") {
    CorollaryReport rep = corollary_scans(catalog());
    std::map<std::string, int> status_count;
    for (const auto& item : rep.items) {
        INFO(item.id, ": ", item.detail);
        CHECK(item.status != "fail");
        ++status_count[item.status];
    }
    CHECK(rep.all_pass());
    CHECK(status_count["pass"] > 0);
    // the classic-graph scan must have produced a verdict for every
    // nonabelian multi-prime entry
    int c2 = 0;
    for (const auto& item : rep.items)
        if (item.id.rfind("C2:", 0) == 0 && item.status == "pass") ++c2;
    CHECK(c2 >= 5);
}

TEST_CASE("verify_catalog finds no mismatch, with or without threads") {
    std::vector<VerifyOutcome> serial = verify_catalog(catalog(), 1);
    for (const auto& o : serial) {
        INFO(o.entry, "/", o.action);
        for (const auto& m : o.mismatches) INFO("  ", m);
        CHECK(o.mismatches.empty());
    }
    std::vector<VerifyOutcome> parallel = verify_catalog(catalog(), 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].entry == parallel[i].entry);
        CHECK(serial[i].action == parallel[i].action);
        CHECK(report_json(serial[i].report) == report_json(parallel[i].report));
    }
}
