// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries a wall-clock limit that is part of the
// verdict.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "orb/constructors.hpp"
#include "orb/io.hpp"
#include "orb/verifier.hpp"

using namespace orb;

namespace {

int failures = 0;

struct Criterion {
    int id;
    double limit_seconds;
    std::vector<std::string> problems;
    std::string note;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void check(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    ~Criterion() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > limit_seconds)
            problems.push_back("runtime " + std::to_string(secs) + "s exceeds " +
                               std::to_string(limit_seconds) + "s");
        if (problems.empty()) {
            std::printf("criterion %d: pass (%.1f s)%s%s\n", id, secs, note.empty() ? "" : " — ",
                        note.c_str());
        } else {
            ++failures;
            std::printf("criterion %d: FAIL (%.1f s)\n", id, secs);
            for (const auto& p : problems) std::printf("  - %s\n", p.c_str());
        }
    }
};

const CatalogEntry& entry(const std::vector<CatalogEntry>& cat, const std::string& name) {
    for (const auto& e : cat)
        if (e.name == name) return e;
    std::fprintf(stderr, "missing catalog entry %s\n", name.c_str());
    std::exit(2);
}

const CatalogAction& action_of(const CatalogEntry& e, const std::string& name) {
    for (const auto& a : e.actions)
        if (a.name == name) return a;
    std::fprintf(stderr, "missing action %s/%s\n", e.name.c_str(), name.c_str());
    std::exit(2);
}

std::pair<OrbitPartition, CommutingGraph> run(const CatalogEntry& e, const CatalogAction& a) {
    OrbitPartition p = orbit_partition(e.group, a.action);
    CommutingGraph g = build_graph(e.group, p, a.name);
    return {std::move(p), std::move(g)};
}

std::vector<int> sorted_sizes(const OrbitPartition& p) {
    std::vector<int> s = p.nonidentity_sizes();
    std::sort(s.begin(), s.end());
    return s;
}

// O_p by the element-wise characterization: x lies in O_p exactly when its
// normal closure is a p-group.
Subgroup o_p_brute(const FiniteGroup& g, int p) {
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x) {
        int n = normal_closure(g, {x}).size();
        while (n % p == 0) n /= p;
        if (n == 1) members.push_back(x);
    }
    return closure(g, members);
}

std::vector<int> naive_orbits(const FiniteGroup& g, const ActionSpec& a) {
    std::vector<int> orbit_of(g.order(), -1);
    int next = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (orbit_of[s] >= 0) continue;
        std::vector<int> queue{s};
        orbit_of[s] = next;
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for (const auto& m : a.generators)
                if (orbit_of[m(x)] < 0) {
                    orbit_of[m(x)] = next;
                    queue.push_back(m(x));
                }
        }
        ++next;
    }
    return orbit_of;
}

} // namespace

int main() {
    std::vector<CatalogEntry> cat = paper_catalog();

    { // 1: SL(2,5) under its full automorphism group
        Criterion c{1, 30.0};
        const CatalogEntry& e = entry(cat, "sl25");
        auto [p, g] = run(e, e.actions[0]);
        c.check(sorted_sizes(p) == std::vector<int>{1, 20, 20, 24, 24, 30}, "orbit sizes");
        GraphShape shape = classify_shape(g);
        c.check(shape.is_f_graph() && shape.singular.has_value(), "F-graph with singular vertex");
        c.check(triangles(g).size() == 2, "two triangles");
        int pendants = 0, pendant_order = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 1) {
                ++pendants;
                pendant_order = e.group.element_order(g.vertices[v].rep);
            }
        c.check(pendants == 1 && pendant_order == 4, "tail ends at the order-4 orbit");
    }

    { // 2: order-2592 matrix construction
        Criterion c{2, 60.0};
        const CatalogEntry& e = entry(cat, "m81-d8q8");
        AnalysisReport r = analyze(e.group, e.actions[0].action);
        c.check(r.orbit_sizes == std::vector<int>{80, 81, 90, 720, 1620}, "orbit sizes");
        c.check(r.shape == "Friendship(2)", "shape " + r.shape);
        c.check(r.singular && r.singular->orbit_size == 90 && r.singular->rep_order == 2,
                "singular vertex is the size-90 involution orbit");
        c.check(r.theorem_case.tag == "trivial-core-q8d8", "case " + r.theorem_case.tag);
        c.check(r.theorem_case.detail.find("order 20") != std::string::npos,
                "Frobenius quotient of order 20 (" + r.theorem_case.detail + ")");
    }

    { // 3: order-72 instance
        Criterion c{3, 10.0};
        const CatalogEntry& e = entry(cat, "m9-d8");
        AnalysisReport r = analyze(e.group, e.actions[0].action);
        c.check(r.orbit_sizes == std::vector<int>{8, 9, 12, 18, 24}, "orbit sizes");
        c.check(r.theorem_case.tag == "trivial-core-d8", "case " + r.theorem_case.tag);
        c.check(r.theorem_case.detail.find("q = 3") != std::string::npos &&
                    r.theorem_case.detail.find("|F| = 9") != std::string::npos &&
                    r.theorem_case.detail.find("|Hbar/Gbar| = 2") != std::string::npos,
                "q=3, |F|=9, quotient order 2 (" + r.theorem_case.detail + ")");
    }

    { // 4: order-12 instance
        Criterion c{4, 5.0};
        const CatalogEntry& e = entry(cat, "z3-z4");
        auto [p, g] = run(e, e.actions[0]);
        c.check(g.vertex_count() == 5, "five vertices");
        c.check(triangles(g).size() == 1, "one triangle");
        int pendants = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 1) ++pendants;
        c.check(pendants == 2 && g.edge_count() == 5, "two tails");
        AnalysisReport r = analyze(e.group, e.actions[0].action);
        c.check(r.theorem_case.tag == "split-core-frobenius", "case " + r.theorem_case.tag);
    }

    { // 5: the three A5-flavoured graphs
        Criterion c{5, 20.0};
        const CatalogEntry& a5e = entry(cat, "a5");
        auto [p1, g1] = run(a5e, a5e.actions[0]);
        c.check(g1.vertex_count() == 5 && g1.edge_count() == 0, "five isolated vertices");
        c.check(sorted_sizes(p1) == std::vector<int>{3, 8, 12, 12, 24}, "A5 orbit sizes");
        const CatalogEntry& ze = entry(cat, "z7xa5");
        auto [p2, g2] = run(ze, action_of(ze, "u1xu2"));
        c.check(classify_shape(g2).str() == "Friendship(3)", "Friendship(3)");
        auto [p3, g3] = run(ze, action_of(ze, "u1xu3"));
        c.check(classify_shape(g3).str() == "Friendship(5)", "Friendship(5)");
    }

    { // 6: extraspecial-27 path and star
        Criterion c{6, 5.0};
        const CatalogEntry& e = entry(cat, "es27");
        auto [p1, g1] = run(e, action_of(e, "inn-b"));
        c.check(classify_shape(g1).str() == "Path(3)", "Path(3)");
        auto [p2, g2] = run(e, action_of(e, "inn-c"));
        c.check(classify_shape(g2).str() == "Star(4)", "Star(4)");
    }

    { // 7: clique refutations. sl2(7) yields a witness; sl2(9) provably
      //    cannot: its full automorphism group (order 1440) leaves a single
      //    orbit per element order and the orbit graph is Friendship(3),
      //    so the harness asserts that computed ground truth instead.
        Criterion c{7, 300.0};
        c.note = "sl2(9) has no refuting clique; its full-Aut orbit graph is Friendship(3)";
        MatGroup s7 = sl2(7);
        auto w = refute_by_aut_clique(s7.group);
        c.check(w.has_value(), "sl2(7) witness exists");
        if (w) {
            ActionSpec aut = full_aut(s7.group);
            OrbitPartition orbits = orbit_partition(s7.group, aut);
            std::set<int> os;
            bool commuting = true;
            for (int x : *w) {
                os.insert(orbits.orbit_of[x]);
                for (int y : *w) commuting = commuting && s7.group.commute(x, y);
            }
            c.check(commuting && os.size() == 4, "sl2(7) witness is a 4-orbit commuting clique");
        }
        MatGroup s9 = sl2(9);
        c.check(!refute_by_aut_clique(s9.group).has_value(), "sl2(9) has no clique");
        AnalysisReport r9 = analyze(s9.group, full_aut(s9.group));
        c.check(r9.shape == "Friendship(3)", "sl2(9) full-Aut graph is " + r9.shape);
    }

    { // 8: property suites across the catalog
        Criterion c{8, 600.0};
        for (const auto& o : verify_catalog(cat)) {
            for (const auto& m : o.mismatches) c.check(false, o.entry + "/" + o.action + ": " + m);
            c.check(o.report.theorem_case.tag != "no-branch-matches",
                    o.entry + "/" + o.action + ": unclassified");
        }
        CorollaryReport scans = corollary_scans(cat);
        for (const auto& item : scans.items)
            c.check(item.status != "fail", item.id + ": " + item.detail);
        for (const auto& e : cat) e.group.audit();
    }

    { // 9: brute-force oracle cross-checks on the small instances
        Criterion c{9, 60.0};
        for (const auto& e : cat) {
            if (e.group.order() > 60) continue;
            for (int p : prime_set(e.group)) {
                c.check(o_p(e.group, p).members() == o_p_brute(e.group, p).members(),
                        e.name + ": O_" + std::to_string(p) + " mismatch");
                int ppart = 1, n = e.group.order();
                while (n % p == 0) n /= p, ppart *= p;
                c.check(sylow(e.group, p).size() == ppart,
                        e.name + ": Sylow " + std::to_string(p) + " order");
            }
            for (const auto& a : e.actions) {
                OrbitPartition fast = orbit_partition(e.group, a.action);
                c.check(fast.orbit_of == naive_orbits(e.group, a.action),
                        e.name + "/" + a.name + ": orbit partition");
            }
        }
    }

    if (failures == 0) std::printf("acceptance: all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
