#include "orb/verifier.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "orb/constructors.hpp"

namespace orb {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(int n, int p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

bool is_elementary_abelian(const Subgroup& h, int p) {
    if (h.is_trivial()) return false;
    for (int x : h.members()) {
        int o = h.parent().element_order(x);
        if (o != 1 && o != p) return false;
        for (int y : h.members())
            if (!h.parent().commute(x, y)) return false;
    }
    return true;
}

Automorphism conj_map(const FiniteGroup& g, int h) {
    Automorphism m;
    m.image.resize(g.order());
    for (int x = 0; x < g.order(); ++x) m.image[x] = g.conj(x, h);
    return m;
}

/// Restriction of an element map to an invariant subgroup, re-indexed by
/// member position. Throws BadAction if the subgroup is not stabilized.
std::vector<int> restrict_to(const Subgroup& h, const std::vector<int>& image) {
    std::vector<int> pos(h.parent().order(), -1);
    for (int i = 0; i < h.size(); ++i) pos[h.members()[i]] = i;
    std::vector<int> out(h.size());
    for (int i = 0; i < h.size(); ++i) {
        int y = image[h.members()[i]];
        if (pos[y] < 0) throw BadAction("restriction: subgroup is not invariant");
        out[i] = pos[y];
    }
    return out;
}

/// Image of the acting group on an invariant subgroup, together with the
/// image of the inner action, as one permutation group and a subgroup of it.
struct ActionImage {
    PermGroup hbar;
    std::vector<int> gbar_members; // indices inside hbar
};

ActionImage action_image_on(const FiniteGroup& g, const ActionSpec& action, const Subgroup& f) {
    std::vector<std::vector<int>> inner;
    for (int x : g.greedy_generators()) inner.push_back(restrict_to(f, conj_map(g, x).image));
    std::vector<std::vector<int>> all = inner;
    for (const auto& a : action.generators) all.push_back(restrict_to(f, a.image));
    ActionImage img{permutation_group(f.size(), all, "hbar"), {}};
    std::vector<int> gens;
    for (const auto& p : inner) gens.push_back(img.hbar.index_of(p));
    img.gbar_members = closure(img.hbar.group, gens).members();
    return img;
}

std::map<int, int> order_census(const FiniteGroup& g) {
    std::map<int, int> c;
    for (int x = 0; x < g.order(); ++x) ++c[g.element_order(x)];
    return c;
}

Subgroup image_subgroup(const QuotientGroup& q, const Subgroup& h) {
    std::vector<int> ids;
    for (int x : h.members()) ids.push_back(q.coset_of[x]);
    return Subgroup(q.quotient, ids);
}

TheoremCase fail_case(std::string detail) {
    return TheoremCase{"no-branch-matches", std::move(detail), false};
}

/// No singular vertex: with two primes the graph must be the triangle on
/// P-minus-1, Q-minus-1 and the mixed orbit, with both Sylows normal and
/// elementary abelian.
TheoremCase classify_no_singular(const FiniteGroup& g, const CommutingGraph& graph,
                                 const OrbitPartition& orbits) {
    std::vector<int> pi = prime_set(g);
    if (pi.size() != 2) return fail_case("no singular vertex but |pi| != 2");
    GraphShape shape = classify_shape(graph);
    if (shape.str() != "Cycle(3)")
        return fail_case("no singular vertex with |pi| >= 2 but shape " + shape.str());
    int p = pi[0], q = pi[1];
    Subgroup sp = sylow(g, p), sq = sylow(g, q);
    if (o_p(g, p).size() != sp.size() || o_p(g, q).size() != sq.size())
        return fail_case("a Sylow subgroup is not normal");
    if (!is_elementary_abelian(sp, p) || !is_elementary_abelian(sq, q))
        return fail_case("a Sylow subgroup is not elementary abelian");
    // the three orbits are P\1, Q\1 and everything else
    std::set<int> po, qo, mo;
    for (int x = 1; x < g.order(); ++x) {
        int o = orbits.orbit_of[x];
        if (sp.contains(x)) po.insert(o);
        else if (sq.contains(x)) qo.insert(o);
        else mo.insert(o);
    }
    if (po.size() != 1 || qo.size() != 1 || mo.size() != 1)
        return fail_case("orbits do not split as P\\1, Q\\1, rest");
    std::ostringstream d;
    d << "G = " << sp.size() << " x " << sq.size() << ", orbits " << sp.size() - 1 << "/"
      << sq.size() - 1 << "/" << g.order() - sp.size() - sq.size() + 1;
    return TheoremCase{"two-elementary-factors", d.str(), false};
}

TheoremCase classify_trivial_core(const FiniteGroup& g, const ActionSpec& action, int p) {
    if (p != 2) return fail_case("trivial p-core but p != 2");
    Subgroup f = fitting(g);
    Subgroup s = sylow(g, 2);
    if (f.is_trivial()) return fail_case("trivial Fitting subgroup");
    long long prod = 1LL * f.size() * s.size();
    if (prod != g.order()) return fail_case("G != F(G) * S");
    std::vector<int> fq = prime_set(as_group(f).group);
    if (fq.size() != 1) return fail_case("F(G) is not a q-group");
    int q = fq[0];
    if (!is_elementary_abelian(f, q)) return fail_case("F(G) not elementary abelian");

    ActionImage img = action_image_on(g, action, f);
    int hbar = img.hbar.group.order();
    int gbar = int(img.gbar_members.size());
    if (hbar % gbar != 0) return fail_case("inner image does not divide action image");
    int quot = hbar / gbar;

    std::map<int, int> census = order_census(as_group(s).group);
    if (s.size() == 8 && census[2] == 5 && census[4] == 2) {
        if ((q != 3 && q != 7) || f.size() != q * q)
            return fail_case("dihedral Sylow 2 but |F(G)| != q^2 for q in {3,7}");
        if (quot != q - 1) return fail_case("image quotient order != q-1");
        std::ostringstream d;
        d << "S = D8, q = " << q << ", |F| = " << f.size() << ", |Hbar/Gbar| = " << quot;
        return TheoremCase{"trivial-core-d8", d.str(), false};
    }
    if (s.size() == 32 && is_extraspecial(s) && census[4] == 20) {
        if (f.size() != 81) return fail_case("extraspecial Sylow 2 but |F(G)| != 3^4");
        if (quot != 10 && quot != 20) return fail_case("image quotient order not 10 or 20");
        Subgroup gb(img.hbar.group, img.gbar_members);
        QuotientGroup hq = quotient(img.hbar.group, gb);
        if (!is_frobenius_with_kernel(hq.quotient, sylow(hq.quotient, 5)))
            return fail_case("image quotient is not Frobenius over its 5-part");
        std::ostringstream d;
        d << "S = Q8*D8, |F| = 81, Hbar/Gbar Frobenius of order " << quot;
        return TheoremCase{"trivial-core-q8d8", d.str(), false};
    }
    return fail_case("trivial p-core but Sylow 2 is neither D8 nor Q8*D8");
}

TheoremCase classify_self_centralizing_core(const FiniteGroup& g, const OrbitPartition& orbits,
                                            int p, int z, const Subgroup& f) {
    QuotientGroup q = quotient(g, f);
    const FiniteGroup& gq = q.quotient;
    if (gq.order() == 60 && is_isomorphic(gq, alt(5).group)) {
        if (p == 5) {
            if (!is_elementary_abelian(f, 5)) return fail_case("SL(2,4) quotient, p=5, F not elementary abelian");
            return TheoremCase{"core-sl24-p5", "G/F = SL(2,4), p = 5", true};
        }
        // center must be exactly the singular orbit plus the identity
        Subgroup zc = center(g);
        std::set<int> zo{0};
        for (int x = 1; x < g.order(); ++x)
            if (orbits.orbit_of[x] == orbits.orbit_of[z]) zo.insert(x);
        std::set<int> zs(zc.members().begin(), zc.members().end());
        if (zs != zo) return fail_case("SL(2,4) quotient but Z(G) != z-orbit + 1");
        return TheoremCase{"core-sl24-nonsplit", "G/F = SL(2,4), Z(G) = singular orbit", true};
    }
    // a normal subgroup of prime order with a cyclic p-group on top
    for (const auto& cls : conjugacy_classes(gq)) {
        if (cls[0] == 0) continue;
        Subgroup n = normal_closure(gq, {cls[0]});
        if (!is_prime(n.size())) continue;
        int rest = gq.order() / n.size();
        if (rest != 1 && !is_prime_power(rest, p)) continue;
        if (rest > p * p) continue;
        QuotientGroup top = quotient(gq, n);
        if (rest != 1) {
            bool cyclic = false;
            for (int x = 0; x < top.quotient.order(); ++x)
                if (top.quotient.element_order(x) == rest) cyclic = true;
            if (!cyclic) continue;
            if (!is_frobenius_with_kernel(gq, n)) continue;
        }
        std::ostringstream d;
        d << "G/F has normal subgroup of order " << n.size() << " with cyclic complement of order "
          << rest;
        return TheoremCase{"core-frobenius-quotient", d.str(), true};
    }
    return fail_case("self-centralizing core matches no subcase");
}

TheoremCase classify_component_case(const FiniteGroup& g, const OrbitPartition& orbits, int p,
                                    int z) {
    if (is_quasisimple(g)) {
        if (g.order() == 120 && is_isomorphic(g, sl2(5).group))
            return TheoremCase{"quasisimple-sl25", "G quasisimple of order 120 = SL(2,5)", false};
        return TheoremCase{"quasisimple-other",
                           "quasisimple of order " + std::to_string(g.order()), true};
    }
    std::optional<Subgroup> e = layer(g);
    if (!e) return fail_case("component case but layer search exceeded its bound");
    if (e->size() != 60 || !is_isomorphic(as_group(*e).group, alt(5).group))
        return fail_case("layer is not PSL(2,5)");
    std::vector<int> zorb;
    for (int x = 1; x < g.order(); ++x)
        if (orbits.orbit_of[x] == orbits.orbit_of[z]) zorb.push_back(x);
    Subgroup pcore = o_p(g, p);
    if (closure(g, zorb).members() != pcore.members())
        return fail_case("singular orbit does not generate O_p");
    if (1LL * pcore.size() * e->size() != g.order()) return fail_case("|O_p| * |E| != |G|");
    for (int x : pcore.members())
        for (int y : e->members())
            if (!g.commute(x, y)) return fail_case("O_p and E(G) do not commute");
    std::ostringstream d;
    d << "G = O_" << p << " x PSL(2,5), |O_p| = " << pcore.size();
    return TheoremCase{"core-times-simple", d.str(), false};
}

TheoremCase classify_split_core(const FiniteGroup& g, const OrbitPartition& orbits, int p,
                                const Subgroup& f) {
    Subgroup pc = o_p(g, p);
    if (!is_elementary_abelian(pc, p)) return fail_case("O_p not elementary abelian");
    int qpart = f.size() / pc.size();
    std::vector<int> qs;
    for (int r : prime_set(g))
        if (r != p && qpart % r == 0) qs.push_back(r);
    if (qs.size() != 1 || !is_prime_power(qpart, qs[0]))
        return fail_case("F(G)/O_p is not a q-group");
    int q = qs[0];
    Subgroup qc = o_p(g, q);
    if (qc.size() != qpart || !is_elementary_abelian(qc, q))
        return fail_case("O_q is not the elementary abelian complement in F(G)");
    if (sylow(g, q).size() != qc.size()) return fail_case("O_q is not a Sylow q-subgroup");
    // P\1 and Q\1 are single orbits
    std::set<int> po, qo;
    for (int x = 1; x < g.order(); ++x) {
        if (pc.contains(x)) po.insert(orbits.orbit_of[x]);
        if (qc.contains(x)) qo.insert(orbits.orbit_of[x]);
    }
    if (po.size() != 1 || qo.size() != 1) return fail_case("P\\1 or Q\\1 is not a single orbit");
    QuotientGroup gp = quotient(g, pc);
    Subgroup kern = image_subgroup(gp, f);
    if (!is_frobenius_with_kernel(gp.quotient, kern))
        return fail_case("G/P is not Frobenius over F/P");
    int comp = g.order() / f.size();
    bool comp_ok = is_prime(comp);
    if (!comp_ok && is_prime_power(comp, p)) {
        // p-group complement must have a unique subgroup of order p
        int count = 0;
        QuotientGroup gf = quotient(g, f);
        for (int x = 0; x < gf.quotient.order(); ++x)
            if (gf.quotient.element_order(x) == p) ++count;
        comp_ok = count == p - 1;
    }
    if (!comp_ok) return fail_case("Frobenius complement is neither prime nor near-cyclic p-group");
    std::ostringstream d;
    d << "F = " << pc.size() << " x " << qc.size() << ", G/P Frobenius, complement order " << comp;
    return TheoremCase{"split-core-frobenius", d.str(), false};
}

} // namespace

TheoremCase classify_theorem_case(const FiniteGroup& g, const ActionSpec& action,
                                  const CommutingGraph& graph, const OrbitPartition& orbits) {
    std::vector<int> pi = prime_set(g);
    GraphShape shape = classify_shape(graph);
    if (!shape.is_f_graph()) return TheoremCase{"not-applicable", "graph is " + shape.str(), false};
    if (pi.size() < 2) return TheoremCase{"not-applicable", "single-prime group", false};
    if (!shape.singular) return classify_no_singular(g, graph, orbits);

    int z = graph.vertices[*shape.singular].rep;
    int p = g.element_order(z);
    if (!is_prime(p)) return fail_case("singular representative order is not prime");
    Subgroup pc = o_p(g, p);
    Subgroup f = fitting(g);
    if (pc.is_trivial()) return classify_trivial_core(g, action, p);
    if (pc.size() == f.size()) {
        Subgroup cf = centralizer(g, f.members());
        bool inside = true;
        for (int x : cf.members())
            if (!f.contains(x)) inside = false;
        if (inside) return classify_self_centralizing_core(g, orbits, p, z, f);
        return classify_component_case(g, orbits, p, z);
    }
    return classify_split_core(g, orbits, p, f);
}

std::vector<ChecklistItem> prop2_checklist(const FiniteGroup& g, const ActionSpec& action,
                                           const OrbitPartition& orbits,
                                           const CommutingGraph& graph) {
    (void)action;
    std::vector<ChecklistItem> out;
    GraphShape shape = classify_shape(graph);
    if (!shape.is_f_graph() || !shape.singular || prime_set(g).size() < 2) return out;
    int zv = *shape.singular;
    int z = graph.vertices[zv].rep;
    int p = g.element_order(z);
    int zorb = orbits.orbit_of[z];
    auto push = [&](std::string id, bool ok, std::string witness) {
        out.push_back({std::move(id), ok ? "pass" : "fail", ok ? "" : std::move(witness)});
    };

    push("a", is_prime(p), "singular order " + std::to_string(p));

    {
        bool ok = true;
        std::string w;
        for (int x = 1; x < g.order() && ok; ++x)
            for (int y = x + 1; y < g.order(); ++y) {
                int ox = g.element_order(x), oy = g.element_order(y);
                if (std::gcd(ox, oy) != 1 || !g.commute(x, y)) continue;
                bool in_z = orbits.orbit_of[x] == zorb || orbits.orbit_of[y] == zorb;
                if (!is_prime(ox) || !is_prime(oy) || !in_z) {
                    ok = false;
                    w = "elements " + std::to_string(x) + "," + std::to_string(y) + " of orders " +
                        std::to_string(ox) + "," + std::to_string(oy);
                    break;
                }
            }
        push("c", ok, w);
    }

    {
        InducedGroup sp = as_group(sylow(g, p));
        int e = group_exponent(sp.group);
        push("f", p * (long long)p * p % e == 0, "Sylow p exponent " + std::to_string(e));
    }

    {
        bool ok = true;
        std::string w;
        for (int q : prime_set(g)) {
            if (q == p) continue;
            Subgroup sq = sylow(g, q);
            std::set<int> os;
            for (int x : sq.members())
                if (x != 0) os.insert(orbits.orbit_of[x]);
            if (os.size() != 1 || group_exponent(as_group(sq).group) != q) {
                ok = false;
                w = "Sylow " + std::to_string(q) + " not a single orbit of exponent q";
            }
        }
        push("g", ok, w);
    }

    {
        int k = orbits.count() - 1;
        if (k > 12) {
            out.push_back({"h", "sampled", "orbit count " + std::to_string(k) + " exceeds cap"});
        } else {
            bool ok = true;
            std::string w;
            for (int mask = 1; mask < (1 << k) && ok; ++mask) {
                std::vector<int> gens;
                for (int o = 1; o <= k; ++o)
                    if (mask & (1 << (o - 1)))
                        for (int x : orbits.members(o)) gens.push_back(x);
                Subgroup h = closure(g, gens);
                int d = std::gcd(h.size(), g.order() / h.size());
                if (d != 1 && !is_prime_power(d, p)) {
                    ok = false;
                    w = "invariant subgroup of order " + std::to_string(h.size());
                }
            }
            push("h", ok, w);
        }
    }

    {
        PrimeGraph pg = gk_graph(g);
        push("i", pg.is_star_centered_at(p), "prime graph is not a star at p");
    }

    {
        bool ok = true;
        for (int x : orbits.members(zorb))
            for (int y : class_of(g, x))
                if (orbits.orbit_of[y] != zorb) ok = false;
        push("j", ok, "singular orbit is not a normal subset");
    }

    {
        std::vector<int> dist = bfs_distances(graph, zv);
        bool ok = true;
        std::string w;
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (graph.degree(v) == 1 && dist[v] > 2) {
                ok = false;
                w = "pendant vertex " + std::to_string(v) + " at distance " + std::to_string(dist[v]);
            }
        push("l", ok, w);
    }

    {
        // every cycle passes through the singular vertex with length <= 4:
        // the graph minus it must fall apart into paths, and two of its
        // neighbours may be at most 2 apart inside a component
        bool ok = true;
        std::string w;
        for (const auto& comp : components(graph, zv)) {
            int edges = 0, deg3 = 0;
            for (int v : comp) {
                int d = 0;
                for (int u : graph.adjacency[v])
                    if (u != zv) ++d;
                edges += d;
                if (d >= 3) ++deg3;
            }
            edges /= 2;
            if (edges != int(comp.size()) - 1 || deg3 > 0) {
                ok = false;
                w = "component off the singular vertex is not a path";
                break;
            }
            for (int v : comp) {
                if (!graph.has_edge(v, zv)) continue;
                std::vector<int> d = bfs_distances(graph, v, zv);
                for (int u : comp)
                    if (u != v && graph.has_edge(u, zv) && d[u] > 2) {
                        ok = false;
                        w = "cycle of length " + std::to_string(d[u] + 2) + " through the singular vertex";
                    }
            }
        }
        push("m", ok, w);
    }
    return out;
}

AnalysisReport analyze(const FiniteGroup& g, const ActionSpec& action) {
    AnalysisReport r;
    r.group_name = g.name();
    r.action_name = action.name;
    r.group_order = g.order();
    OrbitPartition orbits = orbit_partition(g, action);
    r.orbit_sizes = orbits.nonidentity_sizes();
    std::sort(r.orbit_sizes.begin(), r.orbit_sizes.end());
    CommutingGraph graph = build_graph(g, orbits, action.name);
    GraphShape shape = classify_shape(graph);
    r.shape = shape.str();
    r.triangle_count = int(triangles(graph).size());
    if (shape.singular) {
        SingularData s;
        s.vertex = *shape.singular;
        s.rep = graph.vertices[s.vertex].rep;
        s.rep_order = g.element_order(s.rep);
        s.orbit_size = graph.vertices[s.vertex].size;
        r.singular = s;
    }
    r.pi = prime_set(g);
    r.center_order = center(g).size();
    r.fitting_order = fitting(g).size();
    for (int p : r.pi) r.core_orders.emplace_back(p, o_p(g, p).size());
    r.flags.nilpotent = is_nilpotent(g);
    r.flags.solvable = is_solvable(g);
    r.flags.perfect = is_perfect(g);
    r.flags.simple = g.order() > 1 && is_simple(g);
    r.flags.quasisimple = is_quasisimple(g);
    r.flags.eppo = is_eppo(g);
    r.theorem_case = classify_theorem_case(g, action, graph, orbits);
    r.checklist = prop2_checklist(g, action, orbits, graph);
    return r;
}

std::string report_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["group"] = r.group_name;
    j["order"] = r.group_order;
    j["action"] = r.action_name;
    j["orbit_sizes"] = r.orbit_sizes;
    j["shape"] = r.shape;
    if (r.singular)
        j["singular"] = {{"vertex", r.singular->vertex},
                         {"rep", r.singular->rep},
                         {"order", r.singular->rep_order},
                         {"orbit_size", r.singular->orbit_size}};
    else
        j["singular"] = nullptr;
    j["triangles"] = r.triangle_count;
    j["pi"] = r.pi;
    j["center_order"] = r.center_order;
    j["fitting_order"] = r.fitting_order;
    nlohmann::ordered_json cores = nlohmann::ordered_json::object();
    for (auto [p, n] : r.core_orders) cores[std::to_string(p)] = n;
    j["core_orders"] = cores;
    j["flags"] = {{"nilpotent", r.flags.nilpotent}, {"solvable", r.flags.solvable},
                  {"perfect", r.flags.perfect},     {"simple", r.flags.simple},
                  {"quasisimple", r.flags.quasisimple}, {"eppo", r.flags.eppo}};
    j["theorem_case"] = {{"tag", r.theorem_case.tag},
                         {"detail", r.theorem_case.detail},
                         {"unwitnessed", r.theorem_case.unwitnessed}};
    j["checklist"] = nlohmann::ordered_json::array();
    for (const auto& item : r.checklist)
        j["checklist"].push_back(
            {{"item", item.id}, {"status", item.status}, {"witness", item.witness}});
    return j.dump(2) + "\n";
}

std::optional<std::array<int, 4>> refute_by_aut_clique(const FiniteGroup& g, long long budget) {
    ActionSpec aut = full_aut(g, budget);
    OrbitPartition orbits = orbit_partition(g, aut);
    int n = g.order();
    for (int x = 1; x < n; ++x) {
        std::vector<int> cx;
        for (int y = x + 1; y < n; ++y)
            if (g.commute(x, y) && orbits.orbit_of[y] != orbits.orbit_of[x]) cx.push_back(y);
        for (size_t i = 0; i < cx.size(); ++i)
            for (size_t j = i + 1; j < cx.size(); ++j) {
                int y = cx[i], z = cx[j];
                if (!g.commute(y, z) || orbits.orbit_of[y] == orbits.orbit_of[z]) continue;
                for (size_t k = j + 1; k < cx.size(); ++k) {
                    int w = cx[k];
                    if (!g.commute(y, w) || !g.commute(z, w)) continue;
                    if (orbits.orbit_of[w] == orbits.orbit_of[y] ||
                        orbits.orbit_of[w] == orbits.orbit_of[z])
                        continue;
                    return std::array<int, 4>{x, y, z, w};
                }
            }
    }
    return std::nullopt;
}

bool CorollaryReport::all_pass() const {
    for (const auto& i : items)
        if (i.status == "fail") return false;
    return true;
}

namespace {

void scan_c1(const CatalogEntry& e, int bound, CorollaryReport& rep) {
    ScanItem item{"C1:" + e.name, "pass", ""};
    const FiniteGroup& g = e.group;
    if (prime_set(g).size() < 2) {
        item.status = "skip";
        item.detail = "single-prime group";
        rep.items.push_back(item);
        return;
    }
    if (g.order() > bound) {
        item.status = "skip";
        item.detail = "order " + std::to_string(g.order()) + " beyond the inner-scan bound";
        rep.items.push_back(item);
        return;
    }
    // candidates: every cyclic subgroup, every Sylow subgroup, Inn(G) itself
    std::vector<std::vector<Automorphism>> candidates;
    for (int x = 1; x < g.order(); ++x) {
        // take x only as the minimal generator of its cyclic subgroup
        bool minimal = true;
        Subgroup c = closure(g, {x});
        for (int y : c.members())
            if (y != 0 && y < x && closure(g, {y}).size() == c.size()) minimal = false;
        if (!minimal) continue;
        candidates.push_back({conj_map(g, x)});
    }
    for (int p : prime_set(g)) {
        std::vector<Automorphism> maps;
        Subgroup sp = sylow(g, p);
        for (int x : sp.members())
            if (x != 0) maps.push_back(conj_map(g, x));
        candidates.push_back(std::move(maps));
    }
    candidates.push_back(inner_action(g).generators);

    int hits = 0;
    for (auto& maps : candidates) {
        ActionSpec a;
        a.kind = ActionKind::Explicit;
        a.generators = std::move(maps);
        OrbitPartition orbits = orbit_partition(g, a);
        CommutingGraph graph = build_graph(g, orbits);
        if (!classify_shape(graph).is_f_graph()) continue;
        ++hits;
        Subgroup z = center(g);
        if (z.size() != 2 || !is_isomorphic(quotient(g, z).quotient, dihedral(6))) {
            item.status = "fail";
            item.detail = "F-graph hit without |Z| = 2 and G/Z = S3";
        }
    }
    if (item.status == "pass")
        item.detail = std::to_string(hits) + " F-graph hit(s), all with |Z|=2 and G/Z=S3";
    rep.items.push_back(item);
}

void scan_c2(const CatalogEntry& e, CorollaryReport& rep) {
    ScanItem item{"C2:" + e.name, "pass", ""};
    if (e.group.is_abelian() || prime_set(e.group).size() < 2) {
        item.status = "skip";
        item.detail = "abelian or single-prime group";
    } else {
        CommutingGraph graph = classic_commuting_graph(e.group);
        GraphShape shape = classify_shape(graph);
        if (shape.is_f_graph()) {
            item.status = "fail";
            item.detail = "classic commuting graph is " + shape.str();
        } else {
            item.detail = "classic graph is " + shape.str();
        }
    }
    rep.items.push_back(item);
}

void scan_c3(const CatalogEntry& e, const CatalogAction& a, CorollaryReport& rep) {
    ScanItem item{"C3:" + e.name + "/" + a.name, "skip", "graph has a cycle or no hub"};
    OrbitPartition orbits = orbit_partition(e.group, a.action);
    CommutingGraph graph = build_graph(e.group, orbits);
    GraphShape shape = classify_shape(graph);
    int m = graph.vertex_count();
    bool acyclic = shape.is_f_graph() && graph.edge_count() == m - 1;
    int hub = -1;
    for (int v = 0; v < m; ++v)
        if (graph.degree(v) == m - 1) hub = v;
    if (!acyclic || hub < 0 || m < 3) {
        rep.items.push_back(item);
        return;
    }
    item.status = "pass";
    bool star = true;
    for (int v = 0; v < m; ++v)
        if (v != hub && graph.degree(v) != 1) star = false;
    bool pgroup = prime_set(e.group).size() == 1;
    bool structure = false;
    if (pgroup) {
        Subgroup whole = whole_group(e.group);
        if (is_special_p(whole)) {
            structure = true;
        } else {
            // Omega1(Z) = Z < G' = Z2, G'' = 1, and centralizers outside Z2
            // meet Z2 in Z
            Subgroup z = center(e.group);
            Subgroup d = derived_subgroup(e.group);
            std::vector<Subgroup> ucs = upper_central_series(e.group);
            Subgroup z2 = ucs.size() > 1 ? ucs[1] : ucs[0];
            bool ok = omega1(z).size() == z.size() && z.size() < d.size() &&
                      d.members() == z2.members() &&
                      derived_subgroup(as_group(d).group).size() == 1;
            for (int y = 0; y < e.group.order() && ok; ++y) {
                if (z2.contains(y)) continue;
                Subgroup cy = centralizer(e.group, {y});
                for (int x : cy.members())
                    if (z2.contains(x) && !z.contains(x)) ok = false;
            }
            structure = ok;
        }
    }
    if (!star || !pgroup || !structure) {
        item.status = "fail";
        item.detail = !star ? "acyclic hub graph is not a star" : "group structure claim fails";
    } else {
        item.detail = "star on " + std::to_string(m) + " vertices, p-group structure verified";
    }
    rep.items.push_back(item);
}

void scan_c5(const CatalogEntry& e, const CatalogAction& a, CorollaryReport& rep) {
    ScanItem item{"C5:" + e.name + "/" + a.name, "skip", ""};
    const FiniteGroup& g = e.group;
    std::vector<std::vector<int>> perms;
    for (const auto& m : a.action.generators) perms.push_back(m.image);
    int order = 0;
    try {
        order = permutation_group(g.order(), perms, "acting", 2000).group.order();
    } catch (const ClosureTooLarge&) {
        item.detail = "acting group larger than the enumeration bound";
        rep.items.push_back(item);
        return;
    }
    if (std::gcd(order, g.order()) != 1) {
        item.detail = "action is not coprime (|A| = " + std::to_string(order) + ")";
        rep.items.push_back(item);
        return;
    }
    OrbitPartition orbits = orbit_partition(g, a.action);
    CommutingGraph graph = build_graph(g, orbits);
    std::string shape = classify_shape(graph).str();
    bool ok = prime_set(g).size() == 1 || shape == "Cycle(3)";
    item.status = ok ? "pass" : "fail";
    item.detail = "coprime |A| = " + std::to_string(order) + ", shape " + shape;
    rep.items.push_back(item);
}

} // namespace

CorollaryReport corollary_scans(const std::vector<CatalogEntry>& entries, int inner_scan_bound) {
    CorollaryReport rep;
    for (const auto& e : entries) scan_c1(e, inner_scan_bound, rep);
    for (const auto& e : entries) scan_c2(e, rep);
    for (const auto& e : entries)
        for (const auto& a : e.actions) scan_c3(e, a, rep);
    for (const auto& e : entries)
        for (const auto& a : e.actions) scan_c5(e, a, rep);
    return rep;
}

namespace {

VerifyOutcome verify_one(const CatalogEntry& e, const CatalogAction& a) {
    VerifyOutcome out;
    out.entry = e.name;
    out.action = a.name;
    e.group.audit();
    out.report = analyze(e.group, a.action);
    const AnalysisReport& r = out.report;
    auto miss = [&](const std::string& m) { out.mismatches.push_back(m); };
    int total = 0;
    for (int s : r.orbit_sizes) total += s;
    if (total != e.group.order() - 1) miss("orbit sizes do not sum to |G|-1");
    if (a.expected.orbit_sizes && r.orbit_sizes != *a.expected.orbit_sizes)
        miss("orbit sizes differ from the recorded expectation");
    if (a.expected.shape && r.shape != *a.expected.shape)
        miss("shape " + r.shape + " != expected " + *a.expected.shape);
    if (a.expected.theorem_case && r.theorem_case.tag != *a.expected.theorem_case)
        miss("case " + r.theorem_case.tag + " != expected " + *a.expected.theorem_case);
    if (r.theorem_case.tag == "no-branch-matches")
        miss("classifier matched no branch: " + r.theorem_case.detail);
    if (a.expected.triangle_count && r.triangle_count != *a.expected.triangle_count)
        miss("triangle count mismatch");
    if (a.expected.singular_orbit_size &&
        (!r.singular || r.singular->orbit_size != *a.expected.singular_orbit_size))
        miss("singular orbit size mismatch");
    if (a.expected.singular_rep_order &&
        (!r.singular || r.singular->rep_order != *a.expected.singular_rep_order))
        miss("singular representative order mismatch");
    for (const auto& item : r.checklist)
        if (item.status == "fail")
            miss("checklist item " + item.id + " failed: " + item.witness);
    return out;
}

} // namespace

std::vector<VerifyOutcome> verify_catalog(const std::vector<CatalogEntry>& entries, int threads) {
    std::vector<VerifyOutcome> out;
    if (threads <= 1) {
        for (const auto& e : entries)
            for (const auto& a : e.actions) out.push_back(verify_one(e, a));
        return out;
    }
    std::vector<std::future<VerifyOutcome>> futures;
    for (const auto& e : entries)
        for (const auto& a : e.actions)
            futures.push_back(std::async(std::launch::async, [&e, &a] { return verify_one(e, a); }));
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

} // namespace orb
