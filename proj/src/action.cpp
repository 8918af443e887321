#include "orb/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "orb/errors.hpp"

namespace orb {

void validate_automorphism(const FiniteGroup& g, const std::vector<int>& image) {
    int n = g.order();
    if (int(image.size()) != n) throw BadAction("automorphism: wrong image length");
    std::vector<char> hit(n, 0);
    for (int v : image) {
        if (v < 0 || v >= n || hit[v]) throw BadAction("automorphism: not a bijection");
        hit[v] = 1;
    }
    if (image[0] != 0) throw BadAction("automorphism: identity not fixed");
    if (n <= FiniteGroup::kDenseLimit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (image[g.mul(a, b)] != g.mul(image[a], image[b]))
                    throw BadAction("automorphism: multiplication not preserved");
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 10 * n; ++t) {
            int a = pick(rng), b = pick(rng);
            if (image[g.mul(a, b)] != g.mul(image[a], image[b]))
                throw BadAction("automorphism: multiplication not preserved");
        }
    }
}

std::vector<int> OrbitPartition::members(int orbit) const {
    std::vector<int> out;
    for (int x = 0; x < int(orbit_of.size()); ++x)
        if (orbit_of[x] == orbit) out.push_back(x);
    return out;
}

std::vector<int> OrbitPartition::nonidentity_sizes() const {
    std::vector<int> out;
    for (int i = 0; i < count(); ++i)
        if (reps[i] != 0) out.push_back(sizes[i]);
    return out;
}

ActionSpec inner_action(const FiniteGroup& g) {
    ActionSpec spec;
    spec.kind = ActionKind::Inner;
    spec.name = "inner";
    std::vector<int> gens = g.greedy_generators();
    if (gens.empty()) gens.push_back(0);
    for (int h : gens) {
        Automorphism a;
        a.image.resize(g.order());
        for (int x = 0; x < g.order(); ++x) a.image[x] = g.conj(x, h);
        spec.generators.push_back(std::move(a));
    }
    return spec;
}

OvergroupAction overgroup_action(const FiniteGroup& h, const Subgroup& g) {
    if (&g.parent() != &h) throw Error("overgroup_action: subgroup of a different group");
    if (!is_normal(h, g)) throw NotNormal("overgroup_action: subgroup is not normal");
    OvergroupAction out;
    out.target = as_group(g);
    out.action.kind = ActionKind::Overgroup;
    out.action.name = "overgroup(" + h.name() + ")";
    std::vector<int> gens = h.greedy_generators();
    if (gens.empty()) gens.push_back(0);
    for (int c : gens) {
        Automorphism a;
        a.image.resize(g.size());
        for (int i = 0; i < g.size(); ++i)
            a.image[i] = out.target.from_parent[h.conj(out.target.to_parent[i], c)];
        validate_automorphism(out.target.group, a.image);
        out.action.generators.push_back(std::move(a));
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b); // keep the minimal member as root
        up[b] = a;
    }
};

} // namespace

OrbitPartition orbit_partition(const FiniteGroup& g, const ActionSpec& action) {
    int n = g.order();
    if (action.generators.empty()) throw BadAction("orbit_partition: empty action");
    for (const auto& a : action.generators)
        if (int(a.image.size()) != n) throw BadAction("orbit_partition: action/group mismatch");
    UnionFind uf(n);
    for (const auto& a : action.generators)
        for (int x = 0; x < n; ++x) uf.join(x, a.image[x]);
    OrbitPartition part;
    part.orbit_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        int root = uf.find(x);
        if (part.orbit_of[root] == -1) {
            part.orbit_of[root] = int(part.reps.size());
            part.reps.push_back(root);
            part.sizes.push_back(0);
        }
        part.orbit_of[x] = part.orbit_of[root];
        ++part.sizes[part.orbit_of[x]];
    }
    return part;
}

namespace {

/// Canonical class fingerprints for two groups at once: classes with equal
/// ids are indistinguishable by (order, size) refined through power maps.
struct Fingerprints {
    std::vector<int> g_elem; // element -> fingerprint id
    std::vector<int> h_elem;
    bool compatible = false; // same fingerprint multiset on both sides
};

Fingerprints class_fingerprints(const FiniteGroup& g, const FiniteGroup& h) {
    auto gcls = conjugacy_classes(g);
    auto hcls = conjugacy_classes(h);
    std::vector<int> gof(g.order()), hof(h.order());
    for (int c = 0; c < int(gcls.size()); ++c)
        for (int x : gcls[c]) gof[x] = c;
    for (int c = 0; c < int(hcls.size()); ++c)
        for (int x : hcls[c]) hof[x] = c;

    auto initial = [](const FiniteGroup& grp, const std::vector<std::vector<int>>& cls) {
        std::vector<std::string> fp(cls.size());
        for (int c = 0; c < int(cls.size()); ++c)
            fp[c] = std::to_string(grp.element_order(cls[c][0])) + "/" +
                    std::to_string(cls[c].size());
        return fp;
    };
    std::vector<std::string> gfp = initial(g, gcls), hfp = initial(h, hcls);

    auto assign_ids = [](std::vector<std::string>& a, std::vector<std::string>& b,
                         std::vector<int>& ida, std::vector<int>& idb) {
        std::vector<std::string> all = a;
        all.insert(all.end(), b.begin(), b.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        auto id_of = [&all](const std::string& s) {
            return int(std::lower_bound(all.begin(), all.end(), s) - all.begin());
        };
        ida.resize(a.size());
        idb.resize(b.size());
        for (size_t i = 0; i < a.size(); ++i) ida[i] = id_of(a[i]);
        for (size_t i = 0; i < b.size(); ++i) idb[i] = id_of(b[i]);
    };

    std::vector<int> gid, hid;
    assign_ids(gfp, hfp, gid, hid);
    for (int round = 0; round < 8; ++round) {
        auto refine = [&](const FiniteGroup& grp, const std::vector<std::vector<int>>& cls,
                          const std::vector<int>& of, const std::vector<int>& id) {
            std::vector<std::string> out(cls.size());
            for (int c = 0; c < int(cls.size()); ++c) {
                int rep = cls[c][0];
                int o = grp.element_order(rep);
                std::vector<int> pattern;
                int x = rep;
                for (int k = 1; k < o; ++k) {
                    pattern.push_back(id[of[x]]);
                    x = grp.mul(x, rep);
                }
                std::string s = std::to_string(id[c]) + "|";
                for (int v : pattern) s += std::to_string(v) + ",";
                out[c] = s;
            }
            return out;
        };
        auto gnext = refine(g, gcls, gof, gid);
        auto hnext = refine(h, hcls, hof, hid);
        std::vector<int> gid2, hid2;
        assign_ids(gnext, hnext, gid2, hid2);
        if (gid2 == gid && hid2 == hid) break;
        gid = std::move(gid2);
        hid = std::move(hid2);
    }

    Fingerprints out;
    out.g_elem.resize(g.order());
    out.h_elem.resize(h.order());
    for (int x = 0; x < g.order(); ++x) out.g_elem[x] = gid[gof[x]];
    for (int x = 0; x < h.order(); ++x) out.h_elem[x] = hid[hof[x]];
    std::multiset<int> mg, mh;
    for (int c = 0; c < int(gcls.size()); ++c)
        for (size_t k = 0; k < gcls[c].size(); ++k) mg.insert(gid[c]);
    for (int c = 0; c < int(hcls.size()); ++c)
        for (size_t k = 0; k < hcls[c].size(); ++k) mh.insert(hid[c]);
    out.compatible = (mg == mh);
    return out;
}

struct IsoSearch {
    const FiniteGroup& g;
    const FiniteGroup& h;
    Fingerprints fp;
    std::vector<int> gens;
    long long budget;
    long long used = 0;
    bool first_only;
    std::vector<std::vector<int>> results;

    std::vector<int> map;       // g-element -> h-element or -1
    std::vector<char> used_img; // h-element already an image
    std::vector<int> known;     // domain subgroup built so far
    std::vector<int> trail;     // assigned g-elements, for rollback

    IsoSearch(const FiniteGroup& g_, const FiniteGroup& h_, long long budget_, bool first_only_)
        : g(g_), h(h_), fp(class_fingerprints(g_, h_)), gens(g_.greedy_generators()),
          budget(budget_), first_only(first_only_) {}

    void run() {
        if (g.order() != h.order() || !fp.compatible) return;
        map.assign(g.order(), -1);
        used_img.assign(h.order(), 0);
        map[0] = 0;
        used_img[0] = 1;
        known.push_back(0);
        if (gens.empty()) {
            results.push_back(map); // trivial group
            return;
        }
        descend(0);
    }

    void descend(size_t depth) {
        if (depth == gens.size()) {
            if (int(known.size()) == g.order()) results.push_back(map);
            return;
        }
        int gen = gens[depth];
        for (int y = 0; y < h.order(); ++y) {
            if (first_only && !results.empty()) return;
            if (used_img[y] || fp.h_elem[y] != fp.g_elem[gen]) continue;
            size_t known_mark = known.size();
            size_t trail_mark = trail.size();
            if (extend(depth, gen, y)) descend(depth + 1);
            rollback(known_mark, trail_mark);
        }
    }

    /// Add gen -> y, closing the known subgroup under right multiplication
    /// by all assigned generators while forcing the homomorphism property.
    bool extend(size_t depth, int gen, int y) {
        if (map[gen] != -1) {
            // gen already landed in the span of earlier generators
            return map[gen] == y;
        }
        assign(gen, y);
        known.push_back(gen);
        // reprocess every known element against every assigned generator
        for (size_t head = 0; head < known.size(); ++head) {
            int x = known[head];
            for (size_t j = 0; j <= depth; ++j) {
                if (++used > budget) throw AutBudgetExceeded("automorphism search budget exceeded");
                int gj = gens[j];
                int z = g.mul(x, gj);
                int w = h.mul(map[x], map[gj]);
                if (map[z] == -1) {
                    if (used_img[w]) return false;
                    assign(z, w);
                    known.push_back(z);
                } else if (map[z] != w) {
                    return false;
                }
            }
        }
        return true;
    }

    void assign(int x, int y) {
        map[x] = y;
        used_img[y] = 1;
        trail.push_back(x);
    }

    void rollback(size_t known_mark, size_t trail_mark) {
        known.resize(known_mark);
        while (trail.size() > trail_mark) {
            int x = trail.back();
            trail.pop_back();
            used_img[map[x]] = 0;
            map[x] = -1;
        }
    }
};

} // namespace

std::vector<std::vector<int>> find_isomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                                long long budget, bool first_only) {
    IsoSearch search(g, h, budget, first_only);
    search.run();
    return std::move(search.results);
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, long long budget) {
    return !find_isomorphisms(g, h, budget, /*first_only=*/true).empty();
}

ActionSpec full_aut(const FiniteGroup& g, long long budget) {
    auto maps = find_isomorphisms(g, g, budget);
    ActionSpec spec;
    spec.kind = ActionKind::FullAut;
    spec.name = "full_aut";
    for (auto& m : maps) spec.generators.push_back(Automorphism{std::move(m)});
    return spec;
}

bool coprime_facts_check(const FiniteGroup& g, const ActionSpec& action) {
    int n = g.order();
    for (const auto& a : action.generators) validate_automorphism(g, a.image);
    // close the generator maps under composition to enumerate A
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> seen{{id, 0}};
    std::vector<std::vector<int>> elems{id};
    for (size_t head = 0; head < elems.size(); ++head) {
        auto cur = elems[head];
        for (const auto& a : action.generators) {
            std::vector<int> prod(n);
            for (int x = 0; x < n; ++x) prod[x] = a.image[cur[x]];
            if (!seen.count(prod)) {
                seen.emplace(prod, int(elems.size()));
                elems.push_back(std::move(prod));
                if (elems.size() > 100000)
                    throw ClosureTooLarge("coprime_facts_check: acting group too large");
            }
        }
    }
    int order_a = int(elems.size());
    if (order_a <= 1) throw HypothesisViolated("coprime_facts_check: trivial acting group");
    if (std::gcd(order_a, n) != 1)
        throw HypothesisViolated("coprime_facts_check: action order not coprime to |G|");
    // elementary abelian: common prime exponent...
    int p = 0;
    for (size_t i = 1; i < elems.size(); ++i) {
        const auto& a = elems[i];
        std::vector<int> x = a;
        int o = 1;
        while (x != id) {
            std::vector<int> nx(n);
            for (int v = 0; v < n; ++v) nx[v] = a[x[v]];
            x = std::move(nx);
            ++o;
        }
        bool prime = o > 1;
        for (int d = 2; d * d <= o; ++d)
            if (o % d == 0) prime = false;
        if (!prime || (p != 0 && o != p))
            throw HypothesisViolated("coprime_facts_check: acting group not elementary abelian");
        p = o;
    }
    if (order_a == p) throw HypothesisViolated("coprime_facts_check: acting group is cyclic");
    // fixed points of all nontrivial acting elements must generate G
    std::vector<int> fixed;
    for (size_t i = 1; i < elems.size(); ++i)
        for (int x = 0; x < n; ++x)
            if (elems[i][x] == x) fixed.push_back(x);
    return closure(g, fixed).is_whole_group();
}

} // namespace orb
