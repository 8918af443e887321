#include "orb/structure.hpp"

#include <algorithm>
#include <numeric>

namespace orb {

namespace {

std::vector<std::pair<int, int>> factorize(int n) {
    std::vector<std::pair<int, int>> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime_power(int n, int& p_out) {
    auto f = factorize(n);
    if (f.size() != 1) return false;
    p_out = f[0].first;
    return true;
}

/// Derived subgroup of an explicit subgroup, inside the same parent.
Subgroup derived_of(const Subgroup& h) {
    const FiniteGroup& g = h.parent();
    std::vector<int> comms;
    for (int a : h.members())
        for (int b : h.members()) comms.push_back(g.comm(a, b));
    return closure(g, comms);
}

Subgroup center_of(const Subgroup& h) {
    const FiniteGroup& g = h.parent();
    std::vector<int> z;
    for (int a : h.members()) {
        bool central = true;
        for (int b : h.members())
            if (!g.commute(a, b)) {
                central = false;
                break;
            }
        if (central) z.push_back(a);
    }
    return Subgroup(g, std::move(z));
}

} // namespace

std::vector<int> prime_set(const FiniteGroup& g) {
    std::vector<int> out;
    for (auto [p, e] : factorize(g.order())) out.push_back(p);
    return out;
}

int group_exponent(const FiniteGroup& g) {
    long long e = 1;
    for (int x = 0; x < g.order(); ++x) e = std::lcm(e, (long long)g.element_order(x));
    return int(e);
}

Subgroup sylow(const FiniteGroup& g, int p) {
    int pp = 1;
    int n = g.order();
    while (n % p == 0) {
        pp *= p;
        n /= p;
    }
    if (pp == 1) return trivial_subgroup(g);
    // seed: maximal-order p-element, minimal index
    int seed = 0, best = 1;
    for (int x = 0; x < g.order(); ++x) {
        int o = g.element_order(x);
        int q;
        if (o > best && is_prime_power(o, q) && q == p) {
            best = o;
            seed = x;
        }
    }
    Subgroup h = closure(g, {seed});
    while (h.size() < pp) {
        // adjoin the maximal-order p-element of the normalizer outside h
        int pick = -1, pick_order = 0;
        for (int x = 0; x < g.order(); ++x) {
            if (h.contains(x)) continue;
            int o = g.element_order(x);
            int q;
            if (!is_prime_power(o, q) || q != p || o <= pick_order) continue;
            bool normalizes = true;
            for (int m : h.members())
                if (!h.contains(g.conj(m, x))) {
                    normalizes = false;
                    break;
                }
            if (normalizes) {
                pick = x;
                pick_order = o;
            }
        }
        if (pick < 0) throw Error("sylow: no extension found"); // cannot happen
        std::vector<int> gens = h.members();
        gens.push_back(pick);
        h = closure(g, gens);
    }
    return h;
}

Subgroup o_p(const FiniteGroup& g, int p) {
    Subgroup s = sylow(g, p);
    std::vector<char> keep(g.order(), 0);
    for (int m : s.members()) keep[m] = 1;
    for (int c = 0; c < g.order(); ++c) {
        std::vector<char> img(g.order(), 0);
        for (int m : s.members()) img[g.conj(m, c)] = 1;
        for (int x = 0; x < g.order(); ++x) keep[x] = keep[x] && img[x];
    }
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x)
        if (keep[x]) members.push_back(x);
    return Subgroup(g, std::move(members));
}

Subgroup fitting(const FiniteGroup& g) {
    std::vector<int> gens;
    for (int p : prime_set(g)) {
        Subgroup core = o_p(g, p);
        for (int m : core.members()) gens.push_back(m);
    }
    if (gens.empty()) gens.push_back(0);
    return closure(g, gens);
}

bool is_nilpotent(const FiniteGroup& g) {
    for (int p : prime_set(g))
        if (!is_normal(g, sylow(g, p))) return false;
    return true;
}

bool is_eppo(const FiniteGroup& g) {
    for (int x = 1; x < g.order(); ++x) {
        int p;
        if (!is_prime_power(g.element_order(x), p)) return false;
    }
    return true;
}

Subgroup derived_subgroup(const FiniteGroup& g) { return derived_of(whole_group(g)); }

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
    std::vector<Subgroup> series{whole_group(g)};
    for (;;) {
        Subgroup next = derived_of(series.back());
        if (next.size() == series.back().size()) break;
        series.push_back(std::move(next));
    }
    return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().is_trivial(); }

std::vector<Subgroup> upper_central_series(const FiniteGroup& g) {
    std::vector<Subgroup> series{center(g)};
    for (;;) {
        const Subgroup& prev = series.back();
        std::vector<int> next;
        for (int x = 0; x < g.order(); ++x) {
            bool in = true;
            for (int y = 0; y < g.order(); ++y)
                if (!prev.contains(g.comm(x, y))) {
                    in = false;
                    break;
                }
            if (in) next.push_back(x);
        }
        if (int(next.size()) == prev.size()) break;
        series.emplace_back(g, std::move(next));
    }
    return series;
}

bool is_perfect(const FiniteGroup& g) { return derived_subgroup(g).is_whole_group(); }

bool is_simple(const FiniteGroup& g) {
    if (g.order() <= 1) return false;
    for (const auto& cls : conjugacy_classes(g)) {
        if (cls[0] == 0) continue;
        if (!normal_closure(g, {cls[0]}).is_whole_group()) return false;
    }
    return true;
}

bool is_quasisimple(const FiniteGroup& g) {
    if (!is_perfect(g) || g.order() <= 1) return false;
    QuotientGroup q = quotient(g, center(g));
    return is_simple(q.quotient);
}

bool PrimeGraph::has_edge(int p, int q) const {
    if (p > q) std::swap(p, q);
    return std::find(edges.begin(), edges.end(), std::make_pair(p, q)) != edges.end();
}

bool PrimeGraph::is_star_centered_at(int center) const {
    for (auto [p, q] : edges)
        if (p != center && q != center) return false;
    return true;
}

PrimeGraph gk_graph(const FiniteGroup& g) {
    PrimeGraph pg;
    pg.primes = prime_set(g);
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < g.order(); ++x) {
        auto f = factorize(g.element_order(x));
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j) edges.emplace_back(f[i].first, f[j].first);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    pg.edges = std::move(edges);
    return pg;
}

bool is_frobenius_with_kernel(const FiniteGroup& g, const Subgroup& k) {
    if (&k.parent() != &g) throw BadKernel("frobenius check: kernel of a different group");
    if (k.is_trivial() || k.is_whole_group()) throw BadKernel("frobenius check: kernel must be proper");
    if (!is_normal(g, k)) throw BadKernel("frobenius check: kernel not normal");
    for (int x = 0; x < g.order(); ++x) {
        if (k.contains(x)) continue;
        for (int m : k.members())
            if (m != 0 && g.commute(x, m)) return false;
    }
    return true;
}

namespace {

int p_group_prime(const Subgroup& p_sub) {
    int p;
    if (p_sub.size() <= 1 || !is_prime_power(p_sub.size(), p))
        throw NotAPGroup("expected a nontrivial p-group");
    return p;
}

} // namespace

Subgroup omega1(const Subgroup& p_sub) {
    int p = p_group_prime(p_sub);
    std::vector<int> gens{0};
    for (int m : p_sub.members())
        if (p_sub.parent().element_order(m) == p) gens.push_back(m);
    return closure(p_sub.parent(), gens);
}

Subgroup agemo1(const Subgroup& p_sub) {
    int p = p_group_prime(p_sub);
    std::vector<int> gens;
    for (int m : p_sub.members()) gens.push_back(p_sub.parent().pow(m, p));
    return closure(p_sub.parent(), gens);
}

Subgroup frattini_p(const Subgroup& p_sub) {
    p_group_prime(p_sub);
    std::vector<int> gens = derived_of(p_sub).members();
    Subgroup ag = agemo1(p_sub);
    for (int m : ag.members()) gens.push_back(m);
    return closure(p_sub.parent(), gens);
}

bool is_special_p(const Subgroup& p_sub) {
    int p = p_group_prime(p_sub);
    Subgroup z = center_of(p_sub);
    if (derived_of(p_sub).members() != z.members()) return false;
    if (frattini_p(p_sub).members() != z.members()) return false;
    for (int m : z.members())
        if (m != 0 && p_sub.parent().element_order(m) != p) return false;
    return true;
}

bool is_extraspecial(const Subgroup& p_sub) {
    int p = p_group_prime(p_sub);
    return is_special_p(p_sub) && center_of(p_sub).size() == p;
}

std::optional<Subgroup> layer(const FiniteGroup& g, int bound) {
    if (g.order() > bound) return std::nullopt;
    std::vector<int> gens{0};
    for (const auto& cls : conjugacy_classes(g)) {
        if (cls[0] == 0) continue;
        Subgroup n = normal_closure(g, {cls[0]});
        InducedGroup in = as_group(n);
        if (is_quasisimple(in.group))
            for (int m : n.members()) gens.push_back(m);
    }
    return closure(g, gens);
}

StructureReport structure_report(const FiniteGroup& g) {
    StructureReport r{prime_set(g),          group_exponent(g),       center(g),
                      derived_series(g),     upper_central_series(g), {},
                      {},                    fitting(g),              {}};
    for (int p : r.pi) {
        r.sylow.emplace(p, sylow(g, p));
        r.o_p.emplace(p, o_p(g, p));
    }
    r.flags.nilpotent = is_nilpotent(g);
    r.flags.solvable = r.derived_series.back().is_trivial();
    r.flags.perfect = r.derived_series.size() == 1;
    r.flags.simple = is_simple(g);
    r.flags.quasisimple = is_quasisimple(g);
    r.flags.eppo = is_eppo(g);
    return r;
}

} // namespace orb
