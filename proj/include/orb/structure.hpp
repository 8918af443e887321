#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orb/action.hpp"
#include "orb/group.hpp"

namespace orb {

std::vector<int> prime_set(const FiniteGroup& g); // ascending primes dividing |G|
int group_exponent(const FiniteGroup& g);

/// Sylow p-subgroup by deterministic greedy extension: start from the
/// cyclic group of a maximal-order p-element, repeatedly adjoin p-elements
/// of the current normalizer until the full p-part is reached. Returns the
/// trivial subgroup when p does not divide |G|.
Subgroup sylow(const FiniteGroup& g, int p);

/// Largest normal p-subgroup, as the intersection of all conjugates of a
/// Sylow p-subgroup.
Subgroup o_p(const FiniteGroup& g, int p);

/// Fitting subgroup: product of the o_p over the primes of |G|.
Subgroup fitting(const FiniteGroup& g);

bool is_nilpotent(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_eppo(const FiniteGroup& g); // every element of prime power order

Subgroup derived_subgroup(const FiniteGroup& g);
/// G = G^(0) > G^(1) > ... down to the stable term (included once).
std::vector<Subgroup> derived_series(const FiniteGroup& g);
/// Z(G) <= Z2(G) <= ... up to the stable term (included once).
std::vector<Subgroup> upper_central_series(const FiniteGroup& g);

bool is_perfect(const FiniteGroup& g);
bool is_simple(const FiniteGroup& g);     // requires |G| > 1
bool is_quasisimple(const FiniteGroup& g);

/// Prime graph: edge p-q iff some element order is divisible by pq.
struct PrimeGraph {
    std::vector<int> primes;
    std::vector<std::pair<int, int>> edges; // (p,q) with p<q, sorted
    bool has_edge(int p, int q) const;
    /// True iff every edge touches the center and all other primes are
    /// leaves (an isolated single vertex also counts, a lone K2 counts
    /// with either end as center).
    bool is_star_centered_at(int center) const;
};

PrimeGraph gk_graph(const FiniteGroup& g);

/// K normal with 1 < K < G, and C_K(x) = 1 for every x outside K.
bool is_frobenius_with_kernel(const FiniteGroup& g, const Subgroup& k); // throws BadKernel

// p-group operators; all throw NotAPGroup unless |P| is a prime power.
Subgroup omega1(const Subgroup& p_sub);     // generated by elements of order dividing p
Subgroup agemo1(const Subgroup& p_sub);     // generated by p-th powers
Subgroup frattini_p(const Subgroup& p_sub); // derived * agemo1
bool is_special_p(const Subgroup& p_sub);   // Z = derived = Frattini, elementary abelian
bool is_extraspecial(const Subgroup& p_sub);

/// Subgroup generated by quasisimple subnormal subgroups, detected through
/// normal closures of conjugacy classes (sufficient at catalog scale).
/// Returns nothing when |G| exceeds the stated search bound.
std::optional<Subgroup> layer(const FiniteGroup& g, int bound = 1000);

struct StructureFlags {
    bool nilpotent = false;
    bool solvable = false;
    bool perfect = false;
    bool simple = false;
    bool quasisimple = false;
    bool eppo = false;
};

struct StructureReport {
    std::vector<int> pi;
    int exponent = 1;
    Subgroup center;
    std::vector<Subgroup> derived_series;
    std::vector<Subgroup> upper_central;
    std::map<int, Subgroup> sylow;
    std::map<int, Subgroup> o_p;
    Subgroup fitting;
    StructureFlags flags;
};

StructureReport structure_report(const FiniteGroup& g);

} // namespace orb
