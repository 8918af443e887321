#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orb/group.hpp"

namespace orb {

/// Element permutation preserving multiplication. image[0] == 0 always.
struct Automorphism {
    std::vector<int> image;
    int operator()(int x) const { return image[x]; }
};

/// Throws BadAction unless image is a bijection fixing 0 that preserves
/// multiplication (full pair check <= 4096 elements, sampled above).
void validate_automorphism(const FiniteGroup& g, const std::vector<int>& image);

enum class ActionKind { Inner, Overgroup, FullAut, Explicit };

/// An action is just its generator automorphisms; the acting group is
/// never enumerated.
struct ActionSpec {
    ActionKind kind = ActionKind::Explicit;
    std::vector<Automorphism> generators;
    std::string name;
};

struct OrbitPartition {
    std::vector<int> orbit_of; // element-index -> orbit id
    std::vector<int> reps;     // per-orbit minimal member
    std::vector<int> sizes;
    int count() const { return int(reps.size()); }
    std::vector<int> members(int orbit) const;
    /// Orbit sizes excluding the identity's singleton orbit.
    std::vector<int> nonidentity_sizes() const;
};

/// Conjugation maps by a generating set of G.
ActionSpec inner_action(const FiniteGroup& g);

/// Normal subgroup of H re-indexed as a standalone group, together with the
/// conjugation action of H's generators restricted to it.
struct OvergroupAction {
    InducedGroup target;
    ActionSpec action; // images in target indices
};

OvergroupAction overgroup_action(const FiniteGroup& h, const Subgroup& g); // throws NotNormal

/// Every automorphism of G, found by backtracking over images of a greedy
/// minimal generating sequence with class-fingerprint pruning. The budget
/// caps candidate map extensions; exceeding it throws AutBudgetExceeded,
/// never returns a partial answer.
ActionSpec full_aut(const FiniteGroup& g, long long budget = 50'000'000);

/// Orbit ids assigned by minimal member (identity's orbit is always 0).
OrbitPartition orbit_partition(const FiniteGroup& g, const ActionSpec& action);

/// All isomorphisms G -> H as image arrays (empty when none). Same search
/// core as full_aut. is_isomorphic stops at the first hit.
std::vector<std::vector<int>> find_isomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                                long long budget = 50'000'000,
                                                bool first_only = false);
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, long long budget = 50'000'000);

/// Coprime-action generation fact: the fixed-point subgroups of the
/// nontrivial elements of A generate G. Requires A (the closure of the
/// generator maps) elementary abelian, noncyclic and of order coprime to
/// |G|; otherwise throws HypothesisViolated.
bool coprime_facts_check(const FiniteGroup& g, const ActionSpec& action);

} // namespace orb
