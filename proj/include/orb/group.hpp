#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orb/errors.hpp"

namespace orb {

/// A finite group on element indices 0..order-1, identity at index 0.
///
/// Groups of order <= kDenseLimit store a dense multiplication table;
/// larger groups keep a multiplication oracle supplied by their builder.
/// Instances are immutable after construction, so any number of threads
/// may read them concurrently.
class FiniteGroup {
public:
    static constexpr int kDenseLimit = 4096;

    FiniteGroup() = default;

    static FiniteGroup from_table(int n, std::vector<int> table, std::string name,
                                  std::vector<std::string> labels = {});
    static FiniteGroup from_oracle(int n, std::function<int(int, int)> mul, std::string name,
                                   std::vector<std::string> labels = {});

    int order() const { return n_; }

    int mul(int a, int b) const {
        return table_.empty() ? oracle_(a, b) : int(table_[size_t(a) * n_ + b]);
    }
    int inv(int a) const { return inv_[a]; }

    /// a^g = g^{-1} a g
    int conj(int a, int g) const { return mul(mul(inv(g), a), g); }
    /// [a,b] = a^{-1} b^{-1} a b
    int comm(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

    int pow(int a, long long k) const;
    int element_order(int a) const { return order_of_[a]; }
    bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
    bool is_abelian() const;

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const std::string& label(int i) const;
    bool has_labels() const { return !labels_.empty(); }

    /// Full group-axiom audit for order <= 256, sampled (>= 10*order random
    /// triples) above. Throws AuditFailure on violation.
    void audit() const;

    /// Small generating set: repeatedly adjoin the element with maximal
    /// closure gain, ties broken by minimal index.
    std::vector<int> greedy_generators() const;

private:
    int n_ = 0;
    std::vector<std::uint16_t> table_;
    std::function<int(int, int)> oracle_;
    std::vector<int> inv_;
    std::vector<int> order_of_;
    std::vector<std::string> labels_;
    std::string name_;

    void finish_init();
};

/// Explicit element subset of a parent group, closed under mul and inv.
class Subgroup {
public:
    Subgroup(const FiniteGroup& parent, std::vector<int> members);

    const FiniteGroup& parent() const { return *parent_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return int(members_.size()); }
    bool contains(int x) const { return mask_[x]; }
    bool is_trivial() const { return members_.size() == 1; }
    bool is_whole_group() const { return size() == parent_->order(); }

private:
    const FiniteGroup* parent_;
    std::vector<int> members_; // ascending
    std::vector<char> mask_;
};

/// Subgroup re-indexed as a standalone group; to_parent maps new indices back.
struct InducedGroup {
    FiniteGroup group;
    std::vector<int> to_parent;
    std::vector<int> from_parent; // -1 outside the subgroup
};

struct QuotientGroup {
    Subgroup kernel;
    std::vector<int> coset_of; // parent element -> coset index
    FiniteGroup quotient;
};

Subgroup closure(const FiniteGroup& parent, const std::vector<int>& generators);
Subgroup trivial_subgroup(const FiniteGroup& parent);
Subgroup whole_group(const FiniteGroup& parent);

int element_order(const FiniteGroup& g, int x);

Subgroup centralizer(const FiniteGroup& parent, const std::vector<int>& s);
Subgroup center(const FiniteGroup& g);

/// Conjugacy classes, each sorted ascending, classes ordered by minimal member.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);
std::vector<int> class_of(const FiniteGroup& g, int x);

Subgroup normal_closure(const FiniteGroup& g, const std::vector<int>& s);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

InducedGroup as_group(const Subgroup& h);
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n);

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Semidirect product N x| H. action[h] is the image array of the
/// automorphism of N induced by h; it must be a homomorphism in h.
/// Element (n,h) has index n*|H|+h.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& action);

/// Central product identifying central subgroups of equal order;
/// identification maps elements of a central subgroup of g to their
/// partners in a central subgroup of h (an isomorphism).
FiniteGroup central_product(const FiniteGroup& g, const FiniteGroup& h,
                            const std::vector<std::pair<int, int>>& identification);

} // namespace orb
