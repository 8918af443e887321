#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orb/field.hpp"
#include "orb/group.hpp"

namespace orb {

FiniteGroup cyclic(int n);
FiniteGroup elementary_abelian(int p, int k);
FiniteGroup dihedral(int order); // order = 2n, n >= 2
FiniteGroup quaternion8();
FiniteGroup dicyclic12();

/// Symmetric/alternating groups on {0..n-1}, elements enumerated in
/// lexicographic image order (identity first). Keeps the permutation
/// images so callers can build conjugation maps by arbitrary elements.
struct PermStore {
    std::vector<std::vector<int>> perms; // perms[i] = image array of element i
    std::unordered_map<std::string, int> index;
};

struct PermGroup {
    FiniteGroup group;
    int degree = 0;
    std::shared_ptr<const PermStore> store;
    const std::vector<std::vector<int>>& perms() const { return store->perms; }
    const std::vector<int>& perm(int i) const { return store->perms[i]; }
    int index_of(const std::vector<int>& perm) const;
};

PermGroup sym(int n); // n <= 6
PermGroup alt(int n); // n <= 6

/// Permutation group generated by the given image arrays (BFS closure).
PermGroup permutation_group(int degree, const std::vector<std::vector<int>>& generators,
                            const std::string& name, int bound = 100000);

FiniteGroup extraspecial_p3_exp_p(int p); // odd prime <= 7

struct MatStore {
    std::vector<Matrix> matrices; // matrices[i] belongs to group index i
    std::unordered_map<std::string, int> index;
};

/// Matrix group with stored canonical elements.
struct MatGroup {
    FiniteGroup group;
    GaloisField field;
    std::shared_ptr<const MatStore> store;
    const Matrix& matrix(int i) const { return store->matrices[i]; }
    int index_of(const Matrix& m) const;
};

MatGroup matrix_group(const GaloisField& field, const std::vector<Matrix>& generators,
                      const std::string& name = "matgrp", int bound = 100000);

MatGroup sl2(int q);          // q in {3,4,5,7,9}
FiniteGroup psl2(int q);      // sl2(q) / center

} // namespace orb
