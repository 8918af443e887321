#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orb/action.hpp"
#include "orb/group.hpp"

namespace orb {

/// Facts an instance is expected to reproduce; checked by the verifier.
/// Empty optionals mean "no expectation recorded".
struct ExpectedFacts {
    std::optional<std::vector<int>> orbit_sizes; // nonidentity orbit sizes, ascending
    std::optional<std::string> shape;            // GraphShape::str() value
    std::optional<std::string> theorem_case;     // classifier tag
    std::optional<int> singular_orbit_size;
    std::optional<int> singular_rep_order;
    std::optional<int> triangle_count;
    std::string note; // what the expectation asserts, in words
};

struct CatalogAction {
    std::string name;
    ActionSpec action;
    ExpectedFacts expected;
};

struct CatalogEntry {
    std::string name;
    FiniteGroup group;
    std::vector<CatalogAction> actions;
};

/// Direct product of two elementary abelian groups with a coprime acting
/// pair: a multiplicative field generator per factor. Requires p not to
/// divide q^m - 1 and q not to divide p^n - 1 (CoprimalityViolated), and
/// the fields must be within the supported range (OutOfRange).
CatalogEntry gf_frobenius_pair(int p, int n, int q, int m);

/// All hard-coded instances with their expected facts. full-Aut searches
/// run under the given budget.
std::vector<CatalogEntry> paper_catalog(long long aut_budget = 50'000'000);

} // namespace orb
