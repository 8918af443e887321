#pragma once

#include <string>

#include "orb/action.hpp"
#include "orb/group.hpp"

namespace orb {

/// Parse a group description. Accepted JSON shapes:
///   {"kind": <family>, "params": {...}}
///     families: cyclic{n}, elementary_abelian{p,k}, dihedral{order},
///               quaternion8, dicyclic12, extraspecial{p}, sym{n}, alt{n},
///               sl2{q}, psl2{q}
///   {"generators": {"degree": d, "perms": [[...], ...]}}
///   {"generators": {"field": {"p": p, "k": k}, "matrices": [[[...]], ...]}}
/// Throws InputError on malformed input.
FiniteGroup parse_group(const std::string& text);

/// Parse an action description for a given group:
///   {"action": "inner"} | {"action": "full_aut"}
///   {"maps": [[...], ...]}       explicit automorphism image arrays
///   {"overgroup": [[...], ...]}  same arrays, tagged as an overgroup action
/// Throws InputError on malformed input, BadAction on invalid maps.
ActionSpec parse_action(const FiniteGroup& g, const std::string& text,
                        long long aut_budget = 50'000'000);

std::string read_file(const std::string& path); // throws InputError

} // namespace orb
