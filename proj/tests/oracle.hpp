#pragma once

// Naive enumeration oracles, intentionally independent of the search-state
// pruning in rainbow::exact: vertex orders are enumerated from full
// permutations and color injections by plain recursion. Only usable at tiny n.

#include <optional>

#include "rainbow/witness.hpp"

namespace oracle {

std::optional<rainbow::TransversalWitness> find_thp(const rainbow::GraphCollection &c);
std::optional<rainbow::TransversalWitness> find_thp_between(const rainbow::GraphCollection &c,
                                                            rainbow::Vertex x, rainbow::Vertex y);
std::optional<rainbow::TransversalWitness> find_cycle(const rainbow::GraphCollection &c, int l);

/// (sequence, assignment) pairs with a path and its reversal counted once.
long long count_thp(const rainbow::GraphCollection &c);

} // namespace oracle
