#pragma once

#include <optional>
#include <utility>

#include "rainbow/witness.hpp"

namespace rainbow::exact {

/// Complete search for a transversal Hamiltonian path: a path on all 2n
/// vertices whose 2n-1 edges receive pairwise distinct graph indices.
/// Returns nullopt iff no such witness exists. Requires m >= 2n-1.
std::optional<TransversalWitness> find_thp(const GraphCollection &c);

/// As find_thp with the endpoints fixed to x (X side) and y (Y side).
std::optional<TransversalWitness> find_thp_between(const GraphCollection &c, Vertex x, Vertex y);

/// Complete search for a partial transversal cycle of even order l in [4, 2n].
/// Requires m >= l.
std::optional<TransversalWitness> find_partial_cycle(const GraphCollection &c, int l);

struct HamConnectivity {
    bool connected = false;
    std::optional<std::pair<Vertex, Vertex>> failing_pair; // lexicographically first
};

/// True iff find_thp_between succeeds for all n^2 cross-side pairs.
HamConnectivity is_ham_connected(const GraphCollection &c);

/// Number of (vertex sequence, color assignment) witness pairs, counting a
/// path and its reversal once (canonical orientation starts on the X side).
/// Guarded to n <= 5 and m <= 24.
long long count_thp(const GraphCollection &c);

} // namespace rainbow::exact
