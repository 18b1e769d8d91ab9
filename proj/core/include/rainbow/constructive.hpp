#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "rainbow/extremal.hpp"
#include "rainbow/witness.hpp"

namespace rainbow::constructive {

/// A required hypothesis does not hold for the input; carries its name.
class NotApplicableError : public std::runtime_error {
  public:
    explicit NotApplicableError(std::string hypothesis)
        : std::runtime_error("hypothesis violated: " + hypothesis), hypothesis_(std::move(hypothesis)) {}
    const std::string &hypothesis() const { return hypothesis_; }

  private:
    std::string hypothesis_;
};

/// Case analysis ran out of moves on an input that satisfies the hypotheses.
/// The engine's progress argument rules this out, so it signals a bug, not an
/// input condition.
class InternalExhaustionError : public std::runtime_error {
  public:
    InternalExhaustionError(std::string phase, std::string state)
        : std::runtime_error("internal exhaustion in " + phase + ": " + state), phase_(std::move(phase)) {}
    const std::string &phase() const { return phase_; }

  private:
    std::string phase_;
};

/// The standard position of the endgame: a transversal cycle on all vertices
/// but x and y, with the assignment read positionally so that the edge leaving
/// position i carries color_at(i). Position arithmetic is 1-based modulo the
/// cycle length, matching the subscript convention of the case analysis.
struct CycleConfig {
    TransversalWitness cycle; // kind Cycle, vertices[0] on side X
    Vertex x{Side::X, 0};     // leftover X vertex
    Vertex y{Side::Y, 0};     // leftover Y vertex
    int free_color = 0;       // the one unused graph index

    int length() const { return cycle.order(); }
    int part_size() const { return length() / 2 + 1; }

    /// Map any integer to a 1-based position on the cycle.
    int norm(int i) const {
        const int L = length();
        int r = i % L;
        return r <= 0 ? r + L : r;
    }

    Vertex u(int i) const { return cycle.vertices[static_cast<std::size_t>(norm(i) - 1)]; }

    /// Color of the edge (u_i, u_{i+1}).
    int color_at(int i) const { return cycle.assignment[static_cast<std::size_t>(norm(i) - 1)]; }

    /// Throws std::invalid_argument unless all structural invariants hold
    /// against c (odd positions on X, leftovers off the cycle, free color
    /// unused, oracle-valid cycle).
    void check_valid(const GraphCollection &c) const;

    /// Normalize an arbitrary transversal cycle covering all vertices except
    /// two (one per side) into a config: rotated to start at the smallest
    /// X index, direction chosen by the smaller successor index. The free
    /// color may be given explicitly when more than one index is unused.
    static CycleConfig from_cycle(const GraphCollection &c, const TransversalWitness &cycle,
                                  std::optional<int> free = std::nullopt);
};

/// The digraph whose arcs record usable recoloring moves: position i (odd,
/// an X vertex of the cycle) points at every neighbor of u_i in the graph
/// coloring edge i, except u_{i+1}.
struct AuxiliaryDigraph {
    int length = 0;                            // cycle length 2n-2
    std::vector<std::uint64_t> out_by_pos;     // [1..length], odd entries used; mask over Y indices
    std::vector<int> in_degree_by_y;           // by Y-vertex index
    std::vector<int> out_degree_by_pos;        // [1..length]
    long long arc_count = 0;

    bool has_arc(int pos, Vertex target) const {
        return target.side == Side::Y &&
               ((out_by_pos[static_cast<std::size_t>(pos)] >> target.index) & 1u) != 0;
    }
    int in_degree(Vertex v) const {
        return v.side == Side::Y ? in_degree_by_y[static_cast<std::size_t>(v.index)] : 0;
    }
    int out_degree(int pos) const { return out_degree_by_pos[static_cast<std::size_t>(pos)]; }
};

/// Arc set per the defining equation; degree tables are cross-checked and the
/// arc-count lower bound (n-1)(ceil(n/2)-1) is asserted whenever the
/// collection's minimum degree reaches ceil(n/2).
AuxiliaryDigraph build_aux_digraph(const GraphCollection &c, const CycleConfig &cfg);

// ---- path growth -----------------------------------------------------------

struct LongerPath {
    TransversalWitness path;
};

/// A closed partial cycle of order < 2n-2 that still admits an attachment
/// chain (so the caller can convert it into a strictly longer path).
struct ClosedCycle {
    TransversalWitness cycle;
    int order = 0;
};

struct StuckFacts {
    bool rotation_exhausted = false;
    bool closure_exhausted = false; // no closed cycle admits an attachment
    std::vector<int> complete_between_leftovers; // free colors m with G_m[X',Y'] complete
    std::string detail;
};

using GrowOutcome = std::variant<LongerPath, ClosedCycle, StuckFacts>;

/// One growth step: extend at an end, rotate a new endpoint in, or close the
/// path into a cycle that an attachment chain can lengthen. Stuck outcomes
/// carry the structural facts the extremal escalation relies on.
/// Requires an oracle-valid path of order < 2n-2 with at least 3 free colors.
GrowOutcome grow_path(const GraphCollection &c, const TransversalWitness &p);

// ---- the two-free-color bridge ---------------------------------------------

struct CycleFound {
    TransversalWitness cycle;
};

/// Verified edge memberships of the two attachment pairs. a is the edge from
/// the head of the path to the opposite-side leftover; b the edge from the
/// tail to the head-side leftover. When no cycle exists, at least one of
/// {a in l1, b in l2} and one of {a in l2, b in l1} holds.
struct ForcedEdges {
    bool a_in_l1 = false, a_in_l2 = false;
    bool b_in_l1 = false, b_in_l2 = false;
};

using BridgeOutcome = std::variant<CycleFound, ForcedEdges>;

/// On a path of order 2n-2 with free colors {l1, l2}: either closes a cycle
/// of order 2n-2 through a pivot chord pair, or returns the forced edge
/// conclusions that the caller's case analysis continues with.
BridgeOutcome claim2_bridge(const GraphCollection &c, const TransversalWitness &p, int l1, int l2);

// ---- solvers ----------------------------------------------------------------

using Thm13Outcome = std::variant<TransversalWitness, extremal::ExtremalCertificate>;
using ConfigOutcome = std::variant<CycleConfig, TransversalWitness, extremal::ExtremalCertificate>;

/// Grows a path to order 2n-2 and converts it into a cycle of order 2n-2
/// (the config), short-circuiting into a full Hamiltonian path when one
/// appears, or certifying the double complete family.
ConfigOutcome build_cycle_config(const GraphCollection &c);

/// Four-edge rewiring at an even position k with in-degree at least
/// floor(n/2) and |(N_free(x) u N_k(y)) n V(C)| >= n-1.
std::optional<TransversalWitness> surgery_lemma21(const GraphCollection &c, const CycleConfig &cfg,
                                                  const AuxiliaryDigraph &d, int k);

/// Three-edge rewiring at an even position k with
/// indeg(u_k) + |N_k(x) n V(C)| >= n-1 and u_{k+1}y in the free graph.
std::optional<TransversalWitness> surgery_lemma22(const GraphCollection &c, const CycleConfig &cfg,
                                                  const AuxiliaryDigraph &d, int k);

/// Minimum degree ceil(n/2) forces a transversal Hamiltonian path unless the
/// collection is the double complete family.
Thm13Outcome solve_thm13(const GraphCollection &c);

using Thm14Outcome = std::variant<TransversalWitness, extremal::FFamilyCertificate>;

/// Minimum degree ceil((n+1)/2) forces a transversal Hamiltonian path between
/// x and y unless the collection is an F/F' family whose apexes are exactly
/// {x, y} after deleting them.
Thm14Outcome solve_thm14(const GraphCollection &c, Vertex x, Vertex y);

} // namespace rainbow::constructive
