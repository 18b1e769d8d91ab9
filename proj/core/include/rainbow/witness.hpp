#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

enum class WitnessKind : std::uint8_t { Path, Cycle };

/// A path or cycle together with the injection from its edges into graph
/// indices. assignment[k] colors edge k of the vertex sequence; for a cycle
/// the last entry colors the closing edge back to vertices.front().
struct TransversalWitness {
    WitnessKind kind = WitnessKind::Path;
    std::vector<Vertex> vertices;
    std::vector<int> assignment;

    int order() const { return static_cast<int>(vertices.size()); }

    int edge_count() const {
        if (kind == WitnessKind::Cycle)
            return order();
        return order() > 0 ? order() - 1 : 0;
    }

    Vertex edge_a(int k) const { return vertices[static_cast<std::size_t>(k)]; }
    Vertex edge_b(int k) const {
        return vertices[static_cast<std::size_t>((k + 1) % order())];
    }

    TransversalWitness reversed() const {
        TransversalWitness w = *this;
        std::reverse(w.vertices.begin(), w.vertices.end());
        if (kind == WitnessKind::Path) {
            std::reverse(w.assignment.begin(), w.assignment.end());
        } else {
            // closing edge stays last: edge k of the reverse runs
            // (v[n-1-k], v[n-2-k]) so rotate the reversed assignment by one.
            std::reverse(w.assignment.begin(), w.assignment.end());
            std::rotate(w.assignment.begin(), w.assignment.end() - 1, w.assignment.end());
        }
        return w;
    }

    friend bool operator==(const TransversalWitness &, const TransversalWitness &) = default;
};

inline TransversalWitness make_path_witness(std::vector<Vertex> vs, std::vector<int> colors) {
    return TransversalWitness{WitnessKind::Path, std::move(vs), std::move(colors)};
}

inline TransversalWitness make_cycle_witness(std::vector<Vertex> vs, std::vector<int> colors) {
    return TransversalWitness{WitnessKind::Cycle, std::move(vs), std::move(colors)};
}

enum class ViolationKind : std::uint8_t {
    BadShape,        // empty sequence, odd/short cycle, assignment length mismatch
    IndexOutOfRange, // vertex index outside [0, n)
    AlternationBroken,
    DuplicateVertex,
    ColorOutOfRange,
    DuplicateColor,
    MissingEdge, // edge absent from the graph it was assigned to
};

std::string to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    int position; // vertex or edge index the violation anchors to, -1 if global
    std::string detail;
};

/// Result of the project-wide oracle. Violations are data, not faults: every
/// broken invariant is reported with its offending position.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

ValidationReport validate_witness(const GraphCollection &c, const TransversalWitness &w);

} // namespace rainbow
