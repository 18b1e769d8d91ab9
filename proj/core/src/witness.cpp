#include "rainbow/witness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rainbow {

std::string to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::BadShape: return "bad-shape";
    case ViolationKind::IndexOutOfRange: return "index-out-of-range";
    case ViolationKind::AlternationBroken: return "alternation-broken";
    case ViolationKind::DuplicateVertex: return "duplicate-vertex";
    case ViolationKind::ColorOutOfRange: return "color-out-of-range";
    case ViolationKind::DuplicateColor: return "duplicate-color";
    case ViolationKind::MissingEdge: return "missing-edge";
    }
    return "unknown";
}

std::string ValidationReport::to_string() const {
    if (ok())
        return "accept";
    std::ostringstream out;
    out << "reject:";
    for (const auto &v : violations) {
        out << " [" << rainbow::to_string(v.kind);
        if (v.position >= 0)
            out << " @" << v.position;
        if (!v.detail.empty())
            out << " " << v.detail;
        out << "]";
    }
    return out.str();
}

ValidationReport validate_witness(const GraphCollection &c, const TransversalWitness &w) {
    ValidationReport report;
    auto flag = [&](ViolationKind kind, int pos, std::string detail) {
        report.violations.push_back(Violation{kind, pos, std::move(detail)});
    };

    const int order = w.order();
    if (order == 0) {
        flag(ViolationKind::BadShape, -1, "empty vertex sequence");
        return report;
    }
    if (w.kind == WitnessKind::Cycle && (order < 4 || order % 2 != 0))
        flag(ViolationKind::BadShape, -1, "cycle order must be even and >= 4");

    const int expected_edges = w.kind == WitnessKind::Cycle ? order : order - 1;
    const bool lengths_match = static_cast<int>(w.assignment.size()) == expected_edges;
    if (!lengths_match)
        flag(ViolationKind::BadShape, -1,
             "assignment has " + std::to_string(w.assignment.size()) + " entries for " +
                 std::to_string(expected_edges) + " edges");

    bool indices_ok = true;
    for (int i = 0; i < order; ++i) {
        const Vertex v = w.vertices[static_cast<std::size_t>(i)];
        if (v.index < 0 || v.index >= c.n) {
            flag(ViolationKind::IndexOutOfRange, i, to_string(v));
            indices_ok = false;
        }
    }

    for (int i = 0; i + 1 < order; ++i)
        if (w.vertices[static_cast<std::size_t>(i)].side == w.vertices[static_cast<std::size_t>(i + 1)].side)
            flag(ViolationKind::AlternationBroken, i, "");
    if (w.kind == WitnessKind::Cycle && order >= 2 && w.vertices.back().side == w.vertices.front().side)
        flag(ViolationKind::AlternationBroken, order - 1, "closing edge");

    std::set<Vertex> seen;
    for (int i = 0; i < order; ++i)
        if (!seen.insert(w.vertices[static_cast<std::size_t>(i)]).second)
            flag(ViolationKind::DuplicateVertex, i, to_string(w.vertices[static_cast<std::size_t>(i)]));

    std::set<int> used_colors;
    for (int k = 0; k < static_cast<int>(w.assignment.size()); ++k) {
        const int color = w.assignment[static_cast<std::size_t>(k)];
        if (color < 0 || color >= c.size()) {
            flag(ViolationKind::ColorOutOfRange, k, std::to_string(color));
            continue;
        }
        if (!used_colors.insert(color).second)
            flag(ViolationKind::DuplicateColor, k, std::to_string(color));
    }

    if (lengths_match && indices_ok) {
        for (int k = 0; k < expected_edges; ++k) {
            const int color = w.assignment[static_cast<std::size_t>(k)];
            if (color < 0 || color >= c.size())
                continue;
            const Vertex a = w.edge_a(k);
            const Vertex b = w.edge_b(k);
            if (a.side == b.side)
                continue; // already reported as alternation
            if (!c[color].adjacent(a, b))
                flag(ViolationKind::MissingEdge, k,
                     to_string(a) + "-" + to_string(b) + " not in graph " + std::to_string(color));
        }
    }

    return report;
}

} // namespace rainbow
