#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

enum class Side : std::uint8_t { X = 0, Y = 1 };

constexpr Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }

inline char side_char(Side s) { return s == Side::X ? 'x' : 'y'; }

/// A vertex of the shared bipartition: one of the n vertices on side X or Y.
struct Vertex {
    Side side;
    int index;

    friend constexpr auto operator<=>(const Vertex &, const Vertex &) = default;
};

inline Vertex vx(int index) { return Vertex{Side::X, index}; }
inline Vertex vy(int index) { return Vertex{Side::Y, index}; }

inline std::string to_string(Vertex v) {
    return std::string(1, side_char(v.side)) + std::to_string(v.index);
}

/// Balanced bipartite graph on parts of size n, stored as one n-bit row mask
/// per X-vertex. n is capped at 64 so every neighborhood fits a machine word
/// and the lemma surgeries become word operations.
class BipartiteGraph {
  public:
    static constexpr int max_n = 64;

    explicit BipartiteGraph(int n) : n_(n), rows_(static_cast<std::size_t>(check_n(n)), 0) {}

    BipartiteGraph(int n, const std::vector<std::pair<int, int>> &edges) : BipartiteGraph(n) {
        for (auto [xi, yj] : edges)
            set_edge(xi, yj);
    }

    int n() const { return n_; }

    bool has_edge(int xi, int yj) const {
        check_index(xi);
        check_index(yj);
        return (rows_[static_cast<std::size_t>(xi)] >> yj) & 1u;
    }

    /// Adjacency for arbitrary vertex pairs; same-side pairs are never adjacent.
    bool adjacent(Vertex a, Vertex b) const {
        if (a.side == b.side)
            return false;
        if (a.side == Side::Y)
            std::swap(a, b);
        return has_edge(a.index, b.index);
    }

    void set_edge(int xi, int yj, bool present = true) {
        check_index(xi);
        check_index(yj);
        if (present)
            rows_[static_cast<std::size_t>(xi)] |= std::uint64_t{1} << yj;
        else
            rows_[static_cast<std::size_t>(xi)] &= ~(std::uint64_t{1} << yj);
    }

    void toggle_edge(int xi, int yj) { set_edge(xi, yj, !has_edge(xi, yj)); }

    /// Neighborhood of X-vertex xi as a bitmask over Y indices.
    std::uint64_t row(int xi) const {
        check_index(xi);
        return rows_[static_cast<std::size_t>(xi)];
    }

    /// Neighborhood of Y-vertex yj as a bitmask over X indices.
    std::uint64_t col(int yj) const {
        check_index(yj);
        std::uint64_t mask = 0;
        for (int xi = 0; xi < n_; ++xi)
            mask |= ((rows_[static_cast<std::size_t>(xi)] >> yj) & 1u) << xi;
        return mask;
    }

    /// Neighborhood of any vertex as a bitmask over opposite-side indices.
    std::uint64_t neighbors(Vertex v) const { return v.side == Side::X ? row(v.index) : col(v.index); }

    int degree(Vertex v) const { return std::popcount(neighbors(v)); }

    int min_degree() const {
        int best = n_;
        for (int i = 0; i < n_; ++i) {
            best = std::min(best, std::popcount(row(i)));
            best = std::min(best, std::popcount(col(i)));
        }
        return best;
    }

    long long edge_count() const {
        long long total = 0;
        for (std::uint64_t r : rows_)
            total += std::popcount(r);
        return total;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int xi = 0; xi < n_; ++xi)
            for (std::uint64_t r = row(xi); r != 0; r &= r - 1)
                out.emplace_back(xi, std::countr_zero(r));
        return out;
    }

    friend bool operator==(const BipartiteGraph &, const BipartiteGraph &) = default;

  private:
    static int check_n(int n) {
        if (n < 1 || n > max_n)
            throw std::invalid_argument("part size must be in [1, 64], got " + std::to_string(n));
        return n;
    }

    void check_index(int i) const {
        if (i < 0 || i >= n_)
            throw std::invalid_argument("vertex index " + std::to_string(i) + " out of range [0, " +
                                        std::to_string(n_) + ")");
    }

    int n_;
    std::vector<std::uint64_t> rows_;
};

inline int degree(const BipartiteGraph &g, Vertex v) { return g.degree(v); }
inline int min_degree(const BipartiteGraph &g) { return g.min_degree(); }

/// Ordered collection of bipartite graphs on one shared vertex set. The edge
/// assigned to index i of a witness must come from graphs[i].
struct GraphCollection {
    int n = 0;
    std::vector<BipartiteGraph> graphs;

    GraphCollection() = default;

    explicit GraphCollection(std::vector<BipartiteGraph> gs) : graphs(std::move(gs)) {
        if (graphs.empty())
            throw std::invalid_argument("collection must contain at least one graph");
        n = graphs.front().n();
        for (const auto &g : graphs)
            if (g.n() != n)
                throw std::invalid_argument("all graphs in a collection must share the same part size");
    }

    int size() const { return static_cast<int>(graphs.size()); }

    const BipartiteGraph &operator[](int i) const { return graphs.at(static_cast<std::size_t>(i)); }
};

inline int collection_min_degree(const GraphCollection &c) {
    if (c.graphs.empty())
        throw std::invalid_argument("collection_min_degree on empty collection");
    int best = c.n;
    for (const auto &g : c.graphs)
        best = std::min(best, g.min_degree());
    return best;
}

/// Union of all member graphs; the exact solver orders its branching by
/// degrees in this graph.
inline BipartiteGraph union_graph(const GraphCollection &c) {
    BipartiteGraph u(c.n);
    for (int xi = 0; xi < c.n; ++xi) {
        std::uint64_t r = 0;
        for (const auto &g : c.graphs)
            r |= g.row(xi);
        for (std::uint64_t bits = r; bits != 0; bits &= bits - 1)
            u.set_edge(xi, std::countr_zero(bits));
    }
    return u;
}

} // namespace rainbow
