#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using namespace rainbow;

namespace {

// all injections for the given edge list, by plain recursion over colors
bool assign_colors(const GraphCollection &c, const std::vector<std::pair<Vertex, Vertex>> &edges,
                   std::size_t k, std::vector<bool> &used, std::vector<int> &out) {
    if (k == edges.size())
        return true;
    for (int g = 0; g < c.size(); ++g) {
        if (used[static_cast<std::size_t>(g)] || !c[g].adjacent(edges[k].first, edges[k].second))
            continue;
        used[static_cast<std::size_t>(g)] = true;
        out.push_back(g);
        if (assign_colors(c, edges, k + 1, used, out))
            return true;
        out.pop_back();
        used[static_cast<std::size_t>(g)] = false;
    }
    return false;
}

long long count_colorings(const GraphCollection &c, const std::vector<std::pair<Vertex, Vertex>> &edges,
                          std::size_t k, std::vector<bool> &used) {
    if (k == edges.size())
        return 1;
    long long total = 0;
    for (int g = 0; g < c.size(); ++g) {
        if (used[static_cast<std::size_t>(g)] || !c[g].adjacent(edges[k].first, edges[k].second))
            continue;
        used[static_cast<std::size_t>(g)] = true;
        total += count_colorings(c, edges, k + 1, used);
        used[static_cast<std::size_t>(g)] = false;
    }
    return total;
}

std::vector<std::pair<Vertex, Vertex>> path_edges(const std::vector<Vertex> &seq) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        edges.emplace_back(seq[i], seq[i + 1]);
    return edges;
}

std::optional<TransversalWitness> witness_for(const GraphCollection &c, const std::vector<Vertex> &seq,
                                              bool cycle) {
    auto edges = path_edges(seq);
    if (cycle)
        edges.emplace_back(seq.back(), seq.front());
    std::vector<bool> used(static_cast<std::size_t>(c.size()), false);
    std::vector<int> colors;
    if (!assign_colors(c, edges, 0, used, colors))
        return std::nullopt;
    return TransversalWitness{cycle ? WitnessKind::Cycle : WitnessKind::Path, seq, colors};
}

/// Interleave an X-permutation and a Y-permutation, starting on `first`.
std::vector<Vertex> interleave(const std::vector<int> &xs, const std::vector<int> &ys, Side first) {
    std::vector<Vertex> seq;
    const auto &a = first == Side::X ? xs : ys;
    const auto &b = first == Side::X ? ys : xs;
    for (std::size_t i = 0; i < a.size() || i < b.size(); ++i) {
        if (i < a.size())
            seq.push_back(Vertex{first, a[i]});
        if (i < b.size())
            seq.push_back(Vertex{opposite(first), b[i]});
    }
    return seq;
}

template <typename Fn> void for_each_sequence(int n, int half_x, int half_y, Side first, Fn &&fn) {
    std::vector<int> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
    std::iota(xs.begin(), xs.end(), 0);
    std::iota(ys.begin(), ys.end(), 0);
    // enumerate ordered selections via permutations of index prefixes
    std::sort(xs.begin(), xs.end());
    do {
        std::sort(ys.begin(), ys.end());
        std::vector<int> xsel(xs.begin(), xs.begin() + half_x);
        if (!std::is_sorted(xs.begin() + half_x, xs.end()))
            continue; // dedupe: tail order is irrelevant
        do {
            std::vector<int> ysel(ys.begin(), ys.begin() + half_y);
            if (!std::is_sorted(ys.begin() + half_y, ys.end()))
                continue;
            fn(interleave(xsel, ysel, first));
        } while (std::next_permutation(ys.begin(), ys.end()));
    } while (std::next_permutation(xs.begin(), xs.end()));
}

} // namespace

std::optional<TransversalWitness> find_thp(const GraphCollection &c) {
    std::optional<TransversalWitness> found;
    for_each_sequence(c.n, c.n, c.n, Side::X, [&](const std::vector<Vertex> &seq) {
        if (!found)
            found = witness_for(c, seq, false);
    });
    return found;
}

std::optional<TransversalWitness> find_thp_between(const GraphCollection &c, Vertex x, Vertex y) {
    // every Hamiltonian path between x in X and y in Y appears exactly once
    // in the X-first enumeration, oriented from x
    std::optional<TransversalWitness> found;
    for_each_sequence(c.n, c.n, c.n, Side::X, [&](const std::vector<Vertex> &seq) {
        if (!found && seq.front() == x && seq.back() == y)
            found = witness_for(c, seq, false);
    });
    return found;
}

std::optional<TransversalWitness> find_cycle(const GraphCollection &c, int l) {
    std::optional<TransversalWitness> found;
    for_each_sequence(c.n, l / 2, l / 2, Side::X, [&](const std::vector<Vertex> &seq) {
        if (!found)
            found = witness_for(c, seq, true);
    });
    return found;
}

long long count_thp(const GraphCollection &c) {
    long long total = 0;
    for_each_sequence(c.n, c.n, c.n, Side::X, [&](const std::vector<Vertex> &seq) {
        auto edges = path_edges(seq);
        std::vector<bool> used(static_cast<std::size_t>(c.size()), false);
        total += count_colorings(c, edges, 0, used);
    });
    return total;
}

} // namespace oracle
