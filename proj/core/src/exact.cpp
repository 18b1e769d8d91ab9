#include "rainbow/exact.hpp"

#include <algorithm>
#include <bit>

// Backtracking over vertex sequences with deferred color assignment. The
// search extends an alternating path and keeps only Hall feasibility of the
// "edge slot -> admissible graph index" relation, maintained by one
// augmenting-path pass per new slot. The concrete injection is extracted at
// the end by a lexicographically-minimal matching pass, which makes the
// returned witness a total function of the input.

namespace rainbow::exact {

namespace {

using u64 = std::uint64_t;

class Searcher {
  public:
    explicit Searcher(const GraphCollection &c)
        : c_(c), n_(c.n), m_(c.size()), union_(union_graph(c)) {
        if (m_ > 64)
            throw std::invalid_argument("exact search supports at most 64 graphs, got " +
                                        std::to_string(m_));
        color_mask_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
        for (int g = 0; g < m_; ++g)
            for (int xi = 0; xi < n_; ++xi)
                for (u64 r = c[g].row(xi); r != 0; r &= r - 1)
                    color_mask_[cell(xi, std::countr_zero(r))] |= u64{1} << g;
        match_color_.assign(static_cast<std::size_t>(m_), -1);
    }

    std::optional<TransversalWitness> path_search(int target_order, std::optional<Vertex> from,
                                                  std::optional<Vertex> to) {
        target_order_ = target_order;
        fixed_last_ = to;
        cycle_mode_ = false;
        found_.reset();
        for (Vertex root : roots(from)) {
            reset_state();
            push_vertex(root);
            dfs();
            pop_vertex();
            if (found_)
                return found_;
        }
        return std::nullopt;
    }

    std::optional<TransversalWitness> cycle_search(int l) {
        target_order_ = l;
        fixed_last_ = std::nullopt;
        cycle_mode_ = true;
        found_.reset();
        // the root is the minimum X-vertex of the cycle, so later X
        // candidates are restricted to larger indices
        for (int r = 0; r + l / 2 <= n_; ++r) {
            reset_state();
            min_x_index_ = r;
            push_vertex(vx(r));
            dfs();
            pop_vertex();
            if (found_)
                return found_;
        }
        return std::nullopt;
    }

    /// All full alternating sequences rooted on the X side, with the number
    /// of valid injections counted per sequence by a mask DP over colors.
    long long count_paths() {
        target_order_ = 2 * n_;
        fixed_last_ = std::nullopt;
        cycle_mode_ = false;
        counting_ = true;
        count_ = 0;
        for (int r = 0; r < n_; ++r) {
            reset_state();
            push_vertex(vx(r));
            dfs();
            pop_vertex();
        }
        counting_ = false;
        return count_;
    }

  private:
    std::size_t cell(int xi, int yj) const {
        return static_cast<std::size_t>(xi) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(yj);
    }

    u64 edge_colors(Vertex a, Vertex b) const {
        if (a.side == Side::Y)
            std::swap(a, b);
        return color_mask_[cell(a.index, b.index)];
    }

    std::vector<Vertex> roots(std::optional<Vertex> from) const {
        if (from)
            return {*from};
        std::vector<Vertex> xs;
        for (int i = 0; i < n_; ++i)
            xs.push_back(vx(i));
        std::stable_sort(xs.begin(), xs.end(), [&](Vertex a, Vertex b) {
            return union_.degree(a) < union_.degree(b);
        });
        return xs;
    }

    void reset_state() {
        seq_.clear();
        slot_match_.clear();
        used_x_ = used_y_ = 0;
        std::fill(match_color_.begin(), match_color_.end(), -1);
        min_x_index_ = 0;
    }

    void push_vertex(Vertex v) {
        seq_.push_back(v);
        (v.side == Side::X ? used_x_ : used_y_) |= u64{1} << v.index;
    }

    void pop_vertex() {
        Vertex v = seq_.back();
        (v.side == Side::X ? used_x_ : used_y_) &= ~(u64{1} << v.index);
        seq_.pop_back();
    }

    // --- incremental slot-to-color matching (Hall feasibility) ---

    bool try_augment(int slot, u64 &visited) {
        for (u64 cand = slot_cands_[static_cast<std::size_t>(slot)] & ~visited; cand != 0;
             cand &= cand - 1) {
            const int color = std::countr_zero(cand);
            visited |= u64{1} << color;
            if (match_color_[static_cast<std::size_t>(color)] < 0 ||
                try_augment(match_color_[static_cast<std::size_t>(color)], visited)) {
                match_color_[static_cast<std::size_t>(color)] = slot;
                slot_match_[static_cast<std::size_t>(slot)] = color;
                return true;
            }
        }
        return false;
    }

    bool push_slot(u64 cands) {
        slot_cands_.push_back(cands);
        slot_match_.push_back(-1);
        u64 visited = 0;
        if (try_augment(static_cast<int>(slot_match_.size()) - 1, visited))
            return true;
        pop_slot();
        return false;
    }

    void pop_slot() {
        const int slot = static_cast<int>(slot_match_.size()) - 1;
        const int color = slot_match_[static_cast<std::size_t>(slot)];
        if (color >= 0 && match_color_[static_cast<std::size_t>(color)] == slot)
            match_color_[static_cast<std::size_t>(color)] = -1;
        slot_match_.pop_back();
        slot_cands_.pop_back();
    }

    /// Feasibility of assigning the remaining slots if `fixed` colors are
    /// already taken; used by the lexicographic extraction.
    bool feasible_with(const std::vector<u64> &cands, std::vector<int> &chosen, std::size_t from,
                       u64 taken) const {
        std::vector<int> color_owner(static_cast<std::size_t>(m_), -1);
        std::vector<int> slot_color(cands.size() - from, -1);
        for (std::size_t s = from; s < cands.size(); ++s) {
            u64 visited = taken;
            if (!extract_augment(cands, from, s, visited, color_owner, slot_color))
                return false;
        }
        for (std::size_t s = from; s < cands.size(); ++s)
            chosen[s] = slot_color[s - from];
        return true;
    }

    bool extract_augment(const std::vector<u64> &cands, std::size_t from, std::size_t slot,
                         u64 &visited, std::vector<int> &color_owner,
                         std::vector<int> &slot_color) const {
        for (u64 cs = cands[slot] & ~visited; cs != 0; cs &= cs - 1) {
            const int color = std::countr_zero(cs);
            visited |= u64{1} << color;
            const int owner = color_owner[static_cast<std::size_t>(color)];
            if (owner < 0 || extract_augment(cands, from, static_cast<std::size_t>(owner), visited,
                                             color_owner, slot_color)) {
                color_owner[static_cast<std::size_t>(color)] = static_cast<int>(slot);
                slot_color[slot - from] = color;
                return true;
            }
        }
        return false;
    }

    /// Lexicographically smallest valid assignment for the current sequence.
    std::vector<int> extract_assignment() {
        const std::size_t k = slot_cands_.size();
        std::vector<int> out(k, -1);
        u64 taken = 0;
        for (std::size_t s = 0; s < k; ++s) {
            for (u64 cs = slot_cands_[s] & ~taken; cs != 0; cs &= cs - 1) {
                const int color = std::countr_zero(cs);
                std::vector<int> rest(k, -1);
                if (feasible_with(slot_cands_, rest, s + 1, taken | (u64{1} << color))) {
                    out[s] = color;
                    taken |= u64{1} << color;
                    break;
                }
            }
        }
        return out;
    }

    long long count_assignments() const {
        // DP over slots; dp maps used-color mask -> number of injections
        std::vector<std::pair<u64, long long>> dp{{0, 1}}, next;
        for (u64 cands : slot_cands_) {
            next.clear();
            for (const auto &[mask, ways] : dp)
                for (u64 cs = cands & ~mask; cs != 0; cs &= cs - 1) {
                    const u64 nm = mask | (u64{1} << std::countr_zero(cs));
                    next.emplace_back(nm, ways);
                }
            std::sort(next.begin(), next.end());
            dp.clear();
            for (const auto &[mask, ways] : next)
                if (!dp.empty() && dp.back().first == mask)
                    dp.back().second += ways;
                else
                    dp.emplace_back(mask, ways);
        }
        long long total = 0;
        for (const auto &[mask, ways] : dp)
            total += ways;
        return total;
    }

    // --- vertex-level search ---

    bool prune_unreachable() const {
        // an unused vertex with no available neighbor can never be covered
        const Vertex head = seq_.back();
        const u64 avail_y = ~used_y_ | (head.side == Side::Y ? u64{1} << head.index : 0);
        const u64 avail_x = ~used_x_ | (head.side == Side::X ? u64{1} << head.index : 0);
        for (int xi = 0; xi < n_; ++xi)
            if (!((used_x_ >> xi) & 1u) && (union_.row(xi) & avail_y) == 0)
                return true;
        for (int yj = 0; yj < n_; ++yj)
            if (!((used_y_ >> yj) & 1u) && (union_.col(yj) & avail_x) == 0)
                return true;
        return false;
    }

    void dfs() {
        if (found_)
            return;
        if (static_cast<int>(seq_.size()) == target_order_) {
            if (cycle_mode_) {
                const u64 close = edge_colors(seq_.back(), seq_.front());
                if (close != 0 && push_slot(close)) {
                    found_ = make_cycle_witness(seq_, extract_assignment());
                    pop_slot();
                }
            } else if (counting_) {
                count_ += count_assignments();
            } else {
                found_ = make_path_witness(seq_, extract_assignment());
            }
            return;
        }
        // cycles of order l < 2n need not cover every vertex
        if (!cycle_mode_ && prune_unreachable())
            return;

        const Vertex head = seq_.back();
        const bool next_is_x = head.side == Side::Y;
        const bool last_slot = static_cast<int>(seq_.size()) == target_order_ - 1;
        u64 cands = next_is_x ? union_.col(head.index) & ~used_x_ : union_.row(head.index) & ~used_y_;
        if (cycle_mode_ && next_is_x && min_x_index_ + 1 < 64)
            cands &= ~0ull << (min_x_index_ + 1); // root is the minimum X index of the cycle
        std::vector<int> order;
        for (u64 m = cands; m != 0; m &= m - 1)
            order.push_back(std::countr_zero(m));
        const Side cand_side = next_is_x ? Side::X : Side::Y;
        if (fixed_last_) {
            // the fixed endpoint may appear only in the final position
            std::erase_if(order, [&](int i) {
                return Vertex{cand_side, i} == *fixed_last_ && !last_slot;
            });
            if (last_slot) {
                if (fixed_last_->side != cand_side)
                    return;
                std::erase_if(order, [&](int i) { return i != fixed_last_->index; });
            }
        }
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            const u64 rem_a = (next_is_x ? union_.row(a) : union_.col(a)) & ~(next_is_x ? used_y_ : used_x_);
            const u64 rem_b = (next_is_x ? union_.row(b) : union_.col(b)) & ~(next_is_x ? used_y_ : used_x_);
            return std::popcount(rem_a) < std::popcount(rem_b);
        });
        for (int i : order) {
            const Vertex v{cand_side, i};
            const u64 colors = edge_colors(head, v);
            if (colors == 0)
                continue;
            if (!push_slot(colors))
                continue;
            push_vertex(v);
            dfs();
            pop_vertex();
            pop_slot();
            if (found_)
                return;
        }
    }

    const GraphCollection &c_;
    int n_, m_;
    BipartiteGraph union_;
    std::vector<u64> color_mask_;

    std::vector<Vertex> seq_;
    u64 used_x_ = 0, used_y_ = 0;
    std::vector<u64> slot_cands_;
    std::vector<int> slot_match_;
    std::vector<int> match_color_;

    int target_order_ = 0;
    std::optional<Vertex> fixed_last_;
    bool cycle_mode_ = false;
    bool counting_ = false;
    int min_x_index_ = 0;
    std::optional<TransversalWitness> found_;
    long long count_ = 0;
};

void require_m(const GraphCollection &c, int needed, const char *op) {
    if (c.size() < needed)
        throw std::invalid_argument(std::string(op) + " requires at least " + std::to_string(needed) +
                                    " graphs, got " + std::to_string(c.size()));
}

} // namespace

std::optional<TransversalWitness> find_thp(const GraphCollection &c) {
    require_m(c, 2 * c.n - 1, "find_thp");
    return Searcher(c).path_search(2 * c.n, std::nullopt, std::nullopt);
}

std::optional<TransversalWitness> find_thp_between(const GraphCollection &c, Vertex x, Vertex y) {
    require_m(c, 2 * c.n - 1, "find_thp_between");
    if (x.side != Side::X || y.side != Side::Y)
        throw std::invalid_argument("find_thp_between expects x in X and y in Y");
    if (x.index < 0 || x.index >= c.n || y.index < 0 || y.index >= c.n)
        throw std::invalid_argument("find_thp_between endpoint out of range");
    return Searcher(c).path_search(2 * c.n, x, y);
}

std::optional<TransversalWitness> find_partial_cycle(const GraphCollection &c, int l) {
    if (l < 4 || l > 2 * c.n || l % 2 != 0)
        throw std::invalid_argument("cycle order must be even and in [4, 2n], got " + std::to_string(l));
    require_m(c, l, "find_partial_cycle");
    return Searcher(c).cycle_search(l);
}

HamConnectivity is_ham_connected(const GraphCollection &c) {
    require_m(c, 2 * c.n - 1, "is_ham_connected");
    for (int xi = 0; xi < c.n; ++xi)
        for (int yj = 0; yj < c.n; ++yj)
            if (!find_thp_between(c, vx(xi), vy(yj)))
                return HamConnectivity{false, std::make_pair(vx(xi), vy(yj))};
    return HamConnectivity{true, std::nullopt};
}

long long count_thp(const GraphCollection &c) {
    if (c.n > 5)
        throw std::invalid_argument("count_thp is guarded to n <= 5, got n = " + std::to_string(c.n));
    if (c.size() > 24)
        throw std::invalid_argument("count_thp is guarded to m <= 24 graphs");
    return Searcher(c).count_paths();
}

} // namespace rainbow::exact
