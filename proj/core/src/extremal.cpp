#include "rainbow/extremal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace rainbow::extremal {

namespace {

std::uint64_t index_mask(const std::vector<int> &indices, int n) {
    std::uint64_t mask = 0;
    for (int i : indices) {
        if (i < 0 || i >= n)
            throw std::invalid_argument("subset index " + std::to_string(i) + " out of range");
        mask |= std::uint64_t{1} << i;
    }
    return mask;
}

std::vector<int> mask_to_indices(std::uint64_t mask) {
    std::vector<int> out;
    for (; mask != 0; mask &= mask - 1)
        out.push_back(std::countr_zero(mask));
    return out;
}

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

} // namespace

FFrame FFrame::canonical(int n) {
    FFrame frame;
    frame.n = n;
    frame.x_star = vx(0);
    frame.y_star = vy(0);
    const int half = (n - 1) / 2;
    for (int i = 1; i <= half; ++i) {
        frame.x1.push_back(i);
        frame.y1.push_back(i);
    }
    for (int i = half + 1; i < n; ++i) {
        frame.x2.push_back(i);
        frame.y2.push_back(i);
    }
    frame.check_valid();
    return frame;
}

void FFrame::check_valid() const {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("F frame requires odd n >= 3, got " + std::to_string(n));
    if (x_star.side != Side::X || y_star.side != Side::Y)
        throw std::invalid_argument("F frame apexes must be an X vertex and a Y vertex");
    const int half = (n - 1) / 2;
    auto check_side = [&](const std::vector<int> &b1, const std::vector<int> &b2, int apex, const char *side) {
        if (static_cast<int>(b1.size()) != half || static_cast<int>(b2.size()) != half)
            throw std::invalid_argument(std::string("F frame blocks on side ") + side +
                                        " must each have (n-1)/2 vertices");
        std::uint64_t m1 = index_mask(b1, n), m2 = index_mask(b2, n);
        std::uint64_t apex_bit = std::uint64_t{1} << apex;
        if ((m1 & m2) || (m1 & apex_bit) || (m2 & apex_bit) || (m1 | m2 | apex_bit) != full_mask(n))
            throw std::invalid_argument(std::string("F frame blocks on side ") + side +
                                        " must partition the non-apex vertices");
    };
    check_side(x1, x2, x_star.index, "X");
    check_side(y1, y2, y_star.index, "Y");
}

BipartiteGraph make_double_complete(int n, const std::vector<int> &x1, const std::vector<int> &y1) {
    if (n % 2 != 0)
        throw std::invalid_argument("double complete construction requires even n, got " + std::to_string(n));
    if (static_cast<int>(x1.size()) != n / 2 || static_cast<int>(y1.size()) != n / 2)
        throw std::invalid_argument("double complete construction requires |X1| = |Y1| = n/2");
    const std::uint64_t xm = index_mask(x1, n), ym = index_mask(y1, n);
    if (std::popcount(xm) != n / 2 || std::popcount(ym) != n / 2)
        throw std::invalid_argument("subset contains duplicate indices");
    BipartiteGraph g(n);
    for (int xi = 0; xi < n; ++xi) {
        const bool in_first = (xm >> xi) & 1u;
        for (int yj = 0; yj < n; ++yj)
            if (((ym >> yj) & 1u) == in_first)
                g.set_edge(xi, yj);
    }
    return g;
}

BipartiteGraph make_F(const FFrame &frame) {
    frame.check_valid();
    BipartiteGraph g(frame.n);
    for (int yj : frame.y1)
        g.set_edge(frame.x_star.index, yj);
    for (int yj : frame.y2)
        g.set_edge(frame.x_star.index, yj);
    for (int xi : frame.x1)
        g.set_edge(xi, frame.y_star.index);
    for (int xi : frame.x2)
        g.set_edge(xi, frame.y_star.index);
    for (int xi : frame.x1)
        for (int yj : frame.y1)
            g.set_edge(xi, yj);
    for (int xi : frame.x2)
        for (int yj : frame.y2)
            g.set_edge(xi, yj);
    return g;
}

BipartiteGraph make_F_prime(const FFrame &frame) {
    BipartiteGraph g = make_F(frame);
    g.set_edge(frame.x_star.index, frame.y_star.index);
    return g;
}

std::optional<DoubleCompleteCertificate> recognize_double_complete(const GraphCollection &c) {
    const int n = c.n;
    if (n % 2 != 0 || n < 2)
        return std::nullopt;
    for (int i = 1; i < c.size(); ++i)
        if (!(c[i] == c[0]))
            return std::nullopt;

    const BipartiteGraph &g = c[0];
    // component of X-vertex 0, alternating BFS over index masks
    std::uint64_t comp_x = 1, comp_y = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int xi = 0; xi < n; ++xi)
            if ((comp_x >> xi) & 1u) {
                std::uint64_t extra = g.row(xi) & ~comp_y;
                if (extra) {
                    comp_y |= extra;
                    grew = true;
                }
            }
        for (int yj = 0; yj < n; ++yj)
            if ((comp_y >> yj) & 1u) {
                std::uint64_t extra = g.col(yj) & ~comp_x;
                if (extra) {
                    comp_x |= extra;
                    grew = true;
                }
            }
    }
    if (std::popcount(comp_x) != n / 2 || std::popcount(comp_y) != n / 2)
        return std::nullopt;

    DoubleCompleteCertificate cert{mask_to_indices(comp_x), mask_to_indices(comp_y)};
    return c[0] == make_double_complete(n, cert.x1, cert.y1) ? std::optional(cert) : std::nullopt;
}

namespace {

/// Derive a frame with the given apexes from the component structure of
/// g - {x*, y*}; nullopt when the remainder is not two balanced blocks.
std::optional<FFrame> derive_frame(const BipartiteGraph &g, int xs, int ys) {
    const int n = g.n();
    const int half = (n - 1) / 2;
    const std::uint64_t x_rest = full_mask(n) & ~(std::uint64_t{1} << xs);
    const std::uint64_t y_rest = full_mask(n) & ~(std::uint64_t{1} << ys);
    if (x_rest == 0)
        return std::nullopt;

    std::uint64_t comp_x = std::uint64_t{1} << std::countr_zero(x_rest);
    std::uint64_t comp_y = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::uint64_t m = comp_x; m != 0; m &= m - 1) {
            std::uint64_t extra = (g.row(std::countr_zero(m)) & y_rest) & ~comp_y;
            if (extra) {
                comp_y |= extra;
                grew = true;
            }
        }
        for (std::uint64_t m = comp_y; m != 0; m &= m - 1) {
            std::uint64_t extra = (g.col(std::countr_zero(m)) & x_rest) & ~comp_x;
            if (extra) {
                comp_x |= extra;
                grew = true;
            }
        }
    }
    if (std::popcount(comp_x) != half || std::popcount(comp_y) != half)
        return std::nullopt;

    FFrame frame;
    frame.n = n;
    frame.x_star = vx(xs);
    frame.y_star = vy(ys);
    frame.x1 = mask_to_indices(comp_x);
    frame.y1 = mask_to_indices(comp_y);
    frame.x2 = mask_to_indices(x_rest & ~comp_x);
    frame.y2 = mask_to_indices(y_rest & ~comp_y);
    try {
        frame.check_valid();
    } catch (const std::invalid_argument &) {
        return std::nullopt;
    }
    return frame;
}

std::optional<std::vector<FVariant>> match_family(const GraphCollection &c, const FFrame &frame) {
    const BipartiteGraph f = make_F(frame);
    const BipartiteGraph fp = make_F_prime(frame);
    std::vector<FVariant> variants;
    variants.reserve(static_cast<std::size_t>(c.size()));
    for (int i = 0; i < c.size(); ++i) {
        if (c[i] == f)
            variants.push_back(FVariant::F);
        else if (c[i] == fp)
            variants.push_back(FVariant::FPrime);
        else
            return std::nullopt;
    }
    return variants;
}

} // namespace

std::optional<FFamilyCertificate> recognize_F_family(const GraphCollection &c) {
    const int n = c.n;
    if (n < 3 || n % 2 == 0)
        return std::nullopt;

    // x* is adjacent to all of Y or all of Y minus y*; shortlist by degree.
    // At n = 3 block vertices tie with the apex, so every pair is tried.
    const BipartiteGraph &g0 = c[0];
    for (int xs = 0; xs < n; ++xs) {
        if (g0.degree(vx(xs)) < n - 1)
            continue;
        for (int ys = 0; ys < n; ++ys) {
            if (g0.degree(vy(ys)) < n - 1)
                continue;
            auto frame = derive_frame(g0, xs, ys);
            if (!frame)
                continue;
            if (auto variants = match_family(c, *frame))
                return FFamilyCertificate{std::move(*frame), std::move(*variants)};
        }
    }
    return std::nullopt;
}

} // namespace rainbow::extremal
