#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow::extremal {

/// Frame for the odd-n apex construction: apexes x*, y* plus balanced block
/// partitions of the remaining vertices. F joins x* to all of Y1 u Y2, y* to
/// all of X1 u X2, and Xi to Yi completely; F' adds the edge x*y*.
struct FFrame {
    int n = 0;
    Vertex x_star{Side::X, 0};
    Vertex y_star{Side::Y, 0};
    std::vector<int> x1, x2; // partition of X \ {x*}
    std::vector<int> y1, y2; // partition of Y \ {y*}

    /// Apexes at index 0, first blocks at indices 1..(n-1)/2.
    static FFrame canonical(int n);

    void check_valid() const; // throws std::invalid_argument
};

BipartiteGraph make_double_complete(int n, const std::vector<int> &x1, const std::vector<int> &y1);
BipartiteGraph make_F(const FFrame &frame);
BipartiteGraph make_F_prime(const FFrame &frame);

enum class FVariant : std::uint8_t { F, FPrime };

struct DoubleCompleteCertificate {
    std::vector<int> x1, y1; // component containing X-vertex 0
};

struct FFamilyCertificate {
    FFrame frame;
    std::vector<FVariant> variants; // one per graph
};

using ExtremalCertificate = std::variant<DoubleCompleteCertificate, FFamilyCertificate>;

/// Accepts iff n is even, all member graphs are identical, and the common
/// graph is exactly two complete balanced components of size n/2 + n/2.
/// The returned partition regenerates the graph via make_double_complete.
std::optional<DoubleCompleteCertificate> recognize_double_complete(const GraphCollection &c);

/// Accepts iff n is odd and one common frame exists on which every graph is
/// exactly F or F'. Per-graph frames are rejected.
std::optional<FFamilyCertificate> recognize_F_family(const GraphCollection &c);

} // namespace rainbow::extremal
