#pragma once

#include <rf/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace rf {

// Bijection vertex -> label in [0, n).
struct Labeling {
    std::vector<int> label;

    static Labeling identity(int n);
    // Vertex order (position i holds the vertex labelled i).
    static Labeling from_order(const std::vector<int> & order);
    std::vector<int> order() const;
};

bool is_bijection(const Labeling & l, int n);

// max |L(u) - L(v)| over edges; 0 if edgeless.
int labeling_width(const Graph & g, const Labeling & l);

struct BandwidthResult {
    std::optional<int> width;        // empty when the budget ran out
    std::optional<Labeling> labeling; // an optimal labeling when width is set
    std::uint64_t nodes = 0;
};

// Branch and bound over label positions 0..n-1, left to right.
BandwidthResult exact_bandwidth(const Graph & g, std::uint64_t budget = 10'000'000);

// Cuthill-McKee: BFS levels from a minimum-degree vertex (ties: lowest id),
// neighbours visited by increasing degree then id; components in id order.
Labeling heuristic_labeling(const Graph & g);

} // namespace rf
