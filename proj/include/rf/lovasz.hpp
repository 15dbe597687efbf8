#pragma once

#include <rf/graph.hpp>

#include <cstdint>
#include <vector>

namespace rf {

// Vertex split into s classes (any sizes).
struct Split {
    std::vector<VertexSet> classes;
    std::vector<int> class_of;
    std::uint64_t moves = 0;
    Rational initial_potential; // sum_i e(G[V_i]) / (d_i + 1) after the greedy start
};

// Classes with max degree of G[V_i] <= d_i; needs sum d_i >= maxdeg(G) - s + 1.
// Greedy start, then move any violating vertex (lowest id first) to the class j minimising
// deg_j(v) / (d_j + 1) (ties: lowest j). Each move lowers the potential.
Split lovasz_partition(const Graph & g, const std::vector<int> & degrees);

// Recheck of the degree condition from the class sets alone.
bool split_respects(const Graph & g, const Split & split, const std::vector<int> & degrees);

} // namespace rf
