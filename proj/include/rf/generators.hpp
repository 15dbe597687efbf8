#pragma once

#include <rf/graph.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rf {

enum class NamedKind {
    Path,
    Cycle,
    Complete,
    CompleteMultipartite,
    Wheel,
    PathPower,
    Hypercube,
    Empty,
    Ladder,
    Star,
    Petersen,
};

NamedKind parse_named_kind(std::string_view name);
const char * to_string(NamedKind kind);

// path(n), cycle(n), complete(n), complete_multipartite(a, b, ...), wheel(k),
// path_power(n, r), hypercube(d), empty(n), ladder(k) = P_k x K_2, star(leaves), petersen().
// Wheel W_k is C_{k-1} on 0..k-2 plus hub k-1.
Graph make_named(NamedKind kind, const std::vector<int> & params);

// "cycle:5", "path_power:6,2", "petersen".
Graph make_named(std::string_view spec);

struct BlowupSpec {
    Graph base;
    std::vector<int> part_sizes;
};

struct Blowup {
    Graph graph;
    VertexMap to_base;
};

// Parts are laid out consecutively: part 0 first.
Blowup blowup(const BlowupSpec & spec);

// Union of Delta seeded random perfect matchings between [0, n) and [n, 2n).
Graph random_bounded_degree_bipartite(int n_per_side, int max_degree, std::uint64_t seed);

EdgeColoring random_coloring(const Graph & host, const Rational & red_prob, std::uint64_t seed);

// Deletes random edges from K_n while both endpoints keep degree >= min_degree_threshold(n, eps).
Graph random_min_degree_host(int n, const Rational & eps, std::uint64_t seed);

} // namespace rf
