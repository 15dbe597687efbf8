#pragma once

#include <rf/graph.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace rf {

struct HomVerdict {
    bool valid = false;
    std::vector<Edge> violations; // source edges whose image is not a target edge
};

// f must have source_n = |V(G)| and target_n = |V(H)|.
HomVerdict verify_homomorphism(const Graph & g, const Graph & h, const VertexMap & f);

struct CapacityProfile {
    enum class Mode { CountCap, WeightCap };

    Mode mode = Mode::CountCap;
    std::vector<int> caps;          // per target vertex (CountCap)
    std::vector<Rational> weights;  // per source vertex (WeightCap); preimage weight <= 1

    static CapacityProfile count(std::vector<int> caps);
    static CapacityProfile uniform_count(int target_n, int cap);
    static CapacityProfile unbounded(int target_n);
    static CapacityProfile weight(std::vector<Rational> weights);
};

struct CapacityVerdict {
    bool valid = false;
    std::vector<int> overloaded; // target vertices over capacity
};

CapacityVerdict verify_capacity(const VertexMap & f, const CapacityProfile & profile);

enum class SearchStatus { Found, None, BudgetExhausted };

const char * to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::None;
    std::optional<VertexMap> map;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

// Backtracking; source vertices by decreasing degree (ties: lowest id), targets by lowest id.
SearchResult find_capacity_homomorphism(const Graph & g, const Graph & h, const CapacityProfile & profile,
    std::uint64_t budget = kDefaultBudget);

// Edge-preserving map with w(f^{-1}(v)) <= 1 for every host vertex; sources in non-increasing weight order.
SearchResult find_weighted_embedding(const WeightedGraph & gw, const Graph & host, std::uint64_t budget = kDefaultBudget);

// Enumerates every capacity-respecting homomorphism; the callback returns false to stop.
// Returns the number of maps visited.
std::uint64_t for_each_capacity_homomorphism(const Graph & g, const Graph & h, const CapacityProfile & profile,
    const std::function<bool(const std::vector<int> &)> & visit);

} // namespace rf
