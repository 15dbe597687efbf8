#pragma once

#include <rf/graph.hpp>

#include <optional>
#include <string>

namespace rf {

// Outcome of a one-sided embedder: a verified map, or the stage at which it gave up.
struct EmbedResult {
    std::optional<VertexMap> map;
    std::optional<Color> color; // monochromatic embedders only
    std::string stage;          // empty on success

    bool found() const { return map.has_value(); }
};

// Edge-preserving and w(f^{-1}(v)) <= 1 everywhere; recomputed from scratch.
bool is_weighted_embedding(const WeightedGraph & gw, const Graph & host, const VertexMap & f);

// Edge-preserving and injective.
bool is_embedding(const Graph & g, const Graph & host, const VertexMap & f);

} // namespace rf
