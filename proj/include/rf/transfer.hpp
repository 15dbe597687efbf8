#pragma once

#include <rf/embedding.hpp>
#include <rf/regularity.hpp>
#include <rf/rga.hpp>

#include <cstdint>
#include <optional>

namespace rf {

struct TransferParams {
    Rational eps = Rational(1, 4); // regularity tolerance for the reduced graph
    Rational xi = Rational(1, 4);  // part slack required by the blow-up embedder
    int k = 4;                     // number of classes
    int partition_retries = 1;
    int rga_retries = 20;
    CheckMode mode = CheckMode::automatic(64, 0);
    std::optional<RgaParams> rga;  // defaults: RgaParams::with_defaults(1/2, xi)
};

struct TransferReport {
    EmbedResult result; // map is a monochromatic embedding of G, colour in result.color
    Partition partition;
    PartitionReport partition_report;
    Graph reduced;
    Graph reduced_red; // reduced edges whose red density is at least 1/2
    Graph reduced_blue;
    std::optional<VertexMap> h_to_reduced;
    std::optional<VertexMap> g_to_reduced; // composition through H
    RgaReport rga;
};

// Regularity partition of the red graph, majority-coloured reduced graph, copy of H in one
// colour of it, then blow-up embedding of G in that colour. The host must be complete.
TransferReport transference_pipeline(const Graph & g, const Graph & h, const VertexMap & f, const EdgeColoring & c,
    const TransferParams & params, std::uint64_t seed, int workers = 1);

} // namespace rf
