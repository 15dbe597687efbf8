#pragma once

#include <rf/embedding.hpp>
#include <rf/regularity.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rf {

// Tolerances of the random greedy blow-up embedder; need eps < eps2 < eps1.
struct RgaParams {
    Rational eps;
    Rational eps1;
    Rational eps2;
    Rational delta; // density of the reduced-graph pairs
    Rational xi;    // part slack: |V_i| >= (1 + xi) m

    // eps1 = 1/8, eps2 = eps1^3, eps = eps2^3.
    static RgaParams with_defaults(const Rational & delta, const Rational & xi);
    void validate() const;
};

struct RgaStep {
    int part = 0;   // 1-based class of the partition
    int vertex = 0; // pattern vertex
    int image = 0;
    bool from_queue = false;
    int free_candidates = 0; // |U_s(x) minus used|
    int admissible = 0;      // after the density filter
    int queue_size = 0;      // after this step
};

struct RgaReport {
    EmbedResult result;
    int attempts = 0;        // attempts up to and including the winner (all when none wins)
    int winning_attempt = -1;
    std::uint64_t seed_used = 0;
    std::vector<std::string> failures; // failure stage of each losing attempt, in order
    std::vector<RgaStep> trace;        // winning attempt (or the last one) when tracing
    std::uint64_t invariant_checks = 0;
};

// Embeds g into gamma part by part following f : g -> reduced graph (vertex i - 1 of the
// reduced graph is class i). Attempt r uses derive_seed(seed, r); the lowest successful
// attempt wins whatever the worker count.
RgaReport rga_blowup_embed(const Graph & gamma, const Partition & part, const Graph & reduced, const Graph & g,
    const VertexMap & f, const RgaParams & params, std::uint64_t seed, int retries, int workers = 1,
    bool trace = false);

} // namespace rf
