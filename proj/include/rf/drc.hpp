#pragma once

#include <rf/bandwidth.hpp>
#include <rf/embedding.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rf {

struct DrcOptions {
    int trials = 16;
    bool exhaustive = false;          // every tuple of within^Delta instead of `trials` samples
    std::uint64_t tuple_budget = 4096; // bad tuples counted exactly while |X|^Delta fits
    std::optional<VertexSet> within;  // host remainder; all of V when absent
};

struct DrcSelection {
    VertexSet x;
    std::vector<int> tuple; // the tuple whose common neighbourhood is x
    int size = 0;           // |X|
    int overlap = 0;        // |X cap X_0|
    std::uint64_t bad_tuples = 0; // ordered Delta-tuples of X with fewer than bad_below common neighbours
    bool bad_exact = true;        // false: bad_tuples is a sampled estimate
    long double score = 0;
    std::uint64_t candidates = 0; // tuples scored
};

// Common neighbours inside `within` of all entries of the tuple.
VertexSet common_neighbourhood(const Graph & g, const std::vector<int> & tuple, const VertexSet & within);

// Exact count of ordered Delta-tuples of X with fewer than bad_below common neighbours in within.
std::uint64_t count_bad_tuples(const Graph & g, const VertexSet & x, int delta, std::int64_t bad_below,
    const VertexSet & within);

// Dependent random choice: X = common neighbourhood of a random Delta-tuple, chosen to maximise
// |X0 cap X|^D |X|^D / E1 - xi(X) |X0 cap X|^D / (2 E2) with E1, E2 the means over the scored tuples.
DrcSelection drc_select(const Graph & g, const VertexSet & x0, int delta, std::int64_t bad_below, std::uint64_t seed,
    const DrcOptions & options = {});

// Convenience form with bad_below = ceil(beta |within|).
DrcSelection drc_select(const Graph & g, const VertexSet & x0, int delta, const Rational & beta, std::uint64_t seed,
    const DrcOptions & options = {});

// alpha^(6 Delta + 1) / (256 Delta).
Rational bandwidth_beta(const Rational & alpha, int delta);

enum class DrcStatus { Embedded, Starved, DegenerateBudget };

const char * to_string(DrcStatus s);

struct DrcEmbedOptions {
    std::optional<Rational> beta; // overrides bandwidth_beta
    std::optional<int> delta;     // overrides the max degree of H (at least 1)
    DrcOptions select;
};

struct DrcEmbedReport {
    DrcStatus status = DrcStatus::Starved;
    EmbedResult result;
    Rational beta;
    Rational gamma;
    std::int64_t width_budget = 0; // floor(beta n)
    int width = 0;                 // width of the given labelling
    int epochs = 0;
    std::vector<int> reservoir_sizes; // |X_t| per epoch
};

// Embeds the bipartite H into gamma epoch by epoch along the labelling.
// DegenerateBudget: floor(beta n) = 0 with edges present, or the labelling is wider than floor(beta n).
DrcEmbedReport drc_bandwidth_embed(const Graph & host, const Graph & h, const Labeling & labeling,
    const Rational & alpha, std::uint64_t seed, const DrcEmbedOptions & options = {});

} // namespace rf
