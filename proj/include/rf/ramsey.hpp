#pragma once

#include <rf/graph.hpp>

#include <optional>
#include <utility>

namespace rf {

inline constexpr int kRamseyHardCap = 8;
inline constexpr int kStableHardCap = 6;

enum class OracleStatus { Value, Exceeds, InfiniteSuspected };
enum class CertificateMode { Exhaustive, SymmetryPruned };

const char * to_string(OracleStatus s);
const char * to_string(CertificateMode m);

struct OracleOptions {
    int workers = 1;
    bool iso_prune = true;
};

struct OracleResult {
    OracleStatus status = OracleStatus::Exceeds;
    int value = 0; // meaningful when status == Value
    int n_max = 0;
    // Colouring with no monochromatic copy at witness_n: value - 1 for a resolved
    // number (absent when value == 1), n_max otherwise.
    std::optional<EdgeColoring> witness;
    int witness_n = 0;
    CertificateMode mode = CertificateMode::SymmetryPruned;
};

// Monochromatic weighted embedding into either colour class (red tried first).
std::optional<std::pair<Color, VertexMap>> mono_copy_search(const EdgeColoring & c, const WeightedGraph & gw);

// Least n <= n_max such that every 2-colouring of K_n has a monochromatic copy of g.
OracleResult ramsey_number(const Graph & g, int n_max, const OracleOptions & options = {});

// Same with weighted embeddings (homomorphisms with preimage weight <= 1).
OracleResult weighted_ramsey(const WeightedGraph & gw, int n_max, const OracleOptions & options = {});

// Least n <= n_max such that every host on n vertices with minimum degree >=
// min_degree_threshold(n, eps), under every 2-colouring, has a monochromatic weighted embedding.
// InfiniteSuspected: unresolved at n_max although complete hosts alone already resolve.
OracleResult stable_ramsey(const WeightedGraph & gw, const Rational & eps, int n_max, const OracleOptions & options = {});

} // namespace rf
