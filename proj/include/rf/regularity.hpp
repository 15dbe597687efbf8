#pragma once

#include <rf/graph.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace rf {

inline constexpr int kExhaustiveSideCap = 16;

struct RegularityParams {
    Rational eps;
    Rational delta = 0;

    void validate() const; // 0 < eps < 1, 0 <= delta <= 1
};

struct CheckMode {
    enum class Kind { Exhaustive, Sampled, Auto };

    Kind kind = Kind::Exhaustive;
    std::uint64_t budget = 0; // random starts in sampled mode
    std::uint64_t seed = 0;

    static CheckMode exhaustive() { return {}; }
    static CheckMode sampled(std::uint64_t budget, std::uint64_t seed) { return {Kind::Sampled, budget, seed}; }
    // Exhaustive when both sides fit under the cap, sampled otherwise.
    static CheckMode automatic(std::uint64_t budget, std::uint64_t seed) { return {Kind::Auto, budget, seed}; }
};

const char * to_string(CheckMode::Kind k);

enum class RegularityStatus { CertifiedRegular, Violated, Unrefuted };

const char * to_string(RegularityStatus s);

struct RegularityVerdict {
    RegularityStatus status = RegularityStatus::Unrefuted;
    VertexSet x_witness; // set when Violated
    VertexSet y_witness;
    std::uint64_t samples_tried = 0;
    CheckMode::Kind mode = CheckMode::Kind::Exhaustive; // as resolved

    bool regular_or_unrefuted() const { return status != RegularityStatus::Violated; }
};

// |X'| >= ceil(eps |X|), |Y'| >= ceil(eps |Y|) and |d(X,Y) - d(X',Y')| > eps, all exact.
bool witness_violates(const Graph & g, const VertexSet & x, const VertexSet & y, const Rational & eps,
    const VertexSet & xw, const VertexSet & yw);

RegularityVerdict regularity_check(const Graph & g, const VertexSet & x, const VertexSet & y,
    const RegularityParams & p, const CheckMode & mode);

// classes[0] is the exceptional class; classes[1..k] have equal size.
struct Partition {
    int n = 0;
    std::vector<VertexSet> classes;

    int k() const { return static_cast<int>(classes.size()) - 1; }
    void validate() const;
};

// Vertex i - 1 of the result stands for class i.
Graph reduced_graph(const Graph & g, const Partition & part, const RegularityParams & p, bool with_density,
    const CheckMode & mode, int workers = 1);

struct PartitionReport {
    std::vector<int> irregular_per_class; // entry i - 1 for class i
    int irregular_pairs = 0;
    bool per_class_ok = false;   // every class has at most eps k irregular partners
    bool total_ok = false;       // at most eps k^2 irregular pairs
    bool exceptional_ok = false; // |V_0| <= eps n
    CheckMode::Kind mode = CheckMode::Kind::Exhaustive;
    int retry = 0;
    std::uint64_t seed_used = 0;

    int max_per_class() const;
};

PartitionReport assess_partition(const Graph & g, const Partition & part, const RegularityParams & p,
    const CheckMode & mode, int workers = 1);

// Seeded uniform equitable partition into k classes of size floor(n / k); leftovers form V_0.
// Retry r uses derive_seed(seed, r); the best report wins (fewest irregular partners in the
// worst class, then fewest irregular pairs, then earliest retry).
std::pair<Partition, PartitionReport> fixed_k_partition(const Graph & g, int k, const RegularityParams & p,
    std::uint64_t seed, int retries, const CheckMode & mode, int workers = 1);

} // namespace rf
