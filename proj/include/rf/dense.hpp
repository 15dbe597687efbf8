#pragma once

#include <rf/embedding.hpp>
#include <rf/regularity.hpp>

#include <string>
#include <vector>

namespace rf {

struct DenseParams {
    Rational alpha = 1;
    Rational beta = 0;
    Rational rho = 1;
    Rational delta = 0;
    int max_degree = 0;

    void validate() const;
};

// U_1..U_s with degree budgets d_1..d_s.
struct DenseWitness {
    std::vector<VertexSet> parts;
    std::vector<int> degrees;
};

enum class DenseCondition { Pass, Arithmetic, PartSize, CrossDegree, BiDensity };

const char * to_string(DenseCondition c);

struct DenseVerdict {
    DenseCondition failed = DenseCondition::Pass;
    int part = -1;       // offending part (0-based)
    int other_part = -1; // CrossDegree: the later part
    int vertex = -1;     // CrossDegree: the short vertex
    VertexSet x_witness; // BiDensity: sparse pair inside the part
    VertexSet y_witness;
    bool certified = true; // false if some bi-density check was sampled and came back unrefuted
    std::string detail;

    bool passed() const { return failed == DenseCondition::Pass; }
};

// Every pair of disjoint X, Y inside part with |X|, |Y| >= ceil(eps |part|) has d(X,Y) >= delta.
// Exhaustive mode is capped at 16 vertices; sampled mode can only refute.
RegularityVerdict bi_density_check(const Graph & g, const VertexSet & part, const Rational & eps,
    const Rational & delta, const CheckMode & mode);

// Conditions checked in order: degree arithmetic, part sizes, cross-part degrees, bi-density.
DenseVerdict dense_witness_check(const Graph & gamma, const DenseWitness & w, const DenseParams & p, const CheckMode & mode);

// Greedy weighted embedding guided by the witness; stage names the step that ran dry.
EmbedResult dense_greedy_embed(const Graph & gamma, const DenseWitness & w, const DenseParams & p, const WeightedGraph & gw);

} // namespace rf
