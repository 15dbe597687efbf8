#pragma once

#include <rf/rational.hpp>
#include <rf/vertex_set.hpp>

#include <string>
#include <utility>
#include <vector>

namespace rf {

using Edge = std::pair<int, int>;

// Simple undirected loop-free graph on [0, n).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge> & edges);

    static Graph complete(int n);

    int size() const { return static_cast<int>(rows_.size()); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool adjacent(int u, int v) const { return rows_[u].test(v); }

    const VertexSet & neighbours(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }

    int edge_count() const;
    int max_degree() const;
    int min_degree() const;

    // Edges as (u, v) with u < v, lexicographic.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    void check_vertex(int v) const;

    std::vector<VertexSet> rows_;
};

class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(Graph graph, std::vector<Rational> weights);

    static WeightedGraph uniform(Graph graph, const Rational & w = 1);

    const Graph & graph() const { return graph_; }
    const Rational & weight(int v) const { return weights_[v]; }
    const std::vector<Rational> & weights() const { return weights_; }
    int size() const { return graph_.size(); }

    Rational weight_of(const VertexSet & x) const;
    Rational total_weight() const;

private:
    Graph graph_;
    std::vector<Rational> weights_;
};

enum class Color { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline const char * to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

// Red/blue assignment on exactly the edges of the host; non-edges are uncoloured.
class EdgeColoring {
public:
    EdgeColoring() = default;
    // red must be a spanning subgraph of host.
    EdgeColoring(Graph host, Graph red);

    const Graph & host() const { return host_; }
    int size() const { return host_.size(); }

    Color color(int u, int v) const;
    bool is_red(int u, int v) const { return red_.adjacent(u, v); }

    const Graph & red() const { return red_; }
    const Graph & blue() const { return blue_; }

    EdgeColoring swapped() const { return EdgeColoring(host_, blue_); }

    friend bool operator==(const EdgeColoring & a, const EdgeColoring & b)
    {
        return a.host_ == b.host_ && a.red_ == b.red_;
    }

private:
    Graph host_;
    Graph red_;
    Graph blue_;
};

// Total map [source_n) -> [target_n).
struct VertexMap {
    int source_n = 0;
    int target_n = 0;
    std::vector<int> image;

    VertexMap() = default;
    VertexMap(int target, std::vector<int> img);

    int operator()(int v) const { return image[v]; }
    std::vector<int> preimage(int t) const;
    bool injective() const;

    friend bool operator==(const VertexMap &, const VertexMap &) = default;
};

int degree(const Graph & g, int v);

// |common neighbourhood of x|; x must be nonempty.
int codegree(const Graph & g, const VertexSet & x);

// Number of pairs (x, y) in X x Y that are edges.
std::int64_t edges_between(const Graph & g, const VertexSet & x, const VertexSet & y);

// e(X, Y) / (|X||Y|) for disjoint nonempty X, Y.
Rational pair_density(const Graph & g, const VertexSet & x, const VertexSet & y);

// Induced subgraph relabelled by the order-preserving map from sorted X.
Graph induced(const Graph & g, const VertexSet & x);

Graph color_subgraph(const EdgeColoring & c, Color which);

// Integral reading of "minimum degree at least (1 - eps) n": ceil((1 - eps) n),
// clamped to n - 1 so that K_n always qualifies.
int min_degree_threshold(int n, const Rational & eps);

Graph complement(const Graph & g);

bool is_bipartite(const Graph & g, std::vector<int> * side = nullptr);

} // namespace rf
