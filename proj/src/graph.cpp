#include <rf/errors.hpp>
#include <rf/graph.hpp>

#include <algorithm>
#include <queue>

namespace rf {

Graph::Graph(int n)
{
    if (n < 0)
        throw InputError("negative vertex count");
    rows_.assign(n, VertexSet(n));
}

Graph::Graph(int n, const std::vector<Edge> & edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= size())
        throw InputError("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(size()) + " vertices");
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InputError("loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    rows_[u].reset(v);
    rows_[v].reset(u);
}

int Graph::edge_count() const
{
    int twice = 0;
    for (const auto & r : rows_)
        twice += r.count();
    return twice / 2;
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto & r : rows_)
        d = std::max(d, r.count());
    return d;
}

int Graph::min_degree() const
{
    if (rows_.empty())
        return 0;
    int d = size();
    for (const auto & r : rows_)
        d = std::min(d, r.count());
    return d;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < size(); ++u)
        rows_[u].for_each([&](int v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

WeightedGraph::WeightedGraph(Graph graph, std::vector<Rational> weights) :
    graph_(std::move(graph)),
    weights_(std::move(weights))
{
    if (static_cast<int>(weights_.size()) != graph_.size())
        throw InputError("weight vector length does not match vertex count");
    for (const auto & w : weights_)
        if (w < 0 || w > 1)
            throw InputError("vertex weight " + to_string(w) + " outside [0,1]");
}

WeightedGraph WeightedGraph::uniform(Graph graph, const Rational & w)
{
    int n = graph.size();
    return WeightedGraph(std::move(graph), std::vector<Rational>(n, w));
}

Rational WeightedGraph::weight_of(const VertexSet & x) const
{
    Rational total = 0;
    x.for_each([&](int v) { total += weights_[v]; });
    return total;
}

Rational WeightedGraph::total_weight() const
{
    Rational total = 0;
    for (const auto & w : weights_)
        total += w;
    return total;
}

EdgeColoring::EdgeColoring(Graph host, Graph red) :
    host_(std::move(host)),
    red_(std::move(red)),
    blue_(host_.size())
{
    if (red_.size() != host_.size())
        throw InputError("red graph and host differ in vertex count");
    for (int v = 0; v < host_.size(); ++v)
        if (! red_.neighbours(v).subset_of(host_.neighbours(v)))
            throw InputError("red edge outside the host graph");
    for (auto [u, v] : host_.edges())
        if (! red_.adjacent(u, v))
            blue_.add_edge(u, v);
}

Color EdgeColoring::color(int u, int v) const
{
    if (u < 0 || v < 0 || u >= size() || v >= size() || ! host_.adjacent(u, v))
        throw InputError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is not a host edge");
    return red_.adjacent(u, v) ? Color::Red : Color::Blue;
}

VertexMap::VertexMap(int target, std::vector<int> img) :
    source_n(static_cast<int>(img.size())),
    target_n(target),
    image(std::move(img))
{
    for (int t : image)
        if (t < 0 || t >= target_n)
            throw InputError("vertex map image " + std::to_string(t) + " out of range");
}

std::vector<int> VertexMap::preimage(int t) const
{
    std::vector<int> out;
    for (int v = 0; v < source_n; ++v)
        if (image[v] == t)
            out.push_back(v);
    return out;
}

bool VertexMap::injective() const
{
    std::vector<char> seen(target_n, 0);
    for (int t : image) {
        if (seen[t])
            return false;
        seen[t] = 1;
    }
    return true;
}

int degree(const Graph & g, int v)
{
    if (v < 0 || v >= g.size())
        throw InputError("vertex " + std::to_string(v) + " out of range");
    return g.degree(v);
}

namespace {

void check_subset(const Graph & g, const VertexSet & x, const char * name)
{
    if (x.universe() != g.size())
        throw InputError(std::string(name) + " is a subset of a different vertex set");
}

} // namespace

int codegree(const Graph & g, const VertexSet & x)
{
    check_subset(g, x, "X");
    if (x.empty())
        throw InputError("codegree of the empty set is undefined");
    VertexSet common = VertexSet::full(g.size());
    x.for_each([&](int v) { common &= g.neighbours(v); });
    return common.count();
}

std::int64_t edges_between(const Graph & g, const VertexSet & x, const VertexSet & y)
{
    std::int64_t e = 0;
    x.for_each([&](int v) { e += g.neighbours(v).count_and(y); });
    return e;
}

Rational pair_density(const Graph & g, const VertexSet & x, const VertexSet & y)
{
    check_subset(g, x, "X");
    check_subset(g, y, "Y");
    if (x.empty() || y.empty())
        throw InputError("pair density needs nonempty sets");
    if (x.intersects(y))
        throw InputError("pair density needs disjoint sets");
    return Rational(edges_between(g, x, y), std::int64_t{x.count()} * y.count());
}

Graph induced(const Graph & g, const VertexSet & x)
{
    check_subset(g, x, "X");
    auto members = x.members();
    std::vector<int> index(g.size(), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        index[members[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
        (g.neighbours(members[i]) & x).for_each([&](int w) {
            if (index[w] > static_cast<int>(i))
                h.add_edge(static_cast<int>(i), index[w]);
        });
    return h;
}

Graph color_subgraph(const EdgeColoring & c, Color which)
{
    return which == Color::Red ? c.red() : c.blue();
}

int min_degree_threshold(int n, const Rational & eps)
{
    if (n <= 0)
        return 0;
    return static_cast<int>(std::min<std::int64_t>(ceil_mul(Rational(1) - eps, n), n - 1));
}

Graph complement(const Graph & g)
{
    Graph h(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (! g.adjacent(u, v))
                h.add_edge(u, v);
    return h;
}

bool is_bipartite(const Graph & g, std::vector<int> * side)
{
    std::vector<int> colour(g.size(), -1);
    for (int s = 0; s < g.size(); ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (! q.empty()) {
            int u = q.front();
            q.pop();
            bool ok = true;
            g.neighbours(u).for_each([&](int v) {
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    q.push(v);
                }
                else if (colour[v] == colour[u])
                    ok = false;
            });
            if (! ok)
                return false;
        }
    }
    if (side)
        *side = std::move(colour);
    return true;
}

} // namespace rf
