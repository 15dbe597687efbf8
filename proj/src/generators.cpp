#include <rf/errors.hpp>
#include <rf/generators.hpp>
#include <rf/rng.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>

namespace rf {

bool Rng::bernoulli(const Rational & p)
{
    if (p <= 0)
        return false;
    if (p >= 1)
        return true;
    auto num = static_cast<std::uint64_t>(to_int64(numerator_of(p), "probability numerator"));
    auto den = static_cast<std::uint64_t>(to_int64(denominator_of(p), "probability denominator"));
    return below(den) < num;
}

namespace {

struct KindName {
    NamedKind kind;
    const char * name;
};

constexpr KindName kind_names[] = {
    {NamedKind::Path, "path"},
    {NamedKind::Cycle, "cycle"},
    {NamedKind::Complete, "complete"},
    {NamedKind::CompleteMultipartite, "complete_multipartite"},
    {NamedKind::Wheel, "wheel"},
    {NamedKind::PathPower, "path_power"},
    {NamedKind::Hypercube, "hypercube"},
    {NamedKind::Empty, "empty"},
    {NamedKind::Ladder, "ladder"},
    {NamedKind::Star, "star"},
    {NamedKind::Petersen, "petersen"},
};

void need(bool ok, NamedKind kind, const char * why)
{
    if (! ok)
        throw InputError(std::string("invalid parameters for ") + to_string(kind) + ": " + why);
}

} // namespace

NamedKind parse_named_kind(std::string_view name)
{
    for (auto & kn : kind_names)
        if (name == kn.name)
            return kn.kind;
    throw InputError("unknown graph kind '" + std::string(name) + "'");
}

const char * to_string(NamedKind kind)
{
    for (auto & kn : kind_names)
        if (kn.kind == kind)
            return kn.name;
    return "?";
}

Graph make_named(NamedKind kind, const std::vector<int> & p)
{
    auto arity = [&](std::size_t k) { need(p.size() == k, kind, "wrong number of parameters"); };

    switch (kind) {
    case NamedKind::Path: {
        arity(1);
        need(p[0] >= 0, kind, "n >= 0");
        Graph g(p[0]);
        for (int i = 0; i + 1 < p[0]; ++i)
            g.add_edge(i, i + 1);
        return g;
    }
    case NamedKind::Cycle: {
        arity(1);
        need(p[0] >= 3, kind, "n >= 3");
        Graph g = make_named(NamedKind::Path, p);
        g.add_edge(p[0] - 1, 0);
        return g;
    }
    case NamedKind::Complete:
        arity(1);
        need(p[0] >= 0, kind, "n >= 0");
        return Graph::complete(p[0]);
    case NamedKind::CompleteMultipartite: {
        need(! p.empty(), kind, "at least one part");
        int n = 0;
        std::vector<int> part;
        for (std::size_t i = 0; i < p.size(); ++i) {
            need(p[i] >= 1, kind, "part sizes >= 1");
            for (int j = 0; j < p[i]; ++j)
                part.push_back(static_cast<int>(i));
            n += p[i];
        }
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (part[u] != part[v])
                    g.add_edge(u, v);
        return g;
    }
    case NamedKind::Wheel: {
        arity(1);
        need(p[0] >= 4, kind, "k >= 4");
        int k = p[0];
        Graph g = make_named(NamedKind::Cycle, {k - 1});
        Graph w(k);
        for (auto [u, v] : g.edges())
            w.add_edge(u, v);
        for (int v = 0; v < k - 1; ++v)
            w.add_edge(v, k - 1);
        return w;
    }
    case NamedKind::PathPower: {
        arity(2);
        need(p[0] >= 0 && p[1] >= 1, kind, "n >= 0, r >= 1");
        Graph g(p[0]);
        for (int i = 0; i < p[0]; ++i)
            for (int j = i + 1; j < p[0] && j - i <= p[1]; ++j)
                g.add_edge(i, j);
        return g;
    }
    case NamedKind::Hypercube: {
        arity(1);
        need(p[0] >= 0 && p[0] <= 20, kind, "0 <= d <= 20");
        int n = 1 << p[0];
        Graph g(n);
        for (int v = 0; v < n; ++v)
            for (int b = 0; b < p[0]; ++b)
                if (int w = v ^ (1 << b); v < w)
                    g.add_edge(v, w);
        return g;
    }
    case NamedKind::Empty:
        arity(1);
        need(p[0] >= 0, kind, "n >= 0");
        return Graph(p[0]);
    case NamedKind::Ladder: {
        // rungs (2i, 2i+1); rails 2i -> 2i+2 and 2i+1 -> 2i+3
        arity(1);
        need(p[0] >= 1, kind, "k >= 1");
        Graph g(2 * p[0]);
        for (int i = 0; i < p[0]; ++i) {
            g.add_edge(2 * i, 2 * i + 1);
            if (i + 1 < p[0]) {
                g.add_edge(2 * i, 2 * i + 2);
                g.add_edge(2 * i + 1, 2 * i + 3);
            }
        }
        return g;
    }
    case NamedKind::Star: {
        arity(1);
        need(p[0] >= 0, kind, "leaves >= 0");
        Graph g(p[0] + 1);
        for (int v = 1; v <= p[0]; ++v)
            g.add_edge(0, v);
        return g;
    }
    case NamedKind::Petersen: {
        arity(0);
        Graph g(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        return g;
    }
    }
    throw InputError("unhandled graph kind");
}

Graph make_named(std::string_view spec)
{
    auto colon = spec.find(':');
    auto kind = parse_named_kind(spec.substr(0, colon));
    std::vector<int> params;
    if (colon != std::string_view::npos) {
        auto rest = spec.substr(colon + 1);
        while (! rest.empty()) {
            auto comma = rest.find(',');
            auto tok = rest.substr(0, comma);
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw InputError("bad parameter '" + std::string(tok) + "' in graph spec '" + std::string(spec) + "'");
            params.push_back(value);
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
    }
    return make_named(kind, params);
}

Blowup blowup(const BlowupSpec & spec)
{
    const Graph & h = spec.base;
    if (static_cast<int>(spec.part_sizes.size()) != h.size())
        throw InputError("blow-up needs one part size per base vertex");
    std::vector<int> owner;
    std::vector<int> start(h.size());
    for (int v = 0; v < h.size(); ++v) {
        if (spec.part_sizes[v] < 1)
            throw InputError("blow-up part sizes must be >= 1");
        start[v] = static_cast<int>(owner.size());
        owner.insert(owner.end(), spec.part_sizes[v], v);
    }
    Graph g(static_cast<int>(owner.size()));
    for (auto [u, v] : h.edges())
        for (int a = 0; a < spec.part_sizes[u]; ++a)
            for (int b = 0; b < spec.part_sizes[v]; ++b)
                g.add_edge(start[u] + a, start[v] + b);
    return {std::move(g), VertexMap(h.size(), std::move(owner))};
}

Graph random_bounded_degree_bipartite(int n, int max_degree, std::uint64_t seed)
{
    if (n < 0 || max_degree < 0 || max_degree > n)
        throw InputError("random bipartite graph needs 0 <= Delta <= n_per_side");
    Rng rng(seed);
    Graph g(2 * n);
    std::vector<int> perm(n);
    for (int round = 0; round < max_degree; ++round) {
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(std::span<int>(perm));
        for (int i = 0; i < n; ++i)
            g.add_edge(i, n + perm[i]);
    }
    return g;
}

EdgeColoring random_coloring(const Graph & host, const Rational & red_prob, std::uint64_t seed)
{
    if (red_prob < 0 || red_prob > 1)
        throw InputError("red probability outside [0,1]");
    Rng rng(seed);
    Graph red(host.size());
    for (auto [u, v] : host.edges())
        if (rng.bernoulli(red_prob))
            red.add_edge(u, v);
    return EdgeColoring(host, std::move(red));
}

Graph random_min_degree_host(int n, const Rational & eps, std::uint64_t seed)
{
    if (eps < 0 || eps >= 1)
        throw InputError("random_min_degree_host needs 0 <= eps < 1");
    if (n < 0)
        throw InputError("negative vertex count");
    Graph g = Graph::complete(n);
    if (n == 0)
        return g;
    int threshold = min_degree_threshold(n, eps);
    int slack = n - 1 - threshold;
    Rng rng(seed);
    std::uint64_t target = rng.below(static_cast<std::uint64_t>(n) * slack / 2 + 1);

    auto candidates = g.edges();
    rng.shuffle(std::span<Edge>(candidates));
    std::vector<int> deg(n, n - 1);
    std::uint64_t deleted = 0;
    for (auto [u, v] : candidates) {
        if (deleted == target)
            break;
        if (deg[u] > threshold && deg[v] > threshold) {
            g.remove_edge(u, v);
            --deg[u];
            --deg[v];
            ++deleted;
        }
    }
    if (g.min_degree() < threshold)
        throw std::logic_error("random_min_degree_host produced a graph below its degree certificate");
    return g;
}

} // namespace rf
