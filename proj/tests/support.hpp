#pragma once

// Seeded generators and brute-force reference oracles for the tests.
// Oracles only read adjacency; none of them call library algorithms.

#include <rf/graph.hpp>
#include <rf/rational.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace rft {

using rf::Graph;
using rf::Rational;

// splitmix64, kept separate from the library generator
struct Gen {
    std::uint64_t state;
    explicit Gen(std::uint64_t seed) : state(seed ^ 0x5deece66dULL) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool chance(int num, int den) { return below(den) < num; }

    Graph graph(int n, int num, int den)
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (chance(num, den))
                    g.add_edge(u, v);
        return g;
    }
    // random edges, skipping any that would push a degree past cap
    Graph bounded_graph(int n, int cap, int attempts)
    {
        Graph g(n);
        std::vector<int> deg(n, 0);
        for (int t = 0; t < attempts && n > 1; ++t) {
            int u = below(n), v = below(n);
            if (u == v || g.adjacent(u, v) || deg[u] >= cap || deg[v] >= cap)
                continue;
            g.add_edge(u, v);
            ++deg[u];
            ++deg[v];
        }
        return g;
    }
};

inline int pair_index_count(int n) { return n * (n - 1) / 2; }

// colouring of K_n from a bitmask over lexicographic pairs (bit set = red)
struct MaskColoring {
    int n;
    std::vector<std::vector<int>> red; // red[u][v] in {0,1}, u != v
    MaskColoring(int n_, std::uint64_t mask) : n(n_), red(n_, std::vector<int>(n_, 0))
    {
        int k = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++k)
                red[u][v] = red[v][u] = static_cast<int>((mask >> k) & 1);
    }
};

// every map V(G) -> [n] in one colour, weight at most 1 per target (unit weights: injective)
inline bool naive_mono(const MaskColoring & c, const Graph & g, const std::vector<Rational> & w)
{
    int k = g.size();
    auto edges = g.edges();
    std::vector<int> img(k, 0);
    std::vector<Rational> load(c.n);
    while (true) {
        for (int colour = 0; colour < 2; ++colour) {
            bool ok = true;
            for (auto [u, v] : edges) {
                int a = img[u], b = img[v];
                if (a == b || c.red[a][b] != colour) {
                    ok = false;
                    break;
                }
            }
            if (! ok)
                continue;
            std::fill(load.begin(), load.end(), Rational(0));
            for (int x = 0; x < k; ++x)
                load[img[x]] += w[x];
            if (std::all_of(load.begin(), load.end(), [](const Rational & r) { return r <= 1; }))
                return true;
        }
        int pos = 0;
        while (pos < k && ++img[pos] == c.n)
            img[pos++] = 0;
        if (pos == k)
            return false;
    }
}

// least n <= n_max with no avoiding colouring; 0 if none. No pruning of any kind.
inline int naive_ramsey(const Graph & g, const std::vector<Rational> & w, int n_max)
{
    for (int n = 1; n <= n_max; ++n) {
        std::uint64_t total = std::uint64_t{1} << pair_index_count(n);
        bool all = true;
        for (std::uint64_t mask = 0; mask < total && all; ++mask)
            all = naive_mono(MaskColoring(n, mask), g, w);
        if (all)
            return n;
    }
    return 0;
}

inline bool edge_preserving(const Graph & g, const Graph & host, const std::vector<int> & img)
{
    if (static_cast<int>(img.size()) != g.size())
        return false;
    for (int x : img)
        if (x < 0 || x >= host.size())
            return false;
    for (auto [u, v] : g.edges())
        if (img[u] == img[v] || ! host.adjacent(img[u], img[v]))
            return false;
    return true;
}

inline bool injective(const std::vector<int> & img)
{
    std::set<int> s(img.begin(), img.end());
    return s.size() == img.size();
}

inline bool weight_capped(const std::vector<int> & img, const std::vector<Rational> & w, int target_n)
{
    std::vector<Rational> load(target_n);
    for (std::size_t x = 0; x < img.size(); ++x)
        load[img[x]] += w[x];
    return std::all_of(load.begin(), load.end(), [](const Rational & r) { return r <= 1; });
}

// all |H|^|G| maps
inline bool naive_hom_exists(const Graph & g, const Graph & h, int cap)
{
    int k = g.size(), n = h.size();
    if (k == 0)
        return true;
    if (n == 0)
        return false;
    std::vector<int> img(k, 0);
    while (true) {
        if (edge_preserving(g, h, img)) {
            std::vector<int> cnt(n, 0);
            bool ok = true;
            for (int x : img)
                ok = ok && (cap < 0 || ++cnt[x] <= cap);
            if (ok)
                return true;
        }
        int pos = 0;
        while (pos < k && ++img[pos] == n)
            img[pos++] = 0;
        if (pos == k)
            return false;
    }
}

// all n! labelings
inline int naive_bandwidth(const Graph & g)
{
    int n = g.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;
    auto edges = g.edges();
    do {
        int w = 0;
        for (auto [u, v] : edges)
            w = std::max(w, std::abs(perm[u] - perm[v]));
        best = std::min(best, w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return edges.empty() ? 0 : best;
}

inline std::int64_t ceil_frac(const Rational & r, std::int64_t x)
{
    Rational v = r * x;
    std::int64_t f = static_cast<std::int64_t>(boost::multiprecision::numerator(v) / boost::multiprecision::denominator(v));
    if (Rational(f) < v)
        ++f;
    return f;
}

// Direct double loop over every admissible X' subset X, Y' subset Y. Returns true iff some pair
// deviates from d(X,Y) by more than eps. Integer cross-multiplication; eps = num/den.
inline bool naive_irregular(const Graph & g, const std::vector<int> & x, const std::vector<int> & y, std::int64_t num,
    std::int64_t den)
{
    int a = static_cast<int>(x.size()), b = static_cast<int>(y.size());
    std::int64_t total = 0;
    for (int u : x)
        for (int v : y)
            total += g.adjacent(u, v);
    std::int64_t min_a = (num * a + den - 1) / den, min_b = (num * b + den - 1) / den;
    std::int64_t ab = static_cast<std::int64_t>(a) * b;
    std::vector<std::int64_t> col(b);
    for (std::uint32_t xs = 1; xs < (1U << a); ++xs) {
        int sa = std::popcount(xs);
        if (sa < min_a)
            continue;
        for (int j = 0; j < b; ++j) {
            col[j] = 0;
            for (int i = 0; i < a; ++i)
                if (xs >> i & 1)
                    col[j] += g.adjacent(x[i], y[j]);
        }
        for (std::uint32_t ys = 1; ys < (1U << b); ++ys) {
            int sb = std::popcount(ys);
            if (sb < min_b)
                continue;
            std::int64_t e = 0;
            for (int j = 0; j < b; ++j)
                if (ys >> j & 1)
                    e += col[j];
            // |e/(sa sb) - total/(ab)| > num/den
            std::int64_t s = static_cast<std::int64_t>(sa) * sb;
            std::int64_t dev = e * ab - total * s;
            if (dev < 0)
                dev = -dev;
            if (dev * den > num * s * ab)
                return true;
        }
    }
    return false;
}

// canonical form of a small graph as the minimum adjacency mask over relabelings
inline std::uint64_t canonical_mask(const Graph & g)
{
    int n = g.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t m = 0;
        int k = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++k)
                if (g.adjacent(perm[u], perm[v]))
                    m |= std::uint64_t{1} << k;
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph graph_from_mask(int n, std::uint64_t m)
{
    Graph g(n);
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if (m >> k & 1)
                g.add_edge(u, v);
    return g;
}

// one representative per isomorphism class on n vertices
inline std::vector<Graph> all_graphs(int n)
{
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    std::uint64_t total = std::uint64_t{1} << pair_index_count(n);
    for (std::uint64_t m = 0; m < total; ++m) {
        Graph g = graph_from_mask(n, m);
        if (seen.insert(canonical_mask(g)).second)
            out.push_back(g);
    }
    return out;
}

inline int max_degree_inside(const Graph & g, const std::vector<int> & cls)
{
    int best = 0;
    for (int u : cls) {
        int d = 0;
        for (int v : cls)
            d += g.adjacent(u, v);
        best = std::max(best, d);
    }
    return best;
}

} // namespace rft
