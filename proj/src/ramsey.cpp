#include <rf/errors.hpp>
#include <rf/morphisms.hpp>
#include <rf/ramsey.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace rf {

const char * to_string(OracleStatus s)
{
    switch (s) {
    case OracleStatus::Value: return "value";
    case OracleStatus::Exceeds: return "exceeds";
    case OracleStatus::InfiniteSuspected: return "infinite_suspected";
    }
    return "?";
}

const char * to_string(CertificateMode m)
{
    return m == CertificateMode::Exhaustive ? "exhaustive" : "symmetry_pruned";
}

std::optional<std::pair<Color, VertexMap>> mono_copy_search(const EdgeColoring & c, const WeightedGraph & gw)
{
    for (Color col : {Color::Red, Color::Blue}) {
        const Graph & side = col == Color::Red ? c.red() : c.blue();
        auto r = find_weighted_embedding(gw, side, kUnlimited);
        if (r.status == SearchStatus::Found) {
            auto profile = CapacityProfile::weight(gw.weights());
            if (! verify_homomorphism(gw.graph(), side, *r.map).valid || ! verify_capacity(*r.map, profile).valid)
                throw std::logic_error("embedding search returned an invalid map");
            return std::make_pair(col, *r.map);
        }
    }
    return std::nullopt;
}

namespace {

using Mask = std::uint64_t;

inline Mask bit(int e) { return Mask{1} << e; }

// Edges of K_n: the star at 0 first, then pairs among 1..n-1 lexicographically.
struct EdgeIndex {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> at;

    explicit EdgeIndex(int n_) : n(n_), at(n_, std::vector<int>(n_, -1))
    {
        auto add = [&](int u, int v) {
            at[u][v] = at[v][u] = static_cast<int>(edges.size());
            edges.emplace_back(u, v);
        };
        for (int v = 1; v < n; ++v)
            add(0, v);
        for (int u = 1; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                add(u, v);
    }

    int count() const { return static_cast<int>(edges.size()); }
    Mask full() const { return count() == 64 ? ~Mask{0} : bit(count()) - 1; }
};

// Edge sets of all copies of the pattern, as masks over an edge index.
struct MaskFamily {
    bool has_empty = false;
    std::vector<Mask> masks;
};

Mask image_mask(const std::vector<Edge> & pattern_edges, const std::vector<int> & image, const EdgeIndex & idx)
{
    Mask m = 0;
    for (auto [u, v] : pattern_edges)
        m |= bit(idx.at[image[u]][image[v]]);
    return m;
}

// Drops supersets; small families only, the search is correct either way.
void tidy(MaskFamily & fam)
{
    if (fam.has_empty) {
        fam.masks.clear();
        return;
    }
    std::sort(fam.masks.begin(), fam.masks.end());
    fam.masks.erase(std::unique(fam.masks.begin(), fam.masks.end()), fam.masks.end());
    if (fam.masks.size() > 5000)
        return;
    std::stable_sort(fam.masks.begin(), fam.masks.end(),
        [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    std::vector<Mask> kept;
    for (Mask m : fam.masks) {
        bool dominated = false;
        for (Mask k : kept)
            if ((k & m) == k) {
                dominated = true;
                break;
            }
        if (! dominated)
            kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end());
    fam.masks = std::move(kept);
}

// Injective copies by direct enumeration of k-permutations of [n].
MaskFamily copy_family(const Graph & g, const EdgeIndex & idx)
{
    MaskFamily fam;
    int k = g.size();
    if (k > idx.n)
        return fam;
    auto pattern_edges = g.edges();
    if (pattern_edges.empty()) {
        fam.has_empty = true;
        return fam;
    }
    std::unordered_set<Mask> seen;
    std::vector<int> image(k, -1);
    std::vector<char> used(idx.n, 0);
    auto rec = [&](auto && self, int pos) -> void {
        if (pos == k) {
            seen.insert(image_mask(pattern_edges, image, idx));
            return;
        }
        for (int t = 0; t < idx.n; ++t) {
            if (used[t])
                continue;
            used[t] = 1;
            image[pos] = t;
            self(self, pos + 1);
            used[t] = 0;
        }
    };
    rec(rec, 0);
    fam.masks.assign(seen.begin(), seen.end());
    tidy(fam);
    return fam;
}

// Weighted embeddings into K_n, via the capacity-constrained homomorphism enumerator.
MaskFamily weighted_family(const WeightedGraph & gw, const EdgeIndex & idx)
{
    MaskFamily fam;
    auto pattern_edges = gw.graph().edges();
    std::unordered_set<Mask> seen;
    for_each_capacity_homomorphism(gw.graph(), Graph::complete(idx.n), CapacityProfile::weight(gw.weights()),
        [&](const std::vector<int> & image) {
            Mask m = image_mask(pattern_edges, image, idx);
            if (m == 0) {
                fam.has_empty = true;
                return false;
            }
            seen.insert(m);
            return true;
        });
    fam.masks.assign(seen.begin(), seen.end());
    tidy(fam);
    return fam;
}

struct Prefix {
    int depth = 0;
    Mask red = 0;
    Mask blue = 0;
};

// Looks for a red/blue colouring of edges [0, E) in which no family mask is monochromatic.
// Edges are coloured in index order, red first; the first colouring found in that order wins.
class AvoidSearch {
public:
    AvoidSearch(int edge_count, const std::vector<Mask> & masks) : edges_(edge_count), by_last_(edge_count)
    {
        for (Mask m : masks)
            by_last_[std::bit_width(m) - 1].push_back(m);
    }

    bool closes(int e, Mask colour) const
    {
        for (Mask m : by_last_[e])
            if ((m & colour) == m)
                return true;
        return false;
    }

    bool admissible(const Prefix & p) const
    {
        Mask r = 0, b = 0;
        for (int e = 0; e < p.depth; ++e) {
            if (p.red & bit(e)) {
                r |= bit(e);
                if (closes(e, r))
                    return false;
            }
            else {
                b |= bit(e);
                if (closes(e, b))
                    return false;
            }
        }
        return true;
    }

    void expand(const Prefix & p, int depth, std::vector<Prefix> & out) const
    {
        if (p.depth >= depth) {
            out.push_back(p);
            return;
        }
        int e = p.depth;
        if (Mask r = p.red | bit(e); ! closes(e, r))
            expand({e + 1, r, p.blue}, depth, out);
        if (Mask b = p.blue | bit(e); ! closes(e, b))
            expand({e + 1, p.red, b}, depth, out);
    }

    template <class Cancel>
    bool complete(const Prefix & p, Mask & red_out, const Cancel & cancelled) const
    {
        std::uint64_t polls = 0;
        return dfs(p.depth, p.red, p.blue, red_out, cancelled, polls);
    }

    // Roots must be given in the intended search order.
    std::optional<Mask> run(const std::vector<Prefix> & roots, int workers) const
    {
        std::vector<Prefix> frontier;
        for (const auto & r : roots) {
            if (! admissible(r))
                continue;
            int depth = workers > 1 ? std::min(edges_, r.depth + 8) : r.depth;
            expand(r, depth, frontier);
        }
        std::vector<Mask> found(frontier.size(), 0);
        auto first = detail::parallel_first(static_cast<std::int64_t>(frontier.size()), workers,
            [&](std::int64_t i, auto cancelled) { return complete(frontier[i], found[i], cancelled); });
        if (first < 0)
            return std::nullopt;
        return found[first];
    }

private:
    template <class Cancel>
    bool dfs(int e, Mask red, Mask blue, Mask & red_out, const Cancel & cancelled, std::uint64_t & polls) const
    {
        if (e == edges_) {
            red_out = red;
            return true;
        }
        if ((++polls & 0xfff) == 0 && cancelled())
            return false;
        if (Mask r = red | bit(e); ! closes(e, r) && dfs(e + 1, r, blue, red_out, cancelled, polls))
            return true;
        if (Mask b = blue | bit(e); ! closes(e, b) && dfs(e + 1, red, b, red_out, cancelled, polls))
            return true;
        return false;
    }

    int edges_;
    std::vector<std::vector<Mask>> by_last_;
};

// Star of vertex 0 reduced to a red run followed by a blue run, with at least as many red.
std::vector<Prefix> star_roots(const EdgeIndex & idx, bool iso_prune)
{
    int d = idx.n - 1;
    if (! iso_prune || d <= 0)
        return {Prefix{}};
    std::vector<Prefix> roots;
    Mask star = bit(d) - 1;
    for (int a = d; 2 * a >= d; --a) {
        Mask red = bit(a) - 1;
        roots.push_back({d, red, star ^ red});
    }
    return roots;
}

Graph graph_of(const EdgeIndex & idx, Mask m)
{
    Graph g(idx.n);
    for (int e = 0; e < idx.count(); ++e)
        if (m & bit(e))
            g.add_edge(idx.edges[e].first, idx.edges[e].second);
    return g;
}

EdgeColoring coloring_of(const EdgeIndex & idx, Mask host, Mask red)
{
    return EdgeColoring(graph_of(idx, host), graph_of(idx, red));
}

void check_witness(const EdgeColoring & c, const WeightedGraph & gw)
{
    if (mono_copy_search(c, gw))
        throw std::logic_error("oracle witness contains a monochromatic copy");
}

void check_cap(int n_max, int cap)
{
    if (n_max < 1)
        throw InputError("n_max must be at least 1");
    if (n_max > cap)
        throw InputError("n_max " + std::to_string(n_max) + " exceeds the hard cap " + std::to_string(cap));
}

// Shared driver for the two complete-host oracles.
template <class FamilyFn>
OracleResult complete_host_oracle(const WeightedGraph & gw, int n_max, const OracleOptions & options, FamilyFn family_of)
{
    OracleResult res;
    res.n_max = n_max;
    res.mode = options.iso_prune ? CertificateMode::SymmetryPruned : CertificateMode::Exhaustive;
    for (int n = 1; n <= n_max; ++n) {
        EdgeIndex idx(n);
        MaskFamily fam = family_of(idx);
        std::optional<Mask> avoiding;
        if (! fam.has_empty) {
            AvoidSearch search(idx.count(), fam.masks);
            avoiding = search.run(star_roots(idx, options.iso_prune), options.workers);
        }
        if (! avoiding) {
            res.status = OracleStatus::Value;
            res.value = n;
            return res;
        }
        res.witness = coloring_of(idx, idx.full(), *avoiding);
        res.witness_n = n;
        check_witness(*res.witness, gw);
    }
    res.status = OracleStatus::Exceeds;
    return res;
}

// Complement edge sets of admissible hosts: every vertex misses at most max_missing edges.
std::vector<Mask> host_complements(const EdgeIndex & idx, int max_missing, bool iso_prune)
{
    std::vector<Mask> labelled;
    std::vector<int> missing(idx.n, 0);
    auto rec = [&](auto && self, int e, Mask comp) -> void {
        if (e == idx.count()) {
            labelled.push_back(comp);
            return;
        }
        self(self, e + 1, comp);
        auto [u, v] = idx.edges[e];
        if (missing[u] < max_missing && missing[v] < max_missing) {
            ++missing[u];
            ++missing[v];
            self(self, e + 1, comp | bit(e));
            --missing[u];
            --missing[v];
        }
    };
    rec(rec, 0, 0);
    if (! iso_prune)
        return labelled;

    std::vector<int> perm(idx.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> relabel;
    do {
        std::vector<int> r(idx.count());
        for (int e = 0; e < idx.count(); ++e)
            r[e] = idx.at[perm[idx.edges[e].first]][perm[idx.edges[e].second]];
        relabel.push_back(std::move(r));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<Mask> canonical;
    for (Mask comp : labelled) {
        Mask best = comp;
        for (const auto & r : relabel) {
            Mask m = 0;
            for (Mask rest = comp; rest; rest &= rest - 1)
                m |= bit(r[std::countr_zero(rest)]);
            best = std::min(best, m);
        }
        canonical.insert(best);
    }
    return {canonical.begin(), canonical.end()};
}

// Restricts a family to the masks inside host and renumbers host edges consecutively.
std::vector<Mask> restrict_family(const std::vector<Mask> & masks, Mask host)
{
    std::vector<Mask> out;
    for (Mask m : masks) {
        if (m & ~host)
            continue;
        Mask c = 0;
        int j = 0;
        for (Mask rest = host; rest; rest &= rest - 1, ++j)
            if (m & (rest & -rest))
                c |= bit(j);
        out.push_back(c);
    }
    return out;
}

Mask expand_mask(Mask compact, Mask host)
{
    Mask m = 0;
    int j = 0;
    for (Mask rest = host; rest; rest &= rest - 1, ++j)
        if (compact & bit(j))
            m |= rest & -rest;
    return m;
}

} // namespace

OracleResult ramsey_number(const Graph & g, int n_max, const OracleOptions & options)
{
    check_cap(n_max, kRamseyHardCap);
    auto gw = WeightedGraph::uniform(g);
    return complete_host_oracle(gw, n_max, options, [&](const EdgeIndex & idx) { return copy_family(g, idx); });
}

OracleResult weighted_ramsey(const WeightedGraph & gw, int n_max, const OracleOptions & options)
{
    check_cap(n_max, kRamseyHardCap);
    return complete_host_oracle(gw, n_max, options, [&](const EdgeIndex & idx) { return weighted_family(gw, idx); });
}

OracleResult stable_ramsey(const WeightedGraph & gw, const Rational & eps, int n_max, const OracleOptions & options)
{
    check_cap(n_max, kStableHardCap);
    if (eps < 0 || eps > 1)
        throw InputError("eps must lie in [0,1]");
    OracleResult res;
    res.n_max = n_max;
    res.mode = options.iso_prune ? CertificateMode::SymmetryPruned : CertificateMode::Exhaustive;
    bool complete_unresolved_at_max = true;
    for (int n = 1; n <= n_max; ++n) {
        EdgeIndex idx(n);
        MaskFamily fam = weighted_family(gw, idx);
        if (fam.has_empty) {
            res.status = OracleStatus::Value;
            res.value = n;
            return res;
        }
        int threshold = min_degree_threshold(n, eps);
        auto comps = host_complements(idx, n - 1 - threshold, options.iso_prune);
        std::vector<Mask> found(comps.size(), 0);
        auto first = detail::parallel_first(static_cast<std::int64_t>(comps.size()), options.workers,
            [&](std::int64_t i, auto cancelled) {
                Mask host = idx.full() & ~comps[i];
                int e = std::popcount(host);
                AvoidSearch search(e, restrict_family(fam.masks, host));
                Prefix root;
                if (options.iso_prune && e > 0)
                    root = {1, 1, 0};
                if (! search.admissible(root))
                    return false;
                return search.complete(root, found[i], cancelled);
            });
        if (first < 0) {
            res.status = OracleStatus::Value;
            res.value = n;
            return res;
        }
        Mask host = idx.full() & ~comps[first];
        res.witness = coloring_of(idx, host, expand_mask(found[first], host));
        res.witness_n = n;
        check_witness(*res.witness, gw);
        if (n == n_max)
            complete_unresolved_at_max = first == 0;
    }
    res.status = complete_unresolved_at_max ? OracleStatus::Exceeds : OracleStatus::InfiniteSuspected;
    return res;
}

} // namespace rf
