#include <rf/drc.hpp>
#include <rf/errors.hpp>
#include <rf/rng.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace rf {

VertexSet common_neighbourhood(const Graph & g, const std::vector<int> & tuple, const VertexSet & within)
{
    VertexSet x = within;
    for (int v : tuple)
        x &= g.neighbours(v);
    return x;
}

namespace {

std::uint64_t ipow(std::uint64_t base, int e)
{
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

// Bad completions of a partial tuple whose common neighbourhood so far is `common`:
// once fewer than bad_below remain, every completion is bad.
std::uint64_t bad_completions(const Graph & g, const std::vector<int> & xs, int remaining, const VertexSet & common,
    std::int64_t bad_below)
{
    if (common.count() < bad_below)
        return ipow(xs.size(), remaining);
    if (remaining == 0)
        return 0;
    std::uint64_t total = 0;
    for (int v : xs)
        total += bad_completions(g, xs, remaining - 1, common & g.neighbours(v), bad_below);
    return total;
}

// Straight enumeration of X^Delta, kept separate from the pruned count above.
std::uint64_t bad_tuples_plain(const Graph & g, const std::vector<int> & xs, int delta, std::int64_t bad_below,
    const VertexSet & within)
{
    std::uint64_t bad = 0;
    std::vector<std::size_t> idx(delta, 0);
    std::vector<int> tuple(delta);
    if (xs.empty())
        return 0;
    while (true) {
        for (int i = 0; i < delta; ++i)
            tuple[i] = xs[idx[i]];
        if (common_neighbourhood(g, tuple, within).count() < bad_below)
            ++bad;
        int i = delta - 1;
        while (i >= 0 && ++idx[i] == xs.size())
            idx[i--] = 0;
        if (i < 0)
            return bad;
    }
}

std::uint64_t bad_tuples_sampled(const Graph & g, const std::vector<int> & xs, int delta, std::int64_t bad_below,
    const VertexSet & within, std::uint64_t samples, std::uint64_t seed)
{
    if (xs.empty())
        return 0;
    Rng rng(seed);
    std::uint64_t bad = 0;
    std::vector<int> tuple(delta);
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (int i = 0; i < delta; ++i)
            tuple[i] = xs[rng.below(xs.size())];
        if (common_neighbourhood(g, tuple, within).count() < bad_below)
            ++bad;
    }
    long double total = std::pow(static_cast<long double>(xs.size()), delta);
    return static_cast<std::uint64_t>(std::llround(total * bad / samples));
}

bool fits(std::size_t size, int delta, std::uint64_t budget)
{
    long double t = std::pow(static_cast<long double>(size), delta);
    return t <= static_cast<long double>(budget);
}

} // namespace

std::uint64_t count_bad_tuples(const Graph & g, const VertexSet & x, int delta, std::int64_t bad_below,
    const VertexSet & within)
{
    return bad_completions(g, x.members(), delta, within, bad_below);
}

DrcSelection drc_select(const Graph & g, const VertexSet & x0, int delta, std::int64_t bad_below, std::uint64_t seed,
    const DrcOptions & options)
{
    int n = g.size();
    if (delta < 1)
        throw InputError("drc_select needs Delta >= 1");
    if (options.trials < 1 && ! options.exhaustive)
        throw InputError("drc_select needs at least one trial");
    VertexSet within = options.within.value_or(VertexSet::full(n));
    if (within.universe() != n || x0.universe() != n)
        throw InputError("vertex subsets do not match the graph");
    auto pool = within.members();
    DrcSelection best;
    best.x = VertexSet(n);
    if (pool.empty())
        return best;

    std::vector<std::vector<int>> tuples;
    if (options.exhaustive) {
        if (! fits(pool.size(), delta, std::uint64_t{1} << 22))
            throw InputError("exhaustive tuple enumeration is too large");
        std::vector<std::size_t> idx(delta, 0);
        while (true) {
            std::vector<int> t(delta);
            for (int i = 0; i < delta; ++i)
                t[i] = pool[idx[i]];
            tuples.push_back(std::move(t));
            int i = delta - 1;
            while (i >= 0 && ++idx[i] == pool.size())
                idx[i--] = 0;
            if (i < 0)
                break;
        }
    }
    else {
        Rng rng(seed);
        for (int t = 0; t < options.trials; ++t) {
            std::vector<int> tup(delta);
            for (int i = 0; i < delta; ++i)
                tup[i] = pool[rng.below(pool.size())];
            tuples.push_back(std::move(tup));
        }
    }

    struct Scored {
        long double f1, f2;
    };
    std::vector<Scored> scored(tuples.size());
    std::map<std::vector<int>, std::pair<std::uint64_t, bool>> xi_cache;
    auto xi_of = [&](const std::vector<int> & xs) {
        auto it = xi_cache.find(xs);
        if (it != xi_cache.end())
            return it->second;
        std::pair<std::uint64_t, bool> v;
        if (fits(xs.size(), delta, options.tuple_budget))
            v = {bad_completions(g, xs, delta, within, bad_below), true};
        else
            v = {bad_tuples_sampled(g, xs, delta, bad_below, within, options.tuple_budget,
                     derive_seed(seed, 0x5eed0000ULL + xi_cache.size())),
                false};
        xi_cache.emplace(xs, v);
        return v;
    };
    long double e1 = 0, e2 = 0;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        VertexSet x = common_neighbourhood(g, tuples[t], within);
        long double a = std::pow(static_cast<long double>(x.count_and(x0)), delta);
        long double b = std::pow(static_cast<long double>(x.count()), delta);
        long double xi = static_cast<long double>(xi_of(x.members()).first);
        scored[t] = {a * b, xi * a};
        e1 += scored[t].f1;
        e2 += scored[t].f2;
    }
    e1 /= tuples.size();
    e2 /= tuples.size();
    std::size_t pick = 0;
    long double top = 0;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        long double s = (e1 > 0 ? scored[t].f1 / e1 : 0) - (e2 > 0 ? scored[t].f2 / (2 * e2) : 0);
        if (t == 0 || s > top) {
            top = s;
            pick = t;
        }
    }

    // statistics recomputed from the chosen tuple alone
    best.tuple = tuples[pick];
    best.x = common_neighbourhood(g, best.tuple, within);
    best.size = best.x.count();
    best.overlap = best.x.count_and(x0);
    auto xs = best.x.members();
    if (fits(xs.size(), delta, options.tuple_budget))
        best.bad_tuples = bad_tuples_plain(g, xs, delta, bad_below, within);
    else {
        best.bad_tuples = xi_of(xs).first;
        best.bad_exact = false;
    }
    best.score = top;
    best.candidates = tuples.size();
    return best;
}

DrcSelection drc_select(const Graph & g, const VertexSet & x0, int delta, const Rational & beta, std::uint64_t seed,
    const DrcOptions & options)
{
    int pool = options.within ? options.within->count() : g.size();
    return drc_select(g, x0, delta, ceil_mul(beta, pool), seed, options);
}

Rational bandwidth_beta(const Rational & alpha, int delta)
{
    if (delta < 1)
        throw InputError("bandwidth_beta needs Delta >= 1");
    return rpow(alpha, 6 * delta + 1) / (256 * delta);
}

const char * to_string(DrcStatus s)
{
    switch (s) {
    case DrcStatus::Embedded: return "embedded";
    case DrcStatus::Starved: return "starved";
    case DrcStatus::DegenerateBudget: return "degenerate_budget";
    }
    return "?";
}

DrcEmbedReport drc_bandwidth_embed(const Graph & host, const Graph & h, const Labeling & labeling,
    const Rational & alpha, std::uint64_t seed, const DrcEmbedOptions & options)
{
    if (alpha <= 0 || alpha > 1)
        throw InputError("alpha must lie in (0,1]");
    int n = host.size(), m = h.size();
    if (! is_bijection(labeling, m))
        throw InputError("labelling is not a bijection onto [0, |H|)");
    std::vector<int> side;
    if (! is_bipartite(h, &side))
        throw InputError("H must be bipartite");
    if (m > n)
        throw InputError("H has more vertices than the host");
    int delta = options.delta.value_or(std::max(1, h.max_degree()));
    if (delta < std::max(1, h.max_degree()))
        throw InputError("Delta is below the maximum degree of H");

    DrcEmbedReport rep;
    rep.beta = options.beta.value_or(bandwidth_beta(alpha, delta));
    if (rep.beta <= 0)
        throw InputError("beta must be positive");
    rep.gamma = 16 * rep.beta / rpow(alpha, 2 * delta);
    rep.width = labeling_width(h, labeling);
    rep.width_budget = floor_mul(rep.beta, n);
    std::int64_t w = rep.width_budget;
    if (h.edge_count() > 0 && (w == 0 || rep.width > w)) {
        rep.status = DrcStatus::DegenerateBudget;
        rep.result.stage = w == 0 ? "degenerate bandwidth budget: floor(beta n) = 0"
                                  : "labelling width " + std::to_string(rep.width) + " exceeds floor(beta n) = "
                + std::to_string(w);
        return rep;
    }
    std::int64_t bad_below = ceil_mul(8 * rep.beta, n);
    bool forbid_active = rep.gamma < 1;

    std::vector<int> phi(m, -1);
    VertexSet used(n);
    VertexSet all = VertexSet::full(n);
    auto order = labeling.order();

    if (h.edge_count() > 0) {
        int bside = -1;
        for (int v : order)
            if (h.degree(v) > 0) {
                bside = side[v];
                break;
            }
        // block of b: least t with label (1-based) <= 2 t w
        std::vector<int> block(m, 0);
        int last_block = 0;
        for (int v = 0; v < m; ++v)
            if (h.degree(v) > 0 && side[v] == bside) {
                block[v] = static_cast<int>((labeling.label[v] + 1 + 2 * w - 1) / (2 * w));
                last_block = std::max(last_block, block[v]);
            }
        for (int v = 0; v < m; ++v)
            if (h.degree(v) > 0 && side[v] != bside)
                h.neighbours(v).for_each([&](int b) { block[v] = std::max(block[v], block[b]); });

        auto select = [&](const VertexSet & x0, const VertexSet & within, std::uint64_t s) {
            DrcOptions o = options.select;
            o.within = within;
            return drc_select(host, x0, delta, bad_below, s, o).x;
        };
        std::vector<VertexSet> res;
        res.push_back(select(all, all, derive_seed(seed, 0)));
        rep.reservoir_sizes.push_back(res[0].count());
        VertexSet v_prev = all; // V_{-1} read as all of V

        for (int t = 0; t < last_block; ++t) {
            VertexSet v_t = all - used;
            res.push_back(select(res[t] - used, v_t, derive_seed(seed, static_cast<std::uint64_t>(t) + 1)));
            rep.reservoir_sizes.push_back(res[t + 1].count());
            ++rep.epochs;
            VertexSet inter = res[t] & res[t + 1];

            for (int b : order) {
                if (h.degree(b) == 0 || side[b] != bside || block[b] != t + 1)
                    continue;
                VertexSet cand = inter - used;
                if (forbid_active) {
                    h.neighbours(b).for_each([&](int a) {
                        std::vector<int> placed;
                        h.neighbours(a).for_each([&](int z) {
                            if (phi[z] >= 0)
                                placed.push_back(phi[z]);
                        });
                        int rest = delta - static_cast<int>(placed.size()) - 1;
                        if (rest < 0)
                            return;
                        bool early = block[a] == t + 1;
                        const VertexSet & xref = early ? res[t] : res[t + 1];
                        const VertexSet & vref = early ? v_prev : v_t;
                        auto xs = xref.members();
                        Rational limit = rpow(rep.gamma * static_cast<std::int64_t>(xs.size()), rest);
                        VertexSet base = common_neighbourhood(host, placed, vref);
                        for (int x = cand.first(); x >= 0; x = cand.next(x + 1)) {
                            auto cnt = bad_completions(host, xs, rest, base & host.neighbours(x), bad_below);
                            if (Rational(cnt) > limit)
                                cand.reset(x);
                        }
                    });
                }
                int x = cand.first();
                if (x < 0) {
                    rep.status = DrcStatus::Starved;
                    rep.result.stage = "B vertex starved in epoch " + std::to_string(t);
                    return rep;
                }
                phi[b] = x;
                used.set(x);
            }
            for (int a : order) {
                if (h.degree(a) == 0 || side[a] == bside || block[a] != t + 1)
                    continue;
                VertexSet cand = all - used;
                h.neighbours(a).for_each([&](int z) { cand &= host.neighbours(phi[z]); });
                int x = cand.first();
                if (x < 0) {
                    rep.status = DrcStatus::Starved;
                    rep.result.stage = "A vertex starved in epoch " + std::to_string(t);
                    return rep;
                }
                phi[a] = x;
                used.set(x);
            }
            v_prev = v_t;
        }
    }
    for (int v : order)
        if (h.degree(v) == 0) {
            int x = (all - used).first();
            phi[v] = x;
            used.set(x);
        }
    VertexMap f(n, phi);
    if (! is_embedding(h, host, f))
        throw std::logic_error("drc_bandwidth_embed produced an invalid embedding");
    rep.status = DrcStatus::Embedded;
    rep.result.map = std::move(f);
    return rep;
}

} // namespace rf
