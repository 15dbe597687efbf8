#include <rf/dense.hpp>
#include <rf/errors.hpp>
#include <rf/lovasz.hpp>
#include <rf/rng.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rf {

void DenseParams::validate() const
{
    if (alpha <= 0 || alpha > 1)
        throw InputError("alpha must lie in (0,1]");
    if (beta < 0 || beta > 1)
        throw InputError("beta must lie in [0,1]");
    if (rho <= 0 || rho > 1)
        throw InputError("rho must lie in (0,1]");
    if (delta < 0 || delta > 1)
        throw InputError("delta must lie in [0,1]");
    if (max_degree < 0)
        throw InputError("max degree must be nonnegative");
}

const char * to_string(DenseCondition c)
{
    switch (c) {
    case DenseCondition::Pass: return "pass";
    case DenseCondition::Arithmetic: return "degree_sum";
    case DenseCondition::PartSize: return "part_size";
    case DenseCondition::CrossDegree: return "cross_degree";
    case DenseCondition::BiDensity: return "bi_density";
    }
    return "?";
}

namespace {

// The m members of pool with fewest neighbours in into (ties: lower id).
std::vector<int> sparsest(const Graph & g, const std::vector<int> & pool, const VertexSet & into, int m)
{
    std::vector<std::pair<int, int>> keyed;
    keyed.reserve(pool.size());
    for (int v : pool)
        keyed.emplace_back(g.neighbours(v).count_and(into), v);
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
        out.push_back(keyed[i].second);
    return out;
}

} // namespace

// The sparsest pair is attained at the minimum admissible sizes (dropping a best-connected
// vertex never raises the density), so only |X| = |Y| = m are examined.
RegularityVerdict bi_density_check(const Graph & g, const VertexSet & part, const Rational & eps,
    const Rational & delta, const CheckMode & mode)
{
    auto members = part.members();
    int u = static_cast<int>(members.size());
    int m = static_cast<int>(ceil_mul(eps, u));
    RegularityVerdict v;
    bool small = u <= kExhaustiveSideCap;
    bool exhaustive = mode.kind == CheckMode::Kind::Exhaustive || (mode.kind == CheckMode::Kind::Auto && small);
    if (mode.kind == CheckMode::Kind::Exhaustive && ! small)
        throw InputError("exhaustive bi-density check is capped at 16 vertices per part");
    v.mode = exhaustive ? CheckMode::Kind::Exhaustive : CheckMode::Kind::Sampled;
    if (m < 1)
        m = 1;
    std::int64_t need = ceil_mul(delta, std::int64_t(m) * m); // e(X,Y) below this is a violation
    if (2 * m > u) {
        v.status = exhaustive ? RegularityStatus::CertifiedRegular : RegularityStatus::Unrefuted;
        return v;
    }
    auto test = [&](const VertexSet & xs, const std::vector<int> & ys) {
        VertexSet yset = VertexSet::of(g.size(), ys);
        if (edges_between(g, xs, yset) < need) {
            v.status = RegularityStatus::Violated;
            v.x_witness = xs;
            v.y_witness = yset;
            return true;
        }
        return false;
    };
    if (exhaustive) {
        for (std::uint32_t sub = (1U << m) - 1; sub < (1U << u);) {
            VertexSet xs(g.size());
            std::vector<int> rest;
            for (int i = 0; i < u; ++i) {
                if (sub >> i & 1U)
                    xs.set(members[i]);
                else
                    rest.push_back(members[i]);
            }
            if (test(xs, sparsest(g, rest, xs, m)))
                return v;
            std::uint32_t c = sub & -sub, r = sub + c;
            sub = (((r ^ sub) >> 2) / c) | r;
        }
        v.status = RegularityStatus::CertifiedRegular;
        return v;
    }
    for (std::uint64_t it = 0; it < mode.budget; ++it) {
        v.samples_tried = it + 1;
        Rng rng(derive_seed(mode.seed, it));
        std::vector<int> perm = members;
        rng.shuffle(std::span<int>(perm));
        std::vector<int> xi(perm.begin(), perm.begin() + m);
        std::sort(xi.begin(), xi.end());
        for (int round = 0; round < 16; ++round) {
            VertexSet xs = VertexSet::of(g.size(), xi);
            std::vector<int> rest;
            for (int w : members)
                if (! xs.test(w))
                    rest.push_back(w);
            auto yi = sparsest(g, rest, xs, m);
            if (test(xs, yi))
                return v;
            VertexSet ys = VertexSet::of(g.size(), yi);
            rest.clear();
            for (int w : members)
                if (! ys.test(w))
                    rest.push_back(w);
            auto next = sparsest(g, rest, ys, m);
            std::sort(next.begin(), next.end());
            if (next == xi)
                break;
            xi = std::move(next);
        }
    }
    v.status = RegularityStatus::Unrefuted;
    return v;
}

DenseVerdict dense_witness_check(const Graph & gamma, const DenseWitness & w, const DenseParams & p, const CheckMode & mode)
{
    p.validate();
    int s = static_cast<int>(w.parts.size());
    if (s < 1 || w.degrees.size() != w.parts.size())
        throw InputError("dense witness needs matching parts and degrees");
    VertexSet seen(gamma.size());
    for (const auto & part : w.parts) {
        if (part.universe() != gamma.size())
            throw InputError("dense witness part does not match the host");
        if (part.intersects(seen))
            throw InputError("dense witness parts overlap");
        seen |= part;
    }
    DenseVerdict v;

    long long sum = 0;
    for (int d : w.degrees) {
        if (d < 0)
            throw InputError("dense witness degrees must be nonnegative");
        sum += d;
    }
    if (sum != p.max_degree - s + 1) {
        v.failed = DenseCondition::Arithmetic;
        v.detail = "sum of degrees " + std::to_string(sum) + " != " + std::to_string(p.max_degree - s + 1);
        return v;
    }

    for (int i = 0; i < s; ++i)
        if (Rational(w.parts[i].count()) < p.alpha * gamma.size()) {
            v.failed = DenseCondition::PartSize;
            v.part = i;
            v.detail = "part " + std::to_string(i) + " has " + std::to_string(w.parts[i].count()) + " vertices";
            return v;
        }

    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            Rational need = (1 - p.beta) * w.parts[j].count();
            int bad = -1;
            w.parts[i].for_each([&](int u) {
                if (bad < 0 && Rational(gamma.neighbours(u).count_and(w.parts[j])) < need)
                    bad = u;
            });
            if (bad >= 0) {
                v.failed = DenseCondition::CrossDegree;
                v.part = i;
                v.other_part = j;
                v.vertex = bad;
                v.detail = "vertex " + std::to_string(bad) + " of part " + std::to_string(i) + " is short in part "
                    + std::to_string(j);
                return v;
            }
        }

    for (int i = 0; i < s; ++i) {
        CheckMode m = mode;
        m.seed = derive_seed(mode.seed, static_cast<std::uint64_t>(i));
        auto r = bi_density_check(gamma, w.parts[i], rpow(p.rho, 2 * w.degrees[i]), p.delta, m);
        if (r.status == RegularityStatus::Violated) {
            v.failed = DenseCondition::BiDensity;
            v.part = i;
            v.x_witness = r.x_witness;
            v.y_witness = r.y_witness;
            v.detail = "sparse pair inside part " + std::to_string(i);
            return v;
        }
        if (r.status == RegularityStatus::Unrefuted)
            v.certified = false;
    }
    return v;
}

EmbedResult dense_greedy_embed(const Graph & gamma, const DenseWitness & w, const DenseParams & p, const WeightedGraph & gw)
{
    p.validate();
    const Graph & g = gw.graph();
    if (g.max_degree() > p.max_degree)
        throw InputError("pattern exceeds the witness degree bound");
    int s = static_cast<int>(w.parts.size());
    if (s < 1 || w.degrees.size() != w.parts.size())
        throw InputError("dense witness needs matching parts and degrees");
    for (const auto & part : w.parts)
        if (part.universe() != gamma.size())
            throw InputError("dense witness part does not match the host");

    Split split = lovasz_partition(g, w.degrees);
    int n = g.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (split.class_of[a] != split.class_of[b])
            return split.class_of[a] < split.class_of[b];
        return gw.weight(a) > gw.weight(b);
    });
    std::vector<int> pos(n);
    for (int t = 0; t < n; ++t)
        pos[order[t]] = t;

    std::vector<VertexSet> cand(n);
    for (int v = 0; v < n; ++v)
        cand[v] = w.parts[split.class_of[v]];
    std::vector<Rational> load(gamma.size(), 0);
    std::vector<int> image(n, -1);
    Rational half_delta = p.delta / 2;

    EmbedResult res;
    for (int t = 0; t < n; ++t) {
        int v = order[t];
        std::vector<int> forward; // later neighbours in the same class
        g.neighbours(v).for_each([&](int x) {
            if (pos[x] > t && split.class_of[x] == split.class_of[v])
                forward.push_back(x);
        });
        if (cand[v].empty()) {
            res.stage = "empty candidate set at step " + std::to_string(t);
            return res;
        }
        int chosen = -1;
        bool any_dense = false;
        for (int u = cand[v].first(); u >= 0; u = cand[v].next(u + 1)) {
            bool dense_ok = true;
            for (int x : forward)
                if (Rational(gamma.neighbours(u).count_and(cand[x])) < half_delta * cand[x].count()) {
                    dense_ok = false;
                    break;
                }
            if (! dense_ok)
                continue;
            any_dense = true;
            if (load[u] + gw.weight(v) <= 1) {
                chosen = u;
                break;
            }
        }
        if (chosen < 0) {
            res.stage = std::string(any_dense ? "capacity" : "density filter") + " exhausted at step " + std::to_string(t);
            return res;
        }
        image[v] = chosen;
        load[chosen] += gw.weight(v);
        g.neighbours(v).for_each([&](int x) {
            if (pos[x] > t)
                cand[x] &= gamma.neighbours(chosen);
        });
    }
    VertexMap f(gamma.size(), image);
    if (! is_weighted_embedding(gw, gamma, f))
        throw std::logic_error("dense_greedy_embed produced an invalid map");
    res.map = std::move(f);
    return res;
}

} // namespace rf
