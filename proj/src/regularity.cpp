#include <rf/errors.hpp>
#include <rf/regularity.hpp>
#include <rf/rng.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace rf {

void RegularityParams::validate() const
{
    if (eps <= 0 || eps >= 1)
        throw InputError("eps must lie strictly between 0 and 1");
    if (delta < 0 || delta > 1)
        throw InputError("delta must lie in [0,1]");
}

const char * to_string(CheckMode::Kind k)
{
    switch (k) {
    case CheckMode::Kind::Exhaustive: return "exhaustive";
    case CheckMode::Kind::Sampled: return "sampled";
    case CheckMode::Kind::Auto: return "auto";
    }
    return "?";
}

const char * to_string(RegularityStatus s)
{
    switch (s) {
    case RegularityStatus::CertifiedRegular: return "certified_regular";
    case RegularityStatus::Violated: return "violated";
    case RegularityStatus::Unrefuted: return "unrefuted";
    }
    return "?";
}

bool witness_violates(const Graph & g, const VertexSet & x, const VertexSet & y, const Rational & eps,
    const VertexSet & xw, const VertexSet & yw)
{
    if (xw.empty() || yw.empty() || ! xw.subset_of(x) || ! yw.subset_of(y))
        return false;
    if (xw.count() < ceil_mul(eps, x.count()) || yw.count() < ceil_mul(eps, y.count()))
        return false;
    Rational diff = pair_density(g, x, y) - pair_density(g, xw, yw);
    return abs(diff) > eps;
}

namespace {

using Wide = __int128;

// Integer form of |e/(a s) - E/(|X||Y|)| > p/q.
struct ViolationTest {
    Wide total_edges, nx, ny, p, q;

    bool operator()(std::int64_t e, std::int64_t a, std::int64_t s) const
    {
        Wide lhs = Wide(e) * nx * ny - total_edges * a * s;
        if (lhs < 0)
            lhs = -lhs;
        return lhs * q > p * a * s * nx * ny;
    }
};

ViolationTest make_test(std::int64_t total, int nx, int ny, const Rational & eps)
{
    return {total, nx, ny, static_cast<Wide>(to_int64(numerator_of(eps), "eps numerator")),
        static_cast<Wide>(to_int64(denominator_of(eps), "eps denominator"))};
}

// Indices of the s largest (dense) or smallest entries of deg; ties by lower index.
std::vector<int> extreme(const std::vector<int> & deg, int s, bool dense)
{
    std::vector<int> idx(deg.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return dense ? deg[a] > deg[b] : deg[a] < deg[b]; });
    idx.resize(s);
    std::sort(idx.begin(), idx.end());
    return idx;
}

// Extreme sub-pair densities are attained at the minimum admissible sizes: dropping the
// least (most) connected vertex of a side never lowers (raises) the density. So only
// |X'| = ceil(eps|X|), |Y'| = ceil(eps|Y|) need checking.
RegularityVerdict exhaustive_check(const Graph & g, const VertexSet & x, const VertexSet & y, const Rational & eps)
{
    auto xs = x.members(), ys = y.members();
    bool swap_sides = xs.size() > ys.size();
    const auto & s_side = swap_sides ? ys : xs; // enumerated side
    const auto & t_side = swap_sides ? xs : ys;
    int ns = static_cast<int>(s_side.size()), nt = static_cast<int>(t_side.size());

    std::vector<std::uint32_t> row(nt, 0); // neighbours of t inside s_side, as a mask
    std::int64_t total = 0;
    for (int j = 0; j < nt; ++j)
        for (int i = 0; i < ns; ++i)
            if (g.adjacent(t_side[j], s_side[i])) {
                row[j] |= 1U << i;
                ++total;
            }
    int a = static_cast<int>(ceil_mul(eps, ns)), s = static_cast<int>(ceil_mul(eps, nt));
    auto violates = make_test(total, ns, nt, eps);

    RegularityVerdict v;
    v.mode = CheckMode::Kind::Exhaustive;
    std::vector<int> deg(nt);
    std::uint32_t limit = ns == 32 ? 0 : (1U << ns);
    for (std::uint32_t sub = (1U << a) - 1; sub < limit;) {
        for (int j = 0; j < nt; ++j)
            deg[j] = std::popcount(row[j] & sub);
        for (bool dense : {true, false}) {
            auto pick = extreme(deg, s, dense);
            std::int64_t e = 0;
            for (int j : pick)
                e += deg[j];
            if (violates(e, a, s)) {
                VertexSet sw(g.size()), tw(g.size());
                for (int i = 0; i < ns; ++i)
                    if (sub >> i & 1U)
                        sw.set(s_side[i]);
                for (int j : pick)
                    tw.set(t_side[j]);
                v.status = RegularityStatus::Violated;
                v.x_witness = swap_sides ? tw : sw;
                v.y_witness = swap_sides ? sw : tw;
                return v;
            }
        }
        // next mask with the same popcount
        std::uint32_t c = sub & -sub, r = sub + c;
        if (r == 0)
            break;
        sub = (((r ^ sub) >> 2) / c) | r;
    }
    v.status = RegularityStatus::CertifiedRegular;
    return v;
}

// Random start for X', then alternate best responses on each side towards the densest
// (or sparsest) sub-pair of minimum admissible size.
RegularityVerdict sampled_check(const Graph & g, const VertexSet & x, const VertexSet & y, const Rational & eps,
    std::uint64_t budget, std::uint64_t seed)
{
    auto xs = x.members(), ys = y.members();
    int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());
    int a = static_cast<int>(ceil_mul(eps, nx)), s = static_cast<int>(ceil_mul(eps, ny));
    auto violates = make_test(edges_between(g, x, y), nx, ny, eps);

    auto to_set = [&](const std::vector<int> & side, const std::vector<int> & idx) {
        VertexSet out(g.size());
        for (int i : idx)
            out.set(side[i]);
        return out;
    };
    auto degrees_into = [&](const std::vector<int> & side, const VertexSet & into) {
        std::vector<int> deg(side.size());
        for (std::size_t i = 0; i < side.size(); ++i)
            deg[i] = g.neighbours(side[i]).count_and(into);
        return deg;
    };

    RegularityVerdict v;
    v.mode = CheckMode::Kind::Sampled;
    for (std::uint64_t it = 0; it < budget; ++it) {
        v.samples_tried = it + 1;
        Rng rng(derive_seed(seed, it));
        std::vector<int> perm(nx);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(std::span<int>(perm));
        perm.resize(a);
        std::sort(perm.begin(), perm.end());
        for (bool dense : {true, false}) {
            std::vector<int> xi = perm;
            for (int round = 0; round < 16; ++round) {
                VertexSet xw = to_set(xs, xi);
                auto dy = degrees_into(ys, xw);
                auto yi = extreme(dy, s, dense);
                std::int64_t e = 0;
                for (int j : yi)
                    e += dy[j];
                VertexSet yw = to_set(ys, yi);
                if (violates(e, a, s)) {
                    v.status = RegularityStatus::Violated;
                    v.x_witness = xw;
                    v.y_witness = yw;
                    return v;
                }
                auto next = extreme(degrees_into(xs, yw), a, dense);
                if (next == xi)
                    break;
                xi = std::move(next);
            }
        }
    }
    v.status = RegularityStatus::Unrefuted;
    return v;
}

} // namespace

RegularityVerdict regularity_check(const Graph & g, const VertexSet & x, const VertexSet & y,
    const RegularityParams & p, const CheckMode & mode)
{
    p.validate();
    if (x.universe() != g.size() || y.universe() != g.size())
        throw InputError("vertex subsets do not match the graph");
    if (x.empty() || y.empty())
        throw InputError("regularity check needs nonempty sides");
    if (x.intersects(y))
        throw InputError("regularity check needs disjoint sides");
    bool small = x.count() <= kExhaustiveSideCap && y.count() <= kExhaustiveSideCap;
    switch (mode.kind) {
    case CheckMode::Kind::Exhaustive:
        if (! small)
            throw InputError("exhaustive regularity check is capped at 16 vertices per side");
        return exhaustive_check(g, x, y, p.eps);
    case CheckMode::Kind::Sampled:
        return sampled_check(g, x, y, p.eps, mode.budget, mode.seed);
    case CheckMode::Kind::Auto:
        return small ? exhaustive_check(g, x, y, p.eps) : sampled_check(g, x, y, p.eps, mode.budget, mode.seed);
    }
    return {};
}

void Partition::validate() const
{
    if (classes.size() < 2)
        throw InputError("partition needs V_0 and at least one class");
    VertexSet seen(n);
    for (const auto & c : classes) {
        if (c.universe() != n)
            throw InputError("partition class has the wrong universe");
        if (seen.intersects(c))
            throw InputError("partition classes overlap");
        seen |= c;
    }
    if (seen.count() != n)
        throw InputError("partition does not cover every vertex");
    int size = classes[1].count();
    if (size == 0)
        throw InputError("partition classes must be nonempty");
    for (std::size_t i = 2; i < classes.size(); ++i)
        if (classes[i].count() != size)
            throw InputError("partition classes V_1..V_k must have equal size");
}

namespace {

struct PairVerdicts {
    std::vector<std::pair<int, int>> pairs;
    std::vector<RegularityVerdict> verdicts;
};

PairVerdicts check_all_pairs(const Graph & g, const Partition & part, const RegularityParams & p,
    const CheckMode & mode, int workers)
{
    p.validate();
    if (part.n != g.size())
        throw InputError("partition does not match the graph");
    part.validate();
    PairVerdicts out;
    for (int i = 1; i <= part.k(); ++i)
        for (int j = i + 1; j <= part.k(); ++j)
            out.pairs.emplace_back(i, j);
    out.verdicts.resize(out.pairs.size());
    detail::parallel_for(static_cast<std::int64_t>(out.pairs.size()), workers, [&](std::int64_t t) {
        CheckMode m = mode;
        m.seed = derive_seed(mode.seed, static_cast<std::uint64_t>(t));
        auto [i, j] = out.pairs[t];
        out.verdicts[t] = regularity_check(g, part.classes[i], part.classes[j], p, m);
    });
    return out;
}

bool at_most(std::int64_t count, const Rational & eps, std::int64_t scale)
{
    return Rational(count) <= eps * scale;
}

} // namespace

Graph reduced_graph(const Graph & g, const Partition & part, const RegularityParams & p, bool with_density,
    const CheckMode & mode, int workers)
{
    auto all = check_all_pairs(g, part, p, mode, workers);
    Graph r(part.k());
    for (std::size_t t = 0; t < all.pairs.size(); ++t) {
        auto [i, j] = all.pairs[t];
        if (! all.verdicts[t].regular_or_unrefuted())
            continue;
        if (with_density && pair_density(g, part.classes[i], part.classes[j]) < p.delta)
            continue;
        r.add_edge(i - 1, j - 1);
    }
    return r;
}

int PartitionReport::max_per_class() const
{
    return irregular_per_class.empty() ? 0 : *std::max_element(irregular_per_class.begin(), irregular_per_class.end());
}

PartitionReport assess_partition(const Graph & g, const Partition & part, const RegularityParams & p,
    const CheckMode & mode, int workers)
{
    auto all = check_all_pairs(g, part, p, mode, workers);
    int k = part.k();
    PartitionReport rep;
    rep.irregular_per_class.assign(k, 0);
    rep.mode = mode.kind == CheckMode::Kind::Sampled ? CheckMode::Kind::Sampled : CheckMode::Kind::Exhaustive;
    for (std::size_t t = 0; t < all.pairs.size(); ++t) {
        if (all.verdicts[t].mode == CheckMode::Kind::Sampled)
            rep.mode = CheckMode::Kind::Sampled;
        if (all.verdicts[t].regular_or_unrefuted())
            continue;
        auto [i, j] = all.pairs[t];
        ++rep.irregular_per_class[i - 1];
        ++rep.irregular_per_class[j - 1];
        ++rep.irregular_pairs;
    }
    rep.per_class_ok = at_most(rep.max_per_class(), p.eps, k);
    rep.total_ok = at_most(rep.irregular_pairs, p.eps, std::int64_t(k) * k);
    rep.exceptional_ok = at_most(part.classes[0].count(), p.eps, g.size());
    return rep;
}

std::pair<Partition, PartitionReport> fixed_k_partition(const Graph & g, int k, const RegularityParams & p,
    std::uint64_t seed, int retries, const CheckMode & mode, int workers)
{
    int n = g.size();
    if (k < 1 || k > n)
        throw InputError("fixed_k_partition needs 1 <= k <= n");
    p.validate();
    int size = n / k;
    std::optional<std::pair<Partition, PartitionReport>> best;
    for (int r = 0; r < std::max(retries, 1); ++r) {
        std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(r));
        Rng rng(s);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(std::span<int>(perm));
        Partition part;
        part.n = n;
        part.classes.assign(k + 1, VertexSet(n));
        for (int pos = 0; pos < n; ++pos) {
            int c = pos < size * k ? 1 + pos / size : 0;
            part.classes[c].set(perm[pos]);
        }
        CheckMode m = mode;
        m.seed = derive_seed(mode.seed, static_cast<std::uint64_t>(r));
        auto rep = assess_partition(g, part, p, m, workers);
        rep.retry = r;
        rep.seed_used = s;
        bool better = ! best || rep.max_per_class() < best->second.max_per_class()
            || (rep.max_per_class() == best->second.max_per_class() && rep.irregular_pairs < best->second.irregular_pairs);
        if (better)
            best.emplace(std::move(part), std::move(rep));
    }
    return *best;
}

} // namespace rf
