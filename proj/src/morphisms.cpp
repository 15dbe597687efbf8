#include <rf/errors.hpp>
#include <rf/morphisms.hpp>

#include <algorithm>
#include <numeric>

namespace rf {

HomVerdict verify_homomorphism(const Graph & g, const Graph & h, const VertexMap & f)
{
    if (f.source_n != g.size() || f.target_n != h.size() || static_cast<int>(f.image.size()) != g.size())
        throw InputError("vertex map dimensions do not match the graphs");
    HomVerdict verdict;
    for (auto [u, v] : g.edges()) {
        int a = f.image[u], b = f.image[v];
        if (a < 0 || b < 0 || a >= h.size() || b >= h.size() || a == b || ! h.adjacent(a, b))
            verdict.violations.emplace_back(u, v);
    }
    verdict.valid = verdict.violations.empty();
    return verdict;
}

CapacityProfile CapacityProfile::count(std::vector<int> caps)
{
    for (int c : caps)
        if (c < 0)
            throw InputError("negative capacity");
    CapacityProfile p;
    p.mode = Mode::CountCap;
    p.caps = std::move(caps);
    return p;
}

CapacityProfile CapacityProfile::uniform_count(int target_n, int cap)
{
    return count(std::vector<int>(target_n, cap));
}

CapacityProfile CapacityProfile::unbounded(int target_n)
{
    return uniform_count(target_n, std::numeric_limits<int>::max());
}

CapacityProfile CapacityProfile::weight(std::vector<Rational> weights)
{
    for (const auto & w : weights)
        if (w < 0 || w > 1)
            throw InputError("weight outside [0,1]");
    CapacityProfile p;
    p.mode = Mode::WeightCap;
    p.weights = std::move(weights);
    return p;
}

CapacityVerdict verify_capacity(const VertexMap & f, const CapacityProfile & profile)
{
    CapacityVerdict verdict;
    if (profile.mode == CapacityProfile::Mode::CountCap) {
        if (static_cast<int>(profile.caps.size()) != f.target_n)
            throw InputError("capacity profile does not match the map's target");
        std::vector<std::int64_t> load(f.target_n, 0);
        for (int t : f.image)
            ++load[t];
        for (int t = 0; t < f.target_n; ++t)
            if (load[t] > profile.caps[t])
                verdict.overloaded.push_back(t);
    }
    else {
        if (static_cast<int>(profile.weights.size()) != f.source_n)
            throw InputError("weight profile does not match the map's source");
        std::vector<Rational> load(f.target_n, 0);
        for (int v = 0; v < f.source_n; ++v)
            load[f.image[v]] += profile.weights[v];
        for (int t = 0; t < f.target_n; ++t)
            if (load[t] > 1)
                verdict.overloaded.push_back(t);
    }
    verdict.valid = verdict.overloaded.empty();
    return verdict;
}

const char * to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
    }
    return "?";
}

namespace {

// Capacities scaled to integers: CountCap gives demand 1 per source, WeightCap
// multiplies every weight by the lcm of the denominators.
struct ScaledCapacity {
    std::vector<std::int64_t> demand;
    std::vector<std::int64_t> cap;
};

ScaledCapacity scale(const Graph & g, const Graph & h, const CapacityProfile & profile)
{
    ScaledCapacity s;
    if (profile.mode == CapacityProfile::Mode::CountCap) {
        if (static_cast<int>(profile.caps.size()) != h.size())
            throw InputError("capacity profile does not match the target graph");
        s.demand.assign(g.size(), 1);
        s.cap.assign(profile.caps.begin(), profile.caps.end());
        return s;
    }
    if (static_cast<int>(profile.weights.size()) != g.size())
        throw InputError("weight profile does not match the source graph");
    BigInt lcm = 1;
    for (const auto & w : profile.weights) {
        BigInt d = denominator_of(w);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::int64_t scale_factor = to_int64(lcm, "weight denominator lcm");
    for (const auto & w : profile.weights)
        s.demand.push_back(to_int64(numerator_of(w) * (lcm / denominator_of(w)), "scaled weight"));
    s.cap.assign(h.size(), scale_factor);
    return s;
}

class Backtracker {
public:
    Backtracker(const Graph & g, const Graph & h, ScaledCapacity cap, std::vector<int> order) :
        g_(g),
        h_(h),
        cap_(std::move(cap)),
        order_(std::move(order)),
        image_(g.size(), -1),
        load_(h.size(), 0),
        earlier_(g.size())
    {
        std::vector<int> position(g.size());
        for (int i = 0; i < g.size(); ++i)
            position[order_[i]] = i;
        for (int i = 0; i < g.size(); ++i)
            g.neighbours(order_[i]).for_each([&](int u) {
                if (position[u] < i)
                    earlier_[i].push_back(u);
            });
    }

    // visit returns false to stop the enumeration.
    SearchStatus run(std::uint64_t budget, const std::function<bool(const std::vector<int> &)> & visit)
    {
        budget_ = budget;
        nodes_ = 0;
        auto r = descend(0, visit);
        return r;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // Found = stopped by visitor, None = subtree exhausted.
    SearchStatus descend(int depth, const std::function<bool(const std::vector<int> &)> & visit)
    {
        if (depth == g_.size())
            return visit(image_) ? SearchStatus::None : SearchStatus::Found;

        int v = order_[depth];
        VertexSet candidates = VertexSet::full(h_.size());
        for (int u : earlier_[depth])
            candidates &= h_.neighbours(image_[u]);

        for (int t = candidates.first(); t != -1; t = candidates.next(t + 1)) {
            if (load_[t] + cap_.demand[v] > cap_.cap[t])
                continue;
            if (nodes_ >= budget_)
                return SearchStatus::BudgetExhausted;
            ++nodes_;
            image_[v] = t;
            load_[t] += cap_.demand[v];
            auto r = descend(depth + 1, visit);
            load_[t] -= cap_.demand[v];
            image_[v] = -1;
            if (r != SearchStatus::None)
                return r;
        }
        return SearchStatus::None;
    }

    const Graph & g_;
    const Graph & h_;
    ScaledCapacity cap_;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<std::int64_t> load_;
    std::vector<std::vector<int>> earlier_;
    std::uint64_t budget_ = 0;
    std::uint64_t nodes_ = 0;
};

std::vector<int> degree_order(const Graph & g)
{
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

SearchResult search(const Graph & g, const Graph & h, ScaledCapacity cap, std::vector<int> order, std::uint64_t budget)
{
    Backtracker bt(g, h, std::move(cap), std::move(order));
    SearchResult result;
    std::vector<int> found;
    auto status = bt.run(budget, [&](const std::vector<int> & img) {
        found = img;
        return false;
    });
    result.nodes = bt.nodes();
    if (status == SearchStatus::Found) {
        result.status = SearchStatus::Found;
        result.map = VertexMap(h.size(), std::move(found));
    }
    else
        result.status = status;
    return result;
}

} // namespace

SearchResult find_capacity_homomorphism(const Graph & g, const Graph & h, const CapacityProfile & profile,
    std::uint64_t budget)
{
    return search(g, h, scale(g, h, profile), degree_order(g), budget);
}

SearchResult find_weighted_embedding(const WeightedGraph & gw, const Graph & host, std::uint64_t budget)
{
    const Graph & g = gw.graph();
    auto profile = CapacityProfile::weight(gw.weights());
    std::vector<int> order = degree_order(g);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return gw.weight(a) > gw.weight(b); });
    return search(g, host, scale(g, host, profile), std::move(order), budget);
}

std::uint64_t for_each_capacity_homomorphism(const Graph & g, const Graph & h, const CapacityProfile & profile,
    const std::function<bool(const std::vector<int> &)> & visit)
{
    Backtracker bt(g, h, scale(g, h, profile), degree_order(g));
    std::uint64_t visited = 0;
    bt.run(kUnlimited, [&](const std::vector<int> & img) {
        ++visited;
        return visit(img);
    });
    return visited;
}

} // namespace rf
