#include <rf/bandwidth.hpp>
#include <rf/errors.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace rf {

Labeling Labeling::identity(int n)
{
    Labeling l;
    l.label.resize(n);
    std::iota(l.label.begin(), l.label.end(), 0);
    return l;
}

Labeling Labeling::from_order(const std::vector<int> & order)
{
    Labeling l;
    l.label.assign(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        l.label.at(order[i]) = static_cast<int>(i);
    return l;
}

std::vector<int> Labeling::order() const
{
    std::vector<int> out(label.size());
    for (std::size_t v = 0; v < label.size(); ++v)
        out[label[v]] = static_cast<int>(v);
    return out;
}

bool is_bijection(const Labeling & l, int n)
{
    if (static_cast<int>(l.label.size()) != n)
        return false;
    std::vector<char> seen(n, 0);
    for (int x : l.label) {
        if (x < 0 || x >= n || seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

int labeling_width(const Graph & g, const Labeling & l)
{
    if (! is_bijection(l, g.size()))
        throw InputError("labeling is not a bijection onto [n]");
    int width = 0;
    for (auto [u, v] : g.edges())
        width = std::max(width, std::abs(l.label[u] - l.label[v]));
    return width;
}

Labeling heuristic_labeling(const Graph & g)
{
    int n = g.size();
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    order.reserve(n);
    while (static_cast<int>(order.size()) < n) {
        int start = -1;
        for (int v = 0; v < n; ++v)
            if (! seen[v] && (start == -1 || g.degree(v) < g.degree(start)))
                start = v;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (! q.empty()) {
            int u = q.front();
            q.pop();
            order.push_back(u);
            std::vector<int> next;
            g.neighbours(u).for_each([&](int w) {
                if (! seen[w])
                    next.push_back(w);
            });
            std::stable_sort(next.begin(), next.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
            for (int w : next) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    return Labeling::from_order(order);
}

namespace {

class BandwidthSearch {
public:
    BandwidthSearch(const Graph & g, std::uint64_t budget) :
        g_(g),
        budget_(budget),
        position_(g.size(), -1),
        order_(g.size(), -1),
        unplaced_nbrs_(g.size())
    {
        for (int v = 0; v < g.size(); ++v)
            unplaced_nbrs_[v] = g.degree(v);
    }

    // Looks for a labeling of width <= limit.
    bool feasible(int limit, std::vector<int> & out)
    {
        limit_ = limit;
        if (! place(0))
            return false;
        out = order_;
        return true;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool place(int pos)
    {
        int n = g_.size();
        if (pos == n)
            return true;
        // A placed vertex at p still needs its unplaced neighbours within [pos, p + limit].
        for (int p = std::max(0, pos - limit_ - 1); p < pos; ++p)
            if (int k = unplaced_nbrs_[order_[p]]; k > 0 && k > p + limit_ - pos + 1)
                return false;

        for (int v = 0; v < n; ++v) {
            if (position_[v] != -1)
                continue;
            bool ok = true;
            g_.neighbours(v).for_each([&](int w) {
                if (position_[w] != -1 && pos - position_[w] > limit_)
                    ok = false;
            });
            if (! ok)
                continue;
            if (nodes_ >= budget_) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            position_[v] = pos;
            order_[pos] = v;
            g_.neighbours(v).for_each([&](int w) { --unplaced_nbrs_[w]; });
            bool done = place(pos + 1);
            g_.neighbours(v).for_each([&](int w) { ++unplaced_nbrs_[w]; });
            if (done)
                return true;
            position_[v] = -1;
            order_[pos] = -1;
            if (exhausted_)
                return false;
        }
        return false;
    }

    const Graph & g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    int limit_ = 0;
    std::vector<int> position_;
    std::vector<int> order_;
    std::vector<int> unplaced_nbrs_;
};

} // namespace

BandwidthResult exact_bandwidth(const Graph & g, std::uint64_t budget)
{
    BandwidthResult result;
    Labeling best = heuristic_labeling(g);
    int incumbent = labeling_width(g, best);

    // Tighten the incumbent until width - 1 is infeasible.
    while (incumbent > 0) {
        BandwidthSearch search(g, budget - std::min(budget, result.nodes));
        std::vector<int> order;
        bool ok = search.feasible(incumbent - 1, order);
        result.nodes += search.nodes();
        if (search.exhausted())
            return result;
        if (! ok)
            break;
        best = Labeling::from_order(order);
        incumbent = labeling_width(g, best);
    }
    result.width = incumbent;
    result.labeling = best;
    return result;
}

} // namespace rf
