#include <rf/errors.hpp>
#include <rf/lovasz.hpp>

#include <numeric>
#include <set>
#include <stdexcept>

namespace rf {

Split lovasz_partition(const Graph & g, const std::vector<int> & degrees)
{
    int s = static_cast<int>(degrees.size());
    if (s < 1)
        throw InputError("lovasz_partition needs at least one class");
    long long budget = 0;
    for (int d : degrees) {
        if (d < 0)
            throw InputError("class degree bounds must be nonnegative");
        budget += d;
    }
    if (budget < static_cast<long long>(g.max_degree()) - s + 1)
        throw InputError("class degree bounds sum to less than maxdeg - s + 1");

    int n = g.size();
    // ratios deg/(d+1) compared as deg * (L / (d+1)) with L = lcm of all d+1
    long long lcm = 1;
    for (int d : degrees)
        lcm = std::lcm(lcm, static_cast<long long>(d) + 1);
    std::vector<long long> scale(s);
    for (int j = 0; j < s; ++j)
        scale[j] = lcm / (degrees[j] + 1);

    std::vector<int> class_of(n, -1);
    std::vector<std::vector<int>> deg_in(n, std::vector<int>(s, 0));
    auto best_class = [&](int v) {
        int best = 0;
        for (int j = 1; j < s; ++j)
            if (deg_in[v][j] * scale[j] < deg_in[v][best] * scale[best])
                best = j;
        return best;
    };
    auto place = [&](int v, int j) {
        class_of[v] = j;
        g.neighbours(v).for_each([&](int u) { ++deg_in[u][j]; });
    };
    auto unplace = [&](int v) {
        int j = class_of[v];
        g.neighbours(v).for_each([&](int u) { --deg_in[u][j]; });
        class_of[v] = -1;
    };

    for (int v = 0; v < n; ++v)
        place(v, best_class(v));

    Split out;
    out.initial_potential = 0;
    for (int v = 0; v < n; ++v)
        out.initial_potential += Rational(deg_in[v][class_of[v]], 2 * (degrees[class_of[v]] + 1));

    auto violating = [&](int v) { return deg_in[v][class_of[v]] > degrees[class_of[v]]; };
    std::set<int> pending;
    for (int v = 0; v < n; ++v)
        if (violating(v))
            pending.insert(v);
    while (! pending.empty()) {
        int v = *pending.begin();
        pending.erase(pending.begin());
        if (! violating(v))
            continue;
        int from = class_of[v];
        unplace(v);
        int to = best_class(v);
        if (to == from)
            throw std::logic_error("lovasz_partition: no improving class");
        place(v, to);
        ++out.moves;
        g.neighbours(v).for_each([&](int u) {
            if (class_of[u] == to && violating(u))
                pending.insert(u);
        });
    }

    out.class_of = class_of;
    out.classes.assign(s, VertexSet(n));
    for (int v = 0; v < n; ++v)
        out.classes[class_of[v]].set(v);
    if (! split_respects(g, out, degrees))
        throw std::logic_error("lovasz_partition produced an invalid split");
    return out;
}

bool split_respects(const Graph & g, const Split & split, const std::vector<int> & degrees)
{
    if (split.classes.size() != degrees.size())
        return false;
    VertexSet seen(g.size());
    for (std::size_t i = 0; i < split.classes.size(); ++i) {
        const auto & c = split.classes[i];
        if (c.universe() != g.size() || c.intersects(seen))
            return false;
        seen |= c;
        bool ok = true;
        c.for_each([&](int v) {
            if (g.neighbours(v).count_and(c) > degrees[i])
                ok = false;
        });
        if (! ok)
            return false;
    }
    return seen.count() == g.size();
}

} // namespace rf
