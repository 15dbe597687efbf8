#include <rf/errors.hpp>
#include <rf/generators.hpp>
#include <rf/wheel.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rf {

namespace {

// Rim vertices by decreasing weight (ties: lower id); each goes to the lowest-id vertex of
// allowed adjacent (in colour) to the images of its placed rim neighbours and with spare capacity.
std::optional<std::vector<int>> greedy_rim(const Graph & colour, const VertexSet & allowed, int rim,
    const std::vector<Rational> & w)
{
    std::vector<int> order(rim);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
    std::vector<int> image(rim, -1);
    std::vector<Rational> load(colour.size(), 0);
    for (int x : order) {
        VertexSet cand = allowed;
        for (int y : {(x + 1) % rim, (x + rim - 1) % rim})
            if (image[y] >= 0)
                cand &= colour.neighbours(image[y]);
        int chosen = -1;
        cand.for_each([&](int u) {
            if (chosen < 0 && load[u] + w[x] <= 1)
                chosen = u;
        });
        if (chosen < 0)
            return std::nullopt;
        image[x] = chosen;
        load[chosen] += w[x];
    }
    return image;
}

int max_degree_vertex(const Graph & g, const VertexSet & within)
{
    int best = -1, best_deg = -1;
    within.for_each([&](int v) {
        int d = g.neighbours(v).count_and(within);
        if (d > best_deg) {
            best = v;
            best_deg = d;
        }
    });
    return best;
}

} // namespace

EmbedResult wheel_mono_embed(const EdgeColoring & c, int k, const std::vector<Rational> & weights)
{
    if (k < 4)
        throw InputError("wheel needs k >= 4");
    if (static_cast<int>(weights.size()) != k)
        throw InputError("wheel weights must have k entries");
    WeightedGraph wheel(make_named(NamedKind::Wheel, {k}), weights);
    int n = c.size();
    int rim = k - 1;

    EmbedResult res;
    if (n == 0) {
        res.stage = "empty host";
        return res;
    }
    // primary colour: the one with the larger maximum degree (red on ties)
    int red_hub = 0, blue_hub = 0;
    for (int v = 1; v < n; ++v) {
        if (c.red().degree(v) > c.red().degree(red_hub))
            red_hub = v;
        if (c.blue().degree(v) > c.blue().degree(blue_hub))
            blue_hub = v;
    }
    Color primary = c.blue().degree(blue_hub) > c.red().degree(red_hub) ? Color::Blue : Color::Red;
    const Graph & pg = primary == Color::Red ? c.red() : c.blue();
    const Graph & qg = primary == Color::Red ? c.blue() : c.red();
    int v1 = primary == Color::Red ? red_hub : blue_hub;
    VertexSet x = pg.neighbours(v1);

    auto attempt = [&](const Graph & colour, Color col, int centre, const VertexSet & allowed) -> bool {
        auto img = greedy_rim(colour, allowed, rim, weights);
        if (! img)
            return false;
        std::vector<int> image = *img;
        image.push_back(centre);
        VertexMap f(n, image);
        if (! is_weighted_embedding(wheel, colour, f))
            throw std::logic_error("wheel_mono_embed produced an invalid map");
        res.map = std::move(f);
        res.color = col;
        return true;
    };

    int v2 = max_degree_vertex(qg, x);
    bool blue_branch = false;
    VertexSet y(n);
    if (v2 >= 0) {
        y = qg.neighbours(v2) & x;
        blue_branch = 4 * y.count() >= x.count() && ! y.empty();
    }
    if (blue_branch) {
        if (attempt(pg, primary, v1, y) || attempt(qg, other(primary), v2, y))
            return res;
        if (attempt(pg, primary, v1, x))
            return res;
    }
    else {
        if (attempt(pg, primary, v1, x))
            return res;
        if (v2 >= 0 && ! y.empty() && attempt(qg, other(primary), v2, y))
            return res;
    }
    res.stage = blue_branch ? "rim greedy failed in the other-colour neighbourhood" : "rim greedy failed in the hub neighbourhood";
    return res;
}

} // namespace rf
