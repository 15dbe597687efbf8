#include "instances.hpp"
#include "support.hpp"

#include <rf/bandwidth.hpp>
#include <rf/dense.hpp>
#include <rf/drc.hpp>
#include <rf/errors.hpp>
#include <rf/generators.hpp>
#include <rf/lovasz.hpp>
#include <rf/morphisms.hpp>
#include <rf/rga.hpp>
#include <rf/transfer.hpp>
#include <rf/wheel.hpp>

#include <doctest.h>

using namespace rf;

namespace {

bool split_ok(const Graph & g, const Split & s, const std::vector<int> & d)
{
    std::vector<int> seen(g.size(), 0);
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
        auto members = s.classes[i].members();
        for (int v : members)
            ++seen[v];
        if (rft::max_degree_inside(g, members) > d[i])
            return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

} // namespace

TEST_CASE("lovasz split examples")
{
    Graph c6 = make_named("cycle:6");
    auto s = lovasz_partition(c6, {1, 0});
    CHECK(split_ok(c6, s, {1, 0}));
    Graph p = make_named("petersen");
    auto single = lovasz_partition(p, {3});
    CHECK(single.classes[0] == VertexSet::full(10));
    CHECK(single.moves == 0);
    auto two = lovasz_partition(p, {1, 1});
    CHECK(split_ok(p, two, {1, 1}));
    CHECK(split_respects(p, two, {1, 1}));
    CHECK(Rational(two.moves) <= two.initial_potential * 4);
    CHECK_THROWS_AS(lovasz_partition(p, {0, 0}), InputError);
}

TEST_CASE("lovasz split on random graphs")
{
    rft::Gen gen(51);
    for (int t = 0; t < 150; ++t) {
        int cap = gen.range(1, 6);
        Graph g = gen.bounded_graph(gen.range(2, 30), cap, 200);
        int delta = g.max_degree();
        for (int s = 1; s <= 3; ++s) {
            int total = delta - s + 1;
            if (total < 0)
                continue;
            std::vector<int> d(s, 0);
            // a random composition of total into s parts
            for (int k = 0; k < total; ++k)
                ++d[gen.below(s)];
            auto split = lovasz_partition(g, d);
            CHECK(split_ok(g, split, d));
        }
    }
}

TEST_CASE("dense witness check conditions")
{
    Graph k12 = Graph::complete(12);
    DenseParams p;
    p.alpha = Rational(1, 3);
    p.beta = Rational(1, 2);
    p.rho = 1;
    p.delta = Rational(1, 2);
    p.max_degree = 3;
    DenseWitness w{{VertexSet::of(12, {0, 1, 2, 3, 4, 5}), VertexSet::of(12, {6, 7, 8, 9, 10, 11})}, {1, 1}};
    auto ok = dense_witness_check(k12, w, p, CheckMode::exhaustive());
    CHECK(ok.passed());
    CHECK(ok.certified);

    DenseWitness bad_sum{w.parts, {2, 1}};
    CHECK(dense_witness_check(k12, bad_sum, p, CheckMode::exhaustive()).failed == DenseCondition::Arithmetic);

    // sparse 4 x 4 block inside the first part of 8
    Graph g = Graph::complete(16);
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v)
            g.remove_edge(u, v);
    DenseWitness one{{VertexSet::of(16, {0, 1, 2, 3, 4, 5, 6, 7})}, {3}};
    DenseParams q = p;
    q.alpha = Rational(1, 2);
    q.beta = Rational(1, 2);
    q.delta = Rational(1, 2);
    q.rho = Rational(7, 8);
    auto v = dense_witness_check(g, one, q, CheckMode::exhaustive());
    REQUIRE(v.failed == DenseCondition::BiDensity);
    CHECK(pair_density(g, v.x_witness, v.y_witness) < q.delta);
    CHECK_FALSE(v.x_witness.intersects(v.y_witness));
}

TEST_CASE("dense greedy embedding examples")
{
    DenseParams p;
    p.alpha = 1;
    p.beta = 0;
    p.rho = 1;
    p.delta = 1;
    p.max_degree = 1;
    Graph k6 = Graph::complete(6);
    Graph p4 = make_named("path:4");
    p.max_degree = 2;
    auto r = dense_greedy_embed(k6, {{VertexSet::full(6)}, {2}}, p, WeightedGraph::uniform(p4));
    REQUIRE(r.found());
    CHECK(rft::edge_preserving(p4, k6, r.map->image));
    CHECK(rft::injective(r.map->image));
    CHECK(find_weighted_embedding(WeightedGraph::uniform(p4), k6).status == SearchStatus::Found);

    p.max_degree = 1;
    auto none = dense_greedy_embed(Graph(1), {{VertexSet::full(1)}, {1}}, p, WeightedGraph::uniform(Graph::complete(2)));
    CHECK_FALSE(none.found());
    CHECK_FALSE(none.stage.empty());
}

TEST_CASE("dense greedy embedding soundness")
{
    rft::Gen gen(52);
    for (int t = 0; t < 200; ++t) {
        int n = gen.range(4, 30);
        Graph host = gen.graph(n, gen.range(2, 4), 4);
        Graph g = gen.bounded_graph(gen.range(1, 8), 3, 20);
        std::vector<Rational> w;
        for (int v = 0; v < g.size(); ++v)
            w.push_back(Rational(gen.range(1, 4), 4));
        DenseParams p;
        p.alpha = Rational(1, 2);
        p.rho = 1;
        p.delta = Rational(gen.range(1, 4), 4);
        p.max_degree = g.max_degree();
        auto r = dense_greedy_embed(host, {{VertexSet::full(n)}, {p.max_degree}}, p, WeightedGraph(g, w));
        if (r.found()) {
            CHECK(rft::edge_preserving(g, host, r.map->image));
            CHECK(rft::weight_capped(r.map->image, w, n));
        }
        // unit weights stay injective
        auto u = dense_greedy_embed(host, {{VertexSet::full(n)}, {p.max_degree}}, p, WeightedGraph::uniform(g));
        if (u.found())
            CHECK(rft::injective(u.map->image));
    }
}

TEST_CASE("wheel embedding examples")
{
    Graph k6 = Graph::complete(6);
    std::vector<Rational> unit(4, Rational(1));
    auto red = wheel_mono_embed(EdgeColoring(k6, k6), 4, unit);
    REQUIRE(red.found());
    CHECK(*red.color == Color::Red);
    CHECK(rft::edge_preserving(Graph::complete(4), k6, red.map->image));
    CHECK(rft::injective(red.map->image));
    auto blue = wheel_mono_embed(EdgeColoring(k6, Graph(6)), 4, unit);
    REQUIRE(blue.found());
    CHECK(*blue.color == Color::Blue);
    CHECK_THROWS_AS(wheel_mono_embed(EdgeColoring(k6, k6), 3, {1, 1, 1}), InputError);
}

TEST_CASE("wheel embedding soundness on random colourings")
{
    int found = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        int n = 8 + static_cast<int>(s % 9);
        EdgeColoring c = random_coloring(Graph::complete(n), Rational(1, 2), s);
        std::vector<Rational> w(5, Rational(1, 2));
        auto r = wheel_mono_embed(c, 5, w);
        if (! r.found())
            continue;
        ++found;
        Graph host = color_subgraph(c, *r.color);
        CHECK(rft::edge_preserving(make_named("wheel:5"), host, r.map->image));
        CHECK(rft::weight_capped(r.map->image, w, n));
    }
    MESSAGE("wheel successes: " << found << "/100");
}

TEST_CASE("rga on complete pairs succeeds first time")
{
    rft::Gen gen(53);
    for (int t = 1; t <= 4; ++t) {
        auto in = rft::random_blowup(gen, Graph::complete(2), 3 * t, 1, 1);
        in.pattern = Graph(4 * t);
        std::vector<int> img(4 * t);
        for (int c = 0; c < t; ++c)
            for (int i = 0; i < 4; ++i) {
                int a = 4 * c + i, b = 4 * c + (i + 1) % 4;
                in.pattern.add_edge(a, b);
                img[a] = i % 2;
            }
        in.f = VertexMap(2, img);
        auto rep = rga_blowup_embed(in.gamma, in.part, in.base, in.pattern, in.f,
            RgaParams::with_defaults(1, Rational(1, 4)), 7, 1);
        REQUIRE(rep.result.found());
        CHECK(rep.attempts == 1);
        CHECK(rft::edge_preserving(in.pattern, in.gamma, rep.result.map->image));
        CHECK(rft::injective(rep.result.map->image));
    }
}

TEST_CASE("rga rejects maps that are not homomorphisms")
{
    rft::Gen gen(54);
    auto in = rft::random_blowup(gen, make_named("path:3"), 6, 1, 1);
    in.pattern = Graph::complete(2);
    in.f = VertexMap(3, {0, 2});
    CHECK_THROWS_AS(rga_blowup_embed(in.gamma, in.part, in.base, in.pattern, in.f,
                        RgaParams::with_defaults(1, Rational(1, 4)), 1, 1),
        InputError);
}

TEST_CASE("rga trace respects the queue bound and is deterministic")
{
    rft::Gen gen(55);
    for (int t = 0; t < 20; ++t) {
        auto in = rft::random_blowup(gen, Graph::complete(3), 30, 7, 8);
        rft::wind_path_power(in, 24, 2);
        auto params = RgaParams::with_defaults(Rational(3, 4), Rational(1, 4));
        auto a = rga_blowup_embed(in.gamma, in.part, in.base, in.pattern, in.f, params, t, 20, 1, true);
        auto b = rga_blowup_embed(in.gamma, in.part, in.base, in.pattern, in.f, params, t, 20, 4, true);
        CHECK(a.result.map == b.result.map);
        CHECK(a.winning_attempt == b.winning_attempt);
        CHECK(a.failures == b.failures);
        std::int64_t cap = floor_mul(params.eps1, 8);
        for (const auto & st : a.trace)
            CHECK(st.queue_size <= cap);
        if (a.result.found()) {
            CHECK(rft::edge_preserving(in.pattern, in.gamma, a.result.map->image));
            CHECK(rft::injective(a.result.map->image));
            CHECK(rft::lands_in_parts(in, a.result.map->image));
            CHECK(static_cast<int>(a.trace.size()) == in.pattern.size());
        }
    }
}

TEST_CASE("drc select on complete and empty hosts")
{
    int n = 20;
    Graph k = Graph::complete(n);
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto sel = drc_select(k, VertexSet::full(n), 2, Rational(1, 8), s);
        CHECK(sel.x == common_neighbourhood(k, sel.tuple, VertexSet::full(n)));
        std::set<int> distinct(sel.tuple.begin(), sel.tuple.end());
        CHECK(sel.size == n - static_cast<int>(distinct.size()));
        CHECK(sel.bad_tuples == 0);
    }
    auto empty = drc_select(Graph(n), VertexSet::full(n), 2, Rational(1, 8), 3);
    CHECK(empty.size == 0);
    CHECK(empty.x.empty());
}

TEST_CASE("drc bad tuple count matches direct enumeration")
{
    rft::Gen gen(56);
    for (int t = 0; t < 30; ++t) {
        int n = gen.range(5, 16);
        Graph g = gen.graph(n, 2, 3);
        VertexSet x(n);
        for (int v = 0; v < n; ++v)
            if (gen.chance(1, 2))
                x.set(v);
        int threshold = gen.range(0, 5);
        auto members = x.members();
        std::uint64_t bad = 0;
        for (int a : members)
            for (int b : members) {
                int common = 0;
                for (int v = 0; v < n; ++v)
                    common += g.adjacent(a, v) && g.adjacent(b, v);
                bad += common < threshold;
            }
        CHECK(count_bad_tuples(g, x, 2, threshold, VertexSet::full(n)) == bad);
    }
}

TEST_CASE("bandwidth beta arithmetic")
{
    CHECK(bandwidth_beta(Rational(1, 2), 3) == Rational(1, 402653184));
    CHECK(bandwidth_beta(1, 1) == Rational(1, 256));
    Rational power = 1;
    for (int i = 0; i < 13; ++i)
        power *= Rational(3, 4);
    CHECK(bandwidth_beta(Rational(3, 4), 2) == power / 512);
}

TEST_CASE("drc bandwidth embedding")
{
    Graph matching(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    auto rep = drc_bandwidth_embed(Graph::complete(64), matching, Labeling::identity(8), Rational(1, 2), 1,
        {Rational(1, 16), std::nullopt, {}});
    REQUIRE(rep.status == DrcStatus::Embedded);
    CHECK(rft::edge_preserving(matching, Graph::complete(64), rep.result.map->image));
    CHECK(rft::injective(rep.result.map->image));

    CHECK_THROWS_AS(drc_bandwidth_embed(Graph::complete(64), make_named("cycle:5"), Labeling::identity(5),
                        Rational(1, 2), 1, {Rational(1, 16), std::nullopt, {}}),
        InputError);

    auto degenerate = drc_bandwidth_embed(Graph::complete(64), matching, Labeling::identity(8), Rational(1, 2), 1);
    CHECK(degenerate.status == DrcStatus::DegenerateBudget);
    CHECK(degenerate.width_budget == 0);
    CHECK_FALSE(degenerate.result.found());

    int ok = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        Graph host = random_min_degree_host(96, Rational(3, 8), s);
        Graph ladder = make_named("ladder:6");
        auto r = drc_bandwidth_embed(host, ladder, heuristic_labeling(ladder), Rational(5, 8), s,
            {Rational(1, 24), std::nullopt, {}});
        if (r.result.found()) {
            ++ok;
            CHECK(rft::edge_preserving(ladder, host, r.result.map->image));
            CHECK(rft::injective(r.result.map->image));
        }
        else
            CHECK_FALSE(r.result.stage.empty());
    }
    MESSAGE("drc on min-degree hosts: " << ok << "/20");
}

TEST_CASE("transference pipeline")
{
    Graph kn = Graph::complete(40);
    Graph c4 = make_named("cycle:4");
    VertexMap f(2, {0, 1, 0, 1});
    TransferParams p;
    p.k = 4;
    auto rep = transference_pipeline(c4, Graph::complete(2), f, EdgeColoring(kn, kn), p, 3);
    REQUIRE(rep.result.found());
    CHECK(*rep.result.color == Color::Red);
    CHECK(rft::edge_preserving(c4, kn, rep.result.map->image));
    CHECK(rft::injective(rep.result.map->image));

    CHECK_THROWS_AS(transference_pipeline(c4, Graph::complete(2), VertexMap(2, {0, 0, 1, 1}), EdgeColoring(kn, kn), p, 3),
        InputError);

    // union of 4-cycles into random colourings of K_60
    Graph cycles(12);
    std::vector<int> img(12);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 4; ++i) {
            cycles.add_edge(4 * c + i, 4 * c + (i + 1) % 4);
            img[4 * c + i] = i % 2;
        }
    TransferParams q;
    q.k = 6;
    q.eps = Rational(1, 2);
    std::map<std::string, int> stages;
    int ok = 0;
    for (std::uint64_t s = 0; s < 30; ++s) {
        EdgeColoring c = random_coloring(Graph::complete(60), Rational(1, 2), s);
        auto r = transference_pipeline(cycles, Graph::complete(2), VertexMap(2, img), c, q, s);
        if (r.result.found()) {
            ++ok;
            CHECK(rft::edge_preserving(cycles, color_subgraph(c, *r.result.color), r.result.map->image));
            CHECK(rft::injective(r.result.map->image));
        }
        else
            ++stages[r.result.stage.substr(0, r.result.stage.find(':'))];
    }
    MESSAGE("transfer successes: " << ok << "/30");
    for (auto & [stage, count] : stages)
        MESSAGE(stage << ": " << count);
}
