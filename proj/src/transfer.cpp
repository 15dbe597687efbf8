#include <rf/errors.hpp>
#include <rf/morphisms.hpp>
#include <rf/rng.hpp>
#include <rf/transfer.hpp>

#include <algorithm>
#include <stdexcept>

namespace rf {

TransferReport transference_pipeline(const Graph & g, const Graph & h, const VertexMap & f, const EdgeColoring & c,
    const TransferParams & params, std::uint64_t seed, int workers)
{
    if (f.source_n != g.size() || f.target_n != h.size() || ! verify_homomorphism(g, h, f).valid)
        throw InputError("G -> H map is not a homomorphism");
    int n = c.size();
    if (static_cast<long long>(c.host().edge_count()) * 2 != static_cast<long long>(n) * (n - 1))
        throw InputError("transference needs a colouring of a complete graph");
    if (params.k < 1 || params.k > n)
        throw InputError("transference needs 1 <= k <= N");

    TransferReport rep;
    RegularityParams rp{params.eps, 0};
    CheckMode mode = params.mode;
    mode.seed = derive_seed(seed, 1);
    auto [part, report] = fixed_k_partition(c.red(), params.k, rp, derive_seed(seed, 0), params.partition_retries,
        mode, workers);
    rep.partition = part;
    rep.partition_report = report;
    rep.reduced = reduced_graph(c.red(), part, rp, false, mode, workers);

    rep.reduced_red = Graph(params.k);
    rep.reduced_blue = Graph(params.k);
    for (auto [i, j] : rep.reduced.edges()) {
        if (pair_density(c.red(), part.classes[i + 1], part.classes[j + 1]) >= Rational(1, 2))
            rep.reduced_red.add_edge(i, j);
        else
            rep.reduced_blue.add_edge(i, j);
    }

    std::optional<Color> colour;
    for (Color col : {Color::Red, Color::Blue}) {
        const Graph & r = col == Color::Red ? rep.reduced_red : rep.reduced_blue;
        auto found = find_capacity_homomorphism(h, r, CapacityProfile::uniform_count(params.k, 1));
        if (found.status == SearchStatus::Found) {
            colour = col;
            rep.h_to_reduced = *found.map;
            break;
        }
    }
    if (! colour) {
        rep.result.stage = "reduced homomorphism";
        return rep;
    }

    std::vector<int> composed(g.size());
    for (int v = 0; v < g.size(); ++v)
        composed[v] = rep.h_to_reduced->image[f.image[v]];
    rep.g_to_reduced = VertexMap(params.k, composed);
    int f_cap = 0, h_cap = 0;
    for (int t = 0; t < h.size(); ++t)
        f_cap = std::max(f_cap, static_cast<int>(f.preimage(t).size()));
    for (int t = 0; t < params.k; ++t)
        h_cap = std::max(h_cap, static_cast<int>(rep.g_to_reduced->preimage(t).size()));
    if (h_cap > f_cap)
        throw std::logic_error("composed map exceeds the preimage bound of G -> H");

    const Graph & reduced_c = *colour == Color::Red ? rep.reduced_red : rep.reduced_blue;
    const Graph & host_c = *colour == Color::Red ? c.red() : c.blue();
    RgaParams rga = params.rga.value_or(RgaParams::with_defaults(Rational(1, 2), params.xi));
    int part_size = part.classes[1].count();
    if (Rational(part_size) < (1 + rga.xi) * h_cap) {
        rep.result.stage = "part slack";
        return rep;
    }
    rep.rga = rga_blowup_embed(host_c, part, reduced_c, g, *rep.g_to_reduced, rga, derive_seed(seed, 2),
        params.rga_retries, workers);
    if (! rep.rga.result.found()) {
        rep.result.stage = "blow-up embedding: " + rep.rga.result.stage;
        return rep;
    }
    if (! is_embedding(g, host_c, *rep.rga.result.map))
        throw std::logic_error("transference produced an invalid embedding");
    rep.result.map = rep.rga.result.map;
    rep.result.color = colour;
    return rep;
}

} // namespace rf
