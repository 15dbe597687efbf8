#include <rf/errors.hpp>
#include <rf/morphisms.hpp>
#include <rf/rga.hpp>
#include <rf/rng.hpp>

#include "parallel.hpp"

#include <deque>
#include <stdexcept>

namespace rf {

RgaParams RgaParams::with_defaults(const Rational & delta, const Rational & xi)
{
    RgaParams p;
    p.eps1 = Rational(1, 8);
    p.eps2 = rpow(p.eps1, 3);
    p.eps = rpow(p.eps2, 3);
    p.delta = delta;
    p.xi = xi;
    return p;
}

void RgaParams::validate() const
{
    if (eps <= 0 || eps2 <= 0 || eps1 <= 0 || eps1 >= 1)
        throw InputError("rga tolerances must be positive and eps1 < 1");
    if (! (eps < eps2 && eps2 < eps1))
        throw InputError("rga tolerances must satisfy eps < eps2 < eps1");
    if (delta < 0 || delta > 1)
        throw InputError("rga delta must lie in [0,1]");
    if (xi < 0)
        throw InputError("rga slack must be nonnegative");
}

namespace {

using Wide = __int128;

struct Setup {
    const Graph & gamma;
    const Partition & part;
    const Graph & g;
    const VertexMap & f;
    const RgaParams & p;
    std::vector<std::vector<int>> preimage; // by 0-based reduced vertex
    int m = 0;
    int part_size = 0;
    std::vector<std::int64_t> floor_need; // ceil((delta - eps)^d |V_i|) for d = 0..maxdeg
    Wide filter_num = 0, filter_den = 1;  // delta - eps as a fraction (0 if negative)
    std::int64_t queue_trigger = 0;       // floor(eps2 |V_i|)
    std::int64_t queue_cap = 0;           // floor(eps1 m)
};

struct Attempt {
    bool ok = false;
    std::string stage;
    std::vector<int> image;
    std::vector<RgaStep> trace;
    std::uint64_t checks = 0;
};

VertexSet candidates(const Setup & s, int y, const std::vector<int> & phi)
{
    VertexSet u = s.part.classes[s.f.image[y] + 1];
    s.g.neighbours(y).for_each([&](int z) {
        if (phi[z] >= 0)
            u &= s.gamma.neighbours(phi[z]);
    });
    return u;
}

int embedded_degree(const Setup & s, int y, const std::vector<int> & phi)
{
    int d = 0;
    s.g.neighbours(y).for_each([&](int z) { d += phi[z] >= 0; });
    return d;
}

Attempt run_attempt(const Setup & s, std::uint64_t seed, bool trace)
{
    Attempt a;
    Rng rng(seed);
    int n = s.g.size();
    std::vector<int> phi(n, -1);
    VertexSet used(s.gamma.size());
    int k = static_cast<int>(s.preimage.size());

    for (int r = 0; r < k; ++r) {
        const auto & verts = s.preimage[r];
        int cls = r + 1;
        // U_s(y) is fixed while part r is embedded (the preimage is independent)
        std::vector<VertexSet> u0(verts.size());
        std::vector<int> free_count(verts.size());
        std::vector<char> in_queue(verts.size(), 0);
        std::vector<int> slot(n, -1);
        for (std::size_t j = 0; j < verts.size(); ++j) {
            slot[verts[j]] = static_cast<int>(j);
            u0[j] = candidates(s, verts[j], phi);
            free_count[j] = (u0[j] - used).count();
        }
        std::deque<int> queue;
        std::size_t cursor = 0;
        for (std::size_t done = 0; done < verts.size(); ++done) {
            int x;
            bool from_queue = ! queue.empty();
            if (from_queue) {
                x = queue.front();
                queue.pop_front();
            }
            else {
                while (phi[verts[cursor]] >= 0)
                    ++cursor;
                x = verts[cursor];
            }
            VertexSet free = u0[slot[x]] - used;
            VertexSet admissible = free;
            s.g.neighbours(x).for_each([&](int y) {
                if (phi[y] >= 0)
                    return;
                VertexSet uy = candidates(s, y, phi);
                Wide size = uy.count();
                free.for_each([&](int u) {
                    if (Wide(s.gamma.neighbours(u).count_and(uy)) * s.filter_den < s.filter_num * size)
                        admissible.reset(u);
                });
            });
            int choices = admissible.count();
            if (choices == 0) {
                a.stage = "empty candidate set in part " + std::to_string(cls);
                return a;
            }
            auto members = admissible.members();
            int u = members[rng.below(static_cast<std::uint64_t>(choices))];
            phi[x] = u;
            used.set(u);

            // invariant (i) for the neighbours whose candidate sets just shrank
            bool held = true;
            s.g.neighbours(x).for_each([&](int y) {
                if (phi[y] >= 0 || ! held)
                    return;
                ++a.checks;
                if (candidates(s, y, phi).count() < s.floor_need[embedded_degree(s, y, phi)])
                    held = false;
            });
            if (! held) {
                a.stage = "invariant (i) failed in part " + std::to_string(cls);
                return a;
            }
            // queue admission, lowest id first
            for (std::size_t j = 0; j < verts.size(); ++j) {
                if (! u0[j].test(u))
                    continue;
                --free_count[j];
                if (phi[verts[j]] < 0 && ! in_queue[j] && free_count[j] < s.queue_trigger) {
                    in_queue[j] = 1;
                    queue.push_back(verts[j]);
                }
            }
            ++a.checks;
            if (static_cast<std::int64_t>(queue.size()) > s.queue_cap) {
                a.stage = "invariant (iii) failed in part " + std::to_string(cls);
                return a;
            }
            if (trace)
                a.trace.push_back({cls, x, u, from_queue, free.count(), choices, static_cast<int>(queue.size())});
        }
    }
    a.ok = true;
    a.image = std::move(phi);
    return a;
}

} // namespace

RgaReport rga_blowup_embed(const Graph & gamma, const Partition & part, const Graph & reduced, const Graph & g,
    const VertexMap & f, const RgaParams & params, std::uint64_t seed, int retries, int workers, bool trace)
{
    params.validate();
    if (part.n != gamma.size())
        throw InputError("partition does not match the host");
    part.validate();
    if (reduced.size() != part.k())
        throw InputError("reduced graph must have one vertex per class");
    if (f.source_n != g.size() || f.target_n != reduced.size() || static_cast<int>(f.image.size()) != g.size())
        throw InputError("pattern map does not match the pattern and reduced graph");
    if (! verify_homomorphism(g, reduced, f).valid)
        throw InputError("pattern map is not a homomorphism into the reduced graph");

    Setup s{gamma, part, g, f, params, {}, 0, 0, {}, 0, 1, 0, 0};
    s.preimage.assign(reduced.size(), {});
    for (int v = 0; v < g.size(); ++v)
        s.preimage[f.image[v]].push_back(v);
    for (const auto & pre : s.preimage)
        s.m = std::max(s.m, static_cast<int>(pre.size()));
    s.part_size = part.classes[1].count();
    if (Rational(s.part_size) < (1 + params.xi) * s.m)
        throw InputError("parts are smaller than (1 + xi) m");

    Rational base = params.delta - params.eps;
    if (base < 0)
        base = 0;
    for (int d = 0; d <= g.max_degree(); ++d)
        s.floor_need.push_back(ceil_mul(rpow(base, d), s.part_size));
    s.filter_num = to_int64(numerator_of(base), "delta - eps");
    s.filter_den = to_int64(denominator_of(base), "delta - eps");
    s.queue_trigger = floor_mul(params.eps2, s.part_size);
    s.queue_cap = floor_mul(params.eps1, s.m);

    int n_attempts = std::max(retries, 1);
    std::vector<Attempt> attempts(n_attempts);
    auto first = detail::parallel_first(n_attempts, workers, [&](std::int64_t r, auto) {
        attempts[r] = run_attempt(s, derive_seed(seed, static_cast<std::uint64_t>(r)), trace);
        return attempts[r].ok;
    });

    RgaReport rep;
    int last = first < 0 ? n_attempts - 1 : static_cast<int>(first);
    rep.attempts = last + 1;
    for (int r = 0; r <= last; ++r) {
        rep.invariant_checks += attempts[r].checks;
        if (! attempts[r].ok)
            rep.failures.push_back(attempts[r].stage);
    }
    rep.trace = std::move(attempts[last].trace);
    if (first < 0) {
        rep.result.stage = attempts[last].stage;
        return rep;
    }
    rep.winning_attempt = last;
    rep.seed_used = derive_seed(seed, static_cast<std::uint64_t>(last));
    VertexMap emb(gamma.size(), attempts[last].image);
    if (! is_embedding(g, gamma, emb))
        throw std::logic_error("rga_blowup_embed produced an invalid embedding");
    rep.result.map = std::move(emb);
    return rep;
}

} // namespace rf
