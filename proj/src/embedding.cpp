#include <rf/embedding.hpp>
#include <rf/morphisms.hpp>

namespace rf {

bool is_weighted_embedding(const WeightedGraph & gw, const Graph & host, const VertexMap & f)
{
    if (f.source_n != gw.size() || f.target_n != host.size())
        return false;
    return verify_homomorphism(gw.graph(), host, f).valid
        && verify_capacity(f, CapacityProfile::weight(gw.weights())).valid;
}

bool is_embedding(const Graph & g, const Graph & host, const VertexMap & f)
{
    if (f.source_n != g.size() || f.target_n != host.size())
        return false;
    return f.injective() && verify_homomorphism(g, host, f).valid;
}

} // namespace rf
