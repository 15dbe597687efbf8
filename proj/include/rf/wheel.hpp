#pragma once

#include <rf/embedding.hpp>

#include <vector>

namespace rf {

// Monochromatic weighted copy of the wheel W_k (rim 0..k-2, hub k-1) with the given weights.
// Hub from the colour class of largest degree; the rim goes either into the hub's
// neighbourhood X or, when some vertex has many other-colour neighbours inside X, into those.
EmbedResult wheel_mono_embed(const EdgeColoring & c, int k, const std::vector<Rational> & weights);

} // namespace rf
