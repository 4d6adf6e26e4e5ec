#pragma once

#include <string>

#include "dichroma/colouring.hpp"
#include "dichroma/embedding.hpp"

namespace dichroma::svg {

/// Deterministic straight-line drawing: the outer face is pinned to a
/// regular polygon and interior vertices are placed by 200 rounds of
/// neighbour averaging (planar for 3-connected inputs). Vertices are filled
/// by colour class when a colouring is given.
std::string render(const Digraph& d, const PlaneEmbedding& e, const Colouring* c);

} // namespace dichroma::svg
