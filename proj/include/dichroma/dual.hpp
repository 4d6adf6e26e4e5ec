#pragma once

#include "dichroma/embedding.hpp"

namespace dichroma {

/// Dual of a plane embedding: one node per primal face, one edge per primal
/// edge (same ids), with the inherited rotation system. Dual faces are in
/// bijection with primal vertices.
struct DualGraph {
    PlaneEmbedding emb;                          // node ids = primal face ids
    std::vector<VertexId> dual_face_to_primal;   // dual face id -> primal vertex
    std::vector<FaceId> primal_vertex_to_dual_face;
};

DualGraph dual(const PlaneEmbedding& primal);

/// The faces incident with v in rotation order, as a cycle in the dual
/// (nodes are face ids, edges[i] is the primal edge between nodes[i] and
/// nodes[i+1]). Requires deg(v) >= 3 and pairwise distinct faces around v
/// (DegenerateLink otherwise). The result is a facial cycle of the dual.
Cycle facial_cycle_of_vertex(const PlaneEmbedding& e, const DualGraph& dual, VertexId v);

struct CycleSides {
    std::vector<VertexId> inside;  // the part not containing the anchor
    std::vector<VertexId> outside; // the part containing the anchor
    std::vector<char> inside_mask;
};

/// Removes the primal edges dual to the cycle's edges; the primal must
/// split into exactly two connected parts (NotACut otherwise). The part
/// not containing `anchor` is labelled inside.
CycleSides cycle_sides(const PlaneEmbedding& e, const Cycle& dual_cycle, VertexId anchor);

} // namespace dichroma
