#pragma once

#include <optional>

#include "dichroma/colouring.hpp"
#include "dichroma/embedding.hpp"

namespace dichroma {

struct Block {
    Digraph d;                          // dense local ids
    std::vector<VertexId> to_parent;    // local -> parent vertex id
    std::vector<VertexId> cut_vertices; // local ids shared with other blocks
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<VertexId> isolated; // parent vertices in no block
    std::vector<char> is_cut;       // parent-indexed
};

/// Biconnected components of the underlying undirected graph; arcs are
/// partitioned among blocks, cut vertices are shared. Works on disconnected
/// inputs.
BlockDecomposition blocks(const Digraph& d);

struct StellationRecord {
    int original_n = 0;
    std::vector<std::pair<VertexId, FaceId>> added; // new vertex -> stellated face
};

struct Stellation {
    Digraph d;
    PlaneEmbedding emb;
    StellationRecord record;
};

/// Adds a sink vertex inside every non-triangular face, joined to all its
/// boundary vertices with arcs directed into the new vertex. Requires the
/// underlying graph 2-connected; the result is a plane triangulation and
/// the set of directed cycles is unchanged.
Stellation stellate(const Digraph& d, const PlaneEmbedding& e);

struct SeparatingTriangle {
    std::array<VertexId, 3> vertices; // sorted ascending
    std::vector<VertexId> inside;     // strictly interior (away from outer face)
    std::vector<VertexId> outside;    // strictly exterior
};

/// All separating triangles of a plane triangulation, sorted by
/// (|inside|, vertices).
std::vector<SeparatingTriangle> list_separating_triangles(const PlaneEmbedding& e);

/// None iff the triangulation has no separating triangle (4-connected when
/// n >= 5); otherwise the first triangle under the ordering above.
std::optional<SeparatingTriangle> find_separating_triangle(const PlaneEmbedding& e);

struct SplitPart {
    Digraph d;
    PlaneEmbedding emb;
    std::vector<VertexId> to_parent;
    std::vector<VertexId> from_parent; // -1 where absent
};

struct Split {
    SplitPart exterior; // includes the triangle, which becomes facial; keeps the outer face
    SplitPart interior; // triangle plus inside; the triangle bounds its outer face
};

/// Splits a plane triangulation at a separating triangle. The three
/// triangle arcs appear in both parts; all other arcs in exactly one.
Split split_at_triangle(const Digraph& d, const PlaneEmbedding& e, const SeparatingTriangle& t);

} // namespace dichroma
