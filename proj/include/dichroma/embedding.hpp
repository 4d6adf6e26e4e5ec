#pragma once

#include <vector>

#include "dichroma/digraph.hpp"
#include "dichroma/types.hpp"

namespace dichroma {

struct Face {
    FaceId id = -1;
    std::vector<Dart> darts;        // boundary walk, canonical start (min dart)
    std::vector<VertexId> boundary; // tails of the darts, same order
    int size() const { return static_cast<int>(darts.size()); }
};

/// Combinatorial plane (sphere) embedding of a connected undirected
/// multigraph: a rotation system plus the faces it traces. One face is
/// designated as outer. Parallel edges are allowed (duals of small graphs
/// need them); loops are not.
struct PlaneEmbedding {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Dart>> rotation; // clockwise darts with tail v
    std::vector<Face> faces;
    std::vector<FaceId> face_of_dart;
    FaceId outer_face = -1;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }
    VertexId dart_tail(Dart d) const { return (d & 1) ? edges[d >> 1].v : edges[d >> 1].u; }
    VertexId dart_head(Dart d) const { return (d & 1) ? edges[d >> 1].u : edges[d >> 1].v; }
    int degree(VertexId v) const { return static_cast<int>(rotation[v].size()); }
    /// Smallest edge id joining u and v, or -1.
    EdgeId edge_between(VertexId u, VertexId v) const;
    FaceId other_face(EdgeId e, FaceId f) const;
    bool adjacent(VertexId u, VertexId v) const { return edge_between(u, v) != -1; }
    /// Every face (including the outer one) is a triangle with distinct
    /// corners, the graph is simple and n >= 3.
    bool is_triangulation() const;
};

/// Validates the rotation system (each dart exactly once, with matching
/// tail; graph connected; no loops), traces faces and checks Euler's
/// formula n - m + f = 2. outer_hint = -1 picks the longest face (lowest id
/// on ties).
PlaneEmbedding make_embedding(int n, std::vector<Edge> edges,
                              std::vector<std::vector<Dart>> rotation,
                              FaceId outer_hint = -1);

/// Builds an embedding from clockwise neighbour lists of a simple graph.
PlaneEmbedding embedding_from_neighbour_lists(int n,
                                              const std::vector<std::vector<VertexId>>& nbrs);

void set_outer_face(PlaneEmbedding& e, FaceId f);

bool euler_ok(const PlaneEmbedding& e);

/// Planar embedding of a connected undirected simple graph. Throws
/// NotPlanar (message lists a Kuratowski subgraph when available).
PlaneEmbedding compute_embedding_undirected(int n, const std::vector<Edge>& edges);

/// Embedding of the underlying undirected graph of d (digons collapse).
PlaneEmbedding compute_embedding(const Digraph& d);

struct StellatedFaces {
    PlaneEmbedding emb;
    std::vector<std::pair<VertexId, FaceId>> added; // new vertex -> old face id
};

/// Adds one new vertex inside each listed face, joined to every boundary
/// vertex. Face boundaries must be simple cycles.
StellatedFaces stellate_faces(const PlaneEmbedding& e, const std::vector<FaceId>& targets);

struct RestrictedEmbedding {
    PlaneEmbedding emb;
    std::vector<VertexId> to_parent_vertex; // new id -> old id
    std::vector<EdgeId> to_parent_edge;     // new id -> old id
    std::vector<VertexId> from_parent_vertex; // old id -> new id or -1
    std::vector<EdgeId> from_parent_edge;     // old id -> new id or -1
};

/// Sub-embedding induced by a vertex subset (which must induce a connected
/// subgraph). Rotation order is inherited.
RestrictedEmbedding restrict_embedding(const PlaneEmbedding& e,
                                       const std::vector<char>& keep_vertex);

/// Same vertices, a subset of edges (the rest removed); result must stay
/// connected.
PlaneEmbedding delete_edges(const PlaneEmbedding& e, const std::vector<char>& keep_edge);

/// No articulation vertex and n >= 3 (multigraph-aware).
bool is_biconnected(const PlaneEmbedding& e);

/// Face boundaries as an undirected simple cycle check: true when `nodes`
/// and `edges` (edges[i] joins nodes[i] and nodes[i+1]) match face f up to
/// rotation and reversal.
struct Cycle {
    std::vector<VertexId> nodes;
    std::vector<EdgeId> edges;
    int length() const { return static_cast<int>(nodes.size()); }
    void canonicalize(); // rotate so the smallest node comes first
};

bool cycle_matches_face(const PlaneEmbedding& e, const Cycle& c, FaceId f);

} // namespace dichroma
