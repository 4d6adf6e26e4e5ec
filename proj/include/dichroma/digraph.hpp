#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dichroma/types.hpp"

namespace dichroma {

/// Simple digraph on vertices 0..n-1. Loops and duplicate arcs are rejected
/// at construction; digons (u->v plus v->u) are representable so that
/// is_oriented / digirth can report on them, but colouring entry points
/// reject them.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    const std::vector<VertexId>& out(VertexId v) const { return out_[v]; }
    const std::vector<VertexId>& in(VertexId v) const { return in_[v]; }
    bool has_arc(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;

    /// Underlying undirected simple edges, u < v, lexicographically sorted.
    /// A digon collapses to one edge. Edge ids of embeddings computed from
    /// this digraph refer to positions in this list.
    const std::vector<Edge>& undirected_edges() const { return uedges_; }
    EdgeId undirected_edge_index(VertexId u, VertexId v) const; // -1 if absent

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<VertexId>> out_, in_;
    std::vector<Edge> uedges_;
};

struct Digirth {
    bool finite = false;
    int length = 0; // meaningful only when finite
    static Digirth infinite() { return {false, 0}; }
    static Digirth of(int len) { return {true, len}; }
    bool at_least(int k) const { return !finite || length >= k; }
    bool operator==(const Digirth&) const = default;
};

/// Length of the shortest directed cycle; infinite when acyclic.
Digirth digirth(const Digraph& d);

/// A shortest directed cycle as a vertex sequence (rotated so the smallest
/// vertex comes first), or nullopt when acyclic.
std::optional<std::vector<VertexId>> shortest_directed_cycle(const Digraph& d);

/// True iff no loops and no digons.
bool is_oriented(const Digraph& d);

/// All directed 3-cycles, each reported once as (x,y,z) with x minimal.
std::vector<std::array<VertexId, 3>> directed_triangles(const Digraph& d);

} // namespace dichroma
