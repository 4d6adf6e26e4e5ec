#pragma once

// Shared fixtures and test-side oracles.

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "dichroma/colour.hpp"
#include "dichroma/decompose.hpp"
#include "dichroma/dual.hpp"
#include "dichroma/oracle.hpp"

namespace fixtures {

using namespace dichroma;

// Octahedron, poles 0 and 5, equator 1-2-3-4. The orientation directs the
// equator cyclically and every pole edge away from 0 and into 5, so the
// equator 4-cycle is the unique directed cycle.
inline Digraph octahedron_digraph() {
    return Digraph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                       {1, 2}, {2, 3}, {3, 4}, {4, 1},
                       {1, 5}, {2, 5}, {3, 5}, {4, 5}});
}

inline PlaneEmbedding octahedron_embedding() {
    return oracle::ring_triangulation(4, 1);
}

inline Digraph directed_cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
    return Digraph(n, std::move(arcs));
}

inline Digraph transitive_tournament(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.push_back({i, j});
    return Digraph(n, std::move(arcs));
}

// Acyclic (id-increasing) orientation of an embedding's underlying graph.
inline Digraph oriented_by_id(const PlaneEmbedding& e) {
    std::vector<Arc> arcs;
    for (const Edge& ed : e.edges)
        arcs.push_back({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
    std::sort(arcs.begin(), arcs.end());
    return Digraph(e.n, std::move(arcs));
}

// Independent side-of-cycle oracle, flooding along face boundaries: the
// cycle's curve crosses exactly the cut edges, so within each face boundary
// the non-cut edges split into maximal runs that lie on one side. Edges in
// one run are on the same side; a vertex takes the side of its non-cut
// edges, and a vertex with none (a singleton side) takes the side opposite
// to all its neighbours.
inline std::vector<char> face_flood_inside(const PlaneEmbedding& e, const Cycle& dual_cycle,
                                           VertexId anchor) {
    const int m = e.edge_count();
    std::vector<char> cut(m, 0);
    for (EdgeId id : dual_cycle.edges) cut[id] = 1;

    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (const Face& f : e.faces) {
        // boundary edge ids in walk order, cyclically split at cut edges
        std::vector<EdgeId> walk;
        for (Dart d : f.darts) walk.push_back(d >> 1);
        const int k = static_cast<int>(walk.size());
        int first_cut = -1;
        for (int i = 0; i < k; ++i)
            if (cut[walk[i]]) first_cut = i;
        if (first_cut == -1) {
            for (int i = 1; i < k; ++i) unite(walk[0], walk[i]);
            continue;
        }
        EdgeId run_head = -1;
        for (int s = 1; s <= k; ++s) {
            EdgeId ed = walk[(first_cut + s) % k];
            if (cut[ed]) {
                run_head = -1;
            } else if (run_head == -1) {
                run_head = ed;
            } else {
                unite(run_head, ed);
            }
        }
    }

    std::vector<int> roots;
    for (int i = 0; i < m; ++i)
        if (!cut[i]) roots.push_back(find(i));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    REQUIRE(roots.size() >= 1);
    REQUIRE(roots.size() <= 2);

    std::vector<int> vside(e.n, -1);
    for (VertexId v = 0; v < e.n; ++v)
        for (Dart d : e.rotation[v]) {
            EdgeId ed = d >> 1;
            if (cut[ed]) continue;
            int s = find(ed) == roots[0] ? 0 : 1;
            REQUIRE((vside[v] == -1 || vside[v] == s));
            vside[v] = s;
        }
    for (VertexId v = 0; v < e.n; ++v) {
        if (vside[v] != -1) continue;
        // all edges cut: singleton side opposite to every neighbour
        int nb = -1;
        for (Dart d : e.rotation[v]) {
            VertexId w = e.dart_head(d);
            REQUIRE(vside[w] != -1);
            REQUIRE((nb == -1 || nb == vside[w]));
            nb = vside[w];
        }
        REQUIRE(nb != -1);
        vside[v] = 1 - nb;
    }
    // every cut edge must cross, every kept edge must not
    for (EdgeId i = 0; i < m; ++i) {
        if (cut[i])
            REQUIRE(vside[e.edges[i].u] != vside[e.edges[i].v]);
        else
            REQUIRE(vside[e.edges[i].u] == vside[e.edges[i].v]);
    }
    REQUIRE(vside[anchor] != -1);
    std::vector<char> inside(e.n, 0);
    for (VertexId v = 0; v < e.n; ++v) inside[v] = vside[v] != vside[anchor];
    return inside;
}

// Brute-force separating-triangle oracle: a pairwise-adjacent triple whose
// removal disconnects the rest.
inline bool has_separating_triangle_bruteforce(const PlaneEmbedding& e) {
    for (VertexId x = 0; x < e.n; ++x)
        for (VertexId y = x + 1; y < e.n; ++y) {
            if (!e.adjacent(x, y)) continue;
            for (VertexId z = y + 1; z < e.n; ++z) {
                if (!e.adjacent(x, z) || !e.adjacent(y, z)) continue;
                std::vector<int> comp(e.n, -1);
                comp[x] = comp[y] = comp[z] = -2;
                int ncomp = 0;
                for (VertexId s = 0; s < e.n; ++s) {
                    if (comp[s] != -1) continue;
                    comp[s] = ncomp;
                    std::deque<VertexId> q{s};
                    while (!q.empty()) {
                        VertexId u = q.front();
                        q.pop_front();
                        for (Dart d : e.rotation[u]) {
                            VertexId w = e.dart_head(d);
                            if (comp[w] == -1) {
                                comp[w] = ncomp;
                                q.push_back(w);
                            }
                        }
                    }
                    ++ncomp;
                }
                if (ncomp >= 2) return true;
            }
        }
    return false;
}

// Exhaustive 2-colouring check by direct enumeration of colour-class
// subsets, using plain reachability for acyclicity (third route, separate
// from both verify_colouring and the SCC oracle).
inline bool subset_is_acyclic(const Digraph& d, uint32_t mask) {
    const int n = d.vertex_count();
    std::vector<int> indeg(n, 0);
    for (const Arc& a : d.arcs())
        if (((mask >> a.tail) & 1) && ((mask >> a.head) & 1)) ++indeg[a.head];
    std::deque<VertexId> q;
    int seen = 0, total = 0;
    for (VertexId v = 0; v < n; ++v)
        if ((mask >> v) & 1) {
            ++total;
            if (indeg[v] == 0) q.push_back(v);
        }
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        ++seen;
        for (VertexId w : d.out(u))
            if ((mask >> w) & 1 && --indeg[w] == 0) q.push_back(w);
    }
    return seen == total;
}

inline bool colouring_valid_bruteforce(const Digraph& d, const Colouring& c) {
    uint32_t m1 = 0, m2 = 0;
    for (VertexId v = 0; v < d.vertex_count(); ++v)
        (c.get(v) == 1 ? m1 : m2) |= 1u << v;
    return subset_is_acyclic(d, m1) && subset_is_acyclic(d, m2);
}

// Glues a relabeled copy of `piece` onto `base` along three shared vertices
// (a facial triangle of both); used to build fixtures with a known
// separating triangle.
inline Digraph glue_on_triangle(const Digraph& base, const Digraph& piece,
                                std::array<VertexId, 3> base_tri,
                                std::array<VertexId, 3> piece_tri) {
    const int extra = piece.vertex_count() - 3;
    std::vector<VertexId> map(piece.vertex_count(), -1);
    for (int i = 0; i < 3; ++i) map[piece_tri[i]] = base_tri[i];
    int next = base.vertex_count();
    for (VertexId v = 0; v < piece.vertex_count(); ++v)
        if (map[v] == -1) map[v] = next++;
    std::vector<Arc> arcs = base.arcs();
    for (const Arc& a : piece.arcs()) {
        Arc na{map[a.tail], map[a.head]};
        bool dup = false;
        for (const Arc& b : arcs)
            if (b == na || (b.tail == na.head && b.head == na.tail)) dup = true;
        if (!dup) arcs.push_back(na);
    }
    std::sort(arcs.begin(), arcs.end());
    return Digraph(base.vertex_count() + extra, std::move(arcs));
}

} // namespace fixtures
