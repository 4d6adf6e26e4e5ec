#include "dichroma/decompose.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace dichroma {

BlockDecomposition blocks(const Digraph& d) {
    const int n = d.vertex_count();
    const auto& ue = d.undirected_edges();
    const int m = static_cast<int>(ue.size());

    std::vector<std::vector<std::pair<VertexId, int>>> adj(n); // (neighbour, edge id)
    for (int i = 0; i < m; ++i) {
        adj[ue[i].u].push_back({ue[i].v, i});
        adj[ue[i].v].push_back({ue[i].u, i});
    }

    std::vector<int> num(n, -1), low(n, 0);
    std::vector<VertexId> parent(n, -1);
    std::vector<char> is_cut(n, 0);
    std::vector<int> estack;
    std::vector<std::vector<int>> block_edges;
    int counter = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        int root_children = 0;
        std::vector<std::pair<VertexId, size_t>> stack;
        num[root] = low[root] = counter++;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            if (idx < adj[u].size()) {
                auto [w, ei] = adj[u][idx++];
                if (num[w] == -1) {
                    estack.push_back(ei);
                    parent[w] = u;
                    num[w] = low[w] = counter++;
                    if (u == root) ++root_children;
                    stack.push_back({w, 0});
                } else if (num[w] < num[u] && w != parent[u]) {
                    estack.push_back(ei);
                    low[u] = std::min(low[u], num[w]);
                }
            } else {
                stack.pop_back();
                VertexId p = parent[u];
                if (p != -1) {
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= num[p]) {
                        if (p != root || root_children > 1) is_cut[p] = 1;
                        // pop the block of edges discovered under u
                        std::vector<int> be;
                        int tree_edge = -1;
                        for (auto [w2, ei2] : adj[p])
                            if (w2 == u && parent[u] == p) { tree_edge = ei2; break; }
                        while (!estack.empty()) {
                            int ei2 = estack.back();
                            estack.pop_back();
                            be.push_back(ei2);
                            if (ei2 == tree_edge) break;
                        }
                        block_edges.push_back(std::move(be));
                    }
                }
            }
        }
    }

    BlockDecomposition bd;
    bd.is_cut = is_cut;
    std::vector<char> in_block(n, 0);
    for (auto& be : block_edges) {
        Block b;
        std::vector<VertexId> verts;
        for (int ei : be) {
            verts.push_back(ue[ei].u);
            verts.push_back(ue[ei].v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<VertexId> local(n, -1);
        for (size_t i = 0; i < verts.size(); ++i) {
            local[verts[i]] = static_cast<VertexId>(i);
            in_block[verts[i]] = 1;
        }
        std::vector<Arc> arcs;
        for (int ei : be) {
            VertexId u = ue[ei].u, v = ue[ei].v;
            if (d.has_arc(u, v)) arcs.push_back({local[u], local[v]});
            if (d.has_arc(v, u)) arcs.push_back({local[v], local[u]});
        }
        std::sort(arcs.begin(), arcs.end());
        b.d = Digraph(static_cast<int>(verts.size()), std::move(arcs));
        b.to_parent = verts;
        for (size_t i = 0; i < verts.size(); ++i)
            if (is_cut[verts[i]]) b.cut_vertices.push_back(static_cast<VertexId>(i));
        bd.blocks.push_back(std::move(b));
    }
    for (VertexId v = 0; v < n; ++v)
        if (!in_block[v]) bd.isolated.push_back(v);
    // deterministic order: by smallest parent vertex
    std::sort(bd.blocks.begin(), bd.blocks.end(), [](const Block& a, const Block& b) {
        return a.to_parent < b.to_parent;
    });
    return bd;
}

Stellation stellate(const Digraph& d, const PlaneEmbedding& e) {
    if (!is_biconnected(e))
        throw Error(ErrorKind::NotTwoConnected, "stellation requires a 2-connected graph");
    std::vector<FaceId> targets;
    for (const Face& f : e.faces)
        if (f.size() > 3) targets.push_back(f.id);

    Stellation s;
    s.record.original_n = d.vertex_count();
    if (targets.empty()) {
        s.d = d;
        s.emb = e;
        return s;
    }
    auto st = stellate_faces(e, targets);
    std::vector<Arc> arcs = d.arcs();
    for (auto [x, fid] : st.added)
        for (VertexId w : e.faces[fid].boundary) arcs.push_back({w, x});
    std::sort(arcs.begin(), arcs.end());
    s.d = Digraph(st.emb.n, std::move(arcs));
    s.emb = std::move(st.emb);
    s.record.added = std::move(st.added);
    return s;
}

namespace {

// connected components of the primal after deleting three vertices
std::vector<int> components_without(const PlaneEmbedding& e, VertexId x, VertexId y, VertexId z,
                                    int& ncomp) {
    std::vector<int> comp(e.n, -1);
    comp[x] = comp[y] = comp[z] = -2;
    ncomp = 0;
    for (VertexId s = 0; s < e.n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::deque<VertexId> q{s};
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            for (Dart dt : e.rotation[u]) {
                VertexId w = e.dart_head(dt);
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    q.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    return comp;
}

} // namespace

std::vector<SeparatingTriangle> list_separating_triangles(const PlaneEmbedding& e) {
    if (!e.is_triangulation() || e.n < 4)
        throw Error(ErrorKind::NotTriangulation,
                    "separating-triangle search requires a plane triangulation on >= 4 vertices");
    std::vector<SeparatingTriangle> out;
    std::vector<char> nb(e.n, 0);
    for (EdgeId i = 0; i < e.edge_count(); ++i) {
        VertexId u = e.edges[i].u, v = e.edges[i].v;
        if (u > v) std::swap(u, v);
        for (Dart dt : e.rotation[u]) nb[e.dart_head(dt)] = 1;
        for (Dart dt : e.rotation[v]) {
            VertexId w = e.dart_head(dt);
            if (w > v && nb[w]) {
                // triangle u < v < w, counted once per edge pair (u,v)
                int ncomp = 0;
                auto comp = components_without(e, u, v, w, ncomp);
                if (ncomp < 2) continue;
                if (ncomp > 2)
                    throw Error(ErrorKind::NotTriangulation,
                                "triangle removal produced more than two parts");
                SeparatingTriangle t;
                t.vertices = {u, v, w};
                // the outer face survives removal partially: any boundary
                // vertex of the outer face not on the triangle marks the
                // exterior side
                int outside_comp = -1;
                for (VertexId b : e.faces[e.outer_face].boundary)
                    if (comp[b] >= 0) outside_comp = comp[b];
                if (outside_comp == -1)
                    throw Error(ErrorKind::InternalVerificationFailed,
                                "outer face swallowed by separating triangle");
                for (VertexId p = 0; p < e.n; ++p) {
                    if (comp[p] == -2) continue;
                    if (comp[p] == outside_comp)
                        t.outside.push_back(p);
                    else
                        t.inside.push_back(p);
                }
                out.push_back(std::move(t));
            }
        }
        for (Dart dt : e.rotation[u]) nb[e.dart_head(dt)] = 0;
    }
    std::sort(out.begin(), out.end(), [](const SeparatingTriangle& a, const SeparatingTriangle& b) {
        if (a.inside.size() != b.inside.size()) return a.inside.size() < b.inside.size();
        return a.vertices < b.vertices;
    });
    return out;
}

std::optional<SeparatingTriangle> find_separating_triangle(const PlaneEmbedding& e) {
    auto all = list_separating_triangles(e);
    if (all.empty()) return std::nullopt;
    return all.front();
}

namespace {

SplitPart make_part(const Digraph& d, const PlaneEmbedding& e, const std::vector<char>& keep) {
    SplitPart p;
    auto r = restrict_embedding(e, keep);
    p.to_parent = r.to_parent_vertex;
    p.from_parent = r.from_parent_vertex;
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs())
        if (keep[a.tail] && keep[a.head])
            arcs.push_back({p.from_parent[a.tail], p.from_parent[a.head]});
    std::sort(arcs.begin(), arcs.end());
    p.d = Digraph(r.emb.n, std::move(arcs));
    p.emb = std::move(r.emb);
    return p;
}

FaceId face_with_boundary(const PlaneEmbedding& e, std::array<VertexId, 3> tri) {
    std::sort(tri.begin(), tri.end());
    for (const Face& f : e.faces) {
        if (f.size() != 3) continue;
        std::array<VertexId, 3> b{f.boundary[0], f.boundary[1], f.boundary[2]};
        std::sort(b.begin(), b.end());
        if (b == tri) return f.id;
    }
    return -1;
}

} // namespace

Split split_at_triangle(const Digraph& d, const PlaneEmbedding& e, const SeparatingTriangle& t) {
    std::vector<char> keep_out(e.n, 0), keep_in(e.n, 0);
    for (VertexId v : t.vertices) keep_out[v] = keep_in[v] = 1;
    for (VertexId v : t.outside) keep_out[v] = 1;
    for (VertexId v : t.inside) keep_in[v] = 1;

    Split s;
    s.exterior = make_part(d, e, keep_out);
    s.interior = make_part(d, e, keep_in);

    auto local_tri = [&](const SplitPart& p) {
        std::array<VertexId, 3> lt;
        for (int i = 0; i < 3; ++i) lt[i] = p.from_parent[t.vertices[i]];
        return lt;
    };

    // the exterior keeps the original outer face; the triangle becomes facial
    {
        const Face& of = e.faces[e.outer_face];
        FaceId outer = -1;
        // locate by boundary identity (all outer-face vertices survive)
        std::vector<VertexId> want;
        for (VertexId b : of.boundary) want.push_back(s.exterior.from_parent[b]);
        std::sort(want.begin(), want.end());
        for (const Face& f : s.exterior.emb.faces) {
            auto bb = f.boundary;
            std::sort(bb.begin(), bb.end());
            if (bb == want && f.size() == of.size()) {
                outer = f.id;
                break;
            }
        }
        if (outer == -1)
            throw Error(ErrorKind::InternalVerificationFailed, "outer face lost in split");
        set_outer_face(s.exterior.emb, outer);
        if (face_with_boundary(s.exterior.emb, local_tri(s.exterior)) == -1)
            throw Error(ErrorKind::InternalVerificationFailed,
                        "separating triangle not facial in exterior part");
    }
    // the interior is re-rooted at the triangle
    {
        FaceId tf = face_with_boundary(s.interior.emb, local_tri(s.interior));
        if (tf == -1)
            throw Error(ErrorKind::InternalVerificationFailed,
                        "separating triangle not facial in interior part");
        set_outer_face(s.interior.emb, tf);
    }
    return s;
}

} // namespace dichroma
