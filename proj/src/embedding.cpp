#include "dichroma/embedding.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace dichroma {

EdgeId PlaneEmbedding::edge_between(VertexId u, VertexId v) const {
    EdgeId best = -1;
    for (Dart d : rotation[u]) {
        if (dart_head(d) == v) {
            EdgeId e = d >> 1;
            if (best == -1 || e < best) best = e;
        }
    }
    return best;
}

FaceId PlaneEmbedding::other_face(EdgeId e, FaceId f) const {
    FaceId a = face_of_dart[2 * e], b = face_of_dart[2 * e + 1];
    if (a == f) return b;
    if (b == f) return a;
    throw Error(ErrorKind::PreconditionViolated, "face not incident with edge");
}

bool PlaneEmbedding::is_triangulation() const {
    if (n < 3) return false;
    for (const Face& f : faces) {
        if (f.size() != 3) return false;
        if (f.boundary[0] == f.boundary[1] || f.boundary[1] == f.boundary[2] ||
            f.boundary[0] == f.boundary[2])
            return false;
    }
    // simplicity: no two edges with the same endpoints
    std::vector<std::pair<int, int>> keys;
    keys.reserve(edges.size());
    for (const Edge& e : edges)
        keys.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

namespace {

void trace_faces(PlaneEmbedding& e) {
    const int m = e.edge_count();
    std::vector<int> pos(2 * m, -1); // index of dart within rotation[tail]
    for (VertexId v = 0; v < e.n; ++v)
        for (size_t i = 0; i < e.rotation[v].size(); ++i)
            pos[e.rotation[v][i]] = static_cast<int>(i);

    e.faces.clear();
    e.face_of_dart.assign(2 * m, -1);
    for (Dart d0 = 0; d0 < 2 * m; ++d0) {
        if (e.face_of_dart[d0] != -1) continue;
        Face f;
        f.id = static_cast<FaceId>(e.faces.size());
        Dart d = d0;
        do {
            e.face_of_dart[d] = f.id;
            f.darts.push_back(d);
            VertexId h = e.dart_head(d);
            const auto& rot = e.rotation[h];
            int i = pos[d ^ 1];
            d = rot[(i + 1) % rot.size()];
        } while (d != d0);
        for (Dart fd : f.darts) f.boundary.push_back(e.dart_tail(fd));
        e.faces.push_back(std::move(f));
    }
}

void check_connected(const PlaneEmbedding& e) {
    if (e.n == 0) throw Error(ErrorKind::PreconditionViolated, "empty graph");
    std::vector<char> seen(e.n, 0);
    std::deque<VertexId> q{0};
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (Dart d : e.rotation[u]) {
            VertexId w = e.dart_head(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push_back(w);
            }
        }
    }
    if (cnt != e.n)
        throw Error(ErrorKind::PreconditionViolated, "graph is not connected");
}

FaceId pick_outer(const PlaneEmbedding& e) {
    FaceId best = 0;
    for (FaceId f = 1; f < e.face_count(); ++f)
        if (e.faces[f].size() > e.faces[best].size()) best = f;
    return best;
}

} // namespace

PlaneEmbedding make_embedding(int n, std::vector<Edge> edges,
                              std::vector<std::vector<Dart>> rotation, FaceId outer_hint) {
    PlaneEmbedding e;
    e.n = n;
    e.edges = std::move(edges);
    e.rotation = std::move(rotation);
    const int m = e.edge_count();
    if (static_cast<int>(e.rotation.size()) != n)
        throw Error(ErrorKind::PreconditionViolated, "rotation size mismatch");
    for (const Edge& ed : e.edges) {
        if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
            throw Error(ErrorKind::PreconditionViolated, "edge endpoint out of range");
        if (ed.u == ed.v)
            throw Error(ErrorKind::PreconditionViolated, "loop edge");
    }
    std::vector<char> seen(2 * m, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (Dart d : e.rotation[v]) {
            if (d < 0 || d >= 2 * m)
                throw Error(ErrorKind::PreconditionViolated, "dart out of range");
            if (seen[d])
                throw Error(ErrorKind::PreconditionViolated, "dart listed twice");
            seen[d] = 1;
            if (e.dart_tail(d) != v)
                throw Error(ErrorKind::PreconditionViolated, "dart tail mismatch");
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw Error(ErrorKind::PreconditionViolated, "dart missing from rotation");

    check_connected(e);
    trace_faces(e);
    if (!euler_ok(e))
        throw Error(ErrorKind::NotPlanar,
                    "rotation system does not describe a sphere embedding (n=" +
                        std::to_string(e.n) + " m=" + std::to_string(m) +
                        " f=" + std::to_string(e.face_count()) + ")");
    e.outer_face = (outer_hint == -1) ? pick_outer(e) : outer_hint;
    if (e.outer_face < 0 || e.outer_face >= e.face_count())
        throw Error(ErrorKind::PreconditionViolated, "outer face out of range");
    return e;
}

PlaneEmbedding embedding_from_neighbour_lists(int n,
                                              const std::vector<std::vector<VertexId>>& nbrs) {
    if (static_cast<int>(nbrs.size()) != n)
        throw Error(ErrorKind::ParseError, "rotation block size mismatch");
    std::vector<Edge> edges;
    std::vector<std::vector<int>> eid(n); // parallel to a sorted key lookup
    std::vector<std::pair<std::pair<int, int>, int>> keys;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : nbrs[u]) {
            if (v < 0 || v >= n) throw Error(ErrorKind::ParseError, "neighbour out of range");
            if (v == u) throw Error(ErrorKind::ParseError, "self neighbour");
            if (u < v) {
                keys.push_back({{u, v}, static_cast<int>(keys.size())});
            }
        }
    std::sort(keys.begin(), keys.end());
    for (size_t i = 1; i < keys.size(); ++i)
        if (keys[i].first == keys[i - 1].first)
            throw Error(ErrorKind::ParseError, "duplicate neighbour entry");
    edges.reserve(keys.size());
    for (auto& [k, idx] : keys) edges.push_back({k.first, k.second});

    auto edge_index = [&](VertexId u, VertexId v) {
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        auto it = std::lower_bound(keys.begin(), keys.end(),
                                   std::make_pair(key, -1));
        if (it == keys.end() || it->first != key)
            throw Error(ErrorKind::ParseError, "rotation lists are not symmetric");
        return static_cast<int>(it - keys.begin());
    };

    std::vector<std::vector<Dart>> rotation(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : nbrs[u]) {
            int e = edge_index(u, v);
            rotation[u].push_back(2 * e + (edges[e].u == u ? 0 : 1));
        }
    return make_embedding(n, std::move(edges), std::move(rotation));
}

void set_outer_face(PlaneEmbedding& e, FaceId f) {
    if (f < 0 || f >= e.face_count())
        throw Error(ErrorKind::PreconditionViolated, "outer face out of range");
    e.outer_face = f;
}

bool euler_ok(const PlaneEmbedding& e) {
    return e.n - e.edge_count() + e.face_count() == 2;
}

StellatedFaces stellate_faces(const PlaneEmbedding& e, const std::vector<FaceId>& targets) {
    PlaneEmbedding r;
    r.n = e.n;
    r.edges = e.edges;
    r.rotation = e.rotation;
    std::vector<std::pair<VertexId, FaceId>> added;

    Dart outer_mark = e.faces[e.outer_face].darts[0];

    for (FaceId fid : targets) {
        const Face& f = e.faces[fid];
        const int k = f.size();
        // simple boundary required
        std::vector<VertexId> b = f.boundary;
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw Error(ErrorKind::NotTwoConnected,
                        "face boundary is not a simple cycle (face " +
                            std::to_string(fid) + ")");

        VertexId x = r.n++;
        r.rotation.emplace_back();
        added.push_back({x, fid});

        std::vector<EdgeId> new_edge(k);
        for (int j = 0; j < k; ++j) {
            VertexId wj = f.boundary[j];
            new_edge[j] = r.edge_count();
            r.edges.push_back({wj, x});
        }
        // rotation at x: boundary vertices in reverse walk order
        for (int j = k - 1; j >= 0; --j)
            r.rotation[x].push_back(2 * new_edge[j]  + 1);
        // at w_j: insert (w_j -> x) right after the reversal of the arrival
        // dart d_{j-1} = (w_{j-1} -> w_j)
        for (int j = 0; j < k; ++j) {
            Dart arrival_rev = f.darts[(j + k - 1) % k] ^ 1;
            VertexId wj = f.boundary[j];
            auto& rot = r.rotation[wj];
            auto it = std::find(rot.begin(), rot.end(), arrival_rev);
            if (it == rot.end())
                throw Error(ErrorKind::InternalVerificationFailed, "stellation splice failure");
            rot.insert(it + 1, 2 * new_edge[j]);
        }
    }

    PlaneEmbedding out = make_embedding(r.n, std::move(r.edges), std::move(r.rotation));
    out.outer_face = out.face_of_dart[outer_mark];
    return {std::move(out), std::move(added)};
}

RestrictedEmbedding restrict_embedding(const PlaneEmbedding& e,
                                       const std::vector<char>& keep_vertex) {
    RestrictedEmbedding r;
    r.from_parent_vertex.assign(e.n, -1);
    for (VertexId v = 0; v < e.n; ++v)
        if (keep_vertex[v]) {
            r.from_parent_vertex[v] = static_cast<VertexId>(r.to_parent_vertex.size());
            r.to_parent_vertex.push_back(v);
        }
    r.from_parent_edge.assign(e.edge_count(), -1);
    std::vector<Edge> edges;
    for (EdgeId i = 0; i < e.edge_count(); ++i) {
        const Edge& ed = e.edges[i];
        if (keep_vertex[ed.u] && keep_vertex[ed.v]) {
            r.from_parent_edge[i] = static_cast<EdgeId>(edges.size());
            r.to_parent_edge.push_back(i);
            edges.push_back({r.from_parent_vertex[ed.u], r.from_parent_vertex[ed.v]});
        }
    }
    std::vector<std::vector<Dart>> rotation(r.to_parent_vertex.size());
    for (size_t nv = 0; nv < r.to_parent_vertex.size(); ++nv) {
        VertexId v = r.to_parent_vertex[nv];
        for (Dart d : e.rotation[v]) {
            EdgeId ne = r.from_parent_edge[d >> 1];
            if (ne != -1) rotation[nv].push_back(2 * ne + (d & 1));
        }
    }
    r.emb = make_embedding(static_cast<int>(r.to_parent_vertex.size()), std::move(edges),
                           std::move(rotation));
    return r;
}

PlaneEmbedding delete_edges(const PlaneEmbedding& e, const std::vector<char>& keep_edge) {
    std::vector<Edge> edges;
    std::vector<EdgeId> newid(e.edge_count(), -1);
    for (EdgeId i = 0; i < e.edge_count(); ++i)
        if (keep_edge[i]) {
            newid[i] = static_cast<EdgeId>(edges.size());
            edges.push_back(e.edges[i]);
        }
    std::vector<std::vector<Dart>> rotation(e.n);
    for (VertexId v = 0; v < e.n; ++v)
        for (Dart d : e.rotation[v])
            if (newid[d >> 1] != -1) rotation[v].push_back(2 * newid[d >> 1] + (d & 1));
    return make_embedding(e.n, std::move(edges), std::move(rotation));
}

bool is_biconnected(const PlaneEmbedding& e) {
    if (e.n < 3) return false;
    // articulation vertices by lowpoint, counting parallel edges as distinct
    std::vector<int> num(e.n, -1), low(e.n, 0);
    std::vector<VertexId> parent(e.n, -1);
    std::vector<EdgeId> parent_edge(e.n, -1);
    int counter = 0;
    int root_children = 0;
    bool has_articulation = false;

    std::vector<std::pair<VertexId, size_t>> stack;
    num[0] = low[0] = counter++;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        auto& [u, idx] = stack.back();
        if (idx < e.rotation[u].size()) {
            Dart d = e.rotation[u][idx++];
            VertexId w = e.dart_head(d);
            EdgeId ed = d >> 1;
            if (num[w] == -1) {
                parent[w] = u;
                parent_edge[w] = ed;
                num[w] = low[w] = counter++;
                if (u == 0) ++root_children;
                stack.push_back({w, 0});
            } else if (ed != parent_edge[u]) {
                low[u] = std::min(low[u], num[w]);
            }
        } else {
            stack.pop_back();
            VertexId p = parent[u];
            if (p != -1) {
                low[p] = std::min(low[p], low[u]);
                if (p != 0 && low[u] >= num[p]) has_articulation = true;
            }
        }
    }
    if (counter != e.n) return false; // disconnected
    if (root_children > 1) has_articulation = true;
    return !has_articulation;
}

void Cycle::canonicalize() {
    if (nodes.empty()) return;
    auto mn = std::min_element(nodes.begin(), nodes.end());
    auto shift = static_cast<size_t>(mn - nodes.begin());
    std::rotate(nodes.begin(), nodes.begin() + shift, nodes.end());
    std::rotate(edges.begin(), edges.begin() + shift, edges.end());
}

namespace {

Cycle reversed_cycle(const Cycle& c) {
    Cycle r;
    const int k = c.length();
    r.nodes.push_back(c.nodes[0]);
    for (int i = k - 1; i >= 1; --i) r.nodes.push_back(c.nodes[i]);
    for (int i = k - 1; i >= 0; --i) r.edges.push_back(c.edges[i]);
    return r;
}

bool cycles_equal_up_to_rotation(const Cycle& a, const Cycle& b) {
    const int k = a.length();
    if (b.length() != k) return false;
    for (int s = 0; s < k; ++s) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            if (a.nodes[i] != b.nodes[(s + i) % k] || a.edges[i] != b.edges[(s + i) % k])
                ok = false;
        if (ok) return true;
    }
    return false;
}

} // namespace

bool cycle_matches_face(const PlaneEmbedding& e, const Cycle& c, FaceId f) {
    const Face& face = e.faces[f];
    Cycle fc;
    fc.nodes = face.boundary;
    for (Dart d : face.darts) fc.edges.push_back(d >> 1);
    return cycles_equal_up_to_rotation(c, fc) ||
           cycles_equal_up_to_rotation(reversed_cycle(c), fc);
}

} // namespace dichroma
