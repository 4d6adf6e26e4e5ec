#include "dichroma/dual.hpp"

#include <algorithm>
#include <deque>

namespace dichroma {

DualGraph dual(const PlaneEmbedding& primal) {
    const int m = primal.edge_count();
    std::vector<Edge> edges(m);
    for (EdgeId i = 0; i < m; ++i)
        edges[i] = {primal.face_of_dart[2 * i], primal.face_of_dart[2 * i + 1]};

    // Dual dart d has tail face_of_dart[d], so the rotation of a dual node
    // is its face's boundary walk read as dual darts.
    std::vector<std::vector<Dart>> rotation(primal.face_count());
    for (const Face& f : primal.faces) rotation[f.id] = f.darts;

    DualGraph dg;
    dg.emb = make_embedding(primal.face_count(), std::move(edges), std::move(rotation));

    // Each dual face must collect exactly the edges at one primal vertex.
    dg.dual_face_to_primal.assign(dg.emb.face_count(), -1);
    dg.primal_vertex_to_dual_face.assign(primal.n, -1);
    if (dg.emb.face_count() != primal.n)
        throw Error(ErrorKind::InternalVerificationFailed, "dual face count != primal n");
    for (const Face& df : dg.emb.faces) {
        // the dual face around primal vertex v consists of the duals of
        // exactly the primal edges at v
        std::vector<EdgeId> got;
        for (Dart d : df.darts) got.push_back(d >> 1);
        std::sort(got.begin(), got.end());
        auto matches = [&](VertexId cand) {
            std::vector<EdgeId> want;
            for (Dart d : primal.rotation[cand]) want.push_back(d >> 1);
            std::sort(want.begin(), want.end());
            return want == got;
        };
        EdgeId e0 = df.darts[0] >> 1;
        VertexId v = -1;
        for (VertexId cand : {primal.edges[e0].u, primal.edges[e0].v})
            if (matches(cand) && dg.primal_vertex_to_dual_face[cand] == -1) {
                v = cand;
                break;
            }
        if (v == -1)
            throw Error(ErrorKind::InternalVerificationFailed,
                        "dual face does not match a primal vertex link");
        dg.dual_face_to_primal[df.id] = v;
        dg.primal_vertex_to_dual_face[v] = df.id;
    }
    return dg;
}

Cycle facial_cycle_of_vertex(const PlaneEmbedding& e, const DualGraph& dual, VertexId v) {
    const int k = e.degree(v);
    if (k < 3)
        throw Error(ErrorKind::DegenerateLink,
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(k));
    // f_i = the face between edge e_i and e_{i+1} around v
    std::vector<FaceId> fan(k);
    std::vector<EdgeId> link(k);
    for (int i = 0; i < k; ++i) {
        Dart di = e.rotation[v][i];
        Dart dj = e.rotation[v][(i + 1) % k];
        FaceId a1 = e.face_of_dart[di], a2 = e.face_of_dart[di ^ 1];
        FaceId b1 = e.face_of_dart[dj], b2 = e.face_of_dart[dj ^ 1];
        FaceId common = -1;
        int hits = 0;
        for (FaceId fa : {a1, a2})
            for (FaceId fb : {b1, b2})
                if (fa == fb) {
                    if (common != fa) ++hits;
                    common = fa;
                }
        if (hits != 1)
            throw Error(ErrorKind::DegenerateLink, "ambiguous face between consecutive edges");
        fan[i] = common;
        link[i] = dj >> 1; // edge between fan[i] and fan[i+1]... aligned below
    }
    Cycle c;
    c.nodes = fan;
    for (int i = 0; i < k; ++i) c.edges.push_back(link[i]);
    // edges[i] must join nodes[i] and nodes[i+1]: fan[i] and fan[i+1] share
    // edge e.rotation[v][(i+1)%k] which is link[i]
    auto distinct = c.nodes;
    std::sort(distinct.begin(), distinct.end());
    if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end())
        throw Error(ErrorKind::DegenerateLink, "faces around vertex do not form a simple cycle");
    // consistency with the dual: this must be the dual face of v
    FaceId df = dual.primal_vertex_to_dual_face[v];
    if (df == -1 || !cycle_matches_face(dual.emb, c, df))
        throw Error(ErrorKind::InternalVerificationFailed,
                    "facial cycle of vertex does not match dual face");
    c.canonicalize();
    return c;
}

CycleSides cycle_sides(const PlaneEmbedding& e, const Cycle& dual_cycle, VertexId anchor) {
    if (anchor < 0 || anchor >= e.n)
        throw Error(ErrorKind::PreconditionViolated, "anchor out of range");
    auto nodes = dual_cycle.nodes;
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw Error(ErrorKind::NotACut, "dual cycle is not simple");

    std::vector<char> cut(e.edge_count(), 0);
    for (EdgeId id : dual_cycle.edges) {
        if (id < 0 || id >= e.edge_count())
            throw Error(ErrorKind::PreconditionViolated, "cycle edge out of range");
        cut[id] = 1;
    }

    std::vector<int> comp(e.n, -1);
    int ncomp = 0;
    for (VertexId s = 0; s < e.n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::deque<VertexId> q{s};
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            for (Dart d : e.rotation[u]) {
                if (cut[d >> 1]) continue;
                VertexId w = e.dart_head(d);
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    q.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    if (ncomp != 2)
        throw Error(ErrorKind::NotACut, "cut produced " + std::to_string(ncomp) +
                                            " components, expected 2");
    CycleSides s;
    s.inside_mask.assign(e.n, 0);
    int anchor_comp = comp[anchor];
    for (VertexId v = 0; v < e.n; ++v) {
        if (comp[v] == anchor_comp) {
            s.outside.push_back(v);
        } else {
            s.inside.push_back(v);
            s.inside_mask[v] = 1;
        }
    }
    return s;
}

} // namespace dichroma
