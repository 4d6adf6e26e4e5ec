#include "dichroma/colour.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "dichroma/dual.hpp"
#include "dichroma/oracle.hpp"

namespace dichroma {

namespace {

ColourTrace g_dummy_trace;

ColourTrace& trace_of(const ColourOptions& opt) {
    return opt.trace ? *opt.trace : g_dummy_trace;
}

void check_same_graph(const Digraph& d, const PlaneEmbedding& e) {
    if (d.vertex_count() != e.n)
        throw Error(ErrorKind::PreconditionViolated, "digraph/embedding vertex count mismatch");
    std::vector<std::pair<int, int>> a, b;
    for (const Edge& ed : d.undirected_edges()) a.push_back({ed.u, ed.v});
    for (const Edge& ed : e.edges) b.push_back({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        throw Error(ErrorKind::PreconditionViolated, "digraph and embedding edge sets differ");
}

Colouring merged_with_isolated_filled(const Digraph& u, const Colouring& c) {
    Colouring t = c;
    for (VertexId v = 0; v < u.vertex_count(); ++v)
        if (!t.assigned(v)) t.set(v, 1);
    return t;
}

std::string dump_instance(const Digraph& d) {
    std::ostringstream os;
    os << "n=" << d.vertex_count() << " arcs:";
    for (const Arc& a : d.arcs()) os << " " << a.tail << ">" << a.head;
    return os.str();
}

} // namespace

Colouring combine_colourings(const Digraph& d1, const Colouring& c1, const Digraph& d2,
                             const Colouring& c2, const std::vector<VertexId>& overlap) {
    if (d1.vertex_count() != d2.vertex_count() || c1.size() != d1.vertex_count() ||
        c2.size() != d2.vertex_count())
        throw Error(ErrorKind::PreconditionViolated,
                    "combine_colourings requires one shared id space");

    for (size_t i = 0; i < overlap.size(); ++i)
        for (size_t j = i + 1; j < overlap.size(); ++j) {
            VertexId x = overlap[i], y = overlap[j];
            int fwd1 = d1.has_arc(x, y), bwd1 = d1.has_arc(y, x);
            int fwd2 = d2.has_arc(x, y), bwd2 = d2.has_arc(y, x);
            if (fwd1 + bwd1 != 1 || fwd2 + bwd2 != 1 || fwd1 != fwd2)
                throw Error(ErrorKind::OverlapNotTournament,
                            "overlap pair " + std::to_string(x) + "," + std::to_string(y));
        }

    // colourings must cover their arcs and agree wherever both assign
    for (const Arc& a : d1.arcs())
        if (!c1.assigned(a.tail) || !c1.assigned(a.head))
            throw Error(ErrorKind::PartialColouring, "c1 does not cover d1");
    for (const Arc& a : d2.arcs())
        if (!c2.assigned(a.tail) || !c2.assigned(a.head))
            throw Error(ErrorKind::PartialColouring, "c2 does not cover d2");
    for (VertexId v : overlap)
        if (!c1.assigned(v) || !c2.assigned(v))
            throw Error(ErrorKind::PartialColouring, "overlap vertex uncoloured");
    for (VertexId v = 0; v < c1.size(); ++v)
        if (c1.assigned(v) && c2.assigned(v) && c1.get(v) != c2.get(v))
            throw Error(ErrorKind::ColouringsDisagree, "vertex " + std::to_string(v));

    if (verify_colouring(d1, merged_with_isolated_filled(d1, c1)).valid == false)
        throw Error(ErrorKind::PreconditionViolated, "c1 is not a valid colouring of d1");
    if (verify_colouring(d2, merged_with_isolated_filled(d2, c2)).valid == false)
        throw Error(ErrorKind::PreconditionViolated, "c2 is not a valid colouring of d2");

    Colouring merged(c1.size());
    for (VertexId v = 0; v < c1.size(); ++v) {
        if (c1.assigned(v)) merged.set(v, c1.get(v));
        if (c2.assigned(v)) merged.set(v, c2.get(v));
    }

    std::vector<Arc> arcs = d1.arcs();
    for (const Arc& a : d2.arcs())
        if (!d1.has_arc(a.tail, a.head)) arcs.push_back(a);
    std::sort(arcs.begin(), arcs.end());
    Digraph u(d1.vertex_count(), std::move(arcs));
    auto vr = verify_colouring(u, merged_with_isolated_filled(u, merged));
    if (!vr.valid)
        throw Error(ErrorKind::MergedInvalid, "merged colouring has a monochromatic cycle; " +
                                                  dump_instance(u));
    return merged;
}

namespace {

struct TriangleRoles {
    VertexId a, b, c; // a carries the minority colour in the two-colour case
    int colour_a, colour_bc;
};

TriangleRoles two_colour_roles(const TrianglePrecolouring& pre) {
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (pre.colours[j] == pre.colours[k] && pre.colours[i] != pre.colours[j]) {
            VertexId b = pre.triangle[j], c = pre.triangle[k];
            if (b > c) std::swap(b, c);
            return {pre.triangle[i], b, c, pre.colours[i], pre.colours[j]};
        }
    }
    throw Error(ErrorKind::PreconditionViolated, "precolouring does not use two colours");
}

void validate_extension_input(const Digraph& d, const PlaneEmbedding& e,
                              const TrianglePrecolouring& pre) {
    check_same_graph(d, e);
    if (!e.is_triangulation())
        throw Error(ErrorKind::PreconditionViolated, "not a plane triangulation");
    for (int col : pre.colours)
        if (col != 1 && col != 2)
            throw Error(ErrorKind::PreconditionViolated, "precolour must be 1 or 2");
    std::array<VertexId, 3> want = pre.triangle;
    std::sort(want.begin(), want.end());
    if (want[0] == want[1] || want[1] == want[2])
        throw Error(ErrorKind::PreconditionViolated, "degenerate precoloured triangle");
    std::array<VertexId, 3> got{e.faces[e.outer_face].boundary[0],
                                e.faces[e.outer_face].boundary[1],
                                e.faces[e.outer_face].boundary[2]};
    std::sort(got.begin(), got.end());
    if (got != want)
        throw Error(ErrorKind::PreconditionViolated,
                    "outer face does not match the precoloured triangle");
    if (!digirth(d).at_least(4))
        throw Error(ErrorKind::PreconditionViolated, "digirth below 4");
}

Colouring precolouring_only(const Digraph& d, const TrianglePrecolouring& pre) {
    Colouring c(d.vertex_count());
    for (int i = 0; i < 3; ++i) c.set(pre.triangle[i], pre.colours[i]);
    return c;
}

void mono_facial_triangle_audit(const Digraph& d, const PlaneEmbedding& e, const Colouring& c) {
    for (const Face& f : e.faces) {
        VertexId x = f.boundary[0], y = f.boundary[1], z = f.boundary[2];
        if (c.get(x) != c.get(y) || c.get(y) != c.get(z)) continue;
        bool fwd = d.has_arc(x, y) && d.has_arc(y, z) && d.has_arc(z, x);
        bool bwd = d.has_arc(y, x) && d.has_arc(z, y) && d.has_arc(x, z);
        if (fwd || bwd)
            throw Error(ErrorKind::InternalVerificationFailed,
                        "monochromatic directed facial triangle; " + dump_instance(d));
    }
}

Colouring finish_extension(const Digraph& d, const TrianglePrecolouring& pre, Colouring c) {
    for (int i = 0; i < 3; ++i)
        if (c.get(pre.triangle[i]) != pre.colours[i])
            throw Error(ErrorKind::InternalVerificationFailed,
                        "extension does not honour the precolouring");
    auto vr = verify_colouring(d, c);
    if (!vr.valid)
        throw Error(ErrorKind::InternalVerificationFailed,
                    "extension failed verification; " + dump_instance(d));
    return c;
}

// Two colours on the outer triangle: cut the dual along a Tutte path across
// the facial cycle around the minority vertex, then colour the two sides.
Colouring extend_two_colour(const Digraph& d, const PlaneEmbedding& e,
                            const TrianglePrecolouring& pre, const ColourOptions& opt) {
    ColourTrace& tr = trace_of(opt);
    TriangleRoles roles = two_colour_roles(pre);
    const FaceId t_star = e.outer_face;
    const EdgeId e_ab = e.edge_between(roles.a, roles.b);
    const EdgeId e_ac = e.edge_between(roles.a, roles.c);
    const EdgeId e_bc = e.edge_between(roles.b, roles.c);

    DualGraph dg = dual(e);
    const FaceId b_star = e.other_face(e_ac, t_star);

    TuttePathQuery q;
    q.C = facial_cycle_of_vertex(e, dg, roles.a);
    q.host = std::move(dg.emb);
    q.v = t_star;
    q.e = e_ab; // the dual edge t*c*
    q.u = b_star;
    SearchStats st;
    TuttePathCertificate cert = find_tutte_path(q, opt.search_budget, &st);
    ++tr.tutte_queries;
    ++tr.branch_two_colour;
    tr.expansions += st.expansions;

    Cycle cut;
    cut.nodes = cert.path_vertices;
    cut.edges = cert.path_edges;
    cut.edges.push_back(e_ac); // the dual edge b*t* closes the cycle

    bool crosses_ab = std::find(cut.edges.begin(), cut.edges.end(), e_ab) != cut.edges.end();
    bool crosses_bc = std::find(cut.edges.begin(), cut.edges.end(), e_bc) != cut.edges.end();
    if (!crosses_ab || crosses_bc)
        throw Error(ErrorKind::InternalVerificationFailed,
                    "dual cycle does not cross exactly the edges ab and ac of the triangle");

    CycleSides sides = cycle_sides(e, cut, roles.b);
    if (!sides.inside_mask[roles.a] || sides.inside_mask[roles.c])
        throw Error(ErrorKind::NotACut, "triangle vertices on unexpected sides of the dual cycle");

    Colouring c(d.vertex_count());
    for (VertexId v = 0; v < d.vertex_count(); ++v)
        c.set(v, sides.inside_mask[v] ? roles.colour_a : roles.colour_bc);
    mono_facial_triangle_audit(d, e, c);
    return finish_extension(d, pre, std::move(c));
}

// One colour on the triangle: delete the outer-face vertex from the dual,
// find a Tutte path along the merged face, and colour the enclosed side
// with the opposite colour.
Colouring extend_one_colour(const Digraph& d, const PlaneEmbedding& e,
                            const TrianglePrecolouring& pre, const ColourOptions& opt) {
    ColourTrace& tr = trace_of(opt);
    std::array<VertexId, 3> tri = pre.triangle;
    std::sort(tri.begin(), tri.end());
    const VertexId a = tri[0], b = tri[1], c = tri[2];
    const int mu = pre.colours[0];
    const FaceId t_star = e.outer_face;

    DualGraph dg = dual(e);
    const FaceId a_star = e.other_face(e.edge_between(b, c), t_star);
    const FaceId c_star = e.other_face(e.edge_between(a, b), t_star);

    std::vector<char> keep(dg.emb.n, 1);
    keep[t_star] = 0;
    RestrictedEmbedding rr = restrict_embedding(dg.emb, keep);
    if (!is_biconnected(rr.emb))
        throw Error(ErrorKind::InternalVerificationFailed, "dual minus t* is not 2-connected");
    const VertexId a2 = rr.from_parent_vertex[a_star];
    const VertexId c2 = rr.from_parent_vertex[c_star];
    const VertexId b2 = rr.from_parent_vertex[e.other_face(e.edge_between(a, c), t_star)];

    // the merged face: the unique face containing a*, b*, c*
    FaceId cs_face = -1;
    for (const Face& f : rr.emb.faces) {
        auto has = [&](VertexId x) {
            return std::find(f.boundary.begin(), f.boundary.end(), x) != f.boundary.end();
        };
        if (has(a2) && has(b2) && has(c2)) {
            cs_face = f.id;
            break;
        }
    }
    if (cs_face == -1)
        throw Error(ErrorKind::InternalVerificationFailed, "merged dual face not found");
    Cycle C;
    C.nodes = rr.emb.faces[cs_face].boundary;
    for (Dart dt : rr.emb.faces[cs_face].darts) C.edges.push_back(dt >> 1);
    C.canonicalize();
    const int k = C.length();

    auto cycle_neighbours = [&](VertexId x) {
        // (neighbour, connecting cycle edge), for the unique position of x
        std::vector<std::pair<VertexId, EdgeId>> out;
        for (int i = 0; i < k; ++i)
            if (C.nodes[i] == x) {
                out.push_back({C.nodes[(i + 1) % k], C.edges[i]});
                out.push_back({C.nodes[(i + k - 1) % k], C.edges[(i + k - 1) % k]});
            }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto nbrs_a = cycle_neighbours(a2);
    auto nbrs_c = cycle_neighbours(c2);

    std::string first_failure;
    for (auto [u, closing_edge] : nbrs_a) {
        for (auto [w, eq] : nbrs_c) {
            TuttePathQuery q;
            q.host = rr.emb;
            q.C = C;
            q.v = u;
            q.e = eq; // the edge c*w
            q.u = a2;
            TuttePathCertificate cert;
            SearchStats st;
            try {
                cert = find_tutte_path(q, opt.search_budget, &st);
            } catch (const Error& err) {
                if (err.kind == ErrorKind::SearchExhausted) {
                    if (first_failure.empty()) first_failure = err.what();
                    continue;
                }
                throw;
            }
            ++tr.tutte_queries;
            tr.expansions += st.expansions;
            if (cert.path_edges.size() < 2) continue; // closing edge would not make a cycle

            Cycle cut;
            cut.nodes.reserve(cert.path_vertices.size());
            for (VertexId x : cert.path_vertices) cut.nodes.push_back(rr.to_parent_vertex[x]);
            for (EdgeId ed : cert.path_edges) cut.edges.push_back(rr.to_parent_edge[ed]);
            cut.edges.push_back(rr.to_parent_edge[closing_edge]);

            CycleSides sides = cycle_sides(e, cut, a);
            if (sides.inside_mask[b] || sides.inside_mask[c])
                throw Error(ErrorKind::NotACut, "triangle split by the one-colour cut");

            Colouring col(d.vertex_count());
            for (VertexId v = 0; v < d.vertex_count(); ++v)
                col.set(v, sides.inside_mask[v] ? 3 - mu : mu);
            auto vr = verify_colouring(d, col);
            if (vr.valid) {
                ++tr.branch_one_colour;
                std::ostringstream os;
                os << "u=" << rr.to_parent_vertex[u] << ",w=" << rr.to_parent_vertex[w];
                tr.branch_b_choice = os.str();
                return finish_extension(d, pre, std::move(col));
            }
        }
    }
    throw Error(ErrorKind::InternalVerificationFailed,
                "no neighbour choice produced a valid one-colour extension; " +
                    (first_failure.empty() ? dump_instance(d) : first_failure));
}

} // namespace

Colouring extend_on_triangle(const Digraph& d, const PlaneEmbedding& e,
                             const TrianglePrecolouring& pre, const ColourOptions& opt) {
    validate_extension_input(d, e, pre);
    if (d.vertex_count() == 3)
        return finish_extension(d, pre, precolouring_only(d, pre));
    if (pre.colours[0] == pre.colours[1] && pre.colours[1] == pre.colours[2])
        return extend_one_colour(d, e, pre, opt);
    return extend_two_colour(d, e, pre, opt);
}

namespace {

Colouring lift_colouring(const std::vector<VertexId>& to_parent, const Colouring& local, int n) {
    Colouring c(n);
    for (size_t i = 0; i < to_parent.size(); ++i)
        if (local.assigned(static_cast<VertexId>(i)))
            c.set(to_parent[i], local.get(static_cast<VertexId>(i)));
    return c;
}

Digraph lift_digraph(const std::vector<VertexId>& to_parent, const Digraph& local, int n) {
    std::vector<Arc> arcs;
    arcs.reserve(local.arc_count());
    for (const Arc& a : local.arcs()) arcs.push_back({to_parent[a.tail], to_parent[a.head]});
    std::sort(arcs.begin(), arcs.end());
    return Digraph(n, std::move(arcs));
}

} // namespace

Colouring extend_recursive(const Digraph& d, const PlaneEmbedding& e,
                           const TrianglePrecolouring& pre, const ColourOptions& opt) {
    validate_extension_input(d, e, pre);
    if (d.vertex_count() == 3)
        return finish_extension(d, pre, precolouring_only(d, pre));
    auto sep = find_separating_triangle(e);
    if (!sep) return extend_on_triangle(d, e, pre, opt);
    ++trace_of(opt).separators_used;

    Split sp = split_at_triangle(d, e, *sep);

    TrianglePrecolouring pre0;
    for (int i = 0; i < 3; ++i) {
        VertexId lv = sp.exterior.from_parent[pre.triangle[i]];
        if (lv == -1)
            throw Error(ErrorKind::InternalVerificationFailed, "outer triangle lost in split");
        pre0.triangle[i] = lv;
        pre0.colours[i] = pre.colours[i];
    }
    Colouring c0 = extend_recursive(sp.exterior.d, sp.exterior.emb, pre0, opt);

    TrianglePrecolouring pre1;
    for (int i = 0; i < 3; ++i) {
        VertexId pv = sep->vertices[i];
        pre1.triangle[i] = sp.interior.from_parent[pv];
        pre1.colours[i] = c0.get(sp.exterior.from_parent[pv]);
    }
    Colouring c1 = extend_recursive(sp.interior.d, sp.interior.emb, pre1, opt);

    const int n = d.vertex_count();
    Digraph d0 = lift_digraph(sp.exterior.to_parent, sp.exterior.d, n);
    Digraph d1 = lift_digraph(sp.interior.to_parent, sp.interior.d, n);
    Colouring g0 = lift_colouring(sp.exterior.to_parent, c0, n);
    Colouring g1 = lift_colouring(sp.interior.to_parent, c1, n);
    std::vector<VertexId> overlap(sep->vertices.begin(), sep->vertices.end());
    Colouring merged = combine_colourings(d0, g0, d1, g1, overlap);
    return finish_extension(d, pre, std::move(merged));
}

namespace {

// Processes blocks in block-cut-tree order so every new block shares at
// most one (cut) vertex with the part already coloured; a colour swap on
// the whole block fixes any disagreement there.
template <typename BlockColourFn>
Colouring colour_blockwise(const Digraph& d, const ColourOptions& opt, BlockColourFn&& fn) {
    const int n = d.vertex_count();
    BlockDecomposition bd = blocks(d);
    trace_of(opt).blocks = static_cast<int>(bd.blocks.size());

    const int nb = static_cast<int>(bd.blocks.size());
    std::vector<std::vector<int>> touching(n);
    for (int i = 0; i < nb; ++i)
        for (VertexId pv : bd.blocks[i].to_parent) touching[pv].push_back(i);
    std::vector<int> order;
    std::vector<char> seen(nb, 0);
    for (int root = 0; root < nb; ++root) {
        if (seen[root]) continue;
        std::deque<int> q{root};
        seen[root] = 1;
        while (!q.empty()) {
            int bi = q.front();
            q.pop_front();
            order.push_back(bi);
            for (VertexId pv : bd.blocks[bi].to_parent)
                for (int bj : touching[pv])
                    if (!seen[bj]) {
                        seen[bj] = 1;
                        q.push_back(bj);
                    }
        }
    }

    Colouring acc(n);
    Digraph acc_d(n, {});
    std::vector<Arc> acc_arcs;
    for (int bi : order) {
        const Block& b = bd.blocks[bi];
        Colouring local = fn(b);
        Colouring lifted = lift_colouring(b.to_parent, local, n);
        std::vector<VertexId> shared;
        for (VertexId pv : b.to_parent)
            if (acc.assigned(pv)) shared.push_back(pv);
        if (shared.size() > 1)
            throw Error(ErrorKind::InternalVerificationFailed,
                        "block shares more than one vertex with coloured part");
        if (shared.size() == 1 && acc.get(shared[0]) != lifted.get(shared[0]))
            lifted.swap_colours();
        Digraph bg = lift_digraph(b.to_parent, b.d, n);
        acc = combine_colourings(acc_d, acc, bg, lifted, shared);
        for (const Arc& a : bg.arcs()) acc_arcs.push_back(a);
        std::sort(acc_arcs.begin(), acc_arcs.end());
        acc_d = Digraph(n, acc_arcs);
    }
    for (VertexId v = 0; v < n; ++v)
        if (!acc.assigned(v)) acc.set(v, 1);
    return acc;
}

TrianglePrecolouring outer_all_one(const PlaneEmbedding& emb) {
    const Face& f = emb.faces[emb.outer_face];
    if (f.size() != 3)
        throw Error(ErrorKind::InternalVerificationFailed, "outer face not a triangle");
    TrianglePrecolouring pre;
    for (int i = 0; i < 3; ++i) {
        pre.triangle[i] = f.boundary[i];
        pre.colours[i] = 1;
    }
    return pre;
}

Colouring colour_block_digirth4(const Block& b, const PlaneEmbedding* parent_emb,
                                const std::vector<VertexId>* to_parent,
                                const ColourOptions& opt) {
    const int bn = b.d.vertex_count();
    if (bn == 2) return Colouring::constant(2, 1); // single-arc block
    PlaneEmbedding emb;
    if (parent_emb) {
        std::vector<char> keep(parent_emb->n, 0);
        for (VertexId pv : *to_parent) keep[pv] = 1;
        emb = restrict_embedding(*parent_emb, keep).emb;
    } else {
        emb = compute_embedding(b.d);
    }
    Stellation st = stellate(b.d, emb);
    Colouring c = extend_recursive(st.d, st.emb, outer_all_one(st.emb), opt);
    return c.truncated(bn);
}

Colouring apex_on_triangulation(const Digraph& d, const PlaneEmbedding& e, VertexId v0,
                                const ColourOptions& opt);

Colouring apex_base_case(const Digraph& d, const PlaneEmbedding& e, VertexId v0,
                         const ColourOptions& opt) {
    ColourTrace& tr = trace_of(opt);
    DualGraph dg = dual(e);
    Cycle C = facial_cycle_of_vertex(e, dg, v0);

    TuttePathQuery q;
    q.host = dg.emb;
    q.C = C;
    q.u = C.nodes[0];          // u*
    q.v = C.nodes[1];          // v*
    q.e = C.edges[1];          // the edge v*w*
    const EdgeId closing = C.edges[0]; // the edge u*v*
    SearchStats st;
    TuttePathCertificate cert = find_tutte_path(q, opt.search_budget, &st);
    ++tr.tutte_queries;
    ++tr.branch_apex;
    tr.expansions += st.expansions;

    Cycle cut;
    cut.nodes = cert.path_vertices;
    cut.edges = cert.path_edges;
    cut.edges.push_back(closing);

    // in the dual of a triangulation without separating triangles, every
    // 2-attached component of the cut cycle must be a single edge
    {
        SubgraphRef sub;
        sub.vertices.assign(dg.emb.n, 0);
        sub.edges.assign(dg.emb.edge_count(), 0);
        for (VertexId x : cut.nodes) sub.vertices[x] = 1;
        for (EdgeId ed : cut.edges) sub.edges[ed] = 1;
        for (const HComponent& comp : h_components(dg.emb, sub))
            if (comp.attachment_count() == 2 && comp.kind != HComponent::Kind::ChordEdge)
                throw Error(ErrorKind::InternalVerificationFailed,
                            "2-attached cycle component is not a single edge");
    }

    CycleSides sides = cycle_sides(e, cut, 0);
    Colouring c(d.vertex_count());
    for (VertexId v = 0; v < d.vertex_count(); ++v)
        c.set(v, sides.inside_mask[v] ? 1 : 2);
    auto vr = verify_colouring(d, c);
    if (!vr.valid)
        throw Error(ErrorKind::InternalVerificationFailed,
                    "apex base case failed verification; " + dump_instance(d));
    return c;
}

Colouring apex_on_triangulation(const Digraph& d, const PlaneEmbedding& e, VertexId v0,
                                const ColourOptions& opt) {
    const int n = d.vertex_count();
    if (n == 3) {
        // lone triangle: separating v0 from the other two breaks any
        // directed 3-cycle, and a 2-vertex class is always acyclic
        Colouring c(n);
        for (VertexId v = 0; v < n; ++v) c.set(v, v == v0 ? 1 : 2);
        auto vr = verify_colouring(d, c);
        if (!vr.valid)
            throw Error(ErrorKind::InternalVerificationFailed, "triangle apex colouring");
        return c;
    }

    auto seps = list_separating_triangles(e);
    if (seps.empty()) return apex_base_case(d, e, v0, opt);

    const SeparatingTriangle* chosen = nullptr;
    for (const auto& s : seps)
        if (s.vertices[0] != v0 && s.vertices[1] != v0 && s.vertices[2] != v0) {
            chosen = &s;
            break;
        }

    if (!chosen) {
        // every separating triangle passes through v0: exhaustive search on
        // this piece, flagged in the report
        trace_of(opt).fallback_engaged = true;
        auto c = oracle::brute_force_two_colouring(d);
        if (!c)
            throw Error(ErrorKind::InternalVerificationFailed,
                        "fallback found no 2-colouring; " + dump_instance(d));
        return *c;
    }

    ++trace_of(opt).separators_used;
    Split sp = split_at_triangle(d, e, *chosen);

    bool v0_inside = std::find(chosen->inside.begin(), chosen->inside.end(), v0) !=
                     chosen->inside.end();
    SplitPart& with_v0 = v0_inside ? sp.interior : sp.exterior;
    SplitPart& other = v0_inside ? sp.exterior : sp.interior;

    Colouring cv0 = apex_on_triangulation(with_v0.d, with_v0.emb, with_v0.from_parent[v0], opt);

    // the other part avoids v0, hence has no directed triangle at all
    if (!digirth(other.d).at_least(4))
        throw Error(ErrorKind::InternalVerificationFailed,
                    "part avoiding v0 has a short directed cycle");
    PlaneEmbedding other_emb = other.emb;
    {
        std::array<VertexId, 3> lt;
        for (int i = 0; i < 3; ++i) lt[i] = other.from_parent[chosen->vertices[i]];
        std::sort(lt.begin(), lt.end());
        FaceId tf = -1;
        for (const Face& f : other_emb.faces) {
            if (f.size() != 3) continue;
            std::array<VertexId, 3> bb{f.boundary[0], f.boundary[1], f.boundary[2]};
            std::sort(bb.begin(), bb.end());
            if (bb == lt) {
                tf = f.id;
                break;
            }
        }
        if (tf == -1)
            throw Error(ErrorKind::InternalVerificationFailed,
                        "separating triangle not facial in the v0-free part");
        set_outer_face(other_emb, tf);
    }
    TrianglePrecolouring pre;
    for (int i = 0; i < 3; ++i) {
        pre.triangle[i] = other.from_parent[chosen->vertices[i]];
        pre.colours[i] = cv0.get(with_v0.from_parent[chosen->vertices[i]]);
    }
    Colouring cother = extend_recursive(other.d, other_emb, pre, opt);

    const int pn = d.vertex_count();
    Digraph dv = lift_digraph(with_v0.to_parent, with_v0.d, pn);
    Digraph do_ = lift_digraph(other.to_parent, other.d, pn);
    Colouring gv = lift_colouring(with_v0.to_parent, cv0, pn);
    Colouring go = lift_colouring(other.to_parent, cother, pn);
    std::vector<VertexId> overlap(chosen->vertices.begin(), chosen->vertices.end());
    return combine_colourings(dv, gv, do_, go, overlap);
}

Colouring apex_block(const Block& b, VertexId v0_local, const PlaneEmbedding* parent_emb,
                     const std::vector<VertexId>* to_parent, const ColourOptions& opt) {
    const int bn = b.d.vertex_count();
    if (bn == 2) return Colouring::constant(2, 1);
    PlaneEmbedding emb;
    if (parent_emb) {
        std::vector<char> keep(parent_emb->n, 0);
        for (VertexId pv : *to_parent) keep[pv] = 1;
        emb = restrict_embedding(*parent_emb, keep).emb;
    } else {
        emb = compute_embedding(b.d);
    }
    Stellation st = stellate(b.d, emb);
    Colouring c = apex_on_triangulation(st.d, st.emb, v0_local, opt);
    return c.truncated(bn);
}

Colouring colour_digirth4_impl(const Digraph& d, const PlaneEmbedding* emb,
                               const ColourOptions& opt) {
    if (!is_oriented(d))
        throw Error(ErrorKind::DigirthTooSmall, "input has a digon (digirth 2)");
    if (!digirth(d).at_least(4))
        throw Error(ErrorKind::DigirthTooSmall, "digirth below 4");
    if (emb) check_same_graph(d, *emb);
    Colouring c = colour_blockwise(d, opt, [&](const Block& b) {
        return colour_block_digirth4(b, emb, &b.to_parent, opt);
    });
    auto vr = verify_colouring(d, c);
    if (!vr.valid)
        throw Error(ErrorKind::InternalVerificationFailed,
                    "final colouring failed verification; " + dump_instance(d));
    return c;
}

} // namespace

Colouring colour_digirth4(const Digraph& d, const ColourOptions& opt) {
    return colour_digirth4_impl(d, nullptr, opt);
}

Colouring colour_digirth4_with_embedding(const Digraph& d, const PlaneEmbedding& e,
                                         const ColourOptions& opt) {
    return colour_digirth4_impl(d, &e, opt);
}

Colouring colour_with_apex(const ApexInput& a, const ColourOptions& opt) {
    const Digraph& d = a.d;
    if (a.v0 < 0 || a.v0 >= d.vertex_count())
        throw Error(ErrorKind::PreconditionViolated, "v0 out of range");
    if (!is_oriented(d))
        throw Error(ErrorKind::PreconditionViolated, "input is not an oriented graph");
    for (const auto& t : directed_triangles(d))
        if (t[0] != a.v0 && t[1] != a.v0 && t[2] != a.v0)
            throw Error(ErrorKind::PreconditionViolated,
                        "directed triangle avoiding v0: " + std::to_string(t[0]) + " " +
                            std::to_string(t[1]) + " " + std::to_string(t[2]));

    Colouring c = colour_blockwise(d, opt, [&](const Block& b) {
        VertexId v0_local = -1;
        for (size_t i = 0; i < b.to_parent.size(); ++i)
            if (b.to_parent[i] == a.v0) v0_local = static_cast<VertexId>(i);
        if (v0_local == -1) return colour_block_digirth4(b, nullptr, &b.to_parent, opt);
        return apex_block(b, v0_local, nullptr, &b.to_parent, opt);
    });
    auto vr = verify_colouring(d, c);
    if (!vr.valid)
        throw Error(ErrorKind::InternalVerificationFailed,
                    "apex colouring failed verification; " + dump_instance(d));
    return c;
}

} // namespace dichroma
