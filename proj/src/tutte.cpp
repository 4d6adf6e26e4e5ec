#include "dichroma/tutte.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace dichroma {

std::vector<HComponent> h_components(const PlaneEmbedding& g, const SubgraphRef& h) {
    const int n = g.n, m = g.edge_count();
    std::vector<HComponent> out;

    for (EdgeId i = 0; i < m; ++i) {
        if (h.edges[i]) continue;
        VertexId a = g.edges[i].u, b = g.edges[i].v;
        if (h.vertices[a] && h.vertices[b]) {
            HComponent c;
            c.kind = HComponent::Kind::ChordEdge;
            c.edges = {i};
            c.attachments = {std::min(a, b), std::max(a, b)};
            out.push_back(std::move(c));
        }
    }

    std::vector<int> comp(n, -1);
    std::vector<std::vector<VertexId>> members;
    for (VertexId s = 0; s < n; ++s) {
        if (h.vertices[s] || comp[s] != -1) continue;
        int id = static_cast<int>(members.size());
        members.emplace_back();
        comp[s] = id;
        members[id].push_back(s);
        std::deque<VertexId> q{s};
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            for (Dart d : g.rotation[u]) {
                VertexId w = g.dart_head(d);
                if (h.vertices[w] || comp[w] != -1) continue;
                comp[w] = id;
                members[id].push_back(w);
                q.push_back(w);
            }
        }
    }
    for (auto& mem : members) {
        HComponent c;
        c.kind = HComponent::Kind::BridgeComponent;
        std::sort(mem.begin(), mem.end());
        c.internal_vertices = mem;
        std::vector<char> att(n, 0);
        for (VertexId u : mem)
            for (Dart d : g.rotation[u]) {
                EdgeId id = d >> 1;
                VertexId w = g.dart_head(d);
                if (h.vertices[w]) {
                    att[w] = 1;
                    c.edges.push_back(id);
                } else if (w > u || (w == u && !(d & 1))) {
                    c.edges.push_back(id); // internal edge once
                }
            }
        std::sort(c.edges.begin(), c.edges.end());
        c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
        for (VertexId w = 0; w < n; ++w)
            if (att[w]) c.attachments.push_back(w);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

bool component_contains_c_edge(const HComponent& c, const std::vector<char>& c_edge) {
    return std::any_of(c.edges.begin(), c.edges.end(),
                       [&](EdgeId e) { return c_edge[e]; });
}

std::vector<char> c_edge_mask(const PlaneEmbedding& host, const Cycle& C) {
    std::vector<char> mask(host.edge_count(), 0);
    for (EdgeId e : C.edges) mask[e] = 1;
    return mask;
}

void validate_query(const TuttePathQuery& q) {
    const PlaneEmbedding& g = q.host;
    if (q.v < 0 || q.v >= g.n || q.u < 0 || q.u >= g.n || q.u == q.v)
        throw Error(ErrorKind::PreconditionViolated, "query endpoints invalid");
    if (q.e < 0 || q.e >= g.edge_count())
        throw Error(ErrorKind::PreconditionViolated, "query edge invalid");
    if (!is_biconnected(g))
        throw Error(ErrorKind::PreconditionViolated, "host is not 2-connected");
    bool facial = false;
    for (const Face& f : g.faces)
        if (f.size() == q.C.length() && cycle_matches_face(g, q.C, f.id)) {
            facial = true;
            break;
        }
    if (!facial)
        throw Error(ErrorKind::PreconditionViolated, "C is not a facial cycle of the host");
    if (std::find(q.C.nodes.begin(), q.C.nodes.end(), q.v) == q.C.nodes.end())
        throw Error(ErrorKind::PreconditionViolated, "v is not on C");
    if (std::find(q.C.edges.begin(), q.C.edges.end(), q.e) == q.C.edges.end())
        throw Error(ErrorKind::PreconditionViolated, "e is not on C");
}

struct PathCheck {
    bool ok = false;
    std::vector<HComponent> components;
    std::vector<char> flags;
};

// conditions (i) and (ii) for a completed path
PathCheck conditions_on_path(const PlaneEmbedding& g, const std::vector<char>& c_edge,
                             const std::vector<VertexId>& pv, const std::vector<EdgeId>& pe) {
    SubgraphRef h;
    h.vertices.assign(g.n, 0);
    h.edges.assign(g.edge_count(), 0);
    for (VertexId x : pv) h.vertices[x] = 1;
    for (EdgeId x : pe) h.edges[x] = 1;
    PathCheck r;
    r.components = h_components(g, h);
    r.ok = true;
    for (const HComponent& c : r.components) {
        bool has_c = component_contains_c_edge(c, c_edge);
        r.flags.push_back(has_c ? 1 : 0);
        if (c.attachment_count() > 3) r.ok = false;
        if (has_c && c.attachment_count() > 2) r.ok = false;
    }
    return r;
}

} // namespace

CertificateCheck check_certificate(const TuttePathQuery& q, const TuttePathCertificate& cert) {
    CertificateCheck r;
    const PlaneEmbedding& g = q.host;
    const auto& pv = cert.path_vertices;
    const auto& pe = cert.path_edges;
    auto fail = [&](const std::string& s) { r.violations.push_back(s); };

    if (pv.empty() || pe.size() + 1 != pv.size()) {
        fail("malformed path");
        return r;
    }
    if (pv.front() != q.u) fail("path does not start at u");
    if (pv.back() != q.v) fail("path does not end at v");
    {
        auto sorted = pv;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail("path is not simple");
    }
    for (size_t i = 0; i < pe.size(); ++i) {
        EdgeId e = pe[i];
        if (e < 0 || e >= g.edge_count()) {
            fail("path edge out of range");
            return r;
        }
        VertexId a = g.edges[e].u, b = g.edges[e].v;
        if (!((a == pv[i] && b == pv[i + 1]) || (b == pv[i] && a == pv[i + 1])))
            fail("path edge " + std::to_string(e) + " does not join consecutive vertices");
    }
    {
        auto se = pe;
        std::sort(se.begin(), se.end());
        if (std::adjacent_find(se.begin(), se.end()) != se.end()) fail("path repeats an edge");
    }
    if (std::find(pe.begin(), pe.end(), q.e) == pe.end())
        fail("missing required edge e");

    if (!r.violations.empty()) return r;

    auto c_edge = c_edge_mask(g, q.C);
    PathCheck pc = conditions_on_path(g, c_edge, pv, pe);
    for (size_t i = 0; i < pc.components.size(); ++i) {
        const HComponent& c = pc.components[i];
        if (c.attachment_count() > 3) {
            std::ostringstream os;
            os << "condition(i): component with " << c.attachment_count() << " attachments";
            fail(os.str());
        }
        if (pc.flags[i] && c.attachment_count() > 2) {
            std::ostringstream os;
            os << "condition(ii): component containing an edge of C with "
               << c.attachment_count() << " attachments";
            fail(os.str());
        }
    }
    if (pc.components != cert.components)
        fail("stored components disagree with recomputation");
    else if (pc.flags != cert.contains_edge_of_C)
        fail("stored C-edge flags disagree with recomputation");

    r.valid = r.violations.empty();
    return r;
}

namespace {

struct Searcher {
    const PlaneEmbedding& g;
    const TuttePathQuery& q;
    std::vector<char> c_edge;
    std::vector<std::vector<Dart>> children; // per vertex, C-edges first
    long long budget;
    SearchStats* stats;

    std::vector<char> on_path;
    std::vector<VertexId> pv;
    std::vector<EdgeId> pe;
    bool used_e = false;
    PathCheck result;

    // scratch, reused across calls
    std::vector<char> live_, frozen_, att_;
    std::deque<VertexId> bfs_;

    Searcher(const TuttePathQuery& q_, long long budget_, SearchStats* stats_)
        : g(q_.host), q(q_), budget(budget_), stats(stats_) {
        c_edge = c_edge_mask(g, q.C);
        children.resize(g.n);
        for (VertexId v = 0; v < g.n; ++v) {
            children[v] = g.rotation[v];
            std::stable_partition(children[v].begin(), children[v].end(),
                                  [&](Dart d) { return c_edge[d >> 1]; });
        }
        on_path.assign(g.n, 0);
        live_.assign(g.n, 0);
        frozen_.assign(g.n, 0);
        att_.assign(g.n, 0);
    }

    // Pruning. The future path can only grow from head into one component
    // of the free region: every other component keeps its attachment set to
    // the end, so a condition it violates now is final, and at most one
    // violating component is repairable by entering it. The endpoint v acts
    // as a wall (it is terminal), as does the far endpoint of e while e is
    // unused and incident to v (it is forced to be the penultimate vertex).
    bool viable(VertexId head) {
        const bool e_at_v = !used_e && (g.edges[q.e].u == q.v || g.edges[q.e].v == q.v);
        const VertexId pen =
            e_at_v ? (g.edges[q.e].u == q.v ? g.edges[q.e].v : g.edges[q.e].u) : -1;
        auto is_wall = [&](VertexId w) { return w == q.v || w == pen; };

        std::fill(live_.begin(), live_.end(), 0);
        bfs_.clear();
        auto seed = [&](VertexId x) {
            for (Dart d : g.rotation[x]) {
                VertexId w = g.dart_head(d);
                if (!on_path[w] && !is_wall(w) && !live_[w] && w != head) {
                    live_[w] = 1;
                    bfs_.push_back(w);
                }
            }
        };
        seed(head);
        while (!bfs_.empty()) {
            VertexId x = bfs_.front();
            bfs_.pop_front();
            seed(x);
        }

        // e must stay playable, and v must stay reachable; pen is a wall,
        // so its test is adjacency to the live region
        if (!used_e) {
            VertexId a = g.edges[q.e].u, b = g.edges[q.e].v;
            if (e_at_v) {
                if (pen != head) {
                    if (on_path[pen]) return false;
                    bool pen_ok = false;
                    for (Dart d : g.rotation[pen]) {
                        VertexId w = g.dart_head(d);
                        if (w == head || (!on_path[w] && !is_wall(w) && live_[w])) pen_ok = true;
                    }
                    if (!pen_ok) return false;
                }
            } else {
                if (a != head && (on_path[a] || !live_[a])) return false;
                if (b != head && (on_path[b] || !live_[b])) return false;
            }
        }
        if (!e_at_v) {
            bool v_ok = false;
            for (Dart d : g.rotation[q.v]) {
                VertexId w = g.dart_head(d);
                if (w == head || (!on_path[w] && !is_wall(w) && live_[w])) v_ok = true;
            }
            if (!v_ok) return false;
        }

        // components of the free region minus head; live ones touch head
        std::fill(frozen_.begin(), frozen_.end(), 0);
        int bad_live = 0;
        VertexId bad_rep = -1; // any vertex of the single bad live component
        for (VertexId s = 0; s < g.n; ++s) {
            if (on_path[s] || is_wall(s) || s == head || frozen_[s]) continue;
            std::fill(att_.begin(), att_.end(), 0);
            int attach = 0;
            bool has_c = false;
            bool is_live = live_[s];
            bfs_.clear();
            bfs_.push_back(s);
            frozen_[s] = 1;
            while (!bfs_.empty()) {
                VertexId x = bfs_.front();
                bfs_.pop_front();
                for (Dart d : g.rotation[x]) {
                    VertexId w = g.dart_head(d);
                    if (c_edge[d >> 1]) has_c = true;
                    if (on_path[w] || is_wall(w) || w == head) {
                        if (!att_[w]) {
                            att_[w] = 1;
                            ++attach;
                        }
                    } else if (!frozen_[w]) {
                        frozen_[w] = 1;
                        bfs_.push_back(w);
                    }
                }
            }
            bool bad = attach > 3 || (has_c && attach > 2);
            if (!bad) continue;
            if (!is_live) return false; // unreachable and already violating
            if (++bad_live >= 2) return false;
            bad_rep = s;
        }
        if (bad_live == 1) {
            // the path is confined to one component: it must be the bad one,
            // and e and v must still be servable from inside it
            std::fill(att_.begin(), att_.end(), 0); // reuse as membership mask
            bfs_.clear();
            bfs_.push_back(bad_rep);
            att_[bad_rep] = 1;
            while (!bfs_.empty()) {
                VertexId x = bfs_.front();
                bfs_.pop_front();
                for (Dart d : g.rotation[x]) {
                    VertexId w = g.dart_head(d);
                    if (!on_path[w] && !is_wall(w) && w != head && !att_[w]) {
                        att_[w] = 1;
                        bfs_.push_back(w);
                    }
                }
            }
            auto in_bad_or_head = [&](VertexId w) { return w == head || att_[w]; };
            auto adj_bad_or_head = [&](VertexId w) {
                for (Dart d : g.rotation[w])
                    if (in_bad_or_head(g.dart_head(d))) return true;
                return false;
            };
            if (!used_e) {
                VertexId a = g.edges[q.e].u, b = g.edges[q.e].v;
                if (e_at_v) {
                    if (pen != head && !adj_bad_or_head(pen)) return false;
                } else {
                    if (!in_bad_or_head(a) || !in_bad_or_head(b)) return false;
                }
            }
            if (!e_at_v) {
                if (!adj_bad_or_head(q.v)) return false;
            } else {
                if (pen != head && !adj_bad_or_head(pen)) return false;
            }
        }
        return true;
    }

    bool dfs(VertexId head) {
        if (stats && ++stats->expansions > budget)
            throw Error(ErrorKind::SearchBudgetExceeded,
                        "tutte search exceeded " + std::to_string(budget) + " expansions");
        if (head == q.v) {
            if (!used_e) return false;
            PathCheck pc = conditions_on_path(g, c_edge, pv, pe);
            if (pc.ok) {
                result = std::move(pc);
                return true;
            }
            return false;
        }
        if (!viable(head)) return false;
        for (Dart d : children[head]) {
            VertexId w = g.dart_head(d);
            EdgeId id = d >> 1;
            if (on_path[w]) continue;
            if (w == q.v && !used_e && id != q.e) continue;
            bool was_used = used_e;
            if (id == q.e) used_e = true;
            on_path[w] = 1;
            pv.push_back(w);
            pe.push_back(id);
            if (dfs(w)) return true;
            pe.pop_back();
            pv.pop_back();
            on_path[w] = 0;
            used_e = was_used;
        }
        return false;
    }
};

} // namespace

TuttePathCertificate find_tutte_path(const TuttePathQuery& q, long long budget,
                                     SearchStats* stats) {
    validate_query(q);
    SearchStats local;
    if (!stats) stats = &local;
    Searcher s(q, budget, stats);
    s.on_path[q.u] = 1;
    s.pv.push_back(q.u);
    if (!s.dfs(q.u))
        throw Error(ErrorKind::SearchExhausted,
                    "no Tutte path found; the query must violate a precondition");
    TuttePathCertificate cert;
    cert.path_vertices = s.pv;
    cert.path_edges = s.pe;
    cert.components = std::move(s.result.components);
    cert.contains_edge_of_C = std::move(s.result.flags);
    return cert;
}

} // namespace dichroma
