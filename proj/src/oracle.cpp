#include "dichroma/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace dichroma::oracle {

uint64_t Rng::next() {
    uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int Rng::uniform(int n) {
    if (n <= 0) throw Error(ErrorKind::PreconditionViolated, "uniform(n<=0)");
    return static_cast<int>(next() % static_cast<uint64_t>(n));
}

bool is_acyclic_scc(const Digraph& d, const std::vector<char>& keep) {
    // iterative Tarjan; acyclic iff every strongly connected component is a
    // single vertex (loops cannot occur)
    const int n = d.vertex_count();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> onstack(n, 0);
    std::vector<VertexId> stack;
    int counter = 0;
    for (VertexId root = 0; root < n; ++root) {
        if (!keep[root] || index[root] != -1) continue;
        std::vector<std::pair<VertexId, size_t>> call;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        onstack[root] = 1;
        while (!call.empty()) {
            auto& [u, i] = call.back();
            const auto& succ = d.out(u);
            bool descended = false;
            while (i < succ.size()) {
                VertexId w = succ[i++];
                if (!keep[w]) continue;
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    onstack[w] = 1;
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (onstack[w]) low[u] = std::min(low[u], index[w]);
            }
            if (descended) continue;
            if (call.back().second >= succ.size()) {
                call.pop_back();
                if (!call.empty()) {
                    VertexId p = call.back().first;
                    low[p] = std::min(low[p], low[u]);
                }
                if (low[u] == index[u]) {
                    int size = 0;
                    VertexId w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        onstack[w] = 0;
                        ++size;
                    } while (w != u);
                    if (size > 1) return false;
                }
            }
        }
    }
    return true;
}

bool valid_by_scc(const Digraph& d, const Colouring& c) {
    const int n = d.vertex_count();
    for (int colour : {1, 2}) {
        std::vector<char> keep(n, 0);
        for (VertexId v = 0; v < n; ++v)
            if (c.get(v) == colour) keep[v] = 1;
        if (!is_acyclic_scc(d, keep)) return false;
    }
    return true;
}

std::optional<Colouring> brute_force_two_colouring(const Digraph& d) {
    const int n = d.vertex_count();
    if (n > 24)
        throw Error(ErrorKind::TooLarge, "brute force limited to n <= 24");
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        Colouring c(n);
        for (VertexId v = 0; v < n; ++v) c.set(v, (mask >> v) & 1 ? 2 : 1);
        if (valid_by_scc(d, c)) return c;
    }
    return std::nullopt;
}

UndirectedGraph underlying(const PlaneEmbedding& e) {
    UndirectedGraph g;
    g.n = e.n;
    for (const Edge& ed : e.edges)
        g.edges.push_back({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
    return g;
}

void for_each_orientation(const UndirectedGraph& g, int digirth_min,
                          const std::function<void(const Digraph&)>& fn) {
    const int m = static_cast<int>(g.edges.size());
    if (m > 24)
        throw Error(ErrorKind::TooLarge, "orientation enumeration limited to m <= 24");
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<Arc> arcs(m);
        for (int i = 0; i < m; ++i)
            arcs[i] = (mask >> i) & 1 ? Arc{g.edges[i].v, g.edges[i].u}
                                      : Arc{g.edges[i].u, g.edges[i].v};
        Digraph d(g.n, std::move(arcs));
        if (digirth(d).at_least(digirth_min)) fn(d);
    }
}

std::vector<Digraph> enumerate_orientations(const UndirectedGraph& g, int digirth_min) {
    std::vector<Digraph> out;
    for_each_orientation(g, digirth_min, [&](const Digraph& d) { out.push_back(d); });
    return out;
}

Digraph orient_with_digirth(const UndirectedGraph& g, int digirth_min, Rng& rng) {
    const int m = static_cast<int>(g.edges.size());
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<Arc> arcs(m);
        for (int i = 0; i < m; ++i)
            arcs[i] = rng.coin() ? Arc{g.edges[i].v, g.edges[i].u}
                                 : Arc{g.edges[i].u, g.edges[i].v};
        for (int repair = 0; repair <= 10 * m; ++repair) {
            std::sort(arcs.begin(), arcs.end());
            Digraph d(g.n, arcs);
            auto cyc = shortest_directed_cycle(d);
            if (!cyc || static_cast<int>(cyc->size()) >= digirth_min) return d;
            // flip the lexicographically first arc of the cycle
            Arc flip{-1, -1};
            const auto& cv = *cyc;
            for (size_t i = 0; i < cv.size(); ++i) {
                Arc a{cv[i], cv[(i + 1) % cv.size()]};
                if (flip.tail == -1 || a < flip) flip = a;
            }
            for (Arc& a : arcs)
                if (a == flip) {
                    a = {flip.head, flip.tail};
                    break;
                }
        }
    }
    throw Error(ErrorKind::GenerationFailed, "digirth repair budget exhausted; reseed");
}

PlaneEmbedding k4_embedding() {
    Digraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    return compute_embedding(k4);
}

PlaneEmbedding grow_stacked_triangulation(int n, Rng& rng) {
    if (n == 3) {
        Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
        return compute_embedding(tri);
    }
    if (n < 3) throw Error(ErrorKind::PreconditionViolated, "n >= 3 required");
    PlaneEmbedding e = k4_embedding();
    while (e.n < n) {
        FaceId f = rng.uniform(e.face_count());
        e = stellate_faces(e, {f}).emb;
    }
    return e;
}

namespace {

bool connected_under_mask(const UndirectedGraph& g, const std::vector<char>& keep_edge) {
    std::vector<std::vector<VertexId>> adj(g.n);
    for (size_t i = 0; i < g.edges.size(); ++i)
        if (keep_edge[i]) {
            adj[g.edges[i].u].push_back(g.edges[i].v);
            adj[g.edges[i].v].push_back(g.edges[i].u);
        }
    std::vector<char> seen(g.n, 0);
    std::deque<VertexId> q{0};
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (VertexId w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push_back(w);
            }
    }
    return cnt == g.n;
}

} // namespace

Instance random_instance(const InstanceSpec& spec) {
    if (spec.n < 3 || spec.digirth_min < 3 || spec.digirth_min > 5)
        throw Error(ErrorKind::PreconditionViolated, "instance spec out of range");
    Rng rng(spec.seed);
    PlaneEmbedding emb = grow_stacked_triangulation(spec.n, rng);
    if (spec.shape == InstanceShape::AnyPlanar && emb.edge_count() > 6) {
        UndirectedGraph g = underlying(emb);
        const int m = static_cast<int>(g.edges.size());
        std::vector<char> keep(m, 1);
        int removed = 0;
        const int target = m / 4;
        for (int tries = 0; tries < 3 * m && removed < target; ++tries) {
            int i = rng.uniform(m);
            if (!keep[i]) continue;
            keep[i] = 0;
            if (connected_under_mask(g, keep))
                ++removed;
            else
                keep[i] = 1;
        }
        if (removed > 0) emb = delete_edges(emb, keep);
    }
    UndirectedGraph g = underlying(emb);
    Digraph d = orient_with_digirth(g, spec.digirth_min, rng);
    return {std::move(d), std::move(emb)};
}

PlaneEmbedding ring_triangulation(int ring_len, int rings) {
    if (ring_len < 4 || rings < 1)
        throw Error(ErrorKind::PreconditionViolated, "ring_len >= 4 and rings >= 1 required");
    const int L = ring_len, K = rings;
    const int n = K * L + 2;
    const VertexId top = 0, bottom = n - 1;
    auto ring = [&](int r, int i) { return 1 + r * L + ((i % L) + L) % L; };

    std::vector<std::vector<VertexId>> nbrs(n);
    for (int i = L - 1; i >= 0; --i) nbrs[top].push_back(ring(0, i));
    for (int r = 0; r < K; ++r)
        for (int i = 0; i < L; ++i) {
            auto& out = nbrs[ring(r, i)];
            out.push_back(ring(r, i - 1));
            if (r == 0) {
                out.push_back(top);
            } else {
                out.push_back(ring(r - 1, i - 1));
                out.push_back(ring(r - 1, i));
            }
            out.push_back(ring(r, i + 1));
            if (r == K - 1) {
                out.push_back(bottom);
            } else {
                out.push_back(ring(r + 1, i + 1));
                out.push_back(ring(r + 1, i));
            }
        }
    for (int i = 0; i < L; ++i) nbrs[bottom].push_back(ring(K - 1, i));
    return embedding_from_neighbour_lists(n, nbrs);
}

namespace {

struct CanonicalForm {
    uint64_t code;
    std::vector<Edge> edges; // relabeled by the minimizing permutation, sorted
};

CanonicalForm canonical_form(int n, const std::vector<Edge>& edges) {
    if (n > 8) throw Error(ErrorKind::TooLarge, "canonical form limited to n <= 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~0ULL;
    std::vector<int> best_perm = perm;
    do {
        uint64_t code = 0;
        for (const Edge& e : edges) {
            int a = perm[e.u], b = perm[e.v];
            code |= 1ULL << (a * 8 + b);
            code |= 1ULL << (b * 8 + a);
        }
        if (code < best) {
            best = code;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CanonicalForm cf;
    cf.code = best;
    for (const Edge& e : edges) {
        int a = best_perm[e.u], b = best_perm[e.v];
        cf.edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(cf.edges.begin(), cf.edges.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    return cf;
}

} // namespace

uint64_t canonical_graph_code(int n, const std::vector<Edge>& edges) {
    return canonical_form(n, edges).code;
}

std::vector<PlaneEmbedding> enumerate_triangulations(int n) {
    if (n < 4 || n > 8)
        throw Error(ErrorKind::TooLarge, "triangulation enumeration limited to 4 <= n <= 8");
    Rng rng(0);
    PlaneEmbedding start = grow_stacked_triangulation(n, rng);
    UndirectedGraph g0 = underlying(start);
    CanonicalForm f0 = canonical_form(n, g0.edges);

    std::map<uint64_t, std::vector<Edge>> seen; // code -> canonical edges
    std::deque<uint64_t> queue;
    seen[f0.code] = f0.edges;
    queue.push_back(f0.code);

    while (!queue.empty()) {
        auto edges = seen[queue.front()];
        queue.pop_front();
        PlaneEmbedding emb = compute_embedding_undirected(n, edges);
        for (EdgeId i = 0; i < emb.edge_count(); ++i) {
            FaceId f1 = emb.face_of_dart[2 * i], f2 = emb.face_of_dart[2 * i + 1];
            VertexId u = emb.edges[i].u, v = emb.edges[i].v;
            auto third = [&](FaceId f) {
                for (VertexId w : emb.faces[f].boundary)
                    if (w != u && w != v) return w;
                return -1;
            };
            VertexId x = third(f1), y = third(f2);
            if (x == -1 || y == -1 || x == y || emb.adjacent(x, y)) continue;
            std::vector<Edge> flipped;
            for (EdgeId j = 0; j < emb.edge_count(); ++j)
                if (j != i) flipped.push_back({std::min(emb.edges[j].u, emb.edges[j].v),
                                               std::max(emb.edges[j].u, emb.edges[j].v)});
            flipped.push_back({std::min(x, y), std::max(x, y)});
            CanonicalForm cf = canonical_form(n, flipped);
            if (!seen.count(cf.code)) {
                seen[cf.code] = cf.edges;
                queue.push_back(cf.code);
            }
        }
    }

    std::vector<PlaneEmbedding> out;
    for (auto& [code, edges] : seen) out.push_back(compute_embedding_undirected(n, edges));
    return out;
}

namespace {

struct PathEnumerator {
    const TuttePathQuery& q;
    const PlaneEmbedding& g;
    long long budget;
    long long used = 0;
    std::vector<char> on_path;
    std::vector<VertexId> pv;
    std::vector<EdgeId> pe;
    bool found = false;

    explicit PathEnumerator(const TuttePathQuery& q_, long long b)
        : q(q_), g(q_.host), budget(b), on_path(g.n, 0) {}

    void try_complete() {
        if (std::find(pe.begin(), pe.end(), q.e) == pe.end()) return;
        TuttePathCertificate cert;
        cert.path_vertices = pv;
        cert.path_edges = pe;
        SubgraphRef h;
        h.vertices.assign(g.n, 0);
        h.edges.assign(g.edge_count(), 0);
        for (VertexId x : pv) h.vertices[x] = 1;
        for (EdgeId x : pe) h.edges[x] = 1;
        cert.components = h_components(g, h);
        std::vector<char> c_edge(g.edge_count(), 0);
        for (EdgeId ce : q.C.edges) c_edge[ce] = 1;
        for (const HComponent& comp : cert.components) {
            bool has = std::any_of(comp.edges.begin(), comp.edges.end(),
                                   [&](EdgeId ei) { return c_edge[ei]; });
            cert.contains_edge_of_C.push_back(has ? 1 : 0);
        }
        if (check_certificate(q, cert).valid) found = true;
    }

    void dfs(VertexId head) {
        if (found) return;
        if (++used > budget)
            throw Error(ErrorKind::TooLarge, "path enumeration budget exceeded");
        if (head == q.v) {
            try_complete();
            return;
        }
        for (Dart d : g.rotation[head]) {
            VertexId w = g.dart_head(d);
            if (on_path[w]) continue;
            on_path[w] = 1;
            pv.push_back(w);
            pe.push_back(d >> 1);
            dfs(w);
            pe.pop_back();
            pv.pop_back();
            on_path[w] = 0;
            if (found) return;
        }
    }
};

} // namespace

bool tutte_query_solvable_exhaustive(const TuttePathQuery& q, long long path_budget) {
    PathEnumerator en(q, path_budget);
    en.on_path[q.u] = 1;
    en.pv.push_back(q.u);
    en.dfs(q.u);
    return en.found;
}

std::vector<int> directed_cycle_lengths(const Digraph& d) {
    const int n = d.vertex_count();
    if (n > 10) throw Error(ErrorKind::TooLarge, "cycle enumeration limited to n <= 10");
    std::vector<int> lengths;
    std::vector<char> on_path(n, 0);
    std::vector<VertexId> path;
    // cycles are enumerated with their smallest vertex first
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId root, VertexId u) {
        for (VertexId w : d.out(u)) {
            if (w == root) {
                lengths.push_back(static_cast<int>(path.size()));
            } else if (w > root && !on_path[w]) {
                on_path[w] = 1;
                path.push_back(w);
                dfs(root, w);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    };
    for (VertexId root = 0; root < n; ++root) {
        path = {root};
        dfs(root, root);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

} // namespace dichroma::oracle
