#include "dichroma/digraph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dichroma {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotPlanar: return "NotPlanar";
        case ErrorKind::NotTwoConnected: return "NotTwoConnected";
        case ErrorKind::NotTriangulation: return "NotTriangulation";
        case ErrorKind::NotACut: return "NotACut";
        case ErrorKind::DegenerateLink: return "DegenerateLink";
        case ErrorKind::PartialColouring: return "PartialColouring";
        case ErrorKind::OverlapNotTournament: return "OverlapNotTournament";
        case ErrorKind::ColouringsDisagree: return "ColouringsDisagree";
        case ErrorKind::MergedInvalid: return "MergedInvalid";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::GenerationFailed: return "GenerationFailed";
        case ErrorKind::DigirthTooSmall: return "DigirthTooSmall";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InternalVerificationFailed: return "InternalVerificationFailed";
    }
    return "Error";
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw Error(ErrorKind::ParseError, "negative vertex count");
    out_.resize(n_);
    in_.resize(n_);
    std::set<std::pair<int, int>> seen;
    std::set<std::pair<int, int>> useen;
    for (const Arc& a : arcs_) {
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
            throw Error(ErrorKind::ParseError, "arc endpoint out of range");
        if (a.tail == a.head)
            throw Error(ErrorKind::ParseError, "loop arc");
        if (!seen.insert({a.tail, a.head}).second)
            throw Error(ErrorKind::ParseError, "duplicate arc");
        out_[a.tail].push_back(a.head);
        in_[a.head].push_back(a.tail);
        useen.insert({std::min(a.tail, a.head), std::max(a.tail, a.head)});
    }
    for (auto& v : out_) std::sort(v.begin(), v.end());
    for (auto& v : in_) std::sort(v.begin(), v.end());
    uedges_.reserve(useen.size());
    for (auto& [u, v] : useen) uedges_.push_back({u, v});
}

bool Digraph::has_arc(VertexId u, VertexId v) const {
    const auto& o = out_[u];
    return std::binary_search(o.begin(), o.end(), v);
}

bool Digraph::adjacent(VertexId u, VertexId v) const {
    return has_arc(u, v) || has_arc(v, u);
}

EdgeId Digraph::undirected_edge_index(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(uedges_.begin(), uedges_.end(), key,
                               [](const Edge& a, const Edge& b) {
                                   return a.u != b.u ? a.u < b.u : a.v < b.v;
                               });
    if (it == uedges_.end() || !(*it == key)) return -1;
    return static_cast<EdgeId>(it - uedges_.begin());
}

namespace {

// Shortest directed cycle whose first vertex is `start`, via breadth-first
// search over out-arcs; returns its length and predecessor array.
int bfs_cycle_through(const Digraph& d, VertexId start, std::vector<VertexId>& parent) {
    const int n = d.vertex_count();
    std::vector<int> dist(n, -1);
    parent.assign(n, -1);
    std::deque<VertexId> q;
    dist[start] = 0;
    q.push_back(start);
    int best = -1;
    VertexId best_tail = -1;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        if (best != -1 && dist[u] + 1 >= best) break;
        for (VertexId w : d.out(u)) {
            if (w == start) {
                if (best == -1 || dist[u] + 1 < best) {
                    best = dist[u] + 1;
                    best_tail = u;
                }
            } else if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                q.push_back(w);
            }
        }
    }
    if (best != -1) parent[start] = best_tail;
    return best;
}

} // namespace

std::optional<std::vector<VertexId>> shortest_directed_cycle(const Digraph& d) {
    const int n = d.vertex_count();
    int best = -1;
    VertexId best_start = -1;
    std::vector<VertexId> best_parent;
    std::vector<VertexId> parent;
    for (VertexId s = 0; s < n; ++s) {
        int len = bfs_cycle_through(d, s, parent);
        if (len != -1 && (best == -1 || len < best)) {
            best = len;
            best_start = s;
            best_parent = parent;
        }
    }
    if (best == -1) return std::nullopt;
    std::vector<VertexId> cyc;
    VertexId cur = best_parent[best_start];
    cyc.push_back(best_start);
    while (cur != best_start) {
        cyc.push_back(cur);
        cur = best_parent[cur];
    }
    std::reverse(cyc.begin() + 1, cyc.end());
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
    return cyc;
}

Digirth digirth(const Digraph& d) {
    auto cyc = shortest_directed_cycle(d);
    if (!cyc) return Digirth::infinite();
    return Digirth::of(static_cast<int>(cyc->size()));
}

bool is_oriented(const Digraph& d) {
    for (const Arc& a : d.arcs())
        if (d.has_arc(a.head, a.tail)) return false;
    return true; // loops are impossible by construction
}

std::vector<std::array<VertexId, 3>> directed_triangles(const Digraph& d) {
    std::vector<std::array<VertexId, 3>> out;
    for (const Arc& a : d.arcs()) {
        VertexId x = a.tail, y = a.head;
        for (VertexId z : d.out(y)) {
            if (z == x) continue;
            if (d.has_arc(z, x) && x < y && x < z)
                out.push_back({x, y, z});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dichroma
