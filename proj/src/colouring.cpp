#include "dichroma/colouring.hpp"

#include <algorithm>

namespace dichroma {

Colouring Colouring::constant(int n, int colour) {
    Colouring c(n);
    for (VertexId v = 0; v < n; ++v) c.set(v, colour);
    return c;
}

void Colouring::set(VertexId v, int colour) {
    if (colour != 1 && colour != 2)
        throw Error(ErrorKind::PreconditionViolated, "colour must be 1 or 2");
    a_[v] = static_cast<unsigned char>(colour);
}

bool Colouring::total() const {
    return std::all_of(a_.begin(), a_.end(), [](unsigned char c) { return c != 0; });
}

int Colouring::assigned_count() const {
    return static_cast<int>(std::count_if(a_.begin(), a_.end(),
                                          [](unsigned char c) { return c != 0; }));
}

void Colouring::swap_colours() {
    for (auto& c : a_)
        if (c != 0) c = static_cast<unsigned char>(3 - c);
}

Colouring Colouring::truncated(int n) const {
    Colouring r(n);
    for (VertexId v = 0; v < n && v < size(); ++v)
        if (assigned(v)) r.set(v, get(v));
    return r;
}

Colouring restrict_colouring(const Colouring& c, const std::vector<VertexId>& keep) {
    Colouring r(c.size());
    for (VertexId v : keep) {
        if (v < 0 || v >= c.size())
            throw Error(ErrorKind::PreconditionViolated, "restriction vertex out of range");
        if (c.assigned(v)) r.set(v, c.get(v));
    }
    return r;
}

namespace {

// Directed cycle in the subdigraph induced by one colour class, found by
// depth-first search; empty when the class is acyclic.
std::vector<VertexId> find_class_cycle(const Digraph& d, const Colouring& c, int colour) {
    const int n = d.vertex_count();
    std::vector<int> state(n, 0); // 0 unseen, 1 on stack, 2 done
    std::vector<VertexId> parent(n, -1);

    for (VertexId root = 0; root < n; ++root) {
        if (state[root] != 0 || c.get(root) != colour) continue;
        std::vector<std::pair<VertexId, size_t>> stack;
        state[root] = 1;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            const auto& succ = d.out(u);
            bool descended = false;
            while (idx < succ.size()) {
                VertexId w = succ[idx++];
                if (c.get(w) != colour) continue;
                if (state[w] == 1) {
                    // back arc u->w closes a cycle w ... u
                    std::vector<VertexId> cyc;
                    VertexId cur = u;
                    while (cur != w) {
                        cyc.push_back(cur);
                        cur = parent[cur];
                    }
                    cyc.push_back(w);
                    std::reverse(cyc.begin(), cyc.end());
                    auto mn = std::min_element(cyc.begin(), cyc.end());
                    std::rotate(cyc.begin(), mn, cyc.end());
                    return cyc;
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    parent[w] = u;
                    stack.push_back({w, 0});
                    descended = true;
                    break;
                }
            }
            if (!descended && stack.back().second >= succ.size()) {
                state[u] = 2;
                stack.pop_back();
            }
        }
    }
    return {};
}

} // namespace

VerifyResult verify_colouring(const Digraph& d, const Colouring& c) {
    if (c.size() != d.vertex_count())
        throw Error(ErrorKind::PartialColouring, "colouring domain size mismatch");
    for (VertexId v = 0; v < d.vertex_count(); ++v)
        if (!c.assigned(v))
            throw Error(ErrorKind::PartialColouring,
                        "vertex " + std::to_string(v) + " unassigned");
    for (int colour : {1, 2}) {
        auto cyc = find_class_cycle(d, c, colour);
        if (!cyc.empty()) return {false, cyc, colour};
    }
    return {true, {}, 0};
}

} // namespace dichroma
