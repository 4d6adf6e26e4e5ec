#pragma once

#include <vector>

#include "dichroma/digraph.hpp"
#include "dichroma/types.hpp"

namespace dichroma {

/// Partial or total map vertex -> {1,2}; 0 means unassigned.
class Colouring {
public:
    Colouring() = default;
    explicit Colouring(int n) : a_(n, 0) {}
    static Colouring constant(int n, int colour);

    int size() const { return static_cast<int>(a_.size()); }
    bool assigned(VertexId v) const { return a_[v] != 0; }
    int get(VertexId v) const { return a_[v]; }
    void set(VertexId v, int colour);
    void clear(VertexId v) { a_[v] = 0; }
    bool total() const;
    int assigned_count() const;

    /// Exchanges colours 1 and 2 on every assigned vertex.
    void swap_colours();

    /// Drops vertices >= n (used to strip appended stellation vertices).
    Colouring truncated(int n) const;

    bool operator==(const Colouring&) const = default;

private:
    std::vector<unsigned char> a_;
};

/// Restriction of the assignment to the given vertex set (same id space).
Colouring restrict_colouring(const Colouring& c, const std::vector<VertexId>& keep);

struct VerifyResult {
    bool valid = false;
    std::vector<VertexId> witness_cycle; // monochromatic directed cycle
    int witness_colour = 0;
};

/// Valid iff every colour class induces an acyclic subdigraph. Requires a
/// total colouring (PartialColouring otherwise). On failure the witness is
/// one monochromatic directed cycle, rotated so its smallest vertex is first.
VerifyResult verify_colouring(const Digraph& d, const Colouring& c);

} // namespace dichroma
