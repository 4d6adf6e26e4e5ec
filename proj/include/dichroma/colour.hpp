#pragma once

#include <array>
#include <string>

#include "dichroma/colouring.hpp"
#include "dichroma/decompose.hpp"
#include "dichroma/tutte.hpp"

namespace dichroma {

struct TrianglePrecolouring {
    std::array<VertexId, 3> triangle{-1, -1, -1};
    std::array<int, 3> colours{1, 1, 1};
};

struct ApexInput {
    Digraph d;
    VertexId v0 = -1; // every directed 3-cycle must use v0
};

/// Counters filled in by the colouring pipeline, reported by the CLI.
struct ColourTrace {
    int blocks = 0;
    int separators_used = 0;
    int tutte_queries = 0;
    int branch_two_colour = 0;
    int branch_one_colour = 0;
    int branch_apex = 0;
    bool fallback_engaged = false;
    std::string branch_b_choice; // last successful neighbour pair, diagnostics
    long long expansions = 0;
};

struct ColourOptions {
    long long search_budget = kDefaultSearchBudget;
    ColourTrace* trace = nullptr;
};

/// Union of two colourings that agree on a shared tournament overlap; the
/// merged colouring is verified on d1 ∪ d2 before returning. All vertex ids
/// live in one shared id space.
Colouring combine_colourings(const Digraph& d1, const Colouring& c1, const Digraph& d2,
                             const Colouring& c2, const std::vector<VertexId>& overlap);

/// Extends a precolouring of the outer triangle over a plane triangulation
/// without separating triangles (plus the n=3 and K4 cases); digirth >= 4
/// required. Two internal branches: two colours on the triangle, or one.
Colouring extend_on_triangle(const Digraph& d, const PlaneEmbedding& e,
                             const TrianglePrecolouring& pre, const ColourOptions& opt = {});

/// As extend_on_triangle but recurses on separating triangles, colouring the
/// exterior first and merging with combine_colourings.
Colouring extend_recursive(const Digraph& d, const PlaneEmbedding& e,
                           const TrianglePrecolouring& pre, const ColourOptions& opt = {});

/// 2-colouring of a planar oriented graph whose directed 3-cycles all pass
/// through a.v0.
Colouring colour_with_apex(const ApexInput& a, const ColourOptions& opt = {});

/// 2-colouring of a planar oriented graph of digirth >= 4. An embedding can
/// be supplied (from a rotation-system input); otherwise one is computed.
Colouring colour_digirth4(const Digraph& d, const ColourOptions& opt = {});
Colouring colour_digirth4_with_embedding(const Digraph& d, const PlaneEmbedding& e,
                                         const ColourOptions& opt = {});

} // namespace dichroma
