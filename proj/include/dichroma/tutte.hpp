#pragma once

#include <cstdint>
#include <string>

#include "dichroma/embedding.hpp"

namespace dichroma {

struct HComponent {
    enum class Kind { ChordEdge, BridgeComponent };
    Kind kind = Kind::ChordEdge;
    std::vector<VertexId> internal_vertices; // empty for a chord
    std::vector<EdgeId> edges;
    std::vector<VertexId> attachments;
    int attachment_count() const { return static_cast<int>(attachments.size()); }
    bool operator==(const HComponent&) const = default;
};

struct SubgraphRef {
    std::vector<char> vertices; // |V(g)| mask
    std::vector<char> edges;    // |E(g)| mask
};

/// H-components of g with respect to the subgraph h: chord edges (both ends
/// in h) listed individually by edge id, then bridge components ordered by
/// smallest internal vertex. Together they cover E(g) \ E(h) exactly once.
std::vector<HComponent> h_components(const PlaneEmbedding& g, const SubgraphRef& h);

struct TuttePathQuery {
    PlaneEmbedding host; // 2-connected plane graph
    Cycle C;             // facial cycle of host
    VertexId v = -1;     // endpoint on C
    EdgeId e = -1;       // required edge, on C
    VertexId u = -1;     // other endpoint, != v
};

struct TuttePathCertificate {
    std::vector<VertexId> path_vertices; // u ... v
    std::vector<EdgeId> path_edges;
    std::vector<HComponent> components;
    std::vector<char> contains_edge_of_C; // aligned with components
};

struct CertificateCheck {
    bool valid = false;
    std::vector<std::string> violations;
};

/// Recomputes the components from scratch and validates every certificate
/// invariant; never trusts the stored components (a mismatch is itself a
/// violation).
CertificateCheck check_certificate(const TuttePathQuery& q, const TuttePathCertificate& cert);

struct SearchStats {
    long long expansions = 0;
};

inline constexpr long long kDefaultSearchBudget = 10'000'000;

/// Depth-first backtracking search for a Tutte path satisfying the query.
/// Success is guaranteed on valid queries; SearchExhausted therefore signals
/// a precondition violation or a bug. The budget caps node expansions
/// (SearchBudgetExceeded).
TuttePathCertificate find_tutte_path(const TuttePathQuery& q,
                                     long long budget = kDefaultSearchBudget,
                                     SearchStats* stats = nullptr);

} // namespace dichroma
