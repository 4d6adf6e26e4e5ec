#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "dichroma/colouring.hpp"
#include "dichroma/embedding.hpp"
#include "dichroma/tutte.hpp"

namespace dichroma::oracle {

/// splitmix64; deterministic across platforms, unlike <random> distributions.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed) {}
    uint64_t next();
    int uniform(int n); // [0, n)
    bool coin() { return next() & 1; }

private:
    uint64_t s_;
};

/// First valid 2-colouring in subset-lexicographic order (the colour-2 class
/// enumerated as an ascending bitmask), or nullopt. Requires n <= 24.
std::optional<Colouring> brute_force_two_colouring(const Digraph& d);

/// Acyclicity of the subdigraph induced by a vertex mask, decided by a
/// strongly-connected-components pass (independent of verify_colouring).
bool is_acyclic_scc(const Digraph& d, const std::vector<char>& keep);

/// Independent validity check for a total colouring.
bool valid_by_scc(const Digraph& d, const Colouring& c);

struct UndirectedGraph {
    int n = 0;
    std::vector<Edge> edges;
};

UndirectedGraph underlying(const PlaneEmbedding& e);

/// All 2^m orientations with digirth >= digirth_min, in ascending-bitmask
/// order (bit i clear = edge i oriented u->v). Requires m <= 24.
void for_each_orientation(const UndirectedGraph& g, int digirth_min,
                          const std::function<void(const Digraph&)>& fn);
std::vector<Digraph> enumerate_orientations(const UndirectedGraph& g, int digirth_min);

enum class InstanceShape { Triangulation, AnyPlanar };

struct InstanceSpec {
    uint64_t seed = 0;
    int n = 4;
    int digirth_min = 4; // 3, 4 or 5
    InstanceShape shape = InstanceShape::Triangulation;
};

struct Instance {
    Digraph d;
    PlaneEmbedding emb;
};

/// Seeded, reproducible planar instance: a plane triangulation grown from K4
/// by face stellation (AnyPlanar additionally deletes edges while staying
/// connected), oriented with digirth >= digirth_min by random orientation
/// plus local repair.
Instance random_instance(const InstanceSpec& spec);

/// Random orientation repaired by flipping the lexicographically first arc
/// of the first-found short cycle; GenerationFailed after the retry budget.
Digraph orient_with_digirth(const UndirectedGraph& g, int digirth_min, Rng& rng);

PlaneEmbedding k4_embedding();
PlaneEmbedding grow_stacked_triangulation(int n, Rng& rng);

/// Triangulation with `rings` concentric cycles of length ring_len between
/// two apexes; it has no separating triangle when ring_len >= 4.
/// (4,1) is the octahedron and (5,2) the icosahedron.
PlaneEmbedding ring_triangulation(int ring_len, int rings);

/// All plane triangulations on n vertices up to isomorphism (n <= 8),
/// enumerated by breadth-first search over diagonal flips from a stacked
/// triangulation; deterministic order.
std::vector<PlaneEmbedding> enumerate_triangulations(int n);

/// Smallest adjacency code over all vertex relabelings (n <= 8).
uint64_t canonical_graph_code(int n, const std::vector<Edge>& edges);

/// Exhaustive dual route for Tutte-path solvability: every simple u-v path
/// containing e, filtered through check_certificate.
bool tutte_query_solvable_exhaustive(const TuttePathQuery& q,
                                     long long path_budget = 5'000'000);

/// Lengths of all simple directed cycles (n <= 10); digirth cross-check.
std::vector<int> directed_cycle_lengths(const Digraph& d);

} // namespace dichroma::oracle
