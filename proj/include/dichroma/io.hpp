#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "dichroma/colouring.hpp"
#include "dichroma/embedding.hpp"

namespace dichroma::io {

struct DigraphFile {
    Digraph d;
    std::optional<PlaneEmbedding> emb; // present when the file has a rotation block
};

/// Text digraph format: line 1 "n m", then m lines "u v" (arc u->v),
/// 0-indexed. Optional block: a line "rotation", then n lines giving the
/// clockwise neighbours of each vertex.
DigraphFile read_digraph(std::istream& in);
DigraphFile read_digraph_file(const std::string& path);
void write_digraph(std::ostream& out, const Digraph& d, const PlaneEmbedding* emb = nullptr);

/// One line per vertex, "<vertex-id> <colour>", sorted by vertex id.
Colouring read_colouring(std::istream& in, int n);
Colouring read_colouring_file(const std::string& path, int n);
void write_colouring(std::ostream& out, const Colouring& c);

/// planar_code: ASCII header ">>planar_code<<", then per graph one byte n
/// followed by each vertex's clockwise neighbour list (1-indexed bytes,
/// 0-terminated).
std::vector<PlaneEmbedding> read_planar_code(std::istream& in);
std::vector<PlaneEmbedding> read_planar_code_file(const std::string& path);
void write_planar_code(std::ostream& out, const std::vector<PlaneEmbedding>& graphs);

struct RunReport {
    int n = 0;
    int m = 0;
    std::string digirth;
    std::string mode; // "digirth4" or "apex"
    int blocks = 0;
    int separators_used = 0;
    int tutte_queries = 0;
    int branch_two_colour = 0;
    int branch_one_colour = 0;
    int branch_apex = 0;
    std::string branch_b_choice = "-";
    bool fallback_engaged = false;
    uint64_t seed = 0;
    std::string colouring = "-"; // colours by vertex id, space separated
    std::string verification = "-";
    long long time_wall_ms = 0;

    std::string to_text() const; // flat key = value block, stable key order
};

} // namespace dichroma::io
