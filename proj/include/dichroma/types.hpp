#pragma once

#include <stdexcept>
#include <string>

namespace dichroma {

using VertexId = int;
using EdgeId = int;
using FaceId = int;
// Dart d encodes a directed side of undirected edge d/2; d^1 is the
// opposite side. Dart 2e runs u->v for edge e = {u,v} as stored.
using Dart = int;

struct Arc {
    VertexId tail = -1;
    VertexId head = -1;
    bool operator==(const Arc&) const = default;
    bool operator<(const Arc& o) const {
        return tail != o.tail ? tail < o.tail : head < o.head;
    }
};

struct Edge {
    VertexId u = -1;
    VertexId v = -1;
    bool operator==(const Edge&) const = default;
};

enum class ErrorKind {
    NotPlanar,
    NotTwoConnected,
    NotTriangulation,
    NotACut,
    DegenerateLink,
    PartialColouring,
    OverlapNotTournament,
    ColouringsDisagree,
    MergedInvalid,
    PreconditionViolated,
    SearchExhausted,
    SearchBudgetExceeded,
    TooLarge,
    GenerationFailed,
    DigirthTooSmall,
    ParseError,
    InternalVerificationFailed,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind(kind) {}
    ErrorKind kind;
};

} // namespace dichroma
