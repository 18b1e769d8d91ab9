#pragma once

#include <stdexcept>
#include <string>

#include "rainbow/extremal.hpp"
#include "rainbow/witness.hpp"

namespace rainbow::io {

/// Raised on any malformed collection or witness document; `where` names the
/// offending field or location.
class ParseError : public std::runtime_error {
  public:
    enum class Kind : std::uint8_t {
        MalformedJson,
        WrongVersion,
        MissingField,
        UnknownField,
        BadType,
        IndexOutOfRange,
        DuplicateEdge,
        BadValue,
    };

    ParseError(Kind kind, std::string where, std::string message)
        : std::runtime_error(message + " (at " + where + ")"), kind_(kind), where_(std::move(where)) {}

    Kind kind() const { return kind_; }
    const std::string &where() const { return where_; }

  private:
    Kind kind_;
    std::string where_;
};

inline constexpr int collection_format_version = 1;

/// Collection document, format_version 1:
///   {"format_version":1,"n":2,"graphs":[[[0,0],[1,1]], ...]}
/// Each graph is a list of [x_index, y_index] edges. Unknown fields are
/// rejected; duplicate edges within one graph are rejected.
GraphCollection parse_collection(const std::string &text);
std::string serialize_collection(const GraphCollection &c, bool pretty = false);

/// Witness document: {"result":"path","vertices":["x0","y1",...],"colors":[...]}
/// (or "cycle"). Vertices are side letter + index.
TransversalWitness parse_witness(const std::string &text, int n, int m);
std::string serialize_witness(const TransversalWitness &w, bool pretty = false);

std::string serialize_certificate(const extremal::ExtremalCertificate &cert, bool pretty = false);

} // namespace rainbow::io
