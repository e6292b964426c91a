#pragma once

#include <json.hpp>

#include <string>

#include "forkred/quiver.hpp"
#include "forkred/structure.hpp"

namespace forkred {

class ParseError : public QuiverError {
 public:
  using QuiverError::QuiverError;
};

/// Entries at most 2^53 - 1 in magnitude are emitted as JSON numbers,
/// anything larger as a decimal string. Parsing accepts both.
nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);

/// {"n": int, "m": int, "b": [[int]], "c": [[int]]}. "m"/"c" may be omitted
/// for a plain quiver.
nlohmann::json quiver_to_json(const ExtendedQuiver& q);
ExtendedQuiver quiver_from_json(const nlohmann::json& j);

/// First line "n m", then n rows of n+m space-separated decimal integers
/// ([B|C] concatenated).
std::string quiver_to_text(const ExtendedQuiver& q);
ExtendedQuiver quiver_from_text(const std::string& text);

/// Sniffs the format: leading '{' means JSON, otherwise text.
ExtendedQuiver parse_quiver(const std::string& content);

/// Reads a file, or treats the argument as inline content when it starts
/// with '{' or when it is "-" (stdin).
ExtendedQuiver load_quiver(const std::string& path_or_inline);

nlohmann::json fork_certificate_to_json(const ForkCertificate& cert);

/// Graphviz export: mutable vertices as circles (filled by color when
/// frozen vertices are present), frozen vertices as squares, one edge per
/// arrow bundle labelled with its multiplicity.
std::string to_dot(const ExtendedQuiver& q);

}  // namespace forkred
