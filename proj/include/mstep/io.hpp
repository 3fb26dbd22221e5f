#pragma once

// Text formats for digraphs and graphs.
//
//   json    {"n": 6, "arcs": [[0,1], ...], "partite_sets": [[0], [1,2,3], [4,5]]}
//           ("partite_sets" is optional)
//   matrix  n lines of n characters '0'/'1'; row i, column j set iff arc i->j
//   dot     a subset of Graphviz: `digraph name { ... }` with nonnegative
//           integer node ids, `a -> b` arcs, bare node statements, and
//           `subgraph cluster_* { ... }` blocks read as partite sets.
//           Attribute lists are accepted and ignored.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mstep/graph.hpp"

namespace mstep {

enum class GraphFormat { json, matrix, dot };

std::optional<GraphFormat> graph_format_from_name(std::string_view name);
std::string_view graph_format_name(GraphFormat format);

/// Malformed input. Line and column are 1-based; 0 means "not applicable"
/// (e.g. a semantic error in a JSON document).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct DigraphDocument {
  Digraph digraph;
  std::optional<PartiteStructure> partite_sets;
};

DigraphDocument parse_document(std::string_view text, GraphFormat format);
Digraph parse_digraph(std::string_view text, GraphFormat format);

std::string serialize(const Digraph& d, GraphFormat format,
                      const std::optional<PartiteStructure>& parts = std::nullopt);

/// Generic 0/1 matrix text; unlike the digraph reader, diagonal entries are
/// allowed.
BoolMatrix parse_matrix_text(std::string_view text);
std::string to_matrix_text(const BoolMatrix& m);

std::string to_dot(const UndirectedGraph& g, std::string_view name = "G",
                   const std::optional<PartiteStructure>& parts = std::nullopt);

}  // namespace mstep
