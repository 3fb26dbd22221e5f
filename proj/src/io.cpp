#include "mstep/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace mstep {

using nlohmann::json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::optional<GraphFormat> graph_format_from_name(std::string_view name) {
  if (name == "json") return GraphFormat::json;
  if (name == "matrix") return GraphFormat::matrix;
  if (name == "dot" || name == "dot-in") return GraphFormat::dot;
  return std::nullopt;
}

std::string_view graph_format_name(GraphFormat format) {
  switch (format) {
    case GraphFormat::json: return "json";
    case GraphFormat::matrix: return "matrix";
    case GraphFormat::dot: return "dot";
  }
  return "unknown";
}

namespace {

// ---------------------------------------------------------------- matrix

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (end == text.size()) break;
    start = end + 1;
  }
  while (!lines.empty() && lines.back().text.find_first_not_of(" \t") == std::string_view::npos) {
    lines.pop_back();
  }
  return lines;
}

BoolMatrix read_matrix(std::string_view text, bool allow_diagonal) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty matrix", 1, 1);
  const std::size_t n = lines.size();
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& line = lines[i];
    for (std::size_t j = 0; j < line.text.size(); ++j) {
      const char c = line.text[j];
      if (c != '0' && c != '1') {
        throw ParseError(std::string("unexpected character '") + c + "' (expected 0 or 1)",
                         line.number, j + 1);
      }
      if (j >= n) break;
      if (c == '1') {
        if (i == j && !allow_diagonal) {
          throw ParseError("self-loop at vertex " + std::to_string(i), line.number, j + 1);
        }
        m.set(i, j);
      }
    }
    if (line.text.size() != n) {
      throw ParseError("row has " + std::to_string(line.text.size()) + " entries, expected " +
                           std::to_string(n),
                       line.number, std::min(line.text.size(), n) + 1);
    }
  }
  return m;
}

// ---------------------------------------------------------------- json

std::pair<std::size_t, std::size_t> line_column_at(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::size_t json_index(const json& value, std::size_t n, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + ": expected an integer vertex", 0, 0);
  const auto v = value.get<long long>();
  if (v < 0 || static_cast<unsigned long long>(v) >= n) {
    throw ParseError(where + ": vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(n) + ")",
                     0, 0);
  }
  return static_cast<std::size_t>(v);
}

DigraphDocument read_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column_at(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(e.what(), line, column);
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object", 0, 0);
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw ParseError("\"n\" must be a positive integer", 0, 0);
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  DigraphDocument out{Digraph(n), std::nullopt};
  if (doc.contains("arcs")) {
    const json& arcs = doc["arcs"];
    if (!arcs.is_array()) throw ParseError("\"arcs\" must be an array", 0, 0);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const std::string where = "arcs[" + std::to_string(i) + "]";
      if (!arcs[i].is_array() || arcs[i].size() != 2) {
        throw ParseError(where + ": expected a pair [from, to]", 0, 0);
      }
      const std::size_t from = json_index(arcs[i][0], n, where);
      const std::size_t to = json_index(arcs[i][1], n, where);
      if (from == to) throw ParseError(where + ": self-loop at vertex " + std::to_string(from), 0, 0);
      out.digraph.add_arc(from, to);
    }
  }
  if (doc.contains("partite_sets")) {
    const json& sets = doc["partite_sets"];
    if (!sets.is_array()) throw ParseError("\"partite_sets\" must be an array", 0, 0);
    std::vector<VertexSet> parts;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::string where = "partite_sets[" + std::to_string(i) + "]";
      if (!sets[i].is_array()) throw ParseError(where + ": expected an array", 0, 0);
      VertexSet part(n);
      for (const json& v : sets[i]) part.insert(json_index(v, n, where));
      parts.push_back(std::move(part));
    }
    try {
      out.partite_sets = PartiteStructure(std::move(parts));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("partite_sets: ") + e.what(), 0, 0);
    }
  }
  return out;
}

std::string write_json(const Digraph& d, const std::optional<PartiteStructure>& parts) {
  json doc;
  doc["n"] = d.size();
  json arcs = json::array();
  for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
  doc["arcs"] = std::move(arcs);
  if (parts) {
    json sets = json::array();
    for (const VertexSet& p : parts->parts()) sets.push_back(p.members());
    doc["partite_sets"] = std::move(sets);
  }
  return doc.dump() + "\n";
}

// ---------------------------------------------------------------- dot

enum class TokenKind { identifier, string, symbol, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokenize() {
    std::vector<Token> tokens;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) {
        tokens.push_back({TokenKind::end, "", line_, column_});
        return tokens;
      }
      const std::size_t line = line_;
      const std::size_t column = column_;
      const char c = text_[pos_];
      if (c == '"') {
        advance();
        std::string value;
        while (pos_ < text_.size() && text_[pos_] != '"') {
          if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
          value += text_[pos_];
          advance();
        }
        if (pos_ >= text_.size()) throw ParseError("unterminated string", line, column);
        advance();
        tokens.push_back({TokenKind::string, value, line, column});
      } else if (c == '-' && pos_ + 1 < text_.size() &&
                 (text_[pos_ + 1] == '>' || text_[pos_ + 1] == '-')) {
        tokens.push_back({TokenKind::symbol, std::string(text_.substr(pos_, 2)), line, column});
        advance();
        advance();
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
        std::string value;
        while (pos_ < text_.size()) {
          const char d = text_[pos_];
          if (!(std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.')) break;
          value += d;
          advance();
        }
        tokens.push_back({TokenKind::identifier, value, line, column});
      } else if (std::string_view("{}[];,=:").find(c) != std::string_view::npos) {
        tokens.push_back({TokenKind::symbol, std::string(1, c), line, column});
        advance();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line, column);
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#' || (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        const std::size_t line = line_;
        const std::size_t column = column_;
        advance();
        advance();
        while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) advance();
        if (pos_ + 1 >= text_.size()) throw ParseError("unterminated comment", line, column);
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class DotParser {
 public:
  explicit DotParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  DigraphDocument parse() {
    if (peek().kind == TokenKind::identifier && peek().text == "strict") next();
    const Token& head = next();
    if (head.kind != TokenKind::identifier || head.text != "digraph") {
      throw ParseError("expected 'digraph'", head.line, head.column);
    }
    if (peek().kind == TokenKind::identifier || peek().kind == TokenKind::string) next();
    expect("{");
    statements(nullptr);
    expect("}");
    if (peek().kind != TokenKind::end) {
      throw ParseError("trailing input after graph", peek().line, peek().column);
    }
    return build();
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_symbol(std::string_view s) const {
    return peek().kind == TokenKind::symbol && peek().text == s;
  }
  void expect(std::string_view s) {
    const Token& t = next();
    if (t.kind != TokenKind::symbol || t.text != s) {
      throw ParseError("expected '" + std::string(s) + "'", t.line, t.column);
    }
  }

  std::size_t node_id(const Token& t) {
    if (t.kind != TokenKind::identifier && t.kind != TokenKind::string) {
      throw ParseError("expected a node id", t.line, t.column);
    }
    std::size_t value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (t.text.empty() || ec != std::errc() || ptr != last) {
      throw ParseError("node id '" + t.text + "' is not a nonnegative integer", t.line, t.column);
    }
    max_id_ = std::max(max_id_, value + 1);
    return value;
  }

  void skip_attribute_list() {
    while (at_symbol("[")) {
      next();
      while (!at_symbol("]")) {
        if (peek().kind == TokenKind::end) {
          throw ParseError("unterminated attribute list", peek().line, peek().column);
        }
        next();
      }
      next();
    }
  }

  void statements(std::vector<std::size_t>* cluster) {
    while (!at_symbol("}") && peek().kind != TokenKind::end) {
      if (at_symbol(";") || at_symbol(",")) {
        next();
        continue;
      }
      const Token& t = peek();
      if (t.kind == TokenKind::identifier &&
          (t.text == "graph" || t.text == "node" || t.text == "edge")) {
        next();
        skip_attribute_list();
        continue;
      }
      if (t.kind == TokenKind::identifier && t.text == "subgraph") {
        next();
        std::string name;
        if (peek().kind == TokenKind::identifier || peek().kind == TokenKind::string) {
          name = next().text;
        }
        expect("{");
        if (name.rfind("cluster", 0) == 0) {
          std::vector<std::size_t> members;
          statements(&members);
          clusters_.push_back({std::move(members), t.line, t.column});
        } else {
          statements(cluster);
        }
        expect("}");
        continue;
      }
      // key = value, node statement, or edge chain
      const Token& first = next();
      if (at_symbol("=")) {
        next();
        next();
        continue;
      }
      if (first.kind == TokenKind::symbol) {
        throw ParseError("unexpected '" + first.text + "'", first.line, first.column);
      }
      std::size_t from = node_id(first);
      if (cluster != nullptr) cluster->push_back(from);
      while (at_symbol("->") || at_symbol("--")) {
        const Token& op = next();
        if (op.text == "--") throw ParseError("undirected edge in a digraph", op.line, op.column);
        const Token& target = next();
        const std::size_t to = node_id(target);
        if (to == from) {
          throw ParseError("self-loop at vertex " + std::to_string(from), target.line, target.column);
        }
        if (cluster != nullptr) cluster->push_back(to);
        arcs_.emplace_back(from, to);
        from = to;
      }
      skip_attribute_list();
    }
  }

  DigraphDocument build() {
    if (max_id_ == 0) throw ParseError("digraph has no vertices", 1, 1);
    DigraphDocument out{Digraph::from_arcs(max_id_, arcs_), std::nullopt};
    if (!clusters_.empty()) {
      std::vector<VertexSet> parts;
      for (const Cluster& c : clusters_) {
        parts.push_back(VertexSet::from_members(max_id_, c.members));
      }
      try {
        out.partite_sets = PartiteStructure(std::move(parts));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("clusters do not form a partition: ") + e.what(),
                         clusters_.front().line, clusters_.front().column);
      }
    }
    return out;
  }

  struct Cluster {
    std::vector<std::size_t> members;
    std::size_t line;
    std::size_t column;
  };

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t max_id_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Cluster> clusters_;
};

void write_nodes(std::ostringstream& out, std::size_t n,
                 const std::optional<PartiteStructure>& parts) {
  if (parts) {
    for (std::size_t i = 0; i < parts->part_count(); ++i) {
      out << "  subgraph cluster_" << i << " {\n    label=\"V" << i + 1 << "\";\n";
      parts->part(i).for_each([&](std::size_t v) { out << "    " << v << ";\n"; });
      out << "  }\n";
    }
  } else {
    for (std::size_t v = 0; v < n; ++v) out << "  " << v << ";\n";
  }
}

std::string write_dot(const Digraph& d, const std::optional<PartiteStructure>& parts) {
  std::ostringstream out;
  out << "digraph D {\n";
  write_nodes(out, d.size(), parts);
  for (const auto& [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

DigraphDocument parse_document(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::json:
      return read_json(text);
    case GraphFormat::matrix:
      return {Digraph::from_matrix(read_matrix(text, false)), std::nullopt};
    case GraphFormat::dot:
      return DotParser(DotLexer(text).tokenize()).parse();
  }
  throw std::invalid_argument("unknown graph format");
}

Digraph parse_digraph(std::string_view text, GraphFormat format) {
  return parse_document(text, format).digraph;
}

std::string serialize(const Digraph& d, GraphFormat format,
                      const std::optional<PartiteStructure>& parts) {
  switch (format) {
    case GraphFormat::json: return write_json(d, parts);
    case GraphFormat::matrix: return to_matrix_text(d.adjacency());
    case GraphFormat::dot: return write_dot(d, parts);
  }
  throw std::invalid_argument("unknown graph format");
}

BoolMatrix parse_matrix_text(std::string_view text) { return read_matrix(text, true); }

std::string to_matrix_text(const BoolMatrix& m) {
  std::string out;
  out.reserve(m.order() * (m.order() + 1));
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) out += m.get(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string to_dot(const UndirectedGraph& g, std::string_view name,
                   const std::optional<PartiteStructure>& parts) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  write_nodes(out, g.size(), parts);
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mstep
