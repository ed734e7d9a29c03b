#include "splicecert/dsl.hpp"

#include "splicecert/error.hpp"

#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace splicecert {

namespace {

struct Token {
  std::string text;
  int column;
};

struct Statement {
  int line;
  std::vector<Token> tokens;
};

std::vector<Statement> tokenize(std::string_view text) {
  std::vector<Statement> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    Statement st{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      st.tokens.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!st.tokens.empty()) out.push_back(std::move(st));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void parse_fail(const std::string& msg, int line, int column) {
  throw ParseError(ErrorCode::ParseError, msg, line, column);
}

[[noreturn]] void structure_fail(const std::string& msg, SourceLocation at) {
  throw ParseError(ErrorCode::StructureError, msg, at.line, at.column);
}

std::optional<Integer> parse_weight(const Token& tok, int line) {
  if (tok.text == "-") return std::nullopt;
  auto value = parse_integer(tok.text);
  if (!value) parse_fail("malformed weight '" + tok.text + "'", line, tok.column);
  if (*value < 1) parse_fail("weight must be >= 1, got " + tok.text, line, tok.column);
  return value;
}

void check_name(const Token& tok, int line) {
  if (tok.text == "-" || tok.text.find('=') != std::string::npos) {
    parse_fail("invalid vertex name '" + tok.text + "'", line, tok.column);
  }
}

}  // namespace

DiagramDocument parse_diagram(std::string_view text) {
  const auto statements = tokenize(text);
  DiagramDocument doc;
  doc.source = std::string(text);
  DiagramBuilder b;

  // Declarations first so edges and arrows may refer forward.
  for (const Statement& st : statements) {
    const std::string& kw = st.tokens[0].text;
    if (kw != "node" && kw != "leaf") {
      if (kw != "edge" && kw != "arrow") parse_fail("unknown statement '" + kw + "'", st.line, st.tokens[0].column);
      continue;
    }
    if (st.tokens.size() != 2) parse_fail(kw + " expects exactly one name", st.line, st.tokens[0].column);
    const Token& name = st.tokens[1];
    check_name(name, st.line);
    if (b.find(name.text)) parse_fail("duplicate vertex name '" + name.text + "'", st.line, name.column);
    VertexId id = kw == "node" ? b.add_node(name.text) : b.add_leaf(name.text);
    doc.vertex_locations[id] = {st.line, name.column};
  }
  if (doc.vertex_locations.empty()) parse_fail("no vertices declared", statements.empty() ? 1 : statements[0].line, 1);

  auto lookup = [&](const Token& tok, int line) {
    auto v = b.find(tok.text);
    if (!v) parse_fail("unknown vertex '" + tok.text + "'", line, tok.column);
    return *v;
  };

  std::set<std::pair<VertexId, VertexId>> seen_pairs;
  std::set<VertexId> arrowed;
  std::vector<std::pair<EdgeId, SourceLocation>> edge_order;
  for (const Statement& st : statements) {
    const std::string& kw = st.tokens[0].text;
    if (kw == "edge") {
      if (st.tokens.size() != 5) parse_fail("edge expects: edge A B WA WB", st.line, st.tokens[0].column);
      const VertexId a = lookup(st.tokens[1], st.line);
      const VertexId bv = lookup(st.tokens[2], st.line);
      const SourceLocation at{st.line, st.tokens[0].column};
      if (a == bv) structure_fail("edge joins " + st.tokens[1].text + " to itself", at);
      auto wa = parse_weight(st.tokens[3], st.line);
      auto wb = parse_weight(st.tokens[4], st.line);
      const SpliceDiagram& snapshot = b.peek();
      for (auto [v, w, tok] : {std::tuple{a, &wa, &st.tokens[3]}, std::tuple{bv, &wb, &st.tokens[4]}}) {
        if (snapshot.is_node(v) && !*w) parse_fail("node endpoint " + snapshot.name(v) + " needs a weight", st.line, tok->column);
        if (snapshot.is_leaf(v) && *w) parse_fail("leaf endpoint " + snapshot.name(v) + " takes '-'", st.line, tok->column);
      }
      auto key = a < bv ? std::pair{a, bv} : std::pair{bv, a};
      if (!seen_pairs.insert(key).second) structure_fail("duplicate edge between " + st.tokens[1].text + " and " + st.tokens[2].text, at);
      EdgeId e = b.add_edge(a, bv, std::move(wa), std::move(wb));
      doc.edge_locations[e] = at;
      edge_order.push_back({e, at});
    } else if (kw == "arrow") {
      if (st.tokens.size() < 2 || st.tokens.size() > 4) {
        parse_fail("arrow expects: arrow LEAF [mult=N] [colour=N]", st.line, st.tokens[0].column);
      }
      const VertexId leaf = lookup(st.tokens[1], st.line);
      if (!b.peek().is_leaf(leaf)) parse_fail("arrow on non-leaf '" + st.tokens[1].text + "'", st.line, st.tokens[1].column);
      if (!arrowed.insert(leaf).second) parse_fail("duplicate arrow on '" + st.tokens[1].text + "'", st.line, st.tokens[1].column);
      Arrowhead arrow;
      for (std::size_t i = 2; i < st.tokens.size(); ++i) {
        const Token& opt = st.tokens[i];
        auto eq = opt.text.find('=');
        if (eq == std::string::npos) parse_fail("expected key=value, got '" + opt.text + "'", st.line, opt.column);
        const std::string key = opt.text.substr(0, eq);
        auto value = parse_integer(std::string_view(opt.text).substr(eq + 1));
        if (!value) parse_fail("malformed number in '" + opt.text + "'", st.line, opt.column);
        if (key == "mult") {
          if (*value < 0 || *value > std::numeric_limits<std::uint64_t>::max()) {
            parse_fail("multiplicity must be a nonnegative integer", st.line, opt.column);
          }
          arrow.multiplicity = value->convert_to<std::uint64_t>();
        } else if (key == "colour" || key == "color") {
          if (abs(*value) > std::numeric_limits<std::int64_t>::max()) parse_fail("colour out of range", st.line, opt.column);
          arrow.colour = value->convert_to<std::int64_t>();
        } else {
          parse_fail("unknown arrow option '" + key + "'", st.line, opt.column);
        }
      }
      b.set_arrow(leaf, arrow);
    }
  }

  doc.diagram = b.build();
  const SpliceDiagram& d = doc.diagram;

  // Tree check: no edge may close a cycle and everything must be connected.
  std::vector<std::uint32_t> parent(d.vertex_count());
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [e, at] : edge_order) {
    const Edge& ed = d.edge(e);
    auto ra = root(ed.a.value), rb = root(ed.b.value);
    if (ra == rb) structure_fail("edge " + d.edge_label(e) + " closes a cycle", at);
    parent[ra] = rb;
  }
  for (VertexId v : d.vertices()) {
    if (root(v.value) != root(0)) {
      structure_fail("vertex " + d.name(v) + " is not connected to " + d.name(VertexId{0}), doc.vertex_locations[v]);
    }
  }
  return doc;
}

std::string serialize_diagram(const SpliceDiagram& d) {
  std::ostringstream out;
  for (VertexId v : d.vertices()) out << (d.is_node(v) ? "node " : "leaf ") << d.name(v) << '\n';
  for (EdgeId e : d.edges()) {
    const Edge& ed = d.edge(e);
    out << "edge " << d.name(ed.a) << ' ' << d.name(ed.b) << ' ' << (ed.weight_a ? to_string(*ed.weight_a) : "-")
        << ' ' << (ed.weight_b ? to_string(*ed.weight_b) : "-") << '\n';
  }
  for (const auto& [v, arrow] : d.decoration()) {
    out << "arrow " << d.name(v);
    if (arrow.multiplicity != 1) out << " mult=" << arrow.multiplicity;
    if (arrow.colour != 0) out << " colour=" << arrow.colour;
    out << '\n';
  }
  return out.str();
}

}  // namespace splicecert
