#include "splicecert/diagram.hpp"

#include "splicecert/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace splicecert {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::StructureError: return "StructureError";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::EdgeNotInternal: return "EdgeNotInternal";
    case ErrorCode::SameLeaf: return "SameLeaf";
    case ErrorCode::NotArrowhead: return "NotArrowhead";
    case ErrorCode::MultipleArrowheads: return "MultipleArrowheads";
    case ErrorCode::NonUnitMultiplicity: return "NonUnitMultiplicity";
    case ErrorCode::InfiniteGaps: return "InfiniteGaps";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Exceptional: return "Exceptional";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::CaseExhausted: return "CaseExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NoNode: return "no_node";
    case ViolationKind::NotConnected: return "not_connected";
    case ViolationKind::HasCycle: return "has_cycle";
    case ViolationKind::SelfLoop: return "self_loop";
    case ViolationKind::LeafValence: return "leaf_valence";
    case ViolationKind::NodeValence: return "node_valence";
    case ViolationKind::LeafToLeafEdge: return "leaf_to_leaf_edge";
    case ViolationKind::MissingWeight: return "missing_weight";
    case ViolationKind::UnexpectedWeight: return "unexpected_weight";
    case ViolationKind::NonPositiveWeight: return "non_positive_weight";
    case ViolationKind::NotCoprime: return "not_coprime";
    case ViolationKind::EdgeDeterminant: return "edge_determinant";
    case ViolationKind::ArrowOnNode: return "arrow_on_node";
    case ViolationKind::ValenceTwo: return "valence_two";
    case ViolationKind::RemovableLeaf: return "removable_leaf";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// SpliceDiagram

const Vertex& SpliceDiagram::vertex(VertexId v) const {
  if (v.value >= vertices_.size()) throw Error(ErrorCode::UnknownVertex, "vertex id out of range");
  return vertices_[v.value];
}

const Edge& SpliceDiagram::edge(EdgeId e) const {
  if (e.value >= edges_.size()) throw Error(ErrorCode::UnknownEdge, "edge id out of range");
  return edges_[e.value];
}

std::span<const EdgeId> SpliceDiagram::incident(VertexId v) const {
  vertex(v);
  return adjacency_[v.value];
}

std::optional<VertexId> SpliceDiagram::find(std::string_view name) const {
  auto it = names_.find(name);
  if (it == names_.end()) return std::nullopt;
  return it->second;
}

VertexId SpliceDiagram::require(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

VertexId SpliceDiagram::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.a == v) return ed.b;
  if (ed.b == v) return ed.a;
  throw Error(ErrorCode::InvalidArgument, "vertex is not an endpoint of the edge");
}

bool SpliceDiagram::has_endpoint(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  return ed.a == v || ed.b == v;
}

std::optional<EdgeId> SpliceDiagram::edge_between(VertexId u, VertexId v) const {
  for (EdgeId e : incident(u)) {
    if (other_end(e, u) == v) return e;
  }
  return std::nullopt;
}

const std::optional<Integer>& SpliceDiagram::weight_at(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.a == v) return ed.weight_a;
  if (ed.b == v) return ed.weight_b;
  throw Error(ErrorCode::InvalidArgument, "vertex is not an endpoint of the edge");
}

const Integer& SpliceDiagram::near_weight(EdgeId e, VertexId node) const {
  const auto& w = weight_at(e, node);
  if (!w) {
    throw Error(ErrorCode::InvalidDiagram,
                "edge " + edge_label(e) + " has no weight at " + name(node));
  }
  return *w;
}

Integer SpliceDiagram::weight_product_excluding(VertexId node, std::span<const EdgeId> skip) const {
  Integer product = 1;
  for (EdgeId e : incident(node)) {
    if (std::find(skip.begin(), skip.end(), e) != skip.end()) continue;
    product *= near_weight(e, node);
  }
  return product;
}

const Arrowhead* SpliceDiagram::arrowhead(VertexId v) const {
  auto it = decoration_.find(v);
  return it == decoration_.end() ? nullptr : &it->second;
}

std::vector<VertexId> SpliceDiagram::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (std::uint32_t i = 0; i < vertices_.size(); ++i) out.push_back(VertexId{i});
  return out;
}

std::vector<VertexId> SpliceDiagram::nodes() const {
  std::vector<VertexId> out;
  for (VertexId v : vertices()) {
    if (is_node(v)) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> SpliceDiagram::leaves() const {
  std::vector<VertexId> out;
  for (VertexId v : vertices()) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> SpliceDiagram::arrowheads() const {
  std::vector<VertexId> out;
  for (const auto& [v, arrow] : decoration_) out.push_back(v);
  return out;
}

std::vector<EdgeId> SpliceDiagram::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (std::uint32_t i = 0; i < edges_.size(); ++i) out.push_back(EdgeId{i});
  return out;
}

std::string SpliceDiagram::edge_label(EdgeId e) const {
  const Edge& ed = edge(e);
  return name(ed.a) + "-" + name(ed.b);
}

TreePath SpliceDiagram::path(VertexId from, VertexId to) const {
  vertex(from);
  vertex(to);
  std::vector<std::optional<EdgeId>> via(vertices_.size());
  std::vector<bool> seen(vertices_.size(), false);
  std::deque<VertexId> queue{from};
  seen[from.value] = true;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (EdgeId e : adjacency_[u.value]) {
      VertexId w = other_end(e, u);
      if (seen[w.value]) continue;
      seen[w.value] = true;
      via[w.value] = e;
      queue.push_back(w);
    }
  }
  if (!seen[to.value]) {
    throw Error(ErrorCode::InvalidDiagram, "no path from " + name(from) + " to " + name(to));
  }
  TreePath p;
  VertexId cur = to;
  p.vertices.push_back(cur);
  while (cur != from) {
    EdgeId e = *via[cur.value];
    p.edges.push_back(e);
    cur = other_end(e, cur);
    p.vertices.push_back(cur);
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

SpliceDiagram SpliceDiagram::with_decoration(Decoration decoration) const {
  SpliceDiagram copy = *this;
  for (const auto& [v, arrow] : decoration) {
    if (!copy.is_leaf(v)) throw Error(ErrorCode::InvalidArgument, "arrowhead on a non-leaf vertex");
  }
  copy.decoration_ = std::move(decoration);
  return copy;
}

// ---------------------------------------------------------------------------
// DiagramBuilder

DiagramBuilder::DiagramBuilder(SpliceDiagram base) : diagram_(std::move(base)) {}

VertexId DiagramBuilder::add_vertex(std::string name, VertexKind kind) {
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "empty vertex name");
  if (diagram_.names_.count(name)) {
    throw Error(ErrorCode::InvalidArgument, "duplicate vertex name '" + name + "'");
  }
  VertexId id{static_cast<std::uint32_t>(diagram_.vertices_.size())};
  diagram_.names_.emplace(name, id);
  diagram_.vertices_.push_back(Vertex{std::move(name), kind});
  diagram_.adjacency_.emplace_back();
  return id;
}

VertexId DiagramBuilder::add_node(std::string name) { return add_vertex(std::move(name), VertexKind::Node); }

VertexId DiagramBuilder::add_leaf(std::string name) { return add_vertex(std::move(name), VertexKind::Leaf); }

EdgeId DiagramBuilder::add_edge(VertexId a, VertexId b, std::optional<Integer> weight_a,
                                std::optional<Integer> weight_b) {
  diagram_.vertex(a);
  diagram_.vertex(b);
  if (diagram_.is_leaf(a) && weight_a) {
    throw Error(ErrorCode::InvalidArgument, "leaf endpoint " + diagram_.name(a) + " carries a weight");
  }
  if (diagram_.is_leaf(b) && weight_b) {
    throw Error(ErrorCode::InvalidArgument, "leaf endpoint " + diagram_.name(b) + " carries a weight");
  }
  EdgeId id{static_cast<std::uint32_t>(diagram_.edges_.size())};
  diagram_.edges_.push_back(Edge{a, b, std::move(weight_a), std::move(weight_b)});
  diagram_.adjacency_[a.value].push_back(id);
  if (b != a) diagram_.adjacency_[b.value].push_back(id);
  return id;
}

EdgeId DiagramBuilder::add_leaf_edge(VertexId node, VertexId leaf, Integer weight) {
  return add_edge(node, leaf, std::move(weight), std::nullopt);
}

void DiagramBuilder::set_arrow(VertexId leaf, Arrowhead arrow) {
  if (!diagram_.is_leaf(leaf)) {
    throw Error(ErrorCode::InvalidArgument, "arrowhead on non-leaf " + diagram_.name(leaf));
  }
  diagram_.decoration_[leaf] = arrow;
}

void DiagramBuilder::clear_arrow(VertexId leaf) { diagram_.decoration_.erase(leaf); }

std::optional<VertexId> DiagramBuilder::find(std::string_view name) const { return diagram_.find(name); }

std::string DiagramBuilder::fresh_name(std::string_view base) const {
  std::string candidate(base);
  while (diagram_.find(candidate)) candidate += '\'';
  return candidate;
}

// ---------------------------------------------------------------------------
// validation

namespace {

void check_connectivity(const SpliceDiagram& d, std::vector<Violation>& out) {
  const std::size_t n = d.vertex_count();
  if (n == 0) return;
  // Union-find over edges: the first edge closing a cycle is reported.
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : d.edges()) {
    const Edge& ed = d.edge(e);
    if (ed.a == ed.b) continue;
    auto ra = root(ed.a.value);
    auto rb = root(ed.b.value);
    if (ra == rb) {
      out.push_back({ViolationKind::HasCycle, "edge " + d.edge_label(e) + " closes a cycle", std::nullopt, e});
    } else {
      parent[ra] = rb;
    }
  }
  auto r0 = root(0);
  for (VertexId v : d.vertices()) {
    if (root(v.value) != r0) {
      out.push_back({ViolationKind::NotConnected,
                     "vertex " + d.name(v) + " is not connected to " + d.name(VertexId{0}), v, std::nullopt});
    }
  }
}

}  // namespace

ValidationReport validate(const SpliceDiagram& d) {
  ValidationReport report;
  auto& out = report.violations;

  if (d.nodes().empty()) out.push_back({ViolationKind::NoNode, "diagram has no node", std::nullopt, std::nullopt});

  check_connectivity(d, out);

  for (EdgeId e : d.edges()) {
    const Edge& ed = d.edge(e);
    const std::string label = d.edge_label(e);
    if (ed.a == ed.b) {
      out.push_back({ViolationKind::SelfLoop, "edge " + label + " is a loop", ed.a, e});
      continue;
    }
    if (d.is_leaf(ed.a) && d.is_leaf(ed.b)) {
      out.push_back({ViolationKind::LeafToLeafEdge, "edge " + label + " joins two leaves", std::nullopt, e});
    }
    for (auto [v, w] : {std::pair{ed.a, &ed.weight_a}, std::pair{ed.b, &ed.weight_b}}) {
      if (d.is_node(v)) {
        if (!*w) {
          out.push_back({ViolationKind::MissingWeight,
                         "edge " + label + " has no weight at node " + d.name(v), v, e});
        } else if (**w <= 0) {
          out.push_back({ViolationKind::NonPositiveWeight,
                         "edge " + label + " has non-positive weight " + to_string(**w) + " at " + d.name(v), v, e});
        }
      } else if (*w) {
        out.push_back({ViolationKind::UnexpectedWeight,
                       "edge " + label + " carries a weight at leaf " + d.name(v), v, e});
      }
    }
  }

  for (VertexId v : d.vertices()) {
    const std::size_t val = d.valence(v);
    if (d.is_leaf(v)) {
      if (val != 1) {
        out.push_back({ViolationKind::LeafValence,
                       "leaf " + d.name(v) + " has " + std::to_string(val) + " incident edges, expected 1", v,
                       std::nullopt});
      }
      continue;
    }
    if (d.is_arrowhead(v)) {
      out.push_back({ViolationKind::ArrowOnNode, "arrowhead on node " + d.name(v), v, std::nullopt});
    }
    if (val < 2) {
      out.push_back({ViolationKind::NodeValence,
                     "node " + d.name(v) + " has " + std::to_string(val) + " incident edges", v, std::nullopt});
    }
    auto inc = d.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      const auto& wi = d.weight_at(inc[i], v);
      if (!wi || *wi <= 0) continue;
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const auto& wj = d.weight_at(inc[j], v);
        if (!wj || *wj <= 0) continue;
        if (gcd(*wi, *wj) != 1) {
          out.push_back({ViolationKind::NotCoprime,
                         "weights at node " + d.name(v) + " not pairwise coprime: " + to_string(*wi) + " on " +
                             d.edge_label(inc[i]) + " and " + to_string(*wj) + " on " + d.edge_label(inc[j]),
                         v, inc[j]});
        }
      }
    }
  }

  for (EdgeId e : d.edges()) {
    const Edge& ed = d.edge(e);
    if (ed.a == ed.b || !d.is_node(ed.a) || !d.is_node(ed.b)) continue;
    bool complete = true;
    for (VertexId v : {ed.a, ed.b}) {
      for (EdgeId f : d.incident(v)) {
        const auto& w = d.weight_at(f, v);
        if (!w || *w <= 0) complete = false;
      }
    }
    if (!complete) continue;
    Integer det = edge_determinant(d, e);
    if (det <= 0) {
      out.push_back({ViolationKind::EdgeDeterminant,
                     "edge determinant of " + d.edge_label(e) + " is " + to_string(det) + ", must be positive",
                     std::nullopt, e});
    }
  }
  return report;
}

void require_valid(const SpliceDiagram& d) {
  auto report = validate(d);
  if (!report.valid()) {
    throw Error(ErrorCode::InvalidDiagram, "invalid splice diagram: " + report.violations.front().message);
  }
}

Integer edge_determinant(const SpliceDiagram& d, EdgeId e) {
  const Edge& ed = d.edge(e);
  if (!d.is_node(ed.a) || !d.is_node(ed.b) || ed.a == ed.b) {
    throw Error(ErrorCode::EdgeNotInternal, "edge " + d.edge_label(e) + " is not internal");
  }
  const EdgeId skip[] = {e};
  return d.near_weight(e, ed.a) * d.near_weight(e, ed.b) -
         d.weight_product_excluding(ed.a, skip) * d.weight_product_excluding(ed.b, skip);
}

// ---------------------------------------------------------------------------
// shape

std::vector<VertexId> end_nodes(const SpliceDiagram& d) {
  std::vector<VertexId> out;
  for (VertexId v : d.nodes()) {
    std::size_t internal = 0;
    for (EdgeId e : d.incident(v)) {
      if (d.is_node(d.other_end(e, v))) ++internal;
    }
    if (internal <= 1) out.push_back(v);
  }
  return out;
}

Shape classify(const SpliceDiagram& d) {
  Shape shape;
  auto nodes = d.nodes();
  if (nodes.size() == 1) {
    shape.kind = Shape::Kind::OneNode;
    for (EdgeId e : d.incident(nodes.front())) shape.leaf_weights.push_back(d.near_weight(e, nodes.front()));
    std::sort(shape.leaf_weights.begin(), shape.leaf_weights.end());
  } else {
    shape.kind = Shape::Kind::MultiNode;
    shape.end_nodes = end_nodes(d);
  }
  return shape;
}

// ---------------------------------------------------------------------------
// surgery

SubdivisionResult subdivide_edge(const SpliceDiagram& d, const CablingSpec& spec) {
  if (spec.old_node.value >= d.vertex_count() || spec.far_end.value >= d.vertex_count()) {
    throw Error(ErrorCode::UnknownEdge, "cabling target references an unknown vertex");
  }
  auto target = d.edge_between(spec.old_node, spec.far_end);
  if (!target || !d.is_node(spec.old_node)) {
    throw Error(ErrorCode::UnknownEdge,
                "no edge from node " + d.name(spec.old_node) + " to " + d.name(spec.far_end));
  }

  // Rebuild with every vertex in its original id, then append the new node
  // and arms; the target edge is replaced in place by old--new.
  DiagramBuilder b;
  for (VertexId v : d.vertices()) {
    if (d.is_node(v)) b.add_node(d.name(v));
    else b.add_leaf(d.name(v));
  }
  const VertexId fresh = b.add_node(b.fresh_name(spec.node_label));

  for (EdgeId e : d.edges()) {
    const Edge& ed = d.edge(e);
    if (e != *target) {
      b.add_edge(ed.a, ed.b, ed.weight_a, ed.weight_b);
      continue;
    }
    const Integer& old_weight = d.near_weight(e, spec.old_node);
    b.add_edge(spec.old_node, fresh, old_weight, spec.weight_toward_old_node);
  }
  const auto& far_weight = d.weight_at(*target, spec.far_end);
  b.add_edge(fresh, spec.far_end, spec.weight_toward_far_side, far_weight);

  std::vector<VertexId> arms;
  for (const NewArm& arm : spec.new_arms) {
    VertexId leaf = b.add_leaf(b.fresh_name(arm.label.empty() ? "K" : arm.label));
    b.add_leaf_edge(fresh, leaf, arm.weight);
    if (arm.arrow) b.set_arrow(leaf, *arm.arrow);
    arms.push_back(leaf);
  }
  for (const auto& [v, arrow] : d.decoration()) b.set_arrow(v, arrow);

  SubdivisionResult result{b.build(), {}, fresh, std::move(arms)};
  result.report = validate(result.diagram);
  return result;
}

// ---------------------------------------------------------------------------
// exceptional / minimal

const char* exceptional_name(ExceptionalType t) {
  switch (t) {
    case ExceptionalType::M235: return "M(2,3,5)";
    case ExceptionalType::M237: return "M(2,3,7)";
    case ExceptionalType::M2311: return "M(2,3,11)";
  }
  return "?";
}

std::optional<ExceptionalType> exceptional_type(const SpliceDiagram& d) {
  auto nodes = d.nodes();
  if (nodes.size() != 1) return std::nullopt;
  Shape shape = classify(d);
  const auto& w = shape.leaf_weights;
  if (w.size() != 3 || w[0] != 2 || w[1] != 3) return std::nullopt;
  if (w[2] == 5) return ExceptionalType::M235;
  if (w[2] == 7) return ExceptionalType::M237;
  if (w[2] == 11) return ExceptionalType::M2311;
  return std::nullopt;
}

MinimalityReport is_minimal(const SpliceDiagram& d) {
  MinimalityReport report;
  for (VertexId v : d.nodes()) {
    if (d.valence(v) == 2) {
      report.violations.push_back({ViolationKind::ValenceTwo, "node " + d.name(v) + " has valence 2", v, std::nullopt});
    }
    for (EdgeId e : d.incident(v)) {
      VertexId other = d.other_end(e, v);
      if (d.is_leaf(other) && !d.is_arrowhead(other) && d.near_weight(e, v) < 2) {
        report.violations.push_back({ViolationKind::RemovableLeaf,
                                     "leaf " + d.name(other) + " has weight " + to_string(d.near_weight(e, v)) +
                                         " at node " + d.name(v),
                                     other, e});
      }
    }
  }
  report.minimal = report.violations.empty();
  return report;
}

SpliceDiagram one_node_diagram(std::span<const Integer> leaf_weights) {
  DiagramBuilder b;
  VertexId v = b.add_node("v");
  for (std::size_t i = 0; i < leaf_weights.size(); ++i) {
    VertexId leaf = b.add_leaf("K" + std::to_string(i + 1));
    b.add_leaf_edge(v, leaf, leaf_weights[i]);
  }
  return b.build();
}

SpliceDiagram one_node_diagram(std::initializer_list<long long> leaf_weights) {
  std::vector<Integer> w(leaf_weights.begin(), leaf_weights.end());
  return one_node_diagram(w);
}

}  // namespace splicecert
