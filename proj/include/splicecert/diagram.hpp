#pragma once

#include "splicecert/integer.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace splicecert {

struct VertexId {
  std::uint32_t value = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  auto operator<=>(const EdgeId&) const = default;
};

enum class VertexKind { Leaf, Node };

struct Vertex {
  std::string name;
  VertexKind kind = VertexKind::Leaf;
};

/// An undirected edge. Each endpoint carries the near-weight written next to
/// it; leaf endpoints carry none.
struct Edge {
  VertexId a;
  VertexId b;
  std::optional<Integer> weight_a;
  std::optional<Integer> weight_b;
};

/// Marks a leaf as a link component.
struct Arrowhead {
  std::uint64_t multiplicity = 1;
  std::int64_t colour = 0;
  bool operator==(const Arrowhead&) const = default;
};

using Decoration = std::map<VertexId, Arrowhead>;

struct TreePath {
  std::vector<VertexId> vertices;  // endpoints included
  std::vector<EdgeId> edges;       // edges[i] joins vertices[i] and vertices[i+1]
};

/// Weighted tree encoding a homology-sphere singularity link, optionally
/// decorated with arrowheads. Immutable once built; use DiagramBuilder to
/// construct or derive new diagrams.
class SpliceDiagram {
 public:
  SpliceDiagram() = default;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Vertex& vertex(VertexId v) const;
  const Edge& edge(EdgeId e) const;
  const std::string& name(VertexId v) const { return vertex(v).name; }
  bool is_leaf(VertexId v) const { return vertex(v).kind == VertexKind::Leaf; }
  bool is_node(VertexId v) const { return vertex(v).kind == VertexKind::Node; }

  /// Incident edges in ascending edge-id order.
  std::span<const EdgeId> incident(VertexId v) const;
  std::size_t valence(VertexId v) const { return incident(v).size(); }

  std::optional<VertexId> find(std::string_view name) const;
  /// Like find, but throws UnknownVertex.
  VertexId require(std::string_view name) const;

  VertexId other_end(EdgeId e, VertexId v) const;
  bool has_endpoint(EdgeId e, VertexId v) const;
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

  /// Near-weight at endpoint v of e (nullopt for a leaf endpoint).
  const std::optional<Integer>& weight_at(EdgeId e, VertexId v) const;
  /// Near-weight at a node endpoint; throws InvalidDiagram when absent.
  const Integer& near_weight(EdgeId e, VertexId node) const;

  /// Product of near-weights at node v over incident edges other than those listed.
  Integer weight_product_excluding(VertexId node, std::span<const EdgeId> skip) const;

  const Decoration& decoration() const { return decoration_; }
  const Arrowhead* arrowhead(VertexId v) const;
  bool is_arrowhead(VertexId v) const { return arrowhead(v) != nullptr; }

  std::vector<VertexId> vertices() const;
  std::vector<VertexId> nodes() const;
  std::vector<VertexId> leaves() const;
  std::vector<VertexId> arrowheads() const;
  std::vector<EdgeId> edges() const;

  /// "a-b" using endpoint names in declaration order.
  std::string edge_label(EdgeId e) const;

  /// Unique path between two vertices; throws InvalidDiagram if disconnected.
  TreePath path(VertexId from, VertexId to) const;

  SpliceDiagram with_decoration(Decoration decoration) const;
  SpliceDiagram undecorated() const { return with_decoration({}); }

 private:
  friend class DiagramBuilder;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
  std::map<std::string, VertexId, std::less<>> names_;
  Decoration decoration_;
};

/// Accumulates vertices and edges. Referential errors (duplicate names, unknown
/// ids, weight on the wrong kind of endpoint) throw immediately; semantic
/// conditions are left for validate().
class DiagramBuilder {
 public:
  DiagramBuilder() = default;
  explicit DiagramBuilder(SpliceDiagram base);

  VertexId add_node(std::string name);
  VertexId add_leaf(std::string name);
  EdgeId add_edge(VertexId a, VertexId b, std::optional<Integer> weight_a,
                  std::optional<Integer> weight_b);
  /// Convenience: node-to-leaf edge with the weight at the node.
  EdgeId add_leaf_edge(VertexId node, VertexId leaf, Integer weight);
  void set_arrow(VertexId leaf, Arrowhead arrow = {});
  void clear_arrow(VertexId leaf);

  std::optional<VertexId> find(std::string_view name) const;
  /// base, base', base'', ... first name not yet taken.
  std::string fresh_name(std::string_view base) const;

  SpliceDiagram build() const { return diagram_; }
  const SpliceDiagram& peek() const { return diagram_; }

 private:
  VertexId add_vertex(std::string name, VertexKind kind);

  SpliceDiagram diagram_;
};

enum class ViolationKind {
  NoNode,
  NotConnected,
  HasCycle,
  SelfLoop,
  LeafValence,
  NodeValence,
  LeafToLeafEdge,
  MissingWeight,
  UnexpectedWeight,
  NonPositiveWeight,
  NotCoprime,
  EdgeDeterminant,
  ArrowOnNode,
  ValenceTwo,
  RemovableLeaf,
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
  std::optional<VertexId> vertex;
  std::optional<EdgeId> edge;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate(const SpliceDiagram& d);

/// Throws InvalidDiagram carrying the first violation when d is not valid.
void require_valid(const SpliceDiagram& d);

/// d_ve * d_we - (other near-weights at v) * (other near-weights at w).
Integer edge_determinant(const SpliceDiagram& d, EdgeId e);

struct Shape {
  enum class Kind { OneNode, MultiNode };
  Kind kind = Kind::OneNode;
  std::vector<Integer> leaf_weights;  // OneNode: sorted ascending
  std::vector<VertexId> end_nodes;    // MultiNode
};

Shape classify(const SpliceDiagram& d);

/// Nodes with at most one non-leaf incident edge, ascending by id.
std::vector<VertexId> end_nodes(const SpliceDiagram& d);

struct NewArm {
  Integer weight;
  std::optional<Arrowhead> arrow;
  std::string label;
};

/// Inserts a fresh node on the edge old_node--far_end. The old node keeps its
/// near-weight; the new node gets weight_toward_old_node on that side,
/// weight_toward_far_side on the other, and one leaf per new arm. A leaf far
/// end keeps its identity and decoration.
struct CablingSpec {
  VertexId old_node;
  VertexId far_end;
  Integer weight_toward_old_node;
  Integer weight_toward_far_side;
  std::vector<NewArm> new_arms;
  std::string node_label = "c";
  /// Named construction parameters (s, d, k, x, t) for reporting.
  std::map<std::string, Integer> parameters;
};

struct SubdivisionResult {
  SpliceDiagram diagram;
  ValidationReport report;
  VertexId new_node;
  std::vector<VertexId> new_arms;
};

SubdivisionResult subdivide_edge(const SpliceDiagram& d, const CablingSpec& spec);

enum class ExceptionalType { M235, M237, M2311 };

const char* exceptional_name(ExceptionalType t);

std::optional<ExceptionalType> exceptional_type(const SpliceDiagram& d);

struct MinimalityReport {
  bool minimal = true;
  std::vector<Violation> violations;
};

MinimalityReport is_minimal(const SpliceDiagram& d);

/// One node with the given leaf weights; the node is "v", the leaves K1..Kn.
SpliceDiagram one_node_diagram(std::span<const Integer> leaf_weights);
SpliceDiagram one_node_diagram(std::initializer_list<long long> leaf_weights);

}  // namespace splicecert
