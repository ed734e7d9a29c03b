#include "splicecert/obstruction.hpp"

#include "splicecert/error.hpp"
#include "splicecert/invariants.hpp"
#include "splicecert/semigroup.hpp"

#include <algorithm>
#include <set>

namespace splicecert {

namespace {

std::vector<Integer> canonical(std::vector<Integer> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// ell_prime(node, w) for every leaf w on the far side of edge.
std::vector<Integer> beyond_edge_generators(const SpliceDiagram& d, VertexId node, EdgeId edge) {
  struct Frame {
    VertexId vertex;
    EdgeId incoming;
    Integer product;
  };
  std::vector<Integer> out;
  std::vector<Frame> stack{{d.other_end(edge, node), edge, Integer(1)}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (d.is_leaf(f.vertex)) {
      out.push_back(f.product);
      continue;
    }
    for (EdgeId next : d.incident(f.vertex)) {
      if (next == f.incoming) continue;
      const EdgeId skip[] = {f.incoming, next};
      stack.push_back({d.other_end(next, f.vertex), next, f.product * d.weight_product_excluding(f.vertex, skip)});
    }
  }
  return out;
}

void require_unit_knot(const SpliceDiagram& d, VertexId v) {
  if (!d.is_leaf(v)) throw Error(ErrorCode::InvalidArgument, d.name(v) + " is not a leaf");
  if (const Arrowhead* a = d.arrowhead(v); a && a->multiplicity != 1) {
    throw Error(ErrorCode::NonUnitMultiplicity, d.name(v) + " has multiplicity " + std::to_string(a->multiplicity));
  }
}

RecheckResult fail(std::string reason) { return {false, std::move(reason)}; }

RecheckResult recheck_failure(const SpliceDiagram& d, const SemigroupConditionFailure& f) {
  if (!d.is_node(f.node)) return fail("certificate node is not a node");
  if (!d.has_endpoint(f.edge, f.node)) return fail("certificate edge is not incident to the node");
  const VertexId far = d.other_end(f.edge, f.node);
  if (!d.is_node(far)) return fail("certificate edge leads to a leaf");
  if (d.near_weight(f.edge, f.node) != f.weight) return fail("weight does not match the diagram");

  // Leaves beyond the edge: those whose path from the node starts with it.
  std::vector<Integer> expected;
  for (VertexId leaf : d.leaves()) {
    TreePath p = d.path(f.node, leaf);
    if (p.edges.front() == f.edge) expected.push_back(ell_prime(d, f.node, leaf));
  }
  if (canonical(expected) != f.generators) return fail("generators do not match the ell' values beyond the edge");
  if (NumericalSemigroup(f.generators).contains(f.weight)) return fail("weight lies in the semigroup");

  std::set<std::int64_t> colours;
  for (VertexId leaf : d.leaves()) {
    const Arrowhead* a = d.arrowhead(leaf);
    if (!a || a->multiplicity != 1) return fail("end-knot " + d.name(leaf) + " is not a unit arrowhead");
    if (!colours.insert(a->colour).second) return fail("end-knots do not carry distinct colours");
  }
  return {true, {}};
}

RecheckResult recheck_delta(const SpliceDiagram& d, const DeltaObstruction& o) {
  if (!d.is_leaf(o.target)) return fail("target is not a leaf");
  if (milnor(single_knot_view(d, o.target), o.target) != o.mu) return fail("mu does not match the diagram");
  std::vector<Integer> expected;
  for (VertexId other : o.others) expected.push_back(linking(d, other, o.target));
  if (canonical(expected) != o.generators) return fail("generators do not match the linking numbers");
  NumericalSemigroup s(o.generators);
  if (s.gcd() != 1) return fail("semigroup has infinitely many gaps");
  if (s.genus() != o.delta) return fail("delta does not match the gap count");
  if (!(o.mu > 2 * o.delta)) return fail("mu does not exceed twice delta");
  return {true, {}};
}

}  // namespace

std::vector<SemigroupConditionFailure> semigroup_condition_failures(const SpliceDiagram& d) {
  require_valid(d);
  std::vector<SemigroupConditionFailure> out;
  for (VertexId v : d.nodes()) {
    for (EdgeId e : d.incident(v)) {
      if (!d.is_node(d.other_end(e, v))) continue;
      const Integer& weight = d.near_weight(e, v);
      auto gens = canonical(beyond_edge_generators(d, v, e));
      if (!NumericalSemigroup(gens).contains(weight)) out.push_back({v, e, weight, std::move(gens)});
    }
  }
  return out;
}

SpliceDiagram colour_all_end_knots(const SpliceDiagram& d) {
  Decoration decoration;
  std::int64_t colour = 1;
  for (VertexId leaf : d.leaves()) decoration[leaf] = Arrowhead{1, colour++};
  return d.with_decoration(std::move(decoration));
}

std::optional<Certificate> method2_certificate(const SpliceDiagram& d) {
  auto failures = semigroup_condition_failures(d);
  if (failures.empty()) return std::nullopt;
  return Certificate{std::move(failures.front()), colour_all_end_knots(d)};
}

std::optional<Integer> delta_gap_count(const SpliceDiagram& d, VertexId target, std::span<const VertexId> others) {
  require_unit_knot(d, target);
  for (VertexId o : others) require_unit_knot(d, o);
  if (others.empty()) return std::nullopt;
  NumericalSemigroup s(gamma_generators(d, target, others));
  if (s.gcd() != 1) return std::nullopt;
  return s.genus();
}

std::optional<Certificate> method1_certificate(const SpliceDiagram& d, VertexId target,
                                               std::span<const VertexId> others) {
  auto delta = delta_gap_count(d, target, others);
  if (!delta) return std::nullopt;
  Integer mu = milnor(single_knot_view(d, target), target);
  if (!(mu > 2 * *delta)) return std::nullopt;

  Decoration decoration;
  std::int64_t colour = 1;
  for (VertexId o : others) decoration[o] = Arrowhead{1, colour++};
  decoration[target] = Arrowhead{1, colour};

  DeltaObstruction evidence{target, {others.begin(), others.end()}, std::move(mu), std::move(*delta),
                            canonical(gamma_generators(d, target, others))};
  return Certificate{std::move(evidence), d.with_decoration(std::move(decoration))};
}

RecheckResult recheck(const Certificate& certificate) {
  try {
    const SpliceDiagram& d = certificate.diagram;
    auto report = validate(d);
    if (!report.valid()) return fail("diagram is invalid: " + report.violations.front().message);
    if (certificate.is_semigroup_failure()) return recheck_failure(d, certificate.semigroup_failure());
    return recheck_delta(d, certificate.delta_obstruction());
  } catch (const Error& e) {
    return fail(e.what());
  }
}

}  // namespace splicecert
