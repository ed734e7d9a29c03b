#include "splicecert/invariants.hpp"

#include "splicecert/error.hpp"

#include <algorithm>

namespace splicecert {

namespace {

struct Profile {
  // through[v]: product of off-path weights at the nodes strictly between v and the source.
  std::vector<Integer> through;
  // toward[v]: edge at v pointing to the source (unset for the source).
  std::vector<std::optional<EdgeId>> toward;
};

// One traversal from source gives every path product ending at source.
Profile profile_from(const SpliceDiagram& d, VertexId source) {
  Profile p;
  p.through.assign(d.vertex_count(), Integer(0));
  p.toward.assign(d.vertex_count(), std::nullopt);
  std::vector<bool> seen(d.vertex_count(), false);
  std::vector<VertexId> stack{source};
  seen[source.value] = true;
  p.through[source.value] = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (EdgeId e : d.incident(u)) {
      VertexId w = d.other_end(e, u);
      if (seen[w.value]) continue;
      seen[w.value] = true;
      p.toward[w.value] = e;
      Integer factor = 1;
      if (u != source && d.is_node(u)) {
        const EdgeId skip[] = {e, *p.toward[u.value]};
        factor = d.weight_product_excluding(u, skip);
      }
      p.through[w.value] = p.through[u.value] * factor;
      stack.push_back(w);
    }
  }
  return p;
}

void require_leaf(const SpliceDiagram& d, VertexId v) {
  if (!d.is_leaf(v)) throw Error(ErrorCode::InvalidArgument, d.name(v) + " is not a leaf");
}

// The single arrowhead of multiplicity 1 that fiber_euler needs.
void require_single_knot(const SpliceDiagram& d, VertexId knot) {
  const Arrowhead* arrow = d.arrowhead(knot);
  if (!arrow) throw Error(ErrorCode::NotArrowhead, d.name(knot) + " is not an arrowhead");
  if (arrow->multiplicity != 1) {
    throw Error(ErrorCode::NonUnitMultiplicity,
                d.name(knot) + " has multiplicity " + std::to_string(arrow->multiplicity));
  }
  if (d.decoration().size() != 1) {
    throw Error(ErrorCode::MultipleArrowheads, "diagram has " + std::to_string(d.decoration().size()) +
                                                   " arrowheads; the fiber is defined for a single knot");
  }
}

Integer vertex_linking_unchecked(const SpliceDiagram& d, const Profile& p, VertexId knot, VertexId v) {
  if (v == knot) return 1;
  if (d.is_leaf(v)) return p.through[v.value];
  const EdgeId skip[] = {*p.toward[v.value]};
  return p.through[v.value] * d.weight_product_excluding(v, skip);
}

}  // namespace

Integer linking(const SpliceDiagram& d, VertexId a, VertexId b) {
  require_valid(d);
  require_leaf(d, a);
  require_leaf(d, b);
  if (a == b) throw Error(ErrorCode::SameLeaf, "linking number of " + d.name(a) + " with itself");
  return profile_from(d, b).through[a.value];
}

Integer vertex_linking(const SpliceDiagram& d, VertexId knot, VertexId v) {
  require_valid(d);
  require_leaf(d, knot);
  d.vertex(v);
  return vertex_linking_unchecked(d, profile_from(d, knot), knot, v);
}

Integer ell_prime(const SpliceDiagram& d, VertexId node, VertexId leaf) {
  require_valid(d);
  if (!d.is_node(node)) throw Error(ErrorCode::InvalidArgument, d.name(node) + " is not a node");
  require_leaf(d, leaf);
  return profile_from(d, leaf).through[node.value];
}

Integer fiber_euler(const SpliceDiagram& d, VertexId knot) {
  require_valid(d);
  require_leaf(d, knot);
  require_single_knot(d, knot);
  const Profile p = profile_from(d, knot);
  Integer chi = 0;
  for (VertexId v : d.vertices()) {
    if (v == knot) continue;
    const long long coefficient = 2 - static_cast<long long>(d.valence(v));
    if (coefficient == 0) continue;
    chi += coefficient * vertex_linking_unchecked(d, p, knot, v);
  }
  return chi;
}

Integer milnor(const SpliceDiagram& d, VertexId knot) { return 1 - fiber_euler(d, knot); }

SpliceDiagram single_knot_view(const SpliceDiagram& d, VertexId knot) {
  require_leaf(d, knot);
  Arrowhead arrow;
  if (const Arrowhead* existing = d.arrowhead(knot)) {
    if (existing->multiplicity != 1) {
      throw Error(ErrorCode::NonUnitMultiplicity,
                  d.name(knot) + " has multiplicity " + std::to_string(existing->multiplicity));
    }
    arrow = *existing;
  }
  return d.with_decoration({{knot, arrow}});
}

std::vector<Integer> gamma_generators(const SpliceDiagram& d, VertexId target, std::span<const VertexId> others) {
  require_valid(d);
  require_leaf(d, target);
  const Profile p = profile_from(d, target);
  std::vector<Integer> out;
  out.reserve(others.size());
  for (VertexId o : others) {
    require_leaf(d, o);
    if (o == target) throw Error(ErrorCode::SameLeaf, "target " + d.name(target) + " listed among the others");
    out.push_back(p.through[o.value]);
  }
  return out;
}

const Integer& LinkingTable::at(VertexId a, VertexId b) const {
  auto key = a < b ? std::pair{a, b} : std::pair{b, a};
  auto it = values.find(key);
  if (it == values.end()) throw Error(ErrorCode::InvalidArgument, "pair not in linking table");
  return it->second;
}

LinkingTable linking_table(const SpliceDiagram& d, std::span<const VertexId> knots) {
  require_valid(d);
  LinkingTable table;
  table.knots.assign(knots.begin(), knots.end());
  for (VertexId k : knots) require_leaf(d, k);
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const Profile p = profile_from(d, knots[i]);
    for (std::size_t j = 0; j < i; ++j) {
      auto key = knots[i] < knots[j] ? std::pair{knots[i], knots[j]} : std::pair{knots[j], knots[i]};
      table.values.emplace(key, p.through[knots[j].value]);
    }
  }
  return table;
}

}  // namespace splicecert
