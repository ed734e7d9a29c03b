#pragma once

#include "splicecert/diagram.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace splicecert {

/// Linking number of two end-knots: product over the nodes on the path a->b
/// of the near-weights at that node on edges off the path.
Integer linking(const SpliceDiagram& d, VertexId a, VertexId b);

/// Degree of the open book of knot k at vertex v. 1 for v == k, the linking
/// number for a leaf v, and the off-path product along v->k (v included) for
/// a node v.
Integer vertex_linking(const SpliceDiagram& d, VertexId knot, VertexId v);

/// Off-path product along node->leaf, excluding the weights at node itself.
Integer ell_prime(const SpliceDiagram& d, VertexId node, VertexId leaf);

/// Euler characteristic of the open-book fiber of the unique arrowhead knot:
/// sum over non-arrowhead vertices v of (2 - valence(v)) * vertex_linking(knot, v).
Integer fiber_euler(const SpliceDiagram& d, VertexId knot);

/// 1 - fiber_euler.
Integer milnor(const SpliceDiagram& d, VertexId knot);

/// The diagram with its decoration replaced by a single multiplicity-1
/// arrowhead on knot (keeping the knot's colour if it had one). Throws
/// NonUnitMultiplicity if knot is decorated with another multiplicity.
SpliceDiagram single_knot_view(const SpliceDiagram& d, VertexId knot);

/// [linking(o, target) for o in others], order preserved.
std::vector<Integer> gamma_generators(const SpliceDiagram& d, VertexId target, std::span<const VertexId> others);

struct LinkingTable {
  std::vector<VertexId> knots;
  std::map<std::pair<VertexId, VertexId>, Integer> values;  // keyed with first < second

  const Integer& at(VertexId a, VertexId b) const;
};

/// Pairwise linking numbers of the given leaves.
LinkingTable linking_table(const SpliceDiagram& d, std::span<const VertexId> knots);

}  // namespace splicecert
