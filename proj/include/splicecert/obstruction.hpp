#pragma once

#include "splicecert/diagram.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace splicecert {

/// The near-weight of node on edge is not in the semigroup generated by the
/// ell_prime values of the leaves beyond edge.
struct SemigroupConditionFailure {
  VertexId node;
  EdgeId edge;
  Integer weight;
  std::vector<Integer> generators;  // sorted, deduplicated
};

/// mu(target) > 2 * delta, where delta is the gap count of the semigroup
/// generated by the linking numbers of the other knots with target.
struct DeltaObstruction {
  VertexId target;
  std::vector<VertexId> others;
  Integer mu;
  Integer delta;
  std::vector<Integer> generators;  // sorted, deduplicated
};

struct Certificate {
  std::variant<SemigroupConditionFailure, DeltaObstruction> evidence;
  /// The coloured link being certified: arrowheads mark its components.
  SpliceDiagram diagram;

  bool is_semigroup_failure() const { return std::holds_alternative<SemigroupConditionFailure>(evidence); }
  const SemigroupConditionFailure& semigroup_failure() const { return std::get<SemigroupConditionFailure>(evidence); }
  const DeltaObstruction& delta_obstruction() const { return std::get<DeltaObstruction>(evidence); }
};

/// Every (node, node-to-node edge) pair where the semigroup condition fails,
/// ordered by node id then edge id. Arrowheads count as plain leaves.
std::vector<SemigroupConditionFailure> semigroup_condition_failures(const SpliceDiagram& d);

/// Every leaf a multiplicity-1 arrowhead, colours 1..n in leaf-id order.
SpliceDiagram colour_all_end_knots(const SpliceDiagram& d);

/// First semigroup failure, certifying the link of all end-knots.
std::optional<Certificate> method2_certificate(const SpliceDiagram& d);

/// Gap count of <gamma_generators(target, others)>; nullopt stands for
/// infinity (generators share a factor, or no others).
std::optional<Integer> delta_gap_count(const SpliceDiagram& d, VertexId target, std::span<const VertexId> others);

/// A DeltaObstruction iff milnor(target) > 2 * delta with delta finite.
std::optional<Certificate> method1_certificate(const SpliceDiagram& d, VertexId target,
                                               std::span<const VertexId> others);

struct RecheckResult {
  bool ok = false;
  std::string reason;
};

/// Recomputes every claim of the certificate from its diagram.
RecheckResult recheck(const Certificate& certificate);

}  // namespace splicecert
