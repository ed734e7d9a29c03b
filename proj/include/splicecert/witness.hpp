#pragma once

#include "splicecert/diagram.hpp"
#include "splicecert/obstruction.hpp"

#include <optional>
#include <string>

namespace splicecert {

/// Which construction produced a witness.
enum class CaseTag {
  ExistingFailure,    // the input already fails the semigroup condition
  Brieskorn,          // one node, three leaves: (2,s)-cable, rs > 2pq
  Seifert,            // one node, n >= 4 leaves: s = 2A_{n-1} + 1
  EndNode4,           // end-node with >= 4 edges: s = 2rA_{n-1} + 1
  EndNode3,           // end-node with 3 edges: qs > 2pr
  TwoThreeReduction,  // (2, 2r+1)-cable at a 3-weighted leaf
  InternalCabling,    // internal node with weights k and 1 toward a (2,3)-pair node
  TwoThreeChain,      // (2, r_n + 2x)-cable at the 3-leaf of a (2,3)-pair node
  WeakParallel,        // two parallel (1,d)-cables
  SafetyNet,          // bounded exhaustive search
};

const char* case_tag_name(CaseTag tag);

struct WitnessResult {
  /// Every end-knot arrowed with its own colour.
  SpliceDiagram cabled_diagram;
  /// Absent when the input diagram already carries a certificate.
  std::optional<CablingSpec> spec;
  /// Extra (2,s)-cable applied after spec when the first cabling alone left
  /// two knots with equal linking profiles. Ids refer to the diagram after spec.
  std::optional<CablingSpec> second_spec;
  Certificate certificate;
  CaseTag case_tag = CaseTag::SafetyNet;
  std::string detail;
};

/// Two parallel (1,d)-cables on an end-knot of an end-node. Input must be
/// valid and minimal, and not M(2,3,5).
WitnessResult weak_witness(const SpliceDiagram& d);

/// A coloured link of pairwise distinguishable knots that is certified not to
/// be potentially principal. Input must be valid, minimal, and none of
/// M(2,3,5), M(2,3,7), M(2,3,11).
WitnessResult main_witness(const SpliceDiagram& d);

/// True iff the arrowheads have pairwise distinct multisets of linking numbers
/// with the other arrowheads.
bool distinct_knot_profiles(const SpliceDiagram& d);
bool distinct_knot_check(const WitnessResult& result);

}  // namespace splicecert
