#include "splicecert/witness.hpp"

#include "splicecert/error.hpp"
#include "splicecert/invariants.hpp"

#include <algorithm>
#include <set>

namespace splicecert {

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::ExistingFailure: return "existing-failure";
    case CaseTag::Brieskorn: return "brieskorn";
    case CaseTag::Seifert: return "seifert";
    case CaseTag::EndNode4: return "end-node-4";
    case CaseTag::EndNode3: return "end-node-3";
    case CaseTag::TwoThreeReduction: return "two-three-reduction";
    case CaseTag::InternalCabling: return "internal-cabling";
    case CaseTag::TwoThreeChain: return "two-three-chain";
    case CaseTag::WeakParallel: return "weak-parallel";
    case CaseTag::SafetyNet: return "safety-net";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kSafetyNetLimit = 2048;
constexpr std::size_t kSymmetryAttempts = 4;

struct Candidate {
  CablingSpec spec;
  CaseTag tag;
  std::string detail;
};

// An edge at a node, described by its weight there and where it goes.
struct Arm {
  EdgeId edge;
  VertexId far;
  Integer weight;
};

std::vector<Arm> arms_of(const SpliceDiagram& d, VertexId node) {
  std::vector<Arm> out;
  for (EdgeId e : d.incident(node)) out.push_back({e, d.other_end(e, node), d.near_weight(e, node)});
  return out;
}

std::vector<Arm> leaf_arms(const SpliceDiagram& d, VertexId node) {
  std::vector<Arm> out;
  for (Arm& a : arms_of(d, node)) {
    if (d.is_leaf(a.far)) out.push_back(std::move(a));
  }
  std::stable_sort(out.begin(), out.end(), [](const Arm& x, const Arm& y) { return x.weight < y.weight; });
  return out;
}

std::vector<Arm> internal_arms(const SpliceDiagram& d, VertexId node) {
  std::vector<Arm> out;
  for (Arm& a : arms_of(d, node)) {
    if (d.is_node(a.far)) out.push_back(std::move(a));
  }
  return out;
}

Integer product(const std::vector<Arm>& arms, std::size_t count) {
  Integer p = 1;
  for (std::size_t i = 0; i < count; ++i) p *= arms[i].weight;
  return p;
}

// (2,s)-cable on the knot at `leaf`: new node with s toward `node`, the knot
// re-attached with weight 2 and a new weight-1 knot K.
CablingSpec two_s_cable(VertexId node, VertexId leaf, const Integer& s) {
  CablingSpec spec{node, leaf, s, 2, {NewArm{1, Arrowhead{}, "K"}}, "c", {{"s", s}}};
  return spec;
}

// Two parallel (1,d)-cables: the knot and K both at weight 1 on a new node.
CablingSpec parallel_cable(VertexId node, VertexId leaf, const Integer& d) {
  CablingSpec spec{node, leaf, d, 1, {NewArm{1, Arrowhead{}, "K"}}, "c", {{"d", d}}};
  return spec;
}

// Internal cabling: new node on node--far with k toward node, 1 toward far.
CablingSpec internal_cable(VertexId node, VertexId far, const Integer& k) {
  CablingSpec spec{node, far, k, 1, {NewArm{1, Arrowhead{}, "K"}}, "c", {{"k", k}}};
  return spec;
}

Integer ceil_div(const Integer& a, const Integer& b) { return (a + b - 1) / b; }

void push_unique_s(std::vector<Integer>& values, const Integer& s) {
  if (s >= 1 && std::find(values.begin(), values.end(), s) == values.end()) values.push_back(s);
}

// Failures at `prefer` win; otherwise the first in canonical order.
std::optional<WitnessResult> evaluate(const SpliceDiagram& base, const Candidate& c, bool require_distinct,
                                      std::optional<VertexId> prefer = std::nullopt) {
  SubdivisionResult sub = subdivide_edge(base, c.spec);
  if (!sub.report.valid()) return std::nullopt;
  SpliceDiagram coloured = colour_all_end_knots(sub.diagram);
  auto failures = semigroup_condition_failures(coloured);
  if (failures.empty()) return std::nullopt;
  auto at = [&](VertexId v) {
    return std::find_if(failures.begin(), failures.end(), [&](const SemigroupConditionFailure& f) { return f.node == v; });
  };
  auto chosen = at(prefer.value_or(sub.new_node));
  if (chosen == failures.end()) chosen = at(sub.new_node);
  if (chosen == failures.end()) chosen = failures.begin();
  if (require_distinct && !distinct_knot_profiles(coloured)) return std::nullopt;
  return WitnessResult{coloured, c.spec, std::nullopt, Certificate{std::move(*chosen), coloured}, c.tag, c.detail};
}

std::optional<WitnessResult> first_success(const SpliceDiagram& base, const std::vector<Candidate>& candidates,
                                           bool require_distinct) {
  for (const Candidate& c : candidates) {
    if (auto r = evaluate(base, c, require_distinct)) return r;
  }
  return std::nullopt;
}

std::vector<Candidate> leaf_cables(const SpliceDiagram& d);

// A symmetric input can make the cabled knots pairwise homeomorphic even
// though the certificate holds. A second (2,s)-cable elsewhere keeps the
// failure and separates the linking profiles.
std::optional<WitnessResult> break_symmetry(const SpliceDiagram& base, const std::vector<Candidate>& candidates,
                                            std::size_t max_attempts) {
  std::size_t attempts = 0;
  for (const Candidate& c : candidates) {
    auto first = evaluate(base, c, false);
    if (!first) continue;
    if (++attempts > max_attempts) break;
    const SpliceDiagram middle = first->cabled_diagram.undecorated();
    const VertexId failing_node = first->certificate.semigroup_failure().node;
    for (const Candidate& extra : leaf_cables(middle)) {
      if (auto r = evaluate(middle, extra, true, failing_node)) {
        r->spec = c.spec;
        r->second_spec = extra.spec;
        r->case_tag = c.tag;
        r->detail = c.detail + "; second cable on " + middle.name(extra.spec.far_end) + " separates the knots";
        return r;
      }
    }
  }
  return std::nullopt;
}

// Every (2,s)-cable on every leaf and internal cabling on every internal
// edge, up to a bound derived from the surrounding weight products.
std::vector<Candidate> safety_net(const SpliceDiagram& d, bool leaves_only = false) {
  std::vector<Candidate> out;
  for (VertexId v : d.nodes()) {
    for (const Arm& arm : arms_of(d, v)) {
      if (leaves_only && !d.is_leaf(arm.far)) continue;
      const EdgeId skip[] = {arm.edge};
      const Integer bound = 2 * d.weight_product_excluding(v, skip) + 3;
      std::size_t emitted = 0;
      for (Integer k = 1; k <= bound && emitted < kSafetyNetLimit; ++k, ++emitted) {
        if (d.is_leaf(arm.far)) {
          out.push_back({two_s_cable(v, arm.far, k), CaseTag::SafetyNet, "cable on " + d.name(arm.far)});
        } else {
          out.push_back({internal_cable(v, arm.far, k), CaseTag::SafetyNet, "internal " + d.edge_label(arm.edge)});
        }
      }
    }
  }
  return out;
}

std::vector<Candidate> leaf_cables(const SpliceDiagram& d) { return safety_net(d, true); }

void check_preconditions(const SpliceDiagram& d, bool weak) {
  require_valid(d);
  if (auto t = exceptional_type(d)) {
    if (!weak || *t == ExceptionalType::M235) {
      throw Error(ErrorCode::Exceptional, std::string("exceptional manifold ") + exceptional_name(*t));
    }
  }
  auto minimality = is_minimal(d.undecorated());
  if (!minimality.minimal) {
    throw Error(ErrorCode::NotMinimal, "diagram is not minimal: " + minimality.violations.front().message);
  }
}

// ---------------------------------------------------------------------------
// one-node cases

// The (2,s)-cable value the Brieskorn-Pham argument names for (p,q).
std::pair<Integer, std::string> brieskorn_branch(const Integer& p, const Integer& q) {
  if (p == 2) {
    if (q == 3) return {1, "(p,q)=(2,3)"};
    if (q == 5) return {3, "(p,q)=(2,5)"};
    return {5, "p=2,q>5"};
  }
  if (q == p + 1) {
    if (p == 3) return {5, "(p,q)=(3,4)"};
    return {2 * p + 3, "q=p+1"};
  }
  if (q == 2 * p + 1) {
    if (p == 3) return {11, "(p,q)=(3,7)"};
    return {2 * p + 3, "q=2p+1"};
  }
  return {2 * p + 1, "generic"};
}

std::vector<Candidate> brieskorn_candidates(const SpliceDiagram& d, VertexId node) {
  auto leaves = leaf_arms(d, node);
  const Integer& p = leaves[0].weight;
  const Integer& q = leaves[1].weight;
  const Integer& r = leaves[2].weight;
  const VertexId knot = leaves[2].far;

  auto [branch_s, branch] = brieskorn_branch(p, q);
  std::vector<Integer> values{branch_s};
  std::vector<Integer> listed{2 * p + 1, 2 * p + 3, 11, 5, 3, 1};
  std::sort(listed.begin(), listed.end());
  for (const Integer& s : listed) {
    if (s % 2 == 1 && r * s > 2 * p * q) push_unique_s(values, s);
  }
  std::vector<Candidate> out;
  for (const Integer& s : values) out.push_back({two_s_cable(node, knot, s), CaseTag::Brieskorn, branch});
  const Integer bound = 2 * p * q + 2 * p + 3;
  for (Integer s = 1; s <= bound; s += 2) {
    if (std::find(values.begin(), values.end(), s) != values.end()) continue;
    out.push_back({two_s_cable(node, knot, s), CaseTag::SafetyNet, "exhaustive s"});
  }
  return out;
}

std::vector<Candidate> seifert_candidates(const SpliceDiagram& d, VertexId node) {
  auto leaves = leaf_arms(d, node);
  const std::size_t n = leaves.size();
  const Integer big_a = product(leaves, n - 1);
  const Integer a_last = big_a / leaves[n - 2].weight;
  const Integer s = 2 * a_last + 1;
  return {{two_s_cable(node, leaves[n - 1].far, s), CaseTag::Seifert, "s=2A_{n-1}+1"}};
}

// ---------------------------------------------------------------------------
// multi-node cases

bool is_two_three_end_node(const SpliceDiagram& d, VertexId v) {
  if (d.valence(v) != 3) return false;
  auto leaves = leaf_arms(d, v);
  auto internal = internal_arms(d, v);
  return leaves.size() == 2 && internal.size() == 1 && leaves[0].weight == 2 && leaves[1].weight == 3 &&
         internal[0].weight >= 7;
}

std::vector<Candidate> end_node_candidates(const SpliceDiagram& d, VertexId node) {
  auto leaves = leaf_arms(d, node);
  auto internal = internal_arms(d, node);
  if (internal.size() != 1 || leaves.size() < 2) return {};
  const Integer& r = internal.front().weight;
  std::vector<Candidate> out;

  if (leaves.size() >= 3) {
    const std::size_t n = leaves.size();
    const Integer big_a = product(leaves, n - 1);
    const Integer s = 2 * r * (big_a / leaves[n - 2].weight) + 1;
    out.push_back({two_s_cable(node, leaves[n - 1].far, s), CaseTag::EndNode4, "s=2rA_{n-1}+1"});
    return out;
  }

  const Integer& p = leaves[0].weight;
  const Integer& q = leaves[1].weight;
  const VertexId knot = leaves[1].far;
  std::vector<Integer> values;
  std::string detail;
  if (r < q) {
    detail = "r<q";
    push_unique_s(values, 2 * std::min(p, r) + 1);
    push_unique_s(values, 2 * p + 3);
  } else {
    detail = "p<q<r";
    for (const Integer& s : {Integer(2 * r + 1), Integer(2 * r + 3), Integer(2 * r - 1), Integer(r + 2), Integer(7)}) {
      if (s % 2 == 1) push_unique_s(values, s);
    }
  }
  for (const Integer& s : values) out.push_back({two_s_cable(node, knot, s), CaseTag::EndNode3, detail});
  return out;
}

// Candidates once every end-node is a (2,3)-pair node with third weight >= 7.
std::vector<Candidate> chain_candidates(const SpliceDiagram& d) {
  std::set<VertexId> pair_nodes;
  for (VertexId v : d.nodes()) {
    if (is_two_three_end_node(d, v)) pair_nodes.insert(v);
  }

  std::vector<Candidate> reductions, internal, chain;
  for (VertexId v : d.nodes()) {
    // Edges of v toward the rest of the graph once pair nodes are deleted.
    std::vector<Arm> outward, branches;
    for (Arm& arm : arms_of(d, v)) {
      if (d.is_node(arm.far) && !pair_nodes.count(arm.far)) outward.push_back(std::move(arm));
      else branches.push_back(std::move(arm));
    }
    if (outward.size() > 1 || branches.size() < 2) continue;
    std::stable_sort(branches.begin(), branches.end(),
                     [](const Arm& x, const Arm& y) { return x.weight < y.weight; });
    const Integer r = outward.empty() ? Integer(1) : outward.front().weight;
    const std::size_t n = branches.size();
    const Integer big_a = product(branches, n - 1);
    const Arm& last = branches.back();

    for (const Arm& b : branches) {
      if (d.is_leaf(b.far) && b.weight == 3) {
        reductions.push_back({two_s_cable(v, b.far, 2 * r + 1), CaseTag::TwoThreeReduction, "s=2r+1"});
      }
    }
    if (d.is_leaf(last.far)) {
      if (n >= 3) {
        reductions.push_back({two_s_cable(v, last.far, 2 * r * (big_a / branches[n - 2].weight) + 1),
                              CaseTag::EndNode4, "s=2rA_{n-1}+1"});
      }
      continue;
    }

    const VertexId far = last.far;
    const Integer& r_n = d.near_weight(last.edge, far);
    const Integer k_low = (r * big_a) / last.weight + 1;  // smallest k > rA/a_n
    const Integer k_high = ceil_div(r_n, 6) - 1;           // largest k < r_n/6
    for (Integer k = k_low; k <= k_high && k - k_low < Integer(kSafetyNetLimit); ++k) {
      internal.push_back({internal_cable(v, far, k), CaseTag::InternalCabling, "k in (rA/a_n, r_n/6)"});
    }
    if (pair_nodes.count(far)) {
      for (const Arm& leaf : leaf_arms(d, far)) {
        if (leaf.weight != 3) continue;
        for (int eps = 0; eps <= 2; ++eps) {
          const Integer x = ceil_div(r_n, 6) + eps;
          CablingSpec spec = two_s_cable(far, leaf.far, r_n + 2 * x);
          spec.parameters["x"] = x;
          chain.push_back({std::move(spec), CaseTag::TwoThreeChain, "s=r_n+2x"});
        }
      }
    }
  }
  std::vector<Candidate> out;
  for (auto* group : {&reductions, &internal, &chain}) {
    for (auto& c : *group) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

bool distinct_knot_profiles(const SpliceDiagram& d) {
  auto knots = d.arrowheads();
  if (knots.size() <= 1) return true;
  LinkingTable table = linking_table(d, knots);
  std::set<std::vector<Integer>> profiles;
  for (VertexId a : knots) {
    std::vector<Integer> profile;
    for (VertexId b : knots) {
      if (a != b) profile.push_back(table.at(a, b));
    }
    std::sort(profile.begin(), profile.end());
    if (!profiles.insert(std::move(profile)).second) return false;
  }
  return true;
}

bool distinct_knot_check(const WitnessResult& result) { return distinct_knot_profiles(result.cabled_diagram); }

WitnessResult weak_witness(const SpliceDiagram& input) {
  check_preconditions(input, true);
  const SpliceDiagram d = input.undecorated();
  const Shape shape = classify(d);
  const bool one_node = shape.kind == Shape::Kind::OneNode;
  const std::vector<VertexId> chosen = one_node ? d.nodes() : shape.end_nodes;

  std::vector<Candidate> candidates;
  for (VertexId node : chosen) {
    auto leaves = leaf_arms(d, node);
    Integer c;
    if (one_node) {
      // The smallest leaf plays the role of the rest of the graph.
      c = leaves.front().weight;
      leaves.erase(leaves.begin());
    } else {
      auto internal = internal_arms(d, node);
      if (internal.size() != 1) continue;
      c = internal.front().weight;
    }
    const std::size_t n = leaves.size();
    if (n < 2) continue;
    const Integer big_a = product(leaves, n - 1);
    const Integer alpha = c * (big_a / leaves[n - 2].weight);
    const Integer& a1 = leaves[0].weight;
    const VertexId knot = leaves[n - 1].far;

    std::vector<std::pair<Integer, std::string>> values{{alpha + 1, "d=alpha+1"}, {alpha + 2, "d=alpha+2"}};
    if (n == 2) {
      if (c >= 7 && a1 == 2) values.push_back({c - 2, "d=c-2"});
      if (c == 2 && a1 == 3) values.push_back({3, "(c,a1)=(2,3)"});
      if ((c == 3 || c == 5) && a1 == 2) values.push_back({c + 2, "d=c+2"});
      if (one_node && c == 2 && a1 == 5) values.push_back({3, "one node 2,5,a2"});
      if (one_node && c == 2 && a1 == 3) values.push_back({1, "one node 2,3,a2"});
    }
    for (auto& [value, detail] : values) {
      if (value >= 1) candidates.push_back({parallel_cable(node, knot, value), CaseTag::WeakParallel, detail});
    }
  }
  if (auto r = first_success(d, candidates, false)) return *r;

  std::vector<Candidate> net;
  for (VertexId node : chosen) {
    auto leaves = leaf_arms(d, node);
    const EdgeId skip[] = {leaves.back().edge};
    const Integer bound = 2 * d.weight_product_excluding(node, skip) + 3;
    for (Integer value = 1; value <= bound && value <= Integer(kSafetyNetLimit); ++value) {
      net.push_back({parallel_cable(node, leaves.back().far, value), CaseTag::SafetyNet, "exhaustive d"});
    }
  }
  if (auto r = first_success(d, net, false)) return *r;
  throw Error(ErrorCode::CaseExhausted, "no parallel cabling produced a certificate");
}

WitnessResult main_witness(const SpliceDiagram& input) {
  check_preconditions(input, false);
  const SpliceDiagram d = input.undecorated();
  const Shape shape = classify(d);

  std::vector<Candidate> candidates;
  if (shape.kind == Shape::Kind::OneNode) {
    const VertexId node = d.nodes().front();
    if (shape.leaf_weights.size() == 3) candidates = brieskorn_candidates(d, node);
    else candidates = seifert_candidates(d, node);
  } else {
    if (auto existing = method2_certificate(d); existing && distinct_knot_profiles(existing->diagram)) {
      return WitnessResult{existing->diagram, std::nullopt, std::nullopt, std::move(*existing), CaseTag::ExistingFailure,
                           "semigroup condition already fails"};
    }
    for (VertexId node : shape.end_nodes) {
      for (auto& c : end_node_candidates(d, node)) candidates.push_back(std::move(c));
    }
    for (auto& c : chain_candidates(d)) candidates.push_back(std::move(c));
  }
  if (auto r = first_success(d, candidates, true)) return *r;
  const auto net = safety_net(d);
  if (auto r = first_success(d, net, true)) return *r;
  if (auto r = break_symmetry(d, candidates, kSymmetryAttempts)) return *r;
  if (auto r = break_symmetry(d, net, kSymmetryAttempts)) return *r;
  throw Error(ErrorCode::CaseExhausted, "no candidate cabling produced a verified witness");
}

}  // namespace splicecert
