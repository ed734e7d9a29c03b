// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "cli.hpp"
#include "fixtures_util.hpp"
#include "oracles.hpp"
#include "splicecert/error.hpp"
#include "splicecert/invariants.hpp"
#include "splicecert/json.hpp"
#include "splicecert/obstruction.hpp"
#include "splicecert/semigroup.hpp"
#include "splicecert/witness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace splicecert;

namespace {

// Collects the first few problems of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string out = std::to_string(failures_) + " problem(s)";
    for (const auto& n : notes_) out += "; " + n;
    return out;
  }

 private:
  int failures_ = 0;
  std::vector<std::string> notes_;
};

std::vector<VertexId> all_but(const SpliceDiagram& d, VertexId target) {
  std::vector<VertexId> out;
  for (VertexId leaf : d.leaves()) {
    if (leaf != target) out.push_back(leaf);
  }
  return out;
}

std::vector<long long> as_ll(const std::vector<Integer>& v) {
  std::vector<long long> out;
  for (const Integer& x : v) out.push_back(x.convert_to<long long>());
  return out;
}

std::optional<ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

void criterion1(Check& c) {
  SpliceDiagram d = load_fixture("cabled_m345.sd");
  VertexId k3 = d.require("K3");
  auto others = all_but(d, k3);
  auto gens = gamma_generators(d, k3, others);
  std::sort(gens.begin(), gens.end());
  c.expect(gens == std::vector<Integer>{3, 4, 5}, "gamma generators are not {3,4,5}");
  c.expect(oracle::naive_genus(as_ll(gens)) == 2, "oracle gap count of <3,4,5> is not 2");
  c.expect(delta_gap_count(d, k3, others) == Integer(2), "delta is not 2");
  c.expect(milnor(single_knot_view(d, k3), k3) == 6, "mu(K3) is not 6");
  c.expect(oracle::naive_milnor(d, k3) == 6, "oracle mu(K3) is not 6");
  auto m1 = method1_certificate(d, k3, others);
  c.expect(m1 && recheck(*m1).ok, "method1 certificate missing or not rechecking");
  auto m2 = method2_certificate(d);
  c.expect(m2.has_value(), "method2 certificate missing");
  if (m2) {
    const auto& f = m2->semigroup_failure();
    c.expect(d.name(f.node) == "w", "method2 failure not at the right-hand node");
    c.expect(f.weight == 5, "method2 weight is not 5");
    c.expect(f.generators == std::vector<Integer>{3, 4}, "method2 generators are not {3,4}");
    c.expect(!oracle::naive_contains({3, 4}, 5), "oracle says 5 is in <3,4>");
    c.expect(recheck(*m2).ok, "method2 certificate does not recheck");
  }
}

void criterion2(Check& c) {
  WitnessResult r = main_witness(load_fixture("m2313.sd"));
  c.expect(r.spec.has_value(), "M(2,3,13): no cabling");
  if (r.spec) {
    c.expect(r.cabled_diagram.name(r.spec->far_end) == "K3", "M(2,3,13): cable not on K3");
    c.expect(r.spec->weight_toward_old_node == 1 && r.spec->weight_toward_far_side == 2,
             "M(2,3,13): not the (2,1)-cable");
  }
  c.expect(recheck(r.certificate).ok, "M(2,3,13): certificate does not recheck");
  c.expect(validate(r.cabled_diagram).valid(), "M(2,3,13): cabled diagram invalid");

  WitnessResult m = main_witness(load_fixture("m345.sd"));
  c.expect(m.spec && m.spec->parameters.at("s") == 5, "M(3,4,5): s is not 5");
  c.expect(recheck(m.certificate).ok, "M(3,4,5): certificate does not recheck");

  for (const char* name : {"m235.sd", "m237.sd", "m2311.sd"}) {
    SpliceDiagram d = load_fixture(name);
    c.expect(error_of([&] { main_witness(d); }) == ErrorCode::Exceptional, std::string(name) + ": not exceptional");
    std::ostringstream out, err;
    std::istringstream in;
    c.expect(splicecli::run({"witness", fixture_path(name)}, in, out, err) == 3, std::string(name) + ": CLI exit not 3");
  }
}

void criterion3(Check& c) {
  struct Row {
    long long p, q, r, s;
    const char* branch;
  };
  const Row rows[] = {
      {3, 4, 5, 5, "(3,4)"},     {3, 7, 8, 11, "(3,7)"},    {4, 5, 7, 11, "q=p+1"},  {5, 6, 7, 13, "q=p+1"},
      {4, 9, 11, 11, "q=2p+1"},  {5, 11, 13, 13, "q=2p+1"}, {2, 7, 9, 5, "(2,q>5)"}, {2, 9, 11, 5, "(2,q>5)"},
      {2, 5, 7, 3, "(2,5)"},     {2, 3, 13, 1, "(2,3)"},    {3, 5, 7, 7, "generic"}, {5, 8, 9, 11, "generic"},
  };
  for (const Row& row : rows) {
    const std::string tag = std::string(row.branch) + " r=" + std::to_string(row.r);
    WitnessResult w = main_witness(one_node_diagram({row.p, row.q, row.r}));
    if (!w.spec) {
      c.expect(false, tag + ": no cabling");
      continue;
    }
    const long long s = w.spec->parameters.at("s").convert_to<long long>();
    c.expect(s == row.s, tag + ": chose s=" + std::to_string(s));
    c.expect(row.r * s > 2 * row.p * row.q, tag + ": rs <= 2pq");
    c.expect(!oracle::naive_contains({row.p, row.q}, s), tag + ": s in <p,q>");
    c.expect(!NumericalSemigroup({row.p, row.q}).contains(s), tag + ": library says s in <p,q>");
    c.expect(recheck(w.certificate).ok, tag + ": certificate does not recheck");
    c.expect(validate(w.cabled_diagram).valid(), tag + ": cabled diagram invalid");
  }
}

void check_seifert(Check& c, const std::vector<long long>& weights) {
  std::vector<long long> w = weights;
  std::sort(w.begin(), w.end());
  const std::size_t n = w.size();
  long long big_a = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) big_a *= w[i];
  const long long expected_s = 2 * (big_a / w[n - 2]) + 1;
  std::vector<long long> expected_gens;
  for (std::size_t i = 0; i + 1 < n; ++i) expected_gens.push_back(big_a / w[i]);
  std::sort(expected_gens.begin(), expected_gens.end());

  std::string tag = "(";
  for (std::size_t i = 0; i < n; ++i) tag += (i ? "," : "") + std::to_string(w[i]);
  tag += ")";

  WitnessResult r = main_witness(one_node_diagram(std::vector<Integer>(w.begin(), w.end())));
  if (!r.spec || r.case_tag != CaseTag::Seifert) {
    c.expect(false, tag + ": not the Seifert construction");
    return;
  }
  c.expect(r.spec->parameters.at("s") == expected_s, tag + ": wrong s");
  c.expect(validate(r.cabled_diagram).valid(), tag + ": cabled diagram invalid");
  const auto& f = r.certificate.semigroup_failure();
  c.expect(r.cabled_diagram.name(f.node) == "c", tag + ": failure not at the new node");
  c.expect(as_ll(f.generators) == expected_gens, tag + ": generators differ from {A_1..A_{n-1}}");
  c.expect(f.weight == expected_s, tag + ": failing weight is not s");
  c.expect(!oracle::naive_contains(expected_gens, expected_s), tag + ": oracle says s is in the semigroup");
  c.expect(recheck(r.certificate).ok, tag + ": certificate does not recheck");
}

void criterion4(Check& c) {
  check_seifert(c, {2, 3, 5, 7});
  WitnessResult fixed = main_witness(one_node_diagram({2, 3, 5, 7}));
  c.expect(fixed.spec && fixed.spec->parameters.at("s") == 13, "(2,3,5,7): s is not 13");
  c.expect(fixed.certificate.semigroup_failure().generators == std::vector<Integer>{6, 10, 15},
           "(2,3,5,7): generators are not <15,10,6>");
  std::mt19937_64 rng(404);
  for (int i = 0; i < 24; ++i) check_seifert(c, oracle::coprime_weights(rng, 4 + i % 3, 50));
}

void criterion5(Check& c) {
  for (const char* a : {"7", "11"}) {
    SpliceDiagram left = load_fixture(std::string("control_left_a") + a + ".sd");
    auto m2 = method2_certificate(left);
    c.expect(m2.has_value(), std::string("LEFT a=") + a + ": no method2 certificate");
    if (m2) {
      c.expect(m2->semigroup_failure().weight == 1 && m2->semigroup_failure().generators == std::vector<Integer>{2, 3},
               std::string("LEFT a=") + a + ": certificate is not 1 in <2,3>");
      c.expect(recheck(*m2).ok, std::string("LEFT a=") + a + ": certificate does not recheck");
    }

    SpliceDiagram right = load_fixture(std::string("control_right_a") + a + ".sd");
    c.expect(!method2_certificate(right), std::string("RIGHT a=") + a + ": method2 certificate issued");
    auto leaves = right.leaves();
    for (VertexId t : leaves) {
      auto rest = all_but(right, t);
      for (unsigned mask = 1; mask < (1u << rest.size()); ++mask) {
        std::vector<VertexId> subset;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (mask & (1u << i)) subset.push_back(rest[i]);
        }
        c.expect(!method1_certificate(right, t, subset),
                 std::string("RIGHT a=") + a + ": method1 certificate for " + right.name(t));
      }
    }
  }
}

void criterion6(Check& c) {
  for (long long p = 2; p <= 30; ++p) {
    for (long long q = p + 1; q <= 30; ++q) {
      for (long long r = q + 1; r <= 30; ++r) {
        if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1) continue;
        SpliceDiagram d = one_node_diagram({p, q, r});
        VertexId k = d.require("K3");
        c.expect(milnor(single_knot_view(d, k), k) == (p - 1) * (q - 1),
                 "M(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")");
      }
    }
  }
  std::mt19937_64 rng(606);
  for (int i = 0; i < 200; ++i) {
    SpliceDiagram d = oracle::random_chain(rng, 1 + i % 4, 13);
    auto leaves = d.leaves();
    VertexId k = leaves[static_cast<std::size_t>(i) % leaves.size()];
    DiagramBuilder b(d);
    b.set_arrow(k);
    SpliceDiagram arrowed = b.build();
    Integer mu = milnor(arrowed, k);
    c.expect(mu >= 0 && mu % 2 == 0, "random diagram " + std::to_string(i) + ": mu=" + to_string(mu));
    c.expect(mu == oracle::naive_milnor(d, k), "random diagram " + std::to_string(i) + ": oracle disagrees");
  }
}

void criterion7(Check& c) {
  std::mt19937_64 rng(707);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<long long> value(1, 200);
  for (int done = 0; done < 500;) {
    std::vector<long long> gens(static_cast<std::size_t>(count(rng)));
    for (auto& g : gens) g = value(rng);
    if (oracle::gcd_all(gens) != 1) continue;
    ++done;
    NumericalSemigroup s(std::vector<Integer>(gens.begin(), gens.end()));
    c.expect(s.genus() == oracle::naive_genus(gens), "genus mismatch");
    c.expect(s.frobenius() == oracle::naive_frobenius(gens), "frobenius mismatch");
  }
  std::uniform_int_distribution<long long> pair(2, 1000);
  for (int done = 0; done < 100;) {
    long long p = pair(rng), q = pair(rng);
    if (std::gcd(p, q) != 1) continue;
    ++done;
    NumericalSemigroup s{p, q};
    c.expect(s.frobenius() == p * q - p - q, "frobenius closed form");
    c.expect(s.genus() == (p - 1) * (q - 1) / 2, "genus closed form");
  }
}

void criterion8(Check& c) {
  std::mt19937_64 rng(808);
  for (int i = 0; i < 240; ++i) {
    SpliceDiagram d = i % 3 == 0   ? oracle::random_one_node(rng, 3 + (i / 3) % 4, 40)
                      : i % 3 == 1 ? oracle::random_two_node(rng, 13)
                                   : oracle::random_chain(rng, 2 + (i / 3) % 3, 13);
    const std::string tag = "input " + std::to_string(i);
    try {
      WitnessResult w = main_witness(d);
      c.expect(validate(w.cabled_diagram).valid(), tag + ": witness diagram invalid");
      c.expect(recheck(w.certificate).ok, tag + ": witness certificate does not recheck");
      c.expect(distinct_knot_check(w), tag + ": knots not distinguished");
    } catch (const Error& e) {
      c.expect(false, tag + ": main_witness threw " + error_code_name(e.code()) + " (" + e.what() + ")\n" +
                          serialize_diagram(d));
    }
    try {
      WitnessResult w = weak_witness(d);
      c.expect(validate(w.cabled_diagram).valid(), tag + ": weak witness diagram invalid");
      c.expect(recheck(w.certificate).ok, tag + ": weak certificate does not recheck");
      c.expect(!distinct_knot_check(w), tag + ": weak witness knots unexpectedly distinct");
    } catch (const Error& e) {
      c.expect(false, tag + ": weak_witness threw " + error_code_name(e.code()));
    }
  }
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  out += "\nexit=" + std::to_string(pclose(pipe));
  return out;
}

void criterion9(Check& c) {
  std::vector<std::string> fixtures;
  for (const auto& e : std::filesystem::directory_iterator(FIXTURE_DIR)) fixtures.push_back(e.path().string());
  std::sort(fixtures.begin(), fixtures.end());
  const std::vector<std::vector<std::string>> commands = {
      {"validate"}, {"invariants"}, {"check"}, {"witness"}, {"weak-witness"}};
  for (const auto& file : fixtures) {
    for (const auto& cmd : commands) {
      std::vector<std::string> args = cmd;
      args.push_back(file);
      args.push_back("--json");
      std::string first;
      for (int run = 0; run < 3; ++run) {
        std::ostringstream out, err;
        std::istringstream in;
        int code = splicecli::run(args, in, out, err);
        std::string text = out.str() + "\n" + std::to_string(code);
        if (run == 0) first = text;
        else c.expect(text == first, cmd[0] + " " + file + ": output changed between runs");
      }
      std::string shell = std::string(SPLICECERT_CLI) + " --json " + cmd[0] + " '" + file + "' 2>/dev/null";
      std::string a = capture(shell), b = capture(shell);
      c.expect(a == b, cmd[0] + " " + file + ": process output changed between runs");
    }
  }
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Check&)> criteria[] = {
      {"worked two-node example: generators, delta, mu and both certificates", criterion1},
      {"witness on M(2,3,13), M(3,4,5) and the exceptional cases", criterion2},
      {"Brieskorn s-table branches satisfy rs > 2pq and s not in <p,q>", criterion3},
      {"Seifert formula s = 2A_{n-1}+1 on random one-node diagrams", criterion4},
      {"control pair: LEFT certified, RIGHT silent", criterion5},
      {"Milnor numbers against the closed form and parity", criterion6},
      {"semigroup genus and Frobenius against a sieve", criterion7},
      {"fuzzed inputs self-certify; weak witnesses fail distinctness", criterion8},
      {"repeated --json runs are byte-identical", criterion9},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << (check.ok() ? "PASS" : "FAIL") << " criterion " << index << ": " << name;
    std::cout << " (" << static_cast<long>(ms) << " ms)";
    if (!check.ok()) std::cout << ": " << check.summary();
    std::cout << std::endl;
    if (!check.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
