#include <doctest.h>

#include "fixtures_util.hpp"
#include "splicecert/invariants.hpp"
#include "splicecert/json.hpp"

using namespace splicecert;

namespace {

std::vector<VertexId> all_but(const SpliceDiagram& d, VertexId target) {
  std::vector<VertexId> out;
  for (VertexId leaf : d.leaves()) {
    if (leaf != target) out.push_back(leaf);
  }
  return out;
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("semigroup failure certificate") {
    auto cert = method2_certificate(load_fixture("cabled_m345.sd"));
    REQUIRE(cert);
    CHECK(emit_json(certificate_json(*cert)) ==
          R"({"edge":"v-w","generators":[3,4],"kind":"semigroup_condition_failure","node":"w","weight":5})");
  }

  TEST_CASE("delta obstruction certificate") {
    SpliceDiagram d = load_fixture("cabled_m345.sd");
    VertexId k3 = d.require("K3");
    auto cert = method1_certificate(d, k3, all_but(d, k3));
    REQUIRE(cert);
    CHECK(emit_json(certificate_json(*cert)) ==
          R"({"delta":2,"generators":[3,4,5],"kind":"delta_obstruction","mu":6,"target":"K3"})");
  }

  TEST_CASE("validation reports") {
    SpliceDiagram ok = one_node_diagram({2, 3, 13});
    CHECK(emit_json(report_json(ok, validate(ok))) == R"({"valid":true,"violations":[]})");

    auto doc = parse_diagram("node v\nleaf A\nleaf B\nedge v A 2 -\nedge v B 4 -\n");
    auto j = report_json(doc.diagram, validate(doc.diagram), &doc);
    CHECK_FALSE(j["valid"].get<bool>());
    bool located = false;
    for (const auto& v : j["violations"]) {
      if (v["kind"] == "not_coprime") located = v.contains("line");
    }
    CHECK(located);
  }

  TEST_CASE("integers switch to strings past 53 bits") {
    CHECK(to_json(Integer(1) << 53).is_number());
    CHECK(to_json((Integer(1) << 53) + 1).is_string());
    CHECK(to_json(-(Integer(1) << 60)).get<std::string>() == "-1152921504606846976");
  }

  TEST_CASE("linking table") {
    SpliceDiagram d = one_node_diagram({2, 3, 5});
    auto knots = d.leaves();
    CHECK(emit_json(linking_table_json(d, linking_table(d, knots))) ==
          R"([{"a":"K1","b":"K2","value":5},{"a":"K1","b":"K3","value":3},{"a":"K2","b":"K3","value":2}])");
  }

  TEST_CASE("witness document") {
    WitnessResult r = main_witness(load_fixture("m2313.sd"));
    auto j = witness_json(r);
    CHECK(j["case"] == "brieskorn");
    CHECK(j["cabling"]["parameters"]["s"] == 1);
    CHECK(j["distinct_knots"] == true);
    CHECK(j["certificate"]["kind"] == "semigroup_condition_failure");
    CHECK(parse_diagram(j["diagram"].get<std::string>()).diagram.vertex_count() == 6);
    CHECK(emit_json(j) == emit_json(witness_json(main_witness(load_fixture("m2313.sd")))));
  }
}
