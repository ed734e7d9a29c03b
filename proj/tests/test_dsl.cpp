#include <doctest.h>

#include "fixtures_util.hpp"
#include "splicecert/dsl.hpp"
#include "splicecert/error.hpp"

#include <filesystem>

using namespace splicecert;

namespace {

struct Located {
  ErrorCode code;
  int line;
  int column;
};

Located parse_failure(const std::string& text) {
  try {
    parse_diagram(text);
  } catch (const ParseError& e) {
    return {e.code(), e.line(), e.column()};
  }
  FAIL("expected ParseError for: " << text);
  return {ErrorCode::InvalidArgument, 0, 0};
}

// Same names, kinds, weights and arrows.
bool isomorphic_by_name(const SpliceDiagram& a, const SpliceDiagram& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (VertexId v : a.vertices()) {
    auto w = b.find(a.name(v));
    if (!w || a.is_node(v) != b.is_node(*w)) return false;
    const Arrowhead* x = a.arrowhead(v);
    const Arrowhead* y = b.arrowhead(*w);
    if ((x == nullptr) != (y == nullptr) || (x && !(*x == *y))) return false;
  }
  for (EdgeId e : a.edges()) {
    const Edge& ed = a.edge(e);
    VertexId u = *b.find(a.name(ed.a)), v = *b.find(a.name(ed.b));
    auto f = b.edge_between(u, v);
    if (!f || b.weight_at(*f, u) != ed.weight_a || b.weight_at(*f, v) != ed.weight_b) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("dsl") {
  TEST_CASE("M(2,3,13) with K3 arrowed") {
    auto doc = parse_diagram(
        "node v\nleaf K1\nleaf K2\nleaf K3\nedge v K1 2 -\nedge v K2 3 -\nedge v K3 13 -\narrow K3\n");
    const SpliceDiagram& d = doc.diagram;
    CHECK(validate(d).valid());
    CHECK(d.nodes().size() == 1);
    REQUIRE(d.arrowheads().size() == 1);
    CHECK(d.name(d.arrowheads()[0]) == "K3");
    CHECK(d.arrowhead(d.require("K3"))->multiplicity == 1);
  }

  TEST_CASE("the two-node example parses and validates") {
    CHECK(validate(load_fixture("cabled_m345.sd")).valid());
  }

  TEST_CASE("forward references, comments and blank lines") {
    auto doc = parse_diagram("# header\nedge v K1 2 -   # trailing\n\narrow K1 mult=1 colour=3\nnode v\nleaf K1\n");
    CHECK(doc.diagram.edge_count() == 1);
    CHECK(doc.diagram.arrowhead(doc.diagram.require("K1"))->colour == 3);
    CHECK(doc.vertex_locations.at(doc.diagram.require("v")).line == 5);
    CHECK(parse_diagram("node v\nleaf K\nedge v K 2 -\narrow K color=2").diagram.arrowhead(VertexId{1})->colour == 2);
  }

  TEST_CASE("weights must be positive") {
    auto f = parse_failure("node v\nleaf K1\nedge v K1 0 -\n");
    CHECK(f.code == ErrorCode::ParseError);
    CHECK(f.line == 3);
    CHECK(f.column == 11);
  }

  TEST_CASE("located parse errors") {
    CHECK(parse_failure("node v\nnode v\n").line == 2);
    CHECK(parse_failure("node v\nleaf K\nedge v K x -\n").column == 10);
    CHECK(parse_failure("node v\nleaf K\nedge v K - -\n").code == ErrorCode::ParseError);
    CHECK(parse_failure("node v\nleaf K\nedge v K 2 3\n").column == 12);
    CHECK(parse_failure("node v\nleaf K\nedge v Q 2 -\n").column == 8);
    CHECK(parse_failure("node v\nleaf K\nedge v K 2\n").line == 3);
    CHECK(parse_failure("node v\nfrob x\n").line == 2);
    CHECK(parse_failure("node v\narrow v\n").code == ErrorCode::ParseError);
    CHECK(parse_failure("leaf K\narrow K\narrow K\n").line == 3);
    CHECK(parse_failure("leaf K\narrow K mult=x\n").code == ErrorCode::ParseError);
    CHECK(parse_failure("leaf K\narrow K size=2\n").code == ErrorCode::ParseError);
    CHECK(parse_failure("# nothing\n").code == ErrorCode::ParseError);
    CHECK(parse_failure("node a b\n").code == ErrorCode::ParseError);
  }

  TEST_CASE("structure errors name the offending edge") {
    auto cycle = parse_failure("node a\nnode b\nnode c\nedge a b 2 3\nedge b c 5 7\nedge c a 11 13\n");
    CHECK(cycle.code == ErrorCode::StructureError);
    CHECK(cycle.line == 6);
    auto dup = parse_failure(read_fixture("bad_cycle.sd"));
    CHECK(dup.code == ErrorCode::StructureError);
    CHECK(dup.line == 5);
    auto loop = parse_failure("node a\nedge a a 2 3\n");
    CHECK(loop.code == ErrorCode::StructureError);
    auto apart = parse_failure("node a\nnode b\nleaf K\nedge a K 2 -\n");
    CHECK(apart.code == ErrorCode::StructureError);
    CHECK(apart.line == 2);
  }

  TEST_CASE("big weights survive") {
    auto doc = parse_diagram("node v\nleaf K\nedge v K 123456789012345678901234567890 -\n");
    CHECK(to_string(doc.diagram.near_weight(EdgeId{0}, VertexId{0})) == "123456789012345678901234567890");
  }

  TEST_CASE("serialize then parse is the identity on every fixture") {
    for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR)) {
      if (entry.path().filename() == "bad_cycle.sd") continue;
      SpliceDiagram d = load_fixture(entry.path().filename().string());
      const std::string text = serialize_diagram(d);
      SpliceDiagram back = parse_diagram(text).diagram;
      CHECK_MESSAGE(isomorphic_by_name(d, back), entry.path());
      CHECK(serialize_diagram(back) == text);
    }
  }

  TEST_CASE("serialization format") {
    DiagramBuilder b(one_node_diagram({2, 3}));
    b.set_arrow(*b.find("K1"), Arrowhead{3, -2});
    b.set_arrow(*b.find("K2"));
    CHECK(serialize_diagram(b.build()) ==
          "node v\nleaf K1\nleaf K2\nedge v K1 2 -\nedge v K2 3 -\narrow K1 mult=3 colour=-2\narrow K2\n");
  }
}
