#include "splicecert/splicecert.h"

#include "splicecert/dsl.hpp"
#include "splicecert/error.hpp"
#include "splicecert/invariants.hpp"
#include "splicecert/json.hpp"
#include "splicecert/obstruction.hpp"
#include "splicecert/semigroup.hpp"
#include "splicecert/witness.hpp"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

struct sc_diagram {
  splicecert::SpliceDiagram diagram;
  splicecert::DiagramDocument document;  // kept for source locations
};

struct sc_semigroup {
  splicecert::NumericalSemigroup semigroup;
};

namespace {

using namespace splicecert;

thread_local std::string last_error;
thread_local int last_line = 0;
thread_local int last_column = 0;

sc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return SC_PARSE_ERROR;
    case ErrorCode::StructureError: return SC_STRUCTURE_ERROR;
    case ErrorCode::InvalidDiagram: return SC_INVALID_DIAGRAM;
    case ErrorCode::UnknownVertex: return SC_UNKNOWN_VERTEX;
    case ErrorCode::UnknownEdge: return SC_UNKNOWN_EDGE;
    case ErrorCode::EdgeNotInternal: return SC_EDGE_NOT_INTERNAL;
    case ErrorCode::SameLeaf: return SC_SAME_LEAF;
    case ErrorCode::NotArrowhead: return SC_NOT_ARROWHEAD;
    case ErrorCode::MultipleArrowheads: return SC_MULTIPLE_ARROWHEADS;
    case ErrorCode::NonUnitMultiplicity: return SC_NON_UNIT_MULTIPLICITY;
    case ErrorCode::InfiniteGaps: return SC_INFINITE_GAPS;
    case ErrorCode::TooLarge: return SC_TOO_LARGE;
    case ErrorCode::Exceptional: return SC_EXCEPTIONAL;
    case ErrorCode::NotMinimal: return SC_NOT_MINIMAL;
    case ErrorCode::CaseExhausted: return SC_CASE_EXHAUSTED;
    case ErrorCode::InvalidArgument: return SC_INVALID_ARGUMENT;
  }
  return SC_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sc_status fail(sc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
sc_status guarded(F&& body) {
  last_error.clear();
  last_line = last_column = 0;
  try {
    return body();
  } catch (const ParseError& e) {
    last_line = e.line();
    last_column = e.column();
    return fail(status_of(e.code()), e.what());
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SC_INTERNAL, e.what());
  }
}

#define SC_REQUIRE(cond)                                                 \
  do {                                                                   \
    if (!(cond)) return fail(SC_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

sc_status emit(const nlohmann::json& value, char** out, sc_status status = SC_OK) {
  *out = dup(emit_json(value));
  if (!*out) return fail(SC_INTERNAL, "out of memory");
  return status;
}

std::vector<VertexId> knots_of(const SpliceDiagram& d) {
  auto knots = d.arrowheads();
  return knots.empty() ? d.leaves() : knots;
}

sc_status certificate_out(const std::optional<Certificate>& cert, char** json) {
  if (!cert) return emit(nullptr, json, SC_NO_RESULT);
  return emit(certificate_json(*cert), json);
}

}  // namespace

extern "C" {

const char* sc_status_name(sc_status status) {
  switch (status) {
    case SC_OK: return "ok";
    case SC_NO_RESULT: return "no_result";
    case SC_PARSE_ERROR: return "parse_error";
    case SC_STRUCTURE_ERROR: return "structure_error";
    case SC_INVALID_DIAGRAM: return "invalid_diagram";
    case SC_UNKNOWN_VERTEX: return "unknown_vertex";
    case SC_UNKNOWN_EDGE: return "unknown_edge";
    case SC_EDGE_NOT_INTERNAL: return "edge_not_internal";
    case SC_SAME_LEAF: return "same_leaf";
    case SC_NOT_ARROWHEAD: return "not_arrowhead";
    case SC_MULTIPLE_ARROWHEADS: return "multiple_arrowheads";
    case SC_NON_UNIT_MULTIPLICITY: return "non_unit_multiplicity";
    case SC_INFINITE_GAPS: return "infinite_gaps";
    case SC_TOO_LARGE: return "too_large";
    case SC_EXCEPTIONAL: return "exceptional";
    case SC_NOT_MINIMAL: return "not_minimal";
    case SC_CASE_EXHAUSTED: return "case_exhausted";
    case SC_INVALID_ARGUMENT: return "invalid_argument";
    case SC_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sc_last_error(void) { return last_error.c_str(); }

void sc_last_error_location(int* line, int* column) {
  if (line) *line = last_line;
  if (column) *column = last_column;
}

void sc_string_free(char* s) { std::free(s); }

sc_status sc_diagram_parse(const char* text, size_t length, sc_diagram** out) {
  return guarded([&] {
    SC_REQUIRE(out);
    *out = nullptr;
    SC_REQUIRE(text || length == 0);
    auto doc = parse_diagram(std::string_view(text ? text : "", length));
    SpliceDiagram g = doc.diagram;
    *out = new sc_diagram{std::move(g), std::move(doc)};
    return SC_OK;
  });
}

void sc_diagram_free(sc_diagram* d) { delete d; }

sc_status sc_diagram_serialize(const sc_diagram* d, char** out) {
  return guarded([&] {
    SC_REQUIRE(d && out);
    *out = dup(serialize_diagram(d->diagram));
    return *out ? SC_OK : fail(SC_INTERNAL, "out of memory");
  });
}

sc_status sc_diagram_validate(const sc_diagram* d, char** json) {
  return guarded([&] {
    SC_REQUIRE(d && json);
    return emit(report_json(d->diagram, validate(d->diagram), &d->document), json);
  });
}

sc_status sc_diagram_invariants(const sc_diagram* d, char** json) {
  return guarded([&] {
    SC_REQUIRE(d && json);
    const SpliceDiagram& g = d->diagram;
    require_valid(g);
    const auto knots = knots_of(g);
    auto mu = nlohmann::json::object();
    for (VertexId k : knots) mu[g.name(k)] = to_json(milnor(single_knot_view(g, k), k));
    return emit({{"linking", linking_table_json(g, linking_table(g, knots))}, {"milnor", std::move(mu)}}, json);
  });
}

sc_status sc_diagram_linking(const sc_diagram* d, const char* a, const char* b, char** json) {
  return guarded([&] {
    SC_REQUIRE(d && a && b && json);
    const SpliceDiagram& g = d->diagram;
    VertexId va = g.require(a), vb = g.require(b);
    return emit({{"a", a}, {"b", b}, {"value", to_json(linking(g, va, vb))}}, json);
  });
}

sc_status sc_diagram_milnor(const sc_diagram* d, const char* knot, char** json) {
  return guarded([&] {
    SC_REQUIRE(d && knot && json);
    const SpliceDiagram& g = d->diagram;
    VertexId k = g.require(knot);
    require_valid(g);
    return emit({{"knot", knot}, {"milnor", to_json(milnor(single_knot_view(g, k), k))}}, json);
  });
}

sc_status sc_diagram_check(const sc_diagram* d, char** json) {
  return guarded([&] {
    SC_REQUIRE(d && json);
    require_valid(d->diagram);
    return certificate_out(method2_certificate(d->diagram), json);
  });
}

sc_status sc_diagram_method1(const sc_diagram* d, const char* target, const char* const* others, size_t other_count,
                             char** json) {
  return guarded([&] {
    SC_REQUIRE(d && target && json);
    const SpliceDiagram& g = d->diagram;
    require_valid(g);
    VertexId t = g.require(target);
    std::vector<VertexId> rest;
    if (others) {
      for (size_t i = 0; i < other_count; ++i) {
        SC_REQUIRE(others[i]);
        rest.push_back(g.require(others[i]));
      }
    } else {
      for (VertexId leaf : g.leaves()) {
        if (leaf != t) rest.push_back(leaf);
      }
    }
    return certificate_out(method1_certificate(g, t, rest), json);
  });
}

sc_status sc_diagram_witness(const sc_diagram* d, char** json) {
  return guarded([&] {
    SC_REQUIRE(d && json);
    return emit(witness_json(main_witness(d->diagram)), json);
  });
}

sc_status sc_diagram_weak_witness(const sc_diagram* d, char** json) {
  return guarded([&] {
    SC_REQUIRE(d && json);
    return emit(witness_json(weak_witness(d->diagram)), json);
  });
}

sc_status sc_semigroup_create(const char* const* generators, size_t count, sc_semigroup** out) {
  return guarded([&] {
    SC_REQUIRE(out);
    *out = nullptr;
    SC_REQUIRE(generators || count == 0);
    std::vector<Integer> gens;
    for (size_t i = 0; i < count; ++i) {
      SC_REQUIRE(generators[i]);
      auto g = parse_integer(generators[i]);
      if (!g) return fail(SC_INVALID_ARGUMENT, std::string("malformed generator '") + generators[i] + "'");
      gens.push_back(std::move(*g));
    }
    *out = new sc_semigroup{NumericalSemigroup(std::move(gens))};
    return SC_OK;
  });
}

void sc_semigroup_free(sc_semigroup* s) { delete s; }

sc_status sc_semigroup_contains(const sc_semigroup* s, const char* n, int* result) {
  return guarded([&] {
    SC_REQUIRE(s && n && result);
    auto value = parse_integer(n);
    if (!value) return fail(SC_INVALID_ARGUMENT, std::string("malformed integer '") + n + "'");
    *result = s->semigroup.contains(*value) ? 1 : 0;
    return SC_OK;
  });
}

sc_status sc_semigroup_genus(const sc_semigroup* s, char** out) {
  return guarded([&] {
    SC_REQUIRE(s && out);
    *out = dup(to_string(s->semigroup.genus()));
    return *out ? SC_OK : fail(SC_INTERNAL, "out of memory");
  });
}

sc_status sc_semigroup_frobenius(const sc_semigroup* s, char** out) {
  return guarded([&] {
    SC_REQUIRE(s && out);
    *out = dup(to_string(s->semigroup.frobenius()));
    return *out ? SC_OK : fail(SC_INTERNAL, "out of memory");
  });
}

}  // extern "C"
