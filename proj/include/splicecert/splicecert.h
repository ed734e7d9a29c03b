/* C interface to the splice-diagram certificate library.
 *
 * Handles are opaque. Every fallible call returns an sc_status; on failure
 * sc_last_error() describes the problem for the calling thread. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with sc_string_free(). JSON results use sorted keys and encode
 * integers beyond 53 bits as decimal strings.
 */
#ifndef SPLICECERT_H
#define SPLICECERT_H

#include <stddef.h>

#if defined(_WIN32)
#  define SC_API __declspec(dllexport)
#else
#  define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_NO_RESULT,            /* well-formed query with no certificate */
  SC_PARSE_ERROR,
  SC_STRUCTURE_ERROR,
  SC_INVALID_DIAGRAM,
  SC_UNKNOWN_VERTEX,
  SC_UNKNOWN_EDGE,
  SC_EDGE_NOT_INTERNAL,
  SC_SAME_LEAF,
  SC_NOT_ARROWHEAD,
  SC_MULTIPLE_ARROWHEADS,
  SC_NON_UNIT_MULTIPLICITY,
  SC_INFINITE_GAPS,
  SC_TOO_LARGE,
  SC_EXCEPTIONAL,
  SC_NOT_MINIMAL,
  SC_CASE_EXHAUSTED,
  SC_INVALID_ARGUMENT,
  SC_INTERNAL
} sc_status;

typedef struct sc_diagram sc_diagram;
typedef struct sc_semigroup sc_semigroup;

SC_API const char* sc_status_name(sc_status status);
/* Message for the most recent failure on this thread; "" if none. */
SC_API const char* sc_last_error(void);
/* 1-based source position of the last parse failure, 0 when not applicable. */
SC_API void sc_last_error_location(int* line, int* column);
SC_API void sc_string_free(char* s);

SC_API sc_status sc_diagram_parse(const char* text, size_t length, sc_diagram** out);
SC_API void sc_diagram_free(sc_diagram* d);
SC_API sc_status sc_diagram_serialize(const sc_diagram* d, char** out);

/* {"valid":..,"violations":[..]}; SC_OK whether or not the diagram is valid. */
SC_API sc_status sc_diagram_validate(const sc_diagram* d, char** json);
/* {"linking":[{a,b,value}..],"milnor":{KNOT:mu,..}} over the arrowheads, or
 * over all leaves when nothing is arrowed. */
SC_API sc_status sc_diagram_invariants(const sc_diagram* d, char** json);
SC_API sc_status sc_diagram_linking(const sc_diagram* d, const char* a, const char* b, char** json);
SC_API sc_status sc_diagram_milnor(const sc_diagram* d, const char* knot, char** json);
/* Certificate JSON, or SC_NO_RESULT with "null". */
SC_API sc_status sc_diagram_check(const sc_diagram* d, char** json);
/* Certificate JSON, or SC_NO_RESULT with "null". others == NULL means
 * every other leaf. */
SC_API sc_status sc_diagram_method1(const sc_diagram* d, const char* target, const char* const* others,
                                    size_t other_count, char** json);
SC_API sc_status sc_diagram_witness(const sc_diagram* d, char** json);
SC_API sc_status sc_diagram_weak_witness(const sc_diagram* d, char** json);

/* Generators are decimal strings. */
SC_API sc_status sc_semigroup_create(const char* const* generators, size_t count, sc_semigroup** out);
SC_API void sc_semigroup_free(sc_semigroup* s);
SC_API sc_status sc_semigroup_contains(const sc_semigroup* s, const char* n, int* result);
SC_API sc_status sc_semigroup_genus(const sc_semigroup* s, char** out);
SC_API sc_status sc_semigroup_frobenius(const sc_semigroup* s, char** out);

#ifdef __cplusplus
}
#endif

#endif
