/*
 * C interface to the reptqft library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return an rtq_status; on failure the
 * message of the most recent error on the calling thread is available from
 * rtq_last_error(). Strings returned through char** are released with
 * rtq_string_free().
 */
#ifndef REPTQFT_H
#define REPTQFT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RTQ_API __declspec(dllexport)
#else
#define RTQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rtq_status {
  RTQ_OK = 0,
  RTQ_E_PARSE = 1,
  RTQ_E_IO = 2,
  RTQ_E_INVALID_ARGUMENT = 3,
  RTQ_E_NON_EXACT_DIVISION = 4,
  RTQ_E_ZERO_BASE = 5,
  RTQ_E_UNKNOWN_STRATUM = 6,
  RTQ_E_UNKNOWN_PUNCTURE = 7,
  RTQ_E_INVALID_DATUM = 8,
  RTQ_E_NOT_A_GROUP = 9,
  RTQ_E_GROUP_TOO_LARGE = 10,
  RTQ_E_NOT_CONJUGATION_CLOSED = 11,
  RTQ_E_BUDGET_EXCEEDED = 12,
  RTQ_E_NOT_FOUND = 13,
  RTQ_E_INTERNAL = 14
} rtq_status;

typedef enum rtq_poly_format {
  RTQ_FORMAT_AUTO = 0, /* q^k when diagonal, u^a*v^b otherwise */
  RTQ_FORMAT_UV = 1,   /* always u^a*v^b */
  RTQ_FORMAT_JSON = 2  /* [[a, b, "coefficient"], ...] */
} rtq_poly_format;

typedef struct rtq_poly rtq_poly;
typedef struct rtq_group rtq_group;
typedef struct rtq_datum rtq_datum;

typedef struct rtq_class_info {
  size_t representative;
  size_t size;
  uint64_t centralizer_order;
} rtq_class_info;

/* A labelled puncture subset of a finite group. With close_under_conjugation
 * set, the subset is replaced by the union of the classes of its elements;
 * otherwise it must already be closed. */
typedef struct rtq_puncture {
  const char* label;
  const size_t* elements;
  size_t count;
  int close_under_conjugation;
} rtq_puncture;

RTQ_API const char* rtq_last_error(void);
RTQ_API const char* rtq_status_name(rtq_status status);
RTQ_API void rtq_string_free(char* s);

/* Polynomials */
RTQ_API rtq_status rtq_poly_parse(const char* text, rtq_poly** out);
RTQ_API rtq_status rtq_poly_parse_json(const char* json, rtq_poly** out);
RTQ_API rtq_status rtq_poly_from_int(int64_t value, rtq_poly** out);
RTQ_API rtq_status rtq_poly_to_string(const rtq_poly* p, rtq_poly_format format, char** out);
RTQ_API int rtq_poly_equal(const rtq_poly* a, const rtq_poly* b);
RTQ_API void rtq_poly_free(rtq_poly* p);

/* Finite groups */
RTQ_API rtq_status rtq_group_load(const char* path, rtq_group** out);
RTQ_API rtq_status rtq_group_parse(const char* json, rtq_group** out);
RTQ_API size_t rtq_group_order(const rtq_group* g);
RTQ_API size_t rtq_group_class_count(const rtq_group* g);
RTQ_API rtq_status rtq_group_class_info(const rtq_group* g, size_t class_index, rtq_class_info* out);
/* Writes up to `capacity` members; *count receives the class size. */
RTQ_API rtq_status rtq_group_class_members(const rtq_group* g, size_t class_index, size_t* buffer, size_t capacity,
                                           size_t* count);
RTQ_API void rtq_group_free(rtq_group* g);

/* Tube data */
RTQ_API rtq_status rtq_datum_from_group(const rtq_group* g, const rtq_puncture* punctures, size_t n_punctures,
                                        int class_reduce, rtq_datum** out);
RTQ_API rtq_status rtq_datum_affc(rtq_datum** out);
RTQ_API rtq_status rtq_datum_load(const char* path, rtq_datum** out);
RTQ_API rtq_status rtq_datum_parse(const char* json, rtq_datum** out);
RTQ_API rtq_status rtq_datum_to_json(const rtq_datum* d, char** out);
RTQ_API size_t rtq_datum_rank(const rtq_datum* d);
RTQ_API int rtq_datum_has_identity_tube(const rtq_datum* d);
/* Known closed-surface value for `genus`, RTQ_E_NOT_FOUND if absent. */
RTQ_API rtq_status rtq_datum_reference(const rtq_datum* d, unsigned genus, rtq_poly** out);
RTQ_API void rtq_datum_free(rtq_datum* d);

/* E-polynomial of the representation variety of the genus-g surface with the
 * given puncture labels, after appending `identity_tubes` P tubes to the
 * word (0 for the plain evaluation). */
RTQ_API rtq_status rtq_epoly(const rtq_datum* d, unsigned genus, const char* const* labels, size_t n_labels,
                             size_t identity_tubes, rtq_poly** out);

/* Oracles */
RTQ_API rtq_status rtq_brute_force_count(const rtq_group* g, unsigned genus, const rtq_puncture* punctures,
                                         size_t n_punctures, uint64_t budget, uint64_t* out);
RTQ_API rtq_status rtq_affc_closed_form(unsigned genus, rtq_poly** out);
RTQ_API rtq_status rtq_affc_xk(unsigned k, rtq_poly** out);

#ifdef __cplusplus
}
#endif

#endif /* REPTQFT_H */
