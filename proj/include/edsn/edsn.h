/* C interface to the edsn library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns an edsn_status;
 * on failure, edsn_last_error() returns a message for the calling thread.
 * Field elements cross the boundary as k residues, low degree first;
 * points as n * k residues, coordinate-major.
 */
#ifndef EDSN_EDSN_H
#define EDSN_EDSN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EDSN_BUILDING_LIBRARY)
#    define EDSN_API __declspec(dllexport)
#  else
#    define EDSN_API __declspec(dllimport)
#  endif
#else
#  define EDSN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum edsn_status {
  EDSN_OK = 0,
  EDSN_ERR_INVALID_ARGUMENT = 1,
  EDSN_ERR_EVEN_CHARACTERISTIC = 2,
  EDSN_ERR_NOT_PRIME = 3,
  EDSN_ERR_FIELD_TOO_LARGE = 4,
  EDSN_ERR_DIVISION_BY_ZERO = 5,
  EDSN_ERR_DIMENSION_MISMATCH = 6,
  EDSN_ERR_SIZE_MISMATCH = 7,
  EDSN_ERR_INVALID_PROFILE = 8,
  EDSN_ERR_NOT_ON_VARIETY = 9,
  EDSN_ERR_ON_DISCRIMINANT = 10,
  EDSN_ERR_NO_POINT_FOUND = 11,
  EDSN_ERR_INTERNAL = 99
} edsn_status;

typedef struct edsn_field edsn_field;
typedef struct edsn_point edsn_point;
typedef struct edsn_document edsn_document;

EDSN_API const char* edsn_status_name(edsn_status status);
EDSN_API const char* edsn_last_error(void);
EDSN_API const char* edsn_version(void);

/* Fields */
EDSN_API edsn_status edsn_field_create(uint32_t p, uint32_t k, edsn_field** out);
EDSN_API void edsn_field_destroy(edsn_field* field);
EDSN_API uint32_t edsn_field_characteristic(const edsn_field* field);
EDSN_API uint32_t edsn_field_degree(const edsn_field* field);
EDSN_API uint64_t edsn_field_order(const edsn_field* field);
/* Writes the k + 1 modulus coefficients; capacity must be >= k + 1. */
EDSN_API edsn_status edsn_field_modulus(const edsn_field* field, uint32_t* out, size_t capacity);
/* Canonical square root (the lexicographically smaller of the two). A
 * nonsquare is not an error: it reports EDSN_OK with *has_root = 0. */
EDSN_API edsn_status edsn_field_sqrt(const edsn_field* field, const uint32_t* a, uint32_t* root,
                                     int* has_root);

/* Points */
EDSN_API edsn_status edsn_point_create(const edsn_field* field, const uint32_t* coeffs, size_t n,
                                       edsn_point** out);
EDSN_API edsn_status edsn_point_sample(const edsn_field* field, size_t n, uint64_t seed,
                                       uint64_t max_tries, edsn_point** out);
EDSN_API void edsn_point_destroy(edsn_point* point);
EDSN_API size_t edsn_point_size(const edsn_point* point);
/* Copies n * k residues; capacity counts residues. */
EDSN_API edsn_status edsn_point_coords(const edsn_point* point, uint32_t* out, size_t capacity);
EDSN_API int edsn_point_on_x12(const edsn_point* point);
EDSN_API int edsn_point_in_discriminant(const edsn_point* point);
EDSN_API int edsn_point_in_small_diagonal(const edsn_point* point);
EDSN_API edsn_status edsn_point_smoothness_rank(const edsn_point* point, size_t* rank);

typedef struct edsn_rank_report {
  size_t ambient_rank;
  size_t tangent_dim;
  size_t restricted_rank;
  size_t bound;
  int satisfied;
  int kernel_witness;
} edsn_rank_report;

EDSN_API edsn_status edsn_point_rank_certificate(const edsn_point* point, edsn_rank_report* out);

/* Hypothesis gate */
typedef struct edsn_hypothesis {
  int applies;
  uint32_t required_field_degree;
  int field_sufficient;
  size_t r;
} edsn_hypothesis;

EDSN_API edsn_status edsn_check_hypotheses(uint64_t n, uint32_t p, uint32_t degree,
                                           edsn_hypothesis* out);

/* Certificate documents (the CLI subcommands). Each returns a JSON document
 * and the process exit code the CLI should use (0, 2 or 3). Invalid
 * parameters return an error status and no document. */
EDSN_API edsn_status edsn_run_check(uint64_t n, uint32_t p, uint32_t degree, edsn_document** out);
EDSN_API edsn_status edsn_run_solve(uint64_t n, uint32_t p, edsn_document** out);
EDSN_API edsn_status edsn_run_construct(uint64_t n, uint32_t p, edsn_document** out);
/* max_tries = 0 selects the default of 64 * |F|. */
EDSN_API edsn_status edsn_run_sample(uint64_t n, uint32_t p, uint32_t degree, uint64_t seed,
                                     uint64_t max_tries, edsn_document** out);
EDSN_API edsn_status edsn_run_borel_check(uint64_t n, uint32_t p, uint32_t degree, uint64_t seed,
                                          uint64_t samples, edsn_document** out);

typedef struct edsn_certify_options {
  uint64_t n;
  uint32_t p;
  uint32_t field_degree;
  uint64_t samples;
  uint64_t seed;
  int control;
  unsigned threads; /* 0: hardware concurrency */
} edsn_certify_options;

EDSN_API void edsn_certify_options_init(edsn_certify_options* opts);
EDSN_API edsn_status edsn_run_certify(const edsn_certify_options* opts, edsn_document** out);

EDSN_API const char* edsn_document_json(const edsn_document* doc);
EDSN_API int edsn_document_exit_code(const edsn_document* doc);
EDSN_API void edsn_document_destroy(edsn_document* doc);

#ifdef __cplusplus
}
#endif

#endif /* EDSN_EDSN_H */
