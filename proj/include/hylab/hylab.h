/* C interface to the hylab library.
 *
 * All objects are opaque handles released with the matching *_free call.
 * Every function returns a hylab_status; on failure hylab_last_error()
 * describes the problem (thread-local, valid until the next call on the
 * same thread). Strings returned through char** are owned by the caller
 * and released with hylab_string_free.
 */
#ifndef HYLAB_HYLAB_H
#define HYLAB_HYLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(HYLAB_BUILDING_LIBRARY)
#define HYLAB_API __attribute__((visibility("default")))
#else
#define HYLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hylab_status {
  HYLAB_OK = 0,
  HYLAB_ERR_INVALID_ARGUMENT = 1, /* precondition violated (bad spec, p out of range, ...) */
  HYLAB_ERR_NULL_POINTER = 2,
  HYLAB_ERR_INTERNAL = 3
} hylab_status;

typedef struct hylab_group hylab_group;
typedef struct hylab_field hylab_field;
typedef struct hylab_weight hylab_weight;

typedef struct hylab_report {
  char name[48];
  double p;
  double q; /* +inf for the sup form */
  double lhs;
  double rhs;
  double constant;
  double ratio;
  double margin;
  int pass;
} hylab_report;

typedef enum hylab_probe_kind {
  HYLAB_PROBE_TRACE = 0,
  HYLAB_PROBE_ENTRY = 1,
  HYLAB_PROBE_LEFT = 2,  /* X -> M X */
  HYLAB_PROBE_RIGHT = 3, /* X -> X M */
  HYLAB_PROBE_SANDWICH = 4 /* X -> M X M */
} hylab_probe_kind;

typedef enum hylab_weight_direction {
  HYLAB_A_TO_GAMMA = 0,
  HYLAB_GAMMA_TO_A = 1
} hylab_weight_direction;

HYLAB_API const char* hylab_version(void);
HYLAB_API const char* hylab_last_error(void);
HYLAB_API void hylab_string_free(char* s);

/* Groups */
HYLAB_API hylab_status hylab_group_create(const int64_t* factors, size_t count, double haar_weight,
                                          hylab_group** out);
HYLAB_API hylab_status hylab_group_parse(const char* spec, hylab_group** out);
HYLAB_API hylab_status hylab_group_padic(int64_t prime, int depth_neg, int depth_pos, hylab_group** out);
HYLAB_API hylab_status hylab_group_grid(int dimension, int64_t points_per_axis, double cell_width,
                                        hylab_group** out);
HYLAB_API void hylab_group_free(hylab_group* group);
HYLAB_API hylab_status hylab_group_order(const hylab_group* group, size_t* order);
HYLAB_API hylab_status hylab_group_weights(const hylab_group* group, double* haar_weight, double* dual_weight);
/* Writes xi(theta) for character index k and element index j. */
HYLAB_API hylab_status hylab_char_eval(const hylab_group* group, size_t character_index, size_t element_index,
                                       double* re, double* im);
/* values: |G| complex numbers interleaved (re, im). */
HYLAB_API hylab_status hylab_inversion_defect(const hylab_group* group, const double* values, double* defect);

/* Fields. values holds |G| d x d matrices, column-major, entries interleaved (re, im). */
HYLAB_API hylab_status hylab_field_create(const hylab_group* group, size_t dim, const double* values,
                                          hylab_field** out);
HYLAB_API hylab_status hylab_field_random(const hylab_group* group, size_t dim, uint64_t seed, hylab_field** out);
HYLAB_API void hylab_field_free(hylab_field* field);
/* out receives |G| d x d matrices in the same layout as hylab_field_create. */
HYLAB_API hylab_status hylab_fourier_transform(const hylab_field* field, int fast, double* out, size_t out_len);
HYLAB_API hylab_status hylab_parseval_defect(const hylab_field* field, double* relative_defect);
/* matrix: d x d column-major interleaved; ignored for TRACE. row/col used by ENTRY. */
HYLAB_API hylab_status hylab_bochner_linearity_defect(const hylab_field* field, hylab_probe_kind kind,
                                                      const double* matrix, size_t row, size_t col,
                                                      double* defect);

/* Weights: d x d Hermitian positive definite, column-major interleaved. */
HYLAB_API hylab_status hylab_weight_create(const double* matrix, size_t dim, hylab_weight** out);
HYLAB_API void hylab_weight_free(hylab_weight* weight);

/* Matrices below: d x d column-major interleaved (re, im). */
HYLAB_API hylab_status hylab_schatten_norm(const double* matrix, size_t dim, double p, double* norm);
HYLAB_API hylab_status hylab_singular_values(const double* matrix, size_t dim, double* values);

/* Checks */
HYLAB_API hylab_status hylab_check_main(const hylab_field* field, double p, hylab_report* report);
HYLAB_API hylab_status hylab_check_main_sup(const hylab_field* field, hylab_report* report);
HYLAB_API hylab_status hylab_check_weighted(const hylab_field* field, double p, const hylab_weight* a,
                                            const hylab_weight* b, double t, hylab_weight_direction direction,
                                            hylab_report* report);
/* variant: "upper_p>=2", "lower_p>=2", "upper_p<=2", "lower_p<=2", "alt_p>=2", "dual_p<=2" */
HYLAB_API hylab_status hylab_check_clarkson(const double* a, const double* b, size_t dim, double p,
                                            const char* variant, hylab_report* report);
/* matrices: count d x d matrices back to back */
HYLAB_API hylab_status hylab_check_bhatia_kittaneh(const double* matrices, size_t count, size_t dim, double p,
                                                   hylab_report* report);

/* Campaign drivers. command is one of verify, parseval, weighted, extremal,
 * padic-demo, grid-demo, clarkson; config_json is a JSON object. On
 * HYLAB_OK, *report_json holds the report document and *all_pass is 1 iff
 * every check passed. */
HYLAB_API hylab_status hylab_run(const char* command, const char* config_json, char** report_json, int* all_pass);
/* Flattens a report document to CSV. */
HYLAB_API hylab_status hylab_report_to_csv(const char* report_json, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* HYLAB_HYLAB_H */
