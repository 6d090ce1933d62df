/* C interface to the induction-scheme checker. All functions are
 * thread-compatible; error messages are thread-local. Strings returned
 * through out-parameters are heap-allocated and must be released with
 * oind_string_free (or oind_result_clear for whole results). */
#ifndef OIND_H
#define OIND_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct oind_model oind_model;

typedef enum {
  OIND_OK = 0,
  OIND_EINVAL = 1,  /* bad argument or unknown name */
  OIND_ESYNTAX = 2, /* formula/sentence/axiom syntax */
  OIND_EFORMAT = 3, /* model or catalog JSON */
  OIND_EEVAL = 4    /* evaluation error (signature, domain) */
} oind_status;

typedef enum {
  OIND_HOLDS = 0,
  OIND_FAILS = 1,
  OIND_UNKNOWN = 2,
  OIND_HOLDS_BOUNDED = 3
} oind_verdict;

typedef struct {
  oind_verdict verdict;
  char* witness; /* NULL when absent */
  char* method;
  char* note;
} oind_result;

typedef struct {
  unsigned slice;         /* 0 = default (16) */
  unsigned max_term_size; /* 0 = default (6) */
} oind_options;

/* Message for the most recent failing call on this thread. */
const char* oind_last_error(void);

const char* oind_version(void);

void oind_string_free(char* s);
void oind_result_clear(oind_result* r);

/* name: "standard", "ninf", "nab", "lollipop5", "lollipop6", "z<k>", with an
 * optional "@<signature>" reduct suffix, e.g. "ninf@0s". */
oind_status oind_model_open_zoo(const char* name, oind_model** out);
oind_status oind_model_open_json(const char* json_text, oind_model** out);
void oind_model_close(oind_model* m);

const char* oind_model_name(const oind_model* m);
const char* oind_model_signature(const oind_model* m);
/* Finite models only. */
oind_status oind_model_to_json(const oind_model* m, char** out);

oind_status oind_check_axiom(const oind_model* m, const char* axiom_id, const oind_options* opt,
                             oind_result* out);
oind_status oind_check_sentence(const oind_model* m, const char* sentence,
                                const oind_options* opt, oind_result* out);
oind_status oind_decide_scheme(const oind_model* m, const char* scheme, const oind_options* opt,
                               oind_result* out);
oind_status oind_witness_search(const oind_model* m, const char* scheme, unsigned max_size,
                                const char* term_sig /* NULL = model signature */,
                                const oind_options* opt, oind_result* out);
oind_status oind_check_instance(const oind_model* m, const char* formula,
                                const char* const* param_names, const char* const* param_values,
                                size_t n_params, const oind_options* opt, oind_result* out);

/* Run a result catalog (JSON text). format: "json" or "md". *pass_out is 1
 * when every entry matched its expected verdict. */
oind_status oind_run_catalog(const char* catalog_json, const char* format,
                             const oind_options* opt, char** report_out, int* pass_out);

#ifdef __cplusplus
}
#endif

#endif /* OIND_H */
