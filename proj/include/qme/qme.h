#ifndef QME_H
#define QME_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(QME_BUILDING_LIBRARY)
#define QME_API __attribute__((visibility("default")))
#else
#define QME_API
#endif

typedef struct qme_space qme_space;
typedef struct qme_element qme_element;

typedef enum qme_status {
  QME_OK = 0,
  QME_ERR_CONFIG = 1,
  QME_ERR_USAGE = 2,
  QME_ERR_PARSE = 3,
  QME_ERR_RANGE = 4,
  QME_ERR_INTEGRITY = 5,
  QME_ERR_PRECONDITION = 6,
  QME_ERR_NULL = 7,
  QME_ERR_INTERNAL = 8
} qme_status;

/* Message of the last failed call on this thread; never null. */
QME_API const char* qme_last_error(void);
QME_API const char* qme_status_name(qme_status s);

QME_API qme_status qme_space_from_file(const char* path, qme_space** out);
QME_API qme_status qme_space_from_json(const char* json, qme_space** out);
/* The built-in one-dimensional space: odd t with <t,t> = 1. */
QME_API qme_status qme_space_one_dim(qme_space** out);
QME_API qme_status qme_space_dim(const qme_space* space, int* out);
QME_API void qme_space_free(qme_space* space);

/* variant: "hq2", "lg", "lgv", or null for no membership check. */
QME_API qme_status qme_element_parse(const qme_space* space, const char* text, const char* variant,
                                     qme_element** out);
QME_API qme_status qme_element_render(const qme_element* e, char** out);
QME_API qme_status qme_element_is_zero(const qme_element* e, int* out);
QME_API qme_status qme_element_equal(const qme_element* a, const qme_element* b, int* out);
QME_API void qme_element_free(qme_element* e);

/* trunc: "L,K,G,N,P" or null for the default profile. */
QME_API qme_status qme_bracket(const qme_element* a, const qme_element* b, const char* variant, const char* trunc,
                               qme_element** out);
QME_API qme_status qme_differential(const qme_element* a, const char* variant, const char* trunc,
                                    qme_element** out);
QME_API qme_status qme_mc_residual(const qme_element* x, const char* variant, const char* trunc,
                                   qme_element** out);
QME_API qme_status qme_gauge_act(const qme_element* y, const qme_element* x, const char* variant,
                                 const char* trunc, qme_element** out);

/* Runs a CLI command.  request is a JSON object with keys "command", "args"
   (array of element strings), and optional "variant", "trunc", "seed",
   "order".  space may be null for example-1d.  format is "json" or "text".
   *verdict is 0 when every check passed and 1 otherwise. */
QME_API qme_status qme_run(const qme_space* space, const char* request, const char* format, char** out,
                           int* verdict);

QME_API void qme_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
