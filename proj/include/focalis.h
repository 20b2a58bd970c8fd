/* focalis - exact focal-locus computations for algebraic varieties.
 *
 * C interface to the shared library. All computations are exact over Q(i);
 * jobs are plain text (schema 1) and results are JSON documents. Handles are
 * opaque; strings returned by accessors are owned by the result handle and
 * stay valid until focalis_result_free.
 */
#ifndef FOCALIS_H
#define FOCALIS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct focalis_result focalis_result;

/* Status doubles as the process exit code:
 *   0 ok, 2 parse error, 3 precondition error, 4 internal error. */
typedef enum focalis_status {
  FOCALIS_OK = 0,
  FOCALIS_PARSE_ERROR = 2,
  FOCALIS_PRECONDITION_ERROR = 3,
  FOCALIS_INTERNAL_ERROR = 4
} focalis_status;

/* Run a job given as plain text. Always produces a result handle (also on
 * error); returns the status. *out_result must be freed by the caller. */
focalis_status focalis_run_job(const char* job_text,
                               focalis_result** out_result);

/* JSON result document (always present). */
const char* focalis_result_document(const focalis_result* r);

/* Stable error code name and message, or NULL when the run succeeded. */
const char* focalis_result_error_code(const focalis_result* r);
const char* focalis_result_error_message(const focalis_result* r);

int focalis_result_status(const focalis_result* r);

/* Sample emission for parametrized payload components. fmt is "csv" or
 * "json"; precision is the number of decimal digits (display only).
 * Returns NULL when the payload has no parametrized component; the string
 * is owned by the handle. */
const char* focalis_result_samples(focalis_result* r, int count,
                                   const char* fmt, int precision);

void focalis_result_free(focalis_result* r);

const char* focalis_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FOCALIS_H */
