#ifndef LIFTINGS_H
#define LIFTINGS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define LIFTINGS_OK 0

#define LIFTINGS_ERR_INVALID 1

#define LIFTINGS_ERR_PARSE 2

#define LIFTINGS_ERR_PRECONDITION 3

#define LIFTINGS_ERR_THEOREM 4

#define LIFTINGS_ERR_SPECIALIZATION 5

/**
 * An executed job: the report plus its cached renderings.
 */
typedef struct LiftingsReport LiftingsReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Runs a command on statement text. On success writes a fresh report
 * handle to `out` and returns 0; otherwise returns an error status and
 * leaves a message for [`liftings_last_error`].
 *
 * # Safety
 * `input` and `command` must be valid NUL-terminated strings;
 * `options_json` may be null; `out` must be a valid pointer.
 */
int liftings_run(const char *input,
                 const char *command,
                 const char *options_json,
                 struct LiftingsReport **out);

/**
 * The JSON rendering of a report; valid until the report is freed.
 *
 * # Safety
 * `report` must be a live handle returned by [`liftings_run`].
 */
const char *liftings_report_json(const struct LiftingsReport *report);

/**
 * The text rendering of a report; valid until the report is freed.
 *
 * # Safety
 * `report` must be a live handle returned by [`liftings_run`].
 */
const char *liftings_report_text(const struct LiftingsReport *report);

/**
 * Releases a report handle. Passing null is a no-op.
 *
 * # Safety
 * `report` must be null or a handle returned by [`liftings_run`] that has
 * not been freed yet.
 */
void liftings_report_free(struct LiftingsReport *report);

/**
 * The message of the most recent error on this thread (empty when none).
 * Valid until the next failing call on the same thread.
 */
const char *liftings_last_error(void);

/**
 * Library version as a static string.
 */
const char *liftings_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIFTINGS_H */
