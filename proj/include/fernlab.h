#ifndef FERNLAB_H
#define FERNLAB_H

/* C interface to the fernlab core. All computation goes through
 * fernlab_run; results are opaque handles carrying JSON (and, for some
 * commands, DOT) text. Status codes double as process exit codes. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FERNLAB_OK = 0,
  FERNLAB_USAGE = 1,      /* bad command or unparseable scenario */
  FERNLAB_VALIDATION = 2, /* scenario violates an invariant or precondition */
  FERNLAB_COMPUTE = 3     /* computation-level failure (singular g, critical flag, ...) */
} fernlab_status;

typedef struct fernlab_result fernlab_result;

/* Runs one of: dims, envelope, fern, lines, flatten, steinberg, gl4.
 * scenario_json is the scenario object text; options_json is optional (NULL
 * allowed) with keys {"seed": uint, "samples": int, "dot": bool}.
 * On any outcome *out receives a result handle (carrying either the payload
 * or the error message); the caller frees it with fernlab_result_free. */
fernlab_status fernlab_run(const char* command, const char* scenario_json,
                           const char* options_json, fernlab_result** out);

/* JSON payload of a successful run; NULL when the run failed. */
const char* fernlab_result_json(const fernlab_result* res);

/* DOT text when the command produced one (steinberg with dot=true); NULL otherwise. */
const char* fernlab_result_dot(const fernlab_result* res);

/* Error message when the run failed; NULL on success. */
const char* fernlab_result_error(const fernlab_result* res);

void fernlab_result_free(fernlab_result* res);

const char* fernlab_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FERNLAB_H */
