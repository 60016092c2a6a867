/*
 * rcsing: exact singularity analysis of rational planar curves.
 *
 * C interface over the C++ core: opaque handles, integer status codes,
 * UTF-8 strings.  Strings returned through char** out-parameters are
 * owned by the caller and must be released with rcsing_string_free;
 * strings returned as const char* stay owned by their handle.
 */
#ifndef RCSING_H
#define RCSING_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcsing_status {
    RCSING_OK = 0,
    RCSING_ERR_PARSE = 1,      /* malformed input */
    RCSING_ERR_DEGENERATE = 2, /* curve invariants violated, improper map */
    RCSING_ERR_VERIFY = 3,     /* a verification oracle failed */
    RCSING_ERR_INCOMPLETE = 4, /* depth or search bound exhausted */
    RCSING_ERR_NULLARG = 5,
    RCSING_ERR_BADCOMMAND = 6,
    RCSING_ERR_INTERNAL = 7
} rcsing_status;

typedef struct rcsing_options {
    int max_depth;     /* blow-up recursion cap; <= 0 means default (8) */
    int coord_bound;   /* coordinate shear search bound; <= 0 means 20 */
    int isolate_roots; /* nonzero: report real isolating intervals */
} rcsing_options;

typedef struct rcsing_analysis rcsing_analysis;

const char* rcsing_version(void);

/*
 * Runs the full analysis on a curve given as JSON
 * {"degree": n, "a": ..., "b": ..., "c": ...} or inline "a; b; c".
 * On RCSING_OK (or RCSING_ERR_INCOMPLETE, which still carries a usable
 * report) *out receives an owned handle.  On error *err (when non-NULL)
 * receives an owned message.
 */
rcsing_status rcsing_analyze(const char* curve_spec, const rcsing_options* opts,
                             rcsing_analysis** out, char** err);

/*
 * One-shot command runner mirroring the CLI.  command is one of:
 *   mubasis | implicit | smith | singularities | tree | verify |
 *   compare-matrices
 * format is "json" or "text".  *out receives an owned report string.
 */
rcsing_status rcsing_run(const char* command, const char* curve_spec,
                         const rcsing_options* opts, const char* format, char** out,
                         char** err);

/* Accessors; strings remain owned by the handle. */
const char* rcsing_report_json(rcsing_analysis* a);
const char* rcsing_report_text(rcsing_analysis* a);
int rcsing_curve_degree(const rcsing_analysis* a);
int rcsing_mu(const rcsing_analysis* a);
int rcsing_singularity_count(const rcsing_analysis* a);
/* Orders of the level-0 singularities, comma separated ("2,2,3"); owned
 * by the handle.  Empty string for a smooth curve. */
const char* rcsing_orders(rcsing_analysis* a);
int rcsing_budget_ok(const rcsing_analysis* a);
int rcsing_is_incomplete(const rcsing_analysis* a);

/*
 * Runs every verification suite on the handle (budget, symmetry, syzygy
 * invariance, h-block, appendix identities, four-matrix comparison, ...).
 * RCSING_OK when all pass, RCSING_ERR_VERIFY otherwise; details land in
 * the report accessors.
 */
rcsing_status rcsing_verify(rcsing_analysis* a);

void rcsing_analysis_free(rcsing_analysis* a);
void rcsing_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
