/*
 * galois5 — monodromy and Jacobian decomposition for degree-5 branched
 * coverings of compact Riemann surfaces.
 *
 * C interface of the shared library. All objects are opaque handles; every
 * operation reports a g5_status whose numeric value doubles as a sensible
 * process exit code. Results carry both a human-readable text rendering and
 * a JSON rendering with frozen field names.
 *
 * Ramification data grammar:  "g=" INT ";" [ type ( ":" type )* ]
 * with each type a partition of 5, e.g.  "g=0; 4,1:4,1:2,2,1".
 * Branch-count strings:  "n1=2,n3=1" optionally with "g=2"; counts use the
 * fixed order n1:[5] n2:[2,2,1] n3:[4,1] n4:[3,1,1] n5:[3,2] n6:[2,1,1,1].
 * Group names: "C5", "D5", "AffF5", "A5", "S5".
 */

#ifndef GALOIS5_H
#define GALOIS5_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g5_status {
  G5_OK = 0,
  G5_ERR_VERIFY = 1,       /* a verification check failed */
  G5_ERR_PARSE = 2,        /* malformed input text or bad argument */
  G5_ERR_UNREALIZABLE = 3, /* no covering with the given data exists */
  G5_ERR_BUDGET = 4,       /* enumeration search space over budget */
  G5_ERR_INTERNAL = 5
} g5_status;

typedef struct g5_ramdata g5_ramdata;
typedef struct g5_result g5_result;

const char* g5_version(void);

/* message for the most recent failure on this thread */
const char* g5_last_error(void);

g5_status g5_ramdata_parse(const char* text, g5_ramdata** out);
void g5_ramdata_free(g5_ramdata* rd);
int g5_ramdata_genus(const g5_ramdata* rd);
int g5_ramdata_branch_count(const g5_ramdata* rd);
int g5_ramdata_is_realizable(const g5_ramdata* rd);

/* possible monodromy groups, the clause that decided them, explanation */
g5_status g5_classify(const g5_ramdata* rd, g5_result** out);

/* one validated generating vector per possible group (or for `group` only);
 * budget 0 means the default enumeration budget */
g5_status g5_witness(const g5_ramdata* rd, const char* group,
                     unsigned long long budget, g5_result** out);

/* genus and ramification of every intermediate quotient of the closure;
 * group may be NULL when the classification is unique */
g5_status g5_cover(const g5_ramdata* rd, const char* group, g5_result** out);
g5_status g5_cover_counts(const char* group, const char* counts, g5_result** out);

/* group algebra decomposition of the Jacobian of the closure */
g5_status g5_decompose(const g5_ramdata* rd, const char* group, g5_result** out);
g5_status g5_decompose_counts(const char* group, const char* counts,
                              g5_result** out);

/* oracle-vs-classifier sweep and every internal consistency check; returns
 * G5_ERR_VERIFY when some check fails (the report is still produced) */
g5_status g5_verify(int gmax, int nmax, int degmax, unsigned long long budget,
                    g5_result** out);

const char* g5_result_text(const g5_result* r);
const char* g5_result_json(const g5_result* r);
void g5_result_free(g5_result* r);

#ifdef __cplusplus
}
#endif

#endif /* GALOIS5_H */
