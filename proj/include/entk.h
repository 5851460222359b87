/* Copyright 2026 The entk Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the entk core: exact computation with finitely presented
 * representations of the Toeplitz relations v_i* v_j = delta_ij I.
 *
 * Conventions:
 *   - Every function returns a status code (ENTK_OK on success). On failure,
 *     *err (when the pointer is non-NULL) receives a heap-allocated message;
 *     release it with entk_string_free.
 *   - All JSON parameters and results are complete documents carrying
 *     "format_version": 1, in the formats described in the project README.
 *   - Decision outputs use the ENTK_DECIDED_* values below, which the CLI
 *     maps one-to-one onto its exit codes.
 */

#ifndef ENTK_H
#define ENTK_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define ENTK_OK 0
#define ENTK_ERR_PARSE 1
#define ENTK_ERR_INVALID 2
#define ENTK_ERR_RANK_MISMATCH 3
#define ENTK_ERR_NOT_UNITARY 4
#define ENTK_ERR_NOT_ESSENTIAL 5
#define ENTK_ERR_INTERNAL 6

/* Decision values. */
#define ENTK_DECIDED_YES 0 /* equivalent / equal / conjugate / verified */
#define ENTK_DECIDED_NO 2  /* refuted, with an exact counterexample */
#define ENTK_UNDECIDED 3   /* unknown, or certified only to the tested depth */

/* Opaque handle for a validated representation. */
typedef struct entk_rep entk_rep;

const char* entk_version(void);

void entk_string_free(char* s);
void entk_rep_free(entk_rep* rep);

int entk_rep_parse(const char* json, entk_rep** out, char** err);
int entk_rep_to_json(const entk_rep* rep, char** out, char** err);
int entk_rep_multiplicity(const entk_rep* rep, unsigned* out, char** err);
/* Basis names fixed by the defect projection, scanned to the given depth. */
int entk_rep_defect(const entk_rep* rep, unsigned depth, char** names_json, char** err);

int entk_mult_report(const entk_rep* rep, char** report, char** err);
int entk_wold_report(const entk_rep* rep, unsigned scan_depth, char** report, char** err);

/* mode is "bh-quasifree" (a true decision by multiplicity) or "scalar-free"
 * (certification to depth with exact refutations). witness_json receives the
 * constructed witness document when one exists, else NULL. */
int entk_equiv(const entk_rep* omega, const entk_rep* tau, const char* mode, unsigned depth,
               int* decision, char** witness_json, char** report, char** err);

/* Verifies a witness document against the pair (omega, tau). */
int entk_verify(const entk_rep* omega, const entk_rep* tau, const char* witness_json,
                unsigned depth, int* decision, char** report, char** err);

int entk_endo_equal(const entk_rep* omega, const entk_rep* tau, unsigned depth, int* decision,
                    char** report, char** err);

/* witness_json may be NULL; without it only pure-shift pairs are decided. */
int entk_endo_conjugate(const entk_rep* omega, const entk_rep* tau, const char* witness_json,
                        unsigned depth, int* decision, char** report, char** err);

/* expr_json holds {"expr": <operator expression over rep "omega">}. */
int entk_intertwiner(const char* expr_json, const entk_rep* rep, unsigned depth, int* decision,
                     char** report, char** err);

/* Checks omega = Ad_W . tau . gamma_U two ways (symbolic automorphism route
 * and witness route); witness_json must carry a scalar-flavored U. */
int entk_gamma_conjugation(const entk_rep* omega, const entk_rep* tau, const char* witness_json,
                           unsigned depth, int* decision, char** report, char** err);

/* Applies an algebra element document to a vector document in rep. */
int entk_algebra_eval(const char* elem_json, const entk_rep* rep, const char* vec_json,
                      char** result_vec_json, char** err);

int entk_module_check_basis(const char* basis_json, int* decision, char** report, char** err);
int entk_module_to_unitary(const char* basis_json, char** matrix_json, char** report,
                           char** err);

/* order receives "infinite" or the decimal order of the unit class. */
int entk_ibn_k0(const char* k0_json, int* has_ibn, char** order, char** report, char** err);
int entk_ibn_fd(const char* fd_json, int* has_ibn, char** order, char** report, char** err);

#ifdef __cplusplus
}
#endif

#endif /* ENTK_H */
