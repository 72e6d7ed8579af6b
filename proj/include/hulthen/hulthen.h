/* C API for the hulthen shared library: opaque handles + status codes.
 * All functions return HUL_OK on success; on failure hul_last_error()
 * describes the most recent error on the calling thread. */
#ifndef HULTHEN_H
#define HULTHEN_H

#include <stddef.h>

#if defined(_WIN32)
#define HUL_API __declspec(dllexport)
#else
#define HUL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    HUL_OK = 0,
    HUL_ERR_DOMAIN = 1,   /* parameter outside its admissible range */
    HUL_ERR_INVALID = 2,  /* invalid argument / state combination */
    HUL_ERR_POLE = 3,     /* denominator zero crossing */
    HUL_ERR_NO_RESULT = 4,/* search finished without a result */
    HUL_ERR_INTERNAL = 5  /* integration failure or other runtime error */
} hul_status;

typedef enum { HUL_ALIGNED = 0, HUL_UNALIGNED = 1 } hul_alignment;
typedef enum { HUL_BRANCH_PLUS = 0, HUL_BRANCH_MINUS = 1 } hul_branch;
typedef enum {
    HUL_SOURCE_DIRAC = 0,
    HUL_SOURCE_COULOMB = 1,
    HUL_SOURCE_KG = 2,
    HUL_SOURCE_KG_SIMPLIFIED = 3,
    HUL_SOURCE_DIRAC_SIMPLIFIED = 4,
    HUL_SOURCE_ORACLE = 5
} hul_source;
typedef enum { HUL_DELTA_DEFAULT = 0, HUL_DELTA_LITERAL = 1 } hul_delta_policy;
typedef enum { HUL_THRESHOLD_KG = 0, HUL_THRESHOLD_DIRAC = 1 } hul_threshold_kind;
typedef enum { HUL_CENTRIFUGAL_APPROXIMATED = 0, HUL_CENTRIFUGAL_EXACT = 1 } hul_centrifugal_mode;

typedef struct hul_model hul_model;
typedef struct hul_state hul_state;
typedef struct hul_wavefn hul_wavefn;

/* Branch-tagged energy. is_real == 0 means the radicand of the source
 * formula is negative; value is then NaN and radicand carries the sign. */
typedef struct {
    double value;
    double radicand;
    int is_real;
    int branch;  /* hul_branch */
    int source;  /* hul_source */
} hul_energy;

HUL_API const char* hul_last_error(void);

HUL_API hul_status hul_model_create(double Z, double alpha, double mu0, hul_model** out);
HUL_API void hul_model_destroy(hul_model* m);
HUL_API hul_status hul_state_create(int n_r, int ell, int D, hul_alignment align, hul_state** out);
HUL_API hul_status hul_state_create_continuous(int n_r, int ell, double D, hul_alignment align,
                                               hul_state** out);
HUL_API void hul_state_destroy(hul_state* s);

HUL_API hul_status hul_potential(const hul_model* m, double r, double* out);
HUL_API hul_status hul_mass(const hul_model* m, double r, double* out);
HUL_API hul_status hul_centrifugal_exact(double r, double* out);
HUL_API hul_status hul_centrifugal_approx(double r, double alpha, double* out);
HUL_API hul_status hul_kappa(const hul_state* s, double* out);

HUL_API hul_status hul_dirac_energy(const hul_state* s, const hul_model* m, hul_branch branch,
                                    hul_energy* out);
HUL_API hul_status hul_coulomb_limit_energy(const hul_state* s, double Z, double mu0, double* out);
HUL_API hul_status hul_quantization_residual(double E, const hul_state* s, const hul_model* m,
                                             hul_delta_policy policy, double* out);
HUL_API hul_status hul_kg_energy(const hul_state* s, double Z, double mu, double alpha,
                                 hul_branch branch, hul_energy* out);
HUL_API hul_status hul_kg_energy_simplified(int n, double D, double alpha, hul_energy* out);
HUL_API hul_status hul_dirac_energy_simplified(double n, double D, double alpha, hul_energy* out);
HUL_API hul_status hul_alpha_threshold(hul_threshold_kind kind, double n, double D, double* out);

/* Normalized (or raw) sampled spinor pair for the minus-branch closed-form
 * energy. Fails with HUL_ERR_DOMAIN when that energy has imaginary status. */
HUL_API hul_status hul_wavefn_create(const hul_state* s, const hul_model* m, hul_delta_policy policy,
                                     size_t n_points, int normalized, hul_wavefn** out);
HUL_API size_t hul_wavefn_size(const hul_wavefn* w);
HUL_API hul_status hul_wavefn_copy(const hul_wavefn* w, double* r, double* F, double* G);
HUL_API hul_status hul_wavefn_info(const hul_wavefn* w, double* energy, double* norm_constant,
                                   double* epsilon, double* delta);
HUL_API void hul_wavefn_destroy(hul_wavefn* w);

HUL_API hul_status hul_node_count(const double* samples, size_t n, int* out);

/* Shooting-method eigenvalue scan over the default energy window. Fills up
 * to `cap` energies/node counts; *found receives the number written. A scan
 * that finds nothing succeeds with *found == 0; diag_buf (optional) gets a
 * short scan summary. */
HUL_API hul_status hul_oracle_find(const hul_state* s, const hul_model* m, hul_centrifugal_mode mode,
                                   int cap, hul_energy* out_energies, int* out_nodes, int* found,
                                   char* diag_buf, size_t diag_len);

/* Crossings of two principal-n curves (kg-simplified or dirac-simplified)
 * over [alpha_lo, alpha_hi]. Identical curves are HUL_ERR_INVALID. */
HUL_API hul_status hul_intersections_simplified(hul_source source, double n1, double D1, double n2,
                                                double D2, double alpha_lo, double alpha_hi,
                                                size_t grid_points, double* alpha_star,
                                                double* energy, size_t cap, size_t* found);

/* JSON reports; free the returned string with hul_string_free. */
HUL_API hul_status hul_consistency_report_json(char** out_json);
HUL_API hul_status hul_approximation_report_json(const hul_model* m, const int* n_r, const int* ell,
                                                 const int* D, size_t n_states, const double* alphas,
                                                 size_t n_alphas, char** out_json);
HUL_API void hul_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HULTHEN_H */
