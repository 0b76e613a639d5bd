/*
 * lefschetz: fibered models of Morse functions at desk scale.
 *
 * C interface to the verification core. All functions return LEF_OK (0) on
 * success and a negative error code otherwise; lef_last_error() describes
 * the most recent failure in the calling thread. Strings returned through
 * const char* are owned by the handle they were queried from and stay valid
 * until that handle is freed.
 */
#ifndef LEFSCHETZ_H
#define LEFSCHETZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#ifdef LEF_BUILD
#define LEF_API __declspec(dllexport)
#else
#define LEF_API __declspec(dllimport)
#endif
#else
#define LEF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum lef_status {
    LEF_OK = 0,
    LEF_ERR_INVALID_ARG = -1,
    LEF_ERR_PARSE = -2,       /* malformed configuration document */
    LEF_ERR_DATA = -3,        /* invalid handle/heegaard/linking data */
    LEF_ERR_DOMAIN = -4,      /* input off the stated mathematical domain */
    LEF_ERR_INTEGRATION = -5, /* adaptive integrator gave up */
    LEF_ERR_IO = -6,
    LEF_ERR_INTERNAL = -7
};

typedef struct lef_config lef_config;
typedef struct lef_report lef_report;
typedef struct lef_fiber lef_fiber;
typedef struct lef_fibration lef_fibration;

LEF_API const char* lef_version(void);
LEF_API const char* lef_last_error(void);

/* ---- configuration ------------------------------------------------------ */

LEF_API int lef_config_parse(const char* json_text, lef_config** out);
LEF_API int lef_config_parse_file(const char* path, lef_config** out);
LEF_API int lef_config_set_job(lef_config* cfg, const char* job);
LEF_API int lef_config_set_seed(lef_config* cfg, uint64_t seed);
LEF_API int lef_config_set_out_dir(lef_config* cfg, const char* dir);
/* scales every verification tolerance except the integrator's local one */
LEF_API int lef_config_set_tolerance_scale(lef_config* cfg, double scale);
LEF_API void lef_config_free(lef_config* cfg);

/* ---- jobs and reports ---------------------------------------------------- */

/* Runs the configured job; writes report/figure files when an output
 * directory is set. The report handle is created even when checks fail. */
LEF_API int lef_run(const lef_config* cfg, lef_report** out);

LEF_API int lef_report_ok(const lef_report* rep);          /* 1 all pass, 0 otherwise */
LEF_API int lef_report_pass_count(const lef_report* rep);
LEF_API int lef_report_fail_count(const lef_report* rep);
LEF_API const char* lef_report_json(const lef_report* rep);
LEF_API const char* lef_report_markdown(const lef_report* rep);
LEF_API void lef_report_free(lef_report* rep);

/* ---- fiber models --------------------------------------------------------- */

LEF_API int lef_fiber_build(const lef_config* cfg, lef_fiber** out);
LEF_API int lef_fiber_euler_characteristic(const lef_fiber* f, int* out);
LEF_API int lef_fiber_boundary_components(const lef_fiber* f, int* out);
LEF_API int lef_fiber_curve_count(const lef_fiber* f, int* out);
LEF_API const char* lef_fiber_curve_name(const lef_fiber* f, int index);
/* mode 0 = geometric crossing count, 1 = algebraic (signed) */
LEF_API int lef_fiber_intersection(const lef_fiber* f, const char* curve_a, const char* curve_b,
                                   int mode, long long* out);
LEF_API const char* lef_fiber_svg(const lef_fiber* f);
LEF_API void lef_fiber_free(lef_fiber* f);

/* ---- assembled fibrations -------------------------------------------------- */

LEF_API int lef_fibration_assemble(const lef_config* cfg, lef_fibration** out);
LEF_API const char* lef_fibration_json(const lef_fibration* m);
LEF_API int lef_fibration_critical_value_count(const lef_fibration* m, int* out);
LEF_API int lef_fibration_basepoint(const lef_fibration* m, double* out);
LEF_API void lef_fibration_free(lef_fibration* m);

/* ---- scalar utilities ------------------------------------------------------ */

/* profile kinds: 0 = uncut angle profile, 1 = cut profile, 2 = surgery profile.
 * order in {0, 1, 2} selects value or derivative. */
LEF_API int lef_profile_eval(int kind, double s, double r, double t, int order, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LEFSCHETZ_H */
