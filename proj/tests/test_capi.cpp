// exercises the shared C interface end to end
#include <assert.h>
#include <stdio.h>
#include <string.h>

#include "lefschetz.h"

static int failures = 0;

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            failures++;                                          \
        }                                                        \
    } while (0)

int main(void) {
    CHECK(lef_version() != NULL);

    const char* doc =
        "{\"job\": \"homology-check\", \"dim\": 2, \"case\": \"three\","
        " \"handles\": [[0.1, 0.6]], \"framings\": [\"reversing\"], \"seed\": 3}";

    lef_config* cfg = NULL;
    CHECK(lef_config_parse(doc, &cfg) == LEF_OK);

    lef_config* bad = NULL;
    CHECK(lef_config_parse("{\"dim\": 9}", &bad) != LEF_OK);
    CHECK(strlen(lef_last_error()) > 0);

    lef_report* rep = NULL;
    CHECK(lef_run(cfg, &rep) == LEF_OK);
    CHECK(lef_report_ok(rep) == 1);
    CHECK(lef_report_fail_count(rep) == 0);
    const char* js = lef_report_json(rep);
    CHECK(js != NULL && strstr(js, "homology") != NULL);
    CHECK(lef_report_markdown(rep) != NULL);
    lef_report_free(rep);

    lef_fiber* fib = NULL;
    CHECK(lef_fiber_build(cfg, &fib) == LEF_OK);
    int chi = 0, bc = 0, nc = 0;
    CHECK(lef_fiber_euler_characteristic(fib, &chi) == LEF_OK);
    CHECK(chi == -2);
    CHECK(lef_fiber_boundary_components(fib, &bc) == LEF_OK && bc > 0);
    CHECK(lef_fiber_curve_count(fib, &nc) == LEF_OK && nc == 3);
    CHECK(lef_fiber_curve_name(fib, 0) != NULL);
    long long crossings = -1;
    CHECK(lef_fiber_intersection(fib, "L0", "L1[1]", 0, &crossings) == LEF_OK);
    CHECK(crossings == 2);
    CHECK(lef_fiber_intersection(fib, "L0", "nope", 0, &crossings) == LEF_ERR_DATA);
    const char* svg = lef_fiber_svg(fib);
    CHECK(svg != NULL && strncmp(svg, "<svg", 4) == 0);
    lef_fiber_free(fib);

    lef_fibration* m = NULL;
    CHECK(lef_fibration_assemble(cfg, &m) == LEF_OK);
    int nv = 0;
    double b = 0;
    CHECK(lef_fibration_critical_value_count(m, &nv) == LEF_OK && nv == 3);
    CHECK(lef_fibration_basepoint(m, &b) == LEF_OK && b == 0.75);
    CHECK(lef_fibration_json(m) != NULL);
    lef_fibration_free(m);

    double v = 0;
    CHECK(lef_profile_eval(0, 0.5, 1.0, 0.0, 1, &v) == LEF_OK);
    CHECK(v == 0.5);
    CHECK(lef_profile_eval(2, 0.25, 1.0, 0.75, 1, &v) == LEF_OK);
    CHECK(v == 0.5);
    CHECK(lef_profile_eval(7, 0.25, 1.0, 0.75, 1, &v) == LEF_ERR_INVALID_ARG);

    lef_config_free(cfg);

    if (failures) {
        fprintf(stderr, "%d C interface check(s) failed\n", failures);
        return 1;
    }
    printf("C interface checks passed\n");
    return 0;
}
