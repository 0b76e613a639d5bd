// Command line front end; talks to the core exclusively through the shared
// C interface.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "lefschetz.h"

int main(int argc, char** argv) {
    CLI::App app{"fibered models of Morse functions: build, assemble, verify"};
    app.footer("jobs: verify-local | build-fiber | assemble | homology-check | render | report-all");

    std::string job, config_path, out_dir;
    double tol_scale = 1.0;
    std::uint64_t seed = 0;
    bool have_seed = false;

    app.add_option("job", job, "job to run")->required();
    app.add_option("--config", config_path, "configuration file (JSON)")->required();
    app.add_option("--out", out_dir, "output directory for reports and figures");
    app.add_option("--tol", tol_scale, "scale factor applied to the verification tolerances");
    auto* seed_opt = app.add_option("--seed", seed, "seed for sample grids");

    CLI11_PARSE(app, argc, argv);
    have_seed = seed_opt->count() > 0;

    lef_config* cfg = nullptr;
    if (lef_config_parse_file(config_path.c_str(), &cfg) != LEF_OK) {
        std::fprintf(stderr, "error: %s\n", lef_last_error());
        return 2;
    }
    if (lef_config_set_job(cfg, job.c_str()) != LEF_OK) {
        std::fprintf(stderr, "error: %s\n", lef_last_error());
        lef_config_free(cfg);
        return 2;
    }
    if (have_seed) lef_config_set_seed(cfg, seed);
    if (!out_dir.empty()) lef_config_set_out_dir(cfg, out_dir.c_str());
    if (tol_scale != 1.0 && lef_config_set_tolerance_scale(cfg, tol_scale) != LEF_OK) {
        std::fprintf(stderr, "error: %s\n", lef_last_error());
        lef_config_free(cfg);
        return 2;
    }

    lef_report* rep = nullptr;
    int rc = lef_run(cfg, &rep);
    if (rc != LEF_OK) {
        std::fprintf(stderr, "error: %s\n", lef_last_error());
        lef_config_free(cfg);
        return rc == LEF_ERR_PARSE || rc == LEF_ERR_DATA ? 2 : 1;
    }

    std::fputs(lef_report_markdown(rep), stdout);
    int ok = lef_report_ok(rep);

    lef_report_free(rep);
    lef_config_free(cfg);
    return ok ? 0 : 1;
}
