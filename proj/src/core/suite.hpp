#pragma once

#include "config.hpp"
#include "fibration.hpp"
#include "report.hpp"

namespace lf {

struct suite_result {
    verification_report report;
    int exit_code = 0;  // 0 all pass, 1 verification failure
};

// Run the configured job. When out_dir is set, report.json / report.md and
// any figures or model documents are written there; bytes depend only on the
// configuration and seed.
suite_result run_suite(const job_config& cfg);

// the local-model verification battery (jobs verify-local and report-all)
void run_local_battery(const job_config& cfg, verification_report& rep);

ordered_json fibration_to_json(const fibration_model& model);

} // namespace lf
