#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fiber2d.hpp"
#include "homology.hpp"

namespace lf {

// Tolerances used across the verification jobs. Every value can be pinned in
// the configuration document; the defaults are the shipped contract.
struct tolerances {
    double ode = 1e-10;          // local ODE tolerance
    double transport = 1e-6;     // closed form vs ODE
    double conservation = 1e-8;  // quadric-level drift per unit path length
    double exactness = 1e-6;     // one-form identity residual
    double radial = 1e-6;
    double halftwist = 1e-5;
    double real_locus = 1e-6;
    double gradient = 1e-4;
    double conjugation = 1e-8;
    double collar = 1e-8;
    double action = 1e-6;
};

struct job_config {
    std::string job = "report-all";
    int dim = 2;
    std::string case_name = "three";  // "two" | "three" | "four"
    std::optional<morse_data_2d> data2d;
    std::optional<heegaard_data> heegaard;
    std::optional<linking_data> linking;
    bool chirality = false;
    std::uint64_t seed = 1;
    tolerances tol;
    std::string out_dir;
};

// Parse and validate the JSON configuration document. Unknown jobs, missing
// fields, and malformed data raise parse_error/data_error naming the field.
job_config parse_config(const std::string& text);
job_config parse_config_file(const std::string& path);

bool known_job(const std::string& job);

} // namespace lf
