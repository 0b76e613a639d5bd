#pragma once

#include <functional>

#include "errors.hpp"
#include "linalg.hpp"

namespace lf {

// Embedded Dormand-Prince 5(4) pair with step size control on the local
// error. The observer (when set) sees every accepted step.
struct rk45_options {
    double tol = 1e-10;       // local tolerance (absolute and relative)
    double h_init = 1e-3;
    double h_min = 1e-14;
    long max_steps = 2000000;
};

using ode_rhs = std::function<void(double, const rvec&, rvec&)>;
using ode_observer = std::function<void(double, const rvec&)>;

struct rk45_stats {
    long accepted = 0;
    long rejected = 0;
};

rk45_stats rk45_integrate(const ode_rhs& f, rvec& y, double t0, double t1,
                          const rk45_options& opt, const ode_observer& observer = nullptr);

} // namespace lf
