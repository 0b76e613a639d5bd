#include "ode.hpp"

#include <algorithm>
#include <cmath>

namespace lf {

namespace {

// Dormand-Prince coefficients (RK5(4)7M)
const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
const double a21 = 1.0 / 5;
const double a31 = 3.0 / 40, a32 = 9.0 / 40;
const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
             a65 = -5103.0 / 18656;
const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
             b6 = 11.0 / 84;
// error = 5th order minus embedded 4th order
const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
             e6 = 22.0 / 525, e7 = -1.0 / 40;

} // namespace

rk45_stats rk45_integrate(const ode_rhs& f, rvec& y, double t0, double t1,
                          const rk45_options& opt, const ode_observer& observer) {
    rk45_stats st;
    const size_t n = y.size();
    double t = t0;
    double dir = (t1 >= t0) ? 1.0 : -1.0;
    double h = dir * std::min(opt.h_init, std::abs(t1 - t0));
    if (t0 == t1) return st;

    rvec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), err(n);
    f(t, y, k1);
    if (observer) observer(t, y);

    long steps = 0;
    while (dir * (t1 - t) > 0) {
        if (++steps > opt.max_steps) throw integration_error("step budget exhausted");
        if (dir * (t + h - t1) > 0) h = t1 - t;

        for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        f(t + c2 * h, ytmp, k2);
        for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(t + c3 * h, ytmp, k3);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(t + c4 * h, ytmp, k4);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(t + c5 * h, ytmp, k5);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(t + h, ytmp, k6);
        for (size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(t + h, ynew, k7);

        double errnorm = 0;
        for (size_t i = 0; i < n; ++i) {
            double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k7[i]);
            double sc = opt.tol + opt.tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            errnorm = std::max(errnorm, std::abs(e) / sc);
        }

        if (errnorm <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7;  // FSAL
            ++st.accepted;
            if (observer) observer(t, y);
        } else {
            ++st.rejected;
        }
        double fac = 0.9 * std::pow(std::max(errnorm, 1e-10), -0.2);
        fac = std::clamp(fac, 0.2, 5.0);
        h *= fac;
        if (std::abs(h) < opt.h_min) throw integration_error("step size underflow");
    }
    return st;
}

} // namespace lf
