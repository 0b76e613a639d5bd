#include "profiles.hpp"

#include <cmath>
#include <sstream>

namespace lf {

namespace {
std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}
} // namespace

rtilde_profile::rtilde_profile(double s, double r) : s_(s), r_(r) {
    if (s <= 0 || r <= 0) throw construction_error("rtilde requires s > 0 and r > 0");
}

double rtilde_profile::value(double t) const {
    double a = s_ / 2;
    return 0.5 * t - 0.5 * std::sqrt(t * t + a * a);
}

double rtilde_profile::d1(double t) const {
    double a = s_ / 2;
    return 0.5 - t / (2 * std::sqrt(t * t + a * a));
}

double rtilde_profile::d2(double t) const {
    double a = s_ / 2;
    double e = std::sqrt(t * t + a * a);
    return -a * a / (2 * e * e * e);
}

std::string rtilde_profile::name() const { return "rtilde(s=" + fmt(s_) + ")"; }

cut_profile::cut_profile(double s, double r) : s_(s), r_(r), base_(s, r) {
    // cubic Hermite data for the derivative on [r/4, r/2]
    double L = r / 4;
    double d0 = base_.d1(r / 4);
    double m0 = base_.d2(r / 4);
    // endpoint: value 0, slope 0 at r/2
    // d(tau) = c0 + c1 tau + c2 tau^2 + c3 tau^3, tau = t - r/4
    c0_ = d0;
    c1_ = m0;
    c2_ = (-3 * d0 - 2 * m0 * L) / (L * L);
    c3_ = (2 * d0 + m0 * L) / (L * L * L);
    v14_ = base_.value(r / 4);
    double t2 = L;  // integral of the blend cubic over [0, L]
    v12_ = v14_ + c0_ * t2 + c1_ * t2 * t2 / 2 + c2_ * t2 * t2 * t2 / 3 + c3_ * t2 * t2 * t2 * t2 / 4;
}

double cut_profile::value(double t) const {
    if (t <= r_ / 4) return base_.value(t);
    if (t >= r_ / 2) return v12_;
    double tau = t - r_ / 4;
    return v14_ + c0_ * tau + c1_ * tau * tau / 2 + c2_ * tau * tau * tau / 3 +
           c3_ * tau * tau * tau * tau / 4;
}

double cut_profile::d1(double t) const {
    if (t <= r_ / 4) return base_.d1(t);
    if (t >= r_ / 2) return 0.0;
    double tau = t - r_ / 4;
    return c0_ + c1_ * tau + c2_ * tau * tau + c3_ * tau * tau * tau;
}

double cut_profile::d2(double t) const {
    if (t <= r_ / 4) return base_.d2(t);
    if (t >= r_ / 2) return 0.0;
    double tau = t - r_ / 4;
    return c1_ + 2 * c2_ * tau + 3 * c3_ * tau * tau;
}

std::string cut_profile::name() const { return "rcut(s=" + fmt(s_) + ",r=" + fmt(r_) + ")"; }

h_profile::h_profile(double r) : r_(r), base_(0.25, r) {}

double h_profile::value(double t) const { return 0.5 * t - base_.value(t); }
double h_profile::d1(double t) const { return 0.5 - base_.d1(t); }
double h_profile::d2(double t) const { return -base_.d2(t); }
std::string h_profile::name() const { return "h(r=" + fmt(r_) + ")"; }

namespace {

profile_check identity_check(const std::string& cond, double worst, double tol) {
    return profile_check{cond, worst <= tol, worst};
}

profile_check strict_check(const std::string& cond, double worst_margin, double required) {
    return profile_check{cond, worst_margin > required, worst_margin};
}

} // namespace

profile_report verify_cut_conditions(const cut_profile& p, int grid_points, double strict_margin) {
    double r = p.radius();
    rtilde_profile ref(p.s(), r);
    profile_report rep;

    // grid points straddling r/2 by less than half a spacing are skipped in the
    // strict-inequality sweep; the condition is open at r/2
    double buffer = 0.25 * r / grid_points;
    double agree = 0, plateau = 0, concave = 1e300, monotone = 1e300;
    double prev_d1 = p.d1(0.0);
    for (int i = 0; i <= grid_points; ++i) {
        double t = r * i / grid_points;
        if (t <= r / 4) agree = std::max(agree, std::abs(p.value(t) - ref.value(t)));
        if (t >= r / 2) plateau = std::max(plateau, std::abs(p.d1(t)));
        if (t < r / 2 - buffer) concave = std::min(concave, -p.d2(t));
        if (i > 0) {
            monotone = std::min(monotone, prev_d1 - p.d1(t));
            prev_d1 = p.d1(t);
        }
    }
    rep.checks.push_back(identity_check("rcut equals rtilde on [0, r/4]", agree, 1e-15));
    rep.checks.push_back(identity_check("rcut' vanishes on [r/2, r]", plateau, 0.0));
    rep.checks.push_back(strict_check("rcut'' < 0 on [0, r/2)", concave, strict_margin));
    rep.checks.push_back(
        profile_check{"rcut' non-increasing on [0, r]", monotone > -1e-15, monotone});
    rep.checks.push_back(verify_reflection(p, r / 16));
    return rep;
}

profile_report verify_h_conditions(const h_profile& p, int grid_points, double strict_margin) {
    double r = p.radius();
    profile_report rep;

    double buffer = 0.25 * r / grid_points;
    double plateau = 0, convex = 1e300, lo = 1e300, hi = -1e300;
    for (int i = 0; i <= grid_points; ++i) {
        double t = r * i / grid_points;
        if (t >= r / 2) plateau = std::max(plateau, std::abs(p.d1(t) - 0.5));
        if (t < r / 2 - buffer) convex = std::min(convex, p.d2(t));
        lo = std::min(lo, p.d1(t));
        hi = std::max(hi, p.d1(t));
    }
    rep.checks.push_back(identity_check("h'(0) = 0", std::abs(p.d1(0.0)), 0.0));
    rep.checks.push_back(identity_check("h' = 1/2 on [r/2, r]", plateau, 0.0));
    rep.checks.push_back(strict_check("h'' > 0 on [0, r/2)", convex, strict_margin));
    rep.checks.push_back(profile_check{"h' in [0, 1/2] with endpoints attained",
                                       lo >= 0.0 && hi <= 0.5 && lo == 0.0 && hi == 0.5,
                                       std::max(-lo, hi - 0.5)});
    rep.checks.push_back(verify_reflection(p, r / 16));
    return rep;
}

profile_check verify_reflection(const profile& p, double delta, int grid_points) {
    double worst = 0;
    for (int i = 1; i <= grid_points; ++i) {
        double t = delta * i / grid_points;
        worst = std::max(worst, p.reflection_defect(t));
    }
    return profile_check{"reflection identity for small |t|", worst <= 1e-12, worst};
}

cut_profile build_cut_profile(double s, double r) {
    if (s <= 0 || r <= 0) throw construction_error("cut profile requires s > 0 and r > 0");
    cut_profile p(s, r);
    profile_report rep = verify_cut_conditions(p);
    if (!rep.pass()) {
        for (const auto& c : rep.checks)
            if (!c.pass)
                throw construction_error("cut profile grid verification failed: " + c.condition);
    }
    return p;
}

h_profile build_h_profile(double r) {
    if (r <= 0) throw construction_error("h profile requires r > 0");
    h_profile p(r);
    profile_report rep = verify_h_conditions(p);
    if (!rep.pass()) {
        for (const auto& c : rep.checks)
            if (!c.pass)
                throw construction_error("h profile grid verification failed: " + c.condition);
    }
    return p;
}

} // namespace lf
