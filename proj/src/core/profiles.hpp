#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lf {

// Scalar reparameterization profiles for the twisting angle of the normalized
// geodesic flow. Three kinds are used:
//
//   rtilde(s):  R~_s(t) = t/2 - sqrt(t^2 + s^2/4)/2, the angle profile of the
//               uncut transport map on the quadric model
//   rcut(s,r):  equal to rtilde on [0, r/4], derivative identically 0 on
//               [r/2, r], concave blend in between
//   h(r):       h(t) = t/2 - R_{1/4}(t), the surgery flow profile
class profile {
  public:
    virtual ~profile() = default;
    virtual double value(double t) const = 0;
    virtual double d1(double t) const = 0;
    virtual double d2(double t) const = 0;
    virtual double radius() const = 0;
    virtual std::string name() const = 0;

    // residual of the reflection identity at small |t|. The transport-angle
    // profiles satisfy p(-t) = p(t) - t; subtracting them from t/2 flips the
    // identity, so the surgery profile is even: p(-t) = p(t). Either way the
    // derivative at 0+ extends to an odd function, which is what the smooth
    // continuation of the flows across the zero section uses.
    virtual double reflection_defect(double t) const {
        return std::abs(value(-t) - value(t) + t);
    }
};

class rtilde_profile final : public profile {
  public:
    rtilde_profile(double s, double r);
    double value(double t) const override;
    double d1(double t) const override;
    double d2(double t) const override;
    double radius() const override { return r_; }
    std::string name() const override;
    double s() const { return s_; }

  private:
    double s_, r_;
};

// Built by prescribing the derivative (rtilde' on [0,r/4], zero on [r/2,r],
// monotone cubic Hermite blend on [r/4,r/2]) and integrating; concavity on
// [0,r/2) is a property of the blend, verified on a grid at construction.
class cut_profile final : public profile {
  public:
    cut_profile(double s, double r);
    double value(double t) const override;
    double d1(double t) const override;
    double d2(double t) const override;
    double radius() const override { return r_; }
    std::string name() const override;
    double s() const { return s_; }

  private:
    double s_, r_;
    rtilde_profile base_;
    double c0_, c1_, c2_, c3_;  // blend cubic for d1 about t = r/4
    double v14_, v12_;          // values at r/4 and r/2
};

class h_profile final : public profile {
  public:
    explicit h_profile(double r);
    double value(double t) const override;
    double d1(double t) const override;
    double d2(double t) const override;
    double radius() const override { return r_; }
    std::string name() const override;
    double reflection_defect(double t) const override {
        return std::abs(value(-t) - value(t));  // even profile
    }

  private:
    double r_;
    cut_profile base_;
};

struct profile_check {
    std::string condition;
    bool pass = false;
    double margin = 0;  // worst slack for inequalities, worst residual for identities
};

struct profile_report {
    std::vector<profile_check> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Grid checks of every condition imposed on the cut profile / on h.
// grid_points counts subdivisions of [0, r]; strict inequalities must hold
// with margin > strict_margin at interior grid points.
profile_report verify_cut_conditions(const cut_profile& p, int grid_points = 10000,
                                     double strict_margin = 1e-10);
profile_report verify_h_conditions(const h_profile& p, int grid_points = 10000,
                                   double strict_margin = 1e-10);

// max |p(-t) - p(t) + t| over a grid of t in (0, delta]; exact for all three
// closed forms.
profile_check verify_reflection(const profile& p, double delta, int grid_points = 200);

// Throw construction_error unless all conditions verify.
cut_profile build_cut_profile(double s, double r);
h_profile build_h_profile(double r);

} // namespace lf
