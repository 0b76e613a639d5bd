#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "ode.hpp"
#include "path.hpp"
#include "profiles.hpp"
#include "rng.hpp"

namespace lf {

// Local quadric models q(z) = sum_j eps_j z_j^2 on C^{n+1}, their exact
// trivializations over the punctured disk, symplectic parallel transport
// (closed form and ODE), thimbles, and the real-locus checks.

// signs eps_j; all_plus is the reference model, every other signature is
// handled by pre-composing with the diagonal unitary alpha (z_j -> i z_j on
// negative slots), which maps the signed quadric onto the reference one.
class signature {
  public:
    explicit signature(std::vector<int> eps);
    static signature all_plus(int m);
    static signature all_minus(int m);
    // ceil(m/2) leading +1 entries, the rest -1 (the middle-index model)
    static signature middle(int m);

    int size() const { return static_cast<int>(eps_.size()); }
    int eps(int j) const { return eps_[static_cast<size_t>(j)]; }
    const std::vector<int>& entries() const { return eps_; }
    bool operator==(const signature& o) const { return eps_ == o.eps_; }

  private:
    std::vector<int> eps_;
};

// point z = x + iy of C^{n+1} together with the signature of its model
struct quadric_point {
    rvec x, y;
    signature sig;

    quadric_point(rvec x_, rvec y_, signature s);
    static quadric_point real(rvec x_, const signature& s);
    int dim() const { return static_cast<int>(x.size()); }
};

// unit base vector plus orthogonal covector; |u| = 1 and u.v = 0 are enforced
// by renormalization/projection at construction (inputs further than 1e-12
// from the constraint set are rejected)
struct cotangent {
    rvec u, v;

    cotangent(rvec u_, rvec v_);
    int dim() const { return static_cast<int>(u.size()); }
    double covector_norm() const { return norm(v); }
};

double distance(const cotangent& a, const cotangent& b);

cplx eval_quadric(const quadric_point& z);

// k(z) = |z|^4 - |q(z)|^2, clamped to 0 when rounding makes it barely negative
double eval_k(const quadric_point& z);

// normalized geodesic flow sigma_t; |v| is preserved; throws on v = 0
cotangent geodesic_flow(const cotangent& c, double t);

// fiber trivialization of q^{-1}(s), s >= 0, with the corrected covector slot
// (u, v) = (x/|x|, -y|x|); requires |q(z) - s| <= 1e-9 and x != 0 after the
// signature unitary
cotangent rho(const quadric_point& z, double s);
quadric_point rho_inverse(const cotangent& c, double s, const signature& sig);

// full trivialization over the punctured disk; returns ((u,v), q(z));
// requires k(z) > 1e-12
std::pair<cotangent, cplx> trivialize(const quadric_point& z);
quadric_point untrivialize(const cotangent& c, cplx w, const signature& sig);

// sqrt(w) * u on the principal branch; a point of the w-fiber sphere
quadric_point thimble_point(cplx w, const rvec& u, const signature& sig);

// transport from the fiber over s to the fiber over s e^{i theta} in
// trivialized coordinates: sigma_{theta * profile'(|v|)}; v = 0 is fixed
cotangent transport_closed_form(const cotangent& c, double s, double theta, const profile& p);

struct transport_result {
    quadric_point z;
    double k_drift = 0;         // max |k(z(t)) - k(z(0))| over accepted steps
    double fiber_residual = 0;  // max |q(z(t)) - path(t)|
    long steps = 0;
    long rejected = 0;
};

// symplectic parallel transport: the horizontal lift dz/dt = gamma'(t) *
// (eps_j conj(z_j)) / (2 |z|^2), integrated with the adaptive embedded pair
transport_result transport_ode(const quadric_point& z0, const base_path& path, double tol);

struct check_report {
    std::string name;
    bool pass = false;
    double residual = 0;
    double tolerance = 0;
    std::string detail;
};

// trivialize vs (radial transport to the zero fiber, then rho_0)
check_report radial_factorization_check(const quadric_point& z, double tol);

// finite-difference test of rho_s^*(-sum u_j dv_j) = sum x_j dy_j on random
// fiber-tangent directions; corrected = false evaluates the (x/|x|, -y|y|)
// variant, kept as a regression fixture
check_report rho_exactness_check(int n, double s, int samples, double tol, bool corrected,
                                 std::uint64_t seed);

struct real_transport_report {
    check_report stays_real;
    check_report matches_gradient_flow;
    check_report conjugation_equivariance;
    bool pass() const {
        return stays_real.pass && matches_gradient_flow.pass && conjugation_equivariance.pass;
    }
};

// transport of a real point along a real segment [a, b]: the trajectory must
// stay real and match the gradient flow of f = q restricted to the real
// locus, integrated independently from grad f and parameterized by the value
// of f
real_transport_report real_transport_check(const quadric_point& z0, double a, double b,
                                           double tol_real, double tol_grad, double tol_conj,
                                           double ode_tol = 1e-10);

// residual of iota(transport(z)) = transport_conj_path(iota(z)), iota = conj
double conjugation_equivariance_residual(const quadric_point& z0, const base_path& path,
                                         double ode_tol = 1e-10);

// real points of the middle model with q in [-1/2, 1/2] and k in
// [4(r/2)^2, 4r^2] must trivialize into the conormal pattern (u supported on
// the leading block, v on the trailing block)
check_report real_collar_check(int samples, double r, double tol, std::uint64_t seed);

// helpers for building sample grids
cotangent random_cotangent(splitmix64& rng, int m, double vmin, double vmax);

} // namespace lf
