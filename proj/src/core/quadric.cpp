#include "quadric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lf {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

signature::signature(std::vector<int> eps) : eps_(std::move(eps)) {
    if (eps_.size() < 2) throw domain_error("signature needs n >= 1");
    for (int e : eps_)
        if (e != 1 && e != -1) throw domain_error("signature entries must be +1 or -1");
}

signature signature::all_plus(int m) { return signature(std::vector<int>(static_cast<size_t>(m), 1)); }
signature signature::all_minus(int m) { return signature(std::vector<int>(static_cast<size_t>(m), -1)); }

signature signature::middle(int m) {
    std::vector<int> e(static_cast<size_t>(m), -1);
    int plus = (m + 1) / 2;
    for (int j = 0; j < plus; ++j) e[static_cast<size_t>(j)] = 1;
    return signature(e);
}

quadric_point::quadric_point(rvec x_, rvec y_, signature s)
    : x(std::move(x_)), y(std::move(y_)), sig(std::move(s)) {
    if (x.size() != y.size() || static_cast<int>(x.size()) != sig.size())
        throw domain_error("quadric point component mismatch");
}

quadric_point quadric_point::real(rvec x_, const signature& s) {
    rvec y_(x_.size(), 0.0);
    return quadric_point(std::move(x_), std::move(y_), s);
}

// invariants are enforced by renormalizing u and projecting v; inputs far off
// the constraint set are rejected rather than silently repaired
cotangent::cotangent(rvec u_, rvec v_) : u(std::move(u_)), v(std::move(v_)) {
    if (u.size() != v.size() || u.size() < 2) throw domain_error("cotangent component mismatch");
    double un = norm(u);
    if (std::abs(un - 1.0) > 1e-6)
        throw domain_error("cotangent base vector is far from unit length");
    for (auto& c : u) c /= un;
    double p = dot(u, v);
    if (std::abs(p) > 1e-6 * std::max(1.0, norm(v)))
        throw domain_error("cotangent covector is far from orthogonal to the base");
    for (size_t j = 0; j < v.size(); ++j) v[j] -= p * u[j];
}

double distance(const cotangent& a, const cotangent& b) {
    return norm(diff(a.u, b.u)) + norm(diff(a.v, b.v));
}

namespace {

// apply the signature unitary: z_j -> i z_j on negative slots, so that the
// image satisfies the all-plus quadric
void apply_alpha(const quadric_point& z, rvec& x, rvec& y) {
    size_t m = z.x.size();
    x.resize(m);
    y.resize(m);
    for (size_t j = 0; j < m; ++j) {
        if (z.sig.eps(static_cast<int>(j)) > 0) {
            x[j] = z.x[j];
            y[j] = z.y[j];
        } else {
            x[j] = -z.y[j];
            y[j] = z.x[j];
        }
    }
}

quadric_point apply_alpha_inverse(const rvec& x, const rvec& y, const signature& sig) {
    size_t m = x.size();
    rvec zx(m), zy(m);
    for (size_t j = 0; j < m; ++j) {
        if (sig.eps(static_cast<int>(j)) > 0) {
            zx[j] = x[j];
            zy[j] = y[j];
        } else {
            zx[j] = y[j];
            zy[j] = -x[j];
        }
    }
    return quadric_point(std::move(zx), std::move(zy), sig);
}

// rho on the all-plus model with separated components
cotangent rho_plus(const rvec& x, const rvec& y) {
    double xn = norm(x);
    if (xn < 1e-12) throw domain_error("rho undefined: real part vanishes");
    size_t m = x.size();
    rvec u(m), v(m);
    for (size_t j = 0; j < m; ++j) {
        u[j] = x[j] / xn;
        v[j] = -y[j] * xn;
    }
    return cotangent(std::move(u), std::move(v));
}

cplx quadric_plus(const rvec& x, const rvec& y) {
    cplx s = 0;
    for (size_t j = 0; j < x.size(); ++j) {
        cplx zj(x[j], y[j]);
        s += zj * zj;
    }
    return s;
}

void rotate(rvec& x, rvec& y, cplx phase) {
    for (size_t j = 0; j < x.size(); ++j) {
        cplx w = phase * cplx(x[j], y[j]);
        x[j] = w.real();
        y[j] = w.imag();
    }
}

} // namespace

cplx eval_quadric(const quadric_point& z) {
    cplx s = 0;
    for (size_t j = 0; j < z.x.size(); ++j) {
        cplx zj(z.x[j], z.y[j]);
        s += double(z.sig.eps(static_cast<int>(j))) * zj * zj;
    }
    return s;
}

double eval_k(const quadric_point& z) {
    double n2 = dot(z.x, z.x) + dot(z.y, z.y);
    double k = n2 * n2 - std::norm(eval_quadric(z));
    // k >= 0 identically; rounding may produce a tiny negative value
    return k < 0 ? 0.0 : k;
}

cotangent geodesic_flow(const cotangent& c, double t) {
    double vn = norm(c.v);
    if (vn == 0) throw domain_error("geodesic flow undefined on the zero section");
    size_t m = c.u.size();
    rvec u(m), v(m);
    double ct = std::cos(t), st = std::sin(t);
    for (size_t j = 0; j < m; ++j) {
        double vh = c.v[j] / vn;
        u[j] = ct * c.u[j] + st * vh;
        v[j] = vn * (ct * vh - st * c.u[j]);
    }
    return cotangent(std::move(u), std::move(v));
}

cotangent rho(const quadric_point& z, double s) {
    if (s < 0) throw domain_error("rho requires s >= 0");
    cplx q = eval_quadric(z);
    if (std::abs(q - cplx(s, 0)) > 1e-9)
        throw domain_error("rho: point is not on the stated fiber (|q - s| = " +
                           fmt(std::abs(q - cplx(s, 0))) + ")");
    rvec x, y;
    apply_alpha(z, x, y);
    return rho_plus(x, y);
}

quadric_point rho_inverse(const cotangent& c, double s, const signature& sig) {
    if (s < 0) throw domain_error("rho_inverse requires s >= 0");
    double vn = norm(c.v);
    if (s == 0 && vn == 0) throw domain_error("rho_inverse undefined at the critical point");
    double xn2 = 0.5 * (s + std::sqrt(s * s + 4 * vn * vn));
    double xn = std::sqrt(xn2);
    size_t m = c.u.size();
    rvec x(m), y(m);
    for (size_t j = 0; j < m; ++j) {
        x[j] = xn * c.u[j];
        y[j] = -c.v[j] / xn;
    }
    return apply_alpha_inverse(x, y, sig);
}

std::pair<cotangent, cplx> trivialize(const quadric_point& z) {
    double k = eval_k(z);
    if (k <= 1e-12) throw domain_error("trivialize undefined on the thimble locus (k <= 1e-12)");
    rvec x, y;
    apply_alpha(z, x, y);
    cplx w = quadric_plus(x, y);
    double s = std::abs(w);
    if (s == 0) return {rho_plus(x, y), eval_quadric(z)};
    double theta = std::atan2(w.imag(), w.real());
    rotate(x, y, std::polar(1.0, -theta / 2));
    return {geodesic_flow(rho_plus(x, y), theta / 2), eval_quadric(z)};
}

quadric_point untrivialize(const cotangent& c, cplx w, const signature& sig) {
    double vn = norm(c.v);
    if (vn == 0) throw domain_error("untrivialize undefined on the zero section");
    double s = std::abs(w);
    double theta = (s == 0) ? 0.0 : std::atan2(w.imag(), w.real());
    cotangent back = (theta == 0.0) ? c : geodesic_flow(c, -theta / 2);
    quadric_point plus = rho_inverse(back, s, signature::all_plus(static_cast<int>(c.u.size())));
    rotate(plus.x, plus.y, std::polar(1.0, theta / 2));
    return apply_alpha_inverse(plus.x, plus.y, sig);
}

quadric_point thimble_point(cplx w, const rvec& u, const signature& sig) {
    // principal branch; normalize -0.0 so the cut maps deterministically
    cplx wn(w.real(), w.imag() == 0.0 ? 0.0 : w.imag());
    cplx root = std::sqrt(wn);
    size_t m = u.size();
    rvec x(m), y(m);
    for (size_t j = 0; j < m; ++j) {
        x[j] = root.real() * u[j];
        y[j] = root.imag() * u[j];
    }
    return apply_alpha_inverse(x, y, sig);
}

cotangent transport_closed_form(const cotangent& c, double s, double theta, const profile& p) {
    if (s <= 0) throw domain_error("transport requires s > 0");
    double vn = norm(c.v);
    if (vn == 0) return c;  // fixed point: the rotation angle limit is finite
    return geodesic_flow(c, theta * p.d1(vn));
}

transport_result transport_ode(const quadric_point& z0, const base_path& path, double tol) {
    if (path.empty()) throw domain_error("transport along an empty path");
    cplx q0 = eval_quadric(z0);
    if (std::abs(q0 - path.start()) > 1e-9)
        throw domain_error("transport: point is not on the fiber over the path start");

    size_t m = z0.x.size();
    rvec y(2 * m);
    for (size_t j = 0; j < m; ++j) {
        y[j] = z0.x[j];
        y[m + j] = z0.y[j];
    }

    transport_result out{z0, 0, 0, 0, 0};
    double k0 = eval_k(z0);
    const signature& sig = z0.sig;

    for (const auto& seg : path.segments()) {
        ode_rhs rhs = [&](double t, const rvec& state, rvec& d) {
            cplx gp = seg.deriv(t);
            double n2 = 0;
            for (size_t j = 0; j < 2 * m; ++j) n2 += state[j] * state[j];
            if (n2 < 1e-300) throw integration_error("trajectory reached the critical point");
            cplx cfac = gp / (2 * n2);
            for (size_t j = 0; j < m; ++j) {
                double e = sig.eps(static_cast<int>(j));
                // d z_j = cfac * eps_j * conj(z_j)
                d[j] = e * (cfac.real() * state[j] + cfac.imag() * state[m + j]);
                d[m + j] = e * (cfac.imag() * state[j] - cfac.real() * state[m + j]);
            }
        };
        ode_observer obs = [&](double t, const rvec& state) {
            rvec xs(state.begin(), state.begin() + static_cast<long>(m));
            rvec ys(state.begin() + static_cast<long>(m), state.end());
            quadric_point zt(xs, ys, sig);
            out.k_drift = std::max(out.k_drift, std::abs(eval_k(zt) - k0));
            out.fiber_residual =
                std::max(out.fiber_residual, std::abs(eval_quadric(zt) - seg.at(t)));
        };
        rk45_options opt;
        opt.tol = tol;
        rk45_stats st = rk45_integrate(rhs, y, 0.0, 1.0, opt, obs);
        out.steps += st.accepted;
        out.rejected += st.rejected;
    }

    rvec xs(y.begin(), y.begin() + static_cast<long>(m));
    rvec ys(y.begin() + static_cast<long>(m), y.end());
    out.z = quadric_point(std::move(xs), std::move(ys), sig);
    return out;
}

check_report radial_factorization_check(const quadric_point& z, double tol) {
    cplx w = eval_quadric(z);
    if (std::abs(w) < 1e-9) throw domain_error("radial factorization needs q(z) != 0");
    if (eval_k(z) <= 1e-12) throw domain_error("radial factorization needs k(z) > 0");

    auto [direct, wq] = trivialize(z);
    transport_result tr = transport_ode(z, base_path::segment(w, cplx(0, 0)), 1e-11);
    cotangent via_radial = rho(tr.z, 0.0);

    double dev = distance(direct, via_radial);
    return check_report{"radial-factorization", dev < tol, dev, tol,
                        "trivialization vs radial transport followed by the zero-fiber chart"};
}

check_report rho_exactness_check(int n, double s, int samples, double tol, bool corrected,
                                 std::uint64_t seed) {
    splitmix64 rng(seed);
    int m = n + 1;
    signature sig = signature::all_plus(m);
    double worst = 0;

    for (int it = 0; it < samples; ++it) {
        cotangent c = random_cotangent(rng, m, 0.05, 1.0);
        quadric_point z = untrivialize(c, cplx(s, 0), sig);

        // random tangent of the fiber: project h so that Dq(h) = 0
        rvec hx(static_cast<size_t>(m)), hy(static_cast<size_t>(m));
        for (auto& a : hx) a = rng.uniform(-1, 1);
        for (auto& a : hy) a = rng.uniform(-1, 1);
        cplx dq = 0;
        for (int j = 0; j < m; ++j)
            dq += 2.0 * cplx(z.x[static_cast<size_t>(j)], z.y[static_cast<size_t>(j)]) *
                  cplx(hx[static_cast<size_t>(j)], hy[static_cast<size_t>(j)]);
        double n2 = dot(z.x, z.x) + dot(z.y, z.y);
        cplx corr = dq / (2 * n2);
        for (int j = 0; j < m; ++j) {
            cplx adj = corr * cplx(z.x[static_cast<size_t>(j)], -z.y[static_cast<size_t>(j)]);
            hx[static_cast<size_t>(j)] -= adj.real();
            hy[static_cast<size_t>(j)] -= adj.imag();
        }
        double hn = std::sqrt(dot(hx, hx) + dot(hy, hy));
        if (hn < 1e-6) continue;

        // one Newton step back onto the fiber; the defect is quadratic in the
        // step size
        auto project = [&](quadric_point zz) {
            for (int it2 = 0; it2 < 3; ++it2) {
                cplx r = eval_quadric(zz) - cplx(s, 0);
                double nn = dot(zz.x, zz.x) + dot(zz.y, zz.y);
                cplx step = r / (2 * nn);
                for (int j = 0; j < m; ++j) {
                    cplx d = step * cplx(zz.x[static_cast<size_t>(j)], -zz.y[static_cast<size_t>(j)]);
                    zz.x[static_cast<size_t>(j)] -= d.real();
                    zz.y[static_cast<size_t>(j)] -= d.imag();
                }
            }
            return zz;
        };
        auto rho_variant = [&](const quadric_point& zz) {
            double xn = norm(zz.x);
            double yn = norm(zz.y);
            size_t mm = zz.x.size();
            rvec u(mm), v(mm);
            for (size_t j = 0; j < mm; ++j) {
                u[j] = zz.x[j] / xn;
                v[j] = -zz.y[j] * (corrected ? xn : yn);
            }
            return std::pair<rvec, rvec>(std::move(u), std::move(v));
        };

        double step = 1e-5;
        quadric_point zp = z, zm = z;
        for (int j = 0; j < m; ++j) {
            zp.x[static_cast<size_t>(j)] += step * hx[static_cast<size_t>(j)];
            zp.y[static_cast<size_t>(j)] += step * hy[static_cast<size_t>(j)];
            zm.x[static_cast<size_t>(j)] -= step * hx[static_cast<size_t>(j)];
            zm.y[static_cast<size_t>(j)] -= step * hy[static_cast<size_t>(j)];
        }
        zp = project(zp);
        zm = project(zm);
        auto [up, vp] = rho_variant(zp);
        auto [um, vm] = rho_variant(zm);
        auto [u0, v0] = rho_variant(z);

        double lhs = 0;  // (-sum u_j dv_j) pulled back, on h
        for (int j = 0; j < m; ++j)
            lhs += -u0[static_cast<size_t>(j)] *
                   (vp[static_cast<size_t>(j)] - vm[static_cast<size_t>(j)]) / (2 * step);
        double rhs = 0;  // (sum x_j dy_j)(h)
        for (int j = 0; j < m; ++j)
            rhs += z.x[static_cast<size_t>(j)] * hy[static_cast<size_t>(j)];
        worst = std::max(worst, std::abs(lhs - rhs) / hn);
    }

    std::string name = corrected ? "rho-exactness" : "rho-printed-variant";
    bool pass = corrected ? (worst < tol) : (worst > tol);
    return check_report{name, pass, worst, tol,
                        corrected ? "corrected covector slot -y|x|" : "covector slot -y|y|"};
}

real_transport_report real_transport_check(const quadric_point& z0, double a, double b,
                                           double tol_real, double tol_grad, double tol_conj,
                                           double ode_tol) {
    if (norm(z0.y) > 1e-12) throw domain_error("real transport check needs a real point");
    if (std::abs(eval_quadric(z0).real() - a) > 1e-9)
        throw domain_error("real transport check: q(z0) != a");

    int m = z0.dim();
    const signature& sig = z0.sig;

    // gradient of f = q|_R and the value-parameterized flow dx/df = g/|g|^2
    auto grad = [&](const rvec& x) {
        rvec g(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j)
            g[static_cast<size_t>(j)] = 2.0 * sig.eps(j) * x[static_cast<size_t>(j)];
        return g;
    };

    const int checkpoints = 20;
    rvec x_transport = z0.x;
    rvec y_imag(static_cast<size_t>(m), 0.0);
    rvec x_grad = z0.x;
    double max_imag = 0, max_dev = 0;

    quadric_point zc = z0;
    for (int c = 0; c < checkpoints; ++c) {
        double f0 = a + (b - a) * c / checkpoints;
        double f1 = a + (b - a) * (c + 1) / checkpoints;

        transport_result tr = transport_ode(zc, base_path::segment(cplx(f0, 0), cplx(f1, 0)), ode_tol);
        zc = tr.z;
        max_imag = std::max(max_imag, norm(zc.y));

        ode_rhs rhs = [&](double, const rvec& x, rvec& d) {
            rvec g = grad(x);
            double g2 = dot(g, g);
            if (g2 < 1e-300) throw integration_error("gradient vanished along the real flow");
            for (int j = 0; j < m; ++j) d[static_cast<size_t>(j)] = g[static_cast<size_t>(j)] / g2;
        };
        rk45_options opt;
        opt.tol = ode_tol;
        rk45_integrate(rhs, x_grad, f0, f1, opt);

        max_dev = std::max(max_dev, max_abs_diff(zc.x, x_grad));
    }

    // equivariance on a genuinely complex detour: perturb off the real locus
    // and transport along the lower half circle vs the conjugated path
    quadric_point zpert = z0;
    for (int j = 0; j < m; ++j) zpert.y[static_cast<size_t>(j)] = 0.05 * (j % 2 ? -1 : 1);
    double conj_res = 0;
    {
        cplx w = eval_quadric(zpert);
        base_path detour(path_segment::arc(w - cplx(std::abs(w) * 0.25, 0), std::abs(w) * 0.25,
                                           0.0, -kPi));
        conj_res = conjugation_equivariance_residual(zpert, detour, ode_tol);
    }

    real_transport_report rep;
    rep.stays_real = {"real-locus-invariance", max_imag < tol_real, max_imag, tol_real,
                      "max |Im z| along the transported trajectory"};
    rep.matches_gradient_flow = {"gradient-flow-match", max_dev < tol_grad, max_dev, tol_grad,
                                 "sup distance to the value-parameterized gradient flow"};
    rep.conjugation_equivariance = {"conjugation-equivariance", conj_res < tol_conj, conj_res,
                                    tol_conj, "conj(transport) vs transport along conj path"};
    return rep;
}

double conjugation_equivariance_residual(const quadric_point& z0, const base_path& path,
                                         double ode_tol) {
    transport_result fwd = transport_ode(z0, path, ode_tol);
    quadric_point conj0(z0.x, scaled(z0.y, -1.0), z0.sig);
    transport_result bwd = transport_ode(conj0, path.conjugated(), ode_tol);
    return max_abs_diff(fwd.z.x, bwd.z.x) + max_abs_diff(scaled(fwd.z.y, -1.0), bwd.z.y);
}

check_report real_collar_check(int samples, double r, double tol, std::uint64_t seed) {
    splitmix64 rng(seed);
    signature sig = signature::middle(4);  // (+, +, -, -)
    double worst = 0;

    for (int it = 0; it < samples; ++it) {
        double qv = rng.uniform(-0.5, 0.5);
        double kv = rng.uniform(4 * (r / 2) * (r / 2), 4 * r * r);
        // real z = (A c1, A s1, B c2, B s2): q = A^2 - B^2, k = 4 A^2 B^2
        double A2 = 0.5 * (qv + std::sqrt(qv * qv + kv));
        double B2 = A2 - qv;
        double A = std::sqrt(A2), B = std::sqrt(B2);
        double t1 = rng.uniform(0, 2 * kPi), t2 = rng.uniform(0, 2 * kPi);
        rvec x = {A * std::cos(t1), A * std::sin(t1), B * std::cos(t2), B * std::sin(t2)};
        quadric_point z = quadric_point::real(x, sig);

        if (std::abs(eval_quadric(z).real() - qv) > 1e-9 || std::abs(eval_k(z) - kv) > 1e-6)
            throw error("collar sampler inconsistency");

        auto [c, w] = trivialize(z);
        double off = std::abs(c.u[2]) + std::abs(c.u[3]) + std::abs(c.v[0]) + std::abs(c.v[1]);
        worst = std::max(worst, off);
    }
    return check_report{"real-collar-conormal-pattern", worst < tol, worst, tol,
                        "real collar points land in the leading/trailing block pattern"};
}

cotangent random_cotangent(splitmix64& rng, int m, double vmin, double vmax) {
    rvec u = rng.unit_vector(m);
    rvec w = rng.unit_vector(m);
    double p = dot(u, w);
    for (int j = 0; j < m; ++j) w[static_cast<size_t>(j)] -= p * u[static_cast<size_t>(j)];
    double wn = norm(w);
    while (wn < 1e-6) {
        w = rng.unit_vector(m);
        p = dot(u, w);
        for (int j = 0; j < m; ++j) w[static_cast<size_t>(j)] -= p * u[static_cast<size_t>(j)];
        wn = norm(w);
    }
    double target = rng.uniform(vmin, vmax);
    for (auto& c : w) c *= target / wn;
    return cotangent(std::move(u), std::move(w));
}

} // namespace lf
