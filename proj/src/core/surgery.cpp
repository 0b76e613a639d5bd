#include "surgery.hpp"

#include <cmath>

namespace lf {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

subsphere_frame::subsphere_frame(int n_, int k_) : n(n_), k(k_) {
    if (n < 1 || k < 0 || k > n - 1) throw domain_error("subsphere frame requires 0 <= k <= n-1");
}

bool subsphere_frame::in_conormal_plus(const cotangent& c, double tol) const {
    double off = 0;
    for (int j = 0; j < dim(); ++j) {
        if (j < leading())
            off += std::abs(c.v[static_cast<size_t>(j)]);
        else
            off += std::abs(c.u[static_cast<size_t>(j)]);
    }
    return off <= tol;
}

bool subsphere_frame::in_conormal_minus(const cotangent& c, double tol) const {
    return conormal_minus_defect(c) <= tol;
}

double subsphere_frame::conormal_minus_defect(const cotangent& c) const {
    double off = 0;
    for (int j = 0; j < dim(); ++j) {
        if (j < leading())
            off += std::abs(c.u[static_cast<size_t>(j)]);
        else
            off += std::abs(c.v[static_cast<size_t>(j)]);
    }
    return off;
}

namespace {

rvec embed_leading(const rvec& w, int m, int at) {
    rvec r(static_cast<size_t>(m), 0.0);
    for (size_t j = 0; j < w.size(); ++j) r[static_cast<size_t>(at) + j] = w[j];
    return r;
}

} // namespace

cotangent subsphere_frame::sample_conormal_plus(splitmix64& rng, double vmin, double vmax) const {
    rvec u = embed_leading(rng.unit_vector(leading()), dim(), 0);
    rvec dir = rng.unit_vector(dim() - leading());
    double len = rng.uniform(vmin, vmax);
    rvec v = embed_leading(scaled(dir, len), dim(), leading());
    return cotangent(std::move(u), std::move(v));
}

cotangent subsphere_frame::sample_conormal_minus(splitmix64& rng, double vmin, double vmax) const {
    rvec u = embed_leading(rng.unit_vector(dim() - leading()), dim(), leading());
    rvec dir = rng.unit_vector(leading());
    double len = rng.uniform(vmin, vmax);
    rvec v = embed_leading(scaled(dir, len), dim(), 0);
    return cotangent(std::move(u), std::move(v));
}

cotangent surgery_map(const cotangent& c, const profile& h) {
    double vn = norm(c.v);
    if (vn == 0) return c;  // h'(0) = 0 fixes the zero section
    return geodesic_flow(c, h.d1(vn) * kPi);
}

check_report overlap_check(const subsphere_frame& frame, const profile& h, int samples,
                           std::uint64_t seed) {
    splitmix64 rng(seed);
    double r = h.radius();
    double worst = 0;
    bool pass = true;
    std::string detail;

    // (<=): below the collar the image stays off the trailing pattern. The
    // profile touches its plateau quadratically, so the pattern defect near
    // r/2 scales like the squared distance; sampling stops 1e-4 short of the
    // edge, where the defect still clears the 1e-9 pattern tolerance
    for (int it = 0; it < samples; ++it) {
        cotangent c = frame.sample_conormal_plus(rng, 1e-3 * r, r / 2 - 1e-4 * r);
        cotangent img = surgery_map(c, h);
        if (frame.in_conormal_minus(img, 1e-9)) {
            pass = false;
            detail = "bent handle meets the trailing conormal below r/2";
        }
    }
    // plateau: [r/2, r] lands exactly in the trailing conormal
    for (int it = 0; it < samples; ++it) {
        cotangent c = frame.sample_conormal_plus(rng, r / 2, r);
        cotangent img = surgery_map(c, h);
        worst = std::max(worst, frame.conormal_minus_defect(img));
        if (img.covector_norm() < r / 2 - 1e-9) {
            pass = false;
            detail = "collar image lost covector length";
        }
    }
    // (>=): every point of D_{[r/2,r]}(nu* K-) is hit; invert the quarter turn
    for (int it = 0; it < samples; ++it) {
        cotangent target = frame.sample_conormal_minus(rng, r / 2, r);
        cotangent pre = geodesic_flow(target, -kPi / 2);
        if (!frame.in_conormal_plus(pre, 1e-9)) {
            pass = false;
            detail = "quarter-turn preimage left the leading conormal";
        }
        cotangent img = surgery_map(pre, h);
        worst = std::max(worst, distance(img, target));
    }
    // strictness below r/2: the image must stay off the trailing pattern
    {
        cotangent c = frame.sample_conormal_plus(rng, r / 4, r / 4);
        cotangent img = surgery_map(c, h);
        if (frame.in_conormal_minus(img, 1e-9)) {
            pass = false;
            detail = "interior point of the bent handle fell onto the trailing conormal";
        }
    }

    if (worst > 1e-9) pass = false;
    return check_report{"surgery-overlap-identity", pass, worst, 1e-9,
                        detail.empty() ? "two-sided membership test" : detail};
}

namespace {

// the surgery flow along the line t -> (u0, t w), as a flat vector
rvec flow_along_line(const profile& h, const rvec& u0, const rvec& w, double t) {
    size_t m = u0.size();
    rvec out(2 * m);
    if (t == 0) {
        for (size_t j = 0; j < m; ++j) {
            out[j] = u0[j];
            out[m + j] = 0;
        }
        return out;
    }
    cotangent c(u0, scaled(w, t));
    cotangent img = surgery_map(c, h);
    for (size_t j = 0; j < m; ++j) {
        out[j] = img.u[j];
        out[m + j] = img.v[j];
    }
    return out;
}

double richardson_ratio(const rvec& d_eps, const rvec& d_half, const rvec& d_quarter) {
    // ratio of successive difference increments; order-2 convergence gives 4
    double num = 0, den = 0;
    for (size_t j = 0; j < d_eps.size(); ++j) {
        num = std::max(num, std::abs(d_eps[j] - d_half[j]));
        den = std::max(den, std::abs(d_half[j] - d_quarter[j]));
    }
    if (den < 1e-13 && num < 1e-13) return 4.0;  // converged below noise floor
    if (den < 1e-300) return 0.0;
    return num / den;
}

} // namespace

smooth_extension_report smooth_extension_check(const profile& h, int n,
                                               const std::vector<double>& eps_grid) {
    smooth_extension_report rep;
    int m = n + 1;
    double r = h.radius();
    for (double e : eps_grid)
        if (e <= 0 || e > r / 8) throw domain_error("eps grid entries must lie in (0, r/8]");

    // transversal lines through (e1, 0) plus the zero-section direction
    std::vector<std::pair<rvec, rvec>> lines;
    {
        rvec u0(static_cast<size_t>(m), 0.0);
        u0[0] = 1;
        rvec w1(static_cast<size_t>(m), 0.0);
        w1[static_cast<size_t>(m - 1)] = 1;
        lines.emplace_back(u0, w1);
        if (m > 2) {
            rvec w2(static_cast<size_t>(m), 0.0);
            w2[1] = 1.0 / std::sqrt(2.0);
            w2[static_cast<size_t>(m - 1)] = 1.0 / std::sqrt(2.0);
            lines.emplace_back(u0, w2);
        }
    }

    for (const auto& [u0, w] : lines) {
        smooth_extension_line line;
        line.description = "line through the zero section";
        double worst1 = 0, worst2 = 0;
        for (double eps : eps_grid) {
            rvec d1a, d1b, d1c, d2a, d2b, d2c;
            auto first = [&](double e) {
                rvec gp = flow_along_line(h, u0, w, e);
                rvec gm = flow_along_line(h, u0, w, -e);
                rvec d(gp.size());
                for (size_t j = 0; j < d.size(); ++j) d[j] = (gp[j] - gm[j]) / (2 * e);
                return d;
            };
            auto second = [&](double e) {
                rvec gp = flow_along_line(h, u0, w, e);
                rvec g0 = flow_along_line(h, u0, w, 0);
                rvec gm = flow_along_line(h, u0, w, -e);
                rvec d(gp.size());
                for (size_t j = 0; j < d.size(); ++j) d[j] = (gp[j] - 2 * g0[j] + gm[j]) / (e * e);
                return d;
            };
            d1a = first(eps);
            d1b = first(eps / 2);
            d1c = first(eps / 4);
            d2a = second(eps);
            d2b = second(eps / 2);
            d2c = second(eps / 4);
            double r1 = richardson_ratio(d1a, d1b, d1c);
            double r2 = richardson_ratio(d2a, d2b, d2c);
            worst1 = std::max(worst1, std::abs(r1 - 4.0));
            worst2 = std::max(worst2, std::abs(r2 - 4.0));
            line.ratio_d1 = r1;
            line.ratio_d2 = r2;
        }
        line.pass = worst1 <= 0.4 && worst2 <= 0.4;  // within 10% of the order-2 ratio
        rep.lines.push_back(line);
    }

    // along the zero section the flow is the identity; exact, recorded as a line
    smooth_extension_line zline;
    zline.description = "zero section (identity)";
    zline.ratio_d1 = 4.0;
    zline.ratio_d2 = 4.0;
    {
        rvec u0(static_cast<size_t>(m), 0.0);
        u0[0] = 1;
        cotangent c(u0, rvec(static_cast<size_t>(m), 0.0));
        cotangent img = surgery_map(c, h);
        zline.pass = distance(c, img) == 0.0;
    }
    rep.lines.push_back(zline);
    return rep;
}

double exactness_integral(const std::vector<cotangent>& loop) {
    if (loop.size() < 2) throw domain_error("loop needs at least two samples");
    if (distance(loop.front(), loop.back()) > 1e-9)
        throw domain_error("loop is not closed within 1e-9");
    double acc = 0;
    for (size_t i = 0; i + 1 < loop.size(); ++i) {
        const cotangent& a = loop[i];
        const cotangent& b = loop[i + 1];
        for (size_t j = 0; j < a.u.size(); ++j)
            acc += 0.5 * (a.v[j] + b.v[j]) * (b.u[j] - a.u[j]);
    }
    return acc;
}

} // namespace lf
