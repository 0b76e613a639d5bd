#pragma once

#include <vector>

#include "profiles.hpp"
#include "quadric.hpp"
#include "rng.hpp"

namespace lf {

// The surgery flow on the disk cotangent model: F(u,v) = sigma_{pi h'(|v|)},
// the bent handle T it produces from the conormal of the leading subsphere,
// the overlap identity with the trailing conormal, and exactness bookkeeping.

// split of R^{n+1} coordinates into a leading block (first k+1 slots,
// carrying K+ = S^k) and a trailing block (carrying K- = S^{n-k-1})
struct subsphere_frame {
    int n;  // sphere dimension of the model T*S^n
    int k;  // 0 <= k <= n-1

    subsphere_frame(int n_, int k_);
    int dim() const { return n + 1; }
    int leading() const { return k + 1; }

    // coordinate-pattern membership tests
    bool in_conormal_plus(const cotangent& c, double tol) const;
    bool in_conormal_minus(const cotangent& c, double tol) const;
    double conormal_minus_defect(const cotangent& c) const;

    cotangent sample_conormal_plus(splitmix64& rng, double vmin, double vmax) const;
    cotangent sample_conormal_minus(splitmix64& rng, double vmin, double vmax) const;
};

// sigma_{h'(|v|) pi}; the zero section is fixed pointwise (h'(0) = 0)
cotangent surgery_map(const cotangent& c, const profile& h);

// two-sided test of  T ∩ D_r(nu* K-) = D_{[r/2, r]}(nu* K-)
check_report overlap_check(const subsphere_frame& frame, const profile& h, int samples,
                           std::uint64_t seed);

// finite-difference smoothness of the extension of the surgery flow across
// the zero section, along transversal lines; Richardson ratios of the first
// and second central differences must sit near the order-2 value 4
struct smooth_extension_line {
    std::string description;
    double ratio_d1 = 0;
    double ratio_d2 = 0;
    bool pass = false;
};
struct smooth_extension_report {
    std::vector<smooth_extension_line> lines;
    bool pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return !lines.empty();
    }
};
smooth_extension_report smooth_extension_check(const profile& h, int n,
                                               const std::vector<double>& eps_grid);

// trapezoidal line integral of the canonical one-form (v . du) around a
// sampled closed loop; throws unless the loop closes within 1e-9
double exactness_integral(const std::vector<cotangent>& loop);

} // namespace lf
