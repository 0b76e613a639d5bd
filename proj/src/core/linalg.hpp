#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace lf {

using rvec = std::vector<double>;
using cplx = std::complex<double>;

inline double dot(const rvec& a, const rvec& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const rvec& a) { return std::sqrt(dot(a, a)); }

inline rvec scaled(const rvec& a, double c) {
    rvec r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline rvec sum(const rvec& a, const rvec& b) {
    rvec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline rvec diff(const rvec& a, const rvec& b) {
    rvec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline double max_abs_diff(const rvec& a, const rvec& b) {
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace lf
