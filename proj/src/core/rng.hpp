#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace lf {

// splitmix64: tiny deterministic generator. Sample streams are part of the
// reproducibility contract (identical seed -> identical report bytes), so we
// do not go through std:: distributions, whose output is implementation
// defined.
class splitmix64 {
  public:
    explicit splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // standard normal via Box-Muller
    double gaussian() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // uniform direction on S^{m-1}
    std::vector<double> unit_vector(int m) {
        std::vector<double> u(static_cast<size_t>(m));
        double n2 = 0;
        do {
            n2 = 0;
            for (auto& x : u) {
                x = gaussian();
                n2 += x * x;
            }
        } while (n2 < 1e-12);
        double inv = 1.0 / std::sqrt(n2);
        for (auto& x : u) x *= inv;
        return u;
    }

  private:
    std::uint64_t state_;
};

} // namespace lf
