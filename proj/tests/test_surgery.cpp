#include <doctest.h>

#include <cmath>

#include "core/surgery.hpp"

using namespace lf;

namespace {
constexpr double kPi = 3.14159265358979323846;

// deliberately broken profile: nonzero slope at the zero section
struct broken_h final : profile {
    h_profile base;
    explicit broken_h(double r) : base(build_h_profile(r)) {}
    double value(double t) const override { return base.value(t) + 0.1 * t; }
    double d1(double t) const override { return base.d1(t) + 0.1; }
    double d2(double t) const override { return base.d2(t); }
    double radius() const override { return base.radius(); }
    std::string name() const override { return "broken-h"; }
};

} // namespace

TEST_CASE("surgery flow basics") {
    h_profile h = build_h_profile(1.0);

    // zero section fixed pointwise
    cotangent z({0.6, 0.8, 0}, {0, 0, 0});
    CHECK(distance(surgery_map(z, h), z) == 0.0);

    // collar covectors of the leading conormal turn onto the trailing one
    subsphere_frame fr(2, 0);
    splitmix64 rng(3);
    cotangent c = fr.sample_conormal_plus(rng, 0.8, 0.8);
    cotangent img = surgery_map(c, h);
    CHECK(fr.in_conormal_minus(img, 1e-12));
    CHECK(distance(img, geodesic_flow(c, kPi / 2)) < 1e-12);

    // intermediate covectors rotate by an angle strictly inside (0, pi/2)
    cotangent mid = fr.sample_conormal_plus(rng, 0.125, 0.125);
    double ang = h.d1(0.125) * kPi;
    CHECK(ang > 0);
    CHECK(ang < kPi / 2);
    CHECK(distance(surgery_map(mid, h), geodesic_flow(mid, ang)) < 1e-12);
}

TEST_CASE("overlap identity, both inclusions") {
    h_profile h = build_h_profile(1.0);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 0}, {3, 1}, {2, 1}}) {
        check_report r = overlap_check(subsphere_frame(n, k), h, 500, 77);
        INFO("n=", n, " k=", k);
        CHECK(r.pass);
    }

    // strictness below the collar: h'' > 0 keeps the image off the pattern
    subsphere_frame fr(1, 0);
    splitmix64 rng(9);
    cotangent quarter = fr.sample_conormal_plus(rng, 0.25, 0.25);
    CHECK_FALSE(fr.in_conormal_minus(surgery_map(quarter, h), 1e-9));
}

TEST_CASE("smooth extension across the zero section") {
    h_profile h = build_h_profile(1.0);
    smooth_extension_report ok = smooth_extension_check(h, 3, {1.0 / 64, 1.0 / 96});
    CHECK(ok.pass());

    broken_h bad(1.0);
    smooth_extension_report fail = smooth_extension_check(bad, 3, {1.0 / 64, 1.0 / 96});
    CHECK_FALSE(fail.pass());

    CHECK_THROWS_AS((void)smooth_extension_check(h, 3, {0.5}), domain_error);
}

TEST_CASE("action integrals") {
    h_profile h = build_h_profile(1.0);

    // loop on the zero section: identically zero
    std::vector<cotangent> zero;
    const int N = 500;
    for (int i = 0; i <= N; ++i) {
        double a = 2 * kPi * i / N;
        zero.push_back(cotangent({std::cos(a), std::sin(a)}, {0, 0}));
    }
    CHECK(exactness_integral(zero) == 0.0);

    // loop along a conormal: covector orthogonal to the motion
    std::vector<cotangent> conormal;
    for (int i = 0; i <= N; ++i) {
        double a = 2 * kPi * i / N;
        conormal.push_back(cotangent({0, std::cos(a), std::sin(a)}, {0.5, 0, 0}));
    }
    CHECK(exactness_integral(conormal) == 0.0);

    // bent-handle circuit (leading conormal pushed through the flow, closed
    // through the boundary fibers)
    std::vector<cotangent> loop;
    const int M = 2500;
    double r = 1.0;
    for (int i = 0; i <= M; ++i) {
        double t = -r + 2 * r * i / M;
        loop.push_back(surgery_map(cotangent({1, 0}, {0, t}), h));
    }
    for (int i = 1; i <= M; ++i) loop.push_back(cotangent({0, 1}, {-r + 2 * r * i / M, 0}));
    {
        std::vector<cotangent> armB;
        for (int i = 0; i <= M; ++i) {
            double t = -r + 2 * r * i / M;
            armB.push_back(surgery_map(cotangent({-1.0, 0}, {0, t}), h));
        }
        for (auto it = armB.rbegin() + 1; it != armB.rend(); ++it) loop.push_back(*it);
    }
    for (int i = 1; i <= M; ++i) loop.push_back(cotangent({0, -1}, {r - 2 * r * i / M, 0}));
    CHECK(std::abs(exactness_integral(loop)) < 1e-6);

    // open chains are rejected
    std::vector<cotangent> open = {cotangent({1, 0}, {0, 0.5}), cotangent({0, 1}, {0.5, 0})};
    CHECK_THROWS_AS((void)exactness_integral(open), domain_error);
}

TEST_CASE("flow invariance of loop actions and exact inverse") {
    h_profile h = build_h_profile(1.0);
    splitmix64 rng(21);

    const int N = 4000;
    std::vector<cotangent> loop, image;
    rvec e = rng.unit_vector(4), f0 = rng.unit_vector(4), g = rng.unit_vector(4);
    double pf = dot(e, f0);
    for (size_t i = 0; i < 4; ++i) f0[i] -= pf * e[i];
    double fn = norm(f0);
    for (auto& x : f0) x /= fn;
    for (int i = 0; i <= N; ++i) {
        double a = 2 * kPi * i / N;
        rvec u(4), v(4);
        for (size_t j = 0; j < 4; ++j) u[j] = std::cos(a) * e[j] + std::sin(a) * f0[j];
        double pu = dot(g, u);
        double scale = 0.4 + 0.15 * std::sin(a);
        for (size_t j = 0; j < 4; ++j) v[j] = scale * (g[j] - pu * u[j]);
        cotangent c(u, v);
        loop.push_back(c);
        image.push_back(surgery_map(c, h));
    }
    CHECK(std::abs(exactness_integral(loop) - exactness_integral(image)) < 1e-6);

    struct neg_h final : profile {
        const profile& b;
        explicit neg_h(const profile& p) : b(p) {}
        double value(double t) const override { return -b.value(t); }
        double d1(double t) const override { return -b.d1(t); }
        double d2(double t) const override { return -b.d2(t); }
        double radius() const override { return b.radius(); }
        std::string name() const override { return "neg"; }
    } nh(h);
    for (int i = 0; i < 30; ++i) {
        cotangent c = random_cotangent(rng, 4, 0.01, 1.0);
        CHECK(distance(surgery_map(surgery_map(c, h), nh), c) < 1e-10);
        // the flow preserves covector length exactly
        CHECK(surgery_map(c, h).covector_norm() == doctest::Approx(c.covector_norm()).epsilon(1e-15));
    }
}
