#include <doctest.h>

#include <cmath>

#include "core/profiles.hpp"

using namespace lf;

TEST_CASE("uncut profile closed form") {
    rtilde_profile p(0.5, 1.0);
    // value at zero: -s/4
    CHECK(p.value(0.0) == doctest::Approx(-0.125).epsilon(1e-15));
    // slope limits
    CHECK(p.d1(0.0) == 0.5);
    CHECK(std::abs(p.d1(1e3)) < 1e-3);
    // hand value: t = 3/4, s = 1/2: t^2 + s^2/4 = 0.625
    CHECK(p.value(0.75) == doctest::Approx(0.375 - 0.5 * std::sqrt(0.625)).epsilon(1e-15));
    // concavity everywhere
    for (double t : {0.0, 0.2, 0.5, 1.0, 3.0}) CHECK(p.d2(t) < 0);
    // finite differences agree with the stated derivatives
    for (double t : {0.1, 0.4, 0.9}) {
        double h = 1e-6;
        CHECK((p.value(t + h) - p.value(t - h)) / (2 * h) == doctest::Approx(p.d1(t)).epsilon(1e-8));
        CHECK((p.d1(t + h) - p.d1(t - h)) / (2 * h) == doctest::Approx(p.d2(t)).epsilon(1e-6));
    }
}

TEST_CASE("cut profile grid conditions") {
    for (double s : {0.25, 0.5, 1.0}) {
        cut_profile p = build_cut_profile(s, 1.0);
        rtilde_profile ref(s, 1.0);
        CHECK(p.value(0.2) == ref.value(0.2));  // identical below r/4
        CHECK(p.d1(0.9) == 0.0);
        CHECK(p.d1(0.5) == 0.0);
        CHECK(p.d2(0.3) < 0);
        profile_report rep = verify_cut_conditions(p);
        for (const auto& c : rep.checks) {
            INFO(c.condition);
            CHECK(c.pass);
        }
        // monotone twisting: d1 non-increasing across the whole range
        double prev = p.d1(0.0);
        for (int i = 1; i <= 1000; ++i) {
            double d = p.d1(i / 1000.0);
            CHECK(d <= prev + 1e-14);
            prev = d;
        }
    }
    CHECK_THROWS_AS((void)build_cut_profile(-1.0, 1.0), construction_error);
}

TEST_CASE("surgery profile conditions") {
    h_profile h = build_h_profile(1.0);
    CHECK(h.d1(0.0) == 0.0);
    CHECK(h.d1(0.6) == 0.5);
    CHECK(h.d1(0.9) == 0.5);
    CHECK(h.d2(0.3) > 0);
    profile_report rep = verify_h_conditions(h);
    for (const auto& c : rep.checks) {
        INFO(c.condition);
        CHECK(c.pass);
    }
    // h'(t) in [0, 1/2], endpoints attained
    double lo = 1, hi = 0;
    for (int i = 0; i <= 2000; ++i) {
        double d = h.d1(i / 2000.0);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    CHECK(lo == 0.0);
    CHECK(hi == 0.5);
}

TEST_CASE("reflection identities hold to machine precision") {
    rtilde_profile rt(0.5, 1.0);
    profile_check c1 = verify_reflection(rt, 0.05);
    CHECK(c1.pass);
    CHECK(c1.margin <= 1e-15);

    h_profile h = build_h_profile(1.0);
    profile_check c2 = verify_reflection(h, 0.05);
    CHECK(c2.pass);

    cut_profile p = build_cut_profile(0.5, 1.0);
    profile_check c3 = verify_reflection(p, 1.0 / 16);
    CHECK(c3.pass);

    // an empty grid passes vacuously
    profile_check c4 = verify_reflection(p, 0.01, 0);
    CHECK(c4.pass);
}
