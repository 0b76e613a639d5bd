#include <doctest.h>

#include <cmath>

#include "core/fibration.hpp"

using namespace lf;

namespace {
constexpr double kPi = 3.14159265358979323846;

morse_data_2d rp2_data() {
    morse_data_2d d;
    d.handles.push_back({0.1, 0.6, true});
    return d;
}
} // namespace

TEST_CASE("assembled two-dimensional model") {
    fibration_model m = assemble(rp2_data());
    REQUIRE(m.critical_values.size() == 3);
    CHECK(m.critical_values[0] == 0.0);
    CHECK(m.critical_values[1] == 1.0);
    CHECK(m.critical_values[2] == 2.0);
    CHECK(m.basepoint == 0.75);
    CHECK(m.multiplicity[1] == 1);
    REQUIRE(m.cycles.size() == 3);
    CHECK(m.cycles[0].name == "L0");
    CHECK(m.cycles[1].name == "L1[1]");
    CHECK(m.cycles[2].name == "L2");
    // one vanishing cycle per critical point
    int crit = 0;
    for (int mult : m.multiplicity) crit += mult;
    CHECK(static_cast<int>(m.cycles.size()) == crit);
}

TEST_CASE("vanishing paths: segments and lower-half-plane arcs") {
    fibration_model m = assemble(rp2_data());
    std::vector<base_path> paths = vanishing_paths(m);  // validates embeddedness
    REQUIRE(paths.size() == 3);

    // path to the leftmost value is one straight segment
    CHECK(paths[0].segments().size() == 1);
    CHECK(paths[0].segments()[0].k == path_segment::kind::line);
    CHECK(paths[0].start() == cplx(0.75, 0));
    CHECK(paths[0].end() == cplx(0.0, 0));

    // path past the middle value contains the quarter-radius detour arc
    bool has_arc = false;
    for (const auto& s : paths[2].segments())
        if (s.k == path_segment::kind::arc) {
            has_arc = true;
            CHECK(s.center == cplx(1.0, 0));
            CHECK(s.radius == 0.25);
            // runs through the lower half plane: midpoint below the axis
            CHECK(s.at(0.5).imag() < 0);
            CHECK(std::abs(s.a - cplx(0.75, 0)) < 1e-12);
            CHECK(std::abs(s.b - cplx(1.25, 0)) < 1e-15);
        }
    CHECK(has_arc);
}

TEST_CASE("four-value model basepoint and paths") {
    heegaard_data d;
    d.genus = 1;
    d.alpha_beta = zmat(1, 1);
    d.alpha_beta.at(0, 0) = 1;
    d.alpha_classes = zmat(2, 1);
    d.alpha_classes.at(0, 0) = 1;
    d.beta_classes = zmat(2, 1);
    d.beta_classes.at(1, 0) = 1;

    fibration_model m = assemble(d);
    REQUIRE(m.critical_values.size() == 4);
    CHECK(m.basepoint == 1.25);
    REQUIRE(m.cycles.size() == 4);
    CHECK(m.cycles[0].name == "L0");
    CHECK(m.cycles[3].name == "L3");
    (void)vanishing_paths(m);  // embedded, interiors disjoint
}

TEST_CASE("flattening of the base disk") {
    CHECK(flatten_reparam(cplx(0.3, 0)) == cplx(0.3, 0));
    CHECK(std::abs(flatten_reparam(std::polar(0.9, 0.4))) == doctest::Approx(1.0).epsilon(1e-12));
    double prev = 0;
    for (int i = 0; i <= 200; ++i) {
        double rho = i / 200.0;
        double img = std::abs(flatten_reparam(std::polar(rho, 1.3)));
        CHECK(img >= prev - 1e-12);
        prev = img;
    }
    CHECK(prev == doctest::Approx(1.0));
}

TEST_CASE("monodromy word") {
    {
        morse_data_2d sphere;
        sphere.two_values = true;
        fibration_model m = assemble(sphere);
        monodromy_result mr = monodromy_word(m);
        CHECK(mr.unimodular);
        CHECK(mr.form_preserving);
        REQUIRE(mr.value_twists.size() == 2);
        // both twists act along the core class whose self pairing vanishes
        CHECK(mr.total == zmat::identity(1));
    }
    {
        fibration_model m = assemble(rp2_data());
        monodromy_result mr = monodromy_word(m);
        CHECK(mr.unimodular);
        CHECK(mr.form_preserving);
        CHECK(mr.value_twists.size() == m.critical_values.size());
    }
}

TEST_CASE("half-twist numeric check") {
    for (int n : {1, 2, 3}) {
        halftwist_report r = halftwist_numeric_check(n, 0.25, 1e-5);
        INFO("n = ", n);
        CHECK(r.overall.pass);
        CHECK(r.plateau.pass);
        CHECK(r.roundtrip.pass);
    }
}

TEST_CASE("transport composition around the critical value") {
    // half circle forward then backward is the identity on the fiber
    signature sig = signature::middle(2);
    splitmix64 rng(31);
    cotangent c = random_cotangent(rng, 2, 0.3, 0.3);
    quadric_point z0 = untrivialize(c, cplx(0.25, 0), sig);
    base_path half(path_segment::arc(cplx(0, 0), 0.25, 0.0, -kPi));
    quadric_point z1 = transport_ode(z0, half, 1e-11).z;
    quadric_point z2 = transport_ode(z1, half.reversed(), 1e-11).z;
    CHECK(max_abs_diff(z0.x, z2.x) + max_abs_diff(z0.y, z2.y) < 1e-6);
}
