#include <doctest.h>

#include "core/config.hpp"
#include "core/report.hpp"
#include "core/suite.hpp"
#include "core/svg.hpp"

using namespace lf;

TEST_CASE("configuration parsing") {
    job_config cfg = parse_config(R"({
        "job": "homology-check",
        "dim": 2, "case": "three",
        "handles": [[0.1, 0.6]],
        "framings": ["reversing"],
        "seed": 7,
        "tolerances": {"ode": 1e-9}
    })");
    CHECK(cfg.job == "homology-check");
    REQUIRE(cfg.data2d.has_value());
    CHECK(cfg.data2d->k() == 1);
    CHECK(cfg.data2d->handles[0].reversing);
    CHECK(cfg.seed == 7);
    CHECK(cfg.tol.ode == 1e-9);

    CHECK_THROWS_AS((void)parse_config(R"({"case": "three"})"), parse_error);     // missing dim
    CHECK_THROWS_AS((void)parse_config("{nope"), parse_error);                    // bad JSON
    CHECK_THROWS_AS((void)parse_config(R"({"dim": 5, "case": "three"})"), parse_error);
    CHECK_THROWS_AS((void)parse_config(R"({"dim": 2, "case": "three"})"), data_error);
    CHECK_THROWS_AS(
        (void)parse_config(
            R"({"dim": 3, "case": "four", "genus": 1, "alpha_beta": [[1],[0]],
                "alpha_classes": [[1],[0]], "beta_classes": [[0],[1]]})"),
        data_error);  // non-square pairing matrix
}

TEST_CASE("dim 3 and dim 4 configs") {
    job_config h = parse_config(R"({
        "dim": 3, "case": "four", "genus": 1,
        "alpha_beta": [[1]],
        "alpha_classes": [[1],[0]],
        "beta_classes": [[0],[1]]
    })");
    REQUIRE(h.heegaard.has_value());
    CHECK(h.heegaard->genus == 1);

    job_config l = parse_config(R"({"dim": 4, "case": "three", "linking": [[0,1],[1,0]]})");
    REQUIRE(l.linking.has_value());
    CHECK(l.linking->k == 2);

    CHECK_THROWS_AS((void)parse_config(R"({"dim": 4, "case": "three", "linking": [[2]]})"),
                    data_error);
}

TEST_CASE("report rendering is stable") {
    verification_report rep("demo", 5);
    rep.add(check_line{"alpha", true, 1.25e-9, 1e-6, "detail text"});
    rep.add(check_line{"beta", false, 0.5, 1e-3, ""});
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.pass_count() == 1);
    CHECK(rep.fail_count() == 1);
    std::string a = rep.to_json().dump(2);
    std::string b = rep.to_json().dump(2);
    CHECK(a == b);
    CHECK(rep.to_markdown().find("FAIL") != std::string::npos);
    CHECK(a.find("alpha") != std::string::npos);
    CHECK(a.find("1.25e-09") != std::string::npos);
}

TEST_CASE("suite jobs run and render deterministically") {
    job_config cfg = parse_config(R"({
        "job": "homology-check",
        "dim": 2, "case": "three",
        "handles": [[0.1, 0.6]],
        "framings": ["reversing"]
    })");
    suite_result res = run_suite(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.report.all_pass());

    cfg.job = "build-fiber";
    suite_result fib = run_suite(cfg);
    CHECK(fib.exit_code == 0);

    // byte-identical rendering for a fixed configuration
    fiber2d f = build_surface_fiber(*cfg.data2d);
    CHECK(render_fiber_svg(f) == render_fiber_svg(f));
    fibration_model m = assemble(*cfg.data2d);
    std::string s1 = render_base_svg(m);
    CHECK(!s1.empty());
    CHECK(s1 == render_base_svg(m));
    CHECK(s1.find("<svg") == 0);
    CHECK(fibration_to_json(m).dump(2) == fibration_to_json(m).dump(2));
}

TEST_CASE("verify-local and assemble jobs pass end to end") {
    job_config cfg = parse_config(R"({
        "job": "verify-local",
        "dim": 2, "case": "two",
        "seed": 4
    })");
    suite_result res = run_suite(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.report.all_pass());
    CHECK(res.report.lines().size() > 20);

    job_config asm_cfg = parse_config(R"({
        "job": "assemble",
        "dim": 2, "case": "three",
        "handles": [[0.0, 0.5], [0.25, 0.75]],
        "framings": ["preserving", "preserving"]
    })");
    suite_result asm_res = run_suite(asm_cfg);
    CHECK(asm_res.exit_code == 0);
}
