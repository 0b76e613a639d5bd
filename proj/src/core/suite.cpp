#include "suite.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "surgery.hpp"
#include "svg.hpp"

namespace lf {

namespace {

constexpr double kPi = 3.14159265358979323846;

void transport_battery(const job_config& cfg, verification_report& rep) {
    splitmix64 rng(cfg.seed);
    double worst_match = 0, worst_drift = 0, worst_fiber = 0;
    double worst_monodromy = 0, worst_compose = 0;
    double worst_klen = 0, worst_round = 0, worst_sigma = 0;

    for (int n : {1, 2, 3}) {
        int m = n + 1;
        for (double s : {0.25, 0.5, 1.0}) {
            rtilde_profile rt(s, 1.0);
            for (double theta : {kPi / 4, kPi / 2, kPi}) {
                for (int rep_i = 0; rep_i < 20; ++rep_i) {
                    cotangent c = random_cotangent(rng, m, 0.02, 1.0);
                    quadric_point z0 = untrivialize(c, cplx(s, 0), signature::all_plus(m));

                    // round trip and the covector-length identity
                    auto [c_back, w_back] = trivialize(z0);
                    worst_round = std::max(worst_round, distance(c_back, c));
                    worst_klen = std::max(worst_klen,
                                          std::abs(c.covector_norm() -
                                                   std::sqrt(eval_k(z0)) / 2));

                    base_path arc(path_segment::arc(cplx(0, 0), s, 0.0, theta));
                    transport_result tr = transport_ode(z0, arc, cfg.tol.ode);
                    double plen = arc.length();
                    worst_drift = std::max(worst_drift, tr.k_drift / plen);
                    worst_fiber = std::max(worst_fiber, tr.fiber_residual);

                    cotangent got = trivialize(tr.z).first;
                    cotangent want = transport_closed_form(c, s, theta, rt);
                    worst_match = std::max(worst_match, distance(got, want));
                }
            }

            // full monodromy vs the profile twist, and composition
            cotangent c = random_cotangent(rng, m, 0.1, 0.6);
            quadric_point z0 = untrivialize(c, cplx(s, 0), signature::all_plus(m));
            double theta = rng.uniform(0.3, 2.0);
            base_path arc1(path_segment::arc(cplx(0, 0), s, 0.0, theta));
            base_path full(path_segment::arc(cplx(0, 0), s, 0.0, 2 * kPi));
            quadric_point z_mid = transport_ode(z0, arc1, cfg.tol.ode).z;
            base_path arc2(path_segment::arc(cplx(0, 0), s, theta, 2 * kPi));
            quadric_point z_comp = transport_ode(z_mid, arc2, cfg.tol.ode).z;
            quadric_point z_full = transport_ode(z0, full, cfg.tol.ode).z;
            worst_compose = std::max(worst_compose,
                                     max_abs_diff(z_comp.x, z_full.x) +
                                         max_abs_diff(z_comp.y, z_full.y));
            cotangent mono = trivialize(z_full).first;
            cotangent mono_want = transport_closed_form(c, s, 2 * kPi, rt);
            worst_monodromy = std::max(worst_monodromy, distance(mono, mono_want));
        }

        // sigma is a one-parameter group preserving |v|
        for (int t = 0; t < 3; ++t) {
            cotangent c = random_cotangent(rng, m, 0.2, 1.0);
            double t1 = rng.uniform(-2, 2), t2 = rng.uniform(-2, 2);
            cotangent a = geodesic_flow(geodesic_flow(c, t1), t2);
            cotangent b = geodesic_flow(c, t1 + t2);
            worst_sigma = std::max(worst_sigma, distance(a, b));
            worst_sigma = std::max(worst_sigma,
                                   std::abs(a.covector_norm() - c.covector_norm()));
        }
    }

    rep.add(check_line{"transport.closed-form-match", worst_match < cfg.tol.transport,
                       worst_match, cfg.tol.transport,
                       "ODE transport conjugated by the trivialization vs the angle profile"});
    rep.add(check_line{"transport.k-conservation", worst_drift < cfg.tol.conservation, worst_drift,
                       cfg.tol.conservation, "level-function drift per unit path length"});
    rep.add(check_line{"transport.fiber-tracking", worst_fiber < cfg.tol.conservation, worst_fiber,
                       cfg.tol.conservation, "quadric value tracks the base path"});
    rep.add(check_line{"transport.monodromy-vs-profile-twist", worst_monodromy < cfg.tol.halftwist,
                       worst_monodromy, cfg.tol.halftwist,
                       "full-circle transport equals the profile twist"});
    rep.add(check_line{"transport.composition", worst_compose < 1e-6, worst_compose, 1e-6,
                       "transport by theta then 2pi-theta equals transport by 2pi"});
    rep.add(check_line{"trivialize.roundtrip", worst_round < 1e-10, worst_round, 1e-10,
                       "untrivialize then trivialize"});
    rep.add(check_line{"trivialize.covector-length", worst_klen < 1e-10, worst_klen, 1e-10,
                       "|v| equals sqrt(k)/2"});
    rep.add(check_line{"geodesic-flow.group", worst_sigma < 1e-12, worst_sigma, 1e-12,
                       "one-parameter group preserving covector length"});
}

void rho_battery(const job_config& cfg, verification_report& rep) {
    check_report good = rho_exactness_check(1, 1.0, 100, cfg.tol.exactness, true, cfg.seed + 1);
    rep.add("rho.exactness", good);
    check_report bad = rho_exactness_check(1, 1.0, 100, 0.1, false, cfg.seed + 1);
    rep.add(check_line{"rho.printed-variant-regression", bad.pass, bad.residual, bad.tolerance,
                       "the uncorrected covector slot must fail the identity"});
}

void radial_battery(const job_config& cfg, verification_report& rep) {
    splitmix64 rng(cfg.seed + 2);
    double worst = 0;
    for (int n : {1, 2, 3}) {
        for (int i = 0; i < 50; ++i) {
            cotangent c = random_cotangent(rng, n + 1, 0.05, 0.9);
            double s = rng.uniform(0.2, 1.0);
            double ang = rng.uniform(-kPi, kPi) * 0.9;
            quadric_point z =
                untrivialize(c, std::polar(s, ang), signature::all_plus(n + 1));
            check_report r = radial_factorization_check(z, cfg.tol.radial);
            worst = std::max(worst, r.residual);
        }
    }
    rep.add(check_line{"radial-factorization", worst < cfg.tol.radial, worst, cfg.tol.radial,
                       "trivialization equals zero-fiber chart after radial transport"});
}

void thimble_battery(const job_config& cfg, verification_report& rep) {
    splitmix64 rng(cfg.seed + 3);
    double worst_k = 0, worst_root = 0;
    for (int n : {1, 2, 3}) {
        rvec u = rng.unit_vector(n + 1);
        cplx w = std::polar(rng.uniform(0.3, 1.0), rng.uniform(-2.0, 2.0));
        quadric_point z = thimble_point(w, u, signature::all_plus(n + 1));
        worst_root = std::max(worst_root, std::abs(eval_quadric(z) - w));
        base_path seg = base_path::segment(w, 0.25 * w);
        transport_result tr = transport_ode(z, seg, cfg.tol.ode);
        worst_k = std::max(worst_k, eval_k(tr.z));
    }
    rep.add(check_line{"thimble.invariance", worst_k < 1e-8, worst_k, 1e-8,
                       "transport keeps thimble points on the vanishing locus"});
    rep.add(check_line{"thimble.fiber-value", worst_root < 1e-12, worst_root, 1e-12,
                       "square root placement onto the stated fiber"});
}

void profile_battery(const job_config& cfg, verification_report& rep) {
    (void)cfg;
    // closed-form limits of the uncut profile
    rtilde_profile rt(0.5, 1.0);
    rep.add(check_line{"profiles.rtilde.value-at-zero", std::abs(rt.value(0) + 0.5 / 4) < 1e-15,
                       std::abs(rt.value(0) + 0.5 / 4), 1e-15, "value -s/4 at t = 0"});
    rep.add(check_line{"profiles.rtilde.slope-at-zero", std::abs(rt.d1(0.0) - 0.5) == 0.0,
                       std::abs(rt.d1(0.0) - 0.5), 0.0, "slope 1/2 at t = 0+"});
    rep.add(check_line{"profiles.rtilde.slope-at-infinity", std::abs(rt.d1(1e3)) < 1e-3,
                       std::abs(rt.d1(1e3)), 1e-3, "slope decays at large t"});

    double worst_margin_gate = 0;
    bool all = true;
    for (double s : {0.25, 0.5, 1.0}) {
        cut_profile p = build_cut_profile(s, 1.0);
        profile_report r = verify_cut_conditions(p);
        for (const auto& c : r.checks) all = all && c.pass;
        profile_check refl = verify_reflection(p, 1.0 / 16);
        worst_margin_gate = std::max(worst_margin_gate, refl.margin);
        all = all && refl.pass;
    }
    h_profile h = build_h_profile(1.0);
    profile_report hr = verify_h_conditions(h);
    for (const auto& c : hr.checks) all = all && c.pass;
    profile_check hrefl = verify_reflection(h, 1.0 / 16);
    worst_margin_gate = std::max(worst_margin_gate, hrefl.margin);
    all = all && hrefl.pass;

    rep.add(check_line{"profiles.grid-conditions", all, worst_margin_gate, 1e-12,
                       "cut and surgery profiles verified on the construction grids"});
}

void surgery_battery(const job_config& cfg, verification_report& rep) {
    h_profile h = build_h_profile(1.0);

    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 0}, {3, 1}}) {
        subsphere_frame frame(n, k);
        check_report r = overlap_check(frame, h, 400, cfg.seed + 4);
        rep.add("surgery.overlap.n" + std::to_string(n) + "k" + std::to_string(k), r);
    }

    smooth_extension_report se = smooth_extension_check(h, 3, {1.0 / 64, 1.0 / 96});
    double worst_ratio = 0;
    for (const auto& l : se.lines)
        worst_ratio = std::max({worst_ratio, std::abs(l.ratio_d1 - 4), std::abs(l.ratio_d2 - 4)});
    rep.add(check_line{"surgery.smooth-extension", se.pass(), worst_ratio, 0.4,
                       "finite differences of the flow converge across the zero section"});

    // action integrals
    {
        double r = 1.0;
        const int N = 2500;
        std::vector<cotangent> loop;
        auto push_arc = [&](double sign_u) {
            for (int i = 0; i <= N; ++i) {
                double t = -r + 2 * r * i / N;
                rvec u = {sign_u, 0};
                rvec v = {0, t};
                loop.push_back(surgery_map(cotangent(u, v), h));
            }
        };
        // bent handle arc, boundary fiber, reversed second arc, boundary fiber
        push_arc(1.0);
        for (int i = 1; i <= N; ++i)
            loop.push_back(cotangent({0, 1}, {-r + 2 * r * i / N, 0}));
        {
            std::vector<cotangent> armB;
            for (int i = 0; i <= N; ++i) {
                double t = -r + 2 * r * i / N;
                armB.push_back(surgery_map(cotangent({-1.0, 0}, {0, t}), h));
            }
            for (auto it = armB.rbegin() + 1; it != armB.rend(); ++it) loop.push_back(*it);
        }
        for (int i = 1; i <= N; ++i)
            loop.push_back(cotangent({0, -1}, {r - 2 * r * i / N, 0}));
        double act = std::abs(exactness_integral(loop));
        rep.add(check_line{"surgery.action.bent-handle-loop", act < cfg.tol.action, act,
                           cfg.tol.action, "canonical one-form around the bent handle circuit"});
    }
    {
        // loop on a conormal and on the zero section vanish identically
        const int N = 400;
        std::vector<cotangent> conormal, zero;
        for (int i = 0; i <= N; ++i) {
            double a = 2 * kPi * i / N;
            conormal.push_back(cotangent({0, std::cos(a), std::sin(a)}, {0.4, 0, 0}));
            zero.push_back(cotangent({std::cos(a), std::sin(a), 0}, {0, 0, 0}));
        }
        double c1 = std::abs(exactness_integral(conormal));
        double c0 = std::abs(exactness_integral(zero));
        rep.add(check_line{"surgery.action.conormal-loop", c1 == 0.0, c1, 0.0,
                           "covector orthogonal to the motion"});
        rep.add(check_line{"surgery.action.zero-section-loop", c0 == 0.0, c0, 0.0,
                           "zero covector"});
    }
    {
        // Hamiltonian flow preserves loop actions; composite trapezoid at
        // 10^4 nodes keeps the quadrature error well inside the tolerance
        const int N = 10000;
        std::vector<cotangent> loop, image;
        splitmix64 rng(cfg.seed + 5);
        rvec e = rng.unit_vector(3), f0 = rng.unit_vector(3), g = rng.unit_vector(3);
        double pf = dot(e, f0);
        for (int i = 0; i < 3; ++i) f0[static_cast<size_t>(i)] -= pf * e[static_cast<size_t>(i)];
        double fn = norm(f0);
        for (auto& x : f0) x /= fn;
        for (int i = 0; i <= N; ++i) {
            double a = 2 * kPi * i / N;
            rvec u(3), v(3);
            for (int j = 0; j < 3; ++j)
                u[static_cast<size_t>(j)] = std::cos(a) * e[static_cast<size_t>(j)] +
                                            std::sin(a) * f0[static_cast<size_t>(j)];
            double pu = dot(g, u);
            double scale = 0.35 + 0.1 * std::sin(a);
            for (int j = 0; j < 3; ++j)
                v[static_cast<size_t>(j)] = scale * (g[static_cast<size_t>(j)] - pu * u[static_cast<size_t>(j)]);
            cotangent c(u, v);
            loop.push_back(c);
            image.push_back(surgery_map(c, h));
        }
        double before = exactness_integral(loop);
        double after = exactness_integral(image);
        double dev = std::abs(before - after);
        rep.add(check_line{"surgery.action.flow-invariance", dev < cfg.tol.action, dev,
                           cfg.tol.action, "loop action before and after the surgery flow"});
    }
    {
        // inverse flow restores the input exactly
        splitmix64 rng(cfg.seed + 6);
        struct neg_h final : profile {
            const profile& base;
            explicit neg_h(const profile& b) : base(b) {}
            double value(double t) const override { return -base.value(t); }
            double d1(double t) const override { return -base.d1(t); }
            double d2(double t) const override { return -base.d2(t); }
            double radius() const override { return base.radius(); }
            std::string name() const override { return "neg-h"; }
        } nh(h);
        double worst = 0;
        for (int i = 0; i < 50; ++i) {
            cotangent c = random_cotangent(rng, 4, 0.01, 1.0);
            cotangent back = surgery_map(surgery_map(c, h), nh);
            worst = std::max(worst, distance(back, c));
        }
        rep.add(check_line{"surgery.inverse", worst < 1e-10, worst, 1e-10,
                           "flow by h then by -h"});
    }
}

void real_battery(const job_config& cfg, verification_report& rep) {
    splitmix64 rng(cfg.seed + 7);
    double worst_real = 0, worst_grad = 0, worst_conj = 0;
    for (int i = 0; i < 5; ++i) {
        // real point of the middle model on the q = -1/2 level
        double a = rng.uniform(0.4, 0.9);
        double b2 = a * a + 0.5;
        double t1 = rng.uniform(0, 2 * kPi), t2 = rng.uniform(0, 2 * kPi);
        rvec x = {a * std::cos(t1), a * std::sin(t1), std::sqrt(b2) * std::cos(t2),
                  std::sqrt(b2) * std::sin(t2)};
        quadric_point z0 = quadric_point::real(x, signature::middle(4));
        real_transport_report r = real_transport_check(z0, -0.5, 0.5, cfg.tol.real_locus,
                                                       cfg.tol.gradient, cfg.tol.conjugation,
                                                       cfg.tol.ode);
        worst_real = std::max(worst_real, r.stays_real.residual);
        worst_grad = std::max(worst_grad, r.matches_gradient_flow.residual);
        worst_conj = std::max(worst_conj, r.conjugation_equivariance.residual);
    }
    rep.add(check_line{"real-transport.stays-real", worst_real < cfg.tol.real_locus, worst_real,
                       cfg.tol.real_locus, "imaginary part along the transported trajectory"});
    rep.add(check_line{"real-transport.gradient-flow", worst_grad < cfg.tol.gradient, worst_grad,
                       cfg.tol.gradient, "independent gradient-flow integration"});
    rep.add(check_line{"real-transport.conjugation", worst_conj < cfg.tol.conjugation, worst_conj,
                       cfg.tol.conjugation, "conjugation equivariance on a complex detour"});

    rep.add("real-collar", real_collar_check(1000, 1.0, cfg.tol.collar, cfg.seed + 8));
}

void halftwist_battery(const job_config& cfg, verification_report& rep) {
    for (int n : {1, 2, 3}) {
        halftwist_report r = halftwist_numeric_check(n, 0.25, cfg.tol.halftwist, 1.0, 50,
                                                     cfg.seed + 9 + static_cast<std::uint64_t>(n));
        rep.add("halftwist.n" + std::to_string(n), r.overall);
        rep.add("halftwist.n" + std::to_string(n) + ".plateau", r.plateau);
        rep.add("halftwist.n" + std::to_string(n) + ".roundtrip", r.roundtrip);
    }
}

// ---- data-driven jobs ------------------------------------------------------

fibration_model assemble_from_config(const job_config& cfg) {
    if (cfg.data2d) return assemble(*cfg.data2d, cfg.chirality);
    if (cfg.heegaard) return assemble(*cfg.heegaard, cfg.chirality ? -1 : 1);
    return assemble(*cfg.linking, cfg.chirality ? -1 : 1);
}

void fiber_battery(const job_config& cfg, verification_report& rep) {
    if (!cfg.data2d) {
        // homological fiber models: instantiate the surgery identity
        fibration_model m = assemble_from_config(cfg);
        const fiber_model& fm = *m.fiber_homological;
        rep.add_flag("fiber.model.cycle-count",
                     fm.cycles.size() == m.cycles.size(),
                     "one vanishing class per critical point");
        return;
    }

    const morse_data_2d& data = *cfg.data2d;
    fiber2d f = build_surface_fiber(data, cfg.chirality);
    surgered_trace tr = trace_surgered_circle(data);
    int k = data.k();

    rep.add_flag("fiber.orientable", f.surface.orientable(), "fibers are symplectic surfaces");
    int chi = f.surface.euler_characteristic();
    rep.add(check_line{"fiber.euler", chi == -2 * k, std::abs(double(chi + 2 * k)), 0,
                       "chi(M) = -2k, found " + std::to_string(chi)});
    // chi(M) + #critical points = chi(N)
    int crit = 1 + k + tr.components;
    int chi_n = 1 - k + tr.components;
    rep.add(check_line{"fiber.lefschetz-count", chi + crit == chi_n,
                       std::abs(double(chi + crit - chi_n)), 0,
                       "chi(M) + #crit = chi(N)"});
    // surface consistency: chi = 2 - 2g - b with g >= 0
    int b = f.surface.boundary_component_count();
    bool g_ok = (2 - chi - b) % 2 == 0 && (2 - chi - b) >= 0;
    rep.add_flag("fiber.genus-consistency", g_ok,
                 "chi = 2 - 2g - b with integral g >= 0 (b = " + std::to_string(b) + ")");

    rep.add_flag("fiber.surgered-curve-components",
                 f.curve("L2").component_count() == tr.components,
                 "level-circle trace matches the routed curve");

    bool simple = true;
    for (const auto& c : f.curves) simple = simple && self_crossings(f.surface, c) == 0;
    rep.add_flag("fiber.curves-simple", simple, "named curves have no self crossings");

    bool counts = true;
    for (int j = 1; j <= k; ++j) {
        std::string nm = "L1[" + std::to_string(j) + "]";
        counts = counts && intersect_curves(f.surface, f.curve("L0"), f.curve(nm), false) == 2;
        counts = counts && intersect_curves(f.surface, f.curve("L2"), f.curve(nm), false) == 2;
        for (int i = 1; i < j; ++i)
            counts = counts && intersect_curves(f.surface, f.curve("L1[" + std::to_string(i) + "]"),
                                                f.curve(nm), false) == 0;
    }
    rep.add_flag("fiber.intersection-pattern", counts,
                 "base circle and surgered curve each meet every fiber sphere twice");

    // pairing consistency: form against direct signed crossings
    bool pairing = true;
    for (size_t i = 0; i < f.curves.size(); ++i)
        for (size_t j = 0; j < f.curves.size(); ++j) {
            std::vector<zint> fl = mul(f.form, f.classes[j]);
            zint via_form = 0;
            for (size_t t = 0; t < fl.size(); ++t)
                via_form = zadd(via_form, zmul(f.classes[i][t], fl[t]));
            int direct = intersect_curves(f.surface, f.curves[i], f.curves[j], true);
            pairing = pairing && (via_form == direct);
        }
    rep.add_flag("fiber.form-consistency", pairing,
                 "homological pairing equals signed crossing count");

    twist_correspondence tc = half_twist_correspondence(f);
    rep.add_flag("fiber.twist-correspondence", tc.matrices_equal,
                 "quarter-turn relabeling preserves the intersection matrix");

    milnor_result mil = milnor_decomposition(data);
    rep.add(check_line{"fiber.milnor-census", mil.consistent,
                       std::abs(double(mil.chi_inclusion_exclusion - mil.chi_morse)), 0.0,
                       "inclusion-exclusion over the pieces reproduces the Morse count"});
}

void homology_battery(const job_config& cfg, verification_report& rep) {
    homology_report hn, he, he_flip;
    std::string detail;
    if (cfg.data2d) {
        hn = morse_homology_of_n(*cfg.data2d);
        fibration_model m = assemble(*cfg.data2d, cfg.chirality);
        std::vector<std::vector<zint>> cycles;
        for (const auto& c : m.cycles) cycles.push_back(c.cls);
        he = total_space_homology(*m.fiber_geometric, cycles);
        fibration_model m2 = assemble(*cfg.data2d, !cfg.chirality);
        std::vector<std::vector<zint>> cycles2;
        for (const auto& c : m2.cycles) cycles2.push_back(c.cls);
        he_flip = total_space_homology(*m2.fiber_geometric, cycles2);
    } else if (cfg.heegaard) {
        hn = morse_homology_of_n(*cfg.heegaard);
        he = total_space_homology(build_homological_fiber_model(*cfg.heegaard, 1));
        he_flip = total_space_homology(build_homological_fiber_model(*cfg.heegaard, -1));
    } else {
        hn = morse_homology_of_n(*cfg.linking);
        he = total_space_homology(build_homological_fiber_model(*cfg.linking, 1));
        he_flip = total_space_homology(build_homological_fiber_model(*cfg.linking, -1));
    }
    detail = "H(N) = " + hn.str() + ", H(E) = " + he.str();
    rep.add_flag("homology.total-space-equals-base", he == hn, detail);
    rep.add_flag("homology.sign-flag-invariance", he == he_flip,
                 "reports agree under the global chirality flip");
    rep.note("homology", detail);
}

void monodromy_battery(const job_config& cfg, verification_report& rep) {
    if (!cfg.data2d) return;
    fibration_model m = assemble(*cfg.data2d, cfg.chirality);
    monodromy_result mr = monodromy_word(m, 1);
    rep.add_flag("monodromy.unimodular", mr.unimodular, "every value twist has det +-1");
    rep.add_flag("monodromy.form-preserving", mr.form_preserving,
                 "value twists preserve the intersection form");
    rep.add_flag("monodromy.word-length",
                 mr.value_twists.size() == m.critical_values.size(),
                 "one twist block per critical value");

    vanishing_paths(m);  // throws on a bad configuration
    rep.add_flag("paths.embedded-disjoint", true,
                 "vanishing paths embedded, interiors disjoint");
    // flattening
    bool flat = std::abs(flatten_reparam(cplx(0.3, 0)) - cplx(0.3, 0)) == 0.0 &&
                std::abs(std::abs(flatten_reparam(std::polar(0.9, 1.1))) - 1.0) < 1e-12;
    double mono_prev = 0;
    bool monotone = true;
    for (int i = 0; i <= 100; ++i) {
        double rho = i / 100.0;
        double img = std::abs(flatten_reparam(std::polar(rho, 0.37)));
        if (img + 1e-12 < mono_prev) monotone = false;
        mono_prev = img;
    }
    rep.add_flag("flatten.radial-profile", flat && monotone,
                 "identity inside, collapse outside, radially monotone");
}

void write_outputs(const job_config& cfg, const verification_report& rep) {
    if (cfg.out_dir.empty()) return;
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    {
        std::ofstream out(fs::path(cfg.out_dir) / "report.json");
        out << rep.to_json().dump(2) << "\n";
    }
    {
        std::ofstream out(fs::path(cfg.out_dir) / "report.md");
        out << rep.to_markdown();
    }
    if ((cfg.job == "render" || cfg.job == "report-all" || cfg.job == "assemble")) {
        fibration_model m = assemble_from_config(cfg);
        {
            std::ofstream out(fs::path(cfg.out_dir) / "base.svg");
            out << render_base_svg(m);
        }
        if (cfg.data2d) {
            std::ofstream out(fs::path(cfg.out_dir) / "fiber.svg");
            out << render_fiber_svg(*m.fiber_geometric);
        }
        {
            std::ofstream out(fs::path(cfg.out_dir) / "model.json");
            out << fibration_to_json(m).dump(2) << "\n";
        }
    }
}

} // namespace

ordered_json fibration_to_json(const fibration_model& model) {
    ordered_json j;
    j["dim"] = model.dim_n;
    j["critical_values"] = ordered_json::array();
    for (size_t i = 0; i < model.critical_values.size(); ++i)
        j["critical_values"].push_back(
            {{"value", format_double(model.critical_values[i])},
             {"points", model.multiplicity[i]}});
    j["basepoint"] = format_double(model.basepoint);

    ordered_json paths = ordered_json::array();
    for (const auto& p : model.paths) {
        ordered_json segs = ordered_json::array();
        for (const auto& s : p.segments()) {
            ordered_json e;
            if (s.k == path_segment::kind::line) {
                e["kind"] = "line";
                e["from"] = {format_double(s.a.real()), format_double(s.a.imag())};
                e["to"] = {format_double(s.b.real()), format_double(s.b.imag())};
            } else {
                e["kind"] = "arc";
                e["center"] = {format_double(s.center.real()), format_double(s.center.imag())};
                e["radius"] = format_double(s.radius);
                e["angles"] = {format_double(s.ang0), format_double(s.ang1)};
            }
            segs.push_back(e);
        }
        paths.push_back(segs);
    }
    j["vanishing_paths"] = paths;

    ordered_json cyc = ordered_json::array();
    for (const auto& c : model.cycles) {
        ordered_json e;
        e["name"] = c.name;
        e["critical_value"] = format_double(c.critical_value);
        e["point"] = c.point_index;
        e["class"] = c.cls;
        cyc.push_back(e);
    }
    j["vanishing_cycles"] = cyc;

    if (model.fiber_geometric) {
        const fiber2d& f = *model.fiber_geometric;
        ordered_json fib;
        fib["euler_characteristic"] = f.surface.euler_characteristic();
        fib["boundary_components"] = f.surface.boundary_component_count();
        fib["h1_rank"] = f.surface.h1_rank();
        ordered_json form = ordered_json::array();
        for (int i = 0; i < f.form.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (int c = 0; c < f.form.cols(); ++c) row.push_back(f.form.at(i, c));
            form.push_back(row);
        }
        fib["intersection_form"] = form;
        j["fiber"] = fib;

        monodromy_result mr = monodromy_word(model, 1);
        ordered_json word = ordered_json::array();
        for (const auto& t : mr.value_twists) {
            ordered_json mat = ordered_json::array();
            for (int i = 0; i < t.rows(); ++i) {
                ordered_json row = ordered_json::array();
                for (int c = 0; c < t.cols(); ++c) row.push_back(t.at(i, c));
                mat.push_back(row);
            }
            word.push_back(mat);
        }
        j["monodromy_word"] = word;
    }
    if (model.fiber_homological) {
        const fiber_model& fm = *model.fiber_homological;
        ordered_json fib;
        fib["lattice"] = fm.lattice_names;
        ordered_json cycles = ordered_json::array();
        for (size_t i = 0; i < fm.cycles.size(); ++i)
            cycles.push_back({{"name", fm.cycle_names[i]}, {"class", fm.cycles[i]}});
        fib["cycles"] = cycles;
        ordered_json pairing = ordered_json::array();
        for (int i = 0; i < fm.pairing.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (int c = 0; c < fm.pairing.cols(); ++c) {
                if (fm.pairing_defined[static_cast<size_t>(i)][static_cast<size_t>(c)])
                    row.push_back(fm.pairing.at(i, c));
                else
                    row.push_back("undefined");
            }
            pairing.push_back(row);
        }
        fib["pairing"] = pairing;
        j["fiber"] = fib;
    }
    return j;
}

void run_local_battery(const job_config& cfg, verification_report& rep) {
    transport_battery(cfg, rep);
    rho_battery(cfg, rep);
    radial_battery(cfg, rep);
    thimble_battery(cfg, rep);
    profile_battery(cfg, rep);
    surgery_battery(cfg, rep);
    real_battery(cfg, rep);
    halftwist_battery(cfg, rep);
}

suite_result run_suite(const job_config& cfg) {
    verification_report rep(cfg.job, cfg.seed);

    if (cfg.job == "verify-local") {
        run_local_battery(cfg, rep);
    } else if (cfg.job == "build-fiber") {
        fiber_battery(cfg, rep);
    } else if (cfg.job == "homology-check") {
        homology_battery(cfg, rep);
    } else if (cfg.job == "assemble" || cfg.job == "render") {
        fiber_battery(cfg, rep);
        monodromy_battery(cfg, rep);
    } else if (cfg.job == "report-all") {
        run_local_battery(cfg, rep);
        fiber_battery(cfg, rep);
        homology_battery(cfg, rep);
        monodromy_battery(cfg, rep);
    } else {
        throw parse_error("unknown job '" + cfg.job + "'");
    }

    write_outputs(cfg, rep);
    return suite_result{rep, rep.all_pass() ? 0 : 1};
}

} // namespace lf
