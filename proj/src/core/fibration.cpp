#include "fibration.hpp"

#include "surgery.hpp"

#include <algorithm>
#include <cmath>

namespace lf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDetour = 0.25;  // radius of the lower-half-plane half circles

// path from the base point to a critical value: along the real axis,
// detouring under every intermediate critical value with a half circle.
// Straight stretches before the last detour would run on top of the shorter
// paths, so they are bowed into the lower half plane as well.
base_path path_to(double b, const std::vector<double>& values, double target) {
    base_path p;
    double cur = b;
    bool leftward = target < b;

    auto add_leg = [&](double from, double to, bool final_leg) {
        if (std::abs(to - from) < 1e-12) return;
        if (final_leg) {
            p.append(path_segment::line(cplx(from, 0), cplx(to, 0)));
        } else {
            double mid = 0.5 * (from + to);
            double rad = 0.5 * std::abs(to - from);
            // lower semicircle from `from` to `to`
            p.append(from < to ? path_segment::arc(cplx(mid, 0), rad, -kPi, 0.0)
                               : path_segment::arc(cplx(mid, 0), rad, 0.0, -kPi));
        }
    };

    std::vector<double> mids;
    for (double c : values)
        if (leftward ? (c < b && c > target) : (c > b && c < target)) mids.push_back(c);
    if (leftward)
        std::sort(mids.rbegin(), mids.rend());
    else
        std::sort(mids.begin(), mids.end());

    for (double c : mids) {
        double approach = leftward ? c + kDetour : c - kDetour;
        add_leg(cur, approach, false);
        p.append(leftward ? path_segment::arc(cplx(c, 0), kDetour, 0.0, -kPi)
                          : path_segment::arc(cplx(c, 0), kDetour, -kPi, 0.0));
        cur = leftward ? c - kDetour : c + kDetour;
    }
    add_leg(cur, target, true);
    return p;
}

void attach_paths(fibration_model& m) {
    for (double c : m.critical_values) m.paths.push_back(path_to(m.basepoint, m.critical_values, c));
}

} // namespace

fibration_model assemble(const morse_data_2d& data, bool chirality) {
    data.validate();
    fibration_model m;
    m.dim_n = 2;
    surgered_trace tr = trace_surgered_circle(data);

    fiber2d fib = build_surface_fiber(data, chirality);

    if (data.two_values || data.k() == 0) {
        m.critical_values = {0.0, 2.0};
        m.multiplicity = {1, tr.components};
        m.basepoint = 2.0 - 0.25;  // left of the top value
    } else {
        m.critical_values = {0.0, 1.0, 2.0};
        m.multiplicity = {1, data.k(), tr.components};
        m.basepoint = 1.0 - 0.25;  // left of the middle value
    }
    attach_paths(m);

    m.cycles.push_back({0.0, 0, "L0", fib.named_class("L0")});
    if (data.k() > 0)
        for (int j = 0; j < data.k(); ++j) {
            std::string nm = "L1[" + std::to_string(j + 1) + "]";
            m.cycles.push_back({1.0, j, nm, fib.named_class(nm)});
        }
    // one vanishing circle per component of the surgered curve (one top
    // critical point each); in the two-values case this is the core again
    std::vector<std::vector<zint>> tops = component_classes(fib, fib.curve("L2"));
    for (size_t c = 0; c < tops.size(); ++c) {
        std::string nm = tops.size() == 1 ? "L2" : "L2(" + std::to_string(c + 1) + ")";
        m.cycles.push_back({2.0, static_cast<int>(c), nm, tops[c]});
    }
    m.fiber_geometric = std::move(fib);
    return m;
}

fibration_model assemble(const heegaard_data& data, int chirality_sign) {
    data.validate();
    fibration_model m;
    m.dim_n = 3;
    m.critical_values = {0.0, 1.0, 2.0, 3.0};
    m.multiplicity = {1, data.genus, data.genus, 1};
    m.basepoint = 1.0 + 0.25;  // right of the first handle value
    attach_paths(m);

    fiber_model fm = build_homological_fiber_model(data, chirality_sign);
    int idx = 0;
    m.cycles.push_back({0.0, 0, fm.cycle_names[static_cast<size_t>(idx)], fm.cycles[static_cast<size_t>(idx)]});
    ++idx;
    for (int j = 0; j < data.genus; ++j, ++idx)
        m.cycles.push_back({1.0, j, fm.cycle_names[static_cast<size_t>(idx)], fm.cycles[static_cast<size_t>(idx)]});
    for (int j = 0; j < data.genus; ++j, ++idx)
        m.cycles.push_back({2.0, j, fm.cycle_names[static_cast<size_t>(idx)], fm.cycles[static_cast<size_t>(idx)]});
    m.cycles.push_back({3.0, 0, fm.cycle_names[static_cast<size_t>(idx)], fm.cycles[static_cast<size_t>(idx)]});
    m.fiber_homological = std::move(fm);
    return m;
}

fibration_model assemble(const linking_data& data, int chirality_sign) {
    data.validate();
    fibration_model m;
    m.dim_n = 4;
    m.critical_values = {0.0, 2.0, 4.0};
    m.multiplicity = {1, data.k, 1};
    m.basepoint = 2.0 - 0.25;
    attach_paths(m);

    fiber_model fm = build_homological_fiber_model(data, chirality_sign);
    int idx = 0;
    m.cycles.push_back({0.0, 0, fm.cycle_names[static_cast<size_t>(idx)], fm.cycles[static_cast<size_t>(idx)]});
    ++idx;
    for (int j = 0; j < data.k; ++j, ++idx)
        m.cycles.push_back({2.0, j, fm.cycle_names[static_cast<size_t>(idx)], fm.cycles[static_cast<size_t>(idx)]});
    m.cycles.push_back({4.0, 0, fm.cycle_names[static_cast<size_t>(idx)], fm.cycles[static_cast<size_t>(idx)]});
    m.fiber_homological = std::move(fm);
    return m;
}

std::vector<base_path> vanishing_paths(const fibration_model& model) {
    for (const auto& p : model.paths)
        if (!p.embedded(1e-9)) throw data_error("vanishing path is not embedded");
    // pairwise: interiors meet only at the base point
    for (size_t i = 0; i < model.paths.size(); ++i)
        for (size_t j = i + 1; j < model.paths.size(); ++j) {
            const base_path& a = model.paths[i];
            const base_path& b = model.paths[j];
            const int N = 200;
            for (const auto& sa : a.segments())
                for (int t = 1; t <= N; ++t) {
                    cplx za = sa.at(double(t) / N);
                    // arcs that leave the base point tangentially separate
                    // quadratically; keep a wider exclusion zone around it
                    if (std::abs(za - cplx(model.basepoint, 0)) < 1e-3) continue;
                    if (b.distance_to(za, N) < 1e-9)
                        throw data_error("vanishing paths intersect away from the base point");
                }
        }
    return model.paths;
}

cplx flatten_reparam(cplx x) {
    double rho = std::abs(x);
    if (rho > 1 + 1e-12) throw domain_error("flatten_reparam needs |x| <= 1");
    if (rho <= 0.5) return x;
    double target;
    if (rho >= 0.75) {
        target = 1.0;
    } else {
        // monotone cubic from (1/2, 1/2) slope 1 to (3/4, 1) slope 0
        double t = (rho - 0.5) / 0.25;
        double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
        double h10 = t * (1 - t) * (1 - t);
        double h01 = t * t * (3 - 2 * t);
        target = 0.5 * h00 + 0.25 * h10 * 1.0 + 1.0 * h01;
    }
    return x * (target / rho);
}

monodromy_result monodromy_word(const fibration_model& model, int sign) {
    if (!model.fiber_geometric) throw data_error("monodromy word needs a geometric fiber");
    const zmat& form = model.fiber_geometric->form;
    int n = form.rows();

    monodromy_result res;
    res.total = zmat::identity(n);
    res.unimodular = true;
    res.form_preserving = true;

    for (size_t v = 0; v < model.critical_values.size(); ++v) {
        zmat tv = zmat::identity(n);
        for (const auto& cyc : model.cycles) {
            if (std::abs(cyc.critical_value - model.critical_values[v]) > 1e-12) continue;
            tv = picard_lefschetz_matrix(cyc.cls, form, sign) * tv;
        }
        zint d = det(tv);
        if (d != 1 && d != -1) res.unimodular = false;
        zmat lhs = tv.transposed() * form * tv;
        if (!(lhs == form)) res.form_preserving = false;
        res.value_twists.push_back(tv);
        res.total = tv * res.total;
    }
    return res;
}

halftwist_report halftwist_numeric_check(int n, double s, double tol, double r, int grid,
                                         std::uint64_t seed) {
    if (n < 1 || n > 3) throw domain_error("half-twist check supports n in {1, 2, 3}");
    splitmix64 rng(seed);
    int m = n + 1;
    signature sig = signature::middle(m);
    int minus_from = (m + 1) / 2;  // first negative slot of the middle signature

    cut_profile rcut = build_cut_profile(s, r);

    // the surgery profile paired with the fiber value s; at the default
    // s = 1/4 this is exactly the h profile
    struct paired_h final : profile {
        cut_profile base;
        explicit paired_h(const cut_profile& b) : base(b) {}
        double value(double t) const override { return 0.5 * t - base.value(t); }
        double d1(double t) const override { return 0.5 - base.d1(t); }
        double d2(double t) const override { return -base.d2(t); }
        double radius() const override { return base.radius(); }
        std::string name() const override { return "h-paired"; }
    } h(rcut);

    double worst = 0, worst_plateau = 0, worst_roundtrip = 0;
    for (int g = 0; g < grid; ++g) {
        double vn = r * (g + 0.5) / grid;
        cotangent c = random_cotangent(rng, m, vn, vn);
        cotangent want = surgery_map(c, h);

        cotangent got = [&]() {
            if (vn <= r / 4) {
                // ODE route: transport around the lower half circle, then the
                // left-fiber chart rho . m(i) . alpha
                quadric_point z0 = untrivialize(c, cplx(s, 0), sig);
                base_path half(path_segment::arc(cplx(0, 0), s, 0.0, -kPi));
                transport_result tr = transport_ode(z0, half, 1e-11);
                quadric_point z1 = tr.z;
                worst_roundtrip = std::max(
                    worst_roundtrip,
                    distance(c, trivialize(transport_ode(z1, half.reversed(), 1e-11).z).first));

                rvec x(static_cast<size_t>(m)), y(static_cast<size_t>(m));
                for (int j = 0; j < m; ++j) {
                    // alpha
                    double xr, yr;
                    if (j < minus_from) {
                        xr = z1.x[static_cast<size_t>(j)];
                        yr = z1.y[static_cast<size_t>(j)];
                    } else {
                        xr = -z1.y[static_cast<size_t>(j)];
                        yr = z1.x[static_cast<size_t>(j)];
                    }
                    // m(i)
                    x[static_cast<size_t>(j)] = -yr;
                    y[static_cast<size_t>(j)] = xr;
                }
                quadric_point plus(std::move(x), std::move(y), signature::all_plus(m));
                return rho(plus, s);
            }
            // closed-form route: quarter turn after the cut transport
            return geodesic_flow(transport_closed_form(c, s, -kPi, rcut), kPi / 2);
        }();

        double dev = distance(got, want);
        worst = std::max(worst, dev);
        if (vn >= r / 2) {
            worst_plateau = std::max(worst_plateau, distance(got, geodesic_flow(c, kPi / 2)));
        }
    }

    halftwist_report rep;
    rep.overall = {"halftwist-transport-vs-surgery", worst < tol, worst, tol,
                   "lower half circle transport against the surgery flow, n = " + std::to_string(n)};
    rep.plateau = {"halftwist-plateau", worst_plateau < 1e-9, worst_plateau, 1e-9,
                   "plateau covectors match the exact quarter turn"};
    rep.roundtrip = {"halftwist-roundtrip", worst_roundtrip < 1e-6, worst_roundtrip, 1e-6,
                     "half circle forward then backward returns the input"};
    return rep;
}

} // namespace lf
