#include "fiber2d.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace lf {

namespace {

// slot fractions; distinct curves cross every edge at distinct fractions
constexpr double kSlotL0 = 0.50;
constexpr double kSlotL2 = 0.42;
constexpr double kSlotB0 = 0.58;
constexpr double kSlotL0Tw = 0.38;   // twisted-fiber red curve
constexpr double kSlotL2Tw = 0.54;   // twisted-fiber blue curve
constexpr double kEntryLo = 0.30;    // strip entry materials for L2
constexpr double kEntryHi = 0.70;
constexpr double kEntryTwLo = 0.26;  // strip entry materials for the twisted curve
constexpr double kEntryTwHi = 0.74;
constexpr double kBasisEntry = 0.20;

double basis_return_slot(int j, int strip) { return 0.62 + 0.03 * (2 * j + strip); }

struct sorted_point {
    double pos;
    int handle;
    int end;
};

std::vector<sorted_point> sorted_points(const morse_data_2d& data) {
    std::vector<sorted_point> pts;
    for (int j = 0; j < data.k(); ++j) {
        pts.push_back({data.handles[static_cast<size_t>(j)].pos_a, j, 0});
        pts.push_back({data.handles[static_cast<size_t>(j)].pos_b, j, 1});
    }
    std::sort(pts.begin(), pts.end(), [](const sorted_point& a, const sorted_point& b) {
        return a.pos < b.pos;
    });
    return pts;
}

} // namespace

void morse_data_2d::validate() const {
    if (two_values && !handles.empty())
        throw data_error("two-values data cannot carry middle handles");
    for (const auto& h : handles) {
        if (h.pos_a < 0 || h.pos_a >= 1 || h.pos_b < 0 || h.pos_b >= 1)
            throw data_error("attachment positions must lie in [0, 1)");
    }
    auto pts = sorted_points(*this);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1].pos - pts[i].pos < 1e-9)
            throw data_error("overlapping attachment neighborhoods");
    if (pts.size() >= 2 && (1.0 - pts.back().pos) + pts.front().pos < 1e-9)
        throw data_error("overlapping attachment neighborhoods");
}

surgered_trace trace_surgered_circle(const morse_data_2d& data) {
    data.validate();
    int k = data.k();
    surgered_trace out;
    if (k == 0) {
        out.components = 1;
        out.degrees = zmat(0, 1);
        return out;
    }
    auto pts = sorted_points(data);
    int P = static_cast<int>(pts.size());

    // ports: 2 per marked point (L = 0, R = 1); each port carries one gap
    // connection and one handle-side connection
    auto port = [&](int m, int side) { return 2 * m + side; };
    std::vector<int> gap_link(static_cast<size_t>(2 * P), -1);
    for (int m = 0; m < P; ++m) {
        gap_link[static_cast<size_t>(port(m, 1))] = port((m + 1) % P, 0);
        gap_link[static_cast<size_t>(port((m + 1) % P, 0))] = port(m, 1);
    }

    struct side_arc {
        int handle;
        int port_end0, port_end1;
    };
    std::vector<side_arc> sides;
    std::vector<int> side_link(static_cast<size_t>(2 * P), -1);
    std::vector<int> side_of_port(static_cast<size_t>(2 * P), -1);
    std::vector<std::array<int, 2>> ends_of_handle(static_cast<size_t>(k), {-1, -1});
    for (int m = 0; m < P; ++m) ends_of_handle[static_cast<size_t>(pts[static_cast<size_t>(m)].handle)]
                                              [static_cast<size_t>(pts[static_cast<size_t>(m)].end)] = m;
    for (int j = 0; j < k; ++j) {
        int ma = ends_of_handle[static_cast<size_t>(j)][0];
        int mb = ends_of_handle[static_cast<size_t>(j)][1];
        bool same_side = data.handles[static_cast<size_t>(j)].reversing;
        // side 0 leaves the a-end on the left, side 1 on the right
        int b_for_s0 = same_side ? 0 : 1;
        side_arc s0{j, port(ma, 0), port(mb, b_for_s0)};
        side_arc s1{j, port(ma, 1), port(mb, 1 - b_for_s0)};
        for (const auto& s : {s0, s1}) {
            int id = static_cast<int>(sides.size());
            sides.push_back(s);
            side_link[static_cast<size_t>(s.port_end0)] = s.port_end1;
            side_link[static_cast<size_t>(s.port_end1)] = s.port_end0;
            side_of_port[static_cast<size_t>(s.port_end0)] = id;
            side_of_port[static_cast<size_t>(s.port_end1)] = id;
        }
    }

    // trace alternating gap/side cycles
    std::vector<bool> seen(static_cast<size_t>(2 * P), false);
    std::vector<std::vector<std::pair<int, int>>> comp_sides;  // (side id, direction)
    for (int start = 0; start < 2 * P; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<std::pair<int, int>> traversed;
        int cur = start;
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = true;
            int after_gap = gap_link[static_cast<size_t>(cur)];
            seen[static_cast<size_t>(after_gap)] = true;
            int sid = side_of_port[static_cast<size_t>(after_gap)];
            const side_arc& s = sides[static_cast<size_t>(sid)];
            int dir = (after_gap == s.port_end0) ? 1 : -1;
            traversed.emplace_back(sid, dir);
            cur = side_link[static_cast<size_t>(after_gap)];
        }
        comp_sides.push_back(std::move(traversed));
    }

    out.components = static_cast<int>(comp_sides.size());
    out.degrees = zmat(k, out.components);
    for (int c = 0; c < out.components; ++c)
        for (const auto& [sid, dir] : comp_sides[static_cast<size_t>(c)]) {
            int j = sides[static_cast<size_t>(sid)].handle;
            out.degrees.at(j, c) = zadd(out.degrees.at(j, c), dir);
        }
    return out;
}

namespace {

// ---- chord route construction -------------------------------------------

struct builder {
    const morse_data_2d& data;
    bool chirality;
    fiber_layout lay;
    comb_surface surf;
    int S = 0;

    explicit builder(const morse_data_2d& d, bool chir) : data(d), chirality(chir) {}

    bool is_sector(int poly) const { return poly < S; }
    bool is_gap(int poly) const {
        if (data.k() == 0) return true;
        return is_sector(poly) && (poly % 2 == 1);
    }

    void build_complex() {
        int k = data.k();
        S = (k == 0) ? 4 : 4 * k;
        lay.sectors = S;
        lay.outer.resize(static_cast<size_t>(S));
        lay.inner.resize(static_cast<size_t>(S));
        lay.radial.resize(static_cast<size_t>(S));
        for (int s = 0; s < S; ++s) {
            lay.outer[static_cast<size_t>(s)] = surf.add_edge("outer:" + std::to_string(s));
            lay.inner[static_cast<size_t>(s)] = surf.add_edge("inner:" + std::to_string(s));
            lay.radial[static_cast<size_t>(s)] = surf.add_edge("radial:" + std::to_string(s));
        }
        for (int s = 0; s < S; ++s) {
            int p = surf.add_polygon(
                "sector:" + std::to_string(s),
                {dart{lay.radial[static_cast<size_t>(s)], true},
                 dart{lay.outer[static_cast<size_t>(s)], true},
                 dart{lay.radial[static_cast<size_t>((s + 1) % S)], false},
                 dart{lay.inner[static_cast<size_t>(s)], false}});
            lay.sector_poly.push_back(p);
        }

        auto pts = sorted_points(data);
        lay.attach_sector.resize(pts.size());
        lay.point_of.resize(pts.size());
        std::vector<std::array<int, 2>> sector_of_end(static_cast<size_t>(k));
        for (size_t m = 0; m < pts.size(); ++m) {
            lay.attach_sector[m] = 2 * static_cast<int>(m);
            lay.point_of[m] = {pts[m].handle, pts[m].end};
            sector_of_end[static_cast<size_t>(pts[m].handle)][static_cast<size_t>(pts[m].end)] =
                2 * static_cast<int>(m);
        }

        lay.strip_poly.resize(static_cast<size_t>(k));
        lay.strip_ends.resize(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) {
            int sa = sector_of_end[static_cast<size_t>(j)][0];
            int sb = sector_of_end[static_cast<size_t>(j)][1];
            bool rev = data.handles[static_cast<size_t>(j)].reversing;
            // Each sector meets its two strip interfaces with opposite
            // boundary direction, so a band glued outer-to-inner continues
            // the circle direction (preserving framing) while outer-to-outer
            // flips it (reversing framing).
            for (int sig = 0; sig < 2; ++sig) {
                bool a_outer = (sig == 0);
                bool b_outer = rev ? a_outer : !a_outer;
                int ea = a_outer ? lay.outer[static_cast<size_t>(sa)] : lay.inner[static_cast<size_t>(sa)];
                int eb = b_outer ? lay.outer[static_cast<size_t>(sb)] : lay.inner[static_cast<size_t>(sb)];
                int sideL = surf.add_edge("sideL:" + std::to_string(j) + ":" + std::to_string(sig));
                int sideR = surf.add_edge("sideR:" + std::to_string(j) + ":" + std::to_string(sig));
                // end edges are traversed opposite to the sector's use
                bool da = !a_outer;  // outer used (+) by the sector -> strip uses (-)
                bool db = !b_outer;
                int p = surf.add_polygon("strip:" + std::to_string(j) + ":" + std::to_string(sig),
                                         {dart{ea, da}, dart{sideL, true}, dart{eb, db},
                                          dart{sideR, true}});
                lay.strip_poly[static_cast<size_t>(j)][static_cast<size_t>(sig)] = p;
                lay.strip_ends[static_cast<size_t>(j)][static_cast<size_t>(sig)][0] =
                    fiber_layout::strip_end{sa, a_outer ? 1 : 3};
                lay.strip_ends[static_cast<size_t>(j)][static_cast<size_t>(sig)][1] =
                    fiber_layout::strip_end{sb, b_outer ? 1 : 3};
            }
        }
        surf.finalize();
    }

    // boundary point helpers (material fractions)
    boundary_point on_radial_left(int s, double m) const {
        return boundary_point{lay.sector_poly[static_cast<size_t>(s)], 0, m};
    }
    boundary_point on_radial_right(int s, double m) const {
        return boundary_point{lay.sector_poly[static_cast<size_t>(s)], 2, 1 - m};
    }
    boundary_point on_sector_edge(int s, int pos, double material) const {
        double frac = (pos == 1) ? material : 1 - material;  // outer forward, inner backward
        return boundary_point{lay.sector_poly[static_cast<size_t>(s)], pos, frac};
    }
    double material_of(const boundary_point& p) const {
        dart d = surf.boundary_dart(p.poly, p.pos);
        return d.forward ? p.frac : 1 - p.frac;
    }

    routed_curve core_route(const std::string& name, double slot) const {
        routed_curve c;
        c.name = name;
        std::vector<chord> comp;
        for (int s = 0; s < S; ++s)
            comp.push_back(chord{on_radial_left(s, slot), on_radial_right(s, slot)});
        c.components.push_back(std::move(comp));
        return c;
    }

    // walker: from an entry boundary point, apply the per-polygon exit rule
    // until the loop closes
    template <typename Rule>
    std::vector<chord> walk(boundary_point entry, const Rule& rule) const {
        std::vector<chord> comp;
        boundary_point start = entry;
        for (int guard = 0; guard < 100000; ++guard) {
            boundary_point exit = rule(entry);
            comp.push_back(chord{entry, exit});
            entry = surf.across(exit);
            if (entry.poly == start.poly && entry.pos == start.pos &&
                std::abs(entry.frac - start.frac) < 1e-12)
                return comp;
        }
        throw error("curve walk failed to close");
    }

    routed_curve fiber_sphere_route(int j) const {
        routed_curve c;
        c.name = "L1[" + std::to_string(j + 1) + "]";
        auto rule = [&](const boundary_point& in) -> boundary_point {
            if (is_sector(in.poly)) {
                int other = (in.pos == 1) ? 3 : 1;
                return on_sector_edge(in.poly, other, 0.5);
            }
            int other = (in.pos == 0) ? 2 : 0;
            return boundary_point{in.poly, other, 0.5};
        };
        boundary_point start{lay.strip_poly[static_cast<size_t>(j)][0], 0, 0.5};
        c.components.push_back(walk(start, rule));
        return c;
    }

    // the twisted route: core-parallel through gaps, rising into each strip
    // and crossing it with a side switch
    routed_curve twisted_route(const std::string& name, double slot, double lo, double hi) const {
        routed_curve c;
        c.name = name;
        if (data.k() == 0) return core_route(name, slot);

        auto rule = [&](const boundary_point& in) -> boundary_point {
            int p = in.poly;
            if (is_gap(p)) {
                int other = (in.pos == 0) ? 2 : 0;
                return (other == 2) ? on_radial_right(p, slot) : on_radial_left(p, slot);
            }
            if (is_sector(p)) {
                if (in.pos == 0) {
                    int target = chirality ? 3 : 1;
                    return on_sector_edge(p, target, lo);
                }
                if (in.pos == 2) {
                    int target = chirality ? 1 : 3;
                    return on_sector_edge(p, target, hi);
                }
                // arrived from a strip: descend on the side of the entry
                double m = material_of(in);
                return (m < 0.5) ? on_radial_left(p, slot) : on_radial_right(p, slot);
            }
            // strip: the bent arc flips the momentum across the band; since
            // the band's boundary runs its two ends in opposite momentum
            // directions, that is polygon-fraction preservation, and the
            // chord crosses the band core exactly once
            int other = (in.pos == 0) ? 2 : 0;
            return boundary_point{p, other, in.frac};
        };

        std::vector<bool> gap_done(static_cast<size_t>(S), false);
        for (int s = 0; s < S; ++s) {
            if (!is_gap(s) || gap_done[static_cast<size_t>(s)]) continue;
            boundary_point start{lay.sector_poly[static_cast<size_t>(s)], 0, slot};
            std::vector<chord> comp = walk(start, rule);
            for (const chord& ch : comp)
                if (is_gap(ch.in.poly)) gap_done[static_cast<size_t>(ch.in.poly)] = true;
            c.components.push_back(std::move(comp));
        }
        return c;
    }

    routed_curve basis_loop(int j, int sig) const {
        routed_curve c;
        c.name = "B[" + std::to_string(j + 1) + "," + std::to_string(sig) + "]";
        double ret = basis_return_slot(j, sig);
        const auto& ends = lay.strip_ends[static_cast<size_t>(j)][static_cast<size_t>(sig)];
        int strip = lay.strip_poly[static_cast<size_t>(j)][static_cast<size_t>(sig)];

        std::vector<chord> comp;
        // straight pass through the strip, end 0 -> end 1
        boundary_point s_in{strip, 0, surf.boundary_dart(strip, 0).forward ? kBasisEntry
                                                                           : 1 - kBasisEntry};
        dart d2 = surf.boundary_dart(strip, 2);
        boundary_point s_out{strip, 2, d2.forward ? kBasisEntry : 1 - kBasisEntry};
        comp.push_back(chord{s_in, s_out});

        // descend at the b-end, travel leftward to the a-end, ascend
        boundary_point cur = surf.across(s_out);
        int sb = ends[1].sector, sa = ends[0].sector;
        comp.push_back(chord{cur, on_radial_left(sb, ret)});
        int s = (sb + S - 1) % S;
        while (s != sa) {
            comp.push_back(chord{on_radial_right(s, ret), on_radial_left(s, ret)});
            s = (s + S - 1) % S;
        }
        comp.push_back(chord{on_radial_right(sa, ret), on_sector_edge(sa, ends[0].edge_pos,
                                                                       kBasisEntry)});
        c.components.push_back(std::move(comp));
        return c;
    }
};

} // namespace

fiber2d build_surface_fiber(const morse_data_2d& data, bool chirality) {
    data.validate();
    builder b(data, chirality);
    b.build_complex();

    fiber2d f;
    f.data = data;
    f.chirality = chirality;
    f.layout = b.lay;

    f.curves.push_back(b.core_route("L0", kSlotL0));
    for (int j = 0; j < data.k(); ++j) f.curves.push_back(b.fiber_sphere_route(j));
    f.curves.push_back(b.twisted_route("L2", kSlotL2, kEntryLo, kEntryHi));

    f.basis_curves.push_back(b.core_route("B[core]", kSlotB0));
    for (int j = 0; j < data.k(); ++j)
        for (int sig = 0; sig < 2; ++sig) f.basis_curves.push_back(b.basis_loop(j, sig));

    f.surface = std::move(b.surf);

    // abstract classes of the basis loops; must form a unimodular basis of H1
    long rank = f.surface.h1_rank();
    if (rank != 1 + 2 * data.k()) throw error("fiber H1 rank mismatch");
    f.basis_matrix = zmat(static_cast<int>(rank), static_cast<int>(rank));
    for (size_t i = 0; i < f.basis_curves.size(); ++i) {
        std::vector<zint> cls = curve_homology_class(f.surface, f.basis_curves[i]);
        for (size_t c = 0; c < cls.size(); ++c)
            f.basis_matrix.at(static_cast<int>(i), static_cast<int>(c)) = cls[c];
    }
    zint dm = det(f.basis_matrix);
    if (dm != 1 && dm != -1) throw error("fiber basis loops are not a lattice basis");

    // intersection form = algebraic crossings of the basis loops
    f.form = zmat(static_cast<int>(rank), static_cast<int>(rank));
    for (size_t i = 0; i < f.basis_curves.size(); ++i)
        for (size_t j = 0; j < f.basis_curves.size(); ++j)
            f.form.at(static_cast<int>(i), static_cast<int>(j)) =
                intersect_curves(f.surface, f.basis_curves[i], f.basis_curves[j], true);
    for (int i = 0; i < f.form.rows(); ++i)
        for (int j = 0; j < f.form.cols(); ++j)
            if (f.form.at(i, j) != -f.form.at(j, i))
                throw error("intersection form is not antisymmetric");

    // named-curve classes in the basis coordinates
    zmat bt = f.basis_matrix.transposed();
    for (const auto& c : f.curves) {
        std::vector<zint> abs = curve_homology_class(f.surface, c);
        std::vector<zint> lambda;
        if (!solve_integer(bt, abs, lambda)) throw error("class does not lie in the basis lattice");
        f.classes.push_back(lambda);
    }
    return f;
}

const routed_curve& fiber2d::curve(const std::string& name) const {
    for (const auto& c : curves)
        if (c.name == name) return c;
    throw data_error("unknown curve: " + name);
}

std::vector<zint> fiber2d::named_class(const std::string& name) const {
    for (size_t i = 0; i < curves.size(); ++i)
        if (curves[i].name == name) return classes[i];
    throw data_error("unknown curve: " + name);
}

std::vector<std::string> fiber2d::curve_names() const {
    std::vector<std::string> names;
    for (const auto& c : curves) names.push_back(c.name);
    return names;
}

std::vector<std::vector<zint>> component_classes(const fiber2d& fiber, const routed_curve& c) {
    zmat bt = fiber.basis_matrix.transposed();
    std::vector<std::vector<zint>> out;
    for (const auto& comp : c.components) {
        routed_curve single;
        single.name = c.name;
        single.components.push_back(comp);
        std::vector<zint> abs = curve_homology_class(fiber.surface, single);
        std::vector<zint> lambda;
        if (!solve_integer(bt, abs, lambda)) throw error("class does not lie in the basis lattice");
        out.push_back(lambda);
    }
    return out;
}

twist_correspondence half_twist_correspondence(const fiber2d& fiber) {
    builder rb(fiber.data, fiber.chirality);
    rb.lay = fiber.layout;
    rb.S = fiber.layout.sectors;
    rb.surf = fiber.surface;

    twist_correspondence tc;
    tc.twisted_curves.push_back(rb.twisted_route("L0'", kSlotL0Tw, kEntryTwLo, kEntryTwHi));
    for (int j = 0; j < fiber.k(); ++j) {
        routed_curve c = rb.fiber_sphere_route(j);
        c.name = "L1'[" + std::to_string(j + 1) + "]";
        tc.twisted_curves.push_back(c);
    }
    tc.twisted_curves.push_back(rb.core_route("L2'", kSlotL2Tw));

    for (size_t i = 0; i < tc.twisted_curves.size(); ++i)
        tc.name_map.emplace_back(tc.twisted_curves[i].name, fiber.curves[i].name);

    int n = static_cast<int>(fiber.curves.size());
    tc.matrix_original = zmat(n, n);
    tc.matrix_twisted = zmat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            tc.matrix_original.at(i, j) = intersect_curves(
                fiber.surface, fiber.curves[static_cast<size_t>(i)],
                fiber.curves[static_cast<size_t>(j)], false);
            tc.matrix_twisted.at(i, j) = intersect_curves(
                fiber.surface, tc.twisted_curves[static_cast<size_t>(i)],
                tc.twisted_curves[static_cast<size_t>(j)], false);
        }
    tc.matrices_equal = (tc.matrix_original == tc.matrix_twisted);
    return tc;
}

milnor_result milnor_decomposition(const morse_data_2d& data) {
    data.validate();
    surgered_trace tr = trace_surgered_circle(data);
    int k = data.k();
    int c = tr.components;

    milnor_result res;
    res.pieces.push_back({"N0", 1});
    res.pieces.push_back({"Ntop", c});
    int loc0 = 2;
    for (int j = 0; j < k; ++j)
        res.pieces.push_back({"N1.loc[" + std::to_string(j + 1) + "]", 1});
    int triv = -1;
    if (k > 0) {
        triv = static_cast<int>(res.pieces.size());
        res.pieces.push_back({"N1.triv", 2 * k});
    }

    if (k == 0) {
        res.overlaps.push_back({{0, 1}, 0, 1});  // collar annulus
    } else {
        res.overlaps.push_back({{0, triv}, 2 * k, 1});
        res.overlaps.push_back({{1, triv}, 2 * k, 1});
        for (int j = 0; j < k; ++j) {
            res.overlaps.push_back({{0, loc0 + j}, 2, 1});
            res.overlaps.push_back({{1, loc0 + j}, 2, 1});
            res.overlaps.push_back({{triv, loc0 + j}, 4, 1});
            res.overlaps.push_back({{0, triv, loc0 + j}, 4, 1});  // corner points
            res.overlaps.push_back({{1, triv, loc0 + j}, 4, 1});
        }
    }

    int chi = 0;
    for (const auto& p : res.pieces) chi += p.chi;
    for (const auto& o : res.overlaps)
        chi += (o.pieces.size() == 2 ? -o.chi : o.chi) * o.count;
    res.chi_inclusion_exclusion = chi;
    res.chi_morse = 1 - k + c;
    res.consistent = (res.chi_inclusion_exclusion == res.chi_morse);
    return res;
}

} // namespace lf
