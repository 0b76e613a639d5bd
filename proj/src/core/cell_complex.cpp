#include "cell_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lf {

namespace {

struct union_find {
    std::vector<int> parent;
    explicit union_find(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

} // namespace

int comb_surface::add_edge(const std::string& label) {
    if (finalized_) throw data_error("surface already finalized");
    edges_.push_back(edge{label, {}});
    return static_cast<int>(edges_.size()) - 1;
}

int comb_surface::add_polygon(const std::string& name, const std::vector<dart>& boundary) {
    if (finalized_) throw data_error("surface already finalized");
    if (boundary.size() < 2) throw data_error("polygon needs at least two edges");
    int p = static_cast<int>(polys_.size());
    for (size_t i = 0; i < boundary.size(); ++i) {
        int e = boundary[i].edge;
        if (e < 0 || e >= static_cast<int>(edges_.size())) throw data_error("unknown edge in polygon");
        auto& uses = edges_[static_cast<size_t>(e)].uses;
        if (uses.size() >= 2) throw data_error("edge used more than twice: " + edges_[static_cast<size_t>(e)].label);
        uses.push_back(edge_use{p, static_cast<int>(i), boundary[i].forward});
    }
    polys_.push_back(polygon{name, boundary});
    return p;
}

edge_use comb_surface::partner(int poly, int pos) const {
    const dart& d = polys_[static_cast<size_t>(poly)].boundary[static_cast<size_t>(pos)];
    const auto& uses = edges_[static_cast<size_t>(d.edge)].uses;
    if (uses.size() != 2) throw data_error("partner of a boundary edge");
    for (const auto& u : uses)
        if (!(u.poly == poly && u.pos == pos)) return u;
    throw data_error("inconsistent edge uses");
}

int comb_surface::vertex_of_corner(int poly, int pos) const {
    return corner_vertex_[static_cast<size_t>(poly)][static_cast<size_t>(pos)];
}

void comb_surface::build_vertices() {
    // corner (p, i) sits before the edge at position i; global corner index
    std::vector<int> offset(polys_.size() + 1, 0);
    for (size_t p = 0; p < polys_.size(); ++p)
        offset[p + 1] = offset[p] + static_cast<int>(polys_[p].boundary.size());
    union_find uf(offset.back());

    auto corner = [&](int p, int i) {
        int n = static_cast<int>(polys_[static_cast<size_t>(p)].boundary.size());
        return offset[static_cast<size_t>(p)] + ((i % n) + n) % n;
    };

    // identify the material endpoints of each interior edge across its uses:
    // a use traverses from corner(pos) to corner(pos+1); material start is
    // corner(pos) when forward, corner(pos+1) otherwise
    for (size_t e = 0; e < edges_.size(); ++e) {
        const auto& uses = edges_[e].uses;
        if (uses.size() != 2) continue;
        auto ends = [&](const edge_use& u) {
            int a = corner(u.poly, u.pos);
            int b = corner(u.poly, u.pos + 1);
            return u.forward ? std::pair<int, int>(a, b) : std::pair<int, int>(b, a);
        };
        auto [s0, e0] = ends(uses[0]);
        auto [s1, e1] = ends(uses[1]);
        uf.unite(s0, s1);
        uf.unite(e0, e1);
    }

    std::vector<int> root_to_vertex(static_cast<size_t>(offset.back()), -1);
    vertices_ = 0;
    corner_vertex_.assign(polys_.size(), {});
    for (size_t p = 0; p < polys_.size(); ++p) {
        corner_vertex_[p].resize(polys_[p].boundary.size());
        for (size_t i = 0; i < polys_[p].boundary.size(); ++i) {
            int r = uf.find(corner(static_cast<int>(p), static_cast<int>(i)));
            if (root_to_vertex[static_cast<size_t>(r)] < 0) root_to_vertex[static_cast<size_t>(r)] = vertices_++;
            corner_vertex_[p][i] = root_to_vertex[static_cast<size_t>(r)];
        }
    }
}

void comb_surface::check_connected() const {
    if (polys_.empty()) throw data_error("empty surface");
    std::vector<bool> seen(polys_.size(), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        const auto& bd = polys_[static_cast<size_t>(p)].boundary;
        for (size_t i = 0; i < bd.size(); ++i) {
            const auto& uses = edges_[static_cast<size_t>(bd[i].edge)].uses;
            for (const auto& u : uses)
                if (!seen[static_cast<size_t>(u.poly)]) {
                    seen[static_cast<size_t>(u.poly)] = true;
                    stack.push_back(u.poly);
                }
        }
    }
    for (bool b : seen)
        if (!b) throw data_error("surface is not connected");
}

void comb_surface::propagate_orientation() {
    orient_.assign(polys_.size(), 0);
    orientable_ = true;
    std::vector<int> stack;
    for (size_t start = 0; start < polys_.size(); ++start) {
        if (orient_[start] != 0) continue;
        orient_[start] = 1;
        stack.push_back(static_cast<int>(start));
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            const auto& bd = polys_[static_cast<size_t>(p)].boundary;
            for (size_t i = 0; i < bd.size(); ++i) {
                if (!interior_edge(bd[i].edge)) continue;
                edge_use other = partner(p, static_cast<int>(i));
                // compatible orientation: the two uses traverse the edge in
                // opposite material directions when both polygons are
                // positively oriented
                bool opposite = bd[i].forward != polys_[static_cast<size_t>(other.poly)]
                                                      .boundary[static_cast<size_t>(other.pos)]
                                                      .forward;
                int want = opposite ? orient_[static_cast<size_t>(p)] : -orient_[static_cast<size_t>(p)];
                if (orient_[static_cast<size_t>(other.poly)] == 0) {
                    orient_[static_cast<size_t>(other.poly)] = want;
                    stack.push_back(other.poly);
                } else if (orient_[static_cast<size_t>(other.poly)] != want) {
                    orientable_ = false;
                }
            }
        }
    }
}

void comb_surface::count_boundary() {
    // walk boundary darts: from the head of a boundary dart, fan around the
    // vertex through interior edges until the next boundary dart
    struct bdart {
        int poly, pos;
    };
    std::vector<bdart> bdarts;
    std::vector<std::vector<int>> index(polys_.size());
    for (size_t p = 0; p < polys_.size(); ++p) {
        index[p].assign(polys_[p].boundary.size(), -1);
        for (size_t i = 0; i < polys_[p].boundary.size(); ++i)
            if (!interior_edge(polys_[p].boundary[i].edge)) {
                index[p][i] = static_cast<int>(bdarts.size());
                bdarts.push_back({static_cast<int>(p), static_cast<int>(i)});
            }
    }

    auto next_of = [&](const bdart& d) {
        // rotate around the vertex at the head of d (corner pos+1 of poly):
        // successive edges counterclockwise inside the polygon fan
        int p = d.poly;
        int n = static_cast<int>(polys_[static_cast<size_t>(p)].boundary.size());
        int i = (d.pos + 1) % n;
        while (true) {
            if (!interior_edge(polys_[static_cast<size_t>(p)].boundary[static_cast<size_t>(i)].edge))
                return index[static_cast<size_t>(p)][static_cast<size_t>(i)];
            edge_use u = partner(p, i);
            p = u.poly;
            n = static_cast<int>(polys_[static_cast<size_t>(p)].boundary.size());
            i = (u.pos + 1) % n;
        }
    };

    std::vector<bool> used(bdarts.size(), false);
    boundary_components_ = 0;
    for (size_t s = 0; s < bdarts.size(); ++s) {
        if (used[s]) continue;
        ++boundary_components_;
        int cur = static_cast<int>(s);
        while (!used[static_cast<size_t>(cur)]) {
            used[static_cast<size_t>(cur)] = true;
            cur = next_of(bdarts[static_cast<size_t>(cur)]);
        }
    }
}

void comb_surface::build_homology() {
    int E = edge_count();
    int V = vertices_;
    // d1: edges -> vertices, using material directions
    zmat d1(V, E);
    for (int e = 0; e < E; ++e) {
        const auto& u = edges_[static_cast<size_t>(e)].uses.front();
        int n = static_cast<int>(polys_[static_cast<size_t>(u.poly)].boundary.size());
        int head_corner = u.forward ? (u.pos + 1) % n : u.pos;
        int tail_corner = u.forward ? u.pos : (u.pos + 1) % n;
        int head = corner_vertex_[static_cast<size_t>(u.poly)][static_cast<size_t>(head_corner)];
        int tail = corner_vertex_[static_cast<size_t>(u.poly)][static_cast<size_t>(tail_corner)];
        d1.at(head, e) = zadd(d1.at(head, e), 1);
        d1.at(tail, e) = zsub(d1.at(tail, e), 1);
    }
    cycle_basis_ = kernel_basis(d1);

    // d2: polygons -> edges
    zmat d2(E, face_count());
    for (int p = 0; p < face_count(); ++p)
        for (const dart& d : polys_[static_cast<size_t>(p)].boundary)
            d2.at(d.edge, p) = zadd(d2.at(d.edge, p), d.forward ? 1 : -1);

    // express polygon boundaries in cycle coordinates and present H1
    int Zr = cycle_basis_.cols();
    zmat rel(Zr, face_count());
    for (int p = 0; p < face_count(); ++p) {
        std::vector<zint> x;
        if (!solve_integer(cycle_basis_, d2.col(p), x))
            throw error("polygon boundary is not a cycle");
        for (int i = 0; i < Zr; ++i) rel.at(i, p) = x[static_cast<size_t>(i)];
    }
    h1_ = quotient_presentation(Zr, rel);
}

void comb_surface::finalize() {
    if (finalized_) return;
    for (size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].uses.empty()) throw data_error("unused edge: " + edges_[e].label);
    build_vertices();
    check_connected();
    propagate_orientation();
    if (!orientable_) throw data_error("surface is not orientable");
    count_boundary();
    build_homology();
    finalized_ = true;
}

std::vector<zint> comb_surface::chain_class(const std::vector<zint>& edge_chain) const {
    std::vector<zint> x;
    if (!solve_integer(cycle_basis_, edge_chain, x))
        throw data_error("chain is not a cycle");
    return h1_.free_coordinates(x);
}

boundary_point comb_surface::across(const boundary_point& p) const {
    const dart& d = polys_[static_cast<size_t>(p.poly)].boundary[static_cast<size_t>(p.pos)];
    edge_use other = partner(p.poly, p.pos);
    const dart& od = polys_[static_cast<size_t>(other.poly)].boundary[static_cast<size_t>(other.pos)];
    // material fraction of the point, then back into the partner's traversal
    double material = d.forward ? p.frac : 1.0 - p.frac;
    double frac = od.forward ? material : 1.0 - material;
    return boundary_point{other.poly, other.pos, frac};
}

namespace {

double boundary_param(const comb_surface& s, const boundary_point& p) {
    (void)s;
    return static_cast<double>(p.pos) + p.frac;
}

// strict cyclic "b lies in the open arc (a, c)" on a circle of length n
bool in_open_arc(double a, double c, double b, int n) {
    auto wrap = [&](double x) {
        double r = std::fmod(x - a, static_cast<double>(n));
        if (r < 0) r += n;
        return r;
    };
    double wb = wrap(b), wc = wrap(c);
    return wb > 1e-12 && wb < wc - 1e-12;
}

// crossing sign of directed chords in a positively oriented polygon:
// +1 when the cyclic order is (in1, in2, out1, out2)
int chord_crossing(const comb_surface& s, int poly, const chord& c1, const chord& c2) {
    int n = s.polygon_size(poly);
    double a1 = boundary_param(s, c1.in), b1 = boundary_param(s, c1.out);
    double a2 = boundary_param(s, c2.in), b2 = boundary_param(s, c2.out);
    bool in2_inside = in_open_arc(a1, b1, a2, n);
    bool out2_inside = in_open_arc(a1, b1, b2, n);
    if (in2_inside == out2_inside) return 0;
    int sign = in2_inside ? 1 : -1;
    return sign * s.orientation_sign(poly);
}

void collect_chords(const routed_curve& a, std::vector<std::vector<const chord*>>& per_poly) {
    for (const auto& comp : a.components)
        for (const auto& ch : comp) {
            if (ch.in.poly != ch.out.poly) throw data_error("chord spans two polygons");
            per_poly[static_cast<size_t>(ch.in.poly)].push_back(&ch);
        }
}

} // namespace

int intersect_curves(const comb_surface& s, const routed_curve& a, const routed_curve& b,
                     bool algebraic) {
    std::vector<std::vector<const chord*>> ca(static_cast<size_t>(s.face_count()));
    std::vector<std::vector<const chord*>> cb(static_cast<size_t>(s.face_count()));
    collect_chords(a, ca);
    collect_chords(b, cb);
    bool distinct = a.name != b.name;
    int total = 0;
    for (int p = 0; p < s.face_count(); ++p) {
        for (const chord* x : ca[static_cast<size_t>(p)])
            for (const chord* y : cb[static_cast<size_t>(p)]) {
                if (distinct) {
                    // slot discipline keeps distinct curves off each other's
                    // boundary points; a collision is not general position
                    for (double pa : {boundary_param(s, x->in), boundary_param(s, x->out)})
                        for (double pb : {boundary_param(s, y->in), boundary_param(s, y->out)})
                            if (std::abs(pa - pb) < 1e-12)
                                throw data_error("curves " + a.name + " and " + b.name +
                                                 " are not in general position");
                }
                int c = chord_crossing(s, p, *x, *y);
                total += algebraic ? c : std::abs(c);
            }
    }
    return total;
}

int self_crossings(const comb_surface& s, const routed_curve& a) {
    std::vector<std::vector<const chord*>> ca(static_cast<size_t>(s.face_count()));
    collect_chords(a, ca);
    int total = 0;
    for (int p = 0; p < s.face_count(); ++p) {
        const auto& v = ca[static_cast<size_t>(p)];
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                total += std::abs(chord_crossing(s, p, *v[i], *v[j]));
    }
    return total;
}

std::vector<zint> curve_chain(const comb_surface& s, const routed_curve& a) {
    std::vector<zint> chain(static_cast<size_t>(s.edge_count()), 0);

    // anchor corner of a boundary point: the material start corner of its edge
    auto anchor = [&](const boundary_point& p) {
        const dart d = s.boundary_dart(p.poly, p.pos);
        int n = s.polygon_size(p.poly);
        return d.forward ? p.pos : (p.pos + 1) % n;
    };

    for (const auto& comp : a.components) {
        if (comp.empty()) continue;
        for (size_t ci = 0; ci < comp.size(); ++ci) {
            const chord& ch = comp[ci];
            int n = s.polygon_size(ch.in.poly);
            int from = anchor(ch.in);
            int to = anchor(ch.out);
            // walk forward in the stored cyclic order from `from` to `to`;
            // the choice of side only changes the chain by a polygon boundary
            int steps = ((to - from) % n + n) % n;
            for (int t = 0; t < steps; ++t) {
                int pos = (from + t) % n;
                dart d = s.boundary_dart(ch.in.poly, pos);
                chain[static_cast<size_t>(d.edge)] =
                    zadd(chain[static_cast<size_t>(d.edge)], d.forward ? 1 : -1);
            }
        }
    }
    return chain;
}

std::vector<zint> curve_homology_class(const comb_surface& s, const routed_curve& a) {
    return s.chain_class(curve_chain(s, a));
}

} // namespace lf
