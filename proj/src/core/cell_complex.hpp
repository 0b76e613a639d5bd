#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "zmat.hpp"

namespace lf {

// Surface as glued oriented polygons. Edges are shared by label: an edge id
// appearing in two polygon boundaries is interior, one appearance makes it a
// boundary edge. Each edge carries a material direction; polygons traverse it
// forward or backward.
//
// Curves on the surface are stored as chord routes: inside each polygon a
// curve is a straight chord between two boundary points, and consecutive
// chords continue through the same material point of a shared edge. Distinct
// curves cross edges at distinct fractions (slot discipline), which keeps
// every configuration in general position; crossings are decided by the
// cyclic interleaving of chord endpoints.

struct dart {
    int edge = -1;
    bool forward = true;
};

struct edge_use {
    int poly = -1;
    int pos = -1;
    bool forward = true;
};

// point on the boundary of a polygon: on the edge at `pos`, at `frac` along
// the polygon's own traversal of that edge (0 < frac < 1)
struct boundary_point {
    int poly = -1;
    int pos = -1;
    double frac = 0;
};

struct chord {
    boundary_point in, out;
};

// closed curve, possibly with several components
struct routed_curve {
    std::string name;
    std::vector<std::vector<chord>> components;
    int component_count() const { return static_cast<int>(components.size()); }
};

class comb_surface {
  public:
    int add_edge(const std::string& label);
    // boundary darts in cyclic order
    int add_polygon(const std::string& name, const std::vector<dart>& boundary);
    // derive vertices, check connectivity and orientability
    void finalize();

    int vertex_count() const { return vertices_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(polys_.size()); }
    int euler_characteristic() const { return vertices_ - edge_count() + face_count(); }
    int boundary_component_count() const { return boundary_components_; }
    bool orientable() const { return orientable_; }

    int polygon_size(int poly) const { return static_cast<int>(polys_[static_cast<size_t>(poly)].boundary.size()); }
    const std::string& polygon_name(int poly) const { return polys_[static_cast<size_t>(poly)].name; }
    const std::string& edge_label(int e) const { return edges_[static_cast<size_t>(e)].label; }
    const std::vector<edge_use>& uses(int e) const { return edges_[static_cast<size_t>(e)].uses; }
    dart boundary_dart(int poly, int pos) const { return polys_[static_cast<size_t>(poly)].boundary[static_cast<size_t>(pos)]; }
    bool interior_edge(int e) const { return edges_[static_cast<size_t>(e)].uses.size() == 2; }
    // +1 when the polygon's stored cyclic order agrees with the global
    // orientation chosen by finalize()
    int orientation_sign(int poly) const { return orient_[static_cast<size_t>(poly)]; }

    // the other use of an interior edge
    edge_use partner(int poly, int pos) const;

    // H1 of the realized surface (free for surfaces with boundary)
    const quotient_presentation& h1() const { return h1_; }
    long h1_rank() const { return h1_.group().free_rank; }

    // class of a closed 1-chain given as edge coefficients
    std::vector<zint> chain_class(const std::vector<zint>& edge_chain) const;

    // material continuation through an interior edge: given a boundary point,
    // the matching boundary point of the partner polygon
    boundary_point across(const boundary_point& p) const;

    int vertex_of_corner(int poly, int pos) const;  // corner before edge `pos`

  private:
    struct polygon {
        std::string name;
        std::vector<dart> boundary;
    };
    struct edge {
        std::string label;
        std::vector<edge_use> uses;
    };

    std::vector<polygon> polys_;
    std::vector<edge> edges_;
    bool finalized_ = false;
    int vertices_ = 0;
    int boundary_components_ = 0;
    bool orientable_ = false;
    std::vector<int> orient_;
    std::vector<std::vector<int>> corner_vertex_;  // per polygon, per corner
    quotient_presentation h1_;
    zmat cycle_basis_;  // columns: integer basis of ker d1

    void build_vertices();
    void check_connected() const;
    void propagate_orientation();
    void count_boundary();
    void build_homology();
};

// crossings of two routed curves; algebraic uses the global orientation
int intersect_curves(const comb_surface& s, const routed_curve& a, const routed_curve& b,
                     bool algebraic);
int self_crossings(const comb_surface& s, const routed_curve& a);

// cellular 1-cycle homologous to the curve: each chord is pushed to the
// polygon boundary, with crossing points moved to the material start corner
// of their edge
std::vector<zint> curve_chain(const comb_surface& s, const routed_curve& a);
std::vector<zint> curve_homology_class(const comb_surface& s, const routed_curve& a);

} // namespace lf
