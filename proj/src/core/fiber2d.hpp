#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cell_complex.hpp"
#include "errors.hpp"
#include "zmat.hpp"

namespace lf {

// Regular fiber of the two-dimensional model: the disk cotangent bundle of a
// circle (an annulus of quad sectors) with one two-strip handle per middle
// critical point, the named curves on it, and the homological bookkeeping.

struct morse_handle_2d {
    double pos_a = 0;  // cyclic positions of the two attachment points, in [0, 1)
    double pos_b = 0;
    bool reversing = false;  // framing bit: reversing produces the RP^2 pattern
};

struct morse_data_2d {
    bool two_values = false;  // no middle critical points at all
    std::vector<morse_handle_2d> handles;

    int k() const { return static_cast<int>(handles.size()); }
    void validate() const;
};

// walk of the level circle above the middle handles: number of components and
// the signed degree of each component over each handle core (the boundary map
// of the top cells)
struct surgered_trace {
    int components = 0;
    zmat degrees;  // k x components
};
surgered_trace trace_surgered_circle(const morse_data_2d& data);

struct fiber_layout {
    int sectors = 0;
    std::vector<int> outer, inner, radial;           // edge ids per sector
    std::vector<int> sector_poly;                    // polygon ids
    std::vector<int> attach_sector;                  // per sorted attachment point
    std::vector<std::pair<int, int>> point_of;       // sorted point -> (handle, end)
    std::vector<std::array<int, 2>> strip_poly;      // per handle: two strip polygons
    // per handle and strip: the sector and edge position (1 = outer, 3 = inner)
    // each end is glued to; end 0 sits at pos_a's sector, end 1 at pos_b's
    struct strip_end {
        int sector = -1;
        int edge_pos = -1;
    };
    std::vector<std::array<std::array<strip_end, 2>, 2>> strip_ends;  // [handle][strip][end]
};

struct fiber2d {
    morse_data_2d data;
    bool chirality = false;
    comb_surface surface;
    fiber_layout layout;

    std::vector<routed_curve> curves;            // L0, L1[1], ..., L1[k], L2
    std::vector<std::vector<zint>> classes;      // per named curve, in the fiber basis
    std::vector<routed_curve> basis_curves;      // core loop + one loop per strip
    zmat form;                                   // algebraic crossings of the basis loops
    zmat basis_matrix;                           // rows: abstract classes of the basis loops

    int k() const { return data.k(); }
    const routed_curve& curve(const std::string& name) const;
    std::vector<zint> named_class(const std::string& name) const;
    std::vector<std::string> curve_names() const;
};

// classes of the individual components of a curve, in the fiber basis
std::vector<std::vector<zint>> component_classes(const fiber2d& fiber, const routed_curve& c);

// chirality flips the side convention of the twisted arcs (both arcs of every
// handle coherently)
fiber2d build_surface_fiber(const morse_data_2d& data, bool chirality = false);

// curve dictionary of the quarter-turn twisted fiber on the same complex: the
// blue/red roles of the straight and twisted routes swap, the green curves
// stay; verified by comparing full pairwise geometric intersection matrices
struct twist_correspondence {
    std::vector<routed_curve> twisted_curves;                      // L0', L1'[j], L2'
    std::vector<std::pair<std::string, std::string>> name_map;     // twisted -> original
    zmat matrix_original, matrix_twisted;                          // geometric crossings
    bool matrices_equal = false;
};
twist_correspondence half_twist_correspondence(const fiber2d& fiber);

// decomposition of N into the 0-piece, per-handle local pieces, the trivial
// cylinder piece, and top disks, with overlap annotations; the alternating
// Euler sum must reproduce the Morse count
struct milnor_piece {
    std::string name;
    int chi = 0;
};
struct milnor_overlap {
    std::vector<int> pieces;  // indices, size 2 or 3
    int chi = 0;
    int count = 1;  // identical overlaps of this shape
};
struct milnor_result {
    std::vector<milnor_piece> pieces;
    std::vector<milnor_overlap> overlaps;
    int chi_inclusion_exclusion = 0;
    int chi_morse = 0;
    bool consistent = false;
};
milnor_result milnor_decomposition(const morse_data_2d& data);

} // namespace lf
