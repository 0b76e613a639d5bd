#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fiber2d.hpp"
#include "homology.hpp"
#include "path.hpp"
#include "quadric.hpp"

namespace lf {

// The assembled global model: real critical values (one per index), the base
// point a quarter unit off the middle value, vanishing paths with
// lower-half-plane detours, the ordered vanishing cycles, and the monodromy
// word on degree-1 classes for the two-dimensional fibers.

struct vanishing_cycle {
    double critical_value = 0;
    int point_index = 0;  // several critical points may share one value
    std::string name;
    std::vector<zint> cls;
};

struct fibration_model {
    int dim_n = 0;
    std::vector<double> critical_values;  // ascending, one per Morse index
    std::vector<int> multiplicity;        // critical points over each value
    double basepoint = 0;
    std::vector<base_path> paths;         // one per critical value, from the base point
    std::vector<vanishing_cycle> cycles;  // ordered by critical value

    std::optional<fiber2d> fiber_geometric;
    std::optional<fiber_model> fiber_homological;
};

fibration_model assemble(const morse_data_2d& data, bool chirality = false);
fibration_model assemble(const heegaard_data& data, int chirality_sign = 1);
fibration_model assemble(const linking_data& data, int chirality_sign = 1);

// embedded, pairwise interior-disjoint vanishing paths (validated copies)
std::vector<base_path> vanishing_paths(const fibration_model& model);

// radial flattening of the base disk: identity on |x| <= 1/2, collapse of
// |x| >= 3/4 onto the boundary circle
cplx flatten_reparam(cplx x);

struct monodromy_result {
    std::vector<zmat> value_twists;  // one matrix per critical value
    zmat total;
    bool unimodular = false;
    bool form_preserving = false;
};

// degree-1 twist word for geometric (dim 2) models, ascending critical values
monodromy_result monodromy_word(const fibration_model& model, int sign = 1);

// numeric verification of the half-twist correspondence in the middle local
// model: transport along the lower half circle, read through the left-fiber
// chart, against the surgery flow; the ODE drives the region where the cut
// and uncut profiles agree, the closed form covers the plateau and blend
struct halftwist_report {
    check_report overall;
    check_report plateau;
    check_report roundtrip;
    bool pass() const { return overall.pass && plateau.pass && roundtrip.pass; }
};
halftwist_report halftwist_numeric_check(int n, double s, double tol, double r = 1.0,
                                         int grid = 50, std::uint64_t seed = 2026);

} // namespace lf
