#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fiber2d.hpp"
#include "zmat.hpp"

namespace lf {

// Integral homology from handle data, the half-monodromy action on classes,
// and the homology of the total space rebuilt from the fiber plus one thimble
// cell per vanishing cycle.

struct homology_report {
    std::vector<abelian_group> groups;  // by degree

    bool operator==(const homology_report& o) const { return groups == o.groups; }
    std::string str() const;  // "(Z, Z/2, 0)"
};

// dim N = 3: genus plus the alpha/beta pairing and their classes on the
// middle surface
struct heegaard_data {
    int genus = 0;
    zmat alpha_beta;      // h x h signed intersection counts, entry (i, j) = alpha_i . beta_j
    zmat alpha_classes;   // 2h x h columns in H1 of the middle surface
    zmat beta_classes;    // 2h x h

    void validate() const;
};

// dim N = 4: number of middle 2-handles and the symmetric linking/framing
// matrix; closing with a single top handle requires |det| = 1
struct linking_data {
    int k = 0;
    zmat linking;  // k x k

    void validate() const;
};

homology_report morse_homology_of_n(const morse_data_2d& data);
homology_report morse_homology_of_n(const heegaard_data& data);
homology_report morse_homology_of_n(const linking_data& data);

// x + sign * <x, L> L with <x, L> = x^T form L; form must be antisymmetric
std::vector<zint> picard_lefschetz_twist(const std::vector<zint>& x, const std::vector<zint>& L,
                                         const zmat& form, int sign);
zmat picard_lefschetz_matrix(const std::vector<zint>& L, const zmat& form, int sign);

// homological model of the fiber for dim N in {3, 4}: the middle lattice
// spanned by the base Lagrangian and the handle spheres, the ordered
// vanishing classes through the surgery identity, and the populated part of
// the pairing table
struct fiber_model {
    int dim_n = 0;
    std::vector<std::string> lattice_names;
    std::vector<std::string> cycle_names;
    std::vector<std::vector<zint>> cycles;            // in lattice coordinates
    zmat pairing;
    std::vector<std::vector<bool>> pairing_defined;   // clean intersections stay undefined
    abelian_group h1_of_fiber;                        // degree-1 homology of the fiber
    int extra_middle_minus_one = 0;                   // dim 4: plumbing circle classes in H2
};

fiber_model build_homological_fiber_model(const heegaard_data& data, int chirality_sign = 1);
fiber_model build_homological_fiber_model(const linking_data& data, int chirality_sign = 1);

// H_*(E) of the total space: the fiber with one thimble cell attached along
// each vanishing cycle, reduced by Smith normal form
homology_report total_space_homology(const fiber2d& fiber,
                                     const std::vector<std::vector<zint>>& cycles);
homology_report total_space_homology(const fiber_model& model);

} // namespace lf
