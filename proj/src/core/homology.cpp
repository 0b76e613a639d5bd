#include "homology.hpp"

#include <numeric>
#include <sstream>

namespace lf {

std::string homology_report::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < groups.size(); ++i) os << (i ? ", " : "") << groups[i].str();
    os << ")";
    return os.str();
}

void heegaard_data::validate() const {
    if (genus < 1) throw data_error("heegaard data needs genus >= 1");
    if (alpha_beta.rows() != genus || alpha_beta.cols() != genus)
        throw data_error("alpha.beta matrix must be genus x genus");
    if (alpha_classes.rows() != 2 * genus || alpha_classes.cols() != genus ||
        beta_classes.rows() != 2 * genus || beta_classes.cols() != genus)
        throw data_error("curve classes must be 2*genus x genus");
    // classes of embedded curves are primitive
    for (int j = 0; j < genus; ++j) {
        for (const zmat* m : {&alpha_classes, &beta_classes}) {
            zint g = 0;
            for (int i = 0; i < 2 * genus; ++i) g = std::gcd(g, m->at(i, j));
            if (g != 1) throw data_error("curve class is not primitive");
        }
    }
}

void linking_data::validate() const {
    if (k < 1) throw data_error("linking data needs at least one handle");
    if (linking.rows() != k || linking.cols() != k)
        throw data_error("linking matrix must be k x k");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (linking.at(i, j) != linking.at(j, i))
                throw data_error("linking matrix must be symmetric");
    zint d = det(linking);
    if (d != 1 && d != -1)
        throw data_error("linking matrix must be unimodular for a closed top handle");
}

homology_report morse_homology_of_n(const morse_data_2d& data) {
    data.validate();
    surgered_trace tr = trace_surgered_circle(data);
    homology_report rep;
    // chain complex: one 0-cell, k 1-cells, one 2-cell per component of the
    // surgered circle; d2 carries the side-traversal degrees, d1 = 0
    rep.groups.push_back(abelian_group{1, {}});  // H0
    rep.groups.push_back(cokernel(data.k(), tr.degrees));
    zmat ker = kernel_basis(tr.degrees);
    rep.groups.push_back(abelian_group{ker.cols(), {}});
    return rep;
}

homology_report morse_homology_of_n(const heegaard_data& data) {
    data.validate();
    homology_report rep;
    rep.groups.push_back(abelian_group{1, {}});
    rep.groups.push_back(cokernel(data.genus, data.alpha_beta));
    zmat ker = kernel_basis(data.alpha_beta);
    rep.groups.push_back(abelian_group{ker.cols(), {}});
    rep.groups.push_back(abelian_group{1, {}});
    return rep;
}

homology_report morse_homology_of_n(const linking_data& data) {
    data.validate();
    homology_report rep;
    // no 1- or 3-handles: middle homology is free on the 2-handles
    rep.groups.push_back(abelian_group{1, {}});
    rep.groups.push_back(abelian_group{0, {}});
    rep.groups.push_back(abelian_group{data.k, {}});
    rep.groups.push_back(abelian_group{0, {}});
    rep.groups.push_back(abelian_group{1, {}});
    return rep;
}

std::vector<zint> picard_lefschetz_twist(const std::vector<zint>& x, const std::vector<zint>& L,
                                         const zmat& form, int sign) {
    if (form.rows() != form.cols() || static_cast<int>(x.size()) != form.rows() ||
        x.size() != L.size())
        throw data_error("twist dimension mismatch");
    for (int i = 0; i < form.rows(); ++i)
        for (int j = 0; j < form.cols(); ++j)
            if (form.at(i, j) != -form.at(j, i)) throw data_error("form is not antisymmetric");
    std::vector<zint> fl = mul(form, L);
    zint pairing = 0;
    for (size_t i = 0; i < x.size(); ++i) pairing = zadd(pairing, zmul(x[i], fl[i]));
    std::vector<zint> out = x;
    for (size_t i = 0; i < x.size(); ++i)
        out[i] = zadd(out[i], zmul(sign, zmul(pairing, L[i])));
    return out;
}

zmat picard_lefschetz_matrix(const std::vector<zint>& L, const zmat& form, int sign) {
    int n = form.rows();
    zmat t = zmat::identity(n);
    std::vector<zint> fl = mul(form, L);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t.at(i, j) = zadd(t.at(i, j), zmul(sign, zmul(L[static_cast<size_t>(i)],
                                                          fl[static_cast<size_t>(j)])));
    return t;
}

fiber_model build_homological_fiber_model(const heegaard_data& data, int chirality_sign) {
    data.validate();
    int h = data.genus;
    fiber_model m;
    m.dim_n = 3;
    m.lattice_names.push_back("T");
    for (int j = 0; j < h; ++j) m.lattice_names.push_back("L1[" + std::to_string(j + 1) + "]");
    for (int j = 0; j < h; ++j) m.lattice_names.push_back("L2[" + std::to_string(j + 1) + "]");
    int rank = 1 + 2 * h;

    auto unit = [&](int i) {
        std::vector<zint> v(static_cast<size_t>(rank), 0);
        v[static_cast<size_t>(i)] = 1;
        return v;
    };

    // surgered classes: [L0] = [T] + e sum [L1_j], [L3] = [T] + e sum [L2_j]
    std::vector<zint> l0 = unit(0);
    std::vector<zint> l3 = unit(0);
    for (int j = 0; j < h; ++j) {
        l0[static_cast<size_t>(1 + j)] = chirality_sign;
        l3[static_cast<size_t>(1 + h + j)] = chirality_sign;
    }
    m.cycle_names.push_back("L0");
    m.cycles.push_back(l0);
    for (int j = 0; j < h; ++j) {
        m.cycle_names.push_back("L1[" + std::to_string(j + 1) + "]");
        m.cycles.push_back(unit(1 + j));
    }
    for (int j = 0; j < h; ++j) {
        m.cycle_names.push_back("L2[" + std::to_string(j + 1) + "]");
        m.cycles.push_back(unit(1 + h + j));
    }
    m.cycle_names.push_back("L3");
    m.cycles.push_back(l3);

    // pairing on the middle lattice (symmetric in this dimension); only the
    // sphere-sphere entries fed by the alpha.beta matrix are defined, clean
    // intersections with T stay undefined
    m.pairing = zmat(rank, rank);
    m.pairing_defined.assign(static_cast<size_t>(rank),
                             std::vector<bool>(static_cast<size_t>(rank), false));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            m.pairing.at(1 + i, 1 + h + j) = data.alpha_beta.at(i, j);
            m.pairing.at(1 + h + j, 1 + i) = data.alpha_beta.at(i, j);
            m.pairing_defined[static_cast<size_t>(1 + i)][static_cast<size_t>(1 + h + j)] = true;
            m.pairing_defined[static_cast<size_t>(1 + h + j)][static_cast<size_t>(1 + i)] = true;
        }
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            if (i != j) {
                // disjoint handle spheres of the same family
                m.pairing_defined[static_cast<size_t>(1 + i)][static_cast<size_t>(1 + j)] = true;
                m.pairing_defined[static_cast<size_t>(1 + h + i)][static_cast<size_t>(1 + h + j)] =
                    true;
            }
        }

    // degree-1 homology of the fiber: the middle surface classes killed by
    // the handle cores
    zmat rel(2 * h, 2 * h);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < 2 * h; ++i) {
            rel.at(i, j) = data.alpha_classes.at(i, j);
            rel.at(i, h + j) = data.beta_classes.at(i, j);
        }
    m.h1_of_fiber = cokernel(2 * h, rel);
    return m;
}

fiber_model build_homological_fiber_model(const linking_data& data, int chirality_sign) {
    data.validate();
    int k = data.k;
    fiber_model m;
    m.dim_n = 4;
    m.lattice_names.push_back("L0");
    for (int j = 0; j < k; ++j) m.lattice_names.push_back("L2[" + std::to_string(j + 1) + "]");
    int rank = 1 + k;

    auto unit = [&](int i) {
        std::vector<zint> v(static_cast<size_t>(rank), 0);
        v[static_cast<size_t>(i)] = 1;
        return v;
    };

    std::vector<zint> l4 = unit(0);
    for (int j = 0; j < k; ++j) l4[static_cast<size_t>(1 + j)] = chirality_sign;

    m.cycle_names.push_back("L0");
    m.cycles.push_back(unit(0));
    for (int j = 0; j < k; ++j) {
        m.cycle_names.push_back("L2[" + std::to_string(j + 1) + "]");
        m.cycles.push_back(unit(1 + j));
    }
    m.cycle_names.push_back("L4");
    m.cycles.push_back(l4);

    // middle pairing is antisymmetric in this dimension; the off-diagonal
    // linking numbers populate sphere-sphere slots (i < j positive), the
    // clean circle intersections with L0 stay undefined
    m.pairing = zmat(rank, rank);
    m.pairing_defined.assign(static_cast<size_t>(rank),
                             std::vector<bool>(static_cast<size_t>(rank), false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            zint v = data.linking.at(i, j);
            m.pairing.at(1 + i, 1 + j) = (i < j) ? v : zsub(0, v);
            m.pairing_defined[static_cast<size_t>(1 + i)][static_cast<size_t>(1 + j)] = true;
        }

    m.h1_of_fiber = abelian_group{0, {}};
    m.extra_middle_minus_one = k;  // plumbing circles
    return m;
}

namespace {

// kernel rank and cokernel of the cycle matrix over the middle lattice
std::pair<abelian_group, long long> cone_middle(const std::vector<std::vector<zint>>& cycles,
                                                int rank) {
    zmat rel(rank, static_cast<int>(cycles.size()));
    for (size_t c = 0; c < cycles.size(); ++c) {
        if (static_cast<int>(cycles[c].size()) != rank) throw data_error("cycle rank mismatch");
        for (int i = 0; i < rank; ++i) rel.at(i, static_cast<int>(c)) = cycles[c][static_cast<size_t>(i)];
    }
    abelian_group coker = cokernel(rank, rel);
    long long ker = kernel_basis(rel).cols();
    return {coker, ker};
}

} // namespace

homology_report total_space_homology(const fiber2d& fiber,
                                     const std::vector<std::vector<zint>>& cycles) {
    auto [coker, ker] = cone_middle(cycles, fiber.form.rows());
    homology_report rep;
    rep.groups.push_back(abelian_group{1, {}});  // H0
    rep.groups.push_back(coker);                 // H1: fiber classes mod thimbles
    rep.groups.push_back(abelian_group{ker, {}});
    return rep;
}

homology_report total_space_homology(const fiber_model& model) {
    int rank = static_cast<int>(model.lattice_names.size());
    auto [coker, ker] = cone_middle(model.cycles, rank);
    homology_report rep;
    if (model.dim_n == 3) {
        rep.groups.push_back(abelian_group{1, {}});
        rep.groups.push_back(model.h1_of_fiber);
        rep.groups.push_back(coker);
        rep.groups.push_back(abelian_group{ker, {}});
    } else {
        rep.groups.push_back(abelian_group{1, {}});
        rep.groups.push_back(model.h1_of_fiber);
        rep.groups.push_back(abelian_group{model.extra_middle_minus_one, {}});
        rep.groups.push_back(coker);
        rep.groups.push_back(abelian_group{ker, {}});
    }
    return rep;
}

} // namespace lf
