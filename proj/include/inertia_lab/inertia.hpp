#pragma once

#include "inertia_lab/chain.hpp"
#include "inertia_lab/fin_group.hpp"
#include "inertia_lab/simplicial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace inertia_lab {

// Finite left G-set; left[g * size + x] = g.x. The right action used by the
// Borel and inertia constructions is x.h = h^-1 . x.
struct GSet {
    std::size_t size = 0;
    std::vector<std::uint32_t> left;
    std::string name;

    std::uint32_t act(Elem g, std::uint32_t x) const { return left[std::size_t(g) * size + x]; }
    std::uint32_t right_act(const FinGroup& G, std::uint32_t x, Elem h) const { return act(G.inv(h), x); }
    std::vector<std::uint32_t> fixed_points(Elem g) const;
    std::vector<std::string> axiom_violations(const FinGroup& G) const;
};

GSet point_gset(const FinGroup& G);
GSet left_regular_gset(const FinGroup& G);
// point + left-regular, two orbits
GSet two_orbit_gset(const FinGroup& G);
// "point", "regular", "two-orbit"
GSet parse_gset(const FinGroup& G, const std::string& spec);

// One object, one morphism per element; compose(a, b) = a b.
FiniteGroupoid delooping_groupoid(const FinGroup& G);
NerveSSet nerve_of_group(const FinGroup& G, int dim_bound = kDefaultDimBound);

// Objects G, morphism index gamma * |G| + g : gamma -> g^-1 gamma g.
FiniteGroupoid inertia_groupoid(const FinGroup& G);

// (gamma; g_{n-1}, ..., g_0): edges[0] = g_{n-1} is the first morphism out of gamma.
struct InertiaCell {
    Elem loop = 0;
    std::vector<Elem> edges;

    int degree() const { return static_cast<int>(edges.size()); }
    friend bool operator==(const InertiaCell&, const InertiaCell&) = default;
};

// Ad_j(gamma) = (g_{n-1} ... g_{n-j})^-1 gamma (g_{n-1} ... g_{n-j}); Ad_0 = gamma.
Elem inertia_object(const FinGroup& G, const InertiaCell& cell, int j);
// Standard nerve faces of the inertia groupoid; identity edges are kept.
InertiaCell inertia_face(const FinGroup& G, const InertiaCell& cell, int i);
bool is_degenerate(const FinGroup& G, const InertiaCell& cell);

class InertiaNerve {
public:
    InertiaNerve(const FinGroup& G, int dim_bound);

    const SSet& sset() const { return nerve_.sset(); }
    InertiaCell cell(CellId id) const;
    // Normal form; degenerate cells come back with a non-empty word.
    Simplex find(const InertiaCell& cell) const;

private:
    const FinGroup* G_;
    NerveSSet nerve_;
};

struct InertiaSector {
    Elem rep = 0;
    std::size_t class_size = 0;
    Subgroup centralizer;
    AbGroupPresentation centralizer_abelianization;
};

// B C_g -> Lambda BG sends h to (g; h); the retraction sends (gamma; k) to
// t_gamma^-1 k t_{k^-1 gamma k}, with t the class transporters.
struct InertiaDecomposition {
    std::vector<InertiaSector> sectors;
    ConjClassData classes;

    // sector index of the component containing gamma
    std::size_t sector_of(Elem gamma) const { return classes.class_of.at(gamma); }
    // Retraction of a morphism (gamma, k) onto the centralizer of its sector rep (parent index).
    Elem retract(const FinGroup& G, Elem gamma, Elem k) const;
    // Retraction of a whole cell; edges stay in printed order.
    std::vector<Elem> retract_cell(const FinGroup& G, const InertiaCell& cell) const;
};

InertiaDecomposition inertia_decomposition(const FinGroup& G);

struct DecompositionCheck {
    std::size_t components = 0;
    std::size_t morphisms = 0;           // |G|^2
    std::size_t morphisms_by_sectors = 0;  // sum over reps of |class|^2 * |C_g|
    bool section_retraction_identity = false;
    bool retraction_is_functor = false;
    AbGroupPresentation h1_nerve;
    AbGroupPresentation h1_expected;  // sum of abelianizations of the C_g

    bool ok() const {
        return morphisms == morphisms_by_sectors && section_retraction_identity && retraction_is_functor &&
               h1_nerve == h1_expected;
    }
};

// Checks the groupoid equivalence data and compares H_1 of the inertia nerve with
// the sum of centralizer abelianizations.
DecompositionCheck check_inertia_decomposition(const FinGroup& G);

// (g_{n-1}, ..., g_{n-k}, Ad_k(gamma), g_{n-k-1}, ..., g_0), a bar (n+1)-tuple.
std::vector<Elem> evaluation_map(const FinGroup& G, int k, const InertiaCell& cell);

// (n_{k-1}, ..., n_0) acting edgewise on a skeletal cell of degree k.
struct RotationWord {
    std::vector<std::int64_t> entries;
    int degree() const { return static_cast<int>(entries.size()); }
};

// Skeletal cell (x; h_{n-1}, ..., h_0) of X^g // C_g; edges are parent indices in C_g.
struct SkeletalCell {
    std::uint32_t point = 0;
    std::vector<Elem> edges;
    friend bool operator==(const SkeletalCell&, const SkeletalCell&) = default;
};

// Each edge h_i becomes g^{n_i} h_i.
SkeletalCell rotate_cell(const FinGroup& G, Elem g, const SkeletalCell& cell, const RotationWord& word);
SkeletalCell skeletal_face(const FinGroup& G, const GSet& X, const SkeletalCell& cell, int i);
SkeletalCell skeletal_degeneracy(const FinGroup& G, const SkeletalCell& cell, int i);
// Faces and degeneracies of the integer nerve: d_0 drops the first entry, d_i adds
// neighbours, d_k drops the last; s_i inserts a zero at position i.
RotationWord rotation_face(const RotationWord& word, int i);
RotationWord rotation_degeneracy(const RotationWord& word, int i);

// Exhaustive simplicial compatibility of the rotation action in degrees <= max_degree,
// with words drawn from [-range, range]. Returns violations.
std::vector<std::string> rotation_action_violations(const FinGroup& G, const GSet& X, int max_degree, int range = 1);

}  // namespace inertia_lab
