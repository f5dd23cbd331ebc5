#pragma once

#include "inertia_lab/abelian.hpp"
#include "inertia_lab/chain.hpp"
#include "inertia_lab/config.hpp"
#include "inertia_lab/fin_group.hpp"
#include "inertia_lab/inertia.hpp"
#include "inertia_lab/w_construction.hpp"

#include <string>
#include <vector>

namespace inertia_lab {

// Left action of a finite group on a finite simplicial set, given on non-degenerate cells.
class GSSet {
public:
    // action[g][c] is g . c for every group element g and cell c of base.
    GSSet(SSet base, const FinGroup& G, std::vector<std::vector<Simplex>> action);

    const SSet& base() const { return base_; }
    const FinGroup& group() const { return G_; }
    Simplex act(Elem g, CellId c) const { return action_[g][c]; }
    // g . s for a possibly degenerate simplex; degeneracies commute with the action.
    Simplex act(Elem g, const Simplex& s) const;
    // Group laws and compatibility with faces, cell by cell.
    std::vector<std::string> violations() const;
    // Cells c with g . c == c for some g != e.
    std::vector<CellId> non_free_cells() const;

private:
    SSet base_;
    FinGroup G_;
    std::vector<std::vector<Simplex>> action_;
};

GSSet trivial_gsset(SSet X, const FinGroup& G);
// A finite G-set as a discrete simplicial set.
GSSet discrete_gsset(const FinGroup& G, const GSet& X, int dim_bound = kDefaultDimBound);

// Simplicial join; cells of the pure sides come first, then pairs (a, b) with
// dim a + dim b + 1 = n.
class JoinSSet {
public:
    struct Part {
        enum class Kind { left, right, both };
        Kind kind;
        Simplex left;
        Simplex right;
    };

    JoinSSet(const SSet& A, const SSet& B, int dim_bound, std::size_t budget = kDefaultSizeBudget);

    const SSet& sset() const { return cells_.sset(); }
    Part part(CellId c) const;
    Simplex find(const Part& p) const;

private:
    const SSet* A_;
    const SSet* B_;
    TupleSSet cells_;
};

// Polygon with vertices v_0..v_{N-1} and edges v_i -> v_{i+1 mod N}.
SSet cyclic_polygon(std::size_t vertices, int dim_bound = kDefaultDimBound);
// Two points.
SSet zero_sphere(int dim_bound = kDefaultDimBound);

struct SphereModel {
    std::size_t m = 0;
    std::size_t k = 0;
    GSSet sphere;  // suspension of the join, acted on by Z/m
    SSet join;       // the 3-sphere before suspension
    CellId north = 0;
    CellId south = 0;
};

std::size_t default_polygon_multiplier(std::size_t m);
// Suspension of (km-gon * km-gon), the generator rotating both polygons by k steps.
// Throws std::invalid_argument when k m < 3.
SphereModel free_sphere_model(std::size_t m, std::size_t k);

// (X x WG)/G, cells (x, gamma_{n-1}, ..., gamma_0) with x any n-simplex of X and the
// leading W-coordinate moved onto x.
class BorelSSet {
public:
    BorelSSet(const GSSet& X, int dim_bound, std::size_t budget = kDefaultSizeBudget);

    const SSet& sset() const { return cells_.sset(); }
    const GSSet& space() const { return *X_; }
    Simplex point_part(CellId c) const;
    std::vector<Elem> group_part(CellId c) const;
    Simplex find(const Simplex& x, const std::vector<Elem>& tail) const;

private:
    const GSSet* X_;
    TupleSSet cells_;
};

// Closed-form count of non-degenerate Borel n-cells: sum over d of |X_d| C(n, d) (|G|-1)^(n-d) |G|^d.
std::size_t borel_cell_count(const SSet& X, std::size_t group_order, int n);

AbGroupPresentation borel_sphere_cohomology(std::size_t m, std::size_t k, int n,
                                            std::size_t budget = kDefaultSizeBudget);

struct SesReport {
    std::size_t m = 0;
    std::size_t k = 0;
    std::vector<AbGroupPresentation> cohomology;  // H^0 .. H^4 of the Borel construction
    std::vector<std::size_t> cell_counts;         // non-degenerate Borel cells per degree
    bool sphere_homology_ok = false;              // underlying space has the homology of S^4
    bool action_ok = false;                       // action laws hold and cells off the poles are free
    bool shape_ok = false;                        // H^4 = Z + Z/m
    std::vector<Integer> fiber_restriction;       // image of each H^4 generator in H^4(S^4) = Z
    bool fiber_ok = false;                        // the Z summand maps to +-1, torsion to 0
    ClassCoordinates base_image;                  // pullback of the generator of H^4(Z/m)
    bool base_ok = false;                         // of order m, lands in torsion, hits a generator
    // Section W-bar G -> Borel through a fixed pole: the torsion generator pulls back to a
    // generator of H^4(Z/m). Checked through the north pole and again through the south pole.
    ClassCoordinates north_section;
    ClassCoordinates south_section;
    bool split_ok = false;
    bool pole_swap_ok = false;
    bool euler_ok = false;  // cell counts match the closed form, so the Euler sums agree

    bool ok() const {
        return sphere_homology_ok && action_ok && shape_ok && fiber_ok && base_ok && split_ok && pole_swap_ok &&
               euler_ok;
    }
};

SesReport verify_ses(std::size_t m, std::size_t k, std::size_t budget = kDefaultSizeBudget);

}  // namespace inertia_lab
