#pragma once

#include "inertia_lab/group_cohomology.hpp"
#include "inertia_lab/inertia.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace inertia_lab {

// Normalized inertia n-cells (gamma; g_{n-1}, ..., g_0), no identity edges,
// indexed gamma * (|G|-1)^n + bar index of the edges.
class InertiaIndex {
public:
    explicit InertiaIndex(const FinGroup& G) : G_(&G), bar_(G) {}

    std::size_t count(int n, std::size_t budget = kDefaultSizeBudget) const;
    std::optional<std::uint64_t> find(const InertiaCell& cell) const;
    InertiaCell cell(int n, std::uint64_t index) const;
    const BarIndex& bar() const { return bar_; }

private:
    const FinGroup* G_;
    BarIndex bar_;
};

struct TransgressedCochain {
    int degree = 0;
    Coefficients coeffs;
    CoeffVector values;  // indexed by InertiaIndex
};

// Which conjugator enters Ad_j: the partial product g_{n-1} ... g_{n-j}, or the
// full product g_{n-1} ... g_0 (kept only to show that it breaks the identities).
enum class AdConvention { partial, full };

// Rows: inertia n-cells. Columns: bar (n+1)-tuples. Entry: signed count of
// evaluation_map terms landing on the tuple.
IntMatrix transgression_operator(const FinGroup& G, int n, std::size_t budget = kDefaultSizeBudget,
                                 AdConvention convention = AdConvention::partial, int global_sign = 1);

// Same shape, built from ez_map(l (x) cell) in S^1_min x inertia nerve followed by
// evaluation of each product cell into W-bar G.
IntMatrix pipeline_operator(const FinGroup& G, int n, std::size_t budget = kDefaultSizeBudget);

// Bar (n+1)-tuple obtained by evaluating a product simplex (a, b) of S^1_min x inertia nerve.
// a is a simplex of the minimal circle, b an inertia simplex of the same dimension.
std::vector<Elem> evaluate_product_cell(const FinGroup& G, const InertiaNerve& nerve, const Simplex& a,
                                        const Simplex& b);

// delta on inertia cochains: rows (n+1)-cells, columns n-cells, sum of (-1)^i d_i.
IntMatrix inertia_coboundary(const FinGroup& G, int n, std::size_t budget = kDefaultSizeBudget);

TransgressedCochain transgress(const FinGroup& G, const Cochain& c, std::size_t budget = kDefaultSizeBudget);
TransgressedCochain transgress_pipeline(const FinGroup& G, const Cochain& c, std::size_t budget = kDefaultSizeBudget);
TransgressedCochain coboundary(const FinGroup& G, const TransgressedCochain& t,
                               std::size_t budget = kDefaultSizeBudget);

// Restriction along B C_g -> Lambda BG, as a cochain on the centralizer group
// (local element indices of conjugacy_classes(G).centralizers).
Cochain sector_restriction(const FinGroup& G, const TransgressedCochain& t, Elem sector);

struct TransgressionMatrix {
    int degree = 0;  // n; the source is H^{n+1}(G; A)
    Coefficients coeffs;
    AbGroupPresentation source;
    std::vector<Elem> sectors;
    std::vector<AbGroupPresentation> targets;  // H^n(C_g; A) per sector
    // entries[r][c]: coordinate r of the image of source generator c; rows run over the
    // sectors in order, torsion then free then divisible coordinates (the last are in [0,1)).
    std::vector<std::vector<mpq_class>> entries;
    std::vector<std::string> row_labels;
};

// H^{n+1}(G; A) -> sum over sectors of H^n(C_g; A) in the computed bases.
TransgressionMatrix transgression_matrix(const FinGroup& G, int n, const Coefficients& A,
                                         std::size_t budget = kDefaultSizeBudget);

}  // namespace inertia_lab
