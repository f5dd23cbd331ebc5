#pragma once

#include "inertia_lab/inertia.hpp"
#include "inertia_lab/w_construction.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace inertia_lab {

inline constexpr int kMaxComparisonDegree = 4;

// Cell of the GRH model in degree n: sector g, x in X^g, slots[0] in C_g x Q x Z^{n-1},
// ..., slots[n-1] in C_g x Q.
struct GrhCell {
    Elem sector = 0;
    std::uint32_t point = 0;
    std::vector<ResolvedElement> slots;

    int degree() const { return static_cast<int>(slots.size()); }
    std::string str() const;
    friend bool operator==(const GrhCell&, const GrhCell&) = default;
};

// Cell of the cyclification model in degree n: sector g, x in X^g, edges (h_{n-1}, ..., h_0)
// in C_g, words[0] in Z^{n-1}, ..., words[n-1] in Z^0.
struct CycCell {
    Elem sector = 0;
    std::uint32_t point = 0;
    std::vector<Elem> edges;
    std::vector<IntWord> words;

    int degree() const { return static_cast<int>(edges.size()); }
    std::string str() const;
    friend bool operator==(const CycCell&, const CycCell&) = default;
};

struct SectorData {
    Elem rep = 0;
    std::vector<Elem> centralizer;         // parent indices
    std::vector<std::uint32_t> fixed_points;  // X^g
};

// Finite data of a model: per conjugacy class, C_g and X^g. Faces and degeneracies
// come from the W-construction and the Borel quotient.
class GrhModel {
public:
    GrhModel(const FinGroup& G, const GSet& X, int max_degree);

    const FinGroup& group() const { return *G_; }
    const GSet& gset() const { return *X_; }
    int max_degree() const { return max_degree_; }
    const std::vector<SectorData>& sectors() const { return sectors_; }
    GrhCell face(const GrhCell& c, int i) const;
    GrhCell degeneracy(const GrhCell& c, int i) const;
    // Number of cells in degree n once the rational and integer coordinates are forgotten.
    std::size_t finite_cell_count(int n) const;
    std::vector<std::string> cell_violations(const GrhCell& c) const;

private:
    const FinGroup* G_;
    const GSet* X_;
    int max_degree_;
    std::vector<SectorData> sectors_;
};

class CycModel {
public:
    CycModel(const FinGroup& G, const GSet& X, int max_degree);

    const FinGroup& group() const { return *G_; }
    const std::vector<SectorData>& sectors() const { return sectors_; }
    CycCell face(const CycCell& c, int i) const;
    CycCell degeneracy(const CycCell& c, int i) const;
    std::size_t finite_cell_count(int n) const;
    std::vector<std::string> cell_violations(const CycCell& c) const;

private:
    const FinGroup* G_;
    const GSet* X_;
    int max_degree_;
    std::vector<SectorData> sectors_;
};

GrhModel grh_inertia(const FinGroup& G, const GSet& X, int max_degree);
CycModel cyclification_model(const FinGroup& G, const GSet& X, int max_degree);

// h_j -> h_j g^{-sum_{k>j} n_{k,j}}, integers kept, rationals forgotten.
CycCell comparison_morphism(const FinGroup& G, const GrhCell& c);

// The maps as printed in the comparison diagrams, written out per degree
// (faces 1..4, degeneracies 0..3, comparison 0..4), with misprints corrected.
GrhCell printed_grh_face(const FinGroup& G, const GSet& X, const GrhCell& c, int i);
GrhCell printed_grh_degeneracy(const FinGroup& G, const GrhCell& c, int i);
CycCell printed_cyc_face(const FinGroup& G, const GSet& X, const CycCell& c, int i);
CycCell printed_cyc_degeneracy(const FinGroup& G, const CycCell& c, int i);
CycCell printed_comparison(const FinGroup& G, const GrhCell& c);

struct ComparisonOptions {
    int max_degree = kMaxComparisonDegree;
    int samples = 2;           // integer/rational samples per finite cell
    std::int64_t int_range = 3;  // integers drawn from [-int_range, int_range]
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct ComparisonReport {
    std::size_t cells_checked = 0;
    std::size_t squares_checked = 0;     // comp(d c) = d comp(c) and comp(s c) = s comp(c)
    std::size_t printed_checked = 0;     // derived map == printed map, both sides and comp
    std::size_t bijection_checks = 0;    // (sector, x, integer sample) fibers checked
    std::vector<std::string> failures;   // sorted by cell

    bool ok() const { return failures.empty(); }
};

ComparisonReport verify_comparison(const FinGroup& G, const GSet& X, const ComparisonOptions& options = {});

}  // namespace inertia_lab
