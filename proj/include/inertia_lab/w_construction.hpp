#pragma once

#include "inertia_lab/fin_group.hpp"
#include "inertia_lab/inertia.hpp"
#include "inertia_lab/simplicial.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <stdexcept>
#include <vector>

namespace inertia_lab {

// A degreewise simplicial group is any type with
//   using Element = ...;
//   Element identity(int k) const;
//   Element mul(const Element&, const Element&, int k) const;
//   Element face(const Element&, int k, int i) const;        // G_k -> G_{k-1}
//   Element degeneracy(const Element&, int k, int i) const;  // G_k -> G_{k+1}
//
// A W-cell of degree n is (gamma_n, ..., gamma_0) with gamma_j in G_j, stored
// with coords[0] = gamma_n.
template <class Grp>
using WTuple = std::vector<typename Grp::Element>;

template <class Grp>
WTuple<Grp> w_face(const Grp& grp, const WTuple<Grp>& cell, int i) {
    const int n = static_cast<int>(cell.size()) - 1;
    if (n < 1 || i < 0 || i > n) throw std::out_of_range("W face index out of range");
    WTuple<Grp> out;
    out.reserve(n);
    if (i == n) {
        for (int j = 0; j < n; ++j) out.push_back(grp.face(cell[j], n - j, n - j));
        return out;
    }
    // gamma_{n-j} picks up d_{i-j} for j < i; slot n-i is absorbed into the next one
    for (int j = 0; j < i; ++j) out.push_back(grp.face(cell[j], n - j, i - j));
    out.push_back(grp.mul(grp.face(cell[i], n - i, 0), cell[i + 1], n - i - 1));
    for (int j = i + 2; j <= n; ++j) out.push_back(cell[j]);
    return out;
}

template <class Grp>
WTuple<Grp> w_degeneracy(const Grp& grp, const WTuple<Grp>& cell, int i) {
    const int n = static_cast<int>(cell.size()) - 1;
    if (n < 0 || i < 0 || i > n) throw std::out_of_range("W degeneracy index out of range");
    WTuple<Grp> out;
    out.reserve(n + 2);
    for (int j = 0; j <= i; ++j) out.push_back(grp.degeneracy(cell[j], n - j, i - j));
    out.push_back(grp.identity(n - i));
    for (int j = i + 1; j <= n; ++j) out.push_back(cell[j]);
    return out;
}

// Left multiplication on the leading coordinate.
template <class Grp>
WTuple<Grp> w_act(const Grp& grp, const typename Grp::Element& a, WTuple<Grp> cell) {
    const int n = static_cast<int>(cell.size()) - 1;
    cell[0] = grp.mul(a, cell[0], n);
    return cell;
}

// (K x WG)/G for a right G-space K, with orbits normalized to leading W-coordinate e.
// Space provides
//   using Cell = ...;
//   Cell face(const Cell&, int i) const;  Cell degeneracy(const Cell&, int i) const;
//   Cell act(const Cell&, const Element&, int k) const;  // right action of G_k
template <class Grp, class Space>
struct BorelCell {
    typename Space::Cell base;
    std::vector<typename Grp::Element> tail;  // gamma_{n-1}, ..., gamma_0

    int degree() const { return static_cast<int>(tail.size()); }
    friend bool operator==(const BorelCell&, const BorelCell&) = default;
};

template <class Grp, class Space>
BorelCell<Grp, Space> borel_normalize(const Grp&, const Space& space, typename Space::Cell base,
                                      const WTuple<Grp>& w) {
    const int n = static_cast<int>(w.size()) - 1;
    BorelCell<Grp, Space> out{space.act(base, w[0], n), {}};
    out.tail.assign(w.begin() + 1, w.end());
    return out;
}

template <class Grp, class Space>
WTuple<Grp> borel_w_part(const Grp& grp, const BorelCell<Grp, Space>& cell) {
    WTuple<Grp> w;
    w.reserve(cell.tail.size() + 1);
    w.push_back(grp.identity(cell.degree()));
    w.insert(w.end(), cell.tail.begin(), cell.tail.end());
    return w;
}

template <class Grp, class Space>
BorelCell<Grp, Space> borel_face(const Grp& grp, const Space& space, const BorelCell<Grp, Space>& cell, int i) {
    return borel_normalize(grp, space, space.face(cell.base, i), w_face(grp, borel_w_part(grp, cell), i));
}

template <class Grp, class Space>
BorelCell<Grp, Space> borel_degeneracy(const Grp& grp, const Space& space, const BorelCell<Grp, Space>& cell,
                                       int i) {
    return borel_normalize(grp, space, space.degeneracy(cell.base, i), w_degeneracy(grp, borel_w_part(grp, cell), i));
}

// The constant simplicial group on a finite group.
struct ConstantGroup {
    using Element = Elem;
    const FinGroup* G;

    explicit ConstantGroup(const FinGroup& group) : G(&group) {}
    Element identity(int) const { return G->identity(); }
    Element mul(Element a, Element b, int) const { return G->mul(a, b); }
    Element face(Element a, int, int) const { return a; }
    Element degeneracy(Element a, int, int) const { return a; }
};

// C_g x Q x Z^k in degree k. ints = (n_{k,k-1}, ..., n_{k,0}).
struct ResolvedElement {
    Elem h = 0;
    mpq_class r = 0;
    std::vector<std::int64_t> ints;
    friend bool operator==(const ResolvedElement&, const ResolvedElement&) = default;
};

// d_0 twists by g^{-n} and moves n into the rational slot, middle faces add
// neighbouring integers, d_k drops the last one, s_i inserts a zero at i.
struct ResolvedCentralizer {
    using Element = ResolvedElement;
    const FinGroup* G;
    Elem loop;

    ResolvedCentralizer(const FinGroup& group, Elem g) : G(&group), loop(g) {}
    Element identity(int k) const;
    Element mul(const Element& a, const Element& b, int k) const;
    Element face(const Element& a, int k, int i) const;
    Element degeneracy(const Element& a, int k, int i) const;
};

using IntWord = std::vector<std::int64_t>;

// Z^k in degree k, the nerve of BZ.
struct IntegerNerve {
    using Element = IntWord;

    Element identity(int k) const { return Element(k, 0); }
    Element mul(const Element& a, const Element& b, int k) const;
    Element face(const Element& a, int k, int i) const;
    Element degeneracy(const Element& a, int k, int i) const;
};

// X^g as a constant simplicial set with x.(h, r, n) = x.h.
struct FixedLocus {
    using Cell = std::uint32_t;
    const FinGroup* G;
    const GSet* X;

    Cell face(Cell x, int) const { return x; }
    Cell degeneracy(Cell x, int) const { return x; }
    Cell act(Cell x, const ResolvedElement& a, int) const { return X->right_act(*G, x, a.h); }
};

// Skeletal inertia cells (x; h_{n-1}, ..., h_0) of X^g // C_g with the rotation action.
struct SkeletalSector {
    using Cell = SkeletalCell;
    const FinGroup* G;
    const GSet* X;
    Elem loop;

    Cell face(const Cell& c, int i) const { return skeletal_face(*G, *X, c, i); }
    Cell degeneracy(const Cell& c, int i) const { return skeletal_degeneracy(*G, c, i); }
    Cell act(const Cell& c, const IntWord& w, int) const { return rotate_cell(*G, loop, c, RotationWord{w}); }
};

// Left G-set viewed as a right ConstantGroup space via x.h = h^-1 x.
struct ConstantGSet {
    using Cell = std::uint32_t;
    const FinGroup* G;
    const GSet* X;

    Cell face(Cell x, int) const { return x; }
    Cell degeneracy(Cell x, int) const { return x; }
    Cell act(Cell x, Elem h, int) const { return X->right_act(*G, x, h); }
};

struct TupleHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const;
};

// Simplicial set on integer-coded tuples. enumerate lists candidate codes per
// degree; a code c of degree n is degenerate when c == s_i d_i c for some i, so
// only face and degeneracy maps are needed.
struct TupleModel {
    using Code = std::vector<std::uint32_t>;
    int dim_bound = 0;
    std::function<void(int, const std::function<void(const Code&)>&)> enumerate;
    std::function<Code(const Code&, int, int)> face;        // (code, degree, i)
    std::function<Code(const Code&, int, int)> degeneracy;  // (code, degree, i)
    // Optional shortcut: the non-degenerate code under a possibly degenerate one and the
    // collapse mask relating them.
    std::function<std::pair<Code, std::uint32_t>(const Code&, int)> normal_form;
    // enumerate already skips degenerate codes
    bool enumerates_nondegenerate = false;
};

class TupleSSet {
public:
    // Throws BudgetError when the number of non-degenerate cells exceeds budget.
    TupleSSet(TupleModel model, std::size_t budget);

    const SSet& sset() const { return sset_; }
    const TupleModel& model() const { return model_; }
    const TupleModel::Code& tuple(CellId c) const { return tuples_.at(c); }
    bool is_degenerate(const TupleModel::Code& t, int degree) const;
    // Normal form of a possibly degenerate tuple; throws if the base is unknown.
    Simplex find(const TupleModel::Code& t, int degree) const;

private:
    TupleModel model_;
    SSet sset_;
    std::vector<TupleModel::Code> tuples_;
    std::vector<std::unordered_map<TupleModel::Code, CellId, TupleHash>> index_;
};

using WComplex = TupleSSet;

// WG for a finite group: cells (gamma_n, ..., gamma_0) in G^{n+1}.
TupleModel w_model(const FinGroup& G, int dim_bound);
// W-bar G = WG/G: cells (gamma_{n-1}, ..., gamma_0) in G^n.
TupleModel w_bar_model(const FinGroup& G, int dim_bound);

WComplex w_complex(const FinGroup& G, int dim_bound, std::size_t budget);
TupleSSet w_bar(const FinGroup& G, int dim_bound, std::size_t budget);

// Nerve of the action groupoid G x G => G, g -> g h; used to cross-check WG.
FiniteGroupoid action_groupoid(const FinGroup& G);

}  // namespace inertia_lab
