#include "inertia_lab/w_construction.hpp"

#include "inertia_lab/config.hpp"

#include <bit>

namespace inertia_lab {

ResolvedElement ResolvedCentralizer::identity(int k) const {
    return ResolvedElement{G->identity(), 0, std::vector<std::int64_t>(k, 0)};
}

ResolvedElement ResolvedCentralizer::mul(const Element& a, const Element& b, int k) const {
    if (static_cast<int>(a.ints.size()) != k || static_cast<int>(b.ints.size()) != k)
        throw std::invalid_argument("resolved element has the wrong degree");
    Element out{G->mul(a.h, b.h), a.r + b.r, a.ints};
    for (int i = 0; i < k; ++i) out.ints[i] += b.ints[i];
    return out;
}

ResolvedElement ResolvedCentralizer::face(const Element& a, int k, int i) const {
    if (k < 1 || i < 0 || i > k) throw std::out_of_range("face index out of range");
    Element out{a.h, a.r, {}};
    if (i == 0) {
        const std::int64_t n = a.ints.front();
        out.h = G->mul(G->pow(loop, -n), a.h);
        out.r += n;
        out.ints.assign(a.ints.begin() + 1, a.ints.end());
    } else {
        out.ints = IntegerNerve{}.face(a.ints, k, i);
    }
    return out;
}

ResolvedElement ResolvedCentralizer::degeneracy(const Element& a, int k, int i) const {
    return Element{a.h, a.r, IntegerNerve{}.degeneracy(a.ints, k, i)};
}

IntWord IntegerNerve::mul(const Element& a, const Element& b, int k) const {
    if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != k)
        throw std::invalid_argument("integer word has the wrong degree");
    Element out = a;
    for (int i = 0; i < k; ++i) out[i] += b[i];
    return out;
}

IntWord IntegerNerve::face(const Element& a, int k, int i) const {
    if (k < 1 || i < 0 || i > k || static_cast<int>(a.size()) != k) throw std::out_of_range("face index out of range");
    if (i == 0) return Element(a.begin() + 1, a.end());
    if (i == k) return Element(a.begin(), a.end() - 1);
    Element out;
    out.reserve(k - 1);
    for (int j = 0; j < k; ++j) {
        if (j == i - 1) {
            out.push_back(a[j] + a[j + 1]);
            ++j;
        } else {
            out.push_back(a[j]);
        }
    }
    return out;
}

IntWord IntegerNerve::degeneracy(const Element& a, int k, int i) const {
    if (i < 0 || i > k || static_cast<int>(a.size()) != k) throw std::out_of_range("degeneracy index out of range");
    Element out = a;
    out.insert(out.begin() + i, 0);
    return out;
}

std::size_t TupleHash::operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (std::uint32_t x : v) h = h * 1000003u ^ (x + 0x9e3779b9u + (h << 6) + (h >> 2));
    return h;
}

TupleSSet::TupleSSet(TupleModel model, std::size_t budget)
    : model_(std::move(model)), sset_(model_.dim_bound), index_(model_.dim_bound + 1) {
    for (int n = 0; n <= model_.dim_bound; ++n) {
        model_.enumerate(n, [&](const TupleModel::Code& t) {
            if (n > 0 && !model_.enumerates_nondegenerate && is_degenerate(t, n)) return;
            if (index_[n].count(t)) return;
            if (tuples_.size() >= budget) throw BudgetError("simplicial set cells", tuples_.size() + 1, budget);
            std::vector<Simplex> faces;
            if (n > 0) {
                faces.reserve(n + 1);
                for (int i = 0; i <= n; ++i) faces.push_back(find(model_.face(t, n, i), n - 1));
            }
            const CellId id = sset_.add_cell(n, std::move(faces));
            index_[n].emplace(t, id);
            if (tuples_.size() <= id) tuples_.resize(id + 1);
            tuples_[id] = t;
        });
    }
}

bool TupleSSet::is_degenerate(const TupleModel::Code& t, int degree) const {
    for (int i = 0; i < degree; ++i)
        if (model_.degeneracy(model_.face(t, degree, i), degree - 1, i) == t) return true;
    return false;
}

Simplex TupleSSet::find(const TupleModel::Code& t, int degree) const {
    if (model_.normal_form) {
        const auto [code, mask] = model_.normal_form(t, degree);
        const int base_degree = degree - std::popcount(mask);
        const auto it = index_.at(base_degree).find(code);
        if (it == index_[base_degree].end()) throw std::out_of_range("tuple is not a cell of the model");
        return Simplex::from_mask(degree, it->second, mask);
    }
    for (int i = 0; i < degree; ++i) {
        auto lower = model_.face(t, degree, i);
        if (model_.degeneracy(lower, degree - 1, i) == t) return apply_degeneracy(find(lower, degree - 1), i);
    }
    const auto it = index_.at(degree).find(t);
    if (it == index_[degree].end()) throw std::out_of_range("tuple is not a cell of the model");
    return Simplex{degree, it->second, {}};
}

namespace {

void for_each_group_tuple(std::size_t order, int length, const std::function<void(const TupleModel::Code&)>& visit) {
    TupleModel::Code t(length, 0);
    if (order == 0) return;
    while (true) {
        visit(t);
        int p = length;
        while (p > 0 && ++t[p - 1] == order) t[--p] = 0;
        if (p == 0) return;
    }
}

}  // namespace

TupleModel w_model(const FinGroup& G, int dim_bound) {
    const ConstantGroup grp(G);
    TupleModel m;
    m.dim_bound = dim_bound;
    m.enumerate = [&G](int n, const std::function<void(const TupleModel::Code&)>& visit) {
        for_each_group_tuple(G.order(), n + 1, visit);
    };
    m.face = [grp](const TupleModel::Code& t, int, int i) { return w_face(grp, t, i); };
    m.degeneracy = [grp](const TupleModel::Code& t, int, int i) { return w_degeneracy(grp, t, i); };
    return m;
}

TupleModel w_bar_model(const FinGroup& G, int dim_bound) {
    const ConstantGroup grp(G);
    TupleModel m;
    m.dim_bound = dim_bound;
    m.enumerate = [&G](int n, const std::function<void(const TupleModel::Code&)>& visit) {
        for_each_group_tuple(G.order(), n, visit);
    };
    // quotient of WG: prepend the identity, act, drop the lead again
    auto lift = [&G](const TupleModel::Code& t) {
        TupleModel::Code w{G.identity()};
        w.insert(w.end(), t.begin(), t.end());
        return w;
    };
    m.face = [grp, lift](const TupleModel::Code& t, int, int i) {
        const auto w = w_face(grp, lift(t), i);
        return TupleModel::Code(w.begin() + 1, w.end());
    };
    m.degeneracy = [grp, lift](const TupleModel::Code& t, int, int i) {
        const auto w = w_degeneracy(grp, lift(t), i);
        return TupleModel::Code(w.begin() + 1, w.end());
    };
    return m;
}

WComplex w_complex(const FinGroup& G, int dim_bound, std::size_t budget) {
    return WComplex(w_model(G, dim_bound), budget);
}

TupleSSet w_bar(const FinGroup& G, int dim_bound, std::size_t budget) {
    return TupleSSet(w_bar_model(G, dim_bound), budget);
}

FiniteGroupoid action_groupoid(const FinGroup& G) {
    const std::size_t n = G.order();
    FiniteGroupoid out;
    out.object_count = n;
    for (Elem x = 0; x < n; ++x) {
        out.identity.push_back(std::uint32_t(x * n + G.identity()));
        for (Elem h = 0; h < n; ++h) {
            out.source.push_back(x);
            out.target.push_back(G.mul(x, h));
        }
    }
    out.compose = [&G, n](std::uint32_t a, std::uint32_t b) {
        return std::uint32_t((a / n) * n + G.mul(a % n, b % n));
    };
    return out;
}

}  // namespace inertia_lab
