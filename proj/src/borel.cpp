#include "inertia_lab/borel.hpp"

#include "inertia_lab/reduction.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace inertia_lab {

GSSet::GSSet(SSet base, const FinGroup& G, std::vector<std::vector<Simplex>> action)
    : base_(std::move(base)), G_(G), action_(std::move(action)) {
    if (action_.size() != G_.order()) throw std::invalid_argument("action needs one table per group element");
    for (const auto& row : action_)
        if (row.size() != base_.size()) throw std::invalid_argument("action table does not cover every cell");
}

Simplex GSSet::act(Elem g, const Simplex& s) const {
    Simplex t = action_[g][s.base];
    for (auto it = s.degeneracy_word.rbegin(); it != s.degeneracy_word.rend(); ++it) t = apply_degeneracy(t, *it);
    return t;
}

std::vector<std::string> GSSet::violations() const {
    std::vector<std::string> out;
    const auto where = [](Elem g, CellId c) { return "g=" + std::to_string(g) + " cell " + std::to_string(c); };
    for (CellId c = 0; c < base_.size(); ++c) {
        const int n = base_.dim(c);
        if (act(G_.identity(), c) != base_.cell(c)) out.push_back("identity moves cell " + std::to_string(c));
        for (Elem g = 0; g < G_.order(); ++g) {
            const Simplex gc = act(g, c);
            if (gc.dim != n) {
                out.push_back(where(g, c) + ": dimension changes");
                continue;
            }
            for (Elem h = 0; h < G_.order(); ++h)
                if (act(g, act(h, c)) != act(G_.mul(g, h), c)) out.push_back(where(g, c) + ": not a left action");
            for (int i = 0; n > 0 && i <= n; ++i)
                if (apply_face(base_, gc, i) != act(g, base_.face(c, i)))
                    out.push_back(where(g, c) + ": does not commute with d" + std::to_string(i));
        }
    }
    return out;
}

std::vector<CellId> GSSet::non_free_cells() const {
    std::vector<CellId> out;
    for (CellId c = 0; c < base_.size(); ++c)
        for (Elem g : G_.nontrivial())
            if (act(g, c) == base_.cell(c)) {
                out.push_back(c);
                break;
            }
    return out;
}

GSSet trivial_gsset(SSet X, const FinGroup& G) {
    std::vector<Simplex> row;
    for (CellId c = 0; c < X.size(); ++c) row.push_back(X.cell(c));
    std::vector<std::vector<Simplex>> action(G.order(), row);
    return GSSet(std::move(X), G, std::move(action));
}

GSSet discrete_gsset(const FinGroup& G, const GSet& X, int dim_bound) {
    SSet base(dim_bound);
    for (std::uint32_t x = 0; x < X.size; ++x) base.add_cell(0, {});
    std::vector<std::vector<Simplex>> action(G.order());
    for (Elem g = 0; g < G.order(); ++g)
        for (std::uint32_t x = 0; x < X.size; ++x) action[g].push_back(Simplex{0, X.act(g, x), {}});
    return GSSet(std::move(base), G, std::move(action));
}

namespace {

enum : std::uint32_t { kLeft = 0, kRight = 1, kBoth = 2 };

TupleModel::Code join_code(std::uint32_t tag, const Simplex& a, const Simplex& b) {
    return {tag, std::uint32_t(a.dim), a.base, a.word_mask(), std::uint32_t(b.dim), b.base, b.word_mask()};
}

Simplex left_of(const TupleModel::Code& t) { return Simplex::from_mask(int(t[1]), t[2], t[3]); }
Simplex right_of(const TupleModel::Code& t) { return Simplex::from_mask(int(t[4]), t[5], t[6]); }

TupleModel join_model(const SSet& A, const SSet& B, int dim_bound) {
    TupleModel model;
    model.dim_bound = dim_bound;
    const Simplex none{};
    model.enumerate = [&A, &B, none](int n, const std::function<void(const TupleModel::Code&)>& visit) {
        if (n <= A.dim_bound())
            for (CellId a : A.cells(n)) visit(join_code(kLeft, A.cell(a), none));
        if (n <= B.dim_bound())
            for (CellId b : B.cells(n)) visit(join_code(kRight, none, B.cell(b)));
        for (int i = 0; i < n; ++i) {
            const int j = n - 1 - i;
            if (i > A.dim_bound() || j > B.dim_bound()) continue;
            for (CellId a : A.cells(i))
                for (CellId b : B.cells(j)) visit(join_code(kBoth, A.cell(a), B.cell(b)));
        }
    };
    model.face = [&A, &B, none](const TupleModel::Code& t, int, int k) {
        const Simplex a = left_of(t), b = right_of(t);
        if (t[0] == kLeft) return join_code(kLeft, apply_face(A, a, k), none);
        if (t[0] == kRight) return join_code(kRight, none, apply_face(B, b, k));
        if (k <= a.dim) {
            if (a.dim == 0) return join_code(kRight, none, b);
            return join_code(kBoth, apply_face(A, a, k), b);
        }
        if (b.dim == 0) return join_code(kLeft, a, none);
        return join_code(kBoth, a, apply_face(B, b, k - a.dim - 1));
    };
    model.degeneracy = [none](const TupleModel::Code& t, int, int k) {
        const Simplex a = left_of(t), b = right_of(t);
        if (t[0] == kLeft) return join_code(kLeft, apply_degeneracy(a, k), none);
        if (t[0] == kRight) return join_code(kRight, none, apply_degeneracy(b, k));
        if (k <= a.dim) return join_code(kBoth, apply_degeneracy(a, k), b);
        return join_code(kBoth, a, apply_degeneracy(b, k - a.dim - 1));
    };
    return model;
}

}  // namespace

JoinSSet::JoinSSet(const SSet& A, const SSet& B, int dim_bound, std::size_t budget)
    : A_(&A), B_(&B), cells_(join_model(A, B, dim_bound), budget) {}

JoinSSet::Part JoinSSet::part(CellId c) const {
    const auto& t = cells_.tuple(c);
    return Part{Part::Kind(t[0]), left_of(t), right_of(t)};
}

Simplex JoinSSet::find(const Part& p) const {
    const Simplex none{};
    switch (p.kind) {
        case Part::Kind::left: return cells_.find(join_code(kLeft, p.left, none), p.left.dim);
        case Part::Kind::right: return cells_.find(join_code(kRight, none, p.right), p.right.dim);
        case Part::Kind::both: break;
    }
    return cells_.find(join_code(kBoth, p.left, p.right), p.left.dim + p.right.dim + 1);
}

SSet cyclic_polygon(std::size_t vertices, int dim_bound) {
    if (vertices == 0) throw std::invalid_argument("polygon without vertices");
    SSet X(dim_bound);
    for (std::size_t i = 0; i < vertices; ++i) X.add_cell(0, {}, "v" + std::to_string(i));
    for (std::size_t i = 0; i < vertices; ++i) {
        const CellId to = CellId((i + 1) % vertices), from = CellId(i);
        X.add_cell(1, {Simplex{0, to, {}}, Simplex{0, from, {}}}, "e" + std::to_string(i));
    }
    return X;
}

SSet zero_sphere(int dim_bound) {
    SSet X(dim_bound);
    X.add_cell(0, {}, "N");
    X.add_cell(0, {}, "S");
    return X;
}

std::size_t default_polygon_multiplier(std::size_t m) {
    if (m == 0) throw std::invalid_argument("cyclic group of order zero");
    return std::max<std::size_t>(1, (3 + m - 1) / m);
}

namespace {

// generator rotation on a polygon from cyclic_polygon: shift every vertex and edge by `steps`
Simplex rotate_polygon(std::size_t vertices, std::size_t steps, const Simplex& s) {
    Simplex out = s;
    const std::size_t local = s.base % vertices;
    out.base = CellId(s.base - local + (local + steps) % vertices);
    return out;
}

Simplex act_on_join(const JoinSSet& J, const std::function<Simplex(const Simplex&)>& left,
                    const std::function<Simplex(const Simplex&)>& right, CellId c) {
    JoinSSet::Part p = J.part(c);
    if (p.kind != JoinSSet::Part::Kind::right) p.left = left(p.left);
    if (p.kind != JoinSSet::Part::Kind::left) p.right = right(p.right);
    return J.find(p);
}

}  // namespace

SphereModel free_sphere_model(std::size_t m, std::size_t k) {
    if (m == 0 || k == 0) throw std::invalid_argument("sphere model needs m, k >= 1");
    const std::size_t N = k * m;
    if (N < 3) throw std::invalid_argument("sphere model needs k m >= 3, got " + std::to_string(N));
    const FinGroup G = cyclic_group(m);
    const SSet polygon = cyclic_polygon(N, 1);
    const JoinSSet J(polygon, polygon, 3);
    const SSet poles = zero_sphere(0);
    const JoinSSet S(J.sset(), poles, 4);
    const auto fixed = [](const Simplex& s) { return s; };

    std::vector<std::vector<Simplex>> join_action(m), action(m);
    for (Elem g = 0; g < m; ++g) {
        const auto rot = [&](const Simplex& s) { return rotate_polygon(N, g * k, s); };
        for (CellId c = 0; c < J.sset().size(); ++c) join_action[g].push_back(act_on_join(J, rot, rot, c));
        const auto on_join = [&](const Simplex& s) {
            Simplex t = join_action[g][s.base];
            for (auto it = s.degeneracy_word.rbegin(); it != s.degeneracy_word.rend(); ++it)
                t = apply_degeneracy(t, *it);
            return t;
        };
        for (CellId c = 0; c < S.sset().size(); ++c) action[g].push_back(act_on_join(S, on_join, fixed, c));
    }
    using Kind = JoinSSet::Part::Kind;
    const CellId north = S.find({Kind::right, {}, Simplex{0, 0, {}}}).base;
    const CellId south = S.find({Kind::right, {}, Simplex{0, 1, {}}}).base;
    return SphereModel{m, k, GSSet(S.sset(), G, std::move(action)), J.sset(), north, south};
}

namespace {

// X as a right ConstantGroup space: x . h = h^-1 x
struct RightSpace {
    using Cell = Simplex;
    const GSSet* X;

    Cell face(const Cell& c, int i) const { return apply_face(X->base(), c, i); }
    Cell degeneracy(const Cell& c, int i) const { return apply_degeneracy(c, i); }
    Cell act(const Cell& c, Elem h, int) const { return X->act(X->group().inv(h), c); }
};

using Cell = BorelCell<ConstantGroup, RightSpace>;

TupleModel::Code encode(const Cell& c) {
    TupleModel::Code t{c.base.base, c.base.word_mask()};
    t.insert(t.end(), c.tail.begin(), c.tail.end());
    return t;
}

Cell decode(const TupleModel::Code& t) {
    const int n = int(t.size()) - 2;
    return Cell{Simplex::from_mask(n, t[0], t[1]), std::vector<Elem>(t.begin() + 2, t.end())};
}

TupleModel borel_model(const GSSet& X, int dim_bound) {
    TupleModel model;
    model.dim_bound = dim_bound;
    const ConstantGroup grp(X.group());
    const RightSpace space{&X};
    model.enumerate = [&X](int n, const std::function<void(const TupleModel::Code&)>& visit) {
        const FinGroup& G = X.group();
        const std::size_t q = G.order();
        TupleModel::Code t(n + 2, 0);
        for (int d = 0; d <= std::min(n, X.base().dim_bound()); ++d) {
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (std::popcount(mask) != n - d) continue;
                for (CellId c : X.base().cells(d)) {
                    t[0] = c;
                    t[1] = mask;
                    // tails with no identity at a collapsed position
                    std::vector<Elem> tail(n, 0);
                    while (true) {
                        bool keep = true;
                        for (int i = 0; i < n && keep; ++i)
                            if (((mask >> i) & 1u) && tail[i] == G.identity()) keep = false;
                        if (keep) {
                            std::copy(tail.begin(), tail.end(), t.begin() + 2);
                            visit(t);
                        }
                        int p = n;
                        while (p > 0 && ++tail[p - 1] == q) tail[--p] = 0;
                        if (p == 0) break;
                    }
                }
            }
        }
    };
    model.enumerates_nondegenerate = true;
    // (x, tail) = s_I of the smaller cell, I = collapses of x where the tail has the identity
    model.normal_form = [e = X.group().identity()](const TupleModel::Code& t, int n) {
        std::uint32_t shared = 0;
        for (int i = 0; i < n; ++i)
            if (((t[1] >> i) & 1u) && t[2 + i] == e) shared |= 1u << i;
        if (shared == 0) return std::pair{t, shared};
        TupleModel::Code out{t[0], 0};
        int kept = 0;
        for (int i = 0; i < n; ++i) {
            if ((shared >> i) & 1u) continue;
            if ((t[1] >> i) & 1u) out[1] |= 1u << kept;
            out.push_back(t[2 + i]);
            ++kept;
        }
        return std::pair{out, shared};
    };
    model.face = [grp, space](const TupleModel::Code& t, int, int i) {
        return encode(borel_face(grp, space, decode(t), i));
    };
    model.degeneracy = [grp, space](const TupleModel::Code& t, int, int i) {
        return encode(borel_degeneracy(grp, space, decode(t), i));
    };
    return model;
}

}  // namespace

BorelSSet::BorelSSet(const GSSet& X, int dim_bound, std::size_t budget)
    : X_(&X), cells_(borel_model(X, dim_bound), budget) {}

Simplex BorelSSet::point_part(CellId c) const { return decode(cells_.tuple(c)).base; }

std::vector<Elem> BorelSSet::group_part(CellId c) const { return decode(cells_.tuple(c)).tail; }

Simplex BorelSSet::find(const Simplex& x, const std::vector<Elem>& tail) const {
    if (int(tail.size()) != x.dim) throw std::invalid_argument("Borel cell parts differ in degree");
    return cells_.find(encode(Cell{x, tail}), x.dim);
}

std::size_t borel_cell_count(const SSet& X, std::size_t group_order, int n) {
    std::size_t total = 0;
    for (int d = 0; d <= std::min(n, X.dim_bound()); ++d) {
        std::size_t choose = 1;
        for (int i = 0; i < d; ++i) choose = choose * (n - i) / (i + 1);
        std::size_t term = X.count(d) * choose;
        for (int i = 0; i < n - d; ++i) term *= group_order - 1;
        for (int i = 0; i < d; ++i) term *= group_order;
        total += term;
    }
    return total;
}

AbGroupPresentation borel_sphere_cohomology(std::size_t m, std::size_t k, int n, std::size_t budget) {
    if (n < 0 || n > 4) throw std::invalid_argument("Borel sphere cohomology is computed for degrees 0..4");
    const SphereModel model = free_sphere_model(m, k);
    const BorelSSet B(model.sphere, n + 1, budget);
    return reduced_cohomology(normalized_chains(B.sset()), n, Coefficients::Z());
}

namespace {

// Cochain on the non-degenerate n-cells of `target` pulled back along a cellwise map.
CoeffVector pull_back(const SSet& source, int n, const CoeffVector& cochain, const SSet& target,
                      const std::function<Simplex(CellId)>& map) {
    CoeffVector out{std::vector<Integer>(source.count(n), Integer(0)), cochain.den};
    for (CellId c : source.cells(n)) {
        const Simplex s = map(c);
        if (!s.is_degenerate()) out.num[source.index_in_dim(c)] = cochain.num[target.index_in_dim(s.base)];
    }
    return out;
}

bool is_unit_mod(const Integer& value, const Integer& modulus) {
    return gcd(value, modulus) == Integer(1);
}

}  // namespace

SesReport verify_ses(std::size_t m, std::size_t k, std::size_t budget) {
    SesReport report;
    report.m = m;
    report.k = k;
    const SphereModel model = free_sphere_model(m, k);
    const GSSet& X = model.sphere;
    const SSet& sphere = X.base();
    const FinGroup& G = X.group();
    const Integer order(static_cast<long>(m));

    const ChainComplex sphere_chains = normalized_chains(sphere);
    report.sphere_homology_ok = true;
    for (int n = 0; n <= 4; ++n) {
        const AbGroupPresentation h = homology(sphere_chains, n);
        const bool want_z = n == 0 || n == 4;
        if (!(h.torsion.empty() && h.free_rank == (want_z ? 1u : 0u))) report.sphere_homology_ok = false;
    }
    const auto fixed = X.non_free_cells();
    report.action_ok = X.violations().empty() && fixed == std::vector<CellId>{std::min(model.north, model.south),
                                                                           std::max(model.north, model.south)};

    const BorelSSet B(X, 5, budget);
    const SSet& borel = B.sset();
    report.euler_ok = true;
    for (int n = 0; n <= 5; ++n) {
        report.cell_counts.push_back(borel.count(n));
        if (borel.count(n) != borel_cell_count(sphere, m, n)) report.euler_ok = false;
    }
    // the degree 5 part is far too large for direct elimination, so reduce first
    const ReducedComplex R(normalized_chains(borel));
    const CochainComplex cochains = dual(R.complex());
    for (int n = 0; n < 4; ++n) report.cohomology.push_back(cohomology(cochains, n, Coefficients::Z()));
    const CohomologyModel H4(cochains.delta(3), cochains.delta(4), Coefficients::Z());
    const AbGroupPresentation& P = H4.presentation();
    report.cohomology.push_back(P);
    report.shape_ok = P.free_rank == 1 && P.torsion == std::vector<Integer>{order};
    if (!report.shape_ok) return report;
    std::vector<CoeffVector> generators;
    for (const auto& gen : H4.generators()) generators.push_back(CoeffVector{R.expand_cochain(4, gen.num), 1});
    const auto coordinates = [&](const CoeffVector& cocycle) {
        return H4.coordinates(CoeffVector{R.restrict_cochain(4, cocycle.num), cocycle.den});
    };

    // fiber inclusion x -> (x, e, ..., e)
    const CochainComplex sphere_cochains = dual(sphere_chains);
    const CohomologyModel S4(sphere_cochains.delta(3), sphere_cochains.delta(4), Coefficients::Z());
    const std::vector<Elem> units(4, G.identity());
    const auto fiber = [&](CellId c) { return B.find(sphere.cell(c), units); };
    for (const auto& gen : generators) {
        const ClassCoordinates c = S4.coordinates(pull_back(sphere, 4, gen, borel, fiber));
        report.fiber_restriction.push_back(c.free.at(0));
    }
    report.fiber_ok = report.fiber_restriction.size() == 2 && report.fiber_restriction[0] == Integer(0) &&
                      (report.fiber_restriction[1] == Integer(1) || report.fiber_restriction[1] == Integer(-1));

    // projection to W-bar G and sections through the poles
    const TupleSSet wbar = w_bar(G, 5, budget);
    const CochainComplex wbar_cochains = dual(normalized_chains(wbar.sset()));
    const CohomologyModel U(wbar_cochains.delta(3), wbar_cochains.delta(4), Coefficients::Z());
    if (U.presentation().torsion != std::vector<Integer>{order} || U.presentation().free_rank != 0) return report;
    const auto project = [&](CellId c) {
        const auto tail = B.group_part(c);
        return wbar.find(TupleModel::Code(tail.begin(), tail.end()), 4);
    };
    report.base_image = coordinates(pull_back(borel, 4, U.generators().at(0), wbar.sset(), project));
    report.base_ok = report.base_image.free.at(0) == Integer(0) && is_unit_mod(report.base_image.torsion.at(0), order);

    const auto section_through = [&](CellId pole) {
        const auto map = [&](CellId w) {
            const auto& code = wbar.tuple(w);
            return B.find(Simplex::from_mask(4, pole, 0b1111u), std::vector<Elem>(code.begin(), code.end()));
        };
        return U.coordinates(pull_back(wbar.sset(), 4, generators.at(0), borel, map));
    };
    report.north_section = section_through(model.north);
    report.south_section = section_through(model.south);
    report.split_ok = is_unit_mod(report.north_section.torsion.at(0), order);
    report.pole_swap_ok = is_unit_mod(report.south_section.torsion.at(0), order);
    return report;
}

}  // namespace inertia_lab
