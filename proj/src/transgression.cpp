#include "inertia_lab/transgression.hpp"

#include <stdexcept>

namespace inertia_lab {

std::size_t InertiaIndex::count(int n, std::size_t budget) const {
    const std::size_t per = bar_.count(n, budget);
    if (per > budget / G_->order()) throw BudgetError("inertia cells in degree " + std::to_string(n), SIZE_MAX, budget);
    return per * G_->order();
}

std::optional<std::uint64_t> InertiaIndex::find(const InertiaCell& cell) const {
    const auto e = bar_.find(cell.edges);
    if (!e) return std::nullopt;
    return std::uint64_t(cell.loop) * bar_.count(cell.degree(), SIZE_MAX) + *e;
}

InertiaCell InertiaIndex::cell(int n, std::uint64_t index) const {
    const std::size_t per = bar_.count(n, SIZE_MAX);
    return InertiaCell{Elem(index / per), bar_.tuple(n, index % per)};
}

namespace {

void check_cochain(const FinGroup& G, const Cochain& c) {
    if (c.degree < 1) throw std::invalid_argument("transgression needs a cochain of degree >= 1");
    if (c.values.size() != BarIndex(G).count(c.degree, SIZE_MAX))
        throw std::invalid_argument("cochain size does not match its degree");
}

TransgressedCochain apply_operator(const IntMatrix& M, const Cochain& c) {
    return TransgressedCochain{c.degree - 1, c.coeffs, apply(M, c.values, c.coeffs)};
}

}  // namespace

IntMatrix transgression_operator(const FinGroup& G, int n, std::size_t budget, AdConvention convention,
                                 int global_sign) {
    if (n < 0) throw std::invalid_argument("negative degree");
    const InertiaIndex index(G);
    const BarIndex& bar = index.bar();
    const std::size_t rows = index.count(n, budget);
    const std::size_t cols = bar.count(n + 1, budget);
    std::vector<MatrixEntry> entries;
    for (std::size_t r = 0; r < rows; ++r) {
        const InertiaCell cell = index.cell(n, r);
        for (int j = 0; j <= n; ++j) {
            std::vector<Elem> tuple = evaluation_map(G, j, cell);
            if (convention == AdConvention::full && j > 0) {
                Elem full = G.identity();
                for (Elem g : cell.edges) full = G.mul(full, g);
                tuple[j] = G.conj(cell.loop, full);
            }
            const auto col = bar.find(tuple);
            if (!col) continue;
            entries.push_back({std::uint32_t(r), std::uint32_t(*col), Integer((j % 2 == 0 ? 1 : -1) * global_sign)});
        }
    }
    return IntMatrix::from_entries(rows, cols, std::move(entries));
}

std::vector<Elem> evaluate_product_cell(const FinGroup& G, const InertiaNerve& nerve, const Simplex& a,
                                        const Simplex& b) {
    if (a.dim != b.dim) throw std::invalid_argument("product components differ in dimension");
    const int m = b.dim;
    const InertiaCell base = nerve.cell(b.base);
    const OrdinalMap sb = b.collapse();
    InertiaCell full{base.loop, {}};
    for (int i = 0; i < m; ++i)
        full.edges.push_back(sb.images[i] == sb.images[i + 1] ? G.identity() : base.edges[sb.images[i]]);
    int jump = -1;
    if (a.base_dim() == 1) {
        const OrdinalMap sa = a.collapse();
        for (int i = 0; i < m; ++i)
            if (sa.images[i] != sa.images[i + 1]) jump = i;
    }
    std::vector<Elem> out = full.edges;
    if (jump >= 0) out[jump] = G.mul(inertia_object(G, full, jump), full.edges[jump]);
    return out;
}

IntMatrix pipeline_operator(const FinGroup& G, int n, std::size_t budget) {
    if (n < 0) throw std::invalid_argument("negative degree");
    const InertiaIndex index(G);
    const BarIndex& bar = index.bar();
    const std::size_t rows = index.count(n, budget);
    const std::size_t cols = bar.count(n + 1, budget);
    index.count(n + 1, budget);
    const SSet circle = minimal_circle(n + 1);
    const InertiaNerve nerve(G, n + 1);
    const ProductSSet P(circle, nerve.sset(), n + 1);
    const CellId loop = circle.cells(1)[0];
    std::vector<MatrixEntry> entries;
    for (std::size_t r = 0; r < rows; ++r) {
        const Simplex s = nerve.find(index.cell(n, r));
        if (s.is_degenerate()) throw std::logic_error("normalized inertia cell came back degenerate");
        for (const auto& [id, coeff] : ez_map(P, loop, 1, s.base, n)) {
            const auto tuple = evaluate_product_cell(G, nerve, P.left(id), P.right(id));
            const auto col = bar.find(tuple);
            if (col) entries.push_back({std::uint32_t(r), std::uint32_t(*col), coeff});
        }
    }
    return IntMatrix::from_entries(rows, cols, std::move(entries));
}

IntMatrix inertia_coboundary(const FinGroup& G, int n, std::size_t budget) {
    if (n < 0) throw std::invalid_argument("negative degree");
    const InertiaIndex index(G);
    const std::size_t rows = index.count(n + 1, budget);
    const std::size_t cols = index.count(n, budget);
    std::vector<MatrixEntry> entries;
    for (std::size_t r = 0; r < rows; ++r) {
        const InertiaCell cell = index.cell(n + 1, r);
        for (int i = 0; i <= n + 1; ++i) {
            const auto col = index.find(inertia_face(G, cell, i));
            if (col) entries.push_back({std::uint32_t(r), std::uint32_t(*col), Integer(i % 2 == 0 ? 1 : -1)});
        }
    }
    return IntMatrix::from_entries(rows, cols, std::move(entries));
}

TransgressedCochain transgress(const FinGroup& G, const Cochain& c, std::size_t budget) {
    check_cochain(G, c);
    return apply_operator(transgression_operator(G, c.degree - 1, budget), c);
}

TransgressedCochain transgress_pipeline(const FinGroup& G, const Cochain& c, std::size_t budget) {
    check_cochain(G, c);
    return apply_operator(pipeline_operator(G, c.degree - 1, budget), c);
}

TransgressedCochain coboundary(const FinGroup& G, const TransgressedCochain& t, std::size_t budget) {
    const IntMatrix delta = inertia_coboundary(G, t.degree, budget);
    if (delta.cols() != t.values.size()) throw std::invalid_argument("cochain size does not match its degree");
    return TransgressedCochain{t.degree + 1, t.coeffs, apply(delta, t.values, t.coeffs)};
}

Cochain sector_restriction(const FinGroup& G, const TransgressedCochain& t, Elem sector) {
    const ConjClassData cls = conjugacy_classes(G);
    if (sector >= G.order() || cls.class_reps[cls.class_of[sector]] != sector)
        throw std::invalid_argument("not a conjugacy class representative: " + std::to_string(sector));
    const Subgroup& C = cls.centralizers[cls.class_of[sector]];
    const InertiaIndex index(G);
    if (t.values.size() != index.count(t.degree, SIZE_MAX))
        throw std::invalid_argument("transgressed cochain size does not match its degree");
    std::vector<Elem> parent(t.degree);
    return make_cochain(
        C.group, t.degree, t.coeffs,
        [&](std::span<const Elem> local) {
            for (int i = 0; i < t.degree; ++i) parent[i] = C.embedding[local[i]];
            return t.values.num[*index.find(InertiaCell{sector, parent})];
        },
        t.values.den);
}

TransgressionMatrix transgression_matrix(const FinGroup& G, int n, const Coefficients& A, std::size_t budget) {
    if (n < 0) throw std::invalid_argument("negative degree");
    TransgressionMatrix out;
    out.degree = n;
    out.coeffs = A;
    const CohomologyBasis source(G, n + 1, A, budget);
    out.source = source.presentation();
    const auto gens = source.generators();
    const IntMatrix T = transgression_operator(G, n, budget);
    std::vector<TransgressedCochain> images;
    for (const auto& c : gens) images.push_back(apply_operator(T, c));
    out.entries.clear();
    const ConjClassData cls = conjugacy_classes(G);
    for (std::size_t s = 0; s < cls.class_reps.size(); ++s) {
        const Elem g = cls.class_reps[s];
        const CohomologyBasis target(cls.centralizers[s].group, n, A, budget);
        out.sectors.push_back(g);
        out.targets.push_back(target.presentation());
        std::vector<ClassCoordinates> coords;
        for (const auto& t : images) coords.push_back(target.class_of(sector_restriction(G, t, g)));
        const auto& P = target.presentation();
        auto add_row = [&](const std::string& label, auto&& pick) {
            out.row_labels.push_back("g=" + G.label(g) + " " + label);
            std::vector<mpq_class> row;
            for (const auto& c : coords) row.push_back(pick(c));
            out.entries.push_back(std::move(row));
        };
        for (std::size_t k = 0; k < P.torsion.size(); ++k)
            add_row("Z/" + P.torsion[k].str(), [k](const ClassCoordinates& c) { return mpq_class(c.torsion[k].to_mpz()); });
        for (std::size_t k = 0; k < P.free_rank; ++k)
            add_row("Z", [k](const ClassCoordinates& c) { return mpq_class(c.free[k].to_mpz()); });
        for (std::size_t k = 0; k < P.divisible_rank; ++k)
            add_row("Q/Z", [k](const ClassCoordinates& c) { return c.divisible[k]; });
    }
    return out;
}

}  // namespace inertia_lab
