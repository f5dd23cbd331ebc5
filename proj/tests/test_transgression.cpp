#include "inertia_lab/io.hpp"
#include "inertia_lab/transgression.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace inertia_lab;

namespace {

// tr o delta == sign * delta o tr on the cochain level.
bool commutes_with_coboundary(const FinGroup& G, int n, const IntMatrix& lower, const IntMatrix& upper, int sign) {
    const IntMatrix left = inertia_coboundary(G, n) * lower;
    IntMatrix right = upper * bar_coboundary(G, n + 1);
    if (sign < 0) right = IntMatrix::from_entries(right.rows(), right.cols(), [&] {
        std::vector<MatrixEntry> e(right.entries().begin(), right.entries().end());
        for (auto& x : e) x.value = -x.value;
        return e;
    }());
    return left == right;
}

Cochain random_cochain(const FinGroup& G, int n, const Coefficients& A, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> v(-4, 4);
    return make_cochain(G, n, A, [&](auto) { return Integer(v(rng)); }, A.kind == Coefficients::Kind::rationals_mod_integers ? 12 : 1);
}

}  // namespace

TEST_CASE("direct formula equals the product pipeline") {
    for (const char* spec : {"cyc:3", "cyc:4", "sym:3", "dih:4", "ade:D4"}) {
        const FinGroup G = parse_group_spec(spec);
        for (int n = 0; n <= 2; ++n) {
            CAPTURE(spec);
            CAPTURE(n);
            CHECK(transgression_operator(G, n) == pipeline_operator(G, n));
        }
    }
}

TEST_CASE("transgression is a chain map up to the global sign") {
    for (const char* spec : {"cyc:4", "sym:3", "ade:D4"}) {
        const FinGroup G = parse_group_spec(spec);
        for (int n = 0; n <= 2; ++n) {
            const IntMatrix lower = transgression_operator(G, n);
            const IntMatrix upper = transgression_operator(G, n + 1);
            CHECK((commutes_with_coboundary(G, n, lower, upper, 1) || commutes_with_coboundary(G, n, lower, upper, -1)));
        }
    }
}

TEST_CASE("the full-product conjugator breaks the chain map identity") {
    const FinGroup G = symmetric_group(3);
    bool broken = false;
    for (int n = 1; n <= 2; ++n) {
        const IntMatrix lower = transgression_operator(G, n, kDefaultSizeBudget, AdConvention::full);
        const IntMatrix upper = transgression_operator(G, n + 1, kDefaultSizeBudget, AdConvention::full);
        broken = broken || !(commutes_with_coboundary(G, n, lower, upper, 1) ||
                             commutes_with_coboundary(G, n, lower, upper, -1));
    }
    CHECK(broken);
    // On abelian groups both conventions coincide.
    const FinGroup Z4 = cyclic_group(4);
    CHECK(transgression_operator(Z4, 2, kDefaultSizeBudget, AdConvention::full) == transgression_operator(Z4, 2));
}

TEST_CASE("global sign flips every entry") {
    const FinGroup G = symmetric_group(3);
    const IntMatrix plus = transgression_operator(G, 1);
    const IntMatrix minus = transgression_operator(G, 1, kDefaultSizeBudget, AdConvention::partial, -1);
    REQUIRE(plus.nnz() == minus.nnz());
    for (std::size_t i = 0; i < plus.nnz(); ++i) CHECK(plus.entries()[i].value == -minus.entries()[i].value);
}

TEST_CASE("transgressed cocycles are cocycles and vanish on the identity sector") {
    std::mt19937_64 rng(3);
    for (const char* spec : {"cyc:6", "sym:3", "ade:D4"}) {
        const FinGroup G = parse_group_spec(spec);
        for (const Coefficients& A : {Coefficients::Z(), Coefficients::Zmod(3), Coefficients::QmodZ()})
            for (int n = 1; n <= 3; ++n) {
                const Cochain b = random_cochain(G, n - 1, A, rng);
                const Cochain c = coboundary(G, b);
                const TransgressedCochain t = transgress(G, c);
                CHECK(coboundary(G, t).values.is_zero());
                CHECK(sector_restriction(G, t, G.identity()).values.is_zero());
            }
    }
}

TEST_CASE("transgression commutes with relabeling the group") {
    const FinGroup G = symmetric_group(3);
    std::vector<Elem> perm(G.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(11);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    perm[0] = 0;
    const FinGroup H = relabel(G, perm);
    std::vector<Elem> back(perm.size());
    for (Elem i = 0; i < perm.size(); ++i) back[perm[i]] = i;

    const CohomologyBasis basis(G, 3, Coefficients::QmodZ());
    REQUIRE(!basis.generators().empty());
    const Cochain c = basis.generators()[0];
    const BarIndex index(G);
    const Cochain moved = make_cochain(
        H, 3, c.coeffs,
        [&](std::span<const Elem> t) {
            std::vector<Elem> original(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) original[i] = back[t[i]];
            return cochain_value(index, c, original);
        },
        c.values.den);
    const TransgressedCochain tg = transgress(G, c);
    const TransgressedCochain th = transgress(H, moved);
    const InertiaIndex ig(G), ih(H);
    for (std::uint64_t i = 0; i < ig.count(2); ++i) {
        InertiaCell cell = ig.cell(2, i);
        cell.loop = perm[cell.loop];
        for (auto& e : cell.edges) e = perm[e];
        const auto j = ih.find(cell);
        REQUIRE(j.has_value());
        CHECK(tg.values.value(i) == th.values.value(*j));
    }
}

TEST_CASE("type III cocycles of (Z/2)^3 transgress nontrivially") {
    const FinGroup Z2 = cyclic_group(2);
    const FinGroup G = direct_product(Z2, direct_product(Z2, Z2));
    const TransgressionMatrix M = transgression_matrix(G, 2, Coefficients::QmodZ());
    CHECK(M.source.torsion.size() == 7);
    bool nonzero = false;
    for (const auto& row : M.entries)
        for (const auto& v : row) nonzero = nonzero || v != 0;
    CHECK(nonzero);
    // The identity sector rows are zero.
    for (std::size_t r = 0; r < M.entries.size(); ++r)
        if (M.row_labels[r].rfind("g=" + G.label(G.identity()) + " ", 0) == 0)
            for (const auto& v : M.entries[r]) CHECK(v == 0);
}

TEST_CASE("abelian Z/2 x Z/2 transgression vanishes in cohomology") {
    const TransgressionMatrix M = transgression_matrix(dihedral_group(2), 2, Coefficients::QmodZ());
    for (const auto& row : M.entries)
        for (const auto& v : row) CHECK(v == 0);
}
