#include "inertia_lab/borel.hpp"
#include "inertia_lab/chain.hpp"
#include "inertia_lab/reduction.hpp"
#include "inertia_lab/smith.hpp"

#include <doctest.h>

#include <random>

using namespace inertia_lab;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<std::vector<Integer>> dense(rows, std::vector<Integer>(cols));
    for (auto& r : dense)
        for (auto& v : r) v = entry(rng);
    return IntMatrix::from_dense(dense);
}

// Product of the nonzero k x k minors' gcds gives d_1 ... d_k; here just d_1 = gcd of entries.
Integer entry_gcd(const IntMatrix& M) {
    mpz_class g = 0;
    for (const auto& e : M.entries()) g = gcd(g, e.value.to_mpz());
    return Integer(g);
}

}  // namespace

TEST_CASE("smith normal form of a fixed matrix") {
    const IntMatrix M = IntMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    const SmithResult r = smith(M);
    REQUIRE(r.rank() == 3);
    CHECK(r.diagonal[0] == Integer(2));
    CHECK(r.diagonal[1] == Integer(6));
    CHECK(r.diagonal[2] == Integer(12));
}

TEST_CASE("smith decomposition satisfies U M V = D on random matrices") {
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 40; ++trial) {
        const IntMatrix M = random_matrix(rng, 1 + trial % 6, 1 + (trial / 6) % 6);
        const SmithDecomposition d = smith_normal_form(M);
        CHECK(d.U * M * d.V == d.D);
        CHECK(d.D.is_diagonal());
        const SmithResult r = smith(M);
        for (std::size_t i = 0; i + 1 < r.diagonal.size(); ++i)
            CHECK((r.diagonal[i + 1].to_mpz() % r.diagonal[i].to_mpz()) == 0);
        if (r.rank() > 0) CHECK(r.diagonal[0] == entry_gcd(M));
        // Sparse and dense elimination agree.
        SmithOptions dense_only;
        dense_only.sparse_phase = false;
        CHECK(smith(M, dense_only).diagonal == r.diagonal);
    }
}

TEST_CASE("coefficients parse and print") {
    CHECK(Coefficients::parse("Z") == Coefficients::Z());
    CHECK(Coefficients::parse("Zmod:6") == Coefficients::Zmod(6));
    CHECK(Coefficients::parse("QmodZ") == Coefficients::QmodZ());
    CHECK_THROWS(Coefficients::parse("Zmod:1"));
    CHECK_THROWS(Coefficients::parse("R"));
}

TEST_CASE("universal coefficients on the real projective plane") {
    // Two-cell model: one cell per dimension, boundary 0 then 2.
    const ChainComplex C({1, 1, 1}, {IntMatrix::from_dense({{0}}), IntMatrix::from_dense({{2}})});
    CHECK(homology(C, 1).str() == "Z/2");
    CHECK(homology(C, 2).is_zero());
    CHECK(cohomology(C, 1, Coefficients::Z()).is_zero());
    CHECK(cohomology(C, 2, Coefficients::Z()).str() == "Z/2");
    CHECK(cohomology(C, 1, Coefficients::Zmod(2)).str() == "Z/2");
    CHECK(cohomology(C, 2, Coefficients::Zmod(2)).str() == "Z/2");
    CHECK(cohomology(C, 1, Coefficients::QmodZ()).str() == "Z/2");
}

TEST_CASE("cohomology model coordinates of generators") {
    const IntMatrix d1 = IntMatrix::from_dense({{0}});
    const IntMatrix d2 = IntMatrix::from_dense({{2}});
    const ChainComplex C({1, 1, 1}, {d1, d2});
    const CochainComplex D = dual(C);
    const CohomologyModel model(D.delta(1), D.delta(2), Coefficients::Z());
    REQUIRE(model.presentation().str() == "Z/2");
    const auto& gens = model.generators();
    REQUIRE(gens.size() == 1);
    const ClassCoordinates c = model.coordinates(gens[0]);
    REQUIRE(c.torsion.size() == 1);
    CHECK(c.torsion[0] == Integer(1));
    CHECK(model.representative(c) == gens[0]);
}

TEST_CASE("reduced complex agrees with direct cohomology") {
    const SphereModel model = free_sphere_model(3, 1);
    const ChainComplex C = normalized_chains(model.sphere.base());
    const ReducedComplex R(C);
    CHECK(R.complex().d_squared_violations().empty());
    for (int n = 0; n <= 4; ++n) {
        CHECK(R.complex().rank(n) <= C.rank(n));
        CHECK(reduced_cohomology(C, n, Coefficients::Z()) == cohomology(C, n, Coefficients::Z()));
    }
    // The 4-sphere collapses to one critical cell in degrees 0 and 4.
    CHECK(R.complex().rank(0) == 1);
    CHECK(R.complex().rank(4) == 1);
}

TEST_CASE("reduced cochains expand to cocycles and restrict back") {
    const ChainComplex C = normalized_chains(product(minimal_circle(4), minimal_circle(4)));
    const ReducedComplex R(C);
    const CochainComplex Dfull = dual(C);
    for (int n = 0; n <= 2; ++n) {
        const CochainComplex Dred = dual(R.complex());
        const CohomologyModel model(Dred.delta(n - 1), Dred.delta(n), Coefficients::Z());
        for (const auto& g : model.generators()) {
            const auto full = R.expand_cochain(n, g.num);
            CHECK(Dfull.delta(n).apply(full) == std::vector<Integer>(C.rank(n + 1)));
            CHECK(R.restrict_cochain(n, full) == g.num);
        }
    }
}
