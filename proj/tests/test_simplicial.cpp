#include "inertia_lab/chain.hpp"
#include "inertia_lab/config.hpp"
#include "inertia_lab/simplicial.hpp"
#include "inertia_lab/w_construction.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>

using namespace inertia_lab;

namespace {

std::size_t binomial(int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Parity of the permutation that lists mu then nu.
int inversion_sign(const Shuffle& s) {
    std::vector<int> order = s.mu;
    order.insert(order.end(), s.nu.begin(), s.nu.end());
    int inversions = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) inversions += order[i] > order[j];
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("shuffles partition the index set with the permutation sign") {
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q) {
            const auto list = shuffles(p, q);
            CHECK(list.size() == binomial(p + q, p));
            for (const auto& s : list) {
                REQUIRE(s.mu.size() == std::size_t(p));
                REQUIRE(s.nu.size() == std::size_t(q));
                CHECK(std::is_sorted(s.mu.begin(), s.mu.end()));
                CHECK(std::is_sorted(s.nu.begin(), s.nu.end()));
                std::vector<int> all = s.mu;
                all.insert(all.end(), s.nu.begin(), s.nu.end());
                std::sort(all.begin(), all.end());
                for (int i = 0; i < p + q; ++i) CHECK(all[i] == i);
                CHECK(s.sign == inversion_sign(s));
            }
        }
}

TEST_CASE("the two shuffles of the square") {
    const auto list = shuffles(1, 1);
    REQUIRE(list.size() == 2);
    CHECK(list[0].mu == std::vector<int>{0});
    CHECK(list[0].sign == 1);
    CHECK(list[1].mu == std::vector<int>{1});
    CHECK(list[1].sign == -1);
}

TEST_CASE("square inventory") {
    const ProductSSet P(standard_simplex(1), standard_simplex(1), 2);
    CHECK(P.sset().count(0) == 4);
    CHECK(P.sset().count(1) == 5);
    CHECK(P.sset().count(2) == 2);
}

TEST_CASE("top cells of a prism product count shuffles") {
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            const ProductSSet P(standard_simplex(p, p + q), standard_simplex(q, p + q), p + q);
            CHECK(P.sset().count(p + q) == binomial(p + q, p));
        }
}

TEST_CASE("simplicial identities hold on the basic complexes") {
    CHECK(simplicial_identity_violations(standard_simplex(3), 5).empty());
    CHECK(simplicial_identity_violations(minimal_circle(), 5).empty());
    CHECK(simplicial_identity_violations(point(), 5).empty());
    CHECK(simplicial_identity_violations(product(standard_simplex(2), minimal_circle()), 4).empty());
    CHECK(simplicial_identity_violations(w_bar(cyclic_group(3), 4, kDefaultSizeBudget).sset(), 4).empty());
}

TEST_CASE("face of a degeneracy at the same index is the identity") {
    const SSet D = standard_simplex(2);
    for (CellId c : D.cells(2))
        for (int i = 0; i <= 2; ++i) {
            const Simplex s = apply_degeneracy(D.cell(c), i);
            CHECK(s.dim == 3);
            CHECK(s.is_degenerate());
            CHECK(apply_face(D, s, i) == D.cell(c));
            CHECK(apply_face(D, s, i + 1) == D.cell(c));
        }
}

TEST_CASE("mask round trip for degenerate simplices") {
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        const Simplex s = Simplex::from_mask(4, 7, mask);
        CHECK(s.word_mask() == mask);
        CHECK(s.base_dim() == 4 - std::popcount(mask));
    }
}

TEST_CASE("homology of circle, torus and simplex") {
    const ChainComplex circle = normalized_chains(minimal_circle(5));
    CHECK(homology(circle, 0).str() == "Z");
    CHECK(homology(circle, 1).str() == "Z");
    CHECK(circle.top_degree() == 1);

    const ChainComplex torus = normalized_chains(product(minimal_circle(5), minimal_circle(5)));
    CHECK(torus.d_squared_violations().empty());
    CHECK(homology(torus, 1).free_rank == 2);
    CHECK(homology(torus, 2).free_rank == 1);
    CHECK(torus.top_degree() == 2);

    const ChainComplex simplex = normalized_chains(standard_simplex(3));
    CHECK(homology(simplex, 0).str() == "Z");
    for (int n = 1; n <= 3; ++n) CHECK(homology(simplex, n).is_zero());
}

TEST_CASE("eilenberg-zilber and alexander-whitney on the square") {
    const SSet X = standard_simplex(1, 2);
    const SSet Y = standard_simplex(1, 2);
    const ProductSSet P(X, Y, 2);
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q)
            for (CellId x : X.cells(p))
                for (CellId y : Y.cells(q)) {
                    TensorChain t;
                    add_to(t, {x, y}, 1);
                    const Chain z = ez_map(P, x, p, y, q);
                    CHECK(aw_map(P, X, Y, z) == t);
                    CHECK(boundary(P.sset(), z) == ez_map(P, X, Y, tensor_boundary(X, Y, t)));
                }
    // The top generator is the signed sum of both triangles.
    const Chain top = ez_map(P, X.cells(1)[0], 1, Y.cells(1)[0], 1);
    REQUIRE(top.size() == 2);
    int total = 0;
    for (const auto& [cell, v] : top) total += static_cast<int>(v.to_int64());
    CHECK(total == 0);
}
