#include "inertia_lab/inertia.hpp"
#include "inertia_lab/io.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace inertia_lab;

TEST_CASE("S3 decomposition table") {
    const FinGroup G = symmetric_group(3);
    const InertiaDecomposition D = inertia_decomposition(G);
    REQUIRE(D.sectors.size() == 3);
    std::multiset<std::pair<std::size_t, std::size_t>> rows;
    for (const auto& s : D.sectors) rows.insert({s.class_size, s.centralizer.group.order()});
    CHECK(rows == std::multiset<std::pair<std::size_t, std::size_t>>{{1, 6}, {3, 2}, {2, 3}});
}

TEST_CASE("inertia decomposition checks") {
    for (const char* spec : {"cyc:1", "cyc:2", "cyc:5", "cyc:8", "sym:3", "ade:D4", "ade:D5", "dih:4", "sym:4"}) {
        CAPTURE(spec);
        const FinGroup G = parse_group_spec(spec);
        const DecompositionCheck c = check_inertia_decomposition(G);
        CHECK(c.ok());
        CHECK(c.components == conjugacy_classes(G).class_reps.size());
        CHECK(c.morphisms == G.order() * G.order());
    }
}

TEST_CASE("inertia groupoid morphisms conjugate the source") {
    const FinGroup G = parse_group_spec("ade:D4");
    const FiniteGroupoid L = inertia_groupoid(G);
    CHECK(L.object_count == G.order());
    for (std::uint32_t m = 0; m < L.morphism_count(); ++m) {
        const Elem gamma = L.source[m];
        const Elem g = m % G.order();
        CHECK(L.target[m] == G.conj(gamma, g));
    }
}

TEST_CASE("inertia nerve satisfies the simplicial identities") {
    const FinGroup G = symmetric_group(3);
    const InertiaNerve N(G, 4);
    CHECK(simplicial_identity_violations(N.sset(), 4).empty());
    for (CellId c : N.sset().cells(2)) CHECK(N.find(N.cell(c)) == N.sset().cell(c));
}

TEST_CASE("inertia objects follow the partial conjugators") {
    const FinGroup G = symmetric_group(3);
    const InertiaCell cell{3, {1, 4, 2}};
    CHECK(inertia_object(G, cell, 0) == 3);
    Elem expected = 3;
    for (int j = 1; j <= 3; ++j) {
        expected = G.conj(expected, cell.edges[j - 1]);
        CHECK(inertia_object(G, cell, j) == expected);
    }
}

TEST_CASE("evaluation map inserts the conjugated loop") {
    const FinGroup G = symmetric_group(3);
    const InertiaCell cell{4, {1, 2}};
    for (int k = 0; k <= 2; ++k) {
        const auto t = evaluation_map(G, k, cell);
        REQUIRE(t.size() == 3);
        CHECK(t[k] == inertia_object(G, cell, k));
    }
}

TEST_CASE("retraction onto centralizers is a functor") {
    const FinGroup G = parse_group_spec("ade:D5");
    const InertiaDecomposition D = inertia_decomposition(G);
    for (Elem gamma = 0; gamma < G.order(); ++gamma)
        for (Elem a = 0; a < G.order(); ++a)
            for (Elem b = 0; b < G.order(); ++b) {
                const Elem r = G.mul(D.retract(G, gamma, a), D.retract(G, G.conj(gamma, a), b));
                CHECK(r == D.retract(G, gamma, G.mul(a, b)));
            }
}

TEST_CASE("g-sets") {
    const FinGroup G = symmetric_group(3);
    for (const char* spec : {"point", "regular", "two-orbit"}) CHECK(parse_gset(G, spec).axiom_violations(G).empty());
    const GSet R = left_regular_gset(G);
    for (Elem g = 0; g < G.order(); ++g)
        CHECK(R.fixed_points(g).size() == (g == G.identity() ? G.order() : 0));
    CHECK_THROWS(parse_gset(G, "circle"));
}

TEST_CASE("rotation action is simplicial") {
    for (const char* spec : {"cyc:3", "sym:3"}) {
        const FinGroup G = parse_group_spec(spec);
        CHECK(rotation_action_violations(G, point_gset(G), 3).empty());
        CHECK(rotation_action_violations(G, left_regular_gset(G), 3).empty());
    }
}
