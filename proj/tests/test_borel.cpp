#include "inertia_lab/borel.hpp"
#include "inertia_lab/group_cohomology.hpp"
#include "inertia_lab/reduction.hpp"

#include <doctest.h>

#include <algorithm>

using namespace inertia_lab;

namespace {

std::string homology_text(const ChainComplex& C, int top) {
    std::string out;
    for (int n = 0; n <= top; ++n) out += (n ? " | " : "") + homology(C, n).str();
    return out;
}

}  // namespace

TEST_CASE("polygons, joins and the sphere model") {
    CHECK(homology_text(normalized_chains(cyclic_polygon(5, 3)), 1) == "Z | Z");
    const SSet hexagon = cyclic_polygon(6, 4);
    const JoinSSet J(hexagon, hexagon, 4);
    CHECK(simplicial_identity_violations(J.sset(), 4).empty());
    CHECK(homology_text(normalized_chains(J.sset()), 3) == "Z | 0 | 0 | Z");
    for (CellId c : J.sset().cells(2)) CHECK(J.find(J.part(c)) == J.sset().cell(c));

    const SphereModel model = free_sphere_model(3, 1);
    CHECK(homology_text(normalized_chains(model.sphere.base()), 4) == "Z | 0 | 0 | 0 | Z");
    CHECK(model.sphere.violations().empty());
    const auto fixed = model.sphere.non_free_cells();
    CHECK(fixed == std::vector<CellId>{std::min(model.north, model.south), std::max(model.north, model.south)});
    CHECK(model.sphere.act(1, model.north) == model.sphere.base().cell(model.north));
    CHECK(model.sphere.act(1, model.south) == model.sphere.base().cell(model.south));
    CHECK_THROWS_AS(free_sphere_model(2, 1), std::invalid_argument);
    CHECK(default_polygon_multiplier(1) == 3);
    CHECK(default_polygon_multiplier(2) == 2);
    CHECK(default_polygon_multiplier(3) == 1);
}

TEST_CASE("Borel construction of a point is the classifying complex") {
    for (std::size_t m = 2; m <= 4; ++m) {
        const FinGroup G = cyclic_group(m);
        const GSSet pt = trivial_gsset(point(5), G);
        const BorelSSet B(pt, 5);
        CHECK(simplicial_identity_violations(B.sset(), 5).empty());
        const TupleSSet W = w_bar(G, 5, kDefaultSizeBudget);
        CHECK(B.sset().counts() == W.sset().counts());
        for (int n = 0; n <= 4; ++n) {
            CHECK(B.sset().count(n) == borel_cell_count(point(5), m, n));
            CHECK(reduced_cohomology(normalized_chains(B.sset()), n, Coefficients::Z()) ==
                  cyclic_periodic_cohomology(m, n, Coefficients::Z()));
        }
    }
}

TEST_CASE("free orbit gives a contractible Borel construction") {
    const FinGroup G = cyclic_group(3);
    const BorelSSet B(discrete_gsset(G, left_regular_gset(G), 4), 4);
    const ChainComplex C = normalized_chains(B.sset());
    CHECK(homology(C, 0).str() == "Z");
    for (int n = 1; n <= 3; ++n) CHECK(homology(C, n).is_zero());
}

TEST_CASE("trivial action on a circle gives the product with the classifying space") {
    const FinGroup G = cyclic_group(2);
    const BorelSSet B(trivial_gsset(minimal_circle(5), G), 5);
    const ChainComplex C = normalized_chains(B.sset());
    CHECK(reduced_cohomology(C, 1, Coefficients::Z()).str() == "Z");
    CHECK(reduced_cohomology(C, 2, Coefficients::Z()).str() == "Z/2");
    CHECK(reduced_cohomology(C, 3, Coefficients::Z()).str() == "Z/2");
}

TEST_CASE("Borel cells decompose into point and group parts") {
    const SphereModel model = free_sphere_model(2, 2);
    const BorelSSet B(model.sphere, 3);
    for (int n = 0; n <= 3; ++n) {
        CHECK(B.sset().count(n) == borel_cell_count(model.sphere.base(), 2, n));
        for (CellId c : B.sset().cells(n)) CHECK(B.find(B.point_part(c), B.group_part(c)) == B.sset().cell(c));
    }
    CHECK(simplicial_identity_violations(B.sset(), 3).empty());
}

TEST_CASE("frozen Borel cell counts") {
    const SphereModel two = free_sphere_model(2, 2);
    std::vector<std::size_t> counts;
    for (int n = 0; n <= 5; ++n) counts.push_back(borel_cell_count(two.sphere.base(), 2, n));
    CHECK(counts == std::vector<std::size_t>{10, 90, 490, 1850, 5322, 12570});
    const SphereModel three = free_sphere_model(3, 1);
    CHECK(borel_cell_count(three.sphere.base(), 3, 5) == 104476);
}

TEST_CASE("split short exact sequence for m = 2 and 3") {
    for (std::size_t m : {2, 3}) {
        CAPTURE(m);
        const SesReport r = verify_ses(m, default_polygon_multiplier(m));
        CHECK(r.sphere_homology_ok);
        CHECK(r.action_ok);
        CHECK(r.shape_ok);
        CHECK(r.fiber_ok);
        CHECK(r.base_ok);
        CHECK(r.split_ok);
        CHECK(r.pole_swap_ok);
        CHECK(r.euler_ok);
        REQUIRE(r.cohomology.size() == 5);
        CHECK(r.cohomology[2] == from_cyclic_orders({Integer(m)}));
        CHECK(r.cohomology[4] == from_cyclic_orders({Integer(0), Integer(m)}));
    }
}

TEST_CASE("cohomology does not depend on the polygon multiplier") {
    CHECK(borel_sphere_cohomology(2, 3, 2) == from_cyclic_orders({Integer(2)}));
    CHECK(borel_sphere_cohomology(2, 3, 3).is_zero());
}
