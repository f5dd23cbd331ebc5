#include "inertia_lab/comparison.hpp"
#include "inertia_lab/io.hpp"

#include <doctest.h>

using namespace inertia_lab;

namespace {

// Sum over class reps of |X^g| |C_g|^n.
std::size_t expected_cells(const FinGroup& G, const GSet& X, int n) {
    const ConjClassData cls = conjugacy_classes(G);
    std::size_t total = 0;
    for (std::size_t s = 0; s < cls.class_reps.size(); ++s) {
        std::size_t term = X.fixed_points(cls.class_reps[s]).size();
        for (int i = 0; i < n; ++i) term *= cls.centralizers[s].group.order();
        total += term;
    }
    return total;
}

}  // namespace

TEST_CASE("finite cell counts of both models") {
    for (const char* spec : {"cyc:3", "sym:3", "ade:D4"})
        for (const char* xs : {"point", "regular", "two-orbit"}) {
            CAPTURE(spec);
            CAPTURE(xs);
            const FinGroup G = parse_group_spec(spec);
            const GSet X = parse_gset(G, xs);
            const GrhModel grh = grh_inertia(G, X, 4);
            const CycModel cyc = cyclification_model(G, X, 4);
            for (int n = 0; n <= 4; ++n) {
                CHECK(grh.finite_cell_count(n) == expected_cells(G, X, n));
                CHECK(cyc.finite_cell_count(n) == expected_cells(G, X, n));
            }
        }
}

TEST_CASE("comparison squares commute") {
    for (const char* spec : {"cyc:2", "cyc:4", "sym:3"})
        for (const char* xs : {"point", "regular", "two-orbit"}) {
            CAPTURE(spec);
            CAPTURE(xs);
            const FinGroup G = parse_group_spec(spec);
            ComparisonOptions options;
            options.max_degree = 3;
            const ComparisonReport r = verify_comparison(G, parse_gset(G, xs), options);
            CHECK(r.ok());
            CHECK(r.squares_checked > 0);
            CHECK(r.printed_checked > 0);
            CHECK(r.bijection_checks > 0);
        }
}

TEST_CASE("comparison reports are reproducible") {
    const FinGroup G = parse_group_spec("ade:D4");
    const GSet X = left_regular_gset(G);
    ComparisonOptions a;
    a.seed = 5;
    a.max_degree = 3;
    ComparisonOptions b = a;
    b.threads = 4;
    const ComparisonReport ra = verify_comparison(G, X, a);
    const ComparisonReport rb = verify_comparison(G, X, b);
    CHECK(ra.ok());
    CHECK(ra.cells_checked == rb.cells_checked);
    CHECK(ra.squares_checked == rb.squares_checked);
    CHECK(ra.failures == rb.failures);
}

TEST_CASE("comparison morphism on a degree one cell") {
    const FinGroup G = cyclic_group(3);
    const GSet X = point_gset(G);
    const GrhModel grh(G, X, 2);
    const Elem g = 1;
    for (const auto& sector : grh.sectors()) {
        if (sector.rep != g) continue;
        GrhCell c;
        c.sector = g;
        c.point = 0;
        ResolvedElement slot;
        slot.h = 2;
        slot.r = mpq_class(1, 2);
        c.slots.push_back(slot);
        CHECK(grh.cell_violations(c).empty());
        const CycCell image = comparison_morphism(G, c);
        CHECK(image.degree() == 1);
        CHECK(image.sector == g);
        CHECK(image == printed_comparison(G, c));
    }
}
