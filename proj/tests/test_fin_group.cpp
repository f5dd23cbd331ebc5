#include "inertia_lab/fin_group.hpp"
#include "inertia_lab/io.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace inertia_lab;

namespace {

// Multiset of element orders; an isomorphism invariant.
std::map<std::size_t, std::size_t> order_profile(const FinGroup& G) {
    std::map<std::size_t, std::size_t> out;
    for (Elem a = 0; a < G.order(); ++a) ++out[G.element_order(a)];
    return out;
}

}  // namespace

TEST_CASE("ADE orders") {
    for (std::size_t n = 0; n <= 11; ++n) CHECK(ade_group(AdeFamily::A, n).order() == n + 1);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(ade_group(AdeFamily::D, n).order() == 4 * (n + 2));
    CHECK(ade_group(AdeFamily::E6).order() == 24);
    CHECK(ade_group(AdeFamily::E7).order() == 48);
    CHECK(ade_group(AdeFamily::E8).order() == 120);
}

TEST_CASE("group axioms") {
    for (const char* spec : {"cyc:7", "sym:4", "dih:5", "ade:D4", "ade:D7", "ade:E6", "ade:E7", "ade:E8"})
        CHECK(parse_group_spec(spec).axiom_violations().empty());
}

TEST_CASE("quaternionic binary dihedral groups match the abstract presentation") {
    for (std::size_t m = 2; m <= 6; ++m) {
        const FinGroup quaternionic = ade_group(AdeFamily::D, m - 2);
        const FinGroup abstract = binary_dihedral_abstract(m);
        CHECK(quaternionic.order() == abstract.order());
        CHECK(order_profile(quaternionic) == order_profile(abstract));
        CHECK(conjugacy_classes(quaternionic).class_reps.size() == conjugacy_classes(abstract).class_reps.size());
    }
}

TEST_CASE("binary polyhedral groups have a unique involution") {
    for (AdeFamily f : {AdeFamily::E6, AdeFamily::E7, AdeFamily::E8}) {
        const FinGroup G = ade_group(f);
        CHECK(order_profile(G).at(2) == 1);
    }
}

TEST_CASE("class counts and abelianizations") {
    // (spec, classes, abelianization)
    const std::vector<std::tuple<std::string, std::size_t, std::string>> cases = {
        {"cyc:6", 6, "Z/6"},      {"sym:3", 3, "Z/2"},        {"ade:D4", 5, "Z/2 + Z/2"},
        {"ade:D5", 6, "Z/4"},     {"ade:D6", 7, "Z/2 + Z/2"}, {"ade:E6", 7, "Z/3"},
        {"ade:E7", 8, "Z/2"},     {"ade:E8", 9, "0"},         {"sym:4", 5, "Z/2"},
    };
    for (const auto& [spec, classes, ab] : cases) {
        CAPTURE(spec);
        const FinGroup G = parse_group_spec(spec);
        const ConjClassData data = conjugacy_classes(G);
        CHECK(data.class_reps.size() == classes);
        CHECK(abelianization(G).str() == ab);
        std::size_t total = 0;
        for (std::size_t i = 0; i < data.class_reps.size(); ++i) {
            CHECK(data.members[i].size() * data.centralizers[i].group.order() == G.order());
            total += data.members[i].size();
        }
        CHECK(total == G.order());
    }
}

TEST_CASE("transporters conjugate onto the class rep") {
    const FinGroup G = parse_group_spec("ade:E6");
    const ConjClassData data = conjugacy_classes(G);
    for (Elem x = 0; x < G.order(); ++x) CHECK(G.conj(x, data.transporter[x]) == data.class_reps[data.class_of[x]]);
}

TEST_CASE("centralizers commute with their element") {
    const FinGroup G = symmetric_group(4);
    for (Elem g = 0; g < G.order(); ++g) {
        const Subgroup C = centralizer(G, g);
        for (Elem h : C.embedding) CHECK(G.mul(g, h) == G.mul(h, g));
    }
}

TEST_CASE("huan group relation") {
    const FinGroup G = symmetric_group(3);
    for (Elem g = 0; g < G.order(); ++g) {
        const HuanGroup L(G, g);
        // (g^-1, 1) is the identity.
        CHECK(L.normalize(G.inv(g), 1) == L.identity());
        const HuanElement a = L.normalize(g, mpq_class(1, 3));
        CHECK(L.mul(a, L.inv(a)) == L.identity());
    }
}

TEST_CASE("invalid tables are rejected") {
    CHECK_THROWS(FinGroup(2, {0, 1, 1, 1}, 0));
    CHECK_THROWS(parse_group_spec("ade:D3"));
    CHECK_THROWS(parse_group_spec("bogus"));
}
