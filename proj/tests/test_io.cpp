#include "inertia_lab/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>

using namespace inertia_lab;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("inertia_lab_io_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("group specs") {
    CHECK(parse_group_spec("ade:A3").order() == 4);
    CHECK(parse_group_spec("ade:D4").order() == 8);
    CHECK(parse_group_spec("ade:D6").order() == 16);
    CHECK(parse_group_spec("ade:E8").order() == 120);
    CHECK(parse_group_spec("sym:3").order() == 6);
    CHECK(parse_group_spec("cyc:9").order() == 9);
    CHECK(parse_group_spec("dih:5").order() == 10);
    CHECK_THROWS_AS(parse_group_spec("ade:F4"), FormatError);
    CHECK_THROWS_AS(parse_group_spec("cyc:x"), FormatError);
    CHECK_THROWS(parse_group_spec("table:/nonexistent/group.json"));
}

TEST_CASE("group json round trip through a table file") {
    const FinGroup G = parse_group_spec("ade:E6");
    const std::string text = group_to_json(G);
    const FinGroup back = group_from_json(text);
    CHECK(back == G);
    CHECK(back.label(5) == G.label(5));
    const fs::path file = scratch_dir("group") / "e6.json";
    std::ofstream(file) << text;
    CHECK(parse_group_spec("table:" + file.string()) == G);
    CHECK_THROWS(group_from_json("{\"order\": 2, \"identity\": 0, \"mul\": [[0,1],[1,1]]}"));
    CHECK_THROWS(group_from_json("not json"));
}

TEST_CASE("simplicial set json round trip") {
    const SSet X = product(standard_simplex(2, 3), minimal_circle(3));
    const SSet Y = sset_from_json(sset_to_json(X));
    CHECK(Y.counts() == X.counts());
    for (CellId c = 0; c < X.size(); ++c) CHECK(Y.faces(c) == X.faces(c));
}

TEST_CASE("cocycle json round trip for every coefficient kind") {
    const FinGroup G = symmetric_group(3);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> v(-5, 5);
    for (const Coefficients& A : {Coefficients::Z(), Coefficients::Zmod(4), Coefficients::QmodZ()}) {
        const Cochain b = make_cochain(G, 2, A, [&](auto) { return Integer(v(rng)); },
                                       A.kind == Coefficients::Kind::rationals_mod_integers ? 6 : 1);
        const std::string text = cocycle_to_json(G, "sym:3", b);
        const auto parsed = nlohmann::json::parse(text);
        CHECK(parsed["degree"] == 2);
        CHECK(parsed["group"] == "sym:3");
        const Cochain back = cocycle_from_json(G, text);
        CHECK(back.degree == b.degree);
        CHECK(back.coeffs == b.coeffs);
        CHECK(back.values == b.values);
    }
}

TEST_CASE("transgressed cochains serialize") {
    const FinGroup G = cyclic_group(3);
    const CohomologyBasis basis(G, 2, Coefficients::Zmod(3));
    const TransgressedCochain t = transgress(G, basis.generators().at(0));
    const auto parsed = nlohmann::json::parse(transgressed_to_json(G, "cyc:3", t));
    CHECK(parsed["degree"] == 1);
    CHECK(parsed["coefficients"]["kind"] == "Zmod");
    CHECK(parsed["coefficients"]["modulus"] == 3);
}

TEST_CASE("chain complex export and import") {
    const ChainComplex C = normalized_chains(product(minimal_circle(3), standard_simplex(1, 3)));
    const fs::path dir = scratch_dir("complex");
    export_chain_complex(C, dir);
    CHECK(fs::exists(dir / "manifest.json"));
    const ChainComplex D = import_chain_complex(dir);
    CHECK(D.ranks() == C.ranks());
    for (int n = 1; n <= C.top_degree(); ++n) CHECK(D.boundary(n) == C.boundary(n));
    std::ofstream(dir / "boundary_1.txt") << "garbage";
    CHECK_THROWS(import_chain_complex(dir));
}
