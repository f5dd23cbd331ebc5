#include "commands.hpp"

#include "inertia_lab/group_cohomology.hpp"
#include "inertia_lab/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace inertia_lab;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

fs::path write_cocycle(const std::string& name, const FinGroup& G, const std::string& spec, const Cochain& c) {
    const fs::path file = fs::path(INERTIA_LAB_EXAMPLE_DIR) / name;
    std::ofstream(file) << cocycle_to_json(G, spec, c);
    return file;
}

}  // namespace

TEST_CASE("inertia table for S3") {
    const Result r = run_cli({"inertia", "--group", "sym:3"});
    CHECK(r.code == cli::kOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    std::vector<std::string> orders;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream in(rows[i]);
        std::string rep, size, order;
        in >> rep >> size >> order;
        orders.push_back(order);
    }
    CHECK(orders == std::vector<std::string>{"6", "2", "3"});

    const auto parsed = nlohmann::json::parse(run_cli({"inertia", "--group", "sym:3", "--format", "json"}).out);
    CHECK(parsed["sectors"].size() == 3);
}

TEST_CASE("cohomology of A4") {
    const Result r = run_cli({"cohomology", "--group", "ade:A4", "--degree", "4", "--coeff", "Z"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "Z/5\n");
    const auto parsed =
        nlohmann::json::parse(run_cli({"cohomology", "--group", "ade:D4", "--degree", "4", "--format", "json"}).out);
    CHECK(parsed["cohomology"]["torsion"] == nlohmann::json::array({"8"}));
}

TEST_CASE("shuffles of the square") {
    const Result r = run_cli({"shuffles", "--p", "1", "--q", "1", "--format", "json"});
    CHECK(r.code == cli::kOk);
    const auto parsed = nlohmann::json::parse(r.out);
    REQUIRE(parsed["shuffles"].size() == 2);
    CHECK(parsed["shuffles"][0]["sign"] == 1);
    CHECK(parsed["shuffles"][1]["sign"] == -1);
}

TEST_CASE("group descriptions") {
    const Result e8 = run_cli({"group", "--ade", "E8"});
    CHECK(e8.code == cli::kOk);
    CHECK(e8.out.find("order 120") != std::string::npos);
    const Result json = run_cli({"group", "--group", "dih:3", "--format", "json"});
    CHECK(group_from_json(json.out) == parse_group_spec("dih:3"));
    CHECK(run_cli({"group"}).code == cli::kUsageError);
    CHECK(run_cli({"group", "--group", "cyc:2", "--ade", "A1"}).code == cli::kUsageError);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == cli::kUsageError);
    CHECK(run_cli({"frobnicate"}).code == cli::kUsageError);
    CHECK(run_cli({"cohomology", "--group", "nope:1", "--degree", "2"}).code == cli::kUsageError);
    CHECK(run_cli({"cohomology", "--group", "cyc:2", "--degree", "2", "--coeff", "R"}).code == cli::kUsageError);
    CHECK(run_cli({"shuffles", "--p", "1", "--q", "1", "--format", "xml"}).code == cli::kUsageError);
    CHECK(run_cli({"--help"}).code == cli::kOk);
}

TEST_CASE("budget errors and the environment override") {
    CHECK(run_cli({"cohomology", "--group", "ade:E8", "--degree", "5", "--budget", "1000"}).code == cli::kBudgetError);
    ::setenv("INERTIA_LAB_BUDGET", "1000", 1);
    CHECK(run_cli({"cohomology", "--group", "ade:E8", "--degree", "5"}).code == cli::kBudgetError);
    CHECK(run_cli({"cohomology", "--group", "cyc:3", "--degree", "2", "--budget", "100000"}).code == cli::kOk);
    ::unsetenv("INERTIA_LAB_BUDGET");
}

TEST_CASE("transgress a cocycle file") {
    const FinGroup G = parse_group_spec("ade:D4");
    const CohomologyBasis basis(G, 3, Coefficients::QmodZ());
    const fs::path file = write_cocycle("q8_cocycle.json", G, "ade:D4", basis.generators().at(0));
    const Result r = run_cli({"transgress", "--group", "ade:D4", "--degree", "3", "--coeff", "QmodZ", "--cocycle",
                              file.string(), "--format", "json"});
    CHECK(r.code == cli::kOk);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["transgressed"]["degree"] == 2);
    CHECK(parsed["sectors"].size() == 5);

    const Cochain bad = make_cochain(G, 2, Coefficients::Z(), [](auto t) { return Integer(t[0] == 1 ? 1 : 0); });
    REQUIRE(!is_cocycle(G, bad));
    const fs::path bad_file = write_cocycle("not_a_cocycle.json", G, "ade:D4", bad);
    CHECK(run_cli({"transgress", "--group", "ade:D4", "--cocycle", bad_file.string()}).code == cli::kUsageError);

    const fs::path broken = fs::path(INERTIA_LAB_EXAMPLE_DIR) / "broken.json";
    std::ofstream(broken) << "{\"degree\": ";
    CHECK(run_cli({"transgress", "--group", "ade:D4", "--cocycle", broken.string()}).code == cli::kUsageError);
}

TEST_CASE("transgression matrix table") {
    const Result r = run_cli({"transgress", "--group", "sym:3", "--degree", "3", "--coeff", "QmodZ"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("source H^3 = Z/6\n", 0) == 0);
}

TEST_CASE("verification commands") {
    const Result grh = run_cli({"compare-grh", "--group", "cyc:3", "--gset", "regular", "--max-degree", "3"});
    CHECK(grh.code == cli::kOk);
    CHECK(lines(grh.out).back() == "PASS");
    const Result borel = run_cli({"borel-sphere", "--m", "2", "--max-degree", "4", "--format", "json"});
    CHECK(borel.code == cli::kOk);
    CHECK(nlohmann::json::parse(borel.out)["ses"]["verdict"] == "PASS");
    const Result low = run_cli({"borel-sphere", "--m", "2", "--max-degree", "2"});
    CHECK(lines(low.out).size() == 5);
    CHECK(run_cli({"borel-sphere", "--m", "2", "--max-degree", "5"}).code == cli::kUsageError);
    CHECK(run_cli({"borel-sphere", "--m", "1", "--k", "1"}).code == cli::kUsageError);
}

TEST_CASE("output does not depend on the thread count") {
    const std::vector<std::vector<std::string>> commands = {
        {"cohomology", "--group", "ade:D5", "--degree", "4"},
        {"compare-grh", "--group", "sym:3", "--max-degree", "3"},
        {"transgress", "--group", "ade:D4", "--degree", "3", "--coeff", "QmodZ", "--format", "json"},
    };
    for (auto args : commands) {
        const std::string base = run_cli(args).out;
        args.insert(args.end(), {"--threads", "4"});
        CHECK(run_cli(args).out == base);
    }
}
