// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "inertia_lab/borel.hpp"
#include "inertia_lab/chain.hpp"
#include "inertia_lab/comparison.hpp"
#include "inertia_lab/group_cohomology.hpp"
#include "inertia_lab/inertia.hpp"
#include "inertia_lab/io.hpp"
#include "inertia_lab/simplicial.hpp"
#include "inertia_lab/transgression.hpp"
#include "inertia_lab/w_construction.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace inertia_lab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> problems;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            if (problems.size() < 10) problems.push_back(what);
        }
    }
};

std::size_t binomial(int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// 1. Shuffle and prism combinatorics. Top cells are counted with the product cell
// enumerator for every p, q <= 6; the smaller prisms are also built with all faces.
Outcome shuffle_counts() {
    Outcome out;
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; q <= 6; ++q) {
            const SSet X = standard_simplex(p, p + q);
            const SSet Y = standard_simplex(q, p + q);
            std::size_t top = 0;
            for_each_product_cell(X, Y, p + q, [&](CellId, std::uint32_t, CellId, std::uint32_t) { ++top; });
            const std::string where = "prism " + std::to_string(p) + "x" + std::to_string(q);
            out.require(top == binomial(p + q, p), where + " has " + std::to_string(top) + " top cells");
            out.require(shuffles(p, q).size() == binomial(p + q, p), where + " shuffle list size");
            if (p + q <= 9) {
                const ProductSSet P(X, Y, p + q);
                out.require(P.sset().count(p + q) == top, where + " built product disagrees");
            }
        }
    const ProductSSet square(standard_simplex(1), standard_simplex(1), 2);
    const auto counts = square.sset().counts();
    out.require(counts == std::vector<std::size_t>{4, 5, 2}, "square inventory");
    out.detail = "p,q <= 6; built products up to p+q = 9; square 4/5/2";
    return out;
}

// 2. Eilenberg-Zilber and Alexander-Whitney.
Outcome ez_aw() {
    Outcome out;
    const int top = 4;
    const TupleSSet wz2 = w_bar(cyclic_group(2), top, kDefaultSizeBudget);
    const std::vector<std::pair<std::string, SSet>> spaces = {
        {"D1", standard_simplex(1, top)},
        {"D2", standard_simplex(2, top)},
        {"S1", minimal_circle(top)},
        {"WZ2", wz2.sset()},
    };
    std::size_t tensors = 0;
    for (const auto& [xname, X] : spaces)
        for (const auto& [yname, Y] : spaces) {
            const ProductSSet P(X, Y, top);
            for (int p = 0; p <= top; ++p)
                for (int q = 0; p + q <= top; ++q)
                    for (CellId x : X.cells(p))
                        for (CellId y : Y.cells(q)) {
                            TensorChain t;
                            add_to(t, {x, y}, 1);
                            const Chain z = ez_map(P, x, p, y, q);
                            const std::string where = xname + " x " + yname + " (" + std::to_string(p) + "," +
                                                      std::to_string(q) + ")";
                            out.require(aw_map(P, X, Y, z) == t, "aw ez != id on " + where);
                            out.require(boundary(P.sset(), z) == ez_map(P, X, Y, tensor_boundary(X, Y, t)),
                                        "ez not a chain map on " + where);
                            ++tensors;
                        }
        }
    out.detail = std::to_string(tensors) + " basis tensors";
    return out;
}

// 3. Group cohomology tables.
Outcome group_cohomology_tables() {
    Outcome out;
    const std::size_t raised = 10'000'000;
    std::vector<std::string> specs;
    for (int n = 1; n <= 12; ++n) specs.push_back("cyc:" + std::to_string(n));
    for (const char* s : {"ade:D4", "ade:D5", "ade:D6", "ade:E6"}) specs.push_back(s);
    for (const auto& spec : specs) {
        const FinGroup G = parse_group_spec(spec);
        const std::vector<AbGroupPresentation> expected = {
            from_cyclic_orders({Integer(0)}), {}, abelianization(G), {}, from_cyclic_orders({Integer(G.order())})};
        for (int n = 0; n <= 4; ++n) {
            const AbGroupPresentation H = cohomology_presentation(G, n, Coefficients::Z(), raised).group;
            out.require(H == expected[n], spec + " H^" + std::to_string(n) + " = " + H.str());
            if (spec.rfind("cyc:", 0) == 0)
                out.require(H == cyclic_periodic_cohomology(G.order(), n, Coefficients::Z()),
                            spec + " periodic oracle in degree " + std::to_string(n));
        }
    }

    // 2O and 2I: low degrees directly, degree 4 through Sylow and cyclic subgroups.
    for (const auto& [spec, direct_top] : {std::pair<std::string, int>{"ade:E7", 3}, {"ade:E8", 2}}) {
        const FinGroup G = parse_group_spec(spec);
        const std::vector<AbGroupPresentation> expected = {from_cyclic_orders({Integer(0)}), {}, abelianization(G), {}};
        for (int n = 0; n <= direct_top; ++n) {
            const AbGroupPresentation H = cohomology_presentation(G, n, Coefficients::Z(), raised).group;
            out.require(H == expected[n], spec + " H^" + std::to_string(n) + " = " + H.str());
        }
        std::size_t remaining = G.order();
        for (std::size_t p = 2; remaining > 1; ++p) {
            std::size_t sylow = 1;
            while (remaining % p == 0) {
                remaining /= p;
                sylow *= p;
            }
            if (sylow == 1) continue;
            // Largest p-subgroup generated by at most two elements of p-power order.
            std::vector<Elem> ppower;
            for (Elem a = 0; a < G.order(); ++a)
                if (sylow % G.element_order(a) == 0) ppower.push_back(a);
            std::optional<Subgroup> found;
            for (std::size_t i = 0; i < ppower.size() && !found; ++i)
                for (std::size_t j = i; j < ppower.size() && !found; ++j) {
                    const std::array<Elem, 2> gens{ppower[i], ppower[j]};
                    Subgroup S = generated_subgroup(G, gens);
                    if (S.group.order() == sylow) found = std::move(S);
                }
            out.require(found.has_value(), spec + " Sylow " + std::to_string(p) + " not found");
            if (!found) continue;
            const AbGroupPresentation H4 = cohomology_presentation(found->group, 4, Coefficients::Z(), raised).group;
            out.require(H4 == from_cyclic_orders({Integer(sylow)}),
                        spec + " Sylow " + std::to_string(p) + " H^4 = " + H4.str());
        }
        const ConjClassData cls = conjugacy_classes(G);
        for (Elem g : cls.class_reps) {
            const std::array<Elem, 1> gen{g};
            const Subgroup C = generated_subgroup(G, gen);
            out.require(G.order() % C.group.order() == 0, "cyclic subgroup order");
            out.require(cohomology_presentation(C.group, 4, Coefficients::Z()).group ==
                            from_cyclic_orders({Integer(C.group.order())}),
                        spec + " cyclic subgroup H^4");
        }
    }
    out.detail = "16 groups of order <= 24 in degrees 0..4; 2O/2I degree 4 via subgroups";
    return out;
}

// 4. Inertia decomposition.
Outcome inertia_components() {
    Outcome out;
    std::vector<std::string> specs;
    for (int n = 1; n <= 8; ++n) specs.push_back("cyc:" + std::to_string(n));
    for (const char* s : {"sym:3", "ade:D4", "ade:D5"}) specs.push_back(s);
    for (const auto& spec : specs) {
        const FinGroup G = parse_group_spec(spec);
        const DecompositionCheck c = check_inertia_decomposition(G);
        out.require(c.components == conjugacy_classes(G).class_reps.size(), spec + " component count");
        out.require(c.h1_nerve == c.h1_expected, spec + " H1 = " + c.h1_nerve.str() + ", expected " +
                                                     c.h1_expected.str());
        out.require(c.ok(), spec + " decomposition data");
    }
    out.detail = std::to_string(specs.size()) + " groups";
    return out;
}

// 5. Transgression on random cocycles.
Outcome transgression_random(std::uint64_t seed, int per_config) {
    Outcome out;
    const FinGroup Z2 = cyclic_group(2);
    std::vector<std::pair<std::string, FinGroup>> groups;
    for (int n = 2; n <= 8; ++n) groups.emplace_back("cyc:" + std::to_string(n), cyclic_group(n));
    groups.emplace_back("sym:3", symmetric_group(3));
    groups.emplace_back("dih:4", dihedral_group(4));
    groups.emplace_back("ade:D4", ade_group(AdeFamily::D, 0));
    groups.emplace_back("Z2xZ2", direct_product(Z2, Z2));
    groups.emplace_back("Z2xZ4", direct_product(Z2, cyclic_group(4)));
    groups.emplace_back("Z2^3", direct_product(Z2, direct_product(Z2, Z2)));
    const std::vector<Coefficients> coeffs = {Coefficients::Z(), Coefficients::Zmod(2), Coefficients::Zmod(3),
                                              Coefficients::QmodZ()};
    std::mt19937_64 rng(seed);
    std::size_t cocycles = 0;
    for (const auto& [name, G] : groups) {
        const ConjClassData cls = conjugacy_classes(G);
        for (int n = 0; n <= 3; ++n) {
            const IntMatrix T = transgression_operator(G, n);
            const IntMatrix P = pipeline_operator(G, n);
            out.require(T == P, name + " operator mismatch in degree " + std::to_string(n));
            for (const Coefficients& A : coeffs) {
                const std::string where = name + " n=" + std::to_string(n) + " " + A.str();
                const CohomologyBasis source(G, n + 1, A);
                std::vector<CohomologyBasis> targets;
                for (std::size_t s = 0; s < cls.class_reps.size(); ++s)
                    targets.emplace_back(cls.centralizers[s].group, n, A);
                const Integer den = A.kind == Coefficients::Kind::rationals_mod_integers ? 12 : 1;
                const auto& pres = source.presentation();
                for (int trial = 0; trial < per_config; ++trial) {
                    ClassCoordinates coords;
                    for (const auto& t : pres.torsion) {
                        std::uniform_int_distribution<long> d(0, t.to_int64() - 1);
                        coords.torsion.push_back(Integer(d(rng)));
                    }
                    std::uniform_int_distribution<int> small(-3, 3);
                    for (std::size_t f = 0; f < pres.free_rank; ++f) coords.free.push_back(Integer(small(rng)));
                    for (std::size_t f = 0; f < pres.divisible_rank; ++f) coords.divisible.push_back(0);
                    const Cochain rep = source.representative(coords);
                    const Cochain b = make_cochain(G, n, A, [&](auto) { return Integer(small(rng)); }, den);
                    Cochain c = rep;
                    c.values = add(rep.values, coboundary(G, b).values, A);
                    ++cocycles;
                    out.require(is_cocycle(G, c), where + " input not a cocycle");
                    const TransgressedCochain t = transgress(G, c);
                    out.require(coboundary(G, t).values.is_zero(), where + " delta(tr c) != 0");
                    out.require(apply(P, c.values, A) == t.values, where + " formula != pipeline");
                    const TransgressedCochain t0 = transgress(G, rep);
                    for (std::size_t s = 0; s < cls.class_reps.size(); ++s) {
                        const Elem g = cls.class_reps[s];
                        out.require(targets[s].class_of(sector_restriction(G, t, g)) ==
                                        targets[s].class_of(sector_restriction(G, t0, g)),
                                    where + " not constant on the class");
                    }
                }
            }
        }
    }
    out.detail = std::to_string(cocycles) + " cocycles, seed " + std::to_string(seed);
    return out;
}

// 6. GRH comparison.
Outcome grh_comparison() {
    Outcome out;
    std::size_t squares = 0, printed = 0;
    for (const char* spec : {"cyc:2", "cyc:3", "cyc:4", "sym:3", "ade:D4"})
        for (const char* xs : {"point", "regular"}) {
            const FinGroup G = parse_group_spec(spec);
            ComparisonOptions options;
            options.max_degree = 4;
            const ComparisonReport r = verify_comparison(G, parse_gset(G, xs), options);
            out.require(r.ok(), std::string(spec) + " on " + xs + ": " +
                                    (r.failures.empty() ? "" : r.failures.front()));
            out.require(r.bijection_checks > 0, "no bijection checks");
            squares += r.squares_checked;
            printed += r.printed_checked;
        }
    out.detail = std::to_string(squares) + " squares, " + std::to_string(printed) + " printed-formula checks";
    return out;
}

// 7. Borel construction of the quaternionic sphere.
Outcome borel_sphere() {
    Outcome out;
    for (std::size_t m : {2, 3, 4}) {
        const SesReport r = verify_ses(m, default_polygon_multiplier(m));
        const std::vector<AbGroupPresentation> expected = {
            from_cyclic_orders({Integer(0)}), {}, from_cyclic_orders({Integer(m)}), {},
            from_cyclic_orders({Integer(0), Integer(m)})};
        const std::string where = "m=" + std::to_string(m);
        out.require(r.cohomology == expected, where + " cohomology table");
        out.require(r.fiber_ok, where + " fiber restriction");
        out.require(r.base_ok, where + " base pullback");
        out.require(r.ok(), where + " verification report");
    }
    out.detail = "m = 2, 3, 4";
    return out;
}

std::string capture(const std::string& command, int& status) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
    status = pclose(pipe);
    return out;
}

// 8. Byte-identical CLI output.
Outcome cli_determinism() {
    Outcome out;
    const fs::path dir = fs::temp_directory_path() / "inertia_lab_acceptance";
    fs::create_directories(dir);
    const FinGroup Q8 = parse_group_spec("ade:D4");
    const CohomologyBasis basis(Q8, 3, Coefficients::QmodZ());
    const fs::path cocycle = dir / "q8_cocycle.json";
    std::ofstream(cocycle) << cocycle_to_json(Q8, "ade:D4", basis.generators().at(0));

    const std::vector<std::string> commands = {
        "group --ade E8",
        "group --group sym:3 --format json",
        "cohomology --group ade:D4 --degree 4 --coeff Z",
        "cohomology --group ade:D5 --degree 3 --coeff QmodZ --format json",
        "inertia --group sym:3",
        "inertia --group ade:D5 --format json",
        "transgress --group ade:D4 --degree 3 --coeff QmodZ",
        "transgress --group ade:D4 --degree 3 --coeff QmodZ --cocycle " + cocycle.string(),
        "transgress --group ade:D4 --degree 3 --coeff QmodZ --format json --cocycle " + cocycle.string(),
        "compare-grh --group sym:3 --gset regular --max-degree 4 --seed 3",
        "compare-grh --group ade:D4 --gset point --max-degree 3 --format json",
        "borel-sphere --m 2 --max-degree 4",
        "borel-sphere --m 3 --max-degree 4 --format json",
        "shuffles --p 2 --q 2",
        "shuffles --p 1 --q 1 --format json",
        "selftest",
    };
    for (const auto& command : commands) {
        std::set<std::string> outputs;
        for (const char* threads : {"1", "4"})
            for (int run = 0; run < 3; ++run) {
                int status = 0;
                outputs.insert(capture(std::string(INERTIA_LAB_CLI_PATH) + " " + command + " --threads " + threads +
                                           " 2>/dev/null",
                                       status));
                out.require(status == 0, command + " exited with status " + std::to_string(status));
            }
        out.require(outputs.size() == 1, command + " output differs between runs");
    }
    out.detail = std::to_string(commands.size()) + " commands x 3 runs x threads {1,4}";
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "shuffle and product combinatorics", 1, shuffle_counts},
        {2, "EZ/AW retraction", 10, ez_aw},
        {3, "group cohomology tables", 1800, group_cohomology_tables},
        {4, "inertia decomposition", 60, inertia_components},
        {5, "transgression", 300, [] { return transgression_random(0, 200); }},
        {6, "GRH comparison", 120, grh_comparison},
        {7, "Borel 4-sphere", 600, borel_sphere},
        {8, "CLI determinism", 600, cli_determinism},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= c.limit_seconds;
        const bool pass = o.ok && in_time;
        all = all && pass;
        std::ostringstream line;
        line << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << o.detail
             << "]  " << std::fixed << std::setprecision(2) << seconds << " s (limit " << c.limit_seconds << " s)";
        if (!in_time) line << "  over time";
        std::cout << line.str() << "\n";
        for (const auto& p : o.problems) std::cout << "    " << p << "\n";
        std::cout.flush();
    }
    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
    return all ? 0 : 1;
}
