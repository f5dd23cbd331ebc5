#include "commands.hpp"

#include "inertia_lab/borel.hpp"
#include "inertia_lab/comparison.hpp"
#include "inertia_lab/config.hpp"
#include "inertia_lab/group_cohomology.hpp"
#include "inertia_lab/inertia.hpp"
#include "inertia_lab/io.hpp"
#include "inertia_lab/transgression.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace inertia_lab::cli {

using json = nlohmann::json;

namespace {

struct Options {
    std::string group;
    std::string ade;
    std::string gset = "point";
    int degree = 2;
    std::string coeff = "Z";
    int max_degree = kMaxComparisonDegree;
    std::size_t m = 2;
    std::size_t k = 0;
    int p = 1;
    int q = 1;
    std::string cocycle;
    std::string format = "table";
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::size_t budget = 0;
    int samples = 2;

    bool as_json() const { return format == "json"; }
    std::size_t size_budget() const { return budget > 0 ? budget : budget_from_env(); }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json presentation_json(const AbGroupPresentation& P) {
    std::vector<std::string> torsion;
    for (const auto& t : P.torsion) torsion.push_back(t.str());
    return {{"free_rank", P.free_rank}, {"torsion", torsion}, {"divisible_rank", P.divisible_rank}, {"text", P.str()}};
}

FinGroup require_group(const Options& o) {
    if (o.group.empty()) throw UsageError("--group is required");
    return parse_group_spec(o.group);
}

// Left-aligned columns separated by two spaces.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t c = 0; c < r.size(); ++c) {
            s += r[c];
            if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
        }
        out << s << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

int cmd_group(const Options& o, std::ostream& out) {
    FinGroup G;
    std::string spec = o.group;
    if (!o.ade.empty()) {
        std::size_t parameter = 0;
        G = ade_group(parse_ade_family(o.ade, parameter), parameter);
        spec = "ade:" + o.ade;
    } else {
        G = require_group(o);
    }
    if (o.as_json()) {
        out << group_to_json(G) << "\n";
        return kOk;
    }
    const ConjClassData cls = conjugacy_classes(G);
    out << "group " << spec << (G.name().empty() ? "" : " (" + G.name() + ")") << "\n";
    out << "order " << G.order() << "\n";
    out << "abelian " << (G.is_abelian() ? "yes" : "no") << "\n";
    out << "conjugacy classes " << cls.class_reps.size() << "\n";
    out << "abelianization " << abelianization(G).str() << "\n";
    return kOk;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
    const FinGroup G = require_group(o);
    if (o.degree < 0) throw UsageError("--degree must be non-negative");
    const Coefficients A = Coefficients::parse(o.coeff);
    const CohomologyReport r = cohomology_presentation(G, o.degree, A, o.size_budget(), o.threads);
    if (o.as_json()) {
        out << json{{"group", o.group},
                    {"degree", o.degree},
                    {"coefficients", json::parse(coefficients_to_json(A))},
                    {"cohomology", presentation_json(r.group)}}
                   .dump()
            << "\n";
    } else {
        out << r.group.str() << "\n";
    }
    return kOk;
}

int cmd_inertia(const Options& o, std::ostream& out) {
    const FinGroup G = require_group(o);
    const InertiaDecomposition D = inertia_decomposition(G);
    if (o.as_json()) {
        json rows = json::array();
        for (const auto& s : D.sectors)
            rows.push_back({{"rep", G.label(s.rep)},
                            {"class_size", s.class_size},
                            {"centralizer_order", s.centralizer.group.order()},
                            {"centralizer_abelianization", presentation_json(s.centralizer_abelianization)}});
        out << json{{"group", o.group}, {"sectors", std::move(rows)}}.dump() << "\n";
        return kOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : D.sectors)
        rows.push_back({G.label(s.rep), std::to_string(s.class_size), std::to_string(s.centralizer.group.order()),
                        s.centralizer_abelianization.str()});
    print_table(out, {"rep", "|class|", "|C_g|", "C_g^ab"}, rows);
    return kOk;
}

std::string class_text(const ClassCoordinates& c) { return c.str(); }

int cmd_transgress(const Options& o, std::ostream& out) {
    const FinGroup G = require_group(o);
    const std::size_t budget = o.size_budget();
    if (!o.cocycle.empty()) {
        const Cochain c = cocycle_from_json(G, read_file(o.cocycle));
        if (c.degree < 1) throw UsageError("the cocycle needs degree >= 1");
        if (!is_cocycle(G, c, budget)) throw UsageError("the input cochain is not a cocycle");
        const TransgressedCochain t = transgress(G, c, budget);
        const ConjClassData cls = conjugacy_classes(G);
        json sectors = json::array();
        std::vector<std::vector<std::string>> rows;
        for (std::size_t s = 0; s < cls.class_reps.size(); ++s) {
            const Elem g = cls.class_reps[s];
            const CohomologyBasis target(cls.centralizers[s].group, t.degree, c.coeffs, budget, o.threads);
            const ClassCoordinates coords = target.class_of(sector_restriction(G, t, g));
            sectors.push_back({{"sector", G.label(g)},
                               {"target", presentation_json(target.presentation())},
                               {"class", class_text(coords)}});
            rows.push_back({G.label(g), target.presentation().str(), class_text(coords)});
        }
        if (o.as_json()) {
            out << json{{"transgressed", json::parse(transgressed_to_json(G, o.group, t))}, {"sectors", sectors}}.dump()
                << "\n";
        } else {
            out << transgressed_to_json(G, o.group, t) << "\n";
            print_table(out, {"sector", "H^" + std::to_string(t.degree) + "(C_g)", "class"}, rows);
        }
        return kOk;
    }
    if (o.degree < 1) throw UsageError("--degree must be at least 1");
    const Coefficients A = Coefficients::parse(o.coeff);
    const TransgressionMatrix M = transgression_matrix(G, o.degree - 1, A, budget);
    if (o.as_json()) {
        json entries = json::array();
        for (const auto& row : M.entries) {
            json r = json::array();
            for (const auto& v : row) r.push_back(v.get_str());
            entries.push_back(std::move(r));
        }
        json targets = json::array();
        for (const auto& t : M.targets) targets.push_back(presentation_json(t));
        out << json{{"group", o.group},
                    {"degree", o.degree},
                    {"coefficients", json::parse(coefficients_to_json(A))},
                    {"source", presentation_json(M.source)},
                    {"targets", std::move(targets)},
                    {"rows", M.row_labels},
                    {"entries", std::move(entries)}}
                   .dump()
            << "\n";
        return kOk;
    }
    out << "source H^" << o.degree << " = " << M.source.str() << "\n";
    for (std::size_t s = 0; s < M.sectors.size(); ++s)
        out << "sector " << G.label(M.sectors[s]) << "  H^" << M.degree << "(C_g) = " << M.targets[s].str() << "\n";
    if (M.entries.empty()) {
        out << "all target coordinates vanish\n";
        return kOk;
    }
    const std::size_t generators = M.source.torsion.size() + M.source.free_rank;
    std::vector<std::string> header{"coordinate"};
    for (std::size_t c = 0; c < generators; ++c) header.push_back("gen" + std::to_string(c));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < M.entries.size(); ++r) {
        std::vector<std::string> row{M.row_labels[r]};
        for (const auto& v : M.entries[r]) row.push_back(v.get_str());
        rows.push_back(std::move(row));
    }
    print_table(out, header, rows);
    return kOk;
}

int cmd_compare_grh(const Options& o, std::ostream& out) {
    const FinGroup G = require_group(o);
    const GSet X = parse_gset(G, o.gset);
    ComparisonOptions options;
    options.max_degree = o.max_degree;
    options.seed = o.seed;
    options.threads = o.threads;
    options.samples = o.samples;
    const ComparisonReport r = verify_comparison(G, X, options);
    if (o.as_json()) {
        out << json{{"group", o.group},
                    {"gset", o.gset},
                    {"max_degree", o.max_degree},
                    {"cells_checked", r.cells_checked},
                    {"squares_checked", r.squares_checked},
                    {"printed_checked", r.printed_checked},
                    {"bijection_checks", r.bijection_checks},
                    {"failures", r.failures},
                    {"verdict", r.ok() ? "PASS" : "FAIL"}}
                   .dump()
            << "\n";
    } else {
        out << "group " << o.group << "  gset " << o.gset << "  max degree " << o.max_degree << "\n";
        out << "cells checked     " << r.cells_checked << "\n";
        out << "squares checked   " << r.squares_checked << "\n";
        out << "printed checked   " << r.printed_checked << "\n";
        out << "bijection checks  " << r.bijection_checks << "\n";
        out << "failures          " << r.failures.size() << "\n";
        for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 20); ++i) out << "  " << r.failures[i] << "\n";
        out << (r.ok() ? "PASS" : "FAIL") << "\n";
    }
    return r.ok() ? kOk : kVerificationFailed;
}

int cmd_borel_sphere(const Options& o, std::ostream& out) {
    if (o.m < 1) throw UsageError("--m must be positive");
    const std::size_t k = o.k > 0 ? o.k : default_polygon_multiplier(o.m);
    if (o.max_degree < 0 || o.max_degree > 4) throw UsageError("--max-degree must be in 0..4");
    const std::size_t budget = o.size_budget();
    std::vector<AbGroupPresentation> table;
    std::optional<SesReport> ses;
    if (o.max_degree == 4) {
        ses = verify_ses(o.m, k, budget);
        table = ses->cohomology;
    } else {
        for (int n = 0; n <= o.max_degree; ++n) table.push_back(borel_sphere_cohomology(o.m, k, n, budget));
    }
    const bool ok = !ses || ses->ok();
    if (o.as_json()) {
        json groups = json::array();
        for (const auto& P : table) groups.push_back(presentation_json(P));
        json j{{"m", o.m}, {"k", k}, {"cohomology", std::move(groups)}};
        if (ses) {
            std::vector<std::string> fiber;
            for (const auto& v : ses->fiber_restriction) fiber.push_back(v.str());
            j["ses"] = {{"sphere_homology", ses->sphere_homology_ok},
                        {"action", ses->action_ok},
                        {"shape", ses->shape_ok},
                        {"fiber_restriction", fiber},
                        {"fiber", ses->fiber_ok},
                        {"base_image", ses->base_image.str()},
                        {"base", ses->base_ok},
                        {"north_section", ses->north_section.str()},
                        {"south_section", ses->south_section.str()},
                        {"split", ses->split_ok},
                        {"pole_swap", ses->pole_swap_ok},
                        {"cell_counts", ses->cell_counts},
                        {"cell_counts_closed_form", ses->euler_ok},
                        {"verdict", ok ? "PASS" : "FAIL"}};
        }
        out << j.dump() << "\n";
        return ok ? kOk : kVerificationFailed;
    }
    out << "Borel construction of the sphere model, Z/" << o.m << " acting, k = " << k << "\n";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n < table.size(); ++n) rows.push_back({"H^" + std::to_string(n), table[n].str()});
    print_table(out, {"degree", "group"}, rows);
    if (ses) {
        const auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
        std::string fiber;
        for (const auto& v : ses->fiber_restriction) fiber += (fiber.empty() ? "" : " ") + v.str();
        std::string counts;
        for (auto c : ses->cell_counts) counts += (counts.empty() ? "" : " ") + std::to_string(c);
        const auto line = [&](const std::string& label, const std::string& value) {
            out << std::left << std::setw(24) << label << value << "\n";
        };
        line("cells per degree", counts);
        line("sphere homology", yes(ses->sphere_homology_ok));
        line("free off the poles", yes(ses->action_ok));
        line("H^4 = Z + Z/" + std::to_string(o.m), yes(ses->shape_ok));
        line("fiber restriction", "[" + fiber + "] " + yes(ses->fiber_ok));
        line("base pullback", ses->base_image.str() + " " + yes(ses->base_ok));
        line("section (north pole)", ses->north_section.str() + " " + yes(ses->split_ok));
        line("section (south pole)", ses->south_section.str() + " " + yes(ses->pole_swap_ok));
        line("cell counts closed form", yes(ses->euler_ok));
        out << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_shuffles(const Options& o, std::ostream& out) {
    if (o.p < 0 || o.q < 0) throw UsageError("--p and --q must be non-negative");
    const auto list = shuffles(o.p, o.q);
    if (o.as_json()) {
        json records = json::array();
        for (const auto& s : list) records.push_back({{"mu", s.mu}, {"nu", s.nu}, {"sign", s.sign}});
        out << json{{"p", o.p}, {"q", o.q}, {"shuffles", std::move(records)}}.dump() << "\n";
        return kOk;
    }
    const auto seq = [](const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : list) rows.push_back({seq(s.mu), seq(s.nu), s.sign > 0 ? "+1" : "-1"});
    print_table(out, {"mu", "nu", "sign"}, rows);
    return kOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
    std::vector<std::pair<std::string, std::function<bool()>>> checks;
    checks.emplace_back("simplicial identities on D[2] x D[1]", [] {
        return simplicial_identity_violations(product(standard_simplex(2), standard_simplex(1)), 4).empty();
    });
    checks.emplace_back("shuffle counts p,q <= 4", [] {
        for (int p = 0; p <= 4; ++p)
            for (int q = 0; q <= 4; ++q) {
                std::size_t binom = 1;
                for (int i = 1; i <= q; ++i) binom = binom * (p + i) / i;
                if (shuffles(p, q).size() != binom) return false;
            }
        return true;
    });
    checks.emplace_back("group axioms for ADE groups", [] {
        for (const char* name : {"A1", "A5", "D4", "D5", "E6", "E7", "E8"}) {
            std::size_t parameter = 0;
            if (!ade_group(parse_ade_family(name, parameter), parameter).axiom_violations(2000).empty()) return false;
        }
        return true;
    });
    checks.emplace_back("H^n(Z/6) against the periodic complex", [&] {
        const FinGroup G = cyclic_group(6);
        for (int n = 0; n <= 4; ++n)
            if (cohomology_presentation(G, n, Coefficients::Z(), kDefaultSizeBudget, o.threads).group !=
                cyclic_periodic_cohomology(6, n, Coefficients::Z()))
                return false;
        return true;
    });
    checks.emplace_back("inertia decomposition for S3 and Q8", [] {
        return check_inertia_decomposition(symmetric_group(3)).ok() &&
               check_inertia_decomposition(ade_group(AdeFamily::D, 0)).ok();
    });
    checks.emplace_back("transgression formula equals pipeline for S3", [] {
        const FinGroup G = symmetric_group(3);
        for (int n = 0; n <= 2; ++n)
            if (!(transgression_operator(G, n) == pipeline_operator(G, n))) return false;
        return true;
    });
    checks.emplace_back("comparison squares for Z/3 on the regular G-set", [&] {
        const FinGroup G = cyclic_group(3);
        ComparisonOptions options;
        options.max_degree = 3;
        options.seed = o.seed;
        options.threads = o.threads;
        return verify_comparison(G, left_regular_gset(G), options).ok();
    });
    checks.emplace_back("Borel sphere SES for m = 2", [] { return verify_ses(2, default_polygon_multiplier(2)).ok(); });

    bool all = true;
    std::vector<std::vector<std::string>> rows;
    json results = json::array();
    for (const auto& [name, check] : checks) {
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception&) {
            ok = false;
        }
        all = all && ok;
        rows.push_back({name, ok ? "PASS" : "FAIL"});
        results.push_back({{"check", name}, {"result", ok ? "PASS" : "FAIL"}});
    }
    if (o.as_json()) {
        out << json{{"checks", std::move(results)}, {"verdict", all ? "PASS" : "FAIL"}}.dump() << "\n";
    } else {
        print_table(out, {"check", "result"}, rows);
        out << (all ? "PASS" : "FAIL") << "\n";
    }
    return all ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Inertia groupoids, transgression and Borel constructions for finite groups", "inertia-lab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--seed", o.seed, "seed for randomized checks");
        sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--budget", o.budget, "tuple budget; overrides INERTIA_LAB_BUDGET")
            ->check(CLI::PositiveNumber);
    };
    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub);
        return sub;
    };

    CLI::App* group = add("group", "describe a finite group");
    group->add_option("--group", o.group, "group spec");
    group->add_option("--ade", o.ade, "ADE label such as A3, D5, E8");

    CLI::App* cohomology = add("cohomology", "H^n(G; A) as an abelian group");
    cohomology->add_option("--group", o.group, "group spec")->required();
    cohomology->add_option("--degree", o.degree, "n")->required();
    cohomology->add_option("--coeff", o.coeff, "Z, Zmod:<m> or QmodZ");

    CLI::App* inertia = add("inertia", "inertia groupoid decomposition table");
    inertia->add_option("--group", o.group, "group spec")->required();

    CLI::App* transgress_cmd = add("transgress", "transgression of group cocycles");
    transgress_cmd->add_option("--group", o.group, "group spec")->required();
    transgress_cmd->add_option("--degree", o.degree, "degree of the cocycle");
    transgress_cmd->add_option("--coeff", o.coeff, "Z, Zmod:<m> or QmodZ");
    transgress_cmd->add_option("--cocycle", o.cocycle, "cocycle JSON file");

    CLI::App* compare = add("compare-grh", "check the GRH comparison squares");
    compare->add_option("--group", o.group, "group spec")->required();
    compare->add_option("--gset", o.gset, "point, regular or two-orbit");
    compare->add_option("--max-degree", o.max_degree, "top degree")->check(CLI::Range(1, kMaxComparisonDegree));
    compare->add_option("--samples", o.samples, "integer samples per finite cell")->check(CLI::Range(1, 100));

    CLI::App* borel_cmd = add("borel-sphere", "Borel cohomology of the quaternionic sphere model");
    borel_cmd->add_option("--m", o.m, "order of the cyclic group")->required();
    borel_cmd->add_option("--k", o.k, "polygon multiplier; default max(1, ceil(3/m))");
    borel_cmd->add_option("--max-degree", o.max_degree, "top degree, at most 4");

    CLI::App* shuffles_cmd = add("shuffles", "list (p,q)-shuffles with signs");
    shuffles_cmd->add_option("--p", o.p, "p")->required();
    shuffles_cmd->add_option("--q", o.q, "q")->required();

    CLI::App* selftest = add("selftest", "quick pass/fail matrix over all modules");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (group->parsed()) {
            if (o.group.empty() == o.ade.empty()) throw UsageError("give exactly one of --group and --ade");
            return cmd_group(o, out);
        }
        if (cohomology->parsed()) return cmd_cohomology(o, out);
        if (inertia->parsed()) return cmd_inertia(o, out);
        if (transgress_cmd->parsed()) return cmd_transgress(o, out);
        if (compare->parsed()) return cmd_compare_grh(o, out);
        if (borel_cmd->parsed()) return cmd_borel_sphere(o, out);
        if (shuffles_cmd->parsed()) return cmd_shuffles(o, out);
        if (selftest->parsed()) return cmd_selftest(o, out);
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudgetError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const FormatError& e) {
        err << "input error: " << e.what() << "\n";
        return kUsageError;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace inertia_lab::cli
