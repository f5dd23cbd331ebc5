#include "inertia_lab/borel.hpp"
#include "inertia_lab/comparison.hpp"
#include "inertia_lab/group_cohomology.hpp"
#include "inertia_lab/inertia.hpp"
#include "inertia_lab/io.hpp"
#include "inertia_lab/transgression.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace inertia_lab;

namespace {

py::dict presentation_dict(const AbGroupPresentation& P) {
    std::vector<std::string> torsion;
    for (const auto& t : P.torsion) torsion.push_back(t.str());
    py::dict d;
    d["free_rank"] = P.free_rank;
    d["torsion"] = torsion;
    d["divisible_rank"] = P.divisible_rank;
    d["text"] = P.str();
    return d;
}

}  // namespace

PYBIND11_MODULE(_inertia_lab, m) {
    m.doc() = "Exact computations with inertia groupoids, transgression and Borel constructions";

    py::register_exception<BudgetError>(m, "BudgetError");
    py::register_exception<FormatError>(m, "FormatError");

    m.def(
        "group_order", [](const std::string& spec) { return parse_group_spec(spec).order(); }, py::arg("spec"));

    m.def(
        "group_table",
        [](const std::string& spec) {
            const FinGroup G = parse_group_spec(spec);
            std::vector<std::vector<Elem>> rows(G.order());
            for (Elem a = 0; a < G.order(); ++a)
                for (Elem b = 0; b < G.order(); ++b) rows[a].push_back(G.mul(a, b));
            return rows;
        },
        py::arg("spec"));

    m.def(
        "cohomology",
        [](const std::string& spec, int degree, const std::string& coeff, std::size_t budget, unsigned threads) {
            const FinGroup G = parse_group_spec(spec);
            CohomologyReport r;
            {
                py::gil_scoped_release release;
                r = cohomology_presentation(G, degree, Coefficients::parse(coeff), budget, threads);
            }
            return presentation_dict(r.group);
        },
        py::arg("spec"), py::arg("degree"), py::arg("coeff") = "Z", py::arg("budget") = kDefaultSizeBudget,
        py::arg("threads") = 1u);

    m.def(
        "inertia",
        [](const std::string& spec) {
            const FinGroup G = parse_group_spec(spec);
            py::list rows;
            for (const auto& s : inertia_decomposition(G).sectors) {
                py::dict row;
                row["rep"] = G.label(s.rep);
                row["class_size"] = s.class_size;
                row["centralizer_order"] = s.centralizer.group.order();
                row["centralizer_abelianization"] = s.centralizer_abelianization.str();
                rows.append(row);
            }
            return rows;
        },
        py::arg("spec"));

    m.def(
        "shuffles",
        [](int p, int q) {
            py::list out;
            for (const auto& s : shuffles(p, q)) out.append(py::make_tuple(s.mu, s.nu, s.sign));
            return out;
        },
        py::arg("p"), py::arg("q"));

    m.def(
        "transgression_matrix",
        [](const std::string& spec, int degree, const std::string& coeff) {
            const FinGroup G = parse_group_spec(spec);
            const TransgressionMatrix M = transgression_matrix(G, degree - 1, Coefficients::parse(coeff));
            std::vector<std::vector<std::string>> entries;
            for (const auto& row : M.entries) {
                entries.emplace_back();
                for (const auto& v : row) entries.back().push_back(v.get_str());
            }
            py::dict d;
            d["source"] = presentation_dict(M.source);
            py::list targets;
            for (const auto& t : M.targets) targets.append(presentation_dict(t));
            d["targets"] = targets;
            d["rows"] = M.row_labels;
            d["entries"] = entries;
            return d;
        },
        py::arg("spec"), py::arg("degree"), py::arg("coeff") = "Z",
        "H^degree(G; A) -> sum over sectors of H^(degree-1)(C_g; A) in the computed bases.");

    m.def(
        "compare_grh",
        [](const std::string& spec, const std::string& gset, int max_degree, std::uint64_t seed, unsigned threads) {
            const FinGroup G = parse_group_spec(spec);
            const GSet X = parse_gset(G, gset);
            ComparisonOptions options;
            options.max_degree = max_degree;
            options.seed = seed;
            options.threads = threads;
            ComparisonReport r;
            {
                py::gil_scoped_release release;
                r = verify_comparison(G, X, options);
            }
            py::dict d;
            d["ok"] = r.ok();
            d["cells_checked"] = r.cells_checked;
            d["squares_checked"] = r.squares_checked;
            d["printed_checked"] = r.printed_checked;
            d["failures"] = r.failures;
            return d;
        },
        py::arg("spec"), py::arg("gset") = "point", py::arg("max_degree") = kMaxComparisonDegree,
        py::arg("seed") = 0, py::arg("threads") = 1u);

    m.def(
        "borel_sphere",
        [](std::size_t order, std::size_t k) {
            if (k == 0) k = default_polygon_multiplier(order);
            SesReport r;
            {
                py::gil_scoped_release release;
                r = verify_ses(order, k);
            }
            py::list groups;
            for (const auto& P : r.cohomology) groups.append(presentation_dict(P));
            py::dict d;
            d["m"] = r.m;
            d["k"] = r.k;
            d["cohomology"] = groups;
            d["cell_counts"] = r.cell_counts;
            d["fiber_ok"] = r.fiber_ok;
            d["base_ok"] = r.base_ok;
            d["split_ok"] = r.split_ok;
            d["ok"] = r.ok();
            return d;
        },
        py::arg("m"), py::arg("k") = 0);
}
