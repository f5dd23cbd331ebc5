#include "inertia_lab/io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace inertia_lab {

using json = nlohmann::json;

namespace {

std::size_t parse_size(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (text.empty() || pos != text.size()) throw FormatError("bad " + what + ": '" + text + "'");
    return static_cast<std::size_t>(v);
}

json integer_json(const Integer& v) {
    if (v.is_small()) return v.small_value();
    return v.str();
}

Integer integer_from(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        try {
            return Integer::parse(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw FormatError("expected an integer, got " + j.dump());
}

mpq_class rational_from(const json& j) {
    if (j.is_number_integer()) return mpq_class(mpz_class(j.get<long>()));
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) == 0 && q.get_den() != 0) {
            q.canonicalize();
            return q;
        }
    }
    throw FormatError("expected an integer or a fraction p/q, got " + j.dump());
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw FormatError(std::string("field '") + key + "' has the wrong type");
    }
}

Coefficients coefficients_from(const json& j) {
    const auto kind = field<std::string>(j, "kind");
    if (kind == "Z") return Coefficients::Z();
    if (kind == "QmodZ") return Coefficients::QmodZ();
    if (kind == "Zmod") {
        if (!j.contains("modulus")) throw FormatError("Zmod coefficients need a modulus");
        return Coefficients::Zmod(integer_from(j.at("modulus")));
    }
    throw FormatError("unknown coefficient kind '" + kind + "'");
}

json coefficients_json(const Coefficients& A) {
    switch (A.kind) {
        case Coefficients::Kind::integers: return {{"kind", "Z"}};
        case Coefficients::Kind::modular: return {{"kind", "Zmod"}, {"modulus", integer_json(A.modulus)}};
        case Coefficients::Kind::rationals_mod_integers: break;
    }
    return {{"kind", "QmodZ"}};
}

json value_json(const CoeffVector& v, std::size_t i, const Coefficients& A) {
    if (A.kind != Coefficients::Kind::rationals_mod_integers) return integer_json(v.num[i]);
    return v.value(i).get_str();
}

}  // namespace

AdeFamily parse_ade_family(const std::string& name, std::size_t& parameter) {
    if (name == "E6") return AdeFamily::E6;
    if (name == "E7") return AdeFamily::E7;
    if (name == "E8") return AdeFamily::E8;
    if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D')) {
        const std::size_t n = parse_size(name.substr(1), "ADE index");
        if (name[0] == 'A') {
            if (n < 1) throw FormatError("A_n needs n >= 1");
            parameter = n;
            return AdeFamily::A;
        }
        if (n < 4) throw FormatError("D_n needs n >= 4");
        parameter = n - 4;
        return AdeFamily::D;
    }
    throw FormatError("unknown ADE label '" + name + "'");
}

FinGroup parse_group_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw FormatError("group spec needs the form kind:value, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon), value = spec.substr(colon + 1);
    if (kind == "ade") {
        std::size_t parameter = 0;
        const AdeFamily family = parse_ade_family(value, parameter);
        return ade_group(family, parameter);
    }
    if (kind == "table") return group_from_json(read_file(value));
    const std::size_t n = parse_size(value, "group size");
    try {
        if (kind == "cyc") return cyclic_group(n);
        if (kind == "sym") return symmetric_group(n);
        if (kind == "dih") return dihedral_group(n);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    throw FormatError("unknown group kind '" + kind + "' (expected ade, cyc, sym, dih or table)");
}

std::string group_to_json(const FinGroup& G) {
    json mul = json::array();
    std::vector<std::string> labels;
    for (Elem a = 0; a < G.order(); ++a) {
        json row = json::array();
        for (Elem b = 0; b < G.order(); ++b) row.push_back(G.mul(a, b));
        mul.push_back(std::move(row));
        labels.push_back(G.label(a));
    }
    json j = {{"order", G.order()}, {"identity", G.identity()}, {"mul", std::move(mul)}, {"labels", labels}};
    if (!G.name().empty()) j["name"] = G.name();
    return j.dump();
}

FinGroup group_from_json(const std::string& text) {
    const json j = parse_json(text);
    const auto order = field<std::size_t>(j, "order");
    const auto identity = field<Elem>(j, "identity");
    const auto rows = field<std::vector<std::vector<Elem>>>(j, "mul");
    if (order == 0 || rows.size() != order) throw FormatError("mul must have `order` rows");
    std::vector<Elem> mul;
    mul.reserve(order * order);
    for (const auto& row : rows) {
        if (row.size() != order) throw FormatError("mul must be square");
        mul.insert(mul.end(), row.begin(), row.end());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels");
    const std::string name = j.contains("name") ? field<std::string>(j, "name") : std::string{};
    try {
        return FinGroup(order, std::move(mul), identity, std::move(labels), name);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("not a group table: ") + e.what());
    }
}

std::string sset_to_json(const SSet& X) {
    json cells = json::array(), faces = json::object(), labels = json::object();
    for (int d = 0; d <= X.dim_bound(); ++d) cells.push_back(std::vector<CellId>(X.cells(d).begin(), X.cells(d).end()));
    for (CellId c = 0; c < X.size(); ++c) {
        if (!X.label(c).empty()) labels[std::to_string(c)] = X.label(c);
        if (X.dim(c) == 0) continue;
        json list = json::array();
        for (const Simplex& f : X.faces(c)) list.push_back({{"base", f.base}, {"word", f.degeneracy_word}});
        faces[std::to_string(c)] = std::move(list);
    }
    json j = {{"dim_bound", X.dim_bound()}, {"cells", std::move(cells)}, {"faces", std::move(faces)}};
    if (!labels.empty()) j["labels"] = std::move(labels);
    return j.dump();
}

SSet sset_from_json(const std::string& text) {
    const json j = parse_json(text);
    const int dim_bound = field<int>(j, "dim_bound");
    if (dim_bound < 0) throw FormatError("negative dim_bound");
    const auto cells = field<std::vector<std::vector<CellId>>>(j, "cells");
    std::map<CellId, int> dims;
    for (std::size_t d = 0; d < cells.size(); ++d)
        for (CellId c : cells[d])
            if (!dims.emplace(c, int(d)).second) throw FormatError("cell listed twice");
    const json faces = j.contains("faces") ? j.at("faces") : json::object();
    const json labels = j.contains("labels") ? j.at("labels") : json::object();
    SSet X(dim_bound);
    CellId expected = 0;
    for (const auto& [id, d] : dims) {
        if (id != expected++) throw FormatError("cell ids must be 0..N-1");
        std::vector<Simplex> list;
        if (d > 0) {
            const std::string key = std::to_string(id);
            if (!faces.contains(key) || !faces.at(key).is_array() || faces.at(key).size() != std::size_t(d + 1))
                throw FormatError("cell " + key + " needs " + std::to_string(d + 1) + " faces");
            for (const auto& f : faces.at(key))
                list.push_back(Simplex{d - 1, field<CellId>(f, "base"), field<std::vector<int>>(f, "word")});
        }
        const std::string key = std::to_string(id);
        const std::string label = labels.contains(key) ? labels.at(key).get<std::string>() : std::string{};
        try {
            X.add_cell(d, std::move(list), label);
        } catch (const std::exception& e) {
            throw FormatError("cell " + key + ": " + e.what());
        }
    }
    return X;
}

std::string coefficients_to_json(const Coefficients& A) { return coefficients_json(A).dump(); }

std::string cocycle_to_json(const FinGroup& G, const std::string& group_spec, const Cochain& c) {
    const BarIndex index(G);
    json values = json::array();
    for (std::size_t i = 0; i < c.values.size(); ++i) {
        if (c.values.num[i].is_zero()) continue;
        values.push_back({index.tuple(c.degree, i), value_json(c.values, i, c.coeffs)});
    }
    return json{{"group", group_spec},
                {"degree", c.degree},
                {"coefficients", coefficients_json(c.coeffs)},
                {"values", std::move(values)}}
        .dump();
}

Cochain cocycle_from_json(const FinGroup& G, const std::string& text) {
    const json j = parse_json(text);
    const int degree = field<int>(j, "degree");
    if (degree < 0) throw FormatError("negative degree");
    if (!j.contains("coefficients")) throw FormatError("missing field 'coefficients'");
    const Coefficients A = coefficients_from(j.at("coefficients"));
    const BarIndex index(G);
    std::vector<std::pair<std::uint64_t, mpq_class>> entries;
    mpz_class den = 1;
    if (!j.contains("values") || !j.at("values").is_array()) throw FormatError("missing field 'values'");
    for (const auto& item : j.at("values")) {
        if (!item.is_array() || item.size() != 2) throw FormatError("each value must be [[tuple...], value]");
        std::vector<Elem> tuple;
        try {
            tuple = item[0].get<std::vector<Elem>>();
        } catch (const json::exception&) {
            throw FormatError("tuple must be a list of element indices");
        }
        if (int(tuple.size()) != degree) throw FormatError("tuple length does not match the degree");
        for (Elem e : tuple)
            if (e >= G.order()) throw FormatError("element index out of range");
        const auto pos = index.find(tuple);
        if (!pos) throw FormatError("tuples must be normalized (no identity entries)");
        const mpq_class v = A.kind == Coefficients::Kind::rationals_mod_integers ? rational_from(item[1])
                                                                                 : mpq_class(integer_from(item[1]).to_mpz());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
        entries.emplace_back(*pos, v);
    }
    Cochain c{degree, A, CoeffVector{std::vector<Integer>(index.count(degree, kDefaultSizeBudget), Integer(0)), 1}};
    c.values.den = Integer(den);
    for (const auto& [pos, v] : entries) {
        const mpz_class num = v.get_num() * (den / v.get_den());
        c.values.num[pos] += Integer(num);
    }
    c.values = normalize(std::move(c.values), A);
    return c;
}

std::string transgressed_to_json(const FinGroup& G, const std::string& group_spec, const TransgressedCochain& t) {
    const InertiaIndex index(G);
    json values = json::array();
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        if (t.values.num[i].is_zero()) continue;
        const InertiaCell cell = index.cell(t.degree, i);
        values.push_back({{cell.loop, cell.edges}, value_json(t.values, i, t.coeffs)});
    }
    return json{{"group", group_spec},
                {"degree", t.degree},
                {"coefficients", coefficients_json(t.coeffs)},
                {"values", std::move(values)}}
        .dump();
}

void export_chain_complex(const ChainComplex& C, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    json files = json::array();
    for (int n = 1; n <= C.top_degree(); ++n) {
        const std::string name = "boundary_" + std::to_string(n) + ".txt";
        std::ofstream out(dir / name);
        C.boundary(n).write_text(out);
        if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
        files.push_back(name);
    }
    std::ofstream manifest(dir / "manifest.json");
    manifest << json{{"ranks", C.ranks()}, {"boundaries", std::move(files)}}.dump(2) << "\n";
    if (!manifest) throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
}

ChainComplex import_chain_complex(const std::filesystem::path& dir) {
    const json j = parse_json(read_file(dir / "manifest.json"));
    const auto ranks = field<std::vector<std::size_t>>(j, "ranks");
    const auto files = field<std::vector<std::string>>(j, "boundaries");
    if (ranks.empty() ? !files.empty() : files.size() != ranks.size() - 1)
        throw FormatError("manifest needs one boundary file per positive degree");
    std::vector<IntMatrix> maps;
    for (const auto& name : files) {
        std::istringstream in(read_file(dir / name));
        try {
            maps.push_back(IntMatrix::read_text(in));
        } catch (const std::exception& e) {
            throw FormatError(name + ": " + e.what());
        }
    }
    try {
        return ChainComplex(ranks, std::move(maps));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace inertia_lab
