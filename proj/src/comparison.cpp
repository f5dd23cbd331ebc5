#include "inertia_lab/comparison.hpp"

#include "inertia_lab/config.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace inertia_lab {

namespace {

std::string join_ints(const IntWord& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

std::vector<SectorData> sector_data(const FinGroup& G, const GSet& X) {
    const ConjClassData cls = conjugacy_classes(G);
    std::vector<SectorData> out;
    for (std::size_t c = 0; c < cls.class_reps.size(); ++c)
        out.push_back({cls.class_reps[c], cls.centralizers[c].embedding, X.fixed_points(cls.class_reps[c])});
    return out;
}

void check_degree(int max_degree) {
    if (max_degree < 0 || max_degree > kMaxComparisonDegree)
        throw std::invalid_argument("comparison models are supported in degrees 0.." +
                                    std::to_string(kMaxComparisonDegree));
}

using GrhBorel = BorelCell<ResolvedCentralizer, FixedLocus>;
using CycBorel = BorelCell<IntegerNerve, SkeletalSector>;

std::size_t power(std::size_t base, int e) {
    std::size_t out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

std::string GrhCell::str() const {
    std::ostringstream os;
    os << "[g=" << sector << "; x=" << point;
    for (const auto& s : slots) os << "; (" << s.h << "," << s.r.get_str() << "," << join_ints(s.ints) << ")";
    os << "]";
    return os.str();
}

std::string CycCell::str() const {
    std::ostringstream os;
    os << "[g=" << sector << "; x=" << point << "; h=(";
    for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? "," : "") << edges[i];
    os << ")";
    for (const auto& w : words) os << "; " << join_ints(w);
    os << "]";
    return os.str();
}

GrhModel::GrhModel(const FinGroup& G, const GSet& X, int max_degree)
    : G_(&G), X_(&X), max_degree_(max_degree), sectors_(sector_data(G, X)) {
    check_degree(max_degree);
}

GrhCell GrhModel::face(const GrhCell& c, int i) const {
    const ResolvedCentralizer grp(*G_, c.sector);
    const FixedLocus space{G_, X_};
    const GrhBorel out = borel_face(grp, space, GrhBorel{c.point, c.slots}, i);
    return GrhCell{c.sector, out.base, out.tail};
}

GrhCell GrhModel::degeneracy(const GrhCell& c, int i) const {
    const ResolvedCentralizer grp(*G_, c.sector);
    const FixedLocus space{G_, X_};
    const GrhBorel out = borel_degeneracy(grp, space, GrhBorel{c.point, c.slots}, i);
    return GrhCell{c.sector, out.base, out.tail};
}

std::size_t GrhModel::finite_cell_count(int n) const {
    std::size_t total = 0;
    for (const auto& s : sectors_) total += s.fixed_points.size() * power(s.centralizer.size(), n);
    return total;
}

std::vector<std::string> GrhModel::cell_violations(const GrhCell& c) const {
    std::vector<std::string> out;
    const auto it = std::find_if(sectors_.begin(), sectors_.end(), [&](const SectorData& s) { return s.rep == c.sector; });
    if (it == sectors_.end()) return {"sector is not a class representative: " + c.str()};
    if (!std::binary_search(it->fixed_points.begin(), it->fixed_points.end(), c.point))
        out.push_back("point not fixed by the sector: " + c.str());
    const int n = c.degree();
    for (int s = 0; s < n; ++s) {
        if (static_cast<int>(c.slots[s].ints.size()) != n - 1 - s) out.push_back("slot has the wrong shape: " + c.str());
        if (!std::binary_search(it->centralizer.begin(), it->centralizer.end(), c.slots[s].h))
            out.push_back("edge outside the centralizer: " + c.str());
    }
    return out;
}

CycModel::CycModel(const FinGroup& G, const GSet& X, int max_degree)
    : G_(&G), X_(&X), max_degree_(max_degree), sectors_(sector_data(G, X)) {
    check_degree(max_degree);
}

CycCell CycModel::face(const CycCell& c, int i) const {
    const SkeletalSector space{G_, X_, c.sector};
    const CycBorel out = borel_face(IntegerNerve{}, space, CycBorel{SkeletalCell{c.point, c.edges}, c.words}, i);
    return CycCell{c.sector, out.base.point, out.base.edges, out.tail};
}

CycCell CycModel::degeneracy(const CycCell& c, int i) const {
    const SkeletalSector space{G_, X_, c.sector};
    const CycBorel out = borel_degeneracy(IntegerNerve{}, space, CycBorel{SkeletalCell{c.point, c.edges}, c.words}, i);
    return CycCell{c.sector, out.base.point, out.base.edges, out.tail};
}

std::size_t CycModel::finite_cell_count(int n) const {
    std::size_t total = 0;
    for (const auto& s : sectors_) total += s.fixed_points.size() * power(s.centralizer.size(), n);
    return total;
}

std::vector<std::string> CycModel::cell_violations(const CycCell& c) const {
    std::vector<std::string> out;
    const auto it = std::find_if(sectors_.begin(), sectors_.end(), [&](const SectorData& s) { return s.rep == c.sector; });
    if (it == sectors_.end()) return {"sector is not a class representative: " + c.str()};
    if (!std::binary_search(it->fixed_points.begin(), it->fixed_points.end(), c.point))
        out.push_back("point not fixed by the sector: " + c.str());
    const int n = c.degree();
    if (static_cast<int>(c.words.size()) != n) out.push_back("wrong number of integer words: " + c.str());
    for (int s = 0; s < static_cast<int>(c.words.size()); ++s)
        if (static_cast<int>(c.words[s].size()) != n - 1 - s) out.push_back("word has the wrong shape: " + c.str());
    for (Elem h : c.edges)
        if (!std::binary_search(it->centralizer.begin(), it->centralizer.end(), h))
            out.push_back("edge outside the centralizer: " + c.str());
    return out;
}

GrhModel grh_inertia(const FinGroup& G, const GSet& X, int max_degree) { return GrhModel(G, X, max_degree); }
CycModel cyclification_model(const FinGroup& G, const GSet& X, int max_degree) { return CycModel(G, X, max_degree); }

CycCell comparison_morphism(const FinGroup& G, const GrhCell& c) {
    const int n = c.degree();
    CycCell out{c.sector, c.point, {}, {}};
    for (int s = 0; s < n; ++s) {
        const int j = n - 1 - s;  // slot s carries h_j
        std::int64_t twist = 0;
        for (int k = j + 1; k < n; ++k) twist += c.slots[n - 1 - k].ints[k - 1 - j];  // n_{k,j}
        out.edges.push_back(G.mul(c.slots[s].h, G.pow(c.sector, -twist)));
        out.words.push_back(c.slots[s].ints);
    }
    return out;
}

// ---- printed formulas -------------------------------------------------------

namespace {

ResolvedElement R(Elem h, const mpq_class& r, IntWord ints = {}) { return ResolvedElement{h, r, std::move(ints)}; }

}  // namespace

GrhCell printed_grh_face(const FinGroup& G, const GSet& X, const GrhCell& c, int i) {
    const Elem g = c.sector, x = c.point;
    auto gp = [&](std::int64_t k) { return G.pow(g, k); };
    auto xr = [&](Elem h) { return X.right_act(G, x, h); };
    auto cell = [&](std::uint32_t pt, std::vector<ResolvedElement> s) { return GrhCell{g, pt, std::move(s)}; };
    const auto& S = c.slots;
    switch (c.degree()) {
    case 1: {
        const Elem h = S[0].h;
        if (i == 0) return cell(xr(h), {});
        if (i == 1) return cell(x, {});
        break;
    }
    case 2: {
        const Elem h1 = S[0].h, h0 = S[1].h;
        const mpq_class &r1 = S[0].r, &r0 = S[1].r;
        const std::int64_t n = S[0].ints[0];
        if (i == 0) return cell(xr(h1), {R(h0, r0)});
        if (i == 1) return cell(x, {R(G.mul(G.mul(gp(-n), h1), h0), r1 + r0 + n)});
        if (i == 2) return cell(x, {R(h1, r1)});
        break;
    }
    case 3: {
        const Elem h2 = S[0].h, h1 = S[1].h, h0 = S[2].h;
        const mpq_class &r2 = S[0].r, &r1 = S[1].r, &r0 = S[2].r;
        const std::int64_t n21 = S[0].ints[0], n20 = S[0].ints[1], n1 = S[1].ints[0];
        if (i == 0) return cell(xr(h2), {R(h1, r1, {n1}), R(h0, r0)});
        if (i == 1) return cell(x, {R(G.mul(G.mul(gp(-n21), h2), h1), r2 + n21 + r1, {n20 + n1}), R(h0, r0)});
        if (i == 2) return cell(x, {R(h2, r2, {n21 + n20}), R(G.mul(G.mul(gp(-n1), h1), h0), r1 + n1 + r0)});
        if (i == 3) return cell(x, {R(h2, r2, {n21}), R(h1, r1)});
        break;
    }
    case 4: {
        const Elem h3 = S[0].h, h2 = S[1].h, h1 = S[2].h, h0 = S[3].h;
        const mpq_class &r3 = S[0].r, &r2 = S[1].r, &r1 = S[2].r, &r0 = S[3].r;
        const std::int64_t n32 = S[0].ints[0], n31 = S[0].ints[1], n30 = S[0].ints[2];
        const std::int64_t n21 = S[1].ints[0], n20 = S[1].ints[1], n1 = S[2].ints[0];
        if (i == 0) return cell(xr(h3), {R(h2, r2, {n21, n20}), R(h1, r1, {n1}), R(h0, r0)});
        if (i == 1)
            return cell(x, {R(G.mul(G.mul(gp(-n32), h3), h2), r3 + n32 + r2, {n31 + n21, n30 + n20}), R(h1, r1, {n1}),
                            R(h0, r0)});
        if (i == 2)
            return cell(x, {R(h3, r3, {n32 + n31, n30}), R(G.mul(G.mul(gp(-n21), h2), h1), r2 + n21 + r1, {n20 + n1}),
                            R(h0, r0)});
        if (i == 3)
            return cell(x, {R(h3, r3, {n32, n31 + n30}), R(h2, r2, {n21 + n20}),
                            R(G.mul(G.mul(gp(-n1), h1), h0), r1 + n1 + r0)});
        if (i == 4) return cell(x, {R(h3, r3, {n32, n31}), R(h2, r2, {n21}), R(h1, r1)});
        break;
    }
    default:
        throw std::invalid_argument("printed faces exist in degrees 1..4 only");
    }
    throw std::out_of_range("face index out of range");
}

GrhCell printed_grh_degeneracy(const FinGroup& G, const GrhCell& c, int i) {
    const Elem e = G.identity(), g = c.sector, x = c.point;
    auto cell = [&](std::vector<ResolvedElement> s) { return GrhCell{g, x, std::move(s)}; };
    const auto& S = c.slots;
    switch (c.degree()) {
    case 0:
        if (i == 0) return cell({R(e, 0)});
        break;
    case 1: {
        const Elem h = S[0].h;
        const mpq_class& r = S[0].r;
        if (i == 0) return cell({R(e, 0, {0}), R(h, r)});
        if (i == 1) return cell({R(h, r, {0}), R(e, 0)});
        break;
    }
    case 2: {
        const Elem h1 = S[0].h, h0 = S[1].h;
        const mpq_class &r1 = S[0].r, &r0 = S[1].r;
        const std::int64_t n = S[0].ints[0];
        if (i == 0) return cell({R(e, 0, {0, 0}), R(h1, r1, {n}), R(h0, r0)});
        if (i == 1) return cell({R(h1, r1, {0, n}), R(e, 0, {0}), R(h0, r0)});
        if (i == 2) return cell({R(h1, r1, {n, 0}), R(h0, r0, {0}), R(e, 0)});
        break;
    }
    case 3: {
        const Elem h2 = S[0].h, h1 = S[1].h, h0 = S[2].h;
        const mpq_class &r2 = S[0].r, &r1 = S[1].r, &r0 = S[2].r;
        const std::int64_t n21 = S[0].ints[0], n20 = S[0].ints[1], n1 = S[1].ints[0];
        if (i == 0) return cell({R(e, 0, {0, 0, 0}), R(h2, r2, {n21, n20}), R(h1, r1, {n1}), R(h0, r0)});
        if (i == 1) return cell({R(h2, r2, {0, n21, n20}), R(e, 0, {0, 0}), R(h1, r1, {n1}), R(h0, r0)});
        if (i == 2) return cell({R(h2, r2, {n21, 0, n20}), R(h1, r1, {0, n1}), R(e, 0, {0}), R(h0, r0)});
        if (i == 3) return cell({R(h2, r2, {n21, n20, 0}), R(h1, r1, {n1, 0}), R(h0, r0, {0}), R(e, 0)});
        break;
    }
    default:
        throw std::invalid_argument("printed degeneracies exist in degrees 0..3 only");
    }
    throw std::out_of_range("degeneracy index out of range");
}

CycCell printed_cyc_face(const FinGroup& G, const GSet& X, const CycCell& c, int i) {
    const Elem g = c.sector, x = c.point;
    auto gp = [&](std::int64_t k) { return G.pow(g, k); };
    auto xr = [&](Elem h) { return X.right_act(G, x, h); };
    auto cell = [&](std::uint32_t pt, std::vector<Elem> h, std::vector<IntWord> w) {
        w.emplace_back();  // the empty word in Z^0
        return CycCell{g, pt, std::move(h), std::move(w)};
    };
    const auto& H = c.edges;
    switch (c.degree()) {
    case 1: {
        const Elem h = H[0];
        if (i == 0) return CycCell{g, xr(h), {}, {}};
        if (i == 1) return CycCell{g, x, {}, {}};
        break;
    }
    case 2: {
        const Elem h1 = H[0], h0 = H[1];
        const std::int64_t n = c.words[0][0];
        if (i == 0) return cell(xr(h1), {G.mul(gp(n), h0)}, {});
        if (i == 1) return cell(x, {G.mul(h1, h0)}, {});
        if (i == 2) return cell(x, {h1}, {});
        break;
    }
    case 3: {
        const Elem h2 = H[0], h1 = H[1], h0 = H[2];
        const std::int64_t n21 = c.words[0][0], n20 = c.words[0][1], n1 = c.words[1][0];
        if (i == 0) return cell(xr(h2), {G.mul(gp(n21), h1), G.mul(gp(n20), h0)}, {{n1}});
        if (i == 1) return cell(x, {G.mul(h2, h1), h0}, {{n20 + n1}});
        if (i == 2) return cell(x, {h2, G.mul(h1, h0)}, {{n21 + n20}});
        if (i == 3) return cell(x, {h2, h1}, {{n21}});
        break;
    }
    case 4: {
        const Elem h3 = H[0], h2 = H[1], h1 = H[2], h0 = H[3];
        const std::int64_t n32 = c.words[0][0], n31 = c.words[0][1], n30 = c.words[0][2];
        const std::int64_t n21 = c.words[1][0], n20 = c.words[1][1], n1 = c.words[2][0];
        if (i == 0)
            return cell(xr(h3), {G.mul(gp(n32), h2), G.mul(gp(n31), h1), G.mul(gp(n30), h0)}, {{n21, n20}, {n1}});
        if (i == 1) return cell(x, {G.mul(h3, h2), h1, h0}, {{n31 + n21, n30 + n20}, {n1}});
        if (i == 2) return cell(x, {h3, G.mul(h2, h1), h0}, {{n32 + n31, n30}, {n20 + n1}});
        if (i == 3) return cell(x, {h3, h2, G.mul(h1, h0)}, {{n32, n31 + n30}, {n21 + n20}});
        if (i == 4) return cell(x, {h3, h2, h1}, {{n32, n31}, {n21}});
        break;
    }
    default:
        throw std::invalid_argument("printed faces exist in degrees 1..4 only");
    }
    throw std::out_of_range("face index out of range");
}

CycCell printed_cyc_degeneracy(const FinGroup& G, const CycCell& c, int i) {
    const Elem e = G.identity(), g = c.sector, x = c.point;
    auto cell = [&](std::vector<Elem> h, std::vector<IntWord> w) {
        w.emplace_back();
        return CycCell{g, x, std::move(h), std::move(w)};
    };
    const auto& H = c.edges;
    switch (c.degree()) {
    case 0:
        if (i == 0) return cell({e}, {});
        break;
    case 1: {
        const Elem h = H[0];
        if (i == 0) return cell({e, h}, {{0}});
        if (i == 1) return cell({h, e}, {{0}});
        break;
    }
    case 2: {
        const Elem h1 = H[0], h0 = H[1];
        const std::int64_t n = c.words[0][0];
        if (i == 0) return cell({e, h1, h0}, {{0, 0}, {n}});
        if (i == 1) return cell({h1, e, h0}, {{0, n}, {0}});
        if (i == 2) return cell({h1, h0, e}, {{n, 0}, {0}});
        break;
    }
    case 3: {
        const Elem h2 = H[0], h1 = H[1], h0 = H[2];
        const std::int64_t n21 = c.words[0][0], n20 = c.words[0][1], n1 = c.words[1][0];
        if (i == 0) return cell({e, h2, h1, h0}, {{0, 0, 0}, {n21, n20}, {n1}});
        if (i == 1) return cell({h2, e, h1, h0}, {{0, n21, n20}, {0, 0}, {n1}});
        if (i == 2) return cell({h2, h1, e, h0}, {{n21, 0, n20}, {0, n1}, {0}});
        if (i == 3) return cell({h2, h1, h0, e}, {{n21, n20, 0}, {n1, 0}, {0}});
        break;
    }
    default:
        throw std::invalid_argument("printed degeneracies exist in degrees 0..3 only");
    }
    throw std::out_of_range("degeneracy index out of range");
}

CycCell printed_comparison(const FinGroup& G, const GrhCell& c) {
    const Elem g = c.sector, x = c.point;
    auto gp = [&](std::int64_t k) { return G.pow(g, k); };
    const auto& S = c.slots;
    std::vector<IntWord> words;
    for (const auto& s : S) words.push_back(s.ints);
    switch (c.degree()) {
    case 0:
        return CycCell{g, x, {}, {}};
    case 1:
        return CycCell{g, x, {S[0].h}, words};
    case 2: {
        const std::int64_t n = S[0].ints[0];
        return CycCell{g, x, {S[0].h, G.mul(S[1].h, gp(-n))}, words};
    }
    case 3: {
        const std::int64_t n21 = S[0].ints[0], n20 = S[0].ints[1], n1 = S[1].ints[0];
        return CycCell{g, x, {S[0].h, G.mul(S[1].h, gp(-n21)), G.mul(S[2].h, gp(-n20 - n1))}, words};
    }
    case 4: {
        const std::int64_t n32 = S[0].ints[0], n31 = S[0].ints[1], n30 = S[0].ints[2];
        const std::int64_t n21 = S[1].ints[0], n20 = S[1].ints[1], n1 = S[2].ints[0];
        return CycCell{g,
                       x,
                       {S[0].h, G.mul(S[1].h, gp(-n32)), G.mul(S[2].h, gp(-n31 - n21)),
                        G.mul(S[3].h, gp(-n30 - n20 - n1))},
                       words};
    }
    default:
        throw std::invalid_argument("the printed comparison map covers degrees 0..4 only");
    }
}

// ---- verification harness ---------------------------------------------------

namespace {

struct Job {
    std::size_t sector;
    std::uint32_t point;
};

mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

GrhCell random_slots(std::size_t sector_rep, std::uint32_t x, std::span<const Elem> hs, std::int64_t range,
                     std::mt19937_64& rng) {
    const int n = static_cast<int>(hs.size());
    std::uniform_int_distribution<std::int64_t> dist(-range, range);
    GrhCell c{Elem(sector_rep), x, {}};
    for (int s = 0; s < n; ++s) {
        ResolvedElement a{hs[s], random_rational(rng), IntWord(n - 1 - s)};
        for (auto& v : a.ints) v = dist(rng);
        c.slots.push_back(std::move(a));
    }
    return c;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
    return a * 0xbf58476d1ce4e5b9ull;
}

}  // namespace

ComparisonReport verify_comparison(const FinGroup& G, const GSet& X, const ComparisonOptions& options) {
    const GrhModel left(G, X, options.max_degree);
    const CycModel right(G, X, options.max_degree);
    if (options.samples < 1) throw std::invalid_argument("need at least one sample per cell");
    if (!X.axiom_violations(G).empty()) throw std::invalid_argument("G-set axioms fail");

    std::vector<Job> jobs;
    for (std::size_t s = 0; s < left.sectors().size(); ++s)
        for (std::uint32_t x : left.sectors()[s].fixed_points) jobs.push_back({s, x});

    struct Partial {
        std::size_t cells = 0, squares = 0, printed = 0, bijections = 0;
        std::vector<std::string> failures;
    };
    const unsigned chunks = chunk_count(jobs.size(), options.threads);
    std::vector<Partial> parts(std::max(1u, chunks));

    parallel_for(jobs.size(), options.threads, [&](std::size_t begin, std::size_t end, unsigned k) {
        Partial& P = parts[k];
        auto fail = [&P](const std::string& what, const std::string& where) {
            if (P.failures.size() < 200) P.failures.push_back(where + ": " + what);
        };
        for (std::size_t jb = begin; jb < end; ++jb) {
            const SectorData& sec = left.sectors()[jobs[jb].sector];
            const std::uint32_t x = jobs[jb].point;
            const std::size_t csize = sec.centralizer.size();
            for (int n = 0; n <= options.max_degree; ++n) {
                const std::size_t finite = power(csize, n);
                std::mt19937_64 rng(mix(mix(options.seed, sec.rep), mix(x, n)));
                // one integer/rational sample set per sample index, shared across edge tuples,
                // so that the h-twist can be checked for bijectivity
                for (int sample = 0; sample < options.samples; ++sample) {
                    const GrhCell proto = random_slots(sec.rep, x, std::vector<Elem>(n, G.identity()), options.int_range, rng);
                    std::vector<char> hit(finite, 0);
                    std::vector<Elem> hs(n);
                    for (std::size_t t = 0; t < finite; ++t) {
                        std::size_t rest = t;
                        for (int i = n - 1; i >= 0; --i) {
                            hs[i] = sec.centralizer[rest % csize];
                            rest /= csize;
                        }
                        GrhCell c = proto;
                        for (int s = 0; s < n; ++s) c.slots[s].h = hs[s];
                        const std::string where = "degree " + std::to_string(n) + " cell " + c.str();
                        ++P.cells;
                        for (const auto& v : left.cell_violations(c)) fail(v, where);

                        const CycCell image = comparison_morphism(G, c);
                        for (const auto& v : right.cell_violations(image)) fail(v, where);
                        ++P.printed;
                        if (printed_comparison(G, c) != image) fail("printed comparison map differs", where);

                        // forgetting rationals: the image does not see them, and the edge
                        // twist is a bijection of C_g^n for fixed integers
                        GrhCell shifted = c;
                        for (auto& s : shifted.slots) s.r += mpq_class(1, 3);
                        if (comparison_morphism(G, shifted) != image) fail("image depends on rationals", where);
                        std::size_t code = 0;
                        for (int i = 0; i < n; ++i)
                            code = code * csize +
                                   std::size_t(std::lower_bound(sec.centralizer.begin(), sec.centralizer.end(),
                                                                image.edges[i]) -
                                               sec.centralizer.begin());
                        if (code < finite) {
                            if (hit[code]) fail("two cells share an image", where);
                            hit[code] = 1;
                        }

                        for (int i = 0; i <= n && n > 0; ++i) {
                            const GrhCell lf = left.face(c, i);
                            const CycCell rf = right.face(image, i);
                            ++P.squares;
                            if (comparison_morphism(G, lf) != rf)
                                fail("face square d" + std::to_string(i) + " does not commute", where);
                            P.printed += 2;
                            if (printed_grh_face(G, X, c, i) != lf)
                                fail("derived left d" + std::to_string(i) + " differs from printed", where);
                            if (printed_cyc_face(G, X, image, i) != rf)
                                fail("derived right d" + std::to_string(i) + " differs from printed", where);
                        }
                        if (n < options.max_degree) {
                            for (int i = 0; i <= n; ++i) {
                                const GrhCell ld = left.degeneracy(c, i);
                                const CycCell rd = right.degeneracy(image, i);
                                ++P.squares;
                                if (comparison_morphism(G, ld) != rd)
                                    fail("degeneracy square s" + std::to_string(i) + " does not commute", where);
                                P.printed += 2;
                                if (printed_grh_degeneracy(G, c, i) != ld)
                                    fail("derived left s" + std::to_string(i) + " differs from printed", where);
                                if (printed_cyc_degeneracy(G, image, i) != rd)
                                    fail("derived right s" + std::to_string(i) + " differs from printed", where);
                            }
                        }
                    }
                    ++P.bijections;
                    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
                        fail("edge twist is not onto C_g^" + std::to_string(n),
                             "sector " + std::to_string(sec.rep) + " point " + std::to_string(x));
                }
            }
        }
    });

    ComparisonReport report;
    for (auto& p : parts) {
        report.cells_checked += p.cells;
        report.squares_checked += p.squares;
        report.printed_checked += p.printed;
        report.bijection_checks += p.bijections;
        std::move(p.failures.begin(), p.failures.end(), std::back_inserter(report.failures));
    }
    std::sort(report.failures.begin(), report.failures.end());
    return report;
}

}  // namespace inertia_lab
