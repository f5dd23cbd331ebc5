#include "inertia_lab/group_cohomology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace inertia_lab {

BarIndex::BarIndex(const FinGroup& G)
    : base_(G.order() - 1), digit_to_elem_(G.nontrivial()), elem_to_digit_(G.order(), UINT32_MAX) {
    for (std::size_t d = 0; d < digit_to_elem_.size(); ++d) elem_to_digit_[digit_to_elem_[d]] = std::uint32_t(d);
}

std::size_t BarIndex::count(int n, std::size_t budget) const {
    if (n < 0) return 0;
    std::size_t c = 1;
    for (int i = 0; i < n; ++i) {
        if (base_ != 0 && c > budget / base_) throw BudgetError("normalized bar tuples in degree " + std::to_string(n),
                                                                SIZE_MAX, budget);
        c *= base_;
    }
    if (c > budget) throw BudgetError("normalized bar tuples in degree " + std::to_string(n), c, budget);
    return c;
}

std::optional<std::uint64_t> BarIndex::find(std::span<const Elem> tuple) const {
    std::uint64_t idx = 0;
    for (Elem a : tuple) {
        const std::uint32_t d = elem_to_digit_.at(a);
        if (d == UINT32_MAX) return std::nullopt;
        idx = idx * base_ + d;
    }
    return idx;
}

void BarIndex::decode(int n, std::uint64_t index, std::span<Elem> out) const {
    for (int i = n - 1; i >= 0; --i) {
        out[i] = digit_to_elem_[index % base_];
        index /= base_;
    }
}

std::vector<Elem> BarIndex::tuple(int n, std::uint64_t index) const {
    std::vector<Elem> t(n);
    decode(n, index, t);
    return t;
}

Cochain make_cochain(const FinGroup& G, int n, const Coefficients& A,
                     const std::function<Integer(std::span<const Elem>)>& f, const Integer& den) {
    const BarIndex index(G);
    const std::size_t c = index.count(n);
    Cochain out{n, A, CoeffVector{std::vector<Integer>(c), 1}};
    if (f) {
        std::vector<Elem> t(n);
        for (std::size_t i = 0; i < c; ++i) {
            index.decode(n, i, t);
            out.values.num[i] = f(t);
        }
        out.values.den = den;
    }
    out.values = normalize(std::move(out.values), A);
    return out;
}

Integer cochain_value(const BarIndex& index, const Cochain& c, std::span<const Elem> tuple) {
    const auto i = index.find(tuple);
    return i ? c.values.num.at(*i) : Integer(0);
}

namespace {

// Faces of the normalized (n+1)-tuple sigma as (column, sign); identity-containing faces skipped.
template <class Visit>
void bar_faces(const FinGroup& G, const BarIndex& index, std::span<const Elem> sigma, std::vector<Elem>& scratch,
               Visit&& visit) {
    const int len = static_cast<int>(sigma.size());
    const int n = len - 1;
    scratch.resize(n);
    for (int i = 0; i <= len; ++i) {
        if (i == 0) {
            std::copy(sigma.begin() + 1, sigma.end(), scratch.begin());
        } else if (i == len) {
            std::copy(sigma.begin(), sigma.end() - 1, scratch.begin());
        } else {
            const Elem prod = G.mul(sigma[i - 1], sigma[i]);
            if (prod == G.identity()) continue;
            std::copy(sigma.begin(), sigma.begin() + (i - 1), scratch.begin());
            scratch[i - 1] = prod;
            std::copy(sigma.begin() + (i + 1), sigma.end(), scratch.begin() + i);
        }
        const auto col = index.find(scratch);
        if (col) visit(*col, (i % 2 == 0) ? 1 : -1);
    }
}

}  // namespace

IntMatrix bar_coboundary(const FinGroup& G, int n, std::size_t budget, unsigned threads) {
    const BarIndex index(G);
    if (n < 0) return IntMatrix(index.count(0), 0);
    const std::size_t cols = index.count(n, budget);
    const std::size_t rows = index.count(n + 1, budget);
    const unsigned chunks = chunk_count(rows, threads);
    std::vector<std::vector<MatrixEntry>> parts(chunks);
    parallel_for(rows, threads, [&](std::size_t begin, std::size_t end, unsigned k) {
        std::vector<Elem> sigma(n + 1), scratch;
        std::vector<std::pair<std::uint64_t, int>> row;
        auto& out = parts[k];
        for (std::size_t r = begin; r < end; ++r) {
            index.decode(n + 1, r, sigma);
            row.clear();
            bar_faces(G, index, sigma, scratch, [&](std::uint64_t col, int sign) { row.emplace_back(col, sign); });
            std::sort(row.begin(), row.end());
            for (std::size_t i = 0; i < row.size();) {
                int v = 0;
                std::size_t j = i;
                for (; j < row.size() && row[j].first == row[i].first; ++j) v += row[j].second;
                if (v != 0) out.push_back({std::uint32_t(r), std::uint32_t(row[i].first), Integer(v)});
                i = j;
            }
        }
    });
    std::vector<MatrixEntry> entries;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    entries.reserve(total);
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(entries));
    return IntMatrix::from_entries(rows, cols, std::move(entries));
}

CochainComplex bar_cochain_complex(const FinGroup& G, int degree_bound, std::size_t budget, unsigned threads) {
    if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
    const BarIndex index(G);
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> maps;
    for (int n = 0; n <= degree_bound; ++n) ranks.push_back(index.count(n, budget));
    for (int n = 0; n < degree_bound; ++n) maps.push_back(bar_coboundary(G, n, budget, threads));
    return CochainComplex(std::move(ranks), std::move(maps));
}

Cochain coboundary(const FinGroup& G, const Cochain& c, std::size_t budget) {
    const IntMatrix delta = bar_coboundary(G, c.degree, budget);
    if (delta.cols() != c.values.size()) throw std::invalid_argument("cochain size does not match its degree");
    return Cochain{c.degree + 1, c.coeffs, apply(delta, c.values, c.coeffs)};
}

bool is_cocycle(const FinGroup& G, const Cochain& c, std::size_t budget) {
    return coboundary(G, c, budget).values.is_zero();
}

CohomologyBasis::CohomologyBasis(const FinGroup& G, int n, const Coefficients& A, std::size_t budget,
                                 unsigned threads)
    : degree_(n), model_(bar_coboundary(G, n - 1, budget, threads), bar_coboundary(G, n, budget, threads), A) {
    if (n < 0) throw std::invalid_argument("negative cohomology degree");
}

std::vector<Cochain> CohomologyBasis::generators() const {
    std::vector<Cochain> out;
    for (const auto& g : model_.generators()) out.push_back(Cochain{degree_, model_.coefficients(), g});
    return out;
}

ClassCoordinates CohomologyBasis::class_of(const Cochain& c) const {
    if (c.degree != degree_) throw std::invalid_argument("cochain degree does not match the basis");
    if (!(c.coeffs == model_.coefficients())) throw std::invalid_argument("coefficients do not match the basis");
    return model_.coordinates(c.values);
}

Cochain CohomologyBasis::representative(const ClassCoordinates& coords) const {
    return Cochain{degree_, model_.coefficients(), model_.representative(coords)};
}

namespace {

// Boundary of a normalized chain basis element: sum of (-1)^i d_i with identity faces dropped.
template <class Visit>
void bar_boundary(const FinGroup& G, const BarIndex& index, std::span<const Elem> tau, std::vector<Elem>& scratch,
                  Visit&& visit) {
    if (tau.empty()) return;
    bar_faces(G, index, tau, scratch, visit);
}

}  // namespace

bool rational_acyclicity_certificate(const FinGroup& G, int n, std::size_t budget, unsigned threads) {
    if (n < 1) throw std::invalid_argument("the certificate needs degree >= 1");
    const BarIndex index(G);
    const std::size_t cn = index.count(n, budget);
    index.count(n + 1, budget);
    const unsigned chunks = chunk_count(cn, threads);
    std::vector<char> ok(chunks, 1);
    parallel_for(cn, threads, [&](std::size_t begin, std::size_t end, unsigned k) {
        std::vector<Elem> tau(n), longer(n + 1), face(n), scratch;
        std::unordered_map<std::uint64_t, long long> acc;
        for (std::size_t t = begin; t < end && ok[k]; ++t) {
            index.decode(n, t, tau);
            acc.clear();
            // d K tau
            for (Elem b : G.nontrivial()) {
                longer[0] = b;
                std::copy(tau.begin(), tau.end(), longer.begin() + 1);
                bar_boundary(G, index, longer, scratch, [&](std::uint64_t c, int s) { acc[c] += s; });
            }
            // K d tau
            bar_boundary(G, index, tau, scratch, [&](std::uint64_t c, int s) {
                index.decode(n - 1, c, face);
                for (Elem b : G.nontrivial()) {
                    longer[0] = b;
                    std::copy(face.begin(), face.end(), longer.begin() + 1);
                    acc[*index.find(std::span<const Elem>(longer.data(), n))] += s;
                }
            });
            for (const auto& [c, v] : acc) {
                const long long want = c == t ? static_cast<long long>(G.order()) : 0;
                if (v != want) {
                    ok[k] = 0;
                    break;
                }
            }
            if (acc.find(t) == acc.end()) ok[k] = 0;
        }
    });
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

CohomologyReport cohomology_presentation(const FinGroup& G, int n, const Coefficients& A, std::size_t budget,
                                         unsigned threads, std::size_t direct_limit) {
    if (n < 0) throw std::invalid_argument("negative cohomology degree");
    const BarIndex index(G);
    const std::size_t cn = index.count(n, budget);
    const std::size_t cnext = index.count(n + 1, budget);
    CohomologyReport report;
    const SmithResult prev = smith(bar_coboundary(G, n - 1, budget, threads));
    report.rank_prev = prev.rank();
    if (A.kind == Coefficients::Kind::integers && cnext > direct_limit && n >= 1) {
        // Rationally acyclic in degree n, so rank delta_{n-1} + rank delta_n = c_n.
        if (!rational_acyclicity_certificate(G, n, budget, threads))
            throw std::logic_error("acyclicity certificate failed");
        report.used_certificate = true;
        report.rank_next = cn - prev.rank();
        report.group = inertia_lab::cohomology_presentation(cn, report.rank_next, nullptr, prev.diagonal, A);
        return report;
    }
    const SmithResult next = smith(bar_coboundary(G, n, budget, threads));
    report.rank_next = next.rank();
    report.group = inertia_lab::cohomology_presentation(cn, next.rank(), &next.diagonal, prev.diagonal, A);
    return report;
}

AbGroupPresentation cyclic_periodic_cohomology(std::size_t m, int n, const Coefficients& A) {
    if (m == 0) throw std::invalid_argument("cyclic order must be positive");
    if (n < 0) throw std::invalid_argument("negative cohomology degree");
    std::vector<std::size_t> ranks(n + 2, 1);
    std::vector<IntMatrix> maps;
    const Integer order(static_cast<unsigned long long>(m));
    for (int k = 0; k <= n; ++k) {
        // dual of t - 1 (zero) after even degrees, dual of the norm (times m) after odd ones
        if (k % 2 == 0)
            maps.emplace_back(1, 1);
        else
            maps.push_back(IntMatrix::from_entries(1, 1, {{0, 0, order}}));
    }
    return cohomology(CochainComplex(std::move(ranks), std::move(maps)), n, A);
}

}  // namespace inertia_lab
