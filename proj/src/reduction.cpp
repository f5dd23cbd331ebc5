#include "inertia_lab/reduction.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace inertia_lab {

int ReducedComplex::degree_of(std::uint32_t global) const {
    return static_cast<int>(std::upper_bound(offset_.begin(), offset_.end(), global) - offset_.begin()) - 1;
}

ReducedComplex::ReducedComplex(const ChainComplex& C) {
    const int top = C.top_degree();
    offset_.assign(top + 2, 0);
    for (int n = 0; n <= top; ++n) offset_[n + 1] = offset_[n] + C.rank(n);
    const std::size_t total = offset_[top + 1];

    std::vector<std::vector<Term>> bnd(total);
    std::vector<std::vector<std::uint32_t>> cob(total);
    for (int n = 1; n <= top; ++n)
        for (const auto& e : C.boundary(n).entries()) {
            const auto face = std::uint32_t(offset_[n - 1] + e.row), cell = std::uint32_t(offset_[n] + e.col);
            bnd[cell].push_back({face, e.value});
            cob[face].push_back(cell);
        }
    std::vector<char> alive(total, 1), crit(total, 0);
    std::vector<std::uint32_t> nc(total), cof(total);
    for (std::size_t x = 0; x < total; ++x) {
        nc[x] = std::uint32_t(bnd[x].size());
        cof[x] = std::uint32_t(cob[x].size());
    }

    std::deque<std::uint32_t> queue;
    for (std::size_t x = 0; x < total; ++x) queue.push_back(std::uint32_t(x));

    const auto find_term = [&](std::vector<Term>& terms, std::uint32_t cell) -> Term* {
        for (auto& t : terms)
            if (t.cell == cell) return &t;
        return nullptr;
    };
    const auto erase_term = [&](std::vector<Term>& terms, std::uint32_t cell) {
        terms.erase(std::find_if(terms.begin(), terms.end(), [cell](const Term& t) { return t.cell == cell; }));
    };

    const auto reduce = [&](std::uint32_t a, std::uint32_t b) {
        Step step{a, b, find_term(bnd[b], a)->coeff, bnd[b], {}};
        const Integer& u = step.unit;
        for (std::uint32_t y : cob[a]) {
            if (y == b || !alive[y]) continue;
            Term* hit = find_term(bnd[y], a);
            if (!hit) continue;
            const Integer c = hit->coeff;
            step.cofaces.push_back({y, c});
            erase_term(bnd[y], a);
            --nc[y];
            for (const auto& t : step.boundary) {
                if (t.cell == a) continue;
                if (!crit[t.cell]) throw std::logic_error("reduction would fill in a non-critical cell");
                Integer delta = -(c * u * t.coeff);
                if (Term* old = find_term(bnd[y], t.cell)) {
                    old->coeff += delta;
                    if (old->coeff.is_zero()) erase_term(bnd[y], t.cell);
                } else {
                    bnd[y].push_back({t.cell, std::move(delta)});
                    cob[t.cell].push_back(y);
                }
            }
            queue.push_back(y);
        }
        alive[a] = 0;
        for (const auto& t : bnd[a]) {
            --cof[t.cell];
            queue.push_back(t.cell);
        }
        alive[b] = 0;
        for (const auto& t : bnd[b]) {
            if (t.cell == a) continue;
            --cof[t.cell];
            queue.push_back(t.cell);
        }
        for (std::uint32_t y : cob[b]) {
            if (!alive[y] || !find_term(bnd[y], b)) continue;
            erase_term(bnd[y], b);
            --nc[y];
            queue.push_back(y);
        }
        bnd[a].clear();
        bnd[a].shrink_to_fit();
        bnd[b].clear();
        bnd[b].shrink_to_fit();
        steps_.push_back(std::move(step));
    };

    const auto attempt = [&](std::uint32_t x) {
        if (!alive[x] || crit[x]) return;
        if (cof[x] == 1) {
            for (std::uint32_t b : cob[x]) {
                if (!alive[b]) continue;
                const Term* t = find_term(bnd[b], x);
                if (!t) continue;
                if (!crit[b] && t->coeff.is_unit()) {
                    reduce(x, b);
                    return;
                }
                break;
            }
        }
        if (nc[x] == 1) {
            for (const auto& t : bnd[x]) {
                if (crit[t.cell]) continue;
                if (t.coeff.is_unit()) reduce(t.cell, x);
                return;
            }
        }
    };

    std::size_t next = 0;
    while (true) {
        while (!queue.empty()) {
            const std::uint32_t x = queue.front();
            queue.pop_front();
            attempt(x);
        }
        while (next < total && (!alive[next] || crit[next])) ++next;
        if (next == total) break;
        const auto s = std::uint32_t(next);
        crit[s] = 1;
        for (std::uint32_t y : cob[s]) {
            if (!alive[y] || !find_term(bnd[y], s)) continue;
            --nc[y];
            queue.push_back(y);
        }
    }

    critical_.assign(top + 1, {});
    std::vector<std::uint32_t> position(total, 0);
    for (int n = 0; n <= top; ++n)
        for (std::size_t i = 0; i < C.rank(n); ++i) {
            const auto g = std::uint32_t(offset_[n] + i);
            if (!alive[g]) continue;
            position[g] = std::uint32_t(critical_[n].size());
            critical_[n].push_back(std::uint32_t(i));
        }
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> maps;
    for (int n = 0; n <= top; ++n) ranks.push_back(critical_[n].size());
    for (int n = 1; n <= top; ++n) {
        std::vector<MatrixEntry> entries;
        for (std::uint32_t i : critical_[n]) {
            const auto g = std::uint32_t(offset_[n] + i);
            for (const auto& t : bnd[g]) entries.push_back({position[t.cell], position[g], t.coeff});
        }
        maps.push_back(IntMatrix::from_entries(ranks[n - 1], ranks[n], std::move(entries)));
    }
    reduced_ = ChainComplex(std::move(ranks), std::move(maps));
}

std::vector<Integer> ReducedComplex::expand_cochain(int n, const std::vector<Integer>& reduced) const {
    if (reduced.size() != critical(n).size()) throw std::invalid_argument("reduced cochain has the wrong size");
    const std::size_t base = offset_.at(n);
    std::vector<Integer> full(offset_.at(n + 1) - base, Integer(0));
    for (std::size_t i = 0; i < reduced.size(); ++i) full[critical_[n][i]] = reduced[i];
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        if (degree_of(it->a) == n) {
            Integer sum(0);
            for (const auto& t : it->boundary)
                if (t.cell != it->a) sum.add_mul(t.coeff, full[t.cell - base]);
            full[it->a - base] = -(it->unit * sum);
        } else if (degree_of(it->b) == n) {
            full[it->b - base] = Integer(0);
        }
    }
    return full;
}

std::vector<Integer> ReducedComplex::restrict_cochain(int n, const std::vector<Integer>& full) const {
    const std::size_t base = offset_.at(n);
    if (full.size() != offset_.at(n + 1) - base) throw std::invalid_argument("cochain has the wrong size");
    std::vector<Integer> values = full;
    for (const auto& step : steps_) {
        if (degree_of(step.b) != n) continue;
        const Integer scaled = step.unit * values[step.b - base];
        if (scaled.is_zero()) continue;
        for (const auto& t : step.cofaces) values[t.cell - base].sub_mul(t.coeff, scaled);
    }
    std::vector<Integer> out;
    out.reserve(critical(n).size());
    for (std::uint32_t i : critical_[n]) out.push_back(values[i]);
    return out;
}

AbGroupPresentation reduced_cohomology(const ChainComplex& C, int n, const Coefficients& A) {
    return cohomology(ReducedComplex(C).complex(), n, A);
}

}  // namespace inertia_lab
