#include "inertia_lab/smith.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_set>
#include <stdexcept>

namespace inertia_lab {

void SmithTransform::set_permutations(std::vector<std::uint32_t> row_perm, std::vector<std::uint32_t> col_perm) {
    if (row_perm.size() != rows_ || col_perm.size() != cols_) throw std::invalid_argument("permutation length");
    row_perm_ = std::move(row_perm);
    col_perm_ = std::move(col_perm);
}

void SmithTransform::apply_U(std::vector<Integer>& x) const {
    if (x.size() != rows_) throw std::invalid_argument("vector length differs from row count");
    for (const auto& op : row_ops_) {
        if (op.kind == SmithOp::Kind::add) x[op.dst].add_mul(op.factor, x[op.src]);
        else x[op.dst] = -x[op.dst];
    }
    std::vector<Integer> y(rows_);
    for (std::size_t t = 0; t < rows_; ++t) y[t] = std::move(x[row_perm_[t]]);
    x = std::move(y);
}

void SmithTransform::apply_U_inv(std::vector<Integer>& y) const {
    if (y.size() != rows_) throw std::invalid_argument("vector length differs from row count");
    std::vector<Integer> x(rows_);
    for (std::size_t t = 0; t < rows_; ++t) x[row_perm_[t]] = std::move(y[t]);
    for (auto it = row_ops_.rbegin(); it != row_ops_.rend(); ++it) {
        if (it->kind == SmithOp::Kind::add) x[it->dst].sub_mul(it->factor, x[it->src]);
        else x[it->dst] = -x[it->dst];
    }
    y = std::move(x);
}

void SmithTransform::apply_V(std::vector<Integer>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length differs from column count");
    std::vector<Integer> z(cols_);
    for (std::size_t t = 0; t < cols_; ++t) z[col_perm_[t]] = std::move(x[t]);
    for (auto it = col_ops_.rbegin(); it != col_ops_.rend(); ++it) {
        if (it->kind == SmithOp::Kind::add) z[it->src].add_mul(it->factor, z[it->dst]);
        else z[it->dst] = -z[it->dst];
    }
    x = std::move(z);
}

void SmithTransform::apply_V_inv(std::vector<Integer>& y) const {
    if (y.size() != cols_) throw std::invalid_argument("vector length differs from column count");
    for (const auto& op : col_ops_) {
        if (op.kind == SmithOp::Kind::add) y[op.src].sub_mul(op.factor, y[op.dst]);
        else y[op.dst] = -y[op.dst];
    }
    std::vector<Integer> x(cols_);
    for (std::size_t t = 0; t < cols_; ++t) x[t] = std::move(y[col_perm_[t]]);
    y = std::move(x);
}

namespace {

IntMatrix materialize(std::size_t n, const std::function<void(std::vector<Integer>&)>& apply) {
    std::vector<MatrixEntry> entries;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Integer> e(n);
        e[j] = 1;
        apply(e);
        for (std::size_t i = 0; i < n; ++i)
            if (!e[i].is_zero()) entries.push_back({std::uint32_t(i), std::uint32_t(j), e[i]});
    }
    return IntMatrix::from_entries(n, n, std::move(entries));
}

}  // namespace

IntMatrix SmithTransform::U() const { return materialize(rows_, [this](auto& v) { apply_U(v); }); }
IntMatrix SmithTransform::U_inv() const { return materialize(rows_, [this](auto& v) { apply_U_inv(v); }); }
IntMatrix SmithTransform::V() const { return materialize(cols_, [this](auto& v) { apply_V(v); }); }
IntMatrix SmithTransform::V_inv() const { return materialize(cols_, [this](auto& v) { apply_V_inv(v); }); }

std::vector<Integer> SmithResult::nontrivial() const {
    std::vector<Integer> out;
    for (const auto& d : diagonal)
        if (!d.is_one()) out.push_back(d);
    return out;
}

namespace {

struct Pivot {
    std::uint32_t row, col;
    Integer value;
};

struct SparseEntry {
    std::uint32_t col;
    Integer v;
};
using SparseRow = std::vector<SparseEntry>;

class Eliminator {
public:
    Eliminator(const IntMatrix& M, SmithTransform* log)
        : R_(M.rows()), C_(M.cols()), log_(log), rows_(R_), col_rows_(C_), col_count_(C_, 0),
          row_alive_(R_, 1), col_alive_(C_, 1), stamp_(R_, 0) {
        for (const auto& e : M.entries()) {
            rows_[e.row].push_back({e.col, e.value});
            col_rows_[e.col].push_back(e.row);
            ++col_count_[e.col];
        }
    }

    void sparse_phase() {
        using Item = std::pair<std::uint32_t, std::uint32_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        for (std::uint32_t c = 0; c < C_; ++c)
            if (col_count_[c] > 0) heap.push({col_count_[c], c});
        std::vector<std::uint32_t> touched;
        std::uint32_t dedup_at = 64;
        while (!heap.empty()) {
            auto [cnt, c] = heap.top();
            heap.pop();
            if (!col_alive_[c] || col_count_[c] != cnt || cnt == 0) continue;
            if (cnt >= dedup_at) {
                // fill-in is growing; duplicate rows add nothing to the lattice
                drop_duplicate_rows();
                dedup_at = cnt * 2;
                if (col_count_[c] != cnt) {
                    if (col_count_[c] > 0) heap.push({col_count_[c], c});
                    for (std::uint32_t t = 0; t < C_; ++t)
                        if (col_alive_[t] && col_count_[t] > 0) heap.push({col_count_[t], t});
                    continue;
                }
            }
            const std::uint32_t r = choose_unit_row(c);
            if (r == UINT32_MAX) continue;
            touched.clear();
            eliminate(r, c, touched);
            for (std::uint32_t t : touched)
                if (col_alive_[t] && col_count_[t] > 0) heap.push({col_count_[t], t});
        }
    }

    void dense_phase(std::size_t limit) {
        std::vector<std::uint32_t> rids, cids;
        for (std::uint32_t r = 0; r < R_; ++r)
            if (row_alive_[r] && !rows_[r].empty()) rids.push_back(r);
        for (std::uint32_t c = 0; c < C_; ++c)
            if (col_alive_[c] && col_count_[c] > 0) cids.push_back(c);
        if (rids.empty() || cids.empty()) return;
        const std::size_t nr = rids.size(), nc = cids.size();
        if (nr * nc > limit)
            throw std::length_error("dense Smith core of size " + std::to_string(nr) + "x" + std::to_string(nc) +
                                    " exceeds limit");
        std::vector<std::uint32_t> col_pos(C_, UINT32_MAX);
        for (std::size_t j = 0; j < nc; ++j) col_pos[cids[j]] = static_cast<std::uint32_t>(j);
        std::vector<Integer> a(nr * nc);
        for (std::size_t i = 0; i < nr; ++i) {
            for (auto& e : rows_[rids[i]]) a[i * nc + col_pos[e.col]] = std::move(e.v);
            SparseRow().swap(rows_[rids[i]]);
        }
        auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * nc + j]; };
        std::vector<char> ra(nr, 1), ca(nc, 1);

        auto find_min = [&](std::size_t& pi, std::size_t& pj) {
            bool found = false;
            Integer best;
            for (std::size_t i = 0; i < nr; ++i) {
                if (!ra[i]) continue;
                for (std::size_t j = 0; j < nc; ++j) {
                    if (!ca[j] || at(i, j).is_zero()) continue;
                    Integer v = at(i, j).abs();
                    if (!found || v < best) {
                        best = std::move(v);
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            }
            return found;
        };

        std::size_t pi = 0, pj = 0;
        while (find_min(pi, pj)) {
            while (true) {
                bool remainder = false;
                const Integer p = at(pi, pj);
                for (std::size_t i = 0; i < nr; ++i) {
                    if (!ra[i] || i == pi || at(i, pj).is_zero()) continue;
                    const Integer q = floor_div(at(i, pj), p);
                    if (!q.is_zero()) {
                        for (std::size_t j = 0; j < nc; ++j)
                            if (ca[j] && !at(pi, j).is_zero()) at(i, j).sub_mul(q, at(pi, j));
                        if (log_) log_->row_op({SmithOp::Kind::add, rids[i], rids[pi], -q});
                    }
                    if (!at(i, pj).is_zero()) remainder = true;
                }
                for (std::size_t j = 0; j < nc; ++j) {
                    if (!ca[j] || j == pj || at(pi, j).is_zero()) continue;
                    const Integer q = floor_div(at(pi, j), p);
                    if (!q.is_zero()) {
                        for (std::size_t i = 0; i < nr; ++i)
                            if (ra[i] && !at(i, pj).is_zero()) at(i, j).sub_mul(q, at(i, pj));
                        if (log_) log_->col_op({SmithOp::Kind::add, cids[j], cids[pj], -q});
                    }
                    if (!at(pi, j).is_zero()) remainder = true;
                }
                if (remainder) {
                    // move the pivot to the smallest entry left in its row or column
                    Integer best = at(pi, pj).abs();
                    std::size_t bi = pi, bj = pj;
                    for (std::size_t i = 0; i < nr; ++i)
                        if (ra[i] && !at(i, pj).is_zero() && at(i, pj).abs() < best) {
                            best = at(i, pj).abs();
                            bi = i;
                            bj = pj;
                        }
                    for (std::size_t j = 0; j < nc; ++j)
                        if (ca[j] && !at(pi, j).is_zero() && at(pi, j).abs() < best) {
                            best = at(pi, j).abs();
                            bi = pi;
                            bj = j;
                        }
                    pi = bi;
                    pj = bj;
                    continue;
                }
                // row and column are clear; enforce divisibility of the rest
                std::size_t bad_row = nr;
                for (std::size_t i = 0; i < nr && bad_row == nr; ++i) {
                    if (!ra[i] || i == pi) continue;
                    for (std::size_t j = 0; j < nc; ++j)
                        if (ca[j] && j != pj && !divides(p, at(i, j))) {
                            bad_row = i;
                            break;
                        }
                }
                if (bad_row == nr) break;
                for (std::size_t j = 0; j < nc; ++j)
                    if (ca[j]) at(pi, j) += at(bad_row, j);
                if (log_) log_->row_op({SmithOp::Kind::add, rids[pi], rids[bad_row], Integer(1)});
            }
            if (at(pi, pj).sign() < 0) {
                at(pi, pj) = -at(pi, pj);
                if (log_) log_->row_op({SmithOp::Kind::negate, rids[pi], rids[pi], Integer(0)});
            }
            pivots_.push_back({rids[pi], cids[pj], at(pi, pj)});
            ra[pi] = 0;
            ca[pj] = 0;
        }
    }

    std::vector<Pivot>& pivots() { return pivots_; }

private:
    bool has_col(const SparseRow& row, std::uint32_t c, const Integer** v) const {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const SparseEntry& e, std::uint32_t x) { return e.col < x; });
        if (it == row.end() || it->col != c) return false;
        if (v) *v = &it->v;
        return true;
    }

    // Compacts col_rows_[c] to the live rows holding column c; returns the best unit row or UINT32_MAX.
    std::uint32_t choose_unit_row(std::uint32_t c) {
        ++epoch_;
        auto& list = col_rows_[c];
        std::size_t keep = 0;
        std::uint32_t best = UINT32_MAX;
        std::size_t best_len = SIZE_MAX;
        for (std::uint32_t r : list) {
            if (!row_alive_[r] || stamp_[r] == epoch_) continue;
            const Integer* v = nullptr;
            if (!has_col(rows_[r], c, &v)) continue;
            stamp_[r] = epoch_;
            list[keep++] = r;
            if (v->is_unit()) {
                const std::size_t len = rows_[r].size();
                if (len < best_len || (len == best_len && r < best)) {
                    best = r;
                    best_len = len;
                }
            }
        }
        list.resize(keep);
        return best;
    }

    void eliminate(std::uint32_t r, std::uint32_t c, std::vector<std::uint32_t>& touched) {
        SparseRow& prow = rows_[r];
        const Integer* pv = nullptr;
        has_col(prow, c, &pv);
        if (pv->sign() < 0) {
            for (auto& e : prow) e.v = -e.v;
            if (log_) log_->row_op({SmithOp::Kind::negate, r, r, Integer(0)});
        }
        const std::vector<std::uint32_t> others = col_rows_[c];
        for (std::uint32_t r2 : others) {
            if (r2 == r) continue;
            const Integer* v2 = nullptr;
            has_col(rows_[r2], c, &v2);
            const Integer k = -*v2;
            add_row(r2, r, k, touched);
            if (log_) log_->row_op({SmithOp::Kind::add, r2, r, k});
        }
        col_rows_[c].assign(1, r);
        if (log_)
            for (const auto& e : prow)
                if (e.col != c) log_->col_op({SmithOp::Kind::add, e.col, c, -e.v});
        for (const auto& e : prow) {
            --col_count_[e.col];
            touched.push_back(e.col);
        }
        pivots_.push_back({r, c, Integer(1)});
        row_alive_[r] = 0;
        col_alive_[c] = 0;
        SparseRow().swap(prow);
    }

    void drop_duplicate_rows() {
        struct RowHash {
            const std::vector<SparseRow>* rows;
            std::size_t operator()(std::uint32_t r) const {
                const SparseRow& row = (*rows)[r];
                const bool flip = row.front().v.sign() < 0;
                std::size_t h = row.size();
                for (const auto& e : row) {
                    const Integer v = flip ? -e.v : e.v;
                    h = h * 1000003u ^ (std::size_t(e.col) * 31u + v.hash());
                }
                return h;
            }
        };
        struct RowEq {
            const std::vector<SparseRow>* rows;
            bool operator()(std::uint32_t a, std::uint32_t b) const {
                const SparseRow& x = (*rows)[a];
                const SparseRow& y = (*rows)[b];
                if (x.size() != y.size()) return false;
                const bool flip = (x.front().v.sign() < 0) != (y.front().v.sign() < 0);
                for (std::size_t i = 0; i < x.size(); ++i)
                    if (x[i].col != y[i].col || x[i].v != (flip ? -y[i].v : y[i].v)) return false;
                return true;
            }
        };
        std::unordered_set<std::uint32_t, RowHash, RowEq> seen(R_ / 4 + 1, RowHash{&rows_}, RowEq{&rows_});
        for (std::uint32_t r = 0; r < R_; ++r) {
            if (!row_alive_[r] || rows_[r].empty()) continue;
            auto [it, fresh] = seen.insert(r);
            if (fresh) continue;
            const std::uint32_t keep = *it;
            const bool same = (rows_[keep].front().v.sign() < 0) == (rows_[r].front().v.sign() < 0);
            if (log_) log_->row_op({SmithOp::Kind::add, r, keep, Integer(same ? -1 : 1)});
            for (const auto& e : rows_[r]) --col_count_[e.col];
            SparseRow().swap(rows_[r]);
            row_alive_[r] = 0;
        }
    }

    // row[dst] += k * row[src]
    void add_row(std::uint32_t dst, std::uint32_t src, const Integer& k, std::vector<std::uint32_t>& touched) {
        const SparseRow& a = rows_[dst];
        const SparseRow& b = rows_[src];
        scratch_.clear();
        scratch_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
                scratch_.push_back(a[i++]);
            } else if (i == a.size() || b[j].col < a[i].col) {
                SparseEntry e{b[j].col, k * b[j].v};
                ++col_count_[e.col];
                col_rows_[e.col].push_back(dst);
                touched.push_back(e.col);
                scratch_.push_back(std::move(e));
                ++j;
            } else {
                Integer s = a[i].v;
                s.add_mul(k, b[j].v);
                if (s.is_zero()) {
                    --col_count_[a[i].col];
                    touched.push_back(a[i].col);
                } else {
                    scratch_.push_back({a[i].col, std::move(s)});
                }
                ++i;
                ++j;
            }
        }
        rows_[dst].swap(scratch_);
    }

    std::uint32_t R_, C_;
    SmithTransform* log_;
    std::vector<SparseRow> rows_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<std::uint32_t> col_count_;
    std::vector<char> row_alive_, col_alive_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;
    SparseRow scratch_;
    std::vector<Pivot> pivots_;
};

}  // namespace

SmithResult smith(const IntMatrix& M, const SmithOptions& options) {
    if (M.rows() >= UINT32_MAX || M.cols() >= UINT32_MAX) throw std::length_error("matrix too large");
    SmithResult out;
    out.rows = M.rows();
    out.cols = M.cols();
    if (options.transforms) out.transform.emplace(M.rows(), M.cols());
    Eliminator el(M, out.transform ? &*out.transform : nullptr);
    if (options.sparse_phase) el.sparse_phase();
    el.dense_phase(options.dense_limit);
    auto& pivots = el.pivots();
    for (const auto& p : pivots) out.diagonal.push_back(p.value);
    if (out.transform) {
        std::vector<char> row_used(M.rows(), 0), col_used(M.cols(), 0);
        std::vector<std::uint32_t> rp, cp;
        for (const auto& p : pivots) {
            rp.push_back(p.row);
            cp.push_back(p.col);
            row_used[p.row] = 1;
            col_used[p.col] = 1;
        }
        for (std::uint32_t r = 0; r < M.rows(); ++r)
            if (!row_used[r]) rp.push_back(r);
        for (std::uint32_t c = 0; c < M.cols(); ++c)
            if (!col_used[c]) cp.push_back(c);
        out.transform->set_permutations(std::move(rp), std::move(cp));
    }
    for (std::size_t i = 1; i < out.diagonal.size(); ++i)
        if (!divides(out.diagonal[i - 1], out.diagonal[i]))
            throw std::logic_error("Smith diagonal lost the divisibility chain");
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& M) {
    SmithOptions opt;
    opt.transforms = true;
    SmithResult r = smith(M, opt);
    return {IntMatrix::diagonal(M.rows(), M.cols(), r.diagonal), r.transform->U(), r.transform->V()};
}

}  // namespace inertia_lab
