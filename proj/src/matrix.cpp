#include "inertia_lab/matrix.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace inertia_lab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) { build_offsets(); }

IntMatrix IntMatrix::from_entries(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries) {
    for (const auto& e : entries)
        if (e.row >= rows || e.col >= cols) throw std::out_of_range("matrix entry outside shape");
    std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    IntMatrix m(rows, cols);
    for (auto& e : entries) {
        if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
            m.entries_.back().value += e.value;
            if (m.entries_.back().value.is_zero()) m.entries_.pop_back();
        } else if (!e.value.is_zero()) {
            m.entries_.push_back(std::move(e));
        }
    }
    m.build_offsets();
    return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Integer>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<MatrixEntry> entries;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged dense matrix");
        for (std::size_t j = 0; j < cols; ++j)
            if (!rows[i][j].is_zero()) entries.push_back({std::uint32_t(i), std::uint32_t(j), rows[i][j]});
    }
    return from_entries(rows.size(), cols, std::move(entries));
}

IntMatrix IntMatrix::identity(std::size_t n) {
    std::vector<MatrixEntry> entries;
    for (std::size_t i = 0; i < n; ++i) entries.push_back({std::uint32_t(i), std::uint32_t(i), Integer(1)});
    return from_entries(n, n, std::move(entries));
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols, std::span<const Integer> diag) {
    if (diag.size() > std::min(rows, cols)) throw std::invalid_argument("diagonal longer than shape");
    std::vector<MatrixEntry> entries;
    for (std::size_t i = 0; i < diag.size(); ++i) entries.push_back({std::uint32_t(i), std::uint32_t(i), diag[i]});
    return from_entries(rows, cols, std::move(entries));
}

void IntMatrix::build_offsets() {
    row_offsets_.assign(rows_ + 1, 0);
    for (const auto& e : entries_) ++row_offsets_[e.row + 1];
    for (std::size_t i = 0; i < rows_; ++i) row_offsets_[i + 1] += row_offsets_[i];
}

std::span<const MatrixEntry> IntMatrix::row(std::size_t i) const {
    if (i >= rows_) throw std::out_of_range("row index out of range");
    return std::span<const MatrixEntry>(entries_.data() + row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]);
}

Integer IntMatrix::at(std::size_t i, std::size_t j) const {
    auto r = row(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const MatrixEntry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) return it->value;
    return Integer(0);
}

bool IntMatrix::is_diagonal() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const MatrixEntry& e) { return e.row == e.col; });
}

IntMatrix IntMatrix::transpose() const {
    std::vector<MatrixEntry> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
    return from_entries(cols_, rows_, std::move(t));
}

std::vector<std::vector<Integer>> IntMatrix::dense() const {
    std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_));
    for (const auto& e : entries_) d[e.row][e.col] = e.value;
    return d;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length differs from column count");
    std::vector<Integer> y(rows_);
    for (const auto& e : entries_) y[e.row].add_mul(e.value, x[e.col]);
    return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    std::vector<MatrixEntry> out;
    std::map<std::uint32_t, Integer> acc;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        acc.clear();
        for (const auto& e : a.row(i))
            for (const auto& f : b.row(e.col)) acc[f.col].add_mul(e.value, f.value);
        for (auto& [c, v] : acc)
            if (!v.is_zero()) out.push_back({std::uint32_t(i), c, std::move(v)});
    }
    return IntMatrix::from_entries(a.rows_, b.cols_, std::move(out));
}

void IntMatrix::write_text(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << ' ' << entries_.size() << '\n';
    for (const auto& e : entries_) os << e.row << ' ' << e.col << ' ' << e.value << '\n';
}

IntMatrix IntMatrix::read_text(std::istream& is) {
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(is >> rows >> cols >> nnz)) throw std::invalid_argument("malformed matrix header");
    std::vector<MatrixEntry> entries;
    entries.reserve(nnz);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::uint64_t i = 0, j = 0;
        std::string v;
        if (!(is >> i >> j >> v)) throw std::invalid_argument("truncated matrix entry list");
        if (i >= rows || j >= cols) throw std::invalid_argument("matrix entry outside shape");
        entries.push_back({std::uint32_t(i), std::uint32_t(j), Integer::parse(v)});
    }
    for (std::size_t k = 1; k < entries.size(); ++k) {
        const auto& p = entries[k - 1];
        const auto& q = entries[k];
        if (p.row > q.row || (p.row == q.row && p.col >= q.col))
            throw std::invalid_argument("matrix entries not sorted by (row, col)");
    }
    for (const auto& e : entries)
        if (e.value.is_zero()) throw std::invalid_argument("explicit zero in matrix file");
    return IntMatrix::from_entries(rows, cols, std::move(entries));
}

}  // namespace inertia_lab
