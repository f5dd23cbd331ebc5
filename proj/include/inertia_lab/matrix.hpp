#pragma once

#include "inertia_lab/integer.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace inertia_lab {

struct MatrixEntry {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    Integer value;
    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Sparse integer matrix; entries sorted by (row, col), no duplicates, no explicit zeros.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    // Duplicates are summed, zeros dropped.
    static IntMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);
    static IntMatrix from_dense(const std::vector<std::vector<Integer>>& rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::size_t rows, std::size_t cols, std::span<const Integer> diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    std::span<const MatrixEntry> entries() const { return entries_; }
    std::span<const MatrixEntry> row(std::size_t i) const;
    Integer at(std::size_t i, std::size_t j) const;

    bool is_zero() const { return entries_.empty(); }
    bool is_diagonal() const;
    IntMatrix transpose() const;
    std::vector<std::vector<Integer>> dense() const;
    std::vector<Integer> apply(std::span<const Integer> x) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    // "rows cols nnz" then one "i j v" line per entry.
    void write_text(std::ostream& os) const;
    static IntMatrix read_text(std::istream& is);

private:
    void build_offsets();

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<MatrixEntry> entries_;
    std::vector<std::size_t> row_offsets_{0};
};

}  // namespace inertia_lab
