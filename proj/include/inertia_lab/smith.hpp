#pragma once

#include "inertia_lab/matrix.hpp"

#include <optional>
#include <vector>

namespace inertia_lab {

struct SmithOp {
    enum class Kind : std::uint8_t { add, negate };
    Kind kind = Kind::add;
    std::uint32_t dst = 0;
    std::uint32_t src = 0;
    Integer factor;
};

// Records U and V with U * M * V = D.
// Row op add(dst, src, k): row[dst] += k * row[src]; column op add(dst, src, k): col[dst] += k * col[src].
// U = P_rows * E_last ... E_1, V = F_1 ... F_last * P_cols, where the permutations move pivots to the diagonal.
class SmithTransform {
public:
    SmithTransform(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    void row_op(SmithOp op) { row_ops_.push_back(std::move(op)); }
    void col_op(SmithOp op) { col_ops_.push_back(std::move(op)); }
    void set_permutations(std::vector<std::uint32_t> row_perm, std::vector<std::uint32_t> col_perm);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t op_count() const { return row_ops_.size() + col_ops_.size(); }

    // In-place products with vectors of length rows() (U) or cols() (V).
    void apply_U(std::vector<Integer>& x) const;
    void apply_U_inv(std::vector<Integer>& x) const;
    void apply_V(std::vector<Integer>& x) const;
    void apply_V_inv(std::vector<Integer>& x) const;

    IntMatrix U() const;
    IntMatrix U_inv() const;
    IntMatrix V() const;
    IntMatrix V_inv() const;

private:
    std::size_t rows_, cols_;
    std::vector<SmithOp> row_ops_;
    std::vector<SmithOp> col_ops_;
    std::vector<std::uint32_t> row_perm_;  // position t holds original row row_perm_[t]
    std::vector<std::uint32_t> col_perm_;
};

struct SmithOptions {
    bool transforms = false;
    // Markowitz unit-pivot elimination before the dense core.
    bool sparse_phase = true;
    // Largest rows*cols handed to the dense core.
    std::size_t dense_limit = 16'000'000;
};

struct SmithResult {
    std::size_t rows = 0;
    std::size_t cols = 0;
    // Nonzero diagonal entries d_1 | d_2 | ..., all positive; size == rank.
    std::vector<Integer> diagonal;
    std::optional<SmithTransform> transform;

    std::size_t rank() const { return diagonal.size(); }
    // Invariant factors > 1.
    std::vector<Integer> nontrivial() const;
};

// Throws std::length_error if the dense core would exceed options.dense_limit.
SmithResult smith(const IntMatrix& M, const SmithOptions& options = {});

struct SmithDecomposition {
    IntMatrix D, U, V;
};

// Materialized U * M * V = D.
SmithDecomposition smith_normal_form(const IntMatrix& M);

}  // namespace inertia_lab
