#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcperm/polynomial.hpp"
#include "mcperm/rational.hpp"
#include "mcperm/rng.hpp"

namespace mcperm {

template <class T>
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> cells;  // row-major

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), cells(static_cast<size_t>(r) * c) {
        if (r <= 0 || c <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    T& at(int i, int j) { return cells[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return cells[static_cast<size_t>(i) * cols + j]; }

    DenseMatrix minor_without(int row, int col) const {
        DenseMatrix m(rows - 1, cols - 1);
        for (int i = 0, mi = 0; i < rows; ++i) {
            if (i == row) continue;
            for (int j = 0, mj = 0; j < cols; ++j) {
                if (j == col) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

    DenseMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
        DenseMatrix m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
        for (size_t i = 0; i < row_idx.size(); ++i)
            for (size_t j = 0; j < col_idx.size(); ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
        return m;
    }

    bool operator==(const DenseMatrix&) const = default;
};

using NumericMatrix = DenseMatrix<Rational>;
using SymbolicMatrix = DenseMatrix<Polynomial>;

// {0,1} matrix whose ones fill the top h_j cells of column j, with h
// weakly increasing across columns. Stored as the height vector.
class FerrersMatrix {
  public:
    FerrersMatrix(int rows, std::vector<int> heights);

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(heights_.size()); }
    int height(int j) const { return heights_[static_cast<size_t>(j)]; }
    const std::vector<int>& heights() const { return heights_; }

    // 0-based; entry(i,j) = 1 iff i < h_j.
    bool entry(int i, int j) const { return i < heights_[static_cast<size_t>(j)]; }

    // Transpose and complement: A -> J - A^T. An involution.
    FerrersMatrix dual() const;

    // Deletes the last row and the last column; heights clip to the new
    // row count. Requires at least 2 rows and 2 columns.
    FerrersMatrix truncate() const;

    // k of Lemma-style recurrences: zeros in the last column.
    int zeros_in_last_column() const { return rows_ - heights_.back(); }

    bool operator==(const FerrersMatrix&) const = default;
    std::string str() const;

  private:
    int rows_;
    std::vector<int> heights_;
};

FerrersMatrix ferrers_from_heights(int rows, int cols, std::vector<int> heights);
// All rows x cols Ferrers shapes, height vectors in ascending lex order.
std::vector<FerrersMatrix> enumerate_ferrers(int rows, int cols);
// Staircase with heights (0, 1, ..., n-1); its permanent polynomial is the
// multivariate Eulerian polynomial.
FerrersMatrix eulerian_matrix(int n);
// Block staircase for multiset permutations with content vector v: v_1
// zero columns, then v_2 columns of height v_1, then v_3 of height
// v_1+v_2, ...
FerrersMatrix multiset_eulerian_matrix(const std::vector<int>& v);
FerrersMatrix pad_rows(const FerrersMatrix& a, int count);
// Zero columns go on the left so the height vector stays weakly increasing.
FerrersMatrix pad_cols(const FerrersMatrix& a, int count);

// Rational matrix weakly decreasing down every column.
class MonotoneColumnMatrix {
  public:
    explicit MonotoneColumnMatrix(NumericMatrix m);
    MonotoneColumnMatrix(int rows, int cols, std::vector<Rational> cells);

    int rows() const { return m_.rows; }
    int cols() const { return m_.cols; }
    const Rational& at(int i, int j) const { return m_.at(i, j); }
    const NumericMatrix& matrix() const { return m_; }

    bool nonnegative() const;
    Rational column_sum(int j) const;

    bool operator==(const MonotoneColumnMatrix&) const = default;
    std::string str() const;

  private:
    NumericMatrix m_;
};

MonotoneColumnMatrix to_monotone(const FerrersMatrix& a);
// Columns listed in `cols` (0-based) replaced by all-ones columns.
MonotoneColumnMatrix columns_to_ones(const MonotoneColumnMatrix& a, const std::set<int>& cols);
// Zero rows appended at the bottom; the result must still be monotone,
// so this is only valid when the last row is nonnegative.
MonotoneColumnMatrix pad_rows(const MonotoneColumnMatrix& a, int count);
// Zero columns appended at the right.
MonotoneColumnMatrix pad_cols(const MonotoneColumnMatrix& a, int count);

// Deterministic under seed; integer entries when max_den = 1.
MonotoneColumnMatrix random_monotone_matrix(int rows, int cols, long lo, long hi, long max_den,
                                            uint64_t seed);

// b_ij = y_j when a_ij = 1, x_i when a_ij = 0 (1-based variable indices).
SymbolicMatrix build_B(const FerrersMatrix& a);
// Row/column variable roles swapped: b_ij = x_j when a_ij = 1, y_i else.
SymbolicMatrix build_B_swapped(const FerrersMatrix& a);
// Entry (i,j) = z_{j+1} + a_ij.
SymbolicMatrix build_JZ_plus_A(const MonotoneColumnMatrix& a);
// Entry (i,j) = a_ij*y_j + (1 - a_ij), the column-factored form.
SymbolicMatrix build_Y_form(const FerrersMatrix& a);
// M + t*J, the rank-one shift used in coefficient-extraction identities.
SymbolicMatrix add_t_times_ones(const SymbolicMatrix& m, VariableId t);

SymbolicMatrix to_symbolic(const NumericMatrix& m);

}  // namespace mcperm
