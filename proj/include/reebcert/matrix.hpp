#ifndef REEBCERT_MATRIX_HPP
#define REEBCERT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "reebcert/exact.hpp"

namespace reebcert {

// Dense row-major matrix over the integers. Small by design: the relation
// matrices handled here have at most a few hundred rows.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_identity() const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    // v interpreted as a column vector of length cols().
    std::vector<Int> apply(const std::vector<Int>& v) const;

    // Elementary operations used by the normal-form reductions. Each one
    // has determinant +-1 so they never change the lattice spanned.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Int& factor);
    void negate_row(std::size_t i);

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination. The inner loops
// track the nonzero span of each row, so banded matrices -- in particular the
// long surgery chains -- cost O(n^2) instead of O(n^3).
Int det(const IntMatrix& a);

}  // namespace reebcert

#endif
