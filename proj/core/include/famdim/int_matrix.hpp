#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace famdim {

using Int = boost::multiprecision::cpp_int;

// Quotient rounded toward minus infinity. b must be nonzero.
Int floor_div(const Int& a, const Int& b);

// Remainder paired with floor_div; the result lies in [0, |b|).
Int floor_mod(const Int& a, const Int& b);

// Extended gcd. Returns g = gcd(a, b) >= 0 and sets x, y so x*a + y*b = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

// Dense row-major matrix over arbitrary-precision integers. Rows play the
// role of lattice generators throughout the library, so the row operations
// below are the primitive moves of every normal-form routine.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  // Builds a matrix from explicit rows; `cols` disambiguates the empty case.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                             std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  // row[dst] += q * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
  // col[dst] += q * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);

  IntMatrix transposed() const;
  // The first `count` rows as a new matrix.
  IntMatrix take_rows(std::size_t count) const;
  static IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

  bool is_zero() const;

  // Exact determinant by fraction-free elimination. Square matrices only.
  Int determinant() const;

  bool operator==(const IntMatrix& other) const = default;

  // Lexicographic total order: by row count, column count, then entries.
  static int compare(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// v * m for a row vector v with v.size() == m.rows().
std::vector<Int> row_times(const std::vector<Int>& v, const IntMatrix& m);

}  // namespace famdim
