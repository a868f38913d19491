#include "famdim/int_matrix.hpp"

#include <cassert>
#include <sstream>
#include <utility>

namespace famdim {

Int floor_div(const Int& a, const Int& b) {
  assert(b != 0);
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

Int floor_mod(const Int& a, const Int& b) {
  return a - floor_div(a, b) * b;
}

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  // Iterative Euclid carrying Bezout coefficients.
  Int old_r = a, r = b;
  Int old_x = 1, cur_x = 0;
  Int old_y = 0, cur_y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * cur_x;
    old_x = cur_x;
    cur_x = t;
    t = old_y - q * cur_y;
    old_y = cur_y;
    cur_y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  assert(!rows.empty());
  return from_rows(rows, rows.front().size());
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    out[j] = (*this)(i, j);
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) {
    return;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap((*this)(i, c), (*this)(j, c));
  }
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) {
    return;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    std::swap((*this)(r, i), (*this)(r, j));
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) {
    (*this)(i, c) = -(*this)(i, c);
  }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Int& q) {
  if (q == 0) {
    return;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    (*this)(dst, c) += q * (*this)(src, c);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Int& q) {
  if (q == 0) {
    return;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    (*this)(r, dst) += q * (*this)(r, src);
  }
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m(j, i) = (*this)(i, j);
    }
  }
  return m;
}

IntMatrix IntMatrix::take_rows(std::size_t count) const {
  assert(count <= rows_);
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m(i, j) = (*this)(i, j);
    }
  }
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& top, const IntMatrix& bottom) {
  assert(top.cols() == bottom.cols());
  IntMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) {
      m(i, j) = top(i, j);
    }
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    for (std::size_t j = 0; j < bottom.cols(); ++j) {
      m(top.rows() + i, j) = bottom(i, j);
    }
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : data_) {
    if (v != 0) {
      return false;
    }
  }
  return true;
}

Int IntMatrix::determinant() const {
  assert(rows_ == cols_);
  const std::size_t n = rows_;
  if (n == 0) {
    return 1;
  }
  // Bareiss: every division below is exact, so all intermediates stay
  // integral and reasonably small.
  IntMatrix w = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (w(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == n) {
        return 0;
      }
      w.swap_rows(k, swap_row);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      }
    }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

int IntMatrix::compare(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) {
    return a.rows_ < b.rows_ ? -1 : 1;
  }
  if (a.cols_ != b.cols_) {
    return a.cols_ < b.cols_ ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (a.data_[i] != b.data_[i]) {
      return a.data_[i] < b.data_[i] ? -1 : 1;
    }
  }
  return 0;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) {
      os << ',';
    }
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) {
        os << ',';
      }
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols() == b.rows());
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

std::vector<Int> row_times(const std::vector<Int>& v, const IntMatrix& m) {
  assert(v.size() == m.rows());
  std::vector<Int> out(m.cols(), Int(0));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[j] += v[k] * m(k, j);
    }
  }
  return out;
}

}  // namespace famdim
