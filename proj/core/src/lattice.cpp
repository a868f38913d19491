#include "famdim/lattice.hpp"

#include <cassert>

#include "famdim/errors.hpp"

namespace famdim {

namespace {

// Applies the unimodular 2x2 transform that replaces rows (r1, r2) by
// (x*r1 + y*r2, (a/g)*r2 - (b/g)*r1) where a = m(r1, col), b = m(r2, col)
// and g = x*a + y*b = gcd(a, b). Afterwards m(r1, col) == g >= 0 and
// m(r2, col) == 0. The same transform is mirrored onto `trans`.
void rows_gcd_combine(IntMatrix& m, IntMatrix& trans, std::size_t r1,
                      std::size_t r2, std::size_t col) {
  const Int a = m(r1, col);
  const Int b = m(r2, col);
  if (b == 0) {
    return;
  }
  if (a != 0 && b % a == 0) {
    // Exact multiple: plain elimination, leaving row r1 untouched. The
    // general path below may rewrite r1 as a combination, which must only
    // happen when it strictly shrinks the pivot.
    const Int q = b / a;
    m.add_row_multiple(r2, r1, -q);
    trans.add_row_multiple(r2, r1, -q);
    if (a < 0) {
      // Keep the reported pivot nonnegative to match the gcd branch.
      m.negate_row(r1);
      trans.negate_row(r1);
    }
    return;
  }
  Int x, y;
  const Int g = ext_gcd(a, b, x, y);
  const Int aq = a / g;
  const Int bq = b / g;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Int u = m(r1, j);
    const Int v = m(r2, j);
    m(r1, j) = x * u + y * v;
    m(r2, j) = aq * v - bq * u;
  }
  for (std::size_t j = 0; j < trans.cols(); ++j) {
    const Int u = trans(r1, j);
    const Int v = trans(r2, j);
    trans(r1, j) = x * u + y * v;
    trans(r2, j) = aq * v - bq * u;
  }
}

// Column counterpart of rows_gcd_combine, acting on (c1, c2) at row `row`.
void cols_gcd_combine(IntMatrix& m, IntMatrix& trans, std::size_t c1,
                      std::size_t c2, std::size_t row) {
  const Int a = m(row, c1);
  const Int b = m(row, c2);
  if (b == 0) {
    return;
  }
  if (a != 0 && b % a == 0) {
    const Int q = b / a;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      m(i, c2) -= q * m(i, c1);
    }
    for (std::size_t i = 0; i < trans.rows(); ++i) {
      trans(i, c2) -= q * trans(i, c1);
    }
    if (a < 0) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, c1) = -m(i, c1);
      }
      for (std::size_t i = 0; i < trans.rows(); ++i) {
        trans(i, c1) = -trans(i, c1);
      }
    }
    return;
  }
  Int x, y;
  const Int g = ext_gcd(a, b, x, y);
  const Int aq = a / g;
  const Int bq = b / g;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Int u = m(i, c1);
    const Int v = m(i, c2);
    m(i, c1) = x * u + y * v;
    m(i, c2) = aq * v - bq * u;
  }
  for (std::size_t i = 0; i < trans.rows(); ++i) {
    const Int u = trans(i, c1);
    const Int v = trans(i, c2);
    trans(i, c1) = x * u + y * v;
    trans(i, c2) = aq * v - bq * u;
  }
}

// Forward substitution of v against a canonical echelon basis. Returns the
// coefficients with respect to the basis rows, or nullopt when v leaves the
// span at some pivot (non-divisible head or trailing nonzero entry).
std::optional<std::vector<Int>> reduce_against(const HnfResult& h,
                                               const std::vector<Int>& v) {
  std::vector<Int> rem = v;
  std::vector<Int> coeff(h.rank, Int(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < h.rank; ++i) {
    const std::size_t p = h.pivot_cols[i];
    for (; col < p; ++col) {
      if (rem[col] != 0) {
        return std::nullopt;
      }
    }
    const Int& pivot = h.basis(i, p);
    if (rem[p] % pivot != 0) {
      return std::nullopt;
    }
    const Int q = rem[p] / pivot;
    if (q != 0) {
      for (std::size_t j = p; j < rem.size(); ++j) {
        rem[j] -= q * h.basis(i, j);
      }
    }
    coeff[i] = q;
    ++col;
  }
  for (; col < rem.size(); ++col) {
    if (rem[col] != 0) {
      return std::nullopt;
    }
  }
  return coeff;
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HnfResult out;
  out.basis = a;
  out.transform = IntMatrix::identity(m);
  IntMatrix& w = out.basis;
  IntMatrix& u = out.transform;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    // Pull a row with a nonzero entry in this column up to position `rank`.
    std::size_t nz = m;
    for (std::size_t i = rank; i < m; ++i) {
      if (w(i, col) != 0) {
        nz = i;
        break;
      }
    }
    if (nz == m) {
      continue;
    }
    if (nz != rank) {
      w.swap_rows(rank, nz);
      u.swap_rows(rank, nz);
    }
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (w(i, col) != 0) {
        rows_gcd_combine(w, u, rank, i, col);
      }
    }
    if (w(rank, col) < 0) {
      w.negate_row(rank);
      u.negate_row(rank);
    }
    // Reduce the entries above the new pivot into [0, pivot).
    for (std::size_t i = 0; i < rank; ++i) {
      const Int q = floor_div(w(i, col), w(rank, col));
      if (q != 0) {
        w.add_row_multiple(i, rank, -q);
        u.add_row_multiple(i, rank, -q);
      }
    }
    out.pivot_cols.push_back(col);
    ++rank;
  }
  out.rank = rank;
  out.basis = w.take_rows(rank);
  return out;
}

SnfResult snf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix s = a;
  SnfResult out;
  out.left = IntMatrix::identity(m);
  out.right = IntMatrix::identity(n);

  const std::size_t steps = std::min(m, n);
  std::size_t t = 0;
  while (t < steps) {
    // Locate any nonzero entry in the trailing block and move it to (t, t).
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m && pi == m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (s(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == m) {
      break;
    }
    if (pi != t) {
      s.swap_rows(t, pi);
      out.left.swap_rows(t, pi);
    }
    if (pj != t) {
      s.swap_cols(t, pj);
      out.right.swap_cols(t, pj);
    }

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) != 0) {
          rows_gcd_combine(s, out.left, t, i, t);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) != 0) {
          cols_gcd_combine(s, out.right, t, j, t);
        }
      }
      // Column work can resurrect entries below the pivot; only proceed once
      // both the row and the column of the pivot are clear.
      bool clear = true;
      for (std::size_t i = t + 1; i < m && clear; ++i) {
        clear = s(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < n && clear; ++j) {
        clear = s(t, j) == 0;
      }
      if (!clear) {
        continue;
      }
      // Enforce the divisor chain: fold in any row holding an entry the
      // pivot does not divide, then clear again. Each fold strictly shrinks
      // |pivot|, so this terminates.
      bool chain_ok = true;
      for (std::size_t i = t + 1; i < m && chain_ok; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, i, Int(1));
            out.left.add_row_multiple(t, i, Int(1));
            chain_ok = false;
            break;
          }
        }
      }
      if (chain_ok) {
        break;
      }
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      out.left.negate_row(t);
    }
    ++t;
  }
  out.divisors.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    out.divisors.push_back(s(i, i));
  }
  return out;
}

bool is_canonical_hnf(const IntMatrix& m) {
  std::size_t prev_pivot = 0;
  bool have_prev = false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t p = m.cols();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) {
        p = j;
        break;
      }
    }
    if (p == m.cols()) {
      return false;  // zero row
    }
    if (have_prev && p <= prev_pivot) {
      return false;
    }
    if (m(i, p) <= 0) {
      return false;
    }
    for (std::size_t r = 0; r < i; ++r) {
      if (m(r, p) < 0 || m(r, p) >= m(i, p)) {
        return false;
      }
    }
    prev_pivot = p;
    have_prev = true;
  }
  return true;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error("unimodular_inverse: matrix is not square");
  }
  HnfResult h = hnf(m);
  if (h.rank != m.rows() || h.basis != IntMatrix::identity(m.rows())) {
    throw Error("unimodular_inverse: matrix is not unimodular");
  }
  // transform * m == I, so the transform is the inverse.
  return h.transform;
}

IntMatrix lattice_intersect(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) {
    throw DimensionMismatch("lattice_intersect: ambient dimensions differ");
  }
  const std::size_t n = a.cols();
  const HnfResult ha = hnf(a);
  const HnfResult hb = hnf(b);
  if (ha.rank == 0 || hb.rank == 0) {
    return IntMatrix(0, n);
  }
  IntMatrix neg = hb.basis;
  for (std::size_t i = 0; i < neg.rows(); ++i) {
    neg.negate_row(i);
  }
  const IntMatrix stacked = IntMatrix::vstack(ha.basis, neg);
  const HnfResult hs = hnf(stacked);
  const std::size_t total = ha.rank + hb.rank;
  // A vector lies in both lattices exactly when some combination
  // u * basis(a) - v * basis(b) vanishes; those (u, v) are the bottom rows
  // of the stacked transform, and u * basis(a) is the common vector.
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = hs.rank; i < total; ++i) {
    std::vector<Int> cand(n, Int(0));
    for (std::size_t k = 0; k < ha.rank; ++k) {
      const Int& c = hs.transform(i, k);
      if (c == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        cand[j] += c * ha.basis(k, j);
      }
    }
    rows.push_back(std::move(cand));
  }
  if (rows.empty()) {
    return IntMatrix(0, n);
  }
  return hnf(IntMatrix::from_rows(rows, n)).basis;
}

IntMatrix saturate(const IntMatrix& a) {
  const std::size_t n = a.cols();
  const SnfResult s = snf(a);
  const std::size_t r = s.divisors.size();
  if (r == 0) {
    return IntMatrix(0, n);
  }
  // With left * a * right == diag(d), the row span of a equals the span of
  // d_i * row_i(right^-1); dropping the divisors yields the saturation.
  const IntMatrix rinv = unimodular_inverse(s.right);
  return hnf(rinv.take_rows(r)).basis;
}

std::optional<Int> lattice_index(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) {
    throw DimensionMismatch("lattice_index: ambient dimensions differ");
  }
  const HnfResult ha = hnf(a);
  const HnfResult hb = hnf(b);
  // Express each basis vector of the sublattice in the big basis; failure
  // anywhere means the alleged containment does not hold.
  IntMatrix coeff(hb.rank, ha.rank);
  for (std::size_t i = 0; i < hb.rank; ++i) {
    auto c = reduce_against(ha, hb.basis.row(i));
    if (!c) {
      throw ContainmentViolation(
          "lattice_index: second lattice is not contained in the first");
    }
    for (std::size_t j = 0; j < ha.rank; ++j) {
      coeff(i, j) = (*c)[j];
    }
  }
  if (hb.rank < ha.rank) {
    return std::nullopt;  // infinite index
  }
  Int d = coeff.determinant();
  return abs(d);
}

std::optional<std::vector<Int>> solve_membership(const IntMatrix& a,
                                                 const std::vector<Int>& v) {
  if (v.size() != a.cols()) {
    throw DimensionMismatch("solve_membership: vector length differs");
  }
  const HnfResult h = hnf(a);
  auto d = reduce_against(h, v);
  if (!d) {
    return std::nullopt;
  }
  // Pull the echelon coefficients back through the transform to get
  // coefficients on the original rows, then verify by substitution.
  std::vector<Int> c(a.rows(), Int(0));
  for (std::size_t i = 0; i < h.rank; ++i) {
    if ((*d)[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < a.rows(); ++j) {
      c[j] += (*d)[i] * h.transform(i, j);
    }
  }
  assert(row_times(c, a) == v);
  return c;
}

}  // namespace famdim
