#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "famdim/int_matrix.hpp"

namespace famdim {

// Row echelon normal form of an integer matrix together with the unimodular
// row transform that produced it: transform * input == [basis; 0].
//
// Canonical shape: no zero rows in `basis`, each pivot positive, pivot
// columns strictly increasing, and every entry above a pivot reduced into
// [0, pivot). Two matrices generate the same row lattice iff their canonical
// forms are entry-wise equal.
struct HnfResult {
  IntMatrix basis;
  IntMatrix transform;  // square, |det| == 1, same row count as the input
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

HnfResult hnf(const IntMatrix& a);

// Diagonal normal form under unimodular transforms on both sides:
// left * input * right == diag(divisors) padded with zeros, with
// divisors[0] | divisors[1] | ... and every divisor positive.
struct SnfResult {
  std::vector<Int> divisors;
  IntMatrix left;
  IntMatrix right;
};

SnfResult snf(const IntMatrix& a);

// True when m already has the canonical echelon shape described above.
bool is_canonical_hnf(const IntMatrix& m);

// Inverse of a square matrix with |det| == 1. Throws Error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Canonical basis of the intersection of two row lattices in the same
// ambient space. A zero lattice comes back as a 0-row matrix that keeps the
// ambient column count.
IntMatrix lattice_intersect(const IntMatrix& a, const IntMatrix& b);

// Canonical basis of the smallest sublattice of the ambient Z^n that
// contains the rows of `a` and has torsion-free quotient. Same rank as `a`.
IntMatrix saturate(const IntMatrix& a);

// Index [span(a) : span(b)] for span(b) contained in span(a); nullopt when
// the index is infinite (rank drop). Throws ContainmentViolation when the
// containment fails.
std::optional<Int> lattice_index(const IntMatrix& a, const IntMatrix& b);

// Coefficients c with c * a == v when v lies in the row span, else nullopt.
std::optional<std::vector<Int>> solve_membership(const IntMatrix& a,
                                                 const std::vector<Int>& v);

}  // namespace famdim
