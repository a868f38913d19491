#pragma once

#include <optional>
#include <string>

#include "famdim/int_matrix.hpp"

namespace famdim::klein {

// The group <a, b | a b a^-1 = b^-1>. Every element has a unique normal
// form a^m b^n; multiplying twists the incoming b exponent by the parity
// of the a exponent passing it. The group is torsion-free, so every
// nontrivial element generates an infinite cyclic subgroup.
struct Element {
  Int a_exp;
  Int b_exp;

  bool operator==(const Element&) const = default;
};

Element identity();
bool is_identity(const Element& x);

Element mul(const Element& x, const Element& y);
Element inv(const Element& x);
Element pow(const Element& x, const Int& k);

// (-1, 0) < (0, -3) < (0, 2): a exponent first, then b exponent.
int compare(const Element& x, const Element& y);

std::string to_string(const Element& x);

// Accepts either a pair "(m,n)" or a word over a, b, A, B (capital letters
// are inverses), each letter optionally powered like "a^-2".
Element parse_word(const std::string& text);

// Infinite cyclic subgroup <g>. The stored generator is the smaller of g
// and g^-1, so equal subgroups compare equal.
class Cyclic {
 public:
  explicit Cyclic(const Element& g);  // IdentityInput on the identity

  const Element& generator() const noexcept { return gen_; }

  bool operator==(const Cyclic&) const = default;

 private:
  Element gen_;
};

// The exponent k with g^k == target, if one exists. Unique for g != e
// because the group is torsion-free.
std::optional<Int> solve_power(const Element& g, const Element& target);

// Whether <h> is contained in <g>.
bool cyclic_contains(const Cyclic& g, const Cyclic& h);

// Index [<g> : <h>] when <h> <= <g>, nullopt otherwise.
std::optional<Int> cyclic_index(const Cyclic& g, const Cyclic& h);

// Whether g has no proper root, i.e. <g> is maximal among the cyclic
// subgroups. Candidate root exponents are divisors of the a exponent (or
// of the b exponent when a vanishes), so the search is finite.
// Throws IdentityInput on the identity.
bool maximal_cyclic(const Element& g);

// Worked failure of overgroup uniqueness: a^2 equals (a b^-1)^2, and both
// <a> and <a b^-1> are maximal cyclic subgroups of index 2 over <a^2>,
// yet they differ.
struct DemoReport {
  Element a;
  Element ab_inverse;
  Element square;
  bool squares_coincide = false;
  bool subgroups_distinct = false;
  bool both_contain_square = false;
  Int index_in_a;
  Int index_in_ab_inverse;
  bool a_maximal = false;
  bool ab_inverse_maximal = false;
  bool uniqueness_fails = false;
};

DemoReport demo();

}  // namespace famdim::klein
