#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "famdim/int_matrix.hpp"
#include "famdim/lattice.hpp"

namespace famdim {

// Finitely generated abelian group Z^n + Z/d_1 + ... + Z/d_k presented in
// invariant-factor form (d_1 | d_2 | ... , every d_i >= 2). Construction
// accepts torsion orders in any order and any divisibility relation and
// canonicalizes them, so equal groups compare equal.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(std::size_t free_rank, const std::vector<Int>& torsion);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Int>& torsion_orders() const noexcept { return torsion_; }
  std::size_t torsion_count() const noexcept { return torsion_.size(); }
  // Coordinates live in Z^(n + k): free part first, torsion part after.
  std::size_t ambient_dim() const noexcept {
    return free_rank_ + torsion_.size();
  }

  // The lattice of coordinate vectors that represent the zero element:
  // k rows, row i carrying d_i in the i-th torsion slot.
  IntMatrix relation_lattice() const;

  // Reads "Z^n" optionally followed by "+ Z/d" summands, e.g. "Z^2 + Z/4".
  static AbelianGroup parse(const std::string& text);
  std::string to_string() const;

  bool operator==(const AbelianGroup& other) const = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Int> torsion_;
};

// An element, stored as one coordinate per summand with torsion coordinates
// reduced into [0, d_i).
class GroupElement {
 public:
  GroupElement(const AbelianGroup& ambient, std::vector<Int> coords);

  const AbelianGroup& ambient() const noexcept { return ambient_; }
  const std::vector<Int>& coords() const noexcept { return coords_; }

  bool operator==(const GroupElement& other) const = default;

 private:
  AbelianGroup ambient_;
  std::vector<Int> coords_;
};

// A subgroup, represented by the canonical echelon basis of its lift: the
// lattice of all coordinate vectors whose class lies in the subgroup. The
// lift always contains the relation lattice, so rank() subtracts the
// torsion slot count.
class Subgroup {
 public:
  static Subgroup from_generators(const AbelianGroup& ambient,
                                  const std::vector<GroupElement>& gens);
  // Rows are coordinate vectors; the relation lattice is adjoined
  // automatically.
  static Subgroup from_lift_rows(const AbelianGroup& ambient,
                                 const IntMatrix& rows);
  // Accepts an alleged canonical lift basis verbatim, validating shape and
  // relation-lattice containment. Meant for deserialization.
  static Subgroup from_canonical_basis(const AbelianGroup& ambient,
                                       const IntMatrix& basis);

  static Subgroup trivial(const AbelianGroup& ambient);
  static Subgroup full(const AbelianGroup& ambient);
  static Subgroup torsion_part(const AbelianGroup& ambient);

  const AbelianGroup& ambient() const noexcept { return ambient_; }
  const IntMatrix& lift_basis() const noexcept { return basis_; }

  // Torsion-free rank of the subgroup itself.
  std::size_t rank() const noexcept {
    return basis_.rows() - ambient_.torsion_count();
  }

  bool contains_element(const GroupElement& e) const;

  bool operator==(const Subgroup& other) const = default;
  static int compare(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup(AbelianGroup ambient, IntMatrix basis);

  AbelianGroup ambient_;
  IntMatrix basis_;
};

Subgroup intersect(const Subgroup& h, const Subgroup& k);
Subgroup sum(const Subgroup& h, const Subgroup& k);

// Whether k is contained in h (both subgroups of the same ambient group).
bool contains(const Subgroup& h, const Subgroup& k);

// Index [k : h] for h contained in k; nullopt when infinite.
std::optional<Int> subgroup_index(const Subgroup& h, const Subgroup& k);

// Whether the subgroups share a finite-index common subgroup. Requires
// equal positive ranks; other inputs are rejected rather than answered.
bool commensurable(const Subgroup& h, const Subgroup& k);

// The unique largest subgroup commensurable with h: its lift is the
// saturation of the lift of h, so the quotient by it is torsion-free.
Subgroup max_overgroup(const Subgroup& h);

// Whether h already is the largest member of its commensurability class.
bool is_maximal(const Subgroup& h);

// Invariant-factor description of ambient / h.
AbelianGroup quotient_invariants(const Subgroup& h);

// Exhaustive list of the maximal rank-r subgroups whose canonical basis has
// all free-part entries bounded by `height` in absolute value. Each listed
// subgroup represents a distinct commensurability class.
struct ClassEnumeration {
  AbelianGroup ambient;
  std::size_t rank = 0;
  Int height_bound;
  std::vector<Subgroup> representatives;
  bool exhaustive_within_bound = false;
};

ClassEnumeration enumerate_maximal(const AbelianGroup& g, std::size_t r,
                                   const Int& height);

}  // namespace famdim
