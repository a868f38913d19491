#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "famdim/abelian.hpp"

namespace famdim {

// Symbolic family of subgroups of a fixed ambient group, closed under
// passing to subgroups. Four shapes: the rank families F_r (all subgroups
// of torsion-free rank at most r), All(M) (all subgroups of a fixed maximal
// M), finite intersections and finite unions of those. The factories
// normalize aggressively:
//   - nested intersections and unions flatten,
//   - rank members of an intersection combine to the minimum,
//   - All(M) and All(N) intersect to All(M /\ N),
//   - All(M) absorbs a rank member that dominates its rank,
//   - F_0 /\ All(M) collapses to F_0 whenever M carries the whole torsion,
//   - union members deduplicate and sort.
// Families built through the factories are therefore equal exactly when
// they are structurally equal.
class Family {
 public:
  enum class Kind { rank, all_of, intersection, union_of };

  static Family rank_family(std::size_t r);
  // Requires a maximal subgroup; throws NotMaximal otherwise.
  static Family all_of(const Subgroup& m);
  static Family intersection_of(std::vector<Family> members);
  static Family union_of(std::vector<Family> members);

  Kind kind() const noexcept { return kind_; }
  std::size_t rank_bound() const;
  const Subgroup& subgroup() const;
  const std::vector<Family>& members() const;

  bool operator==(const Family& other) const;
  static int compare(const Family& a, const Family& b);

  std::string to_string() const;

 private:
  Family() = default;

  Kind kind_ = Kind::rank;
  std::size_t rank_ = 0;
  std::optional<Subgroup> subgroup_;
  std::vector<Family> members_;
};

}  // namespace famdim
