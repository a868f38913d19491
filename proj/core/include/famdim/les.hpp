#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace famdim {

// A finite exact sequence of finite-dimensional vector spaces. The first
// and last terms are zero objects; every interior term is exact. Unknown
// dimensions are nullopt.
struct SequenceSpec {
  struct Term {
    std::string label;
    std::optional<long long> dim;
  };
  std::vector<Term> terms;
};

// Closed integer interval with an optional upper end (nullopt = unbounded).
struct IntInterval {
  long long lo = 0;
  std::optional<long long> hi;

  bool operator==(const IntInterval&) const = default;
};

// Tight feasible ranges for every term dimension and every map rank: each
// value inside a range occurs in at least one assignment satisfying all
// exactness constraints, and no value outside does.
struct RankSolution {
  bool feasible = false;
  std::vector<IntInterval> term_ranges;  // one per term
  std::vector<IntInterval> map_ranges;   // one per arrow
};

RankSolution solve_les(const SequenceSpec& spec);

// Whether exactness forces the arrow onto its target in every feasible
// assignment: the following arrow can only have rank zero (or the target
// is the closing zero object).
bool forced_surjective_at(const RankSolution& sol, std::size_t arrow);

struct MapRankBounds {
  bool feasible = false;
  IntInterval range;
  bool forced_surjective = false;
};

// Rank bounds for one arrow (0-based: arrow i maps term i to term i+1),
// plus whether exactness forces that arrow onto its target in every
// feasible assignment.
MapRankBounds map_rank_bounds(const SequenceSpec& spec, std::size_t arrow);

}  // namespace famdim
