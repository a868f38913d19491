#include "famdim/les.hpp"

#include <algorithm>

#include "famdim/errors.hpp"

namespace famdim {

RankSolution solve_les(const SequenceSpec& spec) {
  const std::size_t t = spec.terms.size();
  if (t < 3) {
    throw MalformedSpec("sequence needs at least three terms");
  }
  for (const auto& term : spec.terms) {
    if (term.dim && *term.dim < 0) {
      throw MalformedSpec("dimension of " + term.label +
                          " must be nonnegative");
    }
  }
  if ((spec.terms.front().dim && *spec.terms.front().dim != 0) ||
      (spec.terms.back().dim && *spec.terms.back().dim != 0)) {
    throw MalformedSpec("sequence must be bounded by zero objects");
  }

  std::vector<std::optional<long long>> dim(t);
  dim[0] = 0;
  dim[t - 1] = 0;
  for (std::size_t i = 1; i + 1 < t; ++i) {
    dim[i] = spec.terms[i].dim;
  }

  const std::size_t arrows = t - 1;
  // Rank caps induced by the known dimensions adjacent to each arrow.
  std::vector<std::optional<long long>> cap(arrows);
  for (std::size_t i = 0; i < arrows; ++i) {
    if (dim[i]) {
      cap[i] = *dim[i];
    }
    if (dim[i + 1]) {
      cap[i] = cap[i] ? std::min(*cap[i], *dim[i + 1]) : *dim[i + 1];
    }
  }

  // Exactness at a known interior term i ties r_{i-1} + r_i = dim[i], so
  // consecutive arrows chain into segments separated by unknown terms. In
  // each segment every rank is an affine function (slope +-1) of the first
  // rank, making all feasible sets integer intervals; computing the exact
  // interval of that first rank therefore yields tight ranges everywhere.
  RankSolution sol;
  sol.feasible = true;
  sol.map_ranges.assign(arrows, IntInterval{});

  std::size_t start = 0;
  while (start < arrows) {
    std::size_t end = start;
    while (end + 1 < arrows && dim[end + 1]) {
      ++end;
    }
    // Arrows [start, end] form one segment; r_j = sign * off + c.
    long long off_lo = 0;
    std::optional<long long> off_hi;
    {
      long long c = 0;
      long long sign = 1;
      for (std::size_t j = start; j <= end; ++j) {
        if (j > start) {
          c = *dim[j] - c;
          sign = -sign;
        }
        // Constraints 0 <= sign*off + c <= cap[j] translated onto off.
        if (sign > 0) {
          off_lo = std::max(off_lo, -c);
          if (cap[j]) {
            const long long ub = *cap[j] - c;
            off_hi = off_hi ? std::min(*off_hi, ub) : ub;
          }
        } else {
          off_hi = off_hi ? std::min(*off_hi, c) : c;
          if (cap[j]) {
            off_lo = std::max(off_lo, c - *cap[j]);
          }
        }
      }
    }
    if (off_hi && off_lo > *off_hi) {
      sol.feasible = false;
    }
    long long c = 0;
    long long sign = 1;
    for (std::size_t j = start; j <= end; ++j) {
      if (j > start) {
        c = *dim[j] - c;
        sign = -sign;
      }
      IntInterval iv;
      if (sign > 0) {
        iv.lo = off_lo + c;
        if (off_hi) {
          iv.hi = *off_hi + c;
        }
      } else {
        // A descending rank is bounded below by r >= 0, so off_hi is set.
        iv.lo = c - *off_hi;
        iv.hi = c - off_lo;
      }
      sol.map_ranges[j] = iv;
    }
    start = end + 1;
  }

  if (!sol.feasible) {
    sol.map_ranges.clear();
    return sol;
  }

  sol.term_ranges.assign(t, IntInterval{});
  for (std::size_t i = 0; i < t; ++i) {
    if (dim[i]) {
      sol.term_ranges[i] = IntInterval{*dim[i], *dim[i]};
    } else {
      // Unknown interior term: dimension is r_{i-1} + r_i, and the two
      // ranks sit in different segments, hence vary independently.
      const IntInterval& a = sol.map_ranges[i - 1];
      const IntInterval& b = sol.map_ranges[i];
      IntInterval iv;
      iv.lo = a.lo + b.lo;
      if (a.hi && b.hi) {
        iv.hi = *a.hi + *b.hi;
      }
      sol.term_ranges[i] = iv;
    }
  }
  return sol;
}

bool forced_surjective_at(const RankSolution& sol, std::size_t arrow) {
  if (arrow + 1 == sol.map_ranges.size()) {
    // The target is the closing zero object.
    return true;
  }
  // Exactness at the target makes the arrow onto exactly when the next
  // arrow has rank zero; "forced" means that holds in every assignment.
  const IntInterval& next = sol.map_ranges[arrow + 1];
  return next.hi && *next.hi == 0;
}

MapRankBounds map_rank_bounds(const SequenceSpec& spec, std::size_t arrow) {
  if (spec.terms.size() < 2 || arrow + 1 >= spec.terms.size()) {
    throw MalformedSpec("arrow index out of range");
  }
  const RankSolution sol = solve_les(spec);
  MapRankBounds out;
  out.feasible = sol.feasible;
  if (!sol.feasible) {
    return out;
  }
  out.range = sol.map_ranges[arrow];
  out.forced_surjective = forced_surjective_at(sol, arrow);
  return out;
}

}  // namespace famdim
