#include "famdim/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>

#include "famdim/errors.hpp"

namespace famdim {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return s.substr(b, e - b);
}

bool all_digits(const std::string& s) {
  if (s.empty()) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

AbelianGroup::AbelianGroup(std::size_t free_rank,
                           const std::vector<Int>& torsion)
    : free_rank_(free_rank) {
  for (const Int& d : torsion) {
    if (d < 2) {
      throw BadTorsion("torsion order must be >= 2, got " + d.str());
    }
  }
  if (torsion.empty()) {
    return;
  }
  // Normalize arbitrary orders into the invariant-factor chain.
  IntMatrix diag(torsion.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    diag(i, i) = torsion[i];
  }
  for (const Int& d : snf(diag).divisors) {
    if (d != 1) {
      torsion_.push_back(d);
    }
  }
}

IntMatrix AbelianGroup::relation_lattice() const {
  const std::size_t k = torsion_.size();
  IntMatrix m(k, ambient_dim());
  for (std::size_t i = 0; i < k; ++i) {
    m(i, free_rank_ + i) = torsion_[i];
  }
  return m;
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);

  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string p = trim(parts[i]);
    if (i == 0 && p.rfind("Z/", 0) != 0) {
      if (p == "Z") {
        free_rank = 1;
      } else if (p.rfind("Z^", 0) == 0 && all_digits(p.substr(2))) {
        try {
          free_rank = std::stoull(p.substr(2));
        } catch (const std::exception&) {
          throw ParseError("free rank out of range in group spec: " + p);
        }
      } else {
        throw ParseError("group spec must start with Z or Z^n, got \"" + p +
                         "\"");
      }
    } else {
      if (p.rfind("Z/", 0) == 0 && all_digits(p.substr(2))) {
        torsion.emplace_back(p.substr(2));
      } else {
        throw ParseError("expected Z/d summand in group spec, got \"" + p +
                         "\"");
      }
    }
  }
  return AbelianGroup(free_rank, torsion);
}

std::string AbelianGroup::to_string() const {
  std::string out;
  if (free_rank_ > 0 || torsion_.empty()) {
    out = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  }
  for (const Int& d : torsion_) {
    if (!out.empty()) {
      out += " + ";
    }
    out += "Z/" + d.str();
  }
  return out;
}

GroupElement::GroupElement(const AbelianGroup& ambient,
                           std::vector<Int> coords)
    : ambient_(ambient), coords_(std::move(coords)) {
  if (coords_.size() != ambient_.ambient_dim()) {
    throw DimensionMismatch("element has " + std::to_string(coords_.size()) +
                            " coordinates, ambient group needs " +
                            std::to_string(ambient_.ambient_dim()));
  }
  const std::size_t n = ambient_.free_rank();
  for (std::size_t i = 0; i < ambient_.torsion_count(); ++i) {
    coords_[n + i] = floor_mod(coords_[n + i], ambient_.torsion_orders()[i]);
  }
}

Subgroup::Subgroup(AbelianGroup ambient, IntMatrix basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {}

Subgroup Subgroup::from_lift_rows(const AbelianGroup& ambient,
                                  const IntMatrix& rows) {
  if (rows.cols() != ambient.ambient_dim()) {
    throw DimensionMismatch("lift rows have " + std::to_string(rows.cols()) +
                            " columns, ambient group needs " +
                            std::to_string(ambient.ambient_dim()));
  }
  const IntMatrix stacked =
      IntMatrix::vstack(rows, ambient.relation_lattice());
  return Subgroup(ambient, hnf(stacked).basis);
}

Subgroup Subgroup::from_generators(const AbelianGroup& ambient,
                                   const std::vector<GroupElement>& gens) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(gens.size());
  for (const GroupElement& g : gens) {
    if (!(g.ambient() == ambient)) {
      throw DimensionMismatch(
          "generator belongs to a different ambient group");
    }
    rows.push_back(g.coords());
  }
  return from_lift_rows(ambient,
                        IntMatrix::from_rows(rows, ambient.ambient_dim()));
}

Subgroup Subgroup::from_canonical_basis(const AbelianGroup& ambient,
                                        const IntMatrix& basis) {
  if (basis.cols() != ambient.ambient_dim()) {
    throw DimensionMismatch("lift basis has " + std::to_string(basis.cols()) +
                            " columns, ambient group needs " +
                            std::to_string(ambient.ambient_dim()));
  }
  if (!is_canonical_hnf(basis)) {
    throw Error("lift basis is not in canonical echelon form");
  }
  const IntMatrix rel = ambient.relation_lattice();
  for (std::size_t i = 0; i < rel.rows(); ++i) {
    if (!solve_membership(basis, rel.row(i))) {
      throw Error("lift basis does not contain the relation lattice");
    }
  }
  return Subgroup(ambient, basis);
}

Subgroup Subgroup::trivial(const AbelianGroup& ambient) {
  return from_lift_rows(ambient, IntMatrix(0, ambient.ambient_dim()));
}

Subgroup Subgroup::full(const AbelianGroup& ambient) {
  return from_lift_rows(ambient, IntMatrix::identity(ambient.ambient_dim()));
}

Subgroup Subgroup::torsion_part(const AbelianGroup& ambient) {
  const std::size_t n = ambient.free_rank();
  const std::size_t k = ambient.torsion_count();
  IntMatrix rows(k, ambient.ambient_dim());
  for (std::size_t i = 0; i < k; ++i) {
    rows(i, n + i) = 1;
  }
  return from_lift_rows(ambient, rows);
}

bool Subgroup::contains_element(const GroupElement& e) const {
  if (!(e.ambient() == ambient_)) {
    throw AmbientMismatch("element and subgroup have different ambients");
  }
  return solve_membership(basis_, e.coords()).has_value();
}

int Subgroup::compare(const Subgroup& a, const Subgroup& b) {
  if (a.ambient_.free_rank() != b.ambient_.free_rank()) {
    return a.ambient_.free_rank() < b.ambient_.free_rank() ? -1 : 1;
  }
  if (a.ambient_.torsion_orders() != b.ambient_.torsion_orders()) {
    return a.ambient_.torsion_orders() < b.ambient_.torsion_orders() ? -1 : 1;
  }
  return IntMatrix::compare(a.basis_, b.basis_);
}

namespace {

void require_same_ambient(const Subgroup& h, const Subgroup& k,
                          const char* op) {
  if (!(h.ambient() == k.ambient())) {
    throw AmbientMismatch(std::string(op) +
                          ": subgroups live in different ambient groups");
  }
}

}  // namespace

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  require_same_ambient(h, k, "intersect");
  return Subgroup::from_canonical_basis(
      h.ambient(), lattice_intersect(h.lift_basis(), k.lift_basis()));
}

Subgroup sum(const Subgroup& h, const Subgroup& k) {
  require_same_ambient(h, k, "sum");
  return Subgroup::from_lift_rows(
      h.ambient(), IntMatrix::vstack(h.lift_basis(), k.lift_basis()));
}

bool contains(const Subgroup& h, const Subgroup& k) {
  require_same_ambient(h, k, "contains");
  for (std::size_t i = 0; i < k.lift_basis().rows(); ++i) {
    if (!solve_membership(h.lift_basis(), k.lift_basis().row(i))) {
      return false;
    }
  }
  return true;
}

std::optional<Int> subgroup_index(const Subgroup& h, const Subgroup& k) {
  require_same_ambient(h, k, "subgroup_index");
  return lattice_index(k.lift_basis(), h.lift_basis());
}

bool commensurable(const Subgroup& h, const Subgroup& k) {
  require_same_ambient(h, k, "commensurable");
  const std::size_t r = h.rank();
  if (r == 0 || k.rank() != r) {
    throw RankMismatch("commensurable: ranks must be equal and positive");
  }
  // Finite index in both directions forces full rank of the intersection,
  // and conversely.
  return intersect(h, k).rank() == r;
}

Subgroup max_overgroup(const Subgroup& h) {
  if (h.rank() == 0) {
    throw RankZero("max_overgroup: subgroup has rank zero");
  }
  return Subgroup::from_canonical_basis(h.ambient(),
                                        saturate(h.lift_basis()));
}

bool is_maximal(const Subgroup& h) {
  return max_overgroup(h) == h;
}

AbelianGroup quotient_invariants(const Subgroup& h) {
  const std::vector<Int> divisors = snf(h.lift_basis()).divisors;
  const std::size_t free_rank = h.ambient().ambient_dim() - divisors.size();
  std::vector<Int> torsion;
  for (const Int& d : divisors) {
    if (d > 1) {
      torsion.push_back(d);
    }
  }
  return AbelianGroup(free_rank, torsion);
}

namespace {

// A canonical echelon basis spans a saturated lattice exactly when all its
// elementary divisors are 1; one row just needs a unit gcd.
bool saturated_free_basis(const IntMatrix& p) {
  if (p.rows() == 1) {
    Int g = 0;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      g = gcd(g, p(0, j));
    }
    return g == 1;
  }
  for (const Int& d : snf(p).divisors) {
    if (d != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

ClassEnumeration enumerate_maximal(const AbelianGroup& g, std::size_t r,
                                   const Int& height) {
  const std::size_t n = g.free_rank();
  if (r < 1 || r > n) {
    throw BadRank("enumerate_maximal: rank must satisfy 1 <= r <= " +
                  std::to_string(n));
  }
  if (height < 1) {
    throw BadRank("enumerate_maximal: height bound must be >= 1");
  }
  const std::size_t k = g.torsion_count();

  ClassEnumeration out;
  out.ambient = g;
  out.rank = r;
  out.height_bound = height;
  out.exhaustive_within_bound = true;

  if (r == n) {
    // The only saturated full-rank sublattice is the whole lattice.
    out.representatives.push_back(Subgroup::full(g));
    return out;
  }

  std::vector<Subgroup> reps;
  std::vector<std::size_t> piv(r);
  IntMatrix p(r, n);

  auto emit = [&]() {
    if (!saturated_free_basis(p)) {
      return;
    }
    // Maximal subgroups carry the whole torsion part, so the lift basis is
    // the free-part basis padded with one unit row per torsion slot.
    IntMatrix lift(r + k, n + k);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        lift(i, j) = p(i, j);
      }
    }
    for (std::size_t t = 0; t < k; ++t) {
      lift(r + t, n + t) = 1;
    }
    reps.push_back(Subgroup::from_canonical_basis(g, lift));
  };

  // Cells to fill once the pivot columns and values are fixed. Entries left
  // of a pivot stay zero; a cell under a later pivot column ranges over
  // [0, pivot), anything else over [-height, height].
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::function<void(std::size_t)> fill_cell = [&](std::size_t idx) {
    if (idx == cells.size()) {
      emit();
      return;
    }
    const auto [i, j] = cells[idx];
    std::size_t owner = r;
    for (std::size_t t_row = i + 1; t_row < r; ++t_row) {
      if (piv[t_row] == j) {
        owner = t_row;
        break;
      }
    }
    Int lo = -height;
    Int hi = height;
    if (owner < r) {
      lo = 0;
      hi = p(owner, j) - 1;
    }
    for (Int v = lo; v <= hi; ++v) {
      p(i, j) = v;
      fill_cell(idx + 1);
    }
    p(i, j) = 0;
  };

  std::function<void(std::size_t)> choose_pivot = [&](std::size_t i) {
    if (i == r) {
      cells.clear();
      for (std::size_t row = 0; row < r; ++row) {
        for (std::size_t col = piv[row] + 1; col < n; ++col) {
          cells.emplace_back(row, col);
        }
      }
      fill_cell(0);
      return;
    }
    const std::size_t start = i == 0 ? 0 : piv[i - 1] + 1;
    for (std::size_t c = start; c + (r - 1 - i) < n; ++c) {
      piv[i] = c;
      for (Int v = 1; v <= height; ++v) {
        p(i, c) = v;
        choose_pivot(i + 1);
      }
      p(i, c) = 0;
    }
  };
  choose_pivot(0);

  std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
    return Subgroup::compare(a, b) < 0;
  });
  out.representatives = std::move(reps);
  return out;
}

}  // namespace famdim
