#include "famdim/family.hpp"

#include <algorithm>
#include <cassert>

#include "famdim/errors.hpp"

namespace famdim {

Family Family::rank_family(std::size_t r) {
  Family f;
  f.kind_ = Kind::rank;
  f.rank_ = r;
  return f;
}

Family Family::all_of(const Subgroup& m) {
  if (!is_maximal(m)) {
    throw NotMaximal("all_of: subgroup is not maximal in its class");
  }
  Family f;
  f.kind_ = Kind::all_of;
  f.subgroup_ = m;
  return f;
}

std::size_t Family::rank_bound() const {
  assert(kind_ == Kind::rank);
  return rank_;
}

const Subgroup& Family::subgroup() const {
  assert(kind_ == Kind::all_of);
  return *subgroup_;
}

const std::vector<Family>& Family::members() const {
  assert(kind_ == Kind::intersection || kind_ == Kind::union_of);
  return members_;
}

Family Family::intersection_of(std::vector<Family> members) {
  if (members.empty()) {
    throw Error("intersection_of: no members");
  }
  // Flatten, then fold the two atomic shapes together.
  std::optional<std::size_t> min_rank;
  std::optional<Subgroup> all;
  std::vector<Family> rest;
  std::vector<Family> queue = std::move(members);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    // Copy: pushing nested members may reallocate the queue.
    const Family f = queue[qi];
    switch (f.kind_) {
      case Kind::rank:
        if (!min_rank || f.rank_ < *min_rank) {
          min_rank = f.rank_;
        }
        break;
      case Kind::all_of:
        if (!all) {
          all = *f.subgroup_;
        } else {
          // Subgroups of both M and N are exactly the subgroups of M /\ N.
          all = intersect(*all, *f.subgroup_);
        }
        break;
      case Kind::intersection:
        for (const Family& sub : f.members_) {
          queue.push_back(sub);
        }
        break;
      case Kind::union_of:
        rest.push_back(f);
        break;
    }
  }
  if (!rest.empty()) {
    throw Error("intersection_of: unions inside intersections unsupported");
  }
  if (all && min_rank) {
    const Subgroup& m = *all;
    if (m.rank() <= *min_rank) {
      return all_of(m);  // All(M) already sits inside F_r
    }
    if (*min_rank == 0 && contains(m, Subgroup::torsion_part(m.ambient()))) {
      return rank_family(0);  // every finite subgroup lies inside M
    }
    Family f;
    f.kind_ = Kind::intersection;
    f.members_.push_back(rank_family(*min_rank));
    f.members_.push_back(all_of(m));
    return f;
  }
  if (all) {
    return all_of(*all);
  }
  if (min_rank) {
    return rank_family(*min_rank);
  }
  throw Error("intersection_of: no members");
}

Family Family::union_of(std::vector<Family> members) {
  if (members.empty()) {
    throw Error("union_of: no members");
  }
  std::vector<Family> flat;
  std::vector<Family> queue = std::move(members);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Family f = queue[qi];
    if (f.kind_ == Kind::union_of) {
      for (const Family& sub : f.members_) {
        queue.push_back(sub);
      }
    } else {
      flat.push_back(f);
    }
  }
  std::sort(flat.begin(), flat.end(), [](const Family& a, const Family& b) {
    return compare(a, b) < 0;
  });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const Family& a, const Family& b) {
                           return compare(a, b) == 0;
                         }),
             flat.end());
  if (flat.size() == 1) {
    return flat.front();
  }
  Family f;
  f.kind_ = Kind::union_of;
  f.members_ = std::move(flat);
  return f;
}

int Family::compare(const Family& a, const Family& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) < static_cast<int>(b.kind_) ? -1 : 1;
  }
  switch (a.kind_) {
    case Kind::rank:
      if (a.rank_ != b.rank_) {
        return a.rank_ < b.rank_ ? -1 : 1;
      }
      return 0;
    case Kind::all_of:
      return Subgroup::compare(*a.subgroup_, *b.subgroup_);
    case Kind::intersection:
    case Kind::union_of: {
      if (a.members_.size() != b.members_.size()) {
        return a.members_.size() < b.members_.size() ? -1 : 1;
      }
      for (std::size_t i = 0; i < a.members_.size(); ++i) {
        const int c = compare(a.members_[i], b.members_[i]);
        if (c != 0) {
          return c;
        }
      }
      return 0;
    }
  }
  return 0;
}

bool Family::operator==(const Family& other) const {
  return compare(*this, other) == 0;
}

std::string Family::to_string() const {
  switch (kind_) {
    case Kind::rank:
      return "F_" + std::to_string(rank_);
    case Kind::all_of:
      return "All(" + subgroup_->lift_basis().to_string() + ")";
    case Kind::intersection:
    case Kind::union_of: {
      const char* sep = kind_ == Kind::intersection ? " ∩ " : " ∪ ";
      std::string out;
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) {
          out += sep;
        }
        const bool composite = members_[i].kind_ == Kind::intersection ||
                               members_[i].kind_ == Kind::union_of;
        out += composite ? "(" + members_[i].to_string() + ")"
                         : members_[i].to_string();
      }
      return out;
    }
  }
  return {};
}

}  // namespace famdim
