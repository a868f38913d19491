#include "famdim/certificate.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "famdim/errors.hpp"

namespace famdim {

namespace {

// The maximal rank-r subgroup spanned by the first r coordinate vectors
// together with the whole torsion part.
Subgroup standard_max_subgroup(const AbelianGroup& g, std::size_t r) {
  const std::size_t n = g.free_rank();
  const std::size_t k = g.torsion_count();
  assert(r <= n);
  IntMatrix lift(r + k, n + k);
  for (std::size_t i = 0; i < r; ++i) {
    lift(i, i) = 1;
  }
  for (std::size_t t = 0; t < k; ++t) {
    lift(r + t, n + t) = 1;
  }
  return Subgroup::from_canonical_basis(g, lift);
}

// A maximal rank-r subgroup sitting inside the maximal subgroup m: span the
// first r free-part basis rows of m and saturate. Saturating a sublattice
// of the (saturated) lift of m stays inside that lift.
Subgroup sub_representative(const Subgroup& m, std::size_t r) {
  assert(r >= 1 && r < m.rank());
  const IntMatrix rows = m.lift_basis().take_rows(r);
  const Subgroup n = max_overgroup(Subgroup::from_lift_rows(m.ambient(), rows));
  assert(contains(m, n));
  return n;
}

CertNodePtr aux_node(const AbelianGroup& g, std::size_t level,
                     const Subgroup& m);

// Cylinder gluing a model for `base_family` (with node `base`) to the
// model for All(N) along their intersection `overlap`.
CertNodePtr cylinder_over(const AbelianGroup& g, const CertNodePtr& base,
                          const Subgroup& n_rep, std::size_t level) {
  return union_bound(base, all_m_model(g, n_rep),
                     aux_node(g, level, n_rep));
}

// Bound for the subgroups of rank <= level that lie inside the maximal
// subgroup m. Mirrors the main chain, but every glued class stays inside m.
CertNodePtr aux_node(const AbelianGroup& g, std::size_t level,
                     const Subgroup& m) {
  const std::size_t n = g.free_rank();
  if (level == 0) {
    auto node = std::make_shared<CertNode>();
    node->kind = NodeKind::base_fin;
    node->family = Family::intersection_of(
        {Family::rank_family(0), Family::all_of(m)});
    node->dim = n;
    node->note =
        "finite subgroups already lie inside the maximal subgroup; "
        "translation model";
    return node;
  }
  const CertNodePtr prev = aux_node(g, level - 1, m);
  const Subgroup rep = sub_representative(m, level);
  const CertNodePtr cyl = cylinder_over(g, prev, rep, level - 1);
  auto node = std::make_shared<CertNode>();
  node->kind = NodeKind::push_out;
  node->family = Family::intersection_of(
      {Family::rank_family(level), Family::all_of(m)});
  node->children = {prev, cyl};
  node->dim = std::max(prev->dim + 1, cyl->dim);
  node->classes = ClassInfo{true, std::nullopt};
  node->note = "glued over the classes of maximal rank-" +
               std::to_string(level) + " subgroups inside a fixed maximal one";
  return node;
}

// Main chain: bound for the rank-`level` family of the whole group.
CertNodePtr main_node(const AbelianGroup& g, std::size_t level,
                      const std::optional<Int>& sample_height) {
  if (level == 0) {
    return base_fin_model(g);
  }
  const CertNodePtr prev = main_node(g, level - 1, sample_height);
  std::optional<ClassEnumeration> sample;
  std::vector<Subgroup> reps;
  if (sample_height) {
    sample = enumerate_maximal(g, level, *sample_height);
    reps = sample->representatives;
  } else {
    reps = {standard_max_subgroup(g, level)};
  }
  std::vector<CertNodePtr> children{prev};
  std::size_t dim = prev->dim + 1;
  for (const Subgroup& rep : reps) {
    const CertNodePtr cyl = cylinder_over(g, prev, rep, level - 1);
    dim = std::max(dim, cyl->dim);
    children.push_back(cyl);
  }
  auto node = std::make_shared<CertNode>();
  node->kind = NodeKind::push_out;
  node->family = Family::rank_family(level);
  node->children = std::move(children);
  node->dim = dim;
  node->classes = ClassInfo{true, std::move(sample)};
  node->note =
      "one cylinder per commensurability class of maximal rank-" +
      std::to_string(level) +
      " subgroups; every normalizer is the whole group";
  return node;
}

}  // namespace

CertNodePtr base_fin_model(const AbelianGroup& g) {
  if (g.free_rank() == 0) {
    throw RankZeroGroup("base_fin_model: torsion-free rank must be >= 1");
  }
  auto node = std::make_shared<CertNode>();
  node->kind = NodeKind::base_fin;
  node->family = Family::rank_family(0);
  node->dim = g.free_rank();
  node->note = "free part acts by translations on R^n";
  return node;
}

CertNodePtr all_m_model(const AbelianGroup& g, const Subgroup& m) {
  if (!(m.ambient() == g)) {
    throw AmbientMismatch("all_m_model: subgroup has a different ambient");
  }
  const Family fam = Family::all_of(m);  // throws NotMaximal when needed
  auto node = std::make_shared<CertNode>();
  node->kind = NodeKind::base_all_m;
  node->family = fam;
  node->dim = g.free_rank() - m.rank();
  node->note = "quotient by the maximal subgroup is free; it acts by "
               "translations on the complement";
  return node;
}

CertNodePtr union_bound(const CertNodePtr& left, const CertNodePtr& right,
                        const CertNodePtr& overlap) {
  if (!left || !right || !overlap) {
    throw Error("union_bound: missing child");
  }
  const Family expected =
      Family::intersection_of({left->family, right->family});
  if (!(overlap->family == expected)) {
    throw FamilyMismatch(
        "union_bound: overlap child must model the intersection of the "
        "outer families");
  }
  auto node = std::make_shared<CertNode>();
  node->kind = NodeKind::union_cylinder;
  node->family = Family::union_of({left->family, right->family});
  node->children = {left, right, overlap};
  node->dim = std::max({left->dim, right->dim, overlap->dim + 1});
  node->note = "double mapping cylinder over the shared part";
  return node;
}

CertNodePtr pushout_step(const AbelianGroup& g, std::size_t r,
                         std::size_t prev_bound,
                         const std::optional<ClassEnumeration>& sample) {
  const std::size_t n = g.free_rank();
  if (n == 0) {
    throw RankZeroGroup("pushout_step: torsion-free rank must be >= 1");
  }
  if (r < 1 || r >= n) {
    throw BadRank("pushout_step: rank must satisfy 1 <= r < " +
                  std::to_string(n));
  }
  if (prev_bound < n) {
    throw BadBound("pushout_step: previous bound must be at least " +
                   std::to_string(n));
  }
  if (sample) {
    if (!(sample->ambient == g)) {
      throw AmbientMismatch("pushout_step: sample has a different ambient");
    }
    if (sample->rank != r) {
      throw BadRank("pushout_step: sample rank differs from r");
    }
  }
  const CertNodePtr prev = main_node(g, r - 1, std::nullopt);
  std::vector<Subgroup> reps;
  if (sample) {
    reps = sample->representatives;
  } else {
    reps = {standard_max_subgroup(g, r)};
  }
  std::vector<CertNodePtr> children{prev};
  std::size_t dim = prev->dim + 1;
  for (const Subgroup& rep : reps) {
    const CertNodePtr cyl = cylinder_over(g, prev, rep, r - 1);
    dim = std::max(dim, cyl->dim);
    children.push_back(cyl);
  }
  auto node = std::make_shared<CertNode>();
  node->kind = NodeKind::push_out;
  node->family = Family::rank_family(r);
  node->children = std::move(children);
  node->dim = dim;
  node->classes = ClassInfo{true, sample};
  node->note =
      "one cylinder per commensurability class of maximal rank-" +
      std::to_string(r) + " subgroups; every normalizer is the whole group";
  return node;
}

Certificate certify(const AbelianGroup& g, std::size_t r,
                    const CertifyOptions& options) {
  const std::size_t n = g.free_rank();
  if (n == 0) {
    throw RankZeroGroup("certify: torsion-free rank must be >= 1");
  }
  Certificate cert;
  cert.group = g;
  cert.target_family = Family::rank_family(r);
  if (r >= n) {
    auto node = std::make_shared<CertNode>();
    node->kind = NodeKind::base_fin;
    node->family = Family::rank_family(r);
    node->dim = 0;
    node->note = "the family contains every subgroup; one point is a model";
    cert.root = node;
    cert.bound = 0;
    cert.exact = false;
    return cert;
  }
  cert.root = main_node(g, r, options.sample_height);
  cert.bound = cert.root->dim;
  assert(cert.bound == n + r);
  // The bound is known to be attained for the finite family, for the
  // rank-one family, and for the rank-two family of Z^3; everything else
  // stays an upper bound.
  cert.exact = r == 0 || r == 1 ||
               (r == 2 && n == 3 && g.torsion_count() == 0);
  return cert;
}

namespace {

struct FamilyParts {
  std::optional<std::size_t> rank;
  std::optional<Subgroup> all;
  bool ok = false;
};

FamilyParts decompose(const Family& f) {
  FamilyParts p;
  switch (f.kind()) {
    case Family::Kind::rank:
      p.rank = f.rank_bound();
      p.ok = true;
      break;
    case Family::Kind::all_of:
      p.all = f.subgroup();
      p.ok = true;
      break;
    case Family::Kind::intersection:
      for (const Family& m : f.members()) {
        if (m.kind() == Family::Kind::rank && !p.rank) {
          p.rank = m.rank_bound();
        } else if (m.kind() == Family::Kind::all_of && !p.all) {
          p.all = m.subgroup();
        } else {
          return p;
        }
      }
      p.ok = p.rank.has_value() && p.all.has_value();
      break;
    case Family::Kind::union_of:
      break;
  }
  return p;
}

Family predecessor_family(std::size_t r, const std::optional<Subgroup>& m) {
  std::vector<Family> members{Family::rank_family(r - 1)};
  if (m) {
    members.push_back(Family::all_of(*m));
  }
  return Family::intersection_of(std::move(members));
}

bool check_node(const CertNode& node, const AbelianGroup& g,
                std::set<const CertNode*>& seen) {
  if (seen.contains(&node)) {
    return true;
  }
  const std::size_t n = g.free_rank();
  switch (node.kind) {
    case NodeKind::base_fin: {
      if (!node.children.empty()) {
        return false;
      }
      if (node.family.kind() != Family::Kind::rank) {
        return false;
      }
      const std::size_t r = node.family.rank_bound();
      if (r == 0) {
        if (node.dim != n) {
          return false;
        }
      } else if (r >= n) {
        if (node.dim != 0) {
          return false;
        }
      } else {
        return false;
      }
      break;
    }
    case NodeKind::base_all_m: {
      if (!node.children.empty()) {
        return false;
      }
      if (node.family.kind() != Family::Kind::all_of) {
        return false;
      }
      const Subgroup& m = node.family.subgroup();
      if (!(m.ambient() == g) || !is_maximal(m)) {
        return false;
      }
      if (node.dim != n - m.rank()) {
        return false;
      }
      break;
    }
    case NodeKind::union_cylinder: {
      if (node.children.size() != 3) {
        return false;
      }
      for (const CertNodePtr& c : node.children) {
        if (!c || !check_node(*c, g, seen)) {
          return false;
        }
      }
      const CertNode& left = *node.children[0];
      const CertNode& right = *node.children[1];
      const CertNode& overlap = *node.children[2];
      if (!(node.family == Family::union_of({left.family, right.family}))) {
        return false;
      }
      if (!(overlap.family ==
            Family::intersection_of({left.family, right.family}))) {
        return false;
      }
      if (node.dim != std::max({left.dim, right.dim, overlap.dim + 1})) {
        return false;
      }
      break;
    }
    case NodeKind::push_out: {
      if (node.children.size() < 2) {
        return false;
      }
      for (const CertNodePtr& c : node.children) {
        if (!c || !check_node(*c, g, seen)) {
          return false;
        }
      }
      const FamilyParts parts = decompose(node.family);
      if (!parts.ok || !parts.rank || *parts.rank < 1) {
        return false;
      }
      const std::size_t r = *parts.rank;
      const Family pred = predecessor_family(r, parts.all);
      if (!(node.children[0]->family == pred)) {
        return false;
      }
      std::size_t dim = node.children[0]->dim + 1;
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        const CertNode& cyl = *node.children[i];
        if (cyl.kind != NodeKind::union_cylinder ||
            cyl.children.size() != 3) {
          return false;
        }
        if (!(cyl.children[0]->family == pred)) {
          return false;
        }
        if (cyl.children[1]->kind != NodeKind::base_all_m) {
          return false;
        }
        const Subgroup& glued = cyl.children[1]->family.subgroup();
        if (glued.rank() != r) {
          return false;
        }
        if (parts.all && !contains(*parts.all, glued)) {
          return false;
        }
        dim = std::max(dim, cyl.dim);
      }
      if (node.dim != dim) {
        return false;
      }
      if (node.classes && node.classes->sample) {
        const ClassEnumeration& s = *node.classes->sample;
        if (!(s.ambient == g) || s.rank != r) {
          return false;
        }
        for (const Subgroup& rep : s.representatives) {
          if (rep.rank() != r || !is_maximal(rep)) {
            return false;
          }
        }
      }
      break;
    }
  }
  seen.insert(&node);
  return true;
}

}  // namespace

bool validate_certificate(const Certificate& cert) {
  try {
    const std::size_t n = cert.group.free_rank();
    if (n == 0 || !cert.root) {
      return false;
    }
    if (!(cert.root->family == cert.target_family)) {
      return false;
    }
    if (cert.bound != cert.root->dim) {
      return false;
    }
    std::set<const CertNode*> seen;
    if (!check_node(*cert.root, cert.group, seen)) {
      return false;
    }
    if (cert.target_family.kind() == Family::Kind::rank) {
      const std::size_t r = cert.target_family.rank_bound();
      if (r < n && cert.bound != n + r) {
        return false;
      }
      if (r >= n && cert.bound != 0) {
        return false;
      }
      if (cert.exact &&
          !(r < n && (r == 0 || r == 1 ||
                      (r == 2 && n == 3 &&
                       cert.group.torsion_count() == 0)))) {
        return false;
      }
    } else if (cert.exact) {
      return false;
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace famdim
