#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "famdim/abelian.hpp"
#include "famdim/family.hpp"

namespace famdim {

enum class NodeKind { base_fin, base_all_m, union_cylinder, push_out };

struct CertNode;
using CertNodePtr = std::shared_ptr<const CertNode>;

// How a push-out node accounts for the commensurability classes it glues
// over. The class set is infinite in every regime handled here; a finite
// enumeration of representatives up to a height bound can be attached for
// inspection.
struct ClassInfo {
  bool infinitely_many = true;
  std::optional<ClassEnumeration> sample;
};

// One node of a model-construction tree. `dim` is the dimension of the
// model the node stands for; each kind has a fixed recomputation rule from
// its children, checked by validate_certificate:
//   base_fin        no children, dim = free rank (or 0 when the family is
//                   already everything),
//   base_all_m      no children, dim = free rank - rank(M),
//   union_cylinder  children (left, right, overlap),
//                   dim = max(left, right, overlap + 1),
//   push_out        children (predecessor, cylinders...),
//                   dim = max(predecessor + 1, cylinders...).
struct CertNode {
  NodeKind kind = NodeKind::base_fin;
  Family family = Family::rank_family(0);
  std::size_t dim = 0;
  std::vector<CertNodePtr> children;
  std::optional<ClassInfo> classes;
  std::string note;
};

struct Certificate {
  AbelianGroup group;
  Family target_family = Family::rank_family(0);
  std::size_t bound = 0;
  CertNodePtr root;
  // True only in the regimes where the bound is known to be attained;
  // everything else is an upper bound.
  bool exact = false;
};

// Model for the family of finite subgroups: the free part acts by
// translations on R^n. Throws RankZeroGroup when n == 0.
CertNodePtr base_fin_model(const AbelianGroup& g);

// Model for All(M), M maximal: the quotient by M is free of rank
// n - rank(M) and acts on R^(n - rank(M)). Throws NotMaximal otherwise.
CertNodePtr all_m_model(const AbelianGroup& g, const Subgroup& m);

// Double mapping cylinder over models for two families and their
// intersection. The overlap child must carry exactly the intersection of
// the two outer families; throws FamilyMismatch otherwise.
CertNodePtr union_bound(const CertNodePtr& left, const CertNodePtr& right,
                        const CertNodePtr& overlap);

// One inductive step: from a bound `prev_bound` for the rank-(r-1) family,
// glue cylinders over the commensurability classes of maximal rank-r
// subgroups to reach the rank-r family. Requires 1 <= r < n (BadRank) and
// prev_bound >= n (BadBound).
CertNodePtr pushout_step(const AbelianGroup& g, std::size_t r,
                         std::size_t prev_bound,
                         const std::optional<ClassEnumeration>& sample = {});

struct CertifyOptions {
  // When set, push-out nodes along the main chain carry an explicit
  // enumeration of class representatives up to this height bound.
  std::optional<Int> sample_height;
};

// Full certificate for the rank-r family of subgroups of g. For r < n the
// bound is n + r; for r >= n the family contains every subgroup and a
// single point is a model. Throws RankZeroGroup when n == 0.
Certificate certify(const AbelianGroup& g, std::size_t r,
                    const CertifyOptions& options = {});

// Structural re-check of a certificate: every node's dimension is
// recomputed from its children, family bookkeeping is re-derived, and the
// claimed bound must match the root. Returns false instead of throwing.
bool validate_certificate(const Certificate& cert);

}  // namespace famdim
