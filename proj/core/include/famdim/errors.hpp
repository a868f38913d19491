#pragma once

#include <stdexcept>
#include <string>

namespace famdim {

// Base class for every domain error raised by this library. Callers that do
// not care about the precise failure can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text (group spec, matrix JSON, word syntax) that does not parse.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The alleged sublattice is not contained in the claimed overlattice.
class ContainmentViolation : public Error {
 public:
  using Error::Error;
};

// Two objects that must share an ambient group do not.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

// An operation that requires equal (and positive) ranks was given ranks that
// differ or vanish.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

// A rank-zero subgroup was passed where a positive-rank one is required.
class RankZero : public Error {
 public:
  using Error::Error;
};

// A torsion order below 2 (or otherwise unusable) was supplied.
class BadTorsion : public Error {
 public:
  using Error::Error;
};

// Vector or matrix sizes do not match the ambient coordinate count.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A rank parameter outside the admissible range for the operation.
class BadRank : public Error {
 public:
  using Error::Error;
};

// A dimension bound below the minimum the construction can accept.
class BadBound : public Error {
 public:
  using Error::Error;
};

// The whole group has torsion-free rank zero, so no model is built.
class RankZeroGroup : public Error {
 public:
  using Error::Error;
};

// A subgroup that must be maximal within its commensurability class is not.
class NotMaximal : public Error {
 public:
  using Error::Error;
};

// Child certificates combined under the wrong family bookkeeping.
class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

// A sequence description that violates the shape rules of the solver.
class MalformedSpec : public Error {
 public:
  using Error::Error;
};

// The identity element was passed where a nontrivial one is required.
class IdentityInput : public Error {
 public:
  using Error::Error;
};

}  // namespace famdim
