#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "famdim/abelian.hpp"
#include "famdim/certificate.hpp"
#include "famdim/family.hpp"
#include "famdim/klein.hpp"
#include "famdim/les.hpp"

namespace famdim {

// Ordered JSON keeps key order stable, so serialized output is
// byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

// Integers serialize as decimal strings so no precision is lost.
Json to_json(const Int& v);
Int int_from_json(const Json& j);

// Matrices are arrays of rows; a 0-row matrix needs `expect_cols` to pin
// the ambient width on the way back in.
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j,
                           std::optional<std::size_t> expect_cols = {});

Json to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const Json& j);

Json to_json(const Subgroup& s);
Subgroup subgroup_from_json(const Json& j);

Json to_json(const ClassEnumeration& e);
ClassEnumeration enumeration_from_json(const Json& j);

Json to_json(const Family& f);
Family family_from_json(const Json& j);

Json to_json(const CertNode& node);
Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json to_json(const SequenceSpec& spec);
SequenceSpec sequence_from_json(const Json& j);
Json to_json(const RankSolution& sol, const SequenceSpec& spec);

Json to_json(const klein::DemoReport& rep);

// Plain-text renderings used by the command line tool.
std::string render_text(const Subgroup& s);
std::string render_text(const ClassEnumeration& e);
std::string render_text(const Certificate& cert);
std::string render_text(const SequenceSpec& spec, const RankSolution& sol);
std::string render_text(const klein::DemoReport& rep);

}  // namespace famdim
