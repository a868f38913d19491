#include "famdim/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "famdim/errors.hpp"

namespace famdim {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) {
    throw ParseError(what);
  }
}

std::string interval_text(const IntInterval& iv) {
  if (iv.hi && *iv.hi == iv.lo) {
    return std::to_string(iv.lo);
  }
  if (iv.hi) {
    return "[" + std::to_string(iv.lo) + ", " + std::to_string(*iv.hi) + "]";
  }
  return "[" + std::to_string(iv.lo) + ", inf)";
}

Json interval_json(const IntInterval& iv) {
  Json j;
  j["min"] = iv.lo;
  if (iv.hi) {
    j["max"] = *iv.hi;
  } else {
    j["max"] = nullptr;
  }
  return j;
}

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::base_fin:
      return "base_fin";
    case NodeKind::base_all_m:
      return "base_all_m";
    case NodeKind::union_cylinder:
      return "union_cylinder";
    case NodeKind::push_out:
      return "push_out";
  }
  return "";
}

NodeKind kind_from_name(const std::string& s) {
  if (s == "base_fin") {
    return NodeKind::base_fin;
  }
  if (s == "base_all_m") {
    return NodeKind::base_all_m;
  }
  if (s == "union_cylinder") {
    return NodeKind::union_cylinder;
  }
  if (s == "push_out") {
    return NodeKind::push_out;
  }
  throw ParseError("unknown node kind: " + s);
}

const char* kind_display(NodeKind k) {
  switch (k) {
    case NodeKind::base_fin:
      return "BaseFin";
    case NodeKind::base_all_m:
      return "BaseAllM";
    case NodeKind::union_cylinder:
      return "UnionCylinder";
    case NodeKind::push_out:
      return "PushOut";
  }
  return "";
}

}  // namespace

Json to_json(const Int& v) {
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return Int(j.get<long long>());
  }
  if (j.is_number_unsigned()) {
    return Int(j.get<unsigned long long>());
  }
  require(j.is_string(), "expected an integer or a decimal string");
  const std::string s = j.get<std::string>();
  std::size_t b = s.size() > 0 && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  require(b < s.size(), "empty integer string");
  for (std::size_t i = b; i < s.size(); ++i) {
    require(s[i] >= '0' && s[i] <= '9', "bad integer string: " + s);
  }
  return Int(s);
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j,
                           std::optional<std::size_t> expect_cols) {
  require(j.is_array(), "matrix must be an array of rows");
  std::vector<std::vector<Int>> rows;
  std::optional<std::size_t> cols = expect_cols;
  for (const Json& jr : j) {
    require(jr.is_array(), "matrix row must be an array");
    std::vector<Int> row;
    for (const Json& je : jr) {
      row.push_back(int_from_json(je));
    }
    if (cols) {
      require(row.size() == *cols, "matrix rows have uneven lengths");
    } else {
      cols = row.size();
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, cols.value_or(0));
}

Json to_json(const AbelianGroup& g) {
  Json j;
  j["free_rank"] = g.free_rank();
  Json tors = Json::array();
  for (const Int& d : g.torsion_orders()) {
    tors.push_back(to_json(d));
  }
  j["torsion_orders"] = std::move(tors);
  return j;
}

AbelianGroup group_from_json(const Json& j) {
  require(j.is_object() && j.contains("free_rank"),
          "group needs a free_rank field");
  require(j["free_rank"].is_number_unsigned() ||
              (j["free_rank"].is_number_integer() &&
               j["free_rank"].get<long long>() >= 0),
          "free_rank must be a nonnegative integer");
  const auto n = j["free_rank"].get<std::size_t>();
  std::vector<Int> torsion;
  if (j.contains("torsion_orders")) {
    require(j["torsion_orders"].is_array(),
            "torsion_orders must be an array");
    for (const Json& je : j["torsion_orders"]) {
      torsion.push_back(int_from_json(je));
    }
  }
  return AbelianGroup(n, torsion);
}

Json to_json(const Subgroup& s) {
  Json j;
  j["ambient"] = to_json(s.ambient());
  j["lift_basis"] = to_json(s.lift_basis());
  return j;
}

Subgroup subgroup_from_json(const Json& j) {
  require(j.is_object() && j.contains("ambient") && j.contains("lift_basis"),
          "subgroup needs ambient and lift_basis fields");
  const AbelianGroup g = group_from_json(j["ambient"]);
  const IntMatrix basis =
      matrix_from_json(j["lift_basis"], g.ambient_dim());
  return Subgroup::from_canonical_basis(g, basis);
}

Json to_json(const ClassEnumeration& e) {
  Json j;
  j["ambient"] = to_json(e.ambient);
  j["rank"] = e.rank;
  j["height_bound"] = to_json(e.height_bound);
  j["exhaustive_within_bound"] = e.exhaustive_within_bound;
  Json reps = Json::array();
  for (const Subgroup& s : e.representatives) {
    reps.push_back(to_json(s));
  }
  j["representatives"] = std::move(reps);
  return j;
}

ClassEnumeration enumeration_from_json(const Json& j) {
  require(j.is_object() && j.contains("ambient") && j.contains("rank") &&
              j.contains("height_bound") && j.contains("representatives"),
          "enumeration needs ambient, rank, height_bound, representatives");
  ClassEnumeration e;
  e.ambient = group_from_json(j["ambient"]);
  require(j["rank"].is_number_unsigned() || j["rank"].is_number_integer(),
          "rank must be an integer");
  e.rank = j["rank"].get<std::size_t>();
  e.height_bound = int_from_json(j["height_bound"]);
  e.exhaustive_within_bound =
      j.value("exhaustive_within_bound", false);
  require(j["representatives"].is_array(),
          "representatives must be an array");
  for (const Json& js : j["representatives"]) {
    Subgroup s = subgroup_from_json(js);
    require(s.ambient() == e.ambient,
            "representative has a different ambient group");
    e.representatives.push_back(std::move(s));
  }
  return e;
}

Json to_json(const Family& f) {
  Json j;
  switch (f.kind()) {
    case Family::Kind::rank:
      j["type"] = "rank";
      j["r"] = f.rank_bound();
      break;
    case Family::Kind::all_of:
      j["type"] = "all_of";
      j["subgroup"] = to_json(f.subgroup());
      break;
    case Family::Kind::intersection:
    case Family::Kind::union_of: {
      j["type"] =
          f.kind() == Family::Kind::intersection ? "intersection" : "union";
      Json members = Json::array();
      for (const Family& m : f.members()) {
        members.push_back(to_json(m));
      }
      j["members"] = std::move(members);
      break;
    }
  }
  return j;
}

Family family_from_json(const Json& j) {
  require(j.is_object() && j.contains("type"), "family needs a type field");
  const std::string type = j["type"].get<std::string>();
  if (type == "rank") {
    require(j.contains("r") && (j["r"].is_number_unsigned() ||
                                (j["r"].is_number_integer() &&
                                 j["r"].get<long long>() >= 0)),
            "rank family needs a nonnegative r");
    return Family::rank_family(j["r"].get<std::size_t>());
  }
  if (type == "all_of") {
    require(j.contains("subgroup"), "all_of family needs a subgroup");
    return Family::all_of(subgroup_from_json(j["subgroup"]));
  }
  if (type == "intersection" || type == "union") {
    require(j.contains("members") && j["members"].is_array() &&
                !j["members"].empty(),
            "composite family needs members");
    std::vector<Family> members;
    for (const Json& jm : j["members"]) {
      members.push_back(family_from_json(jm));
    }
    return type == "intersection"
               ? Family::intersection_of(std::move(members))
               : Family::union_of(std::move(members));
  }
  throw ParseError("unknown family type: " + type);
}

Json to_json(const CertNode& node) {
  Json j;
  j["kind"] = kind_name(node.kind);
  j["family"] = to_json(node.family);
  j["dim"] = node.dim;
  if (node.classes) {
    Json jc;
    jc["infinitely_many"] = node.classes->infinitely_many;
    if (node.classes->sample) {
      jc["sample"] = to_json(*node.classes->sample);
    }
    j["classes"] = std::move(jc);
  }
  if (!node.note.empty()) {
    j["note"] = node.note;
  }
  Json children = Json::array();
  for (const CertNodePtr& c : node.children) {
    children.push_back(to_json(*c));
  }
  j["children"] = std::move(children);
  return j;
}

namespace {

CertNodePtr node_from_json(const Json& j) {
  require(j.is_object() && j.contains("kind") && j.contains("family") &&
              j.contains("dim"),
          "certificate node needs kind, family, dim");
  auto node = std::make_shared<CertNode>();
  node->kind = kind_from_name(j["kind"].get<std::string>());
  node->family = family_from_json(j["family"]);
  require(j["dim"].is_number_unsigned() ||
              (j["dim"].is_number_integer() &&
               j["dim"].get<long long>() >= 0),
          "node dim must be a nonnegative integer");
  node->dim = j["dim"].get<std::size_t>();
  if (j.contains("classes")) {
    const Json& jc = j["classes"];
    require(jc.is_object(), "classes must be an object");
    ClassInfo info;
    info.infinitely_many = jc.value("infinitely_many", true);
    if (jc.contains("sample")) {
      info.sample = enumeration_from_json(jc["sample"]);
    }
    node->classes = std::move(info);
  }
  node->note = j.value("note", std::string());
  if (j.contains("children")) {
    require(j["children"].is_array(), "children must be an array");
    for (const Json& jchild : j["children"]) {
      node->children.push_back(node_from_json(jchild));
    }
  }
  return node;
}

}  // namespace

Json to_json(const Certificate& cert) {
  Json j;
  j["group"] = to_json(cert.group);
  j["target_family"] = to_json(cert.target_family);
  j["bound"] = cert.bound;
  j["exact"] = cert.exact;
  j["root"] = to_json(*cert.root);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  require(j.is_object() && j.contains("group") &&
              j.contains("target_family") && j.contains("bound") &&
              j.contains("root"),
          "certificate needs group, target_family, bound, root");
  Certificate cert;
  cert.group = group_from_json(j["group"]);
  cert.target_family = family_from_json(j["target_family"]);
  require(j["bound"].is_number_unsigned() ||
              (j["bound"].is_number_integer() &&
               j["bound"].get<long long>() >= 0),
          "bound must be a nonnegative integer");
  cert.bound = j["bound"].get<std::size_t>();
  cert.exact = j.value("exact", false);
  cert.root = node_from_json(j["root"]);
  return cert;
}

Json to_json(const SequenceSpec& spec) {
  Json terms = Json::array();
  for (const auto& term : spec.terms) {
    Json jt;
    jt["label"] = term.label;
    if (term.dim) {
      jt["dim"] = *term.dim;
    } else {
      jt["dim"] = nullptr;
    }
    terms.push_back(std::move(jt));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

SequenceSpec sequence_from_json(const Json& j) {
  require(j.is_object() && j.contains("terms") && j["terms"].is_array(),
          "sequence needs a terms array");
  SequenceSpec spec;
  std::size_t idx = 0;
  for (const Json& jt : j["terms"]) {
    require(jt.is_object(), "each term must be an object");
    SequenceSpec::Term term;
    term.label = jt.value("label", "T" + std::to_string(idx));
    if (jt.contains("dim") && !jt["dim"].is_null()) {
      require(jt["dim"].is_number_integer() || jt["dim"].is_number_unsigned(),
              "term dim must be an integer or null");
      term.dim = jt["dim"].get<long long>();
    }
    spec.terms.push_back(std::move(term));
    ++idx;
  }
  return spec;
}

Json to_json(const RankSolution& sol, const SequenceSpec& spec) {
  Json j;
  j["feasible"] = sol.feasible;
  if (!sol.feasible) {
    return j;
  }
  Json terms = Json::array();
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    Json jt;
    jt["label"] = spec.terms[i].label;
    jt["range"] = interval_json(sol.term_ranges[i]);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  Json maps = Json::array();
  for (std::size_t i = 0; i < sol.map_ranges.size(); ++i) {
    Json jm;
    jm["from"] = spec.terms[i].label;
    jm["to"] = spec.terms[i + 1].label;
    jm["range"] = interval_json(sol.map_ranges[i]);
    jm["forced_surjective"] = forced_surjective_at(sol, i);
    maps.push_back(std::move(jm));
  }
  j["maps"] = std::move(maps);
  return j;
}

Json to_json(const klein::DemoReport& rep) {
  Json j;
  j["a"] = klein::to_string(rep.a);
  j["ab_inverse"] = klein::to_string(rep.ab_inverse);
  j["square"] = klein::to_string(rep.square);
  j["squares_coincide"] = rep.squares_coincide;
  j["subgroups_distinct"] = rep.subgroups_distinct;
  j["both_contain_square"] = rep.both_contain_square;
  j["index_in_a"] = to_json(rep.index_in_a);
  j["index_in_ab_inverse"] = to_json(rep.index_in_ab_inverse);
  j["a_maximal"] = rep.a_maximal;
  j["ab_inverse_maximal"] = rep.ab_inverse_maximal;
  j["unique_maximal_overgroup_fails"] = rep.uniqueness_fails;
  return j;
}

std::string render_text(const Subgroup& s) {
  std::ostringstream os;
  os << "subgroup of " << s.ambient().to_string() << ": rank " << s.rank()
     << ", lift basis " << s.lift_basis().to_string();
  return os.str();
}

std::string render_text(const ClassEnumeration& e) {
  std::ostringstream os;
  os << "maximal rank-" << e.rank << " subgroups of "
     << e.ambient.to_string() << " with height <= " << e.height_bound
     << ": " << e.representatives.size() << " classes";
  if (e.exhaustive_within_bound) {
    os << " (exhaustive within bound)";
  }
  for (const Subgroup& s : e.representatives) {
    os << "\n  " << s.lift_basis().to_string();
  }
  return os.str();
}

namespace {

void render_node(std::ostringstream& os, const CertNode& node,
                 std::size_t depth) {
  os << std::string(depth * 2, ' ') << kind_display(node.kind) << ' '
     << node.family.to_string() << " dim " << node.dim;
  if (node.classes) {
    os << " [classes: infinite";
    if (node.classes->sample) {
      os << ", sample of "
         << node.classes->sample->representatives.size();
    }
    os << "]";
  }
  os << '\n';
  for (const CertNodePtr& c : node.children) {
    render_node(os, *c, depth + 1);
  }
}

}  // namespace

std::string render_text(const Certificate& cert) {
  std::ostringstream os;
  os << "group: " << cert.group.to_string() << '\n';
  os << "target family: " << cert.target_family.to_string() << '\n';
  os << "bound: " << cert.bound
     << (cert.exact ? " (exact)" : " (upper bound)") << '\n';
  render_node(os, *cert.root, 0);
  std::string out = os.str();
  if (!out.empty() && out.back() == '\n') {
    out.pop_back();
  }
  return out;
}

std::string render_text(const SequenceSpec& spec, const RankSolution& sol) {
  std::ostringstream os;
  os << "feasible: " << (sol.feasible ? "yes" : "no");
  if (!sol.feasible) {
    return os.str();
  }
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    os << '\n'
       << spec.terms[i].label << ": dim "
       << interval_text(sol.term_ranges[i]);
  }
  for (std::size_t i = 0; i < sol.map_ranges.size(); ++i) {
    os << '\n'
       << "map " << spec.terms[i].label << " -> " << spec.terms[i + 1].label
       << ": rank " << interval_text(sol.map_ranges[i]);
    if (forced_surjective_at(sol, i)) {
      os << ", forced surjective";
    }
  }
  return os.str();
}

std::string render_text(const klein::DemoReport& rep) {
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "a^2 == (a b^-1)^2: " << yn(rep.squares_coincide) << '\n'
     << "<a> == <a b^-1>: " << yn(!rep.subgroups_distinct) << '\n'
     << "both contain <a^2>: " << yn(rep.both_contain_square) << '\n'
     << "[<a> : <a^2>] = " << rep.index_in_a << '\n'
     << "[<a b^-1> : <a^2>] = " << rep.index_in_ab_inverse << '\n'
     << "<a> maximal cyclic: " << yn(rep.a_maximal) << '\n'
     << "<a b^-1> maximal cyclic: " << yn(rep.ab_inverse_maximal) << '\n'
     << "maximal overgroup uniqueness fails: " << yn(rep.uniqueness_fails);
  return os.str();
}

}  // namespace famdim
