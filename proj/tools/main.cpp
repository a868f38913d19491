#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "famdim/abelian.hpp"
#include "famdim/certificate.hpp"
#include "famdim/errors.hpp"
#include "famdim/json_io.hpp"
#include "famdim/klein.hpp"
#include "famdim/les.hpp"

using namespace famdim;

namespace {

void emit(const Json& j) {
  std::cout << j.dump(2) << '\n';
}

void emit_text(const std::string& s) {
  std::cout << s << '\n';
}

int validation_failure(const std::string& what) {
  std::cerr << "error: " << what << '\n';
  return 2;
}

int domain_failure(const std::string& what) {
  std::cerr << "error: " << what << '\n';
  return 1;
}

AbelianGroup parse_group(const std::string& text) {
  return AbelianGroup::parse(text);
}

Subgroup parse_subgroup(const AbelianGroup& g, const std::string& gens_json) {
  Json j;
  try {
    j = Json::parse(gens_json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("generator matrix is not valid JSON: ") +
                     e.what());
  }
  const IntMatrix rows = matrix_from_json(j, g.ambient_dim());
  std::vector<GroupElement> elements;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    elements.emplace_back(g, rows.row(i));
  }
  return Subgroup::from_generators(g, elements);
}

Int parse_int_arg(const std::string& text, const std::string& flag) {
  try {
    return int_from_json(Json(text));
  } catch (const Error&) {
    throw ParseError(flag + " expects a decimal integer, got \"" + text +
                     "\"");
  }
}

struct SubgroupArgs {
  std::string group;
  std::string gens;
  std::string gens2;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for subgroups of finitely generated "
               "abelian groups: lattice normal forms, commensurability, "
               "dimension certificates, and exact-sequence rank solving"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* subgroup = app.add_subcommand("subgroup", "Subgroup calculus");
  subgroup->require_subcommand(1);
  subgroup->fallthrough();
  SubgroupArgs sargs;
  const auto add_subgroup_cmd = [&](const char* name, const char* help,
                                    bool binary) {
    CLI::App* cmd = subgroup->add_subcommand(name, help);
    cmd->fallthrough();
    cmd->add_option("--group", sargs.group, "Ambient group, e.g. \"Z^2 + Z/4\"")
        ->required();
    cmd->add_option("--gens", sargs.gens,
                    "Generators as a JSON matrix of coordinate rows")
        ->required();
    if (binary) {
      cmd->add_option("--gens2", sargs.gens2,
                      "Generators of the second subgroup")
          ->required();
    }
    return cmd;
  };
  CLI::App* cmd_saturate = add_subgroup_cmd(
      "saturate", "Maximal overgroup of the commensurability class", false);
  CLI::App* cmd_intersect =
      add_subgroup_cmd("intersect", "Intersection of two subgroups", true);
  CLI::App* cmd_sum = add_subgroup_cmd("sum", "Sum of two subgroups", true);
  CLI::App* cmd_index = add_subgroup_cmd(
      "index", "Index of the first subgroup inside the second", true);
  CLI::App* cmd_comm = add_subgroup_cmd(
      "commensurable", "Whether the two subgroups are commensurable", true);
  CLI::App* cmd_rank =
      add_subgroup_cmd("rank", "Torsion-free rank of the subgroup", false);
  CLI::App* cmd_quotient = add_subgroup_cmd(
      "quotient", "Invariant factors of ambient/subgroup", false);

  CLI::App* cmd_enumerate = app.add_subcommand(
      "enumerate", "Maximal rank-r subgroups with bounded canonical basis");
  cmd_enumerate->fallthrough();
  std::string en_group;
  std::size_t en_rank = 0;
  std::string en_height;
  cmd_enumerate->add_option("--group", en_group, "Ambient group")->required();
  cmd_enumerate->add_option("--r", en_rank, "Torsion-free rank")->required();
  cmd_enumerate
      ->add_option("--height", en_height, "Bound on canonical basis entries")
      ->required();

  CLI::App* cmd_certify = app.add_subcommand(
      "certify", "Dimension certificate for the rank-r subgroup family");
  cmd_certify->fallthrough();
  std::string ct_group;
  std::size_t ct_rank = 0;
  std::string ct_sample_height;
  cmd_certify->add_option("--group", ct_group, "Ambient group")->required();
  cmd_certify->add_option("--r", ct_rank, "Family rank bound");
  cmd_certify->add_option(
      "--sample-height", ct_sample_height,
      "Attach enumerated class representatives up to this height");

  CLI::App* cmd_les = app.add_subcommand(
      "les", "Feasible arrow ranks of a long exact sequence");
  cmd_les->fallthrough();
  std::string les_path;
  cmd_les->add_option("--spec", les_path, "JSON file with a terms array")
      ->required();

  CLI::App* cmd_klein = app.add_subcommand(
      "klein-demo",
      "Klein-bottle group: maximal overgroup uniqueness fails");
  cmd_klein->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const bool text = format == "text";

  // Subgroup calculus: build the operands (validation), then compute.
  if (subgroup->parsed()) {
    AbelianGroup g;
    Subgroup a = Subgroup::trivial(g);
    Subgroup b = Subgroup::trivial(g);
    const bool binary = cmd_intersect->parsed() || cmd_sum->parsed() ||
                        cmd_index->parsed() || cmd_comm->parsed();
    try {
      g = parse_group(sargs.group);
      a = parse_subgroup(g, sargs.gens);
      if (binary) {
        b = parse_subgroup(g, sargs.gens2);
      }
    } catch (const Error& e) {
      return validation_failure(e.what());
    }
    try {
      if (cmd_saturate->parsed()) {
        const Subgroup s = max_overgroup(a);
        text ? emit_text(render_text(s)) : emit(to_json(s));
      } else if (cmd_intersect->parsed()) {
        const Subgroup s = intersect(a, b);
        text ? emit_text(render_text(s)) : emit(to_json(s));
      } else if (cmd_sum->parsed()) {
        const Subgroup s = sum(a, b);
        text ? emit_text(render_text(s)) : emit(to_json(s));
      } else if (cmd_index->parsed()) {
        const auto idx = subgroup_index(a, b);
        if (text) {
          emit_text("index: " + (idx ? idx->str() : std::string("infinite")));
        } else {
          Json j;
          j["index"] = idx ? to_json(*idx) : Json(nullptr);
          emit(j);
        }
      } else if (cmd_comm->parsed()) {
        const bool c = commensurable(a, b);
        if (text) {
          emit_text(std::string("commensurable: ") + (c ? "yes" : "no"));
        } else {
          Json j;
          j["commensurable"] = c;
          emit(j);
        }
      } else if (cmd_rank->parsed()) {
        if (text) {
          emit_text("rank: " + std::to_string(a.rank()));
        } else {
          Json j;
          j["rank"] = a.rank();
          emit(j);
        }
      } else if (cmd_quotient->parsed()) {
        const AbelianGroup q = quotient_invariants(a);
        if (text) {
          emit_text("quotient: " + q.to_string());
        } else {
          emit(to_json(q));
        }
      }
    } catch (const Error& e) {
      return domain_failure(e.what());
    }
    return 0;
  }

  if (cmd_enumerate->parsed()) {
    AbelianGroup g;
    Int height;
    try {
      g = parse_group(en_group);
      height = parse_int_arg(en_height, "--height");
    } catch (const Error& e) {
      return validation_failure(e.what());
    }
    try {
      const ClassEnumeration e = enumerate_maximal(g, en_rank, height);
      text ? emit_text(render_text(e)) : emit(to_json(e));
    } catch (const Error& e) {
      return domain_failure(e.what());
    }
    return 0;
  }

  if (cmd_certify->parsed()) {
    AbelianGroup g;
    CertifyOptions options;
    try {
      g = parse_group(ct_group);
      if (g.free_rank() == 0) {
        throw RankZeroGroup("certify: torsion-free rank must be >= 1");
      }
      if (!ct_sample_height.empty()) {
        options.sample_height =
            parse_int_arg(ct_sample_height, "--sample-height");
      }
    } catch (const Error& e) {
      return validation_failure(e.what());
    }
    try {
      const Certificate cert = certify(g, ct_rank, options);
      text ? emit_text(render_text(cert)) : emit(to_json(cert));
    } catch (const Error& e) {
      return domain_failure(e.what());
    }
    return 0;
  }

  if (cmd_les->parsed()) {
    SequenceSpec spec;
    try {
      std::ifstream in(les_path);
      if (!in) {
        throw ParseError("cannot open spec file: " + les_path);
      }
      Json j;
      try {
        j = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("spec file is not valid JSON: ") +
                         e.what());
      }
      spec = sequence_from_json(j);
    } catch (const Error& e) {
      return validation_failure(e.what());
    }
    try {
      const RankSolution sol = solve_les(spec);
      text ? emit_text(render_text(spec, sol)) : emit(to_json(sol, spec));
    } catch (const MalformedSpec& e) {
      return validation_failure(e.what());
    } catch (const Error& e) {
      return domain_failure(e.what());
    }
    return 0;
  }

  if (cmd_klein->parsed()) {
    const klein::DemoReport rep = klein::demo();
    text ? emit_text(render_text(rep)) : emit(to_json(rep));
    return 0;
  }

  return validation_failure("no command selected");
}
