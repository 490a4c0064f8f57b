#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "donsum/conformance.hpp"
#include "donsum/fibersum.hpp"
#include "donsum/kmseries.hpp"
#include "donsum/manifold_file.hpp"
#include "probe_expr.hpp"

namespace donsum::cli {

namespace {

using nlohmann::json;

int verbosity() {
  const char* v = std::getenv("DONSUM_VERBOSE");
  if (v == nullptr || *v == '\0') return 1;
  return std::atoi(v);
}

void machine_block(std::ostream& out, const json& doc) { out << "--- machine ---\n" << doc.dump() << "\n"; }

StructureSeries load_valid(const std::string& path) {
  StructureSeries s = load_manifold(path);
  require_valid(s);
  return s;
}

Probe to_probe(const std::vector<ProbeSpec>& specs, const ManifoldDescriptor& m) {
  Probe p;
  for (const ProbeSpec& t : specs) p.push_back({t.coeff, t.var, m.named(t.cls)});
  return p;
}

bool is_named_class(const ManifoldDescriptor& m, const std::string& name) {
  if (name == "sigma" || name == "w") return true;
  if (name == "dbar" || name == "D") return m.dbar.has_value();
  return m.classes.count(name) > 0;
}

// ------------------------------------------------------------------ eval

struct EvalArgs {
  std::string manifold;
  std::string expr;
  bool combined = false;
  unsigned x_power = 0;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const StructureSeries s = load_valid(a.manifold);
  const auto specs = parse_probe(a.expr, [&](const std::string& n) { return is_named_class(s.owner, n); });
  const Probe alpha = to_probe(specs, s.owner);
  ExpElement value;
  if (a.combined) {
    value = dx_eval(s, alpha, a.x_power);
  } else {
    if (a.x_power % 2 == 1) throw Error(Errc::InvalidArgument, "odd point-class powers need --combined");
    value = dd_eval(s, alpha).scaled(GaussRat(4).pow(static_cast<long>(a.x_power / 2)));
  }
  if (verbosity() >= 1) out << value.str() << "\n";
  machine_block(out, json{{"command", "eval"},
                          {"manifold", s.owner.name},
                          {"probe", a.expr},
                          {"combined", a.combined},
                          {"x_power", a.x_power},
                          {"value", value.str()}});
  return kExitOk;
}

// ------------------------------------------------------------------ glue

struct GlueArgs {
  std::string m1;
  std::string m2;
  std::string probe;
  std::string out_path;
  bool one_to_one = false;
};

GluedProbe glued_probe(const std::string& text, const GlueInput& in) {
  const ManifoldDescriptor& m1 = in.side1.series.owner;
  const ManifoldDescriptor& m2 = in.side2.series.owner;
  auto side_class = [](const std::string& name, const char* prefix) -> std::optional<std::string> {
    const std::string p(prefix);
    if (name.rfind(p, 0) == 0) return name.substr(p.size());
    return std::nullopt;
  };
  auto is_class = [&](const std::string& n) {
    if (n == "sigma" || n == "D") return true;
    if (auto c = side_class(n, "m1.")) return is_named_class(m1, *c);
    if (auto c = side_class(n, "m2.")) return is_named_class(m2, *c);
    return false;
  };
  GluedProbe p;
  for (const ProbeSpec& t : parse_probe(text, is_class)) {
    if (t.cls == "sigma" || t.cls == "D") {
      if (!t.coeff.is_one()) throw Error(Errc::Parse, t.cls + " takes a unit coefficient in glued probes");
      auto& slot = t.cls == "sigma" ? p.s_var : p.d_var;
      if (slot) throw Error(Errc::Parse, t.cls + " appears twice");
      slot = t.var;
    } else if (auto c = side_class(t.cls, "m1.")) {
      p.alpha.push_back({t.coeff, t.var, m1.named(*c)});
    } else if (auto c2 = side_class(t.cls, "m2.")) {
      p.beta.push_back({t.coeff, t.var, m2.named(*c2)});
    }
  }
  return p;
}

int cmd_glue(const GlueArgs& a, std::ostream& out) {
  GlueSide s1{load_manifold(a.m1), std::nullopt};
  GlueSide s2{load_manifold(a.m2), std::nullopt};
  const GlueInput in = make_glue_input(std::move(s1), std::move(s2), a.one_to_one);
  const GlueReport report = sum_rules(in);
  std::optional<std::string> probe_value;
  if (!a.probe.empty()) probe_value = glued_eval(in, glued_probe(a.probe, in)).str();

  std::ofstream file(a.out_path);
  if (!file) throw Error(Errc::InvalidArgument, "cannot write " + a.out_path);
  file << report_json(report, probe_value);

  std::size_t nonzero = 0;
  for (const SumRule& r : report.rules) nonzero += r.sum.is_zero() ? 0 : 1;
  if (verbosity() >= 1) {
    const ComposedTopology& t = report.topology;
    out << in.side1.series.owner.name << " #_Sigma " << in.side2.series.owner.name << ": chi " << t.euler
        << ", signature " << t.signature << ", b+ " << t.b_plus << "\n";
    for (const SumRule& r : report.rules) {
      if (r.sum.is_zero() && verbosity() < 2) continue;
      out << "  " << rule_case_name(r.kind) << " rule, " << r.sources.size() << " source(s): sum " << r.sum.str()
          << "\n";
    }
    out << nonzero << " nonzero rule(s), " << report.rules.size() - nonzero << " zero rule(s)\n";
    if (probe_value) out << "probe: " << *probe_value << "\n";
    out << "report written to " << a.out_path << "\n";
  }
  json doc{{"command", "glue"},
           {"out", a.out_path},
           {"nonzero_rules", nonzero},
           {"rules", report.rules.size()},
           {"kappas", report.kappas.size()}};
  if (probe_value) doc["probe_value"] = *probe_value;
  machine_block(out, doc);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::vector<std::string> sections;
  std::string mu_x = "corrected";
  std::uint64_t seed = VerifyOptions{}.seed;
  unsigned instances = VerifyOptions{}.instances;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opts;
  static const std::map<std::string, MuXConvention> conventions{{"corrected", MuXConvention::Corrected},
                                                                {"printed", MuXConvention::Printed},
                                                                {"opposite", MuXConvention::OppositeSign}};
  opts.mu_x = conventions.at(a.mu_x);
  for (const std::string& s : a.sections) {
    if (s != "all") opts.sections.push_back(s);
  }
  opts.seed = a.seed;
  opts.instances = a.instances;
  const auto results = run_conformance(opts);
  std::size_t passed = 0;
  json checks = json::array();
  for (const CheckResult& r : results) {
    passed += r.passed ? 1 : 0;
    if (verbosity() >= 1) {
      out << (r.passed ? "PASS " : "FAIL ") << r.section << "/" << r.id << " [criterion " << r.criterion << "] "
          << r.description << "\n";
      if (!r.detail.empty() && (!r.passed || verbosity() >= 2)) out << "     " << r.detail << "\n";
    }
    checks.push_back(json{{"id", r.id}, {"section", r.section}, {"criterion", r.criterion}, {"passed", r.passed}});
  }
  const bool ok = passed == results.size();
  if (verbosity() >= 1) out << passed << "/" << results.size() << " checks passed\n";
  machine_block(out, json{{"command", "verify"}, {"passed", ok}, {"checks", checks}});
  return ok ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------- validate/predict

int cmd_validate(const std::string& path, std::ostream& out) {
  const StructureSeries s = load_manifold(path);
  const auto problems = validate(s);
  json list = json::array();
  for (const Violation& v : problems) {
    if (verbosity() >= 1) out << "violation [" << v.code << "] " << v.detail << "\n";
    list.push_back(json{{"code", v.code}, {"detail", v.detail}});
  }
  if (verbosity() >= 1 && problems.empty()) out << s.owner.name << ": valid\n";
  machine_block(out, json{{"command", "validate"}, {"valid", problems.empty()}, {"violations", list}});
  return problems.empty() ? kExitOk : kExitValidation;
}

int cmd_predict(long genus, std::ostream& out) {
  const Prediction p = predict_coefficient(genus);
  const std::string status = p.theorem ? "theorem" : "conjecture";
  if (verbosity() >= 1) out << "genus " << genus << ": +-" << p.value.get_str() << " (" << status << ")\n";
  machine_block(out, json{{"command", "predict"}, {"genus", genus}, {"value", p.value.get_str()}, {"status", status}});
  return kExitOk;
}

int cmd_format(const std::string& path, std::ostream& out) {
  out << serialize_manifold(load_manifold(path));
  return kExitOk;
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Parse:
      return kExitParse;
    case Errc::Validation:
    case Errc::GenusMismatch:
    case Errc::GenusUnsupported:
    case Errc::NotSimpleType:
      return kExitValidation;
    default:
      return kExitPrecondition;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Donaldson structure series and genus-2 fiber sums"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the structure series on a probe");
  eval_cmd->add_option("--manifold", eval.manifold, "Manifold description file")->required();
  eval_cmd->add_option("--class", eval.expr, "Probe, e.g. \"s*sigma + t*dbar\"")->required();
  eval_cmd->add_flag("--combined", eval.combined, "Evaluate D_X = D^w + D^{w+Sigma}");
  eval_cmd->add_option("--x-power", eval.x_power, "Power of the point class");

  GlueArgs glue;
  auto* glue_cmd = app.add_subcommand("glue", "Fiber sum of two manifolds along Sigma");
  glue_cmd->add_option("--m1", glue.m1, "First side")->required();
  glue_cmd->add_option("--m2", glue.m2, "Second side")->required();
  glue_cmd->add_option("--probe", glue.probe, "Probe over m1.X, m2.X, sigma and D");
  glue_cmd->add_option("--out", glue.out_path, "Report file")->required();
  glue_cmd->add_flag("--one-to-one", glue.one_to_one, "Every 1-cycle of Sigma bounds a (-1)-disc on both sides");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the conformance checks");
  std::vector<std::string> section_names = conformance_sections();
  section_names.push_back("all");
  verify_cmd->add_option("--section", verify.sections, "Section to run (repeatable)")
      ->check(CLI::IsMember(section_names));
  verify_cmd->add_option("--mu-x", verify.mu_x, "Point-class image used by the x-insertion check")
      ->check(CLI::IsMember({"corrected", "printed", "opposite"}));
  verify_cmd->add_option("--seed", verify.seed, "Seed for the random instances");
  verify_cmd->add_option("--instances", verify.instances, "Random instances per property check");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "List violated invariants of a manifold file");
  validate_cmd->add_option("--manifold", validate_path, "Manifold description file")->required();

  long genus = 2;
  auto* predict_cmd = app.add_subcommand("predict", "Predicted gluing coefficient 2^{7g-9}");
  predict_cmd->add_option("--genus", genus, "Genus of Sigma")->required();

  std::string format_path;
  auto* format_cmd = app.add_subcommand("format", "Print a manifold file in canonical form");
  format_cmd->add_option("--manifold", format_path, "Manifold description file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*glue_cmd) return cmd_glue(glue, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*validate_cmd) return cmd_validate(validate_path, out);
    if (*predict_cmd) return cmd_predict(genus, out);
    if (*format_cmd) return cmd_format(format_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitParse;
}

}  // namespace donsum::cli
