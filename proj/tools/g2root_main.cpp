// g2root: root numbers of genus-2 curves at 5 and the verification suites.
// Talks to the library exclusively through the C API.

#include "g2root/g2root.h"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kPartial = 3 };

struct Owned {
  char* s = nullptr;
  ~Owned() { g2r_string_free(s); }
};

using CurvePtr = std::unique_ptr<g2r_curve, decltype(&g2r_curve_free)>;
using OptionsPtr = std::unique_ptr<g2r_options, decltype(&g2r_options_free)>;

struct Failure {
  int code;
  std::string message;
};

void check(g2r_status s) {
  if (s == G2R_OK) return;
  int code = s == G2R_E_INTERNAL ? kVerifyFailed : kInputError;
  if (s == G2R_E_UNSUPPORTED || s == G2R_E_NORMALIZATION || s == G2R_E_NOT_WILD) code = kPartial;
  throw Failure{code, std::string(g2r_status_name(s)) + ": " + g2r_last_error()};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Failure{kInputError, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Failure{kInputError, "cannot write " + path};
  out << text << "\n";
}

void emit(const char* json, bool as_json) {
  if (as_json) {
    std::cout << json << "\n";
    return;
  }
  Owned text;
  check(g2r_render_text(json, &text.s));
  std::cout << text.s;
}

struct CurveArgs {
  std::string file;
  unsigned precision = 0;
  bool json = false;
};

void add_curve_args(CLI::App* cmd, CurveArgs& a) {
  cmd->add_option("--curve", a.file, "Curve JSON file ({\"P\": [\"c0\", ...]}), - for stdin")->required();
  cmd->add_option("--precision", a.precision, "5-adic digits for root finding (overrides GENUS2_PRECISION)");
  cmd->add_flag("--json", a.json, "Print JSON instead of text");
}

std::pair<CurvePtr, OptionsPtr> load(const CurveArgs& a) {
  g2r_options* o = nullptr;
  check(g2r_options_new(&o));
  OptionsPtr opts(o, g2r_options_free);
  if (a.precision) check(g2r_options_set_precision(opts.get(), a.precision));
  g2r_curve* c = nullptr;
  check(g2r_curve_from_json(read_input(a.file).c_str(), opts.get(), &c));
  return {CurvePtr(c, g2r_curve_free), std::move(opts)};
}

bool wild_not_detected(const char* json) {
  return std::string(json).find("\"not-detected\"") != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root numbers of genus-2 curves with maximal wild ramification at 5"};
  app.set_version_flag("--version", std::string(g2r_version()));
  app.require_subcommand(1);

  CurveArgs analyze_args;
  std::vector<std::string> assertions;
  std::string analyze_out;
  auto* analyze = app.add_subcommand("analyze", "Local and global root numbers");
  add_curve_args(analyze, analyze_args);
  analyze->add_option("--assert", assertions, "Asserted local root number, e.g. 2=+1");
  analyze->add_option("--out", analyze_out, "Write the JSON report to this file");

  std::string suite;
  long p = 5, max_conductor = 2;
  unsigned fmax = 4, unif_steps = 100, samples = 1000;
  std::uint64_t seed = 20240517;
  bool verify_json = false, verbose = false;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "traces | epsilon | symbols | discriminant")
      ->required()
      ->check(CLI::IsMember({"traces", "epsilon", "symbols", "discriminant"}));
  verify->add_option("--p", p, "Characteristic for the traces suite");
  verify->add_option("--fmax", fmax, "Largest Frobenius power in the traces suite");
  verify->add_option("--max-conductor", max_conductor, "Largest conductor exponent in the epsilon suite");
  verify->add_option("--unif-steps", unif_steps, "Values of chi(5) per unit character");
  verify->add_option("--samples", samples, "Random samples for symbols and discriminant");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_flag("--json", verify_json, "Print JSON instead of text");
  verify->add_flag("--verbose", verbose, "Include passing rows in the text output");
  verify->add_option("--out", verify_out, "Write the JSON table to this file");

  CurveArgs disc_args;
  auto* disc = app.add_subcommand("disc", "Discriminant of a curve");
  add_curve_args(disc, disc_args);

  auto* g2 = app.add_subcommand("g2", "Equation-level tools");
  g2->require_subcommand(1);
  CurveArgs g2_disc_args, g2_norm_args, g2_class_args;
  auto* g2_disc = g2->add_subcommand("disc", "Discriminant");
  add_curve_args(g2_disc, g2_disc_args);
  auto* g2_norm = g2->add_subcommand("normalize", "5-adic special form");
  add_curve_args(g2_norm, g2_norm_args);
  auto* g2_class = g2->add_subcommand("classify", "Inertia type and maximality at 5");
  add_curve_args(g2_class, g2_class_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) {
      auto [curve, opts] = load(analyze_args);
      for (const auto& a : assertions) check(g2r_options_add_assertion_text(opts.get(), a.c_str()));
      Owned json;
      int global = 0;
      check(g2r_analyze_json(curve.get(), opts.get(), &json.s, &global));
      if (!analyze_out.empty()) write_file(analyze_out, json.s);
      emit(json.s, analyze_args.json);
      return global == 0 ? kPartial : kOk;
    }
    if (*verify) {
      std::ostringstream params;
      params << "{\"p\":" << p << ",\"fmax\":" << fmax << ",\"max_conductor\":" << max_conductor
             << ",\"unif_steps\":" << unif_steps << ",\"samples\":" << samples << ",\"seed\":" << seed
             << ",\"verbose\":" << (verbose ? "true" : "false") << "}";
      Owned json;
      int passed = 0;
      check(g2r_verify_json(suite.c_str(), params.str().c_str(), &json.s, &passed));
      if (!verify_out.empty()) write_file(verify_out, json.s);
      emit(json.s, verify_json);
      return passed ? kOk : kVerifyFailed;
    }
    auto run_report = [](const CurveArgs& a, auto fn) {
      auto [curve, opts] = load(a);
      Owned json;
      check(fn(curve.get(), opts.get(), &json.s));
      emit(json.s, a.json);
      return wild_not_detected(json.s) ? kPartial : kOk;
    };
    auto disc_fn = [](const g2r_curve* c, const g2r_options*, char** out) { return g2r_disc_json(c, out); };
    if (*disc) return run_report(disc_args, disc_fn);
    if (*g2_disc) return run_report(g2_disc_args, disc_fn);
    if (*g2_norm) return run_report(g2_norm_args, g2r_normalize_json);
    if (*g2_class) return run_report(g2_class_args, g2r_classify_json);
  } catch (const Failure& f) {
    std::cerr << "g2root: " << f.message << "\n";
    return f.code;
  }
  return kInputError;
}
