#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mpga/script/eval.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitEval = 3;
constexpr int kExitIo = 4;

mpga::Space parse_space(const std::string& name) {
  if (name == "m2" || name == "M2") return mpga::Space::M2;
  if (name == "m3" || name == "M3") return mpga::Space::M3;
  if (name == "m4" || name == "M4") return mpga::Space::M4;
  throw CLI::ValidationError("--space", "expected one of m2, m3, m4");
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

struct Options {
  std::string space = "m2";
  std::string script_path;
  double tol = 1e-9;
};

int run_script(const Options& opt, mpga::script::Evaluator& evaluator) {
  std::string text;
  if (!read_file(opt.script_path, text)) {
    std::cerr << "error: cannot read '" << opt.script_path << "'\n";
    return kExitIo;
  }
  try {
    mpga::script::Script script =
        mpga::script::parse(text, evaluator.space());
    evaluator.run(script);
  } catch (const mpga::script::ParseError& err) {
    std::cerr << opt.script_path << ":" << err.line() << ":" << err.col()
              << ": " << mpga::script::diag_code_name(err.code())
              << " error: " << err.what() << "\n";
    return kExitParse;
  } catch (const mpga::script::EvalError& err) {
    std::cerr << opt.script_path << ":" << err.line() << ":" << err.col()
              << ": evaluation error: " << err.what() << "\n";
    return kExitEval;
  } catch (const mpga::Error& err) {
    std::cerr << opt.script_path << ": evaluation error: " << err.what()
              << "\n";
    return kExitEval;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minkowski projective geometric algebra calculator"};
  app.require_subcommand(1);

  Options opt;
  std::string generator, entity, out_path;
  double theta_from = 0.0, theta_to = 1.0;
  int steps = 2;

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a script and print its output");
  eval_cmd->add_option("--space", opt.space, "m2, m3, or m4")->required();
  eval_cmd->add_option("--tol", opt.tol, "classification tolerance");
  eval_cmd->add_option("script", opt.script_path, "script file (.mpga)")
      ->required();

  CLI::App* orbit_cmd = app.add_subcommand(
      "orbit", "evaluate a script, then sample an orbit into a CSV file");
  orbit_cmd->add_option("--space", opt.space, "m2, m3, or m4")->required();
  orbit_cmd->add_option("--tol", opt.tol, "classification tolerance");
  orbit_cmd->add_option("--generator", generator, "bound bivector name")
      ->required();
  orbit_cmd->add_option("--entity", entity, "bound point name")->required();
  orbit_cmd->add_option("--from", theta_from, "first theta")->required();
  orbit_cmd->add_option("--to", theta_to, "last theta")->required();
  orbit_cmd->add_option("--steps", steps, "number of samples (>= 2)")
      ->required();
  orbit_cmd->add_option("--out", out_path, "output CSV path")->required();
  orbit_cmd->add_option("script", opt.script_path, "script file (.mpga)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kExitOk : kExitParse;
  }

  mpga::Space space;
  try {
    space = parse_space(opt.space);
  } catch (const CLI::ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitParse;
  }

  mpga::script::Evaluator evaluator(space, mpga::Tolerance{opt.tol, 1e-12});
  const int rc = run_script(opt, evaluator);
  if (rc != kExitOk) return rc;
  std::fputs(evaluator.output().c_str(), stdout);

  if (app.got_subcommand(orbit_cmd)) {
    std::string csv;
    try {
      csv = mpga::script::emit_orbit(evaluator, generator, entity, theta_from,
                                     theta_to, steps);
    } catch (const mpga::Error& err) {
      std::cerr << "evaluation error: " << err.what() << "\n";
      return kExitEval;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitIo;
    }
    out << csv << "\n";
    if (!out.good()) {
      std::cerr << "error: failed writing '" << out_path << "'\n";
      return kExitIo;
    }
  }
  return kExitOk;
}
