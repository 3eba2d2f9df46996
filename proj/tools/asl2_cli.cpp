// Command-line front end for the asl2 toolkit. All functionality is reached
// through the shared-library C API (asl2.h); this file only parses flags,
// forwards them and prints the returned report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "asl2.h"

namespace {

struct Common {
  std::string output = "text";
  long seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--output", common.output, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", common.seed,
                  "seed echoed into the report (checks are exhaustive and "
                  "deterministic)")
      ->each([&common](const std::string&) { common.seed_set = true; });
}

// Prints the report and maps it to the process exit status:
// 0 when every check passed, 1 otherwise.
int finish(asl2_status status, asl2_report* report, const Common& common) {
  if (status != ASL2_OK) {
    std::cerr << "error: " << asl2_last_error() << "\n";
    return 2;
  }
  if (common.output == "json")
    std::cout << asl2_report_json(report);
  else
    std::cout << asl2_report_text(report);
  int ok = asl2_report_pass(report);
  asl2_report_free(report);
  return ok ? 0 : 1;
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks and builders for asl2 representations"};
  app.require_subcommand(1);

  Common common;

  // axioms
  auto* axioms = app.add_subcommand(
      "axioms", "verify the six defining axioms of a graded algebra");
  std::string axioms_input;
  bool axioms_complex = false;
  axioms->add_option("--input", axioms_input,
                     "structure-constants JSON file (default: builtin asl2)");
  axioms->add_flag("--complex", axioms_complex, "use Q(i) coefficients");
  add_common(axioms, common);

  // rep-check
  auto* repcheck = app.add_subcommand(
      "rep-check", "run every identity suite on a chain module window");
  std::string rc_weight, rc_window;
  int rc_margin = 8;
  bool rc_generic = false;
  repcheck->add_option("--weight", rc_weight, "weight, e.g. 0, 7/3, 2+i")
      ->required();
  repcheck->add_option("--window", rc_window, "index window a:b");
  repcheck->add_option("--margin", rc_margin,
                       "interior margin (suites enforce their own minimum)");
  repcheck->add_flag("--generic", rc_generic,
                     "build the generic chain even at odd integer weights");
  add_common(repcheck, common);

  // weights
  auto* weights = app.add_subcommand(
      "weights", "render the chain diagram and weight table");
  std::string w_weight, w_window;
  bool w_generic = false;
  weights->add_option("--weight", w_weight, "weight")->required();
  weights->add_option("--window", w_window, "index window a:b");
  weights->add_flag("--generic", w_generic,
                    "build the generic chain even at odd integer weights");
  add_common(weights, common);

  // casimir
  auto* casimir = app.add_subcommand(
      "casimir", "check the Casimir-type identities on a chain module");
  std::string c_weight, c_window;
  int c_margin = 8;
  casimir->add_option("--weight", c_weight, "weight")->required();
  casimir->add_option("--window", c_window, "index window a:b");
  casimir->add_option("--margin", c_margin, "interior margin (>= 8)");
  add_common(casimir, common);

  // classify
  auto* classify = app.add_subcommand(
      "classify", "canonical parameter of the isomorphism class");
  std::string cl_weight;
  classify->add_option("--weight", cl_weight, "weight")->required();
  add_common(classify, common);

  // iso
  auto* iso = app.add_subcommand(
      "iso", "equivariant chain map between two weights, or the obstruction");
  std::string i_from, i_to, i_window;
  iso->add_option("--from", i_from, "source weight")->required();
  iso->add_option("--to", i_to, "target weight")->required();
  iso->add_option("--window", i_window, "source index window a:b");
  add_common(iso, common);

  // nogo
  auto* nogo = app.add_subcommand(
      "nogo", "scan the finite-dimension obstruction equation");
  long n_max = 100, n_rhs = 0;
  nogo->add_option("--max", n_max, "upper bound for N and M");
  nogo->add_option("--rhs", n_rhs, "right-hand side (default 0)");
  add_common(nogo, common);

  // geom
  auto* geom = app.add_subcommand(
      "geom", "identity suites for the differential-operator realization");
  std::string g_lambda, g_kwindow;
  long g_window = 12;
  bool g_intertwine = false;
  geom->add_option("--lambda", g_lambda, "exponent of the generator x^lambda xi")
      ->required();
  geom->add_option("--window", g_window, "degree window (>= 8)");
  geom->add_flag("--intertwine", g_intertwine,
                 "match the generated module against a chain window");
  geom->add_option("--kwindow", g_kwindow,
                   "chain window a:b for --intertwine (default -8:8)");
  add_common(geom, common);

  // tensor
  auto* tensor = app.add_subcommand(
      "tensor", "deformed relation system on a tensor product");
  std::string t_left, t_right, t_lwindow, t_rwindow;
  int t_margin = 8;
  bool t_dump = false;
  tensor->add_option("--left", t_left, "left weight")->required();
  tensor->add_option("--right", t_right, "right weight")->required();
  tensor->add_option("--window-left", t_lwindow, "left index window a:b");
  tensor->add_option("--window-right", t_rwindow, "right index window a:b");
  tensor->add_option("--margin", t_margin, "per-factor interior margin (>= 8)");
  tensor->add_flag("--dump-residual", t_dump,
                   "attach the exact residual table of the deformed projector "
                   "relation");
  add_common(tensor, common);

  CLI11_PARSE(app, argc, argv);

  if (common.seed_set) asl2_set_seed(common.seed);

  asl2_report* report = nullptr;

  if (*axioms) {
    std::string json_text;
    if (!axioms_input.empty()) {
      std::ifstream in(axioms_input);
      if (!in) {
        std::cerr << "error: cannot read " << axioms_input << "\n";
        return 2;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      json_text = ss.str();
    }
    asl2_status st = asl2_axioms(opt(json_text), axioms_complex ? 1 : 0, &report);
    return finish(st, report, common);
  }
  if (*repcheck) {
    asl2_status st = asl2_rep_check(rc_weight.c_str(), opt(rc_window),
                                    rc_margin, rc_generic ? 1 : 0, &report);
    return finish(st, report, common);
  }
  if (*weights) {
    asl2_status st = asl2_weights(w_weight.c_str(), opt(w_window),
                                  w_generic ? 1 : 0, &report);
    return finish(st, report, common);
  }
  if (*casimir) {
    asl2_status st =
        asl2_casimir_check(c_weight.c_str(), opt(c_window), c_margin, &report);
    return finish(st, report, common);
  }
  if (*classify) {
    asl2_status st = asl2_classify(cl_weight.c_str(), &report);
    return finish(st, report, common);
  }
  if (*iso) {
    asl2_status st =
        asl2_isomorphism(i_from.c_str(), i_to.c_str(), opt(i_window), &report);
    return finish(st, report, common);
  }
  if (*nogo) {
    asl2_status st = asl2_nogo(n_max, n_rhs, &report);
    return finish(st, report, common);
  }
  if (*geom) {
    asl2_status st = asl2_geom_check(g_lambda.c_str(), g_window,
                                     g_intertwine ? 1 : 0, opt(g_kwindow),
                                     &report);
    return finish(st, report, common);
  }
  if (*tensor) {
    asl2_status st = asl2_tensor_check(t_left.c_str(), t_right.c_str(),
                                       opt(t_lwindow), opt(t_rwindow),
                                       t_margin, t_dump ? 1 : 0, &report);
    return finish(st, report, common);
  }

  return 2;
}
