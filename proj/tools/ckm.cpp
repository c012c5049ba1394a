#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ckm/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Classification of highest-weight modules over current algebras"};
  app.require_subcommand(1);

  std::string classify_path;
  int classify_depth = 0;
  int json_indent = 2;
  auto* classify = app.add_subcommand(
      "classify", "Classify the module described by a JSON problem file");
  classify->add_option("file", classify_path, "problem file")->required();
  auto* classify_depth_opt =
      classify
          ->add_option("--depth", classify_depth,
                       "character box depth (overrides the problem file)")
          ->check(CLI::NonNegativeNumber);
  classify->add_option("--json-indent", json_indent, "report indentation")
      ->check(CLI::Range(0, 8));

  std::string verify_path;
  int verify_depth = 0;
  int verify_max_power = 0;
  auto* verify = app.add_subcommand(
      "verify", "Classify, then cross-check in the explicit matrix model");
  verify->add_option("file", verify_path, "problem file")->required();
  auto* verify_depth_opt =
      verify
          ->add_option("--depth", verify_depth,
                       "character box depth (overrides the problem file)")
          ->check(CLI::NonNegativeNumber);
  auto* verify_max_power_opt =
      verify
          ->add_option("--max-power", verify_max_power,
                       "nilpotency probe bound (overrides the problem file)")
          ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  ckm::RunResult result;
  if (classify->parsed()) {
    ckm::RunOverrides ov;
    if (classify_depth_opt->count()) ov.depth = classify_depth;
    ov.json_indent = json_indent;
    result = ckm::run_classify_file(classify_path, ov);
  } else {
    ckm::RunOverrides ov;
    if (verify_depth_opt->count()) ov.depth = verify_depth;
    if (verify_max_power_opt->count()) ov.max_power = verify_max_power;
    result = ckm::run_verify_file(verify_path, ov);
  }
  std::cout << result.json;
  return result.exit_code;
}
