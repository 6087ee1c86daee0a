#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsw/commands.hpp"
#include "rsw/config.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotating shallow water solver (fully well-balanced Godunov-type scheme)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string run_out;
  auto* run = app.add_subcommand("run", "Run a key=value configuration file");
  run->add_option("config", config_path, "Configuration file")->required();
  run->add_option("--out", run_out, "Output directory (overrides out_dir)");

  std::string case_name;
  int order = 1;
  std::vector<int> resolutions;
  std::string conv_out = ".";
  auto* converge = app.add_subcommand("converge", "Error table over doubling resolutions");
  converge->add_option("case", case_name, "Case name")->required();
  converge->add_option("order", order, "Scheme order (1 or 2)")->required();
  converge->add_option("resolutions", resolutions, "Comma-separated cell counts")
      ->required()
      ->delimiter(',');
  converge->add_option("--out", conv_out, "Output directory");

  app.add_subcommand("cases", "List the built-in cases");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      rsw::RunConfig config = rsw::parse_config(read_file(config_path));
      if (!run_out.empty()) config.out_dir = run_out;
      rsw::run_command(config, std::cout);
    } else if (*converge) {
      const auto path = rsw::convergence_command(case_name, order, resolutions, conv_out, std::cout);
      std::cout << "wrote " << path.string() << '\n';
    } else {
      rsw::list_cases(std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
