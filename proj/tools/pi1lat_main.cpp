#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pi1lat/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "pi1lat: topological and prime-to-p etale fundamental-group invariants of "
      "homogeneous spaces, computed from character-lattice input"};

  std::string input_path;
  std::string compute = "pi1";
  std::string format = "text";
  std::string p_value;
  bool oracle = false;
  int verbosity = 0;

  app.add_option("--input", input_path, "path to the JSON input file")->required();
  app.add_option("--compute", compute,
                 "comma-separated subset of pi1,sequence,pi2,pi0,p_prime,oracle");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--oracle", oracle, "force the auxiliary-pipeline cross-check");
  app.add_option("--p", p_value,
                 "characteristic for the prime-to-p invariant (overrides char_p)");
  app.add_flag("-v,--verbose", verbosity, "more detail in text output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 1;
  }

  pi1lat::cli::RunRequest request;
  request.input_path = input_path;
  request.format = format == "json" ? pi1lat::cli::Format::json : pi1lat::cli::Format::text;
  request.force_oracle = oracle;
  request.verbosity = verbosity;
  try {
    request.compute = pi1lat::cli::parse_compute_list(compute);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (!p_value.empty()) {
    for (char c : p_value)
      if (c < '0' || c > '9') {
        std::cerr << "error: --p expects a non-negative integer\n";
        return 1;
      }
    request.p_override = pi1lat::Int(p_value, 10);
  }

  return pi1lat::cli::run(request, std::cout, std::cerr);
}
