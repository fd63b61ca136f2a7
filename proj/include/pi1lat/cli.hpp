#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "pi1lat/homspace.hpp"

// The run driver behind the command-line tool. Exit codes:
//   0  success
//   1  the input file could not be parsed or is invalid
//   2  a requested computation lacks an asserted hypothesis or needed data
//   3  internal consistency failure (two routes that must agree did not)

namespace pi1lat::cli {

enum class Format { text, json };

struct RunRequest {
  std::string input_path;
  ComputeSelection compute;  // must select at least one computation
  Format format = Format::text;
  bool force_oracle = false;
  std::optional<Int> p_override;
  int verbosity = 0;
};

// Parses "pi1,pi0,..." into a selection; throws std::invalid_argument on an
// unknown token.
ComputeSelection parse_compute_list(const std::string& list);

std::string render_text(const Pi1Report& report, const HomSpaceInput& input,
                        const RunRequest& request);
std::string render_json(const Pi1Report& report, const HomSpaceInput& input,
                        const RunRequest& request);

int run(const RunRequest& request, std::ostream& out, std::ostream& err);

}  // namespace pi1lat::cli
