#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spiralcert/geometry.hpp"
#include "spiralcert/phase.hpp"

namespace spiralcert::cli {

// Parsed command-line state; one subcommand per invocation.
struct RunConfig {
  std::string subcommand;
  std::string family = "sqrt";
  std::string alpha_spec = "1";
  double alpha = 1.0;
  double beta = 0.5;
  std::vector<double> custom_values;
  std::int64_t n_max = 10000;
  double r_max = 100.0;
  double radius = 10.0;  // window inner radius (window/gaps)
  double width = 1.0;    // window width h
  double eps = 0.05;
  std::vector<double> s_values;
  std::vector<double> bins;
  SectorSpec sector{0.0, 0.25, 0.0, 100.0};
  bool annuli = false;
  bool include_squares = false;
  std::string stat_kind = "hist";
  double marker = 0.25;
  std::string format;  // csv | json | svg; default depends on the subcommand
  std::string out;     // empty = stdout
};

PhaseFamily family_from(const RunConfig& config);

// Canonical textual form of alpha: named constants stay by name, literals
// re-serialize with 17 significant digits, so parse(serialize(x)) == x
// bit for bit.
std::string serialize_alpha(double alpha, const std::string& alpha_spec);

// Exit status: 0 success, 2 usage/validation error, 1 internal error.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace spiralcert::cli
