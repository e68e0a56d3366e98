#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pftlab/bounds.hpp"
#include "pftlab/io.hpp"

namespace pftlab::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_usage = 2,
  exit_malformed_input = 3,
  exit_invalid_model = 4,
  exit_bound_exceeded = 5,
  exit_io = 6,
  exit_out_of_range = 7,
};

struct Outcome {
  int status = exit_ok;
  std::string out;
  std::string err;
};

/// Runs one command; `args` excludes the program name.
Outcome run(const std::vector<std::string>& args, const Bounds& bounds = Bounds::from_env());

/// Suite names accepted by sweep for each kind.
const std::vector<std::string>& poset_suites();
const std::vector<std::string>& topology_suites();

/// Runs `suite` over every poset iso-class of size n (kind "posets") or
/// every labelled topology on n points (kind "topologies").
io::Json sweep(const std::string& kind, std::size_t n, const std::string& suite, std::size_t jobs,
               const Bounds& bounds = {});

}  // namespace pftlab::cli
