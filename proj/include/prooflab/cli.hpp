#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "prooflab/prop_class.hpp"

namespace prooflab::cli {

enum class OutputFormat { Canonical, Pretty };

struct RunConfig {
  std::string sigma_path;
  bool default_bit = false;
  std::size_t max_steps = 20;
  std::size_t atom_cap = kDefaultAtomCap;
  OutputFormat format = OutputFormat::Canonical;
  std::uint64_t seed = 1;
};

// Runs one command. args excludes the program name. Returns 0 on success,
// 1 on a domain error (after printing "error: <Kind>: <detail>" to err),
// 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prooflab::cli
