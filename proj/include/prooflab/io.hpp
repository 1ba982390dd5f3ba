#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prooflab/formula.hpp"
#include "prooflab/proof_tree.hpp"
#include "prooflab/prop_class.hpp"

namespace prooflab {

inline constexpr std::string_view kProofFormatLine = "format: 1";

// Throws Io when the file cannot be read or written.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Premise-set file: one formula per line; blank lines and lines starting
// with '#' are ignored.
std::vector<Formula> parse_sigma_text(std::string_view text);

// Deduction file: one formula per step, in order. An optional first
// directive "premises: <file>" names a premise-set file.
struct DeductionFile {
  std::optional<std::string> premises;
  std::vector<Formula> steps;
};
DeductionFile parse_deduction_text(std::string_view text);

// "format: 1\n<canonical serialization>\n"
std::string write_proof_text(const ProofNode& r);
ProofNode parse_proof_text(std::string_view text);

std::vector<PropClass> canonicalize_all(const std::vector<Formula>& formulas,
                                        std::size_t atom_cap = kDefaultAtomCap);

}  // namespace prooflab
