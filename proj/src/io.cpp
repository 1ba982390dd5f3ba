#include "prooflab/io.hpp"

#include <fstream>
#include <sstream>

#include "prooflab/error.hpp"

namespace prooflab {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Calls fn(line_number, trimmed_line) for every non-blank, non-comment line.
template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = trim(text.substr(0, end));
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    if (line.empty() || line.front() == '#') continue;
    fn(number, line);
  }
}

Formula parse_line(std::size_t number, std::string_view line) {
  try {
    return parse(line);
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.position(), "line " + std::to_string(number) + ": " + e.detail());
  }
}

}  // namespace

std::vector<Formula> parse_sigma_text(std::string_view text) {
  std::vector<Formula> out;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    out.push_back(parse_line(number, line));
  });
  return out;
}

DeductionFile parse_deduction_text(std::string_view text) {
  static constexpr std::string_view kDirective = "premises:";
  DeductionFile file;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    if (line.starts_with(kDirective)) {
      if (!file.steps.empty() || file.premises) {
        throw SyntaxError(0, "line " + std::to_string(number) +
                                 ": the premises directive must precede every step");
      }
      std::string_view path = trim(line.substr(kDirective.size()));
      if (path.empty()) throw SyntaxError(0, "line " + std::to_string(number) + ": empty premises path");
      file.premises = std::string(path);
      return;
    }
    file.steps.push_back(parse_line(number, line));
  });
  if (file.steps.empty()) throw SyntaxError(0, "deduction file has no steps");
  return file;
}

std::string write_proof_text(const ProofNode& r) {
  std::string out(kProofFormatLine);
  out += '\n';
  out += r.serialized();
  out += '\n';
  return out;
}

ProofNode parse_proof_text(std::string_view text) {
  const std::size_t newline = text.find('\n');
  if (newline == std::string_view::npos || trim(text.substr(0, newline)) != kProofFormatLine) {
    throw SyntaxError(0, "proof file must start with '" + std::string(kProofFormatLine) + "'");
  }
  return parse_proof(trim(text.substr(newline + 1)));
}

std::vector<PropClass> canonicalize_all(const std::vector<Formula>& formulas, std::size_t atom_cap) {
  std::vector<PropClass> out;
  out.reserve(formulas.size());
  for (const auto& f : formulas) out.push_back(canonicalize(f, atom_cap));
  return out;
}

}  // namespace prooflab
