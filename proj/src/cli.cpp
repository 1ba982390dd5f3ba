#include "prooflab/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>
#include <ostream>

#include "prooflab/deduction.hpp"
#include "prooflab/error.hpp"
#include "prooflab/generators.hpp"
#include "prooflab/io.hpp"
#include "prooflab/module_algebra.hpp"
#include "prooflab/proof_tree.hpp"
#include "prooflab/sigma_prime.hpp"
#include "prooflab/subproof.hpp"

namespace prooflab::cli {
namespace {

namespace fs = std::filesystem;

class Session {
 public:
  Session(const RunConfig& config, std::ostream& out, std::ostream& err)
      : config_(config), out_(out), err_(err) {}

  // The premise set from --sigma, else fallback (a deduction's directive),
  // else empty. The witness always goes to the diagnostics stream.
  SigmaPrime load_sigma(const std::string& fallback = {}) const {
    std::vector<PropClass> base;
    const std::string& path = config_.sigma_path.empty() ? fallback : config_.sigma_path;
    if (!path.empty()) base = canonicalize_all(parse_sigma_text(read_file(path)), config_.atom_cap);
    SigmaPrime sp = lindenbaum_extend(std::move(base), config_.default_bit, config_.atom_cap);
    err_ << "witness: " << sp.witness().to_string() << '\n';
    return sp;
  }

  Deduction load_deduction(const std::string& path) const {
    const DeductionFile file = parse_deduction_text(read_file(path));
    std::string premises;
    if (file.premises) {
      fs::path p(*file.premises);
      premises = p.is_absolute() ? p.string() : (fs::path(path).parent_path() / p).string();
    }
    SigmaPrime sp = load_sigma(premises);
    return Deduction(canonicalize_all(file.steps, config_.atom_cap), std::move(sp));
  }

  DeductionLimits limits() const { return {config_.max_steps, config_.atom_cap}; }

  ProofNode load_proof(const std::string& path) const { return parse_proof_text(read_file(path)); }

  PropClass parse_class(const std::string& text) const {
    return canonicalize(parse(text), config_.atom_cap);
  }

  void emit_proof(const ProofNode& r, const std::string& output) const {
    const std::string text =
        config_.format == OutputFormat::Pretty ? pretty_print(r) : write_proof_text(r);
    if (output.empty()) {
      out_ << text;
    } else {
      write_file(output, text);
    }
  }

  const RunConfig& config() const { return config_; }
  std::ostream& out() const { return out_; }
  std::ostream& err() const { return err_; }

 private:
  const RunConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
};

std::optional<ProofPath> optional_path(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return ProofPath::parse(text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Lindenbaum-algebra deductions, proof trees and the module of proofs", "prooflab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::map<std::string, OutputFormat> formats{{"canonical", OutputFormat::Canonical},
                                              {"pretty", OutputFormat::Pretty}};
  int default_bit = 0;
  app.add_option("--sigma", config.sigma_path, "Premise-set file (one formula per line)");
  app.add_option("--default-bit", default_bit, "Bit for atoms outside the premises")
      ->check(CLI::Range(0, 1));
  app.add_option("--max-steps", config.max_steps, "Cap on earlier steps in subset enumeration")
      ->envname("PROOFLAB_MAX_STEPS")
      ->check(CLI::Range(std::size_t{1}, std::size_t{62}));
  app.add_option("--atom-cap", config.atom_cap, "Cap on atoms in one truth table")
      ->check(CLI::Range(std::size_t{1}, std::size_t{24}));
  app.add_option("--format", config.format, "canonical|pretty")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--seed", config.seed, "Seed for sample generators");

  std::string formula, ded_path, proof_a, proof_b, output, scalar_text, report_path;
  std::string target, donor, sigma_class, single_path;
  std::size_t atoms = 2, samples = 40;

  auto* parse_cmd = app.add_subcommand("parse", "Canonical class of a formula");
  parse_cmd->add_option("formula", formula)->required();

  auto* check_cmd = app.add_subcommand("check", "Per-step justification of a deduction");
  check_cmd->add_option("deduction", ded_path)->required()->check(CLI::ExistingFile);

  auto* interpret_cmd = app.add_subcommand("interpret", "Induced interpretation of a deduction");
  interpret_cmd->add_option("deduction", ded_path)->required()->check(CLI::ExistingFile);

  auto* prove_cmd = app.add_subcommand("prove", "Proof tree of a deduction");
  prove_cmd->add_option("deduction", ded_path)->required()->check(CLI::ExistingFile);
  prove_cmd->add_option("-o,--output", output);

  auto* eq_cmd = app.add_subcommand("eq", "Compare two proofs");
  eq_cmd->add_option("a", proof_a)->required()->check(CLI::ExistingFile);
  eq_cmd->add_option("b", proof_b)->required()->check(CLI::ExistingFile);

  auto* add_cmd = app.add_subcommand("add", "Sum of two proofs");
  add_cmd->add_option("a", proof_a)->required()->check(CLI::ExistingFile);
  add_cmd->add_option("b", proof_b)->required()->check(CLI::ExistingFile);
  add_cmd->add_option("-o,--output", output);

  auto* smul_cmd = app.add_subcommand("smul", "Scalar product (formula or 'e') with a proof");
  smul_cmd->add_option("scalar", scalar_text)->required();
  smul_cmd->add_option("proof", proof_a)->required()->check(CLI::ExistingFile);
  smul_cmd->add_option("-o,--output", output);

  auto* axioms_cmd = app.add_subcommand("axioms", "Audit ring and module laws on samples");
  axioms_cmd->add_option("--atoms", atoms)->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  axioms_cmd->add_option("--samples", samples)->check(CLI::Range(std::size_t{1}, std::size_t{2000}));
  axioms_cmd->add_option("--report", report_path)->required();

  auto add_surgery = [&](const char* name, const char* help, bool with_donor) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--target", target)->required()->check(CLI::ExistingFile);
    if (with_donor) cmd->add_option("--donor", donor)->required()->check(CLI::ExistingFile);
    cmd->add_option("--sigma-class", sigma_class)->required();
    cmd->add_option("--single-path", single_path);
    cmd->add_option("-o,--output", output);
    return cmd;
  };
  auto* replace_cmd = add_surgery("replace", "Graft a donor's justification of a class", true);
  auto* extract_cmd = add_surgery("extract", "Subproof at a path (default: first occurrence)", false);
  auto* eliminate_cmd = add_surgery("eliminate", "Demote a class's subproofs to premises", false);
  auto* find_cmd = app.add_subcommand("find", "Paths to every node concluding a class");
  find_cmd->add_option("--target", target)->required()->check(CLI::ExistingFile);
  find_cmd->add_option("--sigma-class", sigma_class)->required();

  auto* rules_cmd = app.add_subcommand("rules", "Semantic check of the classical rule table");
  rules_cmd->add_option("--atoms", atoms)->check(CLI::Range(std::size_t{0}, std::size_t{3}));

  std::vector<const char*> argv{"prooflab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  config.default_bit = default_bit != 0;

  Session session(config, out, err);
  try {
    if (parse_cmd->parsed()) {
      const Formula f = parse(formula);
      const PropClass c = canonicalize(f, config.atom_cap);
      if (config.format == OutputFormat::Pretty) {
        out << "formula: " << render(f) << '\n'
            << "level: " << level(f) << '\n'
            << "class: " << c.text() << '\n'
            << "dnf: " << render(representative(c)) << '\n';
      } else {
        out << c.text() << '\n';
      }
    } else if (check_cmd->parsed()) {
      const Deduction d = session.load_deduction(ded_path);
      const DeductionReport report = check_deduction(d, session.limits());
      out << report.to_text(d);
      if (auto bad = report.first_invalid()) {
        throw Error(ErrorKind::InvalidDeduction, "step " + std::to_string(*bad) + " is not justified");
      }
    } else if (interpret_cmd->parsed()) {
      const Deduction d = session.load_deduction(ded_path);
      out << induce_interpretation(d, session.limits()).to_text();
    } else if (prove_cmd->parsed()) {
      const Deduction d = session.load_deduction(ded_path);
      const Interpretation phi = induce_interpretation(d, session.limits());
      session.emit_proof(build_proof(d, phi), output);
    } else if (eq_cmd->parsed()) {
      const ProofNode a = session.load_proof(proof_a);
      const ProofNode b = session.load_proof(proof_b);
      if (proof_eq(a, b)) {
        out << "equal " << digest(a).hex() << '\n';
      } else {
        out << "different " << digest(a).hex() << ' ' << digest(b).hex() << '\n';
      }
    } else if (add_cmd->parsed()) {
      const SigmaPrime sp = session.load_sigma();
      session.emit_proof(sum(session.load_proof(proof_a), session.load_proof(proof_b), sp), output);
    } else if (smul_cmd->parsed()) {
      const SigmaPrime sp = session.load_sigma();
      const Scalar s = scalar_text == "e" ? Scalar::one() : Scalar::of(session.parse_class(scalar_text));
      session.emit_proof(scalar_mul(s, session.load_proof(proof_a), sp), output);
    } else if (axioms_cmd->parsed()) {
      const SigmaPrime sp = session.load_sigma();
      const auto pool = atom_names(atoms);
      Rng rng(config.seed);
      std::vector<PropClass> classes;
      std::vector<ProofNode> proofs;
      std::vector<Scalar> scalars{Scalar::one()};
      for (std::size_t i = 0; i < samples; ++i) classes.push_back(random_member(rng, sp, pool));
      for (std::size_t i = 0; i < samples; ++i) proofs.push_back(random_proof(rng, sp, pool));
      const std::size_t scalar_count = std::clamp<std::size_t>(samples / 4, 1, 8);
      for (std::size_t i = 0; i < scalar_count; ++i) scalars.push_back(Scalar::of(random_member(rng, sp, pool)));

      const LawReport ring = check_ring_axioms(sp, classes);
      const LawReport module = check_module_axioms(sp, scalars, proofs);
      std::string text = "witness: " + sp.witness().to_string() + "\n";
      text += "seed: " + std::to_string(config.seed) + "\n\n[ring]\n" + ring.to_table();
      text += "\n[module]\n" + module.to_table();
      write_file(report_path, text);
      out << "ring violations: " << ring.violations() << '\n'
          << "module violations: " << module.violations() << '\n';
      for (const auto& tally : module.laws()) {
        if (tally.diagnostic) out << "diagnostic " << tally.law << ": " << tally.failed << '/' << tally.checked << " failed\n";
      }
    } else if (replace_cmd->parsed()) {
      const SigmaPrime sp = session.load_sigma();
      session.emit_proof(replace_subproof(session.load_proof(target), session.parse_class(sigma_class),
                                          session.load_proof(donor), sp, optional_path(single_path)),
                         output);
    } else if (extract_cmd->parsed()) {
      const ProofNode r = session.load_proof(target);
      const PropClass sigma = session.parse_class(sigma_class);
      ProofPath path;
      if (single_path.empty()) {
        const auto sites = find_occurrences(r, sigma);
        if (sites.empty()) throw Error(ErrorKind::NotFound, sigma.text() + " does not occur in the proof");
        path = sites.front();
      } else {
        path = ProofPath::parse(single_path);
      }
      const ProofNode sub = extract_subproof(r, path);
      if (!(sub.conclusion() == sigma)) {
        throw Error(ErrorKind::BadPath, "path " + path.text() + " does not end at " + sigma.text());
      }
      err << "path: " << path.text() << '\n';
      session.emit_proof(sub, output);
    } else if (eliminate_cmd->parsed()) {
      session.emit_proof(eliminate_subproof(session.load_proof(target), session.parse_class(sigma_class),
                                            optional_path(single_path)),
                         output);
    } else if (find_cmd->parsed()) {
      for (const auto& path : find_occurrences(session.load_proof(target), session.parse_class(sigma_class))) {
        out << path.text() << '\n';
      }
    } else if (rules_cmd->parsed()) {
      const LawReport report = classical_rules_report(atoms);
      out << report.to_table();
      if (!report.ok()) throw Error(ErrorKind::InvalidDeduction, "a classical rule failed");
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.detail() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace prooflab::cli
