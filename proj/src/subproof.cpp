#include "prooflab/subproof.hpp"

#include <algorithm>

#include "prooflab/error.hpp"

namespace prooflab {

std::string ProofPath::text(std::size_t prefix) const {
  if (steps.empty()) return "/";
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += '/';
    out += steps[i].substr(0, prefix);
  }
  return out;
}

ProofPath ProofPath::parse(std::string_view text) {
  ProofPath path;
  while (!text.empty() && text.front() == '/') text.remove_prefix(1);
  while (!text.empty()) {
    const std::size_t slash = text.find('/');
    std::string step(text.substr(0, slash));
    if (step.empty() || !std::all_of(step.begin(), step.end(), [](char c) {
          return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
        })) {
      throw Error(ErrorKind::BadPath, "path steps must be hex digest prefixes");
    }
    path.steps.push_back(std::move(step));
    if (slash == std::string_view::npos) break;
    text.remove_prefix(slash + 1);
  }
  return path;
}

namespace {

void collect(const ProofNode& node, const PropClass& sigma, ProofPath& current,
             std::vector<ProofPath>& out) {
  if (node.conclusion() == sigma) out.push_back(current);
  for (const auto& child : node.children()) {
    current.steps.push_back(digest(child).hex());
    collect(child, sigma, current, out);
    current.steps.pop_back();
  }
}

std::size_t resolve_child(const ProofNode& node, const std::string& step) {
  std::size_t found = node.children().size();
  for (std::size_t i = 0; i < node.children().size(); ++i) {
    if (digest(node.children()[i]).hex().starts_with(step)) {
      if (found != node.children().size()) {
        throw Error(ErrorKind::BadPath, "path step '" + step + "' is ambiguous");
      }
      found = i;
    }
  }
  if (found == node.children().size()) {
    throw Error(ErrorKind::BadPath, "path step '" + step + "' matches no child");
  }
  return found;
}

ProofNode rewrite_all(const ProofNode& node, const PropClass& sigma, const Justification& just) {
  if (node.conclusion() == sigma) return ProofNode(sigma, just);
  if (node.is_premise()) return node;
  std::vector<ProofNode> children;
  for (const auto& child : node.children()) children.push_back(rewrite_all(child, sigma, just));
  return ProofNode::derived(node.conclusion(), std::move(children));
}

ProofNode rewrite_at(const ProofNode& node, const ProofPath& path, std::size_t depth,
                     const Justification& just) {
  if (depth == path.steps.size()) return ProofNode(node.conclusion(), just);
  const std::size_t target = resolve_child(node, path.steps[depth]);
  std::vector<ProofNode> children(node.children().begin(), node.children().end());
  children[target] = rewrite_at(children[target], path, depth + 1, just);
  return ProofNode::derived(node.conclusion(), std::move(children));
}

ProofNode rewrite(const ProofNode& r, const PropClass& sigma, const Justification& just,
                  const std::optional<ProofPath>& single_path) {
  if (find_occurrences(r, sigma).empty()) {
    throw Error(ErrorKind::NotFound, sigma.text() + " does not occur in the target proof");
  }
  if (!single_path) return normalize(rewrite_all(r, sigma, just));
  if (!(extract_subproof(r, *single_path).conclusion() == sigma)) {
    throw Error(ErrorKind::BadPath, "path " + single_path->text() + " does not end at " + sigma.text());
  }
  return normalize(rewrite_at(r, *single_path, 0, just));
}

}  // namespace

std::vector<ProofPath> find_occurrences(const ProofNode& r, const PropClass& sigma) {
  std::vector<ProofPath> out;
  ProofPath current;
  collect(r, sigma, current, out);
  std::stable_sort(out.begin(), out.end(), [](const ProofPath& a, const ProofPath& b) {
    if (a.depth() != b.depth()) return a.depth() < b.depth();
    return a.steps < b.steps;
  });
  return out;
}

ProofNode extract_subproof(const ProofNode& r, const ProofPath& path) {
  ProofNode node = r;
  for (const auto& step : path.steps) node = node.children()[resolve_child(node, step)];
  return node;
}

ProofNode replace_subproof(const ProofNode& target, const PropClass& sigma, const ProofNode& donor,
                           const SigmaPrime& sp, const std::optional<ProofPath>& single_path) {
  const auto donor_sites = find_occurrences(donor, sigma);
  if (donor_sites.empty()) {
    throw Error(ErrorKind::NotFound, sigma.text() + " does not occur in the donor proof");
  }
  for (const auto& c : conclusions(donor)) {
    if (!sp.contains(c)) {
      throw Error(ErrorKind::NotMember, "donor conclusion " + c.text() + " is not in the extension");
    }
  }
  for (const auto& site : donor_sites) {
    ProofNode candidate = extract_subproof(donor, site);
    if (!candidate.is_premise()) return rewrite(target, sigma, candidate.justification(), single_path);
  }
  throw Error(ErrorKind::PremiseDonor,
              "every occurrence of " + sigma.text() + " in the donor is a bare premise");
}

ProofNode eliminate_subproof(const ProofNode& r, const PropClass& sigma,
                             const std::optional<ProofPath>& single_path) {
  return rewrite(r, sigma, Justification::premise(), single_path);
}

}  // namespace prooflab
