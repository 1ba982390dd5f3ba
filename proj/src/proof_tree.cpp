#include "prooflab/proof_tree.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <openssl/evp.h>

#include "prooflab/error.hpp"

namespace prooflab {

Justification Justification::premise() {
  static const auto kMarker = std::make_shared<const std::string>("{0}");
  Justification j;
  j.text_ = kMarker;
  return j;
}

Justification Justification::of(std::vector<ProofNode> children) {
  if (children.empty()) throw std::invalid_argument("Justification::of needs at least one child");
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  std::string text = "{";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) text += ',';
    text += children[i].serialized();
  }
  text += '}';
  Justification j;
  j.children_ = std::make_shared<const std::vector<ProofNode>>(std::move(children));
  j.text_ = std::make_shared<const std::string>(std::move(text));
  return j;
}

std::span<const ProofNode> Justification::children() const noexcept {
  if (!children_) return {};
  return {children_->data(), children_->size()};
}

ProofNode::ProofNode(PropClass conclusion, Justification justification) {
  std::string text = "{" + conclusion.text() + "," + justification.text() + "}";
  impl_ = std::make_shared<const Impl>(
      Impl{std::move(conclusion), std::move(justification), std::move(text)});
}

std::string canonical_serialize(const ProofNode& r) { return r.serialized(); }

namespace {

class ProofParser {
 public:
  explicit ProofParser(std::string_view text) : text_(text) {}

  ProofNode run() {
    ProofNode node = parse_node();
    if (pos_ != text_.size()) fail("trailing characters");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, "proof: " + msg); }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  ProofNode parse_node() {
    if (++depth_ > 10000) fail("nesting too deep");
    expect('{');
    if (!peek('[')) fail("expected '['");
    const std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos) fail("unterminated class");
    PropClass conclusion = [&] {
      try {
        return PropClass::from_text(text_.substr(pos_, close - pos_ + 1));
      } catch (const SyntaxError& e) {
        throw SyntaxError(pos_ + e.position(), "proof: " + e.detail());
      }
    }();
    pos_ = close + 1;
    expect(',');
    expect('{');
    Justification just = Justification::premise();
    if (peek('0')) {
      ++pos_;
    } else {
      std::vector<ProofNode> children;
      children.push_back(parse_node());
      while (peek(',')) {
        ++pos_;
        children.push_back(parse_node());
      }
      just = Justification::of(std::move(children));
    }
    expect('}');
    expect('}');
    --depth_;
    return ProofNode(std::move(conclusion), std::move(just));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace

ProofNode parse_proof(std::string_view text) { return ProofParser(text).run(); }

ProofDigest ProofDigest::of(const ProofNode& r) {
  const std::string& bytes = r.serialized();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  ProofDigest d;
  d.hex_.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    d.hex_ += kHex[md[i] >> 4];
    d.hex_ += kHex[md[i] & 0xf];
  }
  return d;
}

ProofNode normalize(const ProofNode& r) {
  if (r.conclusion().is_tautology()) {
    return r.is_premise() ? r : ProofNode::premise(r.conclusion());
  }
  if (r.is_premise()) return r;
  std::vector<ProofNode> children;
  bool changed = false;
  for (const auto& child : r.children()) {
    children.push_back(normalize(child));
    changed = changed || !(children.back() == child);
  }
  if (!changed) return r;
  return ProofNode::derived(r.conclusion(), std::move(children));
}

ProofNode build_proof(const Deduction& d, const Interpretation& phi) {
  if (!validate_interpretation(d, phi)) {
    throw Error(ErrorKind::InvalidInterpretation, "interpretation does not justify the deduction");
  }
  // Index sets point strictly backwards, so a forward pass sees every
  // child before its parent.
  std::vector<std::optional<ProofNode>> built(d.size() + 1);
  for (std::size_t u = 1; u <= d.size(); ++u) {
    if (phi.is_premise(u)) {
      built[u] = ProofNode::premise(d.step(u));
      continue;
    }
    std::vector<ProofNode> children;
    for (auto h : phi.indices(u)) children.push_back(*built[h]);
    built[u] = ProofNode::derived(d.step(u), std::move(children));
  }
  return normalize(*built[d.size()]);
}

bool proof_eq(const ProofNode& a, const ProofNode& b) { return a == b; }

bool essentially_equal(const Deduction& d1, const Interpretation& phi1, const Deduction& d2,
                       const Interpretation& phi2) {
  return proof_eq(build_proof(d1, phi1), build_proof(d2, phi2));
}

namespace {

void collect_premises(const ProofNode& r, std::set<PropClass>& out) {
  if (r.is_premise()) {
    out.insert(r.conclusion());
    return;
  }
  for (const auto& child : r.children()) collect_premises(child, out);
}

void collect_conclusions(const ProofNode& r, std::vector<PropClass>& out) {
  out.push_back(r.conclusion());
  for (const auto& child : r.children()) collect_conclusions(child, out);
}

void pretty_into(const ProofNode& r, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += render(representative(r.conclusion()));
  if (r.is_premise()) out += "  [premise]";
  out += '\n';
  for (const auto& child : r.children()) pretty_into(child, depth + 1, out);
}

}  // namespace

std::set<PropClass> premises(const ProofNode& r) {
  std::set<PropClass> out;
  collect_premises(r, out);
  return out;
}

bool less_forced(const ProofNode& a, const ProofNode& b) {
  const auto pa = premises(a);
  const auto pb = premises(b);
  return pa.size() < pb.size() && std::includes(pb.begin(), pb.end(), pa.begin(), pa.end());
}

std::vector<PropClass> conclusions(const ProofNode& r) {
  std::vector<PropClass> out;
  collect_conclusions(r, out);
  return out;
}

std::string pretty_print(const ProofNode& r) {
  std::string out;
  pretty_into(r, 0, out);
  return out;
}

}  // namespace prooflab
