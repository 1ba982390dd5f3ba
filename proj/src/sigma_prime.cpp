#include "prooflab/sigma_prime.hpp"

#include <algorithm>
#include <stdexcept>

#include "prooflab/error.hpp"
#include "truth_table.hpp"

namespace prooflab {

SigmaPrime lindenbaum_extend(std::vector<PropClass> sigma, bool default_bit,
                             std::size_t atom_cap) {
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());

  std::vector<std::string> universe;
  for (const auto& c : sigma) universe = detail::merge_support(universe, c.support());
  detail::check_atom_cap(universe.size(), atom_cap);

  detail::PackedTable conj(universe.size(), true);
  for (const auto& c : sigma) conj &= detail::expand(c, universe);

  // Binary counting with the first atom most significant is exactly the
  // lexicographic order on assignments.
  const std::size_t n = universe.size();
  for (std::size_t row = 0; row < conj.size(); ++row) {
    if (!conj.get(row)) continue;
    Valuation witness(default_bit);
    for (std::size_t k = 0; k < n; ++k) witness.set(universe[k], (row >> (n - 1 - k)) & 1u);
    return SigmaPrime(std::move(sigma), std::move(witness));
  }
  std::string detail = "no valuation satisfies the premises {";
  for (std::size_t i = 0; i < sigma.size(); ++i) detail += (i ? "," : "") + sigma[i].text();
  throw Error(ErrorKind::Inconsistent, detail + "}");
}

bool member(const SigmaPrime& sp, const PropClass& c) { return sp.contains(c); }

namespace {

void require_member(const SigmaPrime& sp, const PropClass& c) {
  if (!sp.contains(c)) {
    throw Error(ErrorKind::NotMember, c.text() + " is not in the extension (witness " +
                                          sp.witness().to_string() + ")");
  }
}

std::string instance(std::initializer_list<const PropClass*> items) {
  std::string out;
  for (const PropClass* c : items) {
    if (!out.empty()) out += ' ';
    out += c->text();
  }
  return out;
}

}  // namespace

PropClass ring_add(const SigmaPrime& sp, const PropClass& a, const PropClass& b) {
  require_member(sp, a);
  require_member(sp, b);
  return class_iff(a, b);
}

PropClass ring_mul(const SigmaPrime& sp, const PropClass& a, const PropClass& b) {
  require_member(sp, a);
  require_member(sp, b);
  return class_or(a, b);
}

const PropClass& Scalar::value() const {
  if (is_one_) throw std::logic_error("Scalar::value on the formal identity");
  return value_;
}

std::string Scalar::text() const { return is_one_ ? "e" : value_.text(); }

Scalar scalar_product(const Scalar& a, const Scalar& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return Scalar::of(class_or(a.value(), b.value()));
}

PropClass scalar_or(const SigmaPrime& sp, const Scalar& s, const PropClass& c) {
  require_member(sp, c);
  if (s.is_one()) return c;
  require_member(sp, s.value());
  return class_or(s.value(), c);
}

RingOps standard_ring_ops() {
  return RingOps{
      [](const PropClass& a, const PropClass& b) { return class_iff(a, b); },
      [](const PropClass& a, const PropClass& b) { return class_or(a, b); },
  };
}

LawReport check_ring_laws(std::span<const PropClass> elements, const RingOps& ops,
                          const SigmaPrime* closure_context) {
  LawReport report;
  auto& add_comm = report.law("add commutative");
  auto& add_assoc = report.law("add associative");
  auto& add_neutral = report.law("add neutral (tautology)");
  auto& add_inverse = report.law("add self-inverse");
  auto& mul_comm = report.law("mul commutative");
  auto& mul_assoc = report.law("mul associative");
  auto& mul_idem = report.law("mul idempotent");
  auto& distrib = report.law("mul distributes over add");
  LawTally* add_closed = closure_context ? &report.law("add closure") : nullptr;
  LawTally* mul_closed = closure_context ? &report.law("mul closure") : nullptr;

  const PropClass top = PropClass::tautology();
  for (const auto& a : elements) {
    add_neutral.record(ops.add(a, top) == a, instance({&a}));
    add_inverse.record(ops.add(a, a) == top, instance({&a}));
    mul_idem.record(ops.mul(a, a) == a, instance({&a}));
    for (const auto& b : elements) {
      const PropClass ab_add = ops.add(a, b);
      const PropClass ab_mul = ops.mul(a, b);
      add_comm.record(ab_add == ops.add(b, a), instance({&a, &b}));
      mul_comm.record(ab_mul == ops.mul(b, a), instance({&a, &b}));
      if (closure_context) {
        add_closed->record(closure_context->contains(ab_add), instance({&a, &b}));
        mul_closed->record(closure_context->contains(ab_mul), instance({&a, &b}));
      }
      for (const auto& c : elements) {
        add_assoc.record(ops.add(ab_add, c) == ops.add(a, ops.add(b, c)), instance({&a, &b, &c}));
        mul_assoc.record(ops.mul(ab_mul, c) == ops.mul(a, ops.mul(b, c)), instance({&a, &b, &c}));
        distrib.record(ops.mul(a, ops.add(b, c)) == ops.add(ab_mul, ops.mul(a, c)),
                       instance({&a, &b, &c}));
      }
    }
  }
  return report;
}

LawReport check_ring_axioms(const SigmaPrime& sp, std::span<const PropClass> elements) {
  for (const auto& c : elements) require_member(sp, c);
  return check_ring_laws(elements, standard_ring_ops(), &sp);
}

}  // namespace prooflab
