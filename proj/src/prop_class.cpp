#include "prooflab/prop_class.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "prooflab/error.hpp"
#include "truth_table.hpp"

namespace prooflab {
namespace detail {

PackedTable::PackedTable(std::size_t atom_count, bool fill)
    : words_(((std::size_t{1} << atom_count) + 63) / 64, fill ? ~std::uint64_t{0} : 0),
      size_(std::size_t{1} << atom_count) {
  mask_tail();
}

PackedTable PackedTable::projection(std::size_t atom_count, std::size_t index) {
  PackedTable t(atom_count, false);
  const std::size_t shift = atom_count - 1 - index;
  for (std::size_t row = 0; row < t.size_; ++row) {
    if ((row >> shift) & 1u) t.set(row, true);
  }
  return t;
}

void PackedTable::set(std::size_t row, bool bit) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (row & 63);
  if (bit) {
    words_[row >> 6] |= mask;
  } else {
    words_[row >> 6] &= ~mask;
  }
}

PackedTable& PackedTable::operator&=(const PackedTable& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PackedTable& PackedTable::operator|=(const PackedTable& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

void PackedTable::flip() noexcept {
  for (auto& w : words_) w = ~w;
  mask_tail();
}

bool PackedTable::implies(const PackedTable& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool PackedTable::all() const noexcept {
  for (std::size_t row = 0; row < size_; ++row) {
    if (!get(row)) return false;
  }
  return true;
}

std::vector<bool> PackedTable::to_bits() const {
  std::vector<bool> bits(size_);
  for (std::size_t row = 0; row < size_; ++row) bits[row] = get(row);
  return bits;
}

void PackedTable::mask_tail() noexcept {
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

void check_atom_cap(std::size_t atom_count, std::size_t atom_cap) {
  if (atom_count > atom_cap) {
    throw Error(ErrorKind::ResourceLimit, "support of " + std::to_string(atom_count) +
                                              " atoms exceeds the cap of " +
                                              std::to_string(atom_cap));
  }
}

std::vector<std::string> merge_support(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PackedTable expand(const PropClass& c, const std::vector<std::string>& universe) {
  const std::size_t n = universe.size();
  const auto& support = c.support();
  const std::size_t m = support.size();
  // shifts[k]: bit position, within a universe row index, of support atom k.
  std::vector<std::size_t> shifts(m);
  std::size_t j = 0;
  for (std::size_t k = 0; k < m; ++k) {
    while (j < n && universe[j] != support[k]) ++j;
    if (j == n) throw std::logic_error("expand: universe is not a superset of the support");
    shifts[k] = n - 1 - j;
  }
  PackedTable out(n, false);
  const auto& table = c.table();
  for (std::size_t row = 0; row < out.size(); ++row) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < m; ++k) idx = (idx << 1) | ((row >> shifts[k]) & 1u);
    if (table[idx]) out.set(row, true);
  }
  return out;
}

namespace {

bool depends_on(const std::vector<bool>& table, std::size_t shift) {
  const std::size_t bit = std::size_t{1} << shift;
  for (std::size_t row = 0; row < table.size(); ++row) {
    if (!(row & bit) && table[row] != table[row | bit]) return true;
  }
  return false;
}

std::vector<bool> drop_position(const std::vector<bool>& table, std::size_t shift) {
  std::vector<bool> out(table.size() / 2);
  const std::size_t low_mask = (std::size_t{1} << shift) - 1;
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const std::size_t high = idx >> shift;
    out[idx] = table[(high << (shift + 1)) | (idx & low_mask)];
  }
  return out;
}

}  // namespace
}  // namespace detail

PropClass PropClass::constant(bool value) {
  PropClass c;
  c.table_ = {value};
  return c;
}

PropClass PropClass::atom(std::string name) {
  if (!is_atom_name(name)) throw SyntaxError(0, "invalid atom name '" + name + "'");
  PropClass c;
  c.support_ = {std::move(name)};
  c.table_ = {false, true};
  return c;
}

PropClass PropClass::from_table(std::vector<std::string> support, std::vector<bool> table,
                                std::size_t atom_cap) {
  if (!std::is_sorted(support.begin(), support.end()) ||
      std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw std::invalid_argument("PropClass::from_table: support must be sorted and distinct");
  }
  detail::check_atom_cap(support.size(), atom_cap);
  if (table.size() != (std::size_t{1} << support.size())) {
    throw std::invalid_argument("PropClass::from_table: table length must be 2^|support|");
  }
  // Walk from the last atom so earlier shifts stay valid after a drop.
  for (std::size_t k = support.size(); k-- > 0;) {
    const std::size_t shift = support.size() - 1 - k;
    if (!detail::depends_on(table, shift)) {
      table = detail::drop_position(table, shift);
      support.erase(support.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  PropClass c;
  c.support_ = std::move(support);
  c.table_ = std::move(table);
  return c;
}

PropClass PropClass::from_text(std::string_view text) {
  auto fail = [&](std::size_t pos, const std::string& msg) -> PropClass {
    throw SyntaxError(pos, "class text: " + msg);
  };
  if (text.size() < 4 || text.front() != '[' || text.back() != ']') {
    return fail(0, "expected '[support;bits]'");
  }
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) return fail(0, "missing ';'");
  std::vector<std::string> support;
  std::string_view names = text.substr(1, semi - 1);
  std::size_t pos = 1;
  while (!names.empty()) {
    const std::size_t comma = names.find(',');
    std::string name(names.substr(0, comma));
    if (!is_atom_name(name)) return fail(pos, "invalid atom name '" + name + "'");
    support.push_back(std::move(name));
    if (comma == std::string_view::npos) break;
    pos += comma + 1;
    names.remove_prefix(comma + 1);
    if (names.empty()) return fail(pos, "trailing ','");
  }
  std::string_view bits = text.substr(semi + 1, text.size() - semi - 2);
  std::vector<bool> table;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') return fail(semi + 1 + i, "table bits must be 0/1");
    table.push_back(bits[i] == '1');
  }
  if (!std::is_sorted(support.begin(), support.end()) ||
      std::adjacent_find(support.begin(), support.end()) != support.end()) {
    return fail(1, "support must be sorted and distinct");
  }
  if (support.size() >= 8 * sizeof(std::size_t) ||
      table.size() != (std::size_t{1} << support.size())) {
    return fail(semi + 1, "table length must be 2^|support|");
  }
  const std::size_t arity = support.size();
  PropClass c = from_table(support, table, arity);
  if (c.support_.size() != arity) return fail(1, "support contains an inessential atom");
  return c;
}

bool PropClass::evaluate(const Valuation& v) const {
  std::size_t idx = 0;
  for (const auto& name : support_) idx = (idx << 1) | (v(name) ? 1u : 0u);
  return table_[idx];
}

std::string PropClass::text() const {
  std::string out = "[";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) out += ',';
    out += support_[i];
  }
  out += ';';
  for (bool b : table_) out += b ? '1' : '0';
  out += ']';
  return out;
}

namespace {

detail::PackedTable table_of(const Formula& f, const std::vector<std::string>& universe) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = std::lower_bound(universe.begin(), universe.end(), f.name());
      return detail::PackedTable::projection(universe.size(),
                                             static_cast<std::size_t>(it - universe.begin()));
    }
    case Formula::Kind::Not: {
      auto t = table_of(f.child(), universe);
      t.flip();
      return t;
    }
    case Formula::Kind::And: {
      auto t = table_of(f.left(), universe);
      t &= table_of(f.right(), universe);
      return t;
    }
    case Formula::Kind::Or: {
      auto t = table_of(f.left(), universe);
      t |= table_of(f.right(), universe);
      return t;
    }
  }
  throw std::logic_error("unreachable");
}

template <typename Op>
PropClass combine(const PropClass& a, const PropClass& b, std::size_t atom_cap, Op op) {
  auto universe = detail::merge_support(a.support(), b.support());
  detail::check_atom_cap(universe.size(), atom_cap);
  auto ta = detail::expand(a, universe);
  auto tb = detail::expand(b, universe);
  op(ta, tb);
  return PropClass::from_table(std::move(universe), ta.to_bits(), atom_cap);
}

template <typename Op>
PropClass fold(std::span<const PropClass> items, std::size_t atom_cap, Op op, const char* what) {
  if (items.empty()) {
    throw Error(ErrorKind::EmptyList, std::string(what) + " needs a nonempty list");
  }
  std::vector<std::string> universe;
  for (const auto& c : items) universe = detail::merge_support(universe, c.support());
  detail::check_atom_cap(universe.size(), atom_cap);
  auto acc = detail::expand(items[0], universe);
  for (std::size_t i = 1; i < items.size(); ++i) op(acc, detail::expand(items[i], universe));
  return PropClass::from_table(std::move(universe), acc.to_bits(), atom_cap);
}

}  // namespace

PropClass canonicalize(const Formula& f, std::size_t atom_cap) {
  auto universe = atoms(f);
  detail::check_atom_cap(universe.size(), atom_cap);
  auto table = table_of(f, universe);
  return PropClass::from_table(std::move(universe), table.to_bits(), atom_cap);
}

PropClass class_not(const PropClass& a) {
  std::vector<bool> table = a.table();
  table.flip();
  // Negation never changes which atoms are essential.
  return PropClass::from_table(a.support(), std::move(table), a.support().size());
}

PropClass class_and(const PropClass& a, const PropClass& b, std::size_t atom_cap) {
  return combine(a, b, atom_cap, [](auto& x, const auto& y) { x &= y; });
}

PropClass class_or(const PropClass& a, const PropClass& b, std::size_t atom_cap) {
  return combine(a, b, atom_cap, [](auto& x, const auto& y) { x |= y; });
}

PropClass class_iff(const PropClass& a, const PropClass& b, std::size_t atom_cap) {
  return combine(a, b, atom_cap, [](auto& x, const auto& y) {
    // x <-> y == ~(x xor y), computed with the available ops.
    auto not_x = x;
    not_x.flip();
    auto not_y = y;
    not_y.flip();
    auto both = x;
    both &= y;
    not_x &= not_y;
    both |= not_x;
    x = both;
  });
}

PropClass big_and(std::span<const PropClass> items, std::size_t atom_cap) {
  return fold(items, atom_cap, [](auto& x, const auto& y) { x &= y; }, "big_and");
}

PropClass big_or(std::span<const PropClass> items, std::size_t atom_cap) {
  return fold(items, atom_cap, [](auto& x, const auto& y) { x |= y; }, "big_or");
}

bool entails(const PropClass& a, const PropClass& b) {
  auto universe = detail::merge_support(a.support(), b.support());
  return detail::expand(a, universe).implies(detail::expand(b, universe));
}

Formula representative(const PropClass& c) {
  if (c.support().empty()) {
    Formula t = Formula::atom("t");
    return c.is_tautology() ? Formula::disjunction(t, Formula::negation(t))
                            : Formula::conjunction(t, Formula::negation(t));
  }
  const std::size_t n = c.support().size();
  std::vector<Formula> minterms;
  for (std::size_t row = 0; row < c.table().size(); ++row) {
    if (!c.table()[row]) continue;
    std::vector<Formula> literals;
    for (std::size_t k = 0; k < n; ++k) {
      Formula a = Formula::atom(c.support()[k]);
      literals.push_back(((row >> (n - 1 - k)) & 1u) ? a : Formula::negation(a));
    }
    Formula term = literals[0];
    for (std::size_t k = 1; k < n; ++k) term = Formula::conjunction(term, literals[k]);
    minterms.push_back(term);
  }
  Formula out = minterms.at(0);  // an essential support implies a nonconstant table
  for (std::size_t i = 1; i < minterms.size(); ++i) out = Formula::disjunction(out, minterms[i]);
  return out;
}

std::vector<PropClass> all_classes(const std::vector<std::string>& atom_names) {
  if (atom_names.size() > 4) {
    throw Error(ErrorKind::ResourceLimit, "all_classes supports at most 4 atoms");
  }
  std::vector<std::string> support = atom_names;
  std::sort(support.begin(), support.end());
  const std::size_t rows = std::size_t{1} << support.size();
  const std::size_t count = std::size_t{1} << rows;
  std::vector<PropClass> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<bool> table(rows);
    for (std::size_t row = 0; row < rows; ++row) table[row] = (code >> row) & 1u;
    out.push_back(PropClass::from_table(support, std::move(table), support.size()));
  }
  return out;
}

}  // namespace prooflab
