#pragma once

// Packed truth tables over an explicit atom universe. Private to the
// library; the public surface deals only in PropClass.

#include <cstdint>
#include <string>
#include <vector>

#include "prooflab/prop_class.hpp"

namespace prooflab::detail {

class PackedTable {
 public:
  PackedTable() = default;
  PackedTable(std::size_t atom_count, bool fill);

  // Table of the atom at position index of an atom_count-sized universe.
  static PackedTable projection(std::size_t atom_count, std::size_t index);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t row) const noexcept { return (words_[row >> 6] >> (row & 63)) & 1u; }
  void set(std::size_t row, bool bit) noexcept;

  PackedTable& operator&=(const PackedTable& other) noexcept;
  PackedTable& operator|=(const PackedTable& other) noexcept;
  void flip() noexcept;

  // No row where this is 1 and other is 0.
  bool implies(const PackedTable& other) const noexcept;
  bool all() const noexcept;

  std::vector<bool> to_bits() const;

  friend bool operator==(const PackedTable&, const PackedTable&) = default;

 private:
  void mask_tail() noexcept;

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

void check_atom_cap(std::size_t atom_count, std::size_t atom_cap);

std::vector<std::string> merge_support(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b);

// Table of c over universe, a sorted superset of c.support().
PackedTable expand(const PropClass& c, const std::vector<std::string>& universe);

}  // namespace prooflab::detail
