#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kei {

/// Index of an element of a finite quandle or group.
using Element = std::uint32_t;

/// A finite group given by its dense multiplication table.
///
/// Elements are the indices 0..order()-1. The table is row-major:
/// mul(a, b) = table[a * order() + b]. Construction validates ranges, the
/// identity, the Latin-square property and, unless skipped, associativity
/// over all order()^3 triples. Inverses are derived from the table.
class FiniteGroup {
 public:
  enum class Check { full, skip_associativity };

  FiniteGroup(std::size_t order, std::vector<Element> table, Element identity,
              std::vector<std::string> labels = {}, Check check = Check::full);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const noexcept { return inverse_[a]; }

  /// g·x·g⁻¹
  Element conjugate(Element g, Element x) const noexcept {
    return mul(mul(g, x), inverse(g));
  }

  std::span<const Element> table() const noexcept { return table_; }

  const std::string& label(Element a) const { return labels_.at(a); }
  std::optional<Element> find(std::string_view label) const;

  bool is_abelian() const noexcept;
  bool is_associative() const noexcept;

  /// Elements s with s² = e and s ≠ e, ascending. The identity is never an
  /// involution.
  std::vector<Element> involutions() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.identity_ == b.identity_ && a.table_ == b.table_;
  }

 private:
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

/// Z/n with index = residue.
FiniteGroup cyclic_group(std::size_t n);

/// Symmetric group on k points. Elements are permutations in lexicographic
/// order of their one-line notation (identity first); the product is
/// composition, (p·q)(x) = p(q(x)). Labels use 1-based cycle notation,
/// e.g. "(1 2)".
FiniteGroup symmetric_group(std::size_t k);

/// Dihedral group of order 2m. Element r^i·s^f has index i + m·f; rotations
/// come first, then reflections. Labels are e, r, r^2, ..., s, r s, r^2 s, ...
FiniteGroup dihedral_group(std::size_t m);

/// Direct product with index a * h.order() + b for the pair (a, b).
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Named builtins: "z<n>" (cyclic), "s<k>" (symmetric, k <= 6), "d<m>"
/// (dihedral of order 2m), "v4" (Z/2 x Z/2). Throws ValidationError for
/// unknown names.
FiniteGroup named_group(std::string_view name);

}  // namespace kei
