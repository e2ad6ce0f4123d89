#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "kei/finite_group.hpp"
#include "kei/limits.hpp"

namespace kei {

/// A finite magma on {0..n-1} stored as a dense row-major table with
/// op(i, j) = i ▷ j. Row i is the left multiplication λ_i.
///
/// Construction only checks that every entry is in range. Whether the table
/// is a rack, quandle or involutory quandle is decided by the checkers below.
/// The empty table (n = 0) is legal.
class FiniteQuandle {
 public:
  FiniteQuandle() = default;
  FiniteQuandle(std::size_t n, std::vector<Element> table,
                std::size_t max_order = Limits{}.max_order);

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  Element op(Element x, Element y) const noexcept {
    return table_[static_cast<std::size_t>(x) * n_ + y];
  }
  std::span<const Element> row(Element x) const noexcept {
    return std::span<const Element>(table_).subspan(
        static_cast<std::size_t>(x) * n_, n_);
  }
  std::span<const Element> table() const noexcept { return table_; }

  friend bool operator==(const FiniteQuandle&, const FiniteQuandle&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> table_;
};

using Permutation = std::vector<Element>;

/// A map between finite quandles, one target index per source element. The
/// source and target are whatever the producing call was given.
struct QuandleMorphism {
  std::vector<Element> map;

  Element operator()(Element x) const { return map.at(x); }
  friend bool operator==(const QuandleMorphism&, const QuandleMorphism&) = default;
};

struct OrbitPartition {
  /// Disjoint classes covering {0..n-1}; each class ascending, classes
  /// ordered by least element.
  std::vector<std::vector<Element>> classes;
  /// class_of[x] indexes into classes.
  std::vector<std::size_t> class_of;

  std::size_t count() const noexcept { return classes.size(); }
};

// ---------------------------------------------------------------------------
// Axiom checkers. Witnesses are the least counterexample in lexicographic
// order so that failures print deterministically.

struct NonBijectiveRow {
  Element row;
  friend bool operator==(const NonBijectiveRow&, const NonBijectiveRow&) = default;
};

/// x ▷ (y ▷ z) ≠ (x ▷ y) ▷ (x ▷ z)
struct DistributivityFailure {
  Element x, y, z;
  friend bool operator==(const DistributivityFailure&,
                         const DistributivityFailure&) = default;
};

using RackViolation = std::variant<NonBijectiveRow, DistributivityFailure>;

struct RackReport {
  bool is_rack = true;
  std::optional<RackViolation> witness;
  explicit operator bool() const noexcept { return is_rack; }
};

struct QuandleReport {
  bool is_quandle = true;
  std::optional<Element> witness;
  explicit operator bool() const noexcept { return is_quandle; }
};

struct InvolutoryReport {
  bool is_involutory = true;
  std::optional<std::pair<Element, Element>> witness;
  explicit operator bool() const noexcept { return is_involutory; }
};

/// Every λ_x is a bijection and self-distributivity holds on all n³ triples.
/// Row bijectivity is checked first (rows in order), then triples.
RackReport check_rack(const FiniteQuandle& q);

/// x ▷ x = x for all x. Throws ContractError if q is not a rack.
QuandleReport check_quandle(const FiniteQuandle& q);

/// x ▷ (x ▷ y) = y for all pairs. Throws ContractError if q is not a rack.
InvolutoryReport check_involutory(const FiniteQuandle& q);

/// The natural automorphism x ↦ x ▷ x. Throws ContractError for non-racks.
Permutation nat_automorphism(const FiniteQuandle& q);

// ---------------------------------------------------------------------------
// Constructions.

/// g ▷ x = g·x·g⁻¹ on the whole group.
FiniteQuandle conj_quandle(const FiniteGroup& g);

struct InvolutionQuandle {
  FiniteQuandle quandle;
  /// to_group[i] is the group element carried by quandle element i.
  std::vector<Element> to_group;
};

/// The involutions {s | s² = e ≠ s} under conjugation.
InvolutionQuandle inv_quandle(const FiniteGroup& g);

/// g ▷ x = g·x⁻¹·g. For abelian groups this is 2g − x.
FiniteQuandle core_quandle(const FiniteGroup& g);

/// Z/n with a ▷ b = 2a − b. Throws ValidationError for n = 0.
FiniteQuandle dihedral_quandle(std::size_t n);

/// x ▷ y = y on n elements.
FiniteQuandle trivial_quandle(std::size_t n);

/// Componentwise product; the pair (a, b) has index a * q2.size() + b.
FiniteQuandle product(const FiniteQuandle& q1, const FiniteQuandle& q2);

/// Classes of the equivalence relation generated by y ∼ x ▷ y.
OrbitPartition orbits(const FiniteQuandle& q);

/// Pairs x ≠ y with x ▷ y = y, lexicographic. Empty exactly when
/// x ▷ y = y forces x = y.
std::vector<std::pair<Element, Element>> fixed_pair_report(const FiniteQuandle& q);

// ---------------------------------------------------------------------------
// Morphisms.

bool is_morphism(const FiniteQuandle& src, const FiniteQuandle& tgt,
                 std::span<const Element> map);

struct HomEnumeration {
  std::vector<QuandleMorphism> morphisms;  // lexicographic by map
  std::size_t count = 0;
  bool complete = true;  // false if the limit stopped the search
};

/// All morphisms src → tgt by backtracking with closure propagation. With a
/// limit, stops after that many morphisms and reports complete = false if
/// more might exist.
HomEnumeration enumerate_homs(const FiniteQuandle& src, const FiniteQuandle& tgt,
                              std::optional<std::size_t> limit = std::nullopt);

/// Exact number of morphisms without materialising them.
std::size_t hom_count(const FiniteQuandle& src, const FiniteQuandle& tgt);

/// A bijective morphism q1 → q2 if one exists. Candidates are pruned by a
/// per-element invariant profile before backtracking.
std::optional<QuandleMorphism> are_isomorphic(const FiniteQuandle& q1,
                                              const FiniteQuandle& q2);

}  // namespace kei
