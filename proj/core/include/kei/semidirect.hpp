#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kei/finite_group.hpp"
#include "kei/finite_quandle.hpp"

namespace kei {

/// A character χ: G → {+1, −1} through which G acts on a cyclic kernel.
/// Valid only if χ is a homomorphism and χ(s) = −1 for every involution s.
class SignedAction {
 public:
  SignedAction(FiniteGroup base, std::vector<int> character);

  const FiniteGroup& base() const noexcept { return base_; }
  int sign(Element g) const noexcept { return character_[g]; }
  const std::vector<int>& character() const noexcept { return character_; }

 private:
  FiniteGroup base_;
  std::vector<int> character_;
};

/// Every homomorphism G → {±1}, as ±1 vectors. The trivial character comes
/// first. Computed through the elementary abelian quotient G / ⟨squares⟩.
std::vector<std::vector<int>> group_characters(const FiniteGroup& g);

/// The characters that send every involution to −1.
std::vector<std::vector<int>> admissible_characters(const FiniteGroup& g);

/// The first admissible character of g. Throws ValidationError if g has none
/// (e.g. S₄, whose double transpositions are even).
SignedAction default_action(FiniteGroup g);

/// Parses a "+-" string with one sign per element.
SignedAction action_from_signs(FiniteGroup g, std::string_view signs);

/// Z/n ⋊ G with (a, g)(b, h) = (a + χ(g)·b, g·h). The pair (a, g) has index
/// a · |G| + g, so n = 1 reproduces G's own indices.
class SemidirectGroup {
 public:
  std::size_t modulus() const noexcept { return n_; }
  const SignedAction& action() const noexcept { return action_; }
  const FiniteGroup& base() const noexcept { return action_.base(); }
  std::size_t order() const noexcept { return n_ * base().order(); }

  Element index(std::size_t a, Element g) const noexcept {
    return static_cast<Element>(a * base().order() + g);
  }
  std::size_t kernel_part(Element x) const noexcept { return x / base().order(); }
  Element group_part(Element x) const noexcept {
    return static_cast<Element>(x % base().order());
  }

  Element identity() const noexcept { return index(0, base().identity()); }
  Element mul(Element x, Element y) const noexcept;
  Element inverse(Element x) const noexcept;

  /// Materialises the multiplication table (associativity is not re-checked;
  /// use FiniteGroup::is_associative to audit it).
  FiniteGroup to_finite_group() const;

  /// χ'(a, g) = χ(g) on the materialised group, for iterating the
  /// construction.
  SignedAction lifted_action() const;

 private:
  friend SemidirectGroup build_semidirect(std::size_t, SignedAction);
  SemidirectGroup(std::size_t n, SignedAction action)
      : n_(n), action_(std::move(action)) {}

  std::size_t n_;
  SignedAction action_;
};

/// Rejects even n: the kernel stands in for a torsion-free group, and only
/// odd n keep 2a = 0 ⟹ a = 0.
SemidirectGroup build_semidirect(std::size_t n, SignedAction action);

struct SemidirectInvolutions {
  FiniteQuandle quandle;
  /// labels[i] = (a, s) for quandle element i, sorted by (s, a).
  std::vector<std::pair<std::size_t, Element>> labels;
};

/// The involutions of the semidirect group, found by scanning every element,
/// with ▷ computed by conjugation in the group.
SemidirectInvolutions semidirect_involutions(const SemidirectGroup& sd);

/// (a, s) ▷ (b, t) = (2a − b, s·t·s) evaluated directly.
std::pair<std::size_t, Element> involution_conjugation_formula(
    const SemidirectGroup& sd, std::pair<std::size_t, Element> x,
    std::pair<std::size_t, Element> y);

struct LaurentReport {
  std::size_t n = 0;
  std::size_t involution_count = 0;  // |Inv(G)|
  QuandleMorphism iso;               // semidirect involutions → Inv(G) × R_n
  bool iso_verified = false;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<Element, Element>> mismatch;
};

/// Certifies (a, s) ↦ (s, a) as an isomorphism from the involution quandle
/// of Z/n ⋊ G onto inv_quandle(G) × dihedral_quandle(n) by comparing both
/// tables on every pair. Throws ValidationError if G has no involutions.
LaurentReport verify_laurent(std::size_t n, const SignedAction& action);

/// inv_quandle(G) × R_{n1} × R_{n2}
FiniteQuandle iterated_laurent(std::size_t n1, std::size_t n2, const FiniteGroup& g);

}  // namespace kei
