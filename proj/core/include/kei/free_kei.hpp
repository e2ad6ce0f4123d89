#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kei/error.hpp"
#include "kei/finite_quandle.hpp"
#include "kei/word.hpp"

namespace kei {

/// Canonical form of an element of the free involutory quandle FQ₂(S): the
/// involution prefix · center · prefix⁻¹ of F₂(S), with a reduced COXETER
/// prefix that does not end in center. Distinct pairs are distinct elements.
///
/// Ordering is shortlex on the expanded palindrome.
struct FIQElement {
  ReducedWord prefix{WordMode::coxeter};
  Generator center = 0;

  std::size_t expansion_length() const noexcept { return 2 * prefix.size() + 1; }

  friend bool operator==(const FIQElement&, const FIQElement&) = default;
  friend std::strong_ordering operator<=>(const FIQElement& a, const FIQElement& b) {
    if (auto c = a.prefix <=> b.prefix; c != 0) return c;
    return a.center <=> b.center;
  }
};

/// FQ₂(S) on a finite alphabet, realised as the involutions of the universal
/// Coxeter group F₂(S) under conjugation.
class FreeKei {
 public:
  explicit FreeKei(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t rank() const noexcept { return alphabet_.size(); }

  /// The generator as an element (empty prefix).
  FIQElement embed(Generator g) const;

  /// Validates letters against the alphabet and the no-trailing-center rule.
  FIQElement make(ReducedWord prefix, Generator center) const;

  /// Canonical form of x·y·x in F₂(S). The result has y's center.
  FIQElement op(const FIQElement& x, const FIQElement& y) const;

  /// prefix · center · reverse(prefix)
  ReducedWord expand(const FIQElement& x) const;

  /// Canonical form of a reduced odd palindrome. Throws ValidationError for
  /// anything else.
  FIQElement from_word(const ReducedWord& w) const;

  /// All elements whose expansion has length <= radius, shortlex by
  /// expansion. Throws LimitError above the configured caps.
  std::vector<FIQElement> ball(std::size_t radius, const Limits& limits = {}) const;

  /// Parses an expanded palindrome such as "s t s".
  FIQElement parse(std::string_view text) const;
  /// Expanded palindrome in word syntax.
  std::string format(const FIQElement& x) const;
  /// Right-nested operation form, e.g. "s▷(t▷u)" for s t u t s.
  std::string format_operation(const FIQElement& x) const;

 private:
  void check_alphabet(const FIQElement& x) const;

  Alphabet alphabet_;
};

/// Evaluates FIQ elements in an involutory quandle given images of the
/// generators: prefix p₁…p_m and center c go to
/// λ_{φ(p₁)} ∘ … ∘ λ_{φ(p_m)}(φ(c)). Well defined because the target is
/// involutory. Works for any value type with an operation `op(x, y) = x ▷ y`.
template <typename Value, typename Op>
class KeiEvaluator {
 public:
  KeiEvaluator(std::vector<Value> images, Op op)
      : images_(std::move(images)), op_(std::move(op)) {}

  Value operator()(const FIQElement& x) const {
    if (x.center >= images_.size())
      throw ValidationError("element uses a generator without an image");
    Value v = images_[x.center];
    auto letters = x.prefix.letters();
    for (std::size_t i = letters.size(); i-- > 0;) {
      if (letters[i].gen >= images_.size())
        throw ValidationError("element uses a generator without an image");
      v = op_(images_[letters[i].gen], v);
    }
    return v;
  }

  const std::vector<Value>& images() const noexcept { return images_; }

 private:
  std::vector<Value> images_;
  Op op_;
};

/// Table lookup into a shared finite quandle.
class QuandleTableOp {
 public:
  explicit QuandleTableOp(std::shared_ptr<const FiniteQuandle> q) : q_(std::move(q)) {}
  Element operator()(Element x, Element y) const { return q_->op(x, y); }
  const FiniteQuandle& quandle() const noexcept { return *q_; }

 private:
  std::shared_ptr<const FiniteQuandle> q_;
};

using FiniteKeiEvaluator = KeiEvaluator<Element, QuandleTableOp>;

/// Extends a generator assignment S → T to the morphism FQ₂(S) → T.
/// Throws ContractError unless T is an involutory quandle, and
/// ValidationError if the assignment does not give one image in T per
/// generator.
FiniteKeiEvaluator universal_extend(const FreeKei& free, FiniteQuandle target,
                                    std::vector<Element> assignment);

/// Two distinct canonical forms with the same value.
struct Relation {
  FIQElement lhs;  // the later element in shortlex order
  FIQElement rhs;
  /// Conjugation depth at which the relation appears.
  std::size_t depth() const noexcept { return lhs.prefix.size(); }
};

template <typename Value>
struct ProbeResult {
  std::size_t depth = 0;
  std::size_t elements_checked = 0;
  std::optional<Relation> relation;
  std::optional<Value> value;  // common value of lhs and rhs
};

/// Walks the FIQ ball of expansion length <= 2·depth + 1 (depth counts
/// conjugation steps) in shortlex order and reports the first element whose
/// value was already taken by an earlier one.
template <typename Value, typename Op>
ProbeResult<Value> probe_relation(const FreeKei& free,
                                  const KeiEvaluator<Value, Op>& evaluate,
                                  std::size_t depth, const Limits& limits = {}) {
  ProbeResult<Value> result;
  result.depth = depth;
  const auto ball = free.ball(2 * depth + 1, limits);
  std::map<Value, std::size_t> first_seen;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    ++result.elements_checked;
    Value v = evaluate(ball[i]);
    auto [it, inserted] = first_seen.emplace(v, i);
    if (!inserted) {
      result.relation = Relation{ball[i], ball[it->second]};
      result.value = std::move(v);
      return result;
    }
  }
  return result;
}

/// Freeness probe for generators inside a finite involutory quandle.
ProbeResult<Element> freeness_probe(const FiniteQuandle& q,
                                    std::span<const Element> generators,
                                    std::size_t depth = 4,
                                    const Limits& limits = {});

}  // namespace kei

template <>
struct std::hash<kei::FIQElement> {
  std::size_t operator()(const kei::FIQElement& x) const noexcept {
    return std::hash<kei::ReducedWord>{}(x.prefix) * 31 + x.center;
  }
};
