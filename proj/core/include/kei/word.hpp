#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kei/finite_group.hpp"
#include "kei/limits.hpp"

namespace kei {

/// FREE: the free group F(S). COXETER: the universal Coxeter group F₂(S),
/// where every generator squares to the identity and distinct generators are
/// unrelated.
enum class WordMode { free, coxeter };

using Generator = std::uint32_t;

/// A generator or (FREE mode only) its inverse. Ordered so that s < s⁻¹ < t.
struct Letter {
  Generator gen = 0;
  bool inverse = false;

  Letter inverted() const noexcept { return {gen, !inverse}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Named generators. Labels are distinct, nonempty and contain no
/// whitespace.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// k generators named s, t, u, v, w, x, y, z, then g8, g9, ...
  static Alphabet standard(std::size_t k);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Generator g) const { return names_.at(g); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Generator> find(std::string_view label) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// A freely reduced word. FREE words never contain g·g⁻¹ or g⁻¹·g; COXETER
/// words never contain two equal adjacent letters and carry no inverse
/// flags. Words are reduced on construction, so equality is sequence
/// equality. Ordering is shortlex (length, then letters).
class ReducedWord {
 public:
  explicit ReducedWord(WordMode mode = WordMode::coxeter) : mode_(mode) {}

  /// Cancels adjacent inverse pairs (FREE) or equal pairs (COXETER). Throws
  /// ValidationError if a generator index is >= rank.
  static ReducedWord reduce(std::span<const Letter> letters, WordMode mode,
                            std::size_t rank);

  /// Convenience for COXETER words given as generator indices.
  static ReducedWord coxeter(std::initializer_list<Generator> gens,
                             std::size_t rank);

  WordMode mode() const noexcept { return mode_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// First `count` letters.
  ReducedWord prefix(std::size_t count) const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend std::strong_ordering operator<=>(const ReducedWord& a,
                                          const ReducedWord& b) {
    if (auto c = a.mode_ <=> b.mode_; c != 0) return c;
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  friend ReducedWord multiply(const ReducedWord&, const ReducedWord&);
  friend ReducedWord invert(const ReducedWord&);
  friend std::vector<ReducedWord> ball_enumerate(std::size_t, WordMode,
                                                 std::size_t, const Limits&);

  ReducedWord(WordMode mode, std::vector<Letter> letters)
      : mode_(mode), letters_(std::move(letters)) {}

  WordMode mode_;
  std::vector<Letter> letters_;
};

/// Throws ValidationError on mode mismatch.
ReducedWord multiply(const ReducedWord& a, const ReducedWord& b);
ReducedWord invert(const ReducedWord& a);

/// a·b·a⁻¹
ReducedWord conjugate(const ReducedWord& a, const ReducedWord& b);

/// Nonempty and w·w reduces to the empty word. COXETER words only; throws
/// ValidationError for FREE words.
bool is_involution(const ReducedWord& w);

/// Odd length and equal to its own reversal.
bool is_odd_palindrome(const ReducedWord& w);

/// w = conjugator · center · conjugator⁻¹ with conjugator not ending in
/// center.
struct InvolutionWitness {
  ReducedWord conjugator;
  Generator center = 0;

  friend bool operator==(const InvolutionWitness&, const InvolutionWitness&) = default;
};

/// Conjugator is the first m letters of an involution of length 2m + 1 and
/// the center is letter m. Throws ContractError for non-involutions.
InvolutionWitness kurosh_witness(const ReducedWord& w);

/// conjugator · center · conjugator⁻¹, reduced.
ReducedWord recompose(const InvolutionWitness& witness, std::size_t rank);

/// Number of reduced words of length <= radius.
std::size_t ball_size(std::size_t rank, WordMode mode, std::size_t radius);

/// All reduced words of length <= radius in shortlex order. Throws
/// LimitError if radius exceeds limits.max_word_length or the ball would
/// exceed limits.max_ball_size.
std::vector<ReducedWord> ball_enumerate(std::size_t rank, WordMode mode,
                                        std::size_t radius,
                                        const Limits& limits = {});

/// Image of w under the homomorphism sending generator i to assignment[i].
/// In COXETER mode every assigned image must square to the identity
/// (ValidationError otherwise).
Element evaluate(const ReducedWord& w, const FiniteGroup& group,
                 std::span<const Element> assignment);

/// Conjugation in the free quandle inside F(S): x·y·x⁻¹ for FREE words of
/// the form w·s·w⁻¹ (s a positive generator). Throws ValidationError if an
/// argument is not a conjugate of a generator.
ReducedWord free_quandle_op(const ReducedWord& x, const ReducedWord& y);

/// True for FREE words w·s·w⁻¹ with s a positive generator.
bool is_generator_conjugate(const ReducedWord& w);

/// Whitespace-separated labels, `^-1` suffix for inverses in FREE mode.
/// "e" (or an empty string) denotes the identity unless "e" is a label.
ReducedWord parse_word(std::string_view text, const Alphabet& alphabet,
                       WordMode mode);
/// The identity prints as "e".
std::string format_word(const ReducedWord& w, const Alphabet& alphabet);

}  // namespace kei

template <>
struct std::hash<kei::ReducedWord> {
  std::size_t operator()(const kei::ReducedWord& w) const noexcept {
    std::size_t h = w.mode() == kei::WordMode::free ? 0x9e3779b97f4a7c15ull : 0;
    for (const auto& l : w.letters())
      h = (h ^ (2 * std::size_t{l.gen} + l.inverse)) * 0x100000001b3ull;
    return h;
  }
};
