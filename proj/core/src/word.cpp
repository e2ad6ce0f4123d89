#include "kei/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "kei/error.hpp"

namespace kei {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ValidationError("generator labels must be nonempty");
    if (std::any_of(n.begin(), n.end(),
                    [](unsigned char c) { return std::isspace(c) != 0; }))
      throw ValidationError("generator label '" + n + "' contains whitespace");
    if (n.find("^-1") != std::string::npos)
      throw ValidationError("generator label '" + n + "' contains '^-1'");
    if (!seen.insert(n).second)
      throw ValidationError("duplicate generator label '" + n + "'");
  }
}

Alphabet Alphabet::standard(std::size_t k) {
  static constexpr std::string_view kNames = "stuvwxyz";
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    names.push_back(i < kNames.size() ? std::string(1, kNames[i])
                                      : "g" + std::to_string(i));
  return Alphabet(std::move(names));
}

std::optional<Generator> Alphabet::find(std::string_view label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Generator>(it - names_.begin());
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

bool cancels(WordMode mode, const Letter& a, const Letter& b) {
  return a.gen == b.gen && (mode == WordMode::coxeter || a.inverse != b.inverse);
}

// Appends `l` to an already reduced stack, cancelling against the top.
void push_reduced(std::vector<Letter>& stack, WordMode mode, Letter l) {
  if (mode == WordMode::coxeter) l.inverse = false;
  if (!stack.empty() && cancels(mode, stack.back(), l))
    stack.pop_back();
  else
    stack.push_back(l);
}

void require_same_mode(const ReducedWord& a, const ReducedWord& b) {
  if (a.mode() != b.mode())
    throw ValidationError("cannot combine FREE and COXETER words");
}

}  // namespace

ReducedWord ReducedWord::reduce(std::span<const Letter> letters, WordMode mode,
                                std::size_t rank) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.gen >= rank)
      throw ValidationError("generator index " + std::to_string(l.gen) +
                            " is out of range for rank " + std::to_string(rank));
    push_reduced(stack, mode, l);
  }
  return ReducedWord(mode, std::move(stack));
}

ReducedWord ReducedWord::coxeter(std::initializer_list<Generator> gens,
                                 std::size_t rank) {
  std::vector<Letter> letters;
  for (Generator g : gens) letters.push_back({g, false});
  return reduce(letters, WordMode::coxeter, rank);
}

ReducedWord ReducedWord::prefix(std::size_t count) const {
  count = std::min(count, letters_.size());
  return ReducedWord(mode_, std::vector<Letter>(letters_.begin(),
                                                letters_.begin() + static_cast<std::ptrdiff_t>(count)));
}

ReducedWord multiply(const ReducedWord& a, const ReducedWord& b) {
  require_same_mode(a, b);
  std::vector<Letter> out(a.letters_);
  out.reserve(a.size() + b.size());
  for (const auto& l : b.letters_) push_reduced(out, a.mode_, l);
  return ReducedWord(a.mode_, std::move(out));
}

ReducedWord invert(const ReducedWord& a) {
  std::vector<Letter> out(a.letters_.rbegin(), a.letters_.rend());
  if (a.mode_ == WordMode::free)
    for (auto& l : out) l.inverse = !l.inverse;
  return ReducedWord(a.mode_, std::move(out));
}

ReducedWord conjugate(const ReducedWord& a, const ReducedWord& b) {
  return multiply(multiply(a, b), invert(a));
}

bool is_involution(const ReducedWord& w) {
  if (w.mode() != WordMode::coxeter)
    throw ValidationError("is_involution expects a COXETER word");
  return !w.empty() && multiply(w, w).empty();
}

bool is_odd_palindrome(const ReducedWord& w) {
  auto l = w.letters();
  return l.size() % 2 == 1 && std::equal(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(l.size() / 2),
                                         l.rbegin());
}

InvolutionWitness kurosh_witness(const ReducedWord& w) {
  if (!is_involution(w))
    throw ContractError("kurosh_witness requires an involution");
  const std::size_t m = w.size() / 2;
  return {w.prefix(m), w[m].gen};
}

ReducedWord recompose(const InvolutionWitness& witness, std::size_t rank) {
  auto center = ReducedWord::coxeter({witness.center}, rank);
  return conjugate(witness.conjugator, center);
}

// ---------------------------------------------------------------------------
// Balls

std::size_t ball_size(std::size_t rank, WordMode mode, std::size_t radius) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  const std::size_t first = mode == WordMode::free ? 2 * rank : rank;
  const std::size_t next = first == 0 ? 0 : first - 1;
  std::size_t total = 1, level = first;
  for (std::size_t len = 1; len <= radius && level != 0; ++len) {
    if (total > kMax - level) return kMax;
    total += level;
    if (len == radius) break;
    if (next != 0 && level > kMax / next) return kMax;
    level *= next;
  }
  return total;
}

std::vector<ReducedWord> ball_enumerate(std::size_t rank, WordMode mode,
                                        std::size_t radius, const Limits& limits) {
  if (radius > limits.max_word_length)
    throw LimitError("radius " + std::to_string(radius) +
                     " exceeds the word length cap " +
                     std::to_string(limits.max_word_length));
  const std::size_t total = ball_size(rank, mode, radius);
  if (total > limits.max_ball_size)
    throw LimitError("ball of radius " + std::to_string(radius) + " has " +
                     (total == std::numeric_limits<std::size_t>::max()
                          ? std::string("too many")
                          : std::to_string(total)) +
                     " words, above the cap " + std::to_string(limits.max_ball_size));

  std::vector<Letter> alphabet;
  for (Generator g = 0; g < rank; ++g) {
    alphabet.push_back({g, false});
    if (mode == WordMode::free) alphabet.push_back({g, true});
  }

  // Extending each word of a shortlex-sorted level by letters in ascending
  // order keeps the next level sorted.
  std::vector<ReducedWord> out;
  out.reserve(total);
  out.push_back(ReducedWord(mode));
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= radius; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& l : alphabet) {
        const auto& base = out[i].letters_;
        if (!base.empty() && cancels(mode, base.back(), l)) continue;
        std::vector<Letter> next(base);
        next.push_back(l);
        out.push_back(ReducedWord(mode, std::move(next)));
      }
    }
    level_begin = level_end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation and free quandles

Element evaluate(const ReducedWord& w, const FiniteGroup& group,
                 std::span<const Element> assignment) {
  for (Element image : assignment)
    if (image >= group.order())
      throw ValidationError("assigned element is out of range");
  if (w.mode() == WordMode::coxeter) {
    for (std::size_t i = 0; i < assignment.size(); ++i)
      if (group.mul(assignment[i], assignment[i]) != group.identity())
        throw ValidationError("generator " + std::to_string(i) +
                              " is assigned an element whose square is not the identity");
  }
  Element acc = group.identity();
  for (const auto& l : w.letters()) {
    if (l.gen >= assignment.size())
      throw ValidationError("no image assigned to generator " + std::to_string(l.gen));
    Element g = assignment[l.gen];
    acc = group.mul(acc, l.inverse ? group.inverse(g) : g);
  }
  return acc;
}

bool is_generator_conjugate(const ReducedWord& w) {
  if (w.mode() != WordMode::free || w.size() % 2 == 0) return false;
  const std::size_t m = w.size() / 2;
  if (w[m].inverse) return false;
  for (std::size_t i = 0; i < m; ++i)
    if (w[w.size() - 1 - i] != w[i].inverted()) return false;
  return true;
}

ReducedWord free_quandle_op(const ReducedWord& x, const ReducedWord& y) {
  if (!is_generator_conjugate(x) || !is_generator_conjugate(y))
    throw ValidationError("free quandle elements must be conjugates of generators");
  return conjugate(x, y);
}

// ---------------------------------------------------------------------------
// Text syntax

ReducedWord parse_word(std::string_view text, const Alphabet& alphabet,
                       WordMode mode) {
  const bool e_is_label = alphabet.find("e").has_value();
  std::vector<Letter> letters;
  std::size_t i = 0;
  bool saw_identity = false;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view token = text.substr(start, i - start);
    if (!e_is_label && (token == "e" || token == "ε")) {
      saw_identity = true;
      continue;
    }
    bool inverse = false;
    if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
      inverse = true;
      token.remove_suffix(3);
    }
    auto gen = alphabet.find(token);
    if (!gen)
      throw ParseError(1, start + 1, "unknown generator '" + std::string(token) + "'");
    if (inverse && mode == WordMode::coxeter)
      throw ParseError(1, start + 1, "inverse letters are not used in COXETER words");
    letters.push_back({*gen, inverse});
  }
  if (saw_identity && !letters.empty())
    throw ParseError(1, 1, "the identity symbol must stand alone");
  return ReducedWord::reduce(letters, mode, alphabet.size());
}

std::string format_word(const ReducedWord& w, const Alphabet& alphabet) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(l.gen);
    if (l.inverse) out += "^-1";
  }
  return out;
}

}  // namespace kei
