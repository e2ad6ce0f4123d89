#include "kei/ev_group.hpp"

namespace kei {

const Alphabet& ev_word_alphabet() {
  static const Alphabet alphabet({"σ", "τ"});
  return alphabet;
}

const Alphabet& ev_generator_alphabet() {
  static const Alphabet alphabet({"ρ", "σ", "τ"});
  return alphabet;
}

EVElement ev_identity() { return {}; }
EVElement ev_rho() { return {1, ReducedWord(WordMode::coxeter)}; }
EVElement ev_sigma() { return {0, ReducedWord::coxeter({0}, 2)}; }
EVElement ev_tau() { return {0, ReducedWord::coxeter({1}, 2)}; }

ReducedWord ev_swap(const ReducedWord& w) {
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  for (auto& l : letters) l.gen = 1 - l.gen;
  return ReducedWord::reduce(letters, WordMode::coxeter, 2);
}

EVElement ev_multiply(const EVElement& x, const EVElement& y) {
  const auto& moved = x.rho ? ev_swap(y.word) : y.word;
  return {(x.rho + y.rho) % 2, multiply(x.word, moved)};
}

EVElement ev_inverse(const EVElement& x) {
  auto inv = invert(x.word);
  return {x.rho, x.rho ? ev_swap(inv) : inv};
}

EVElement ev_conjugate(const EVElement& x, const EVElement& y) {
  return ev_multiply(ev_multiply(x, y), ev_inverse(x));
}

bool ev_is_involution(const EVElement& x) {
  return x != ev_identity() && ev_multiply(x, x) == ev_identity();
}

std::string format_ev(const EVElement& x) {
  if (x.rho == 0) return format_word(x.word, ev_word_alphabet());
  if (x.word.empty()) return "ρ";
  return format_word(x.word, ev_word_alphabet()) + " ρ";
}

ProbeResult<EVElement> ev_freeness_probe(std::size_t depth, const Limits& limits) {
  FreeKei free(ev_generator_alphabet());
  KeiEvaluator evaluator(std::vector<EVElement>{ev_rho(), ev_sigma(), ev_tau()},
                         [](const EVElement& x, const EVElement& y) {
                           return ev_conjugate(x, y);
                         });
  return probe_relation(free, evaluator, depth, limits);
}

}  // namespace kei
