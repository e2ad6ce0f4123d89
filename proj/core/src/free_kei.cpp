#include "kei/free_kei.hpp"

namespace kei {

void FreeKei::check_alphabet(const FIQElement& x) const {
  if (x.center >= rank()) throw ValidationError("element does not belong to this alphabet");
  if (x.prefix.mode() != WordMode::coxeter)
    throw ValidationError("FIQ prefixes are COXETER words");
  for (const auto& l : x.prefix.letters())
    if (l.gen >= rank()) throw ValidationError("element does not belong to this alphabet");
}

FIQElement FreeKei::embed(Generator g) const {
  if (g >= rank())
    throw ValidationError("generator " + std::to_string(g) + " is out of range");
  return {ReducedWord(WordMode::coxeter), g};
}

FIQElement FreeKei::make(ReducedWord prefix, Generator center) const {
  FIQElement x{std::move(prefix), center};
  check_alphabet(x);
  if (!x.prefix.empty() && x.prefix[x.prefix.size() - 1].gen == center)
    throw ValidationError("prefix must not end with the center letter");
  return x;
}

ReducedWord FreeKei::expand(const FIQElement& x) const {
  check_alphabet(x);
  auto center = ReducedWord::coxeter({x.center}, rank());
  return multiply(multiply(x.prefix, center), invert(x.prefix));
}

FIQElement FreeKei::from_word(const ReducedWord& w) const {
  if (w.mode() != WordMode::coxeter || !is_odd_palindrome(w))
    throw ValidationError("FIQ elements are reduced odd palindromes");
  const std::size_t m = w.size() / 2;
  return make(w.prefix(m), w[m].gen);
}

FIQElement FreeKei::op(const FIQElement& x, const FIQElement& y) const {
  const auto ex = expand(x);
  // x is an involution, so x⁻¹ = x.
  return from_word(multiply(multiply(ex, expand(y)), ex));
}

std::vector<FIQElement> FreeKei::ball(std::size_t radius, const Limits& limits) const {
  std::vector<FIQElement> out;
  if (radius == 0) return out;
  if (radius > limits.max_word_length)
    throw LimitError("radius " + std::to_string(radius) +
                     " exceeds the word length cap " +
                     std::to_string(limits.max_word_length));
  const auto prefixes = ball_enumerate(rank(), WordMode::coxeter, (radius - 1) / 2, limits);
  if (prefixes.size() > limits.max_ball_size / std::max<std::size_t>(1, rank()))
    throw LimitError("FIQ ball exceeds the size cap");
  for (const auto& p : prefixes)
    for (Generator c = 0; c < rank(); ++c)
      if (p.empty() || p[p.size() - 1].gen != c) out.push_back({p, c});
  return out;
}

FIQElement FreeKei::parse(std::string_view text) const {
  return from_word(parse_word(text, alphabet_, WordMode::coxeter));
}

std::string FreeKei::format(const FIQElement& x) const {
  return format_word(expand(x), alphabet_);
}

std::string FreeKei::format_operation(const FIQElement& x) const {
  check_alphabet(x);
  std::string out;
  const std::size_t m = x.prefix.size();
  for (std::size_t i = 0; i < m; ++i) {
    out += alphabet_.name(x.prefix[i].gen);
    out += "▷";
    if (i + 1 < m) out += '(';
  }
  out += alphabet_.name(x.center);
  if (m > 1) out += std::string(m - 1, ')');
  return out;
}

FiniteKeiEvaluator universal_extend(const FreeKei& free, FiniteQuandle target,
                                    std::vector<Element> assignment) {
  if (!check_rack(target) || !check_involutory(target))
    throw ContractError("universal_extend requires an involutory quandle target");
  if (!check_quandle(target))
    throw ContractError("universal_extend requires an involutory quandle target");
  if (assignment.size() != free.rank())
    throw ValidationError("assignment must give one image per generator");
  for (Element v : assignment)
    if (v >= target.size()) throw ValidationError("assigned element is out of range");
  auto shared = std::make_shared<const FiniteQuandle>(std::move(target));
  return FiniteKeiEvaluator(std::move(assignment), QuandleTableOp(std::move(shared)));
}

ProbeResult<Element> freeness_probe(const FiniteQuandle& q,
                                    std::span<const Element> generators,
                                    std::size_t depth, const Limits& limits) {
  FreeKei free(Alphabet::standard(generators.size()));
  auto evaluator = universal_extend(
      free, q, std::vector<Element>(generators.begin(), generators.end()));
  return probe_relation(free, evaluator, depth, limits);
}

}  // namespace kei
