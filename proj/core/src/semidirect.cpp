#include "kei/semidirect.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "kei/error.hpp"

namespace kei {

SignedAction::SignedAction(FiniteGroup base, std::vector<int> character)
    : base_(std::move(base)), character_(std::move(character)) {
  if (character_.size() != base_.order())
    throw ValidationError("character needs one sign per group element");
  for (int c : character_)
    if (c != 1 && c != -1) throw ValidationError("character values must be +1 or -1");
  for (Element g = 0; g < base_.order(); ++g)
    for (Element h = 0; h < base_.order(); ++h)
      if (character_[base_.mul(g, h)] != character_[g] * character_[h])
        throw ValidationError("character is not a homomorphism (fails at " +
                              std::to_string(g) + "," + std::to_string(h) + ")");
  for (Element s : base_.involutions())
    if (character_[s] != -1)
      throw ValidationError("involution " + base_.label(s) +
                            " must act as -1 on the kernel");
}

std::vector<std::vector<int>> group_characters(const FiniteGroup& g) {
  const std::size_t n = g.order();
  // Subgroup generated by all squares; every character is trivial on it.
  std::vector<char> in_sq(n, 0);
  std::vector<Element> sq{g.identity()};
  in_sq[g.identity()] = 1;
  for (Element x = 0; x < n; ++x) {
    Element s = g.mul(x, x);
    if (!in_sq[s]) {
      in_sq[s] = 1;
      sq.push_back(s);
    }
  }
  for (std::size_t i = 0; i < sq.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Element p : {g.mul(sq[i], sq[j]), g.mul(sq[j], sq[i])})
        if (!in_sq[p]) {
          in_sq[p] = 1;
          sq.push_back(p);
        }

  // Coset representatives of G / ⟨squares⟩, which is elementary abelian.
  std::vector<std::size_t> coset(n, n);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] != n) continue;
    for (Element h : sq) coset[g.mul(x, h)] = reps.size();
    reps.push_back(x);
  }

  // Greedy F₂-basis of the quotient; coords[c] is a bitmask over the basis.
  std::vector<std::size_t> basis;
  std::vector<std::uint64_t> coords(reps.size(), ~std::uint64_t{0});
  coords[coset[g.identity()]] = 0;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    if (coords[c] != ~std::uint64_t{0}) continue;
    const std::uint64_t bit = std::uint64_t{1} << basis.size();
    basis.push_back(c);
    for (std::size_t d = 0; d < reps.size(); ++d)
      if (coords[d] != ~std::uint64_t{0} && !(coords[d] & bit)) {
        std::size_t e = coset[g.mul(reps[d], reps[c])];
        coords[e] = coords[d] | bit;
      }
  }
  if (basis.size() > 20) throw LimitError("too many characters to enumerate");

  std::vector<std::vector<int>> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << basis.size()); ++choice) {
    std::vector<int> chi(n);
    for (Element x = 0; x < n; ++x)
      chi[x] = std::popcount(coords[coset[x]] & choice) % 2 ? -1 : 1;
    out.push_back(std::move(chi));
  }
  return out;
}

std::vector<std::vector<int>> admissible_characters(const FiniteGroup& g) {
  const auto invs = g.involutions();
  std::vector<std::vector<int>> out;
  for (auto& chi : group_characters(g)) {
    bool ok = true;
    for (Element s : invs) ok = ok && chi[s] == -1;
    if (ok) out.push_back(std::move(chi));
  }
  return out;
}

SignedAction default_action(FiniteGroup g) {
  auto chars = admissible_characters(g);
  if (chars.empty())
    throw ValidationError("group has no character that is -1 on every involution");
  return SignedAction(std::move(g), std::move(chars.front()));
}

SignedAction action_from_signs(FiniteGroup g, std::string_view signs) {
  if (signs.size() != g.order())
    throw ValidationError("character string needs " + std::to_string(g.order()) +
                          " signs, got " + std::to_string(signs.size()));
  std::vector<int> chi;
  for (char c : signs) {
    if (c == '+')
      chi.push_back(1);
    else if (c == '-')
      chi.push_back(-1);
    else
      throw ValidationError("character string may contain only '+' and '-'");
  }
  return SignedAction(std::move(g), std::move(chi));
}

SemidirectGroup build_semidirect(std::size_t n, SignedAction action) {
  if (n == 0) throw ValidationError("kernel modulus must be positive");
  if (n % 2 == 0)
    throw ValidationError(
        "kernel modulus " + std::to_string(n) +
        " is even; the kernel models a torsion-free group, and only odd n "
        "keep 2a = 0 => a = 0");
  if (n * action.base().order() > Limits{}.max_order)
    throw LimitError("semidirect product exceeds the order cap");
  return SemidirectGroup(n, std::move(action));
}

Element SemidirectGroup::mul(Element x, Element y) const noexcept {
  const std::size_t a = kernel_part(x), b = kernel_part(y);
  const Element g = group_part(x), h = group_part(y);
  const std::size_t twisted = action_.sign(g) == 1 ? b : (n_ - b) % n_;
  return index((a + twisted) % n_, base().mul(g, h));
}

Element SemidirectGroup::inverse(Element x) const noexcept {
  // (a, g)⁻¹ = (−χ(g⁻¹)·a, g⁻¹)
  const std::size_t a = kernel_part(x);
  const Element gi = base().inverse(group_part(x));
  const std::size_t neg = (n_ - a) % n_;
  return index(action_.sign(gi) == 1 ? neg : a, gi);
}

FiniteGroup SemidirectGroup::to_finite_group() const {
  const std::size_t n = order();
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (Element x = 0; x < n; ++x) {
    labels[x] = "(" + std::to_string(kernel_part(x)) + "," +
                base().label(group_part(x)) + ")";
    for (Element y = 0; y < n; ++y) table[x * n + y] = mul(x, y);
  }
  return FiniteGroup(n, std::move(table), identity(), std::move(labels),
                     FiniteGroup::Check::skip_associativity);
}

SignedAction SemidirectGroup::lifted_action() const {
  auto g = to_finite_group();
  std::vector<int> chi(order());
  for (Element x = 0; x < order(); ++x) chi[x] = action_.sign(group_part(x));
  return SignedAction(std::move(g), std::move(chi));
}

SemidirectInvolutions semidirect_involutions(const SemidirectGroup& sd) {
  const Element e = sd.identity();
  std::vector<Element> invs;
  for (Element x = 0; x < sd.order(); ++x)
    if (x != e && sd.mul(x, x) == e) invs.push_back(x);
  std::sort(invs.begin(), invs.end(), [&sd](Element x, Element y) {
    return std::pair{sd.group_part(x), sd.kernel_part(x)} <
           std::pair{sd.group_part(y), sd.kernel_part(y)};
  });

  std::vector<Element> index_of(sd.order(), 0);
  for (Element i = 0; i < invs.size(); ++i) index_of[invs[i]] = i;

  const std::size_t m = invs.size();
  std::vector<Element> table(m * m);
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < m; ++j) {
      Element c = sd.mul(sd.mul(invs[i], invs[j]), sd.inverse(invs[i]));
      table[i * m + j] = index_of[c];
    }

  SemidirectInvolutions out;
  out.quandle = FiniteQuandle(m, std::move(table));
  for (Element x : invs) out.labels.emplace_back(sd.kernel_part(x), sd.group_part(x));
  return out;
}

std::pair<std::size_t, Element> involution_conjugation_formula(
    const SemidirectGroup& sd, std::pair<std::size_t, Element> x,
    std::pair<std::size_t, Element> y) {
  const std::size_t n = sd.modulus();
  const auto& g = sd.base();
  return {(2 * x.first + n - y.first % n) % n, g.mul(g.mul(x.second, y.second), x.second)};
}

LaurentReport verify_laurent(std::size_t n, const SignedAction& action) {
  const auto sd = build_semidirect(n, action);
  const auto inv = inv_quandle(action.base());
  if (inv.to_group.empty())
    throw ValidationError("the group has no involutions");

  const auto model = semidirect_involutions(sd);
  const auto target = product(inv.quandle, dihedral_quandle(n));

  std::vector<Element> inv_index(action.base().order(), 0);
  for (Element i = 0; i < inv.to_group.size(); ++i) inv_index[inv.to_group[i]] = i;

  LaurentReport report;
  report.n = n;
  report.involution_count = inv.to_group.size();
  report.iso.map.resize(model.labels.size());
  for (std::size_t i = 0; i < model.labels.size(); ++i) {
    auto [a, s] = model.labels[i];
    report.iso.map[i] = static_cast<Element>(inv_index[s] * n + a);
  }

  // Bijective: sizes agree and no image repeats.
  bool bijective = model.quandle.size() == target.size();
  std::vector<char> hit(target.size(), 0);
  for (Element v : report.iso.map) {
    if (v >= target.size() || hit[v]) bijective = false;
    else hit[v] = 1;
  }

  const auto m = static_cast<Element>(model.quandle.size());
  for (Element x = 0; x < m && bijective; ++x)
    for (Element y = 0; y < m; ++y) {
      ++report.pairs_checked;
      const auto& f = report.iso.map;
      if (f[model.quandle.op(x, y)] != target.op(f[x], f[y])) {
        report.mismatch = std::pair{x, y};
        break;
      }
    }
  report.iso_verified = bijective && !report.mismatch;
  return report;
}

FiniteQuandle iterated_laurent(std::size_t n1, std::size_t n2, const FiniteGroup& g) {
  for (std::size_t n : {n1, n2})
    if (n == 0 || n % 2 == 0)
      throw ValidationError("iterated_laurent needs odd moduli");
  return product(product(inv_quandle(g).quandle, dihedral_quandle(n1)),
                 dihedral_quandle(n2));
}

}  // namespace kei
