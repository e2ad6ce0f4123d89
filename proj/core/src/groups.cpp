#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "kei/error.hpp"
#include "kei/finite_group.hpp"
#include "kei/limits.hpp"

namespace kei {

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<char> done(perm.size());
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(perm[x]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::optional<std::size_t> parse_size(std::string_view digits) {
  std::size_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    return std::nullopt;
  return value;
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup(n, std::move(table), 0, {},
                     FiniteGroup::Check::skip_associativity);
}

FiniteGroup symmetric_group(std::size_t k) {
  if (k == 0 || k > 6)
    throw ValidationError("symmetric group degree must be in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index.emplace(perms[i], static_cast<Element>(i));

  const std::size_t n = perms.size();
  std::vector<Element> table(n * n);
  std::vector<int> composed(k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < k; ++x)
        composed[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      table[a * n + b] = index.at(composed);
    }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& perm : perms) labels.push_back(cycle_notation(perm));
  return FiniteGroup(n, std::move(table), 0, std::move(labels),
                     FiniteGroup::Check::skip_associativity);
}

FiniteGroup dihedral_group(std::size_t m) {
  if (m == 0) throw ValidationError("dihedral group needs m >= 1");
  const std::size_t n = 2 * m;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t i = x % m, f = x / m, j = y % m, g = y / m;
      // r^i s^f · r^j s^g = r^(i ± j) s^(f+g)
      std::size_t rot = f == 0 ? (i + j) % m : (i + m - j) % m;
      table[x * n + y] = static_cast<Element>(rot + m * ((f + g) % 2));
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t i = 0; i < m; ++i) {
      std::string r = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
      labels.push_back(f ? (r.empty() ? "s" : r + " s") : (r.empty() ? "e" : r));
    }
  return FiniteGroup(n, std::move(table), 0, std::move(labels),
                     FiniteGroup::Check::skip_associativity);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + g.label(static_cast<Element>(x / nh)) + "," +
                h.label(static_cast<Element>(x % nh)) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      Element a = g.mul(static_cast<Element>(x / nh), static_cast<Element>(y / nh));
      Element b = h.mul(static_cast<Element>(x % nh), static_cast<Element>(y % nh));
      table[x * n + y] = static_cast<Element>(a * nh + b);
    }
  }
  Element id = static_cast<Element>(g.identity() * nh + h.identity());
  return FiniteGroup(n, std::move(table), id, std::move(labels),
                     FiniteGroup::Check::skip_associativity);
}

FiniteGroup named_group(std::string_view name) {
  if (name == "v4") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name.size() >= 2) {
    if (auto size = parse_size(name.substr(1))) {
      const bool doubled = name.front() == 'd';
      if (*size > Limits{}.max_order / (doubled ? 2 : 1))
        throw LimitError("group '" + std::string(name) + "' exceeds the order cap");
      switch (name.front()) {
        case 'z':
          if (*size >= 1) return cyclic_group(*size);
          break;
        case 's':
          if (*size >= 1 && *size <= 6) return symmetric_group(*size);
          break;
        case 'd':
          if (*size >= 1) return dihedral_group(*size);
          break;
        default:
          break;
      }
    }
  }
  throw ValidationError("unknown group name '" + std::string(name) +
                        "' (expected z<n>, s<k>, d<m> or v4)");
}

}  // namespace kei
