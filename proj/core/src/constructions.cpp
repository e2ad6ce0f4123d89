#include <numeric>

#include "kei/error.hpp"
#include "kei/finite_quandle.hpp"

namespace kei {

FiniteQuandle conj_quandle(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * n + b] = g.conjugate(a, b);
  return FiniteQuandle(n, std::move(table));
}

InvolutionQuandle inv_quandle(const FiniteGroup& g) {
  InvolutionQuandle out;
  out.to_group = g.involutions();
  const std::size_t n = out.to_group.size();
  std::vector<Element> index_of(g.order(), 0);
  for (Element i = 0; i < n; ++i) index_of[out.to_group[i]] = i;

  std::vector<Element> table(n * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      table[i * n + j] = index_of[g.conjugate(out.to_group[i], out.to_group[j])];
  out.quandle = FiniteQuandle(n, std::move(table));
  return out;
}

FiniteQuandle core_quandle(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      table[a * n + b] = g.mul(g.mul(a, g.inverse(b)), a);
  return FiniteQuandle(n, std::move(table));
}

FiniteQuandle dihedral_quandle(std::size_t n) {
  if (n == 0) throw ValidationError("dihedral quandle needs n >= 1");
  if (n > Limits{}.max_order)
    throw LimitError("dihedral quandle order exceeds the cap");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Element>((2 * a + n - b) % n);
  return FiniteQuandle(n, std::move(table));
}

FiniteQuandle trivial_quandle(std::size_t n) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    std::iota(table.begin() + static_cast<std::ptrdiff_t>(a * n),
              table.begin() + static_cast<std::ptrdiff_t>((a + 1) * n), Element{0});
  return FiniteQuandle(n, std::move(table));
}

FiniteQuandle product(const FiniteQuandle& q1, const FiniteQuandle& q2) {
  const std::size_t n1 = q1.size(), n2 = q2.size(), n = n1 * n2;
  if (n > Limits{}.max_order) throw LimitError("product exceeds the order cap");
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto a = q1.op(static_cast<Element>(x / n2), static_cast<Element>(y / n2));
      auto b = q2.op(static_cast<Element>(x % n2), static_cast<Element>(y % n2));
      table[x * n + y] = static_cast<Element>(a * n2 + b);
    }
  return FiniteQuandle(n, std::move(table));
}

OrbitPartition orbits(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&parent](Element x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element a = find(y), b = find(q.op(x, y));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  OrbitPartition out;
  out.class_of.assign(n, 0);
  std::vector<std::size_t> class_of_root(n, n);
  for (Element x = 0; x < n; ++x) {
    Element r = find(x);
    if (class_of_root[r] == n) {
      class_of_root[r] = out.classes.size();
      out.classes.emplace_back();
    }
    out.class_of[x] = class_of_root[r];
    out.classes[class_of_root[r]].push_back(x);
  }
  return out;
}

std::vector<std::pair<Element, Element>> fixed_pair_report(const FiniteQuandle& q) {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      if (x != y && q.op(x, y) == y) out.emplace_back(x, y);
  return out;
}

}  // namespace kei
