#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the code paths they check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "kei/finite_group.hpp"
#include "kei/finite_quandle.hpp"
#include "kei/word.hpp"

namespace kei::oracle {

using Table = std::vector<std::vector<std::size_t>>;

inline Table to_rows(const FiniteQuandle& q) {
  Table t(q.size(), std::vector<std::size_t>(q.size()));
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y) t[x][y] = q.table()[x * q.size() + y];
  return t;
}

inline bool is_rack(const Table& t) {
  const std::size_t n = t.size();
  for (const auto& row : t) {
    auto sorted = row;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != i) return false;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[x][t[y][z]] != t[t[x][y]][t[x][z]]) return false;
  return true;
}

inline bool is_quandle(const Table& t) {
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t[x][x] != x) return false;
  return is_rack(t);
}

inline bool is_involutory(const Table& t) {
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y)
      if (t[x][t[x][y]] != y) return false;
  return is_rack(t);
}

/// Counts all maps src → tgt satisfying the morphism law by trying every one
/// of |tgt|^|src| functions.
inline std::size_t brute_hom_count(const Table& src, const Table& tgt) {
  const std::size_t n = src.size(), m = tgt.size();
  if (n == 0) return 1;
  if (m == 0) return 0;
  std::vector<std::size_t> f(n, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = f[src[x][y]] == tgt[f[x]][f[y]];
    count += ok;
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return count;
}

inline bool brute_isomorphic(const Table& a, const Table& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = 0; y < a.size() && ok; ++y) ok = p[a[x][y]] == b[p[x]][p[y]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Connected components of y ~ x ▷ y by repeated graph search.
inline std::size_t orbit_count(const Table& t) {
  const std::size_t n = t.size();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      std::size_t y = stack.back();
      stack.pop_back();
      for (std::size_t x = 0; x < n; ++x) {
        // edges y to x▷y in both directions
        for (std::size_t z : {t[x][y]}) {
          if (comp[z] < 0) {
            comp[z] = c;
            stack.push_back(z);
          }
        }
        for (std::size_t w = 0; w < n; ++w)
          if (t[x][w] == y && comp[w] < 0) {
            comp[w] = c;
            stack.push_back(w);
          }
      }
    }
    ++c;
  }
  return static_cast<std::size_t>(c);
}

// Permutations as explicit image vectors, composed as (p·q)(x) = p(q(x)).
using Perm = std::vector<int>;

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return r;
}

/// All permutations of k points in lexicographic one-line order.
inline std::vector<Perm> all_perms(int k) {
  std::vector<Perm> out;
  Perm p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Reduces by repeatedly cancelling a randomly chosen adjacent pair, the
/// opposite of the stack-based single pass used by the library.
inline std::vector<Letter> random_order_reduce(std::vector<Letter> w, WordMode mode,
                                               std::mt19937& rng) {
  auto cancels = [mode](const Letter& a, const Letter& b) {
    return a.gen == b.gen && (mode == WordMode::coxeter || a.inverse != b.inverse);
  };
  if (mode == WordMode::coxeter)
    for (auto& l : w) l.inverse = false;
  while (true) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (cancels(w[i], w[i + 1])) spots.push_back(i);
    if (spots.empty()) return w;
    std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
            w.begin() + static_cast<std::ptrdiff_t>(i + 2));
  }
}

/// Lists every COXETER word (as generator sequences with no equal neighbours)
/// of length <= radius by recursion, independent of ball_enumerate.
inline void coxeter_words(std::size_t rank, std::size_t radius,
                          std::vector<Generator>& prefix,
                          std::vector<std::vector<Generator>>& out) {
  out.push_back(prefix);
  if (prefix.size() == radius) return;
  for (Generator g = 0; g < rank; ++g) {
    if (!prefix.empty() && prefix.back() == g) continue;
    prefix.push_back(g);
    coxeter_words(rank, radius, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<Generator>> coxeter_words(std::size_t rank,
                                                        std::size_t radius) {
  std::vector<Generator> prefix;
  std::vector<std::vector<Generator>> out;
  coxeter_words(rank, radius, prefix, out);
  return out;
}

}  // namespace kei::oracle
