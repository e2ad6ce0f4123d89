#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "kei/finite_quandle.hpp"

namespace kei {

namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

// Backtracking over partial maps src → tgt. Every assignment is closed under
// the morphism equation f(x ▷ y) = f(x) ▷ f(y) before the next branch, so a
// branch dies as soon as two forced values disagree.
class HomSearch {
 public:
  using Visit = std::function<bool(const std::vector<Element>&)>;

  HomSearch(const FiniteQuandle& src, const FiniteQuandle& tgt)
      : src_(src), tgt_(tgt), f_(src.size(), kUnset) {}

  void require_bijective(std::vector<std::size_t> src_profile,
                         std::vector<std::size_t> tgt_profile) {
    injective_ = true;
    used_.assign(tgt_.size(), 0);
    src_profile_ = std::move(src_profile);
    tgt_profile_ = std::move(tgt_profile);
  }

  // Calls visit for each complete morphism until it returns false.
  void run(const Visit& visit) {
    if (src_.size() == 0) {
      visit(f_);
      return;
    }
    stopped_ = false;
    branch(visit);
  }

 private:
  bool assign(Element x, Element v) {
    if (f_[x] != kUnset) return f_[x] == v;
    if (injective_) {
      if (used_[v] || src_profile_[x] != tgt_profile_[v]) return false;
      used_[v] = 1;
    }
    f_[x] = v;
    trail_.push_back(x);
    return true;
  }

  bool propagate(std::size_t from) {
    for (std::size_t i = from; i < trail_.size(); ++i) {
      const Element a = trail_[i];
      for (std::size_t j = 0; j <= i; ++j) {
        const Element b = trail_[j];
        if (!assign(src_.op(a, b), tgt_.op(f_[a], f_[b]))) return false;
        if (!assign(src_.op(b, a), tgt_.op(f_[b], f_[a]))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Element x = trail_.back();
      trail_.pop_back();
      if (injective_) used_[f_[x]] = 0;
      f_[x] = kUnset;
    }
  }

  void branch(const Visit& visit) {
    auto next = std::find(f_.begin(), f_.end(), kUnset);
    if (next == f_.end()) {
      if (!visit(f_)) stopped_ = true;
      return;
    }
    const auto x = static_cast<Element>(next - f_.begin());
    for (Element v = 0; v < tgt_.size() && !stopped_; ++v) {
      const std::size_t mark = trail_.size();
      if (assign(x, v) && propagate(mark)) branch(visit);
      undo(mark);
    }
  }

  const FiniteQuandle& src_;
  const FiniteQuandle& tgt_;
  std::vector<Element> f_;
  std::vector<Element> trail_;
  bool injective_ = false;
  bool stopped_ = false;
  std::vector<char> used_;
  std::vector<std::size_t> src_profile_, tgt_profile_;
};

std::vector<std::size_t> cycle_type(std::span<const Element> perm) {
  std::vector<std::size_t> lengths;
  std::vector<char> seen(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

// Isomorphism-invariant description of each element: orbit size, cycle type
// of λ_x, length of the x ▷ x cycle through x, and |{y : y ▷ x = x}|.
std::vector<std::vector<std::size_t>> raw_profiles(const FiniteQuandle& q) {
  const auto part = orbits(q);
  std::vector<std::vector<std::size_t>> out(q.size());
  for (Element x = 0; x < q.size(); ++x) {
    auto& p = out[x];
    p.push_back(part.classes[part.class_of[x]].size());
    std::size_t nat_cycle = 1;
    for (Element y = q.op(x, x); y != x && nat_cycle <= q.size(); y = q.op(y, y))
      ++nat_cycle;
    p.push_back(nat_cycle);
    std::size_t stabilisers = 0;
    for (Element y = 0; y < q.size(); ++y) stabilisers += q.op(y, x) == x;
    p.push_back(stabilisers);
    auto ct = cycle_type(q.row(x));
    p.insert(p.end(), ct.begin(), ct.end());
  }
  return out;
}

}  // namespace

bool is_morphism(const FiniteQuandle& src, const FiniteQuandle& tgt,
                 std::span<const Element> map) {
  if (map.size() != src.size()) return false;
  for (Element v : map)
    if (v >= tgt.size()) return false;
  for (Element x = 0; x < src.size(); ++x)
    for (Element y = 0; y < src.size(); ++y)
      if (map[src.op(x, y)] != tgt.op(map[x], map[y])) return false;
  return true;
}

HomEnumeration enumerate_homs(const FiniteQuandle& src, const FiniteQuandle& tgt,
                              std::optional<std::size_t> limit) {
  HomEnumeration out;
  if (limit && *limit == 0) {
    out.complete = false;
    return out;
  }
  HomSearch search(src, tgt);
  search.run([&](const std::vector<Element>& f) {
    out.morphisms.push_back(QuandleMorphism{f});
    ++out.count;
    if (limit && out.count >= *limit) {
      out.complete = false;
      return false;
    }
    return true;
  });
  return out;
}

std::size_t hom_count(const FiniteQuandle& src, const FiniteQuandle& tgt) {
  std::size_t count = 0;
  HomSearch search(src, tgt);
  search.run([&count](const std::vector<Element>&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<QuandleMorphism> are_isomorphic(const FiniteQuandle& q1,
                                              const FiniteQuandle& q2) {
  if (q1.size() != q2.size()) return std::nullopt;

  auto p1 = raw_profiles(q1), p2 = raw_profiles(q2);
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::map<std::vector<std::size_t>, std::size_t> ids;
  auto intern = [&ids](const std::vector<std::vector<std::size_t>>& raw) {
    std::vector<std::size_t> out;
    out.reserve(raw.size());
    for (const auto& p : raw) out.push_back(ids.emplace(p, ids.size()).first->second);
    return out;
  };
  auto id1 = intern(p1);
  auto id2 = intern(p2);

  std::optional<QuandleMorphism> found;
  HomSearch search(q1, q2);
  search.require_bijective(std::move(id1), std::move(id2));
  search.run([&found](const std::vector<Element>& f) {
    found = QuandleMorphism{f};
    return false;
  });
  return found;
}

}  // namespace kei
