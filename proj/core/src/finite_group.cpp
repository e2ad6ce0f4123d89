#include "kei/finite_group.hpp"

#include <algorithm>

#include "kei/error.hpp"

namespace kei {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table,
                         Element identity, std::vector<std::string> labels,
                         Check check)
    : order_(order), table_(std::move(table)), identity_(identity) {
  if (order_ == 0) throw ValidationError("a group has at least one element");
  if (table_.size() != order_ * order_) {
    throw ValidationError("group table has " + std::to_string(table_.size()) +
                          " entries, expected " +
                          std::to_string(order_ * order_));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= order_) {
      throw ValidationError("group table entry (" +
                            std::to_string(i / order_) + "," +
                            std::to_string(i % order_) + ") = " +
                            std::to_string(table_[i]) + " is out of range");
    }
  }
  if (identity_ >= order_) throw ValidationError("identity index out of range");
  for (Element g = 0; g < order_; ++g) {
    if (mul(identity_, g) != g || mul(g, identity_) != g) {
      throw ValidationError("element " + std::to_string(identity_) +
                            " is not an identity (fails at " +
                            std::to_string(g) + ")");
    }
  }

  inverse_.assign(order_, static_cast<Element>(order_));
  std::vector<char> seen(order_);
  for (Element a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < order_; ++b) {
      Element c = mul(a, b);
      if (seen[c]) {
        throw ValidationError("row " + std::to_string(a) +
                              " of the group table is not a permutation");
      }
      seen[c] = 1;
      if (c == identity_) inverse_[a] = b;
    }
  }
  for (Element a = 0; a < order_; ++a) {
    if (mul(inverse_[a], a) != identity_) {
      throw ValidationError("element " + std::to_string(a) +
                            " has no two-sided inverse");
    }
  }

  if (check == Check::full && !is_associative()) {
    throw ValidationError("group table is not associative");
  }

  if (labels.empty()) {
    labels_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) labels_.push_back(std::to_string(i));
  } else if (labels.size() != order_) {
    throw ValidationError("label count does not match group order");
  } else {
    labels_ = std::move(labels);
  }
}

std::optional<Element> FiniteGroup::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_associative() const noexcept {
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) {
      Element ab = mul(a, b);
      for (Element c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  return true;
}

std::vector<Element> FiniteGroup::involutions() const {
  std::vector<Element> out;
  for (Element s = 0; s < order_; ++s)
    if (s != identity_ && mul(s, s) == identity_) out.push_back(s);
  return out;
}

}  // namespace kei
