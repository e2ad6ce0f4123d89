#include <algorithm>
#include <thread>

#include "kei/error.hpp"
#include "kei/finite_quandle.hpp"

namespace kei {

FiniteQuandle::FiniteQuandle(std::size_t n, std::vector<Element> table,
                             std::size_t max_order)
    : n_(n), table_(std::move(table)) {
  if (n_ > max_order) {
    throw LimitError("quandle order " + std::to_string(n_) +
                     " exceeds the cap " + std::to_string(max_order));
  }
  if (table_.size() != n_ * n_) {
    throw ValidationError("table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(n_ * n_));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= n_) {
      throw ValidationError("entry (" + std::to_string(i / n_) + "," +
                            std::to_string(i % n_) + ") = " +
                            std::to_string(table_[i]) + " is out of range");
    }
  }
}

namespace {

std::optional<DistributivityFailure> first_failure_in(const FiniteQuandle& q,
                                                      Element x_begin,
                                                      Element x_end) {
  const auto n = static_cast<Element>(q.size());
  for (Element x = x_begin; x < x_end; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = q.op(x, y);
      for (Element z = 0; z < n; ++z)
        if (q.op(x, q.op(y, z)) != q.op(xy, q.op(x, z)))
          return DistributivityFailure{x, y, z};
    }
  return std::nullopt;
}

// Partitions the x range over worker threads when the cube is large enough to
// pay for them. The least witness over all partitions is the global least
// witness because partitions are contiguous in x.
std::optional<DistributivityFailure> first_failure(const FiniteQuandle& q) {
  const auto n = static_cast<Element>(q.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (n < 128 || hw == 1) return first_failure_in(q, 0, n);

  const unsigned parts = std::min<unsigned>(hw, n);
  std::vector<std::optional<DistributivityFailure>> found(parts);
  {
    std::vector<std::jthread> workers;
    for (unsigned p = 0; p < parts; ++p) {
      auto begin = static_cast<Element>(std::size_t{n} * p / parts);
      auto end = static_cast<Element>(std::size_t{n} * (p + 1) / parts);
      workers.emplace_back(
          [&q, &found, p, begin, end] { found[p] = first_failure_in(q, begin, end); });
    }
  }
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

void require_rack(const FiniteQuandle& q, const char* op) {
  if (!check_rack(q))
    throw ContractError(std::string(op) + " requires a rack");
}

}  // namespace

RackReport check_rack(const FiniteQuandle& q) {
  const auto n = static_cast<Element>(q.size());
  std::vector<char> seen(n);
  for (Element x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element v : q.row(x)) {
      if (seen[v]) return {false, NonBijectiveRow{x}};
      seen[v] = 1;
    }
  }
  if (auto failure = first_failure(q)) return {false, *failure};
  return {};
}

QuandleReport check_quandle(const FiniteQuandle& q) {
  require_rack(q, "check_quandle");
  for (Element x = 0; x < q.size(); ++x)
    if (q.op(x, x) != x) return {false, x};
  return {};
}

InvolutoryReport check_involutory(const FiniteQuandle& q) {
  require_rack(q, "check_involutory");
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      if (q.op(x, q.op(x, y)) != y) return {false, std::pair{x, y}};
  return {};
}

Permutation nat_automorphism(const FiniteQuandle& q) {
  require_rack(q, "nat_automorphism");
  Permutation p(q.size());
  for (Element x = 0; x < q.size(); ++x) p[x] = q.op(x, x);
  return p;
}

}  // namespace kei
