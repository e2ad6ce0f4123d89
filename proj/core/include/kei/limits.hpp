#pragma once

#include <cstddef>

namespace kei {

/// Size caps. Every exhaustive routine checks these up front and throws
/// LimitError instead of truncating.
struct Limits {
  std::size_t max_order = 4096;         // elements of a finite quandle or group
  std::size_t max_word_length = 64;     // radius of word and FIQ balls
  std::size_t max_ball_size = 1u << 22; // words produced by one enumeration
};

}  // namespace kei
