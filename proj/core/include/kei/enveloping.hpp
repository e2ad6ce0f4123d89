#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kei/finite_quandle.hpp"
#include "kei/free_kei.hpp"
#include "kei/word.hpp"

namespace kei {

/// Generators plus FREE-mode relator words. Relators are stored reduced;
/// trivial relators (reducing to the empty word) are kept so that an
/// enveloping presentation of an n-element quandle has exactly n² of them.
struct PresentedGroup {
  Alphabet generators;
  std::vector<ReducedWord> relators;
};

/// Generators g_x for each element and relators g_x g_y g_x⁻¹ g_{x▷y}⁻¹ for
/// every pair (x, y) in row-major order. Names default to g0, g1, ...
PresentedGroup enveloping_presentation(const FiniteQuandle& q,
                                       std::optional<Alphabet> names = std::nullopt);

/// Presentation on the FIQ ball of the given radius, with a relator for every
/// pair whose product stays inside the ball. Generators are named by their
/// expanded palindromes with spaces removed.
PresentedGroup fiq_ball_presentation(const FreeKei& free, std::size_t radius);

/// Insert rotation `rotation` of relator `relator` (inverted when
/// direction = -1) before letter `position`, then freely reduce.
struct DerivationStep {
  std::size_t position = 0;
  std::size_t relator = 0;
  std::size_t rotation = 0;
  int direction = 1;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct DerivationCertificate {
  ReducedWord start{WordMode::free};
  ReducedWord end{WordMode::free};
  std::vector<DerivationStep> steps;

  friend bool operator==(const DerivationCertificate&, const DerivationCertificate&) = default;
};

struct SearchOptions {
  std::size_t depth = 8;          // maximum number of steps
  std::size_t max_length = 24;    // words longer than this are not explored
  std::size_t max_states = 2'000'000;
};

struct DerivationSearch {
  std::optional<DerivationCertificate> certificate;
  std::size_t states_explored = 0;
  /// True if max_states stopped the search before the depth bound.
  bool state_cap_hit = false;
};

/// Breadth-first search from g_a·g_b⁻¹ to the empty word. Moves insert a
/// rotated relator or its inverse at a position where it cancels at least one
/// letter of the current word; visited words are deduplicated, and words too
/// long to shrink to nothing in the remaining steps are dropped. A returned
/// certificate proves g_a = g_b; its absence proves nothing. Throws
/// ValidationError for depth 0 or out-of-range generators.
DerivationSearch derive_equal(const PresentedGroup& p, Generator a, Generator b,
                              const SearchOptions& options = {});

/// The word produced by applying one step; throws ValidationError if the
/// step is malformed.
ReducedWord apply_step(const PresentedGroup& p, const ReducedWord& w,
                       const DerivationStep& step);

/// Replays every step from start and accepts iff the result equals end.
/// Throws ValidationError for malformed steps (position past the end of the
/// word, unknown relator, rotation out of range, direction not ±1).
bool verify_certificate(const PresentedGroup& p, const DerivationCertificate& cert);

/// `gen <name>` and `rel <word>` lines.
std::string to_text(const PresentedGroup& p);
PresentedGroup parse_presentation(std::string_view text);

nlohmann::json certificate_to_json(const DerivationCertificate& cert,
                                   const Alphabet& generators);
DerivationCertificate certificate_from_json(const nlohmann::json& j,
                                            const Alphabet& generators);

}  // namespace kei
