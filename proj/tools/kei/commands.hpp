#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kei/kei.hpp"

namespace kei::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFails = 1;
inline constexpr int kUsageError = 2;

/// Limits with KEI_MAX_ORDER, KEI_MAX_WORD_LENGTH and KEI_MAX_BALL_SIZE
/// applied. Throws ValidationError for values that are not positive integers.
Limits limits_from_environment();

/// A quandle from a builtin name or a table file. Builtins:
///   dihedral:N  trivial:N  conj:G  core:G  inv:G  swap3
/// where G is a group name (z<n>, s<k>, d<m>, v4) and swap3 is the
/// three-element quandle {x, y, z} in which λ_x swaps y and z.
FiniteQuandle resolve_quandle(const std::string& spec, const Limits& limits);

/// A group from a builtin name or a table file.
FiniteGroup resolve_group(const std::string& spec, const Limits& limits);

// ---------------------------------------------------------------------------
// Reports. Each has a JSON form that round-trips through from_json.

struct AxiomResult {
  std::string axiom;  // "rack", "quandle" or "involutory"
  bool holds = true;
  std::vector<Element> witness;
  std::string detail;
  friend bool operator==(const AxiomResult&, const AxiomResult&) = default;
};

struct CheckOutcome {
  std::size_t n = 0;
  bool ok = true;
  std::vector<AxiomResult> axioms;
  friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

struct LaurentOutcome {
  std::string theorem = "laurent";
  std::size_t n = 0;
  std::string group;
  std::vector<int> character;
  std::size_t involutions = 0;
  bool iso_verified = false;
  std::size_t pairs_checked = 0;
  /// Label pairs [(a,s), (s,a)], one per involution of Z/n ⋊ G.
  std::vector<std::vector<std::string>> iso;
  friend bool operator==(const LaurentOutcome&, const LaurentOutcome&) = default;
};

struct ProbeOutcome {
  std::string model;
  std::size_t depth = 0;  // search bound
  std::size_t elements_checked = 0;
  bool relation_found = false;
  std::size_t relation_depth = 0;
  std::string lhs, rhs, value;
  friend bool operator==(const ProbeOutcome&, const ProbeOutcome&) = default;
};

struct OrbitsOutcome {
  std::size_t n = 0;
  std::size_t count = 0;
  std::vector<std::vector<Element>> classes;
  friend bool operator==(const OrbitsOutcome&, const OrbitsOutcome&) = default;
};

struct HomCountOutcome {
  std::size_t source_size = 0, target_size = 0, count = 0;
  std::vector<std::vector<Element>> morphisms;  // only when listing
  friend bool operator==(const HomCountOutcome&, const HomCountOutcome&) = default;
};

struct EnumerateOutcome {
  std::string kind;  // coxeter, free or fiq
  std::size_t rank = 0, radius = 0;
  std::vector<std::string> elements;
  friend bool operator==(const EnumerateOutcome&, const EnumerateOutcome&) = default;
};

struct EnvelopeOutcome {
  std::vector<std::string> generators;
  std::size_t a = 0, b = 0, depth = 0;
  bool found = false;
  std::size_t states_explored = 0;
  bool state_cap_hit = false;
  nlohmann::json certificate;  // null when nothing was found
  friend bool operator==(const EnvelopeOutcome&, const EnvelopeOutcome&) = default;
};

struct VerifyOutcome {
  bool valid = false;
  std::size_t steps = 0;
  friend bool operator==(const VerifyOutcome&, const VerifyOutcome&) = default;
};

struct IsoOutcome {
  bool isomorphic = false;
  std::vector<Element> map;
  friend bool operator==(const IsoOutcome&, const IsoOutcome&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AxiomResult, axiom, holds, witness, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckOutcome, n, ok, axioms)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LaurentOutcome, theorem, n, group, character,
                                   involutions, iso_verified, pairs_checked, iso)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ProbeOutcome, model, depth, elements_checked,
                                   relation_found, relation_depth, lhs, rhs, value)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OrbitsOutcome, n, count, classes)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HomCountOutcome, source_size, target_size, count,
                                   morphisms)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EnumerateOutcome, kind, rank, radius, elements)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EnvelopeOutcome, generators, a, b, depth, found,
                                   states_explored, state_cap_hit, certificate)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyOutcome, valid, steps)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(IsoOutcome, isomorphic, map)

// ---------------------------------------------------------------------------
// Commands. Each returns its report; run() maps reports to exit codes.

/// With no flags only the rack axioms are checked. --quandle adds
/// idempotence, --involutory adds idempotence and x ▷ (x ▷ y) = y.
CheckOutcome cmd_check(const FiniteQuandle& q, bool quandle, bool involutory);

LaurentOutcome cmd_laurent(std::size_t n, const std::string& group_spec,
                           const std::optional<std::string>& signs, const Limits& limits);

ProbeOutcome cmd_freeprobe_ev(std::size_t depth, const Limits& limits);
ProbeOutcome cmd_freeprobe_file(const FiniteQuandle& q, const std::string& model,
                                const std::vector<Element>& generators,
                                std::size_t depth, const Limits& limits);

OrbitsOutcome cmd_orbits(const FiniteQuandle& q);

HomCountOutcome cmd_homcount(const FiniteQuandle& src, const FiniteQuandle& tgt,
                             std::optional<std::size_t> list);

EnumerateOutcome cmd_enumerate(const std::string& kind, std::size_t rank,
                               std::size_t radius, const Limits& limits);

EnvelopeOutcome cmd_envelope(const FiniteQuandle& q,
                             const std::optional<std::vector<std::string>>& names,
                             std::size_t a, std::size_t b, const SearchOptions& options);

VerifyOutcome cmd_verify(const FiniteQuandle& q,
                         const std::optional<std::vector<std::string>>& names,
                         const nlohmann::json& certificate);

IsoOutcome cmd_iso(const FiniteQuandle& a, const FiniteQuandle& b);

/// Parses args (without the program name), runs one subcommand and writes
/// the report to out and diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kei::cli
