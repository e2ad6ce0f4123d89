#pragma once

#include <compare>
#include <string>

#include "kei/free_kei.hpp"
#include "kei/word.hpp"

namespace kei {

/// Element w·ρ^ε of F₂{ρ} ⋉ F₂{σ, τ}, where conjugation by ρ swaps σ and τ.
/// Words are exact reduced COXETER words over {σ, τ} (generators 0 and 1).
struct EVElement {
  int rho = 0;  // ε ∈ {0, 1}
  ReducedWord word{WordMode::coxeter};

  friend bool operator==(const EVElement&, const EVElement&) = default;
  friend std::strong_ordering operator<=>(const EVElement& a, const EVElement& b) {
    if (auto c = a.rho <=> b.rho; c != 0) return c;
    return a.word <=> b.word;
  }
};

/// Labels σ, τ for the normal subgroup.
const Alphabet& ev_word_alphabet();
/// Labels ρ, σ, τ for the three involutive generators.
const Alphabet& ev_generator_alphabet();

EVElement ev_identity();
EVElement ev_rho();
EVElement ev_sigma();
EVElement ev_tau();

/// The letter swap σ ↔ τ.
ReducedWord ev_swap(const ReducedWord& w);

/// (ε, w)(δ, v) = (ε + δ mod 2, w · α^ε(v))
EVElement ev_multiply(const EVElement& x, const EVElement& y);
EVElement ev_inverse(const EVElement& x);
/// x · y · x⁻¹
EVElement ev_conjugate(const EVElement& x, const EVElement& y);
/// x ≠ e and x² = e
bool ev_is_involution(const EVElement& x);

/// "σ τ σ", "ρ", "σ τ ρ"
std::string format_ev(const EVElement& x);

/// Probes the quandle generated by ρ, σ, τ for relations among FQ₂{ρ,σ,τ}
/// canonical forms of depth <= depth.
ProbeResult<EVElement> ev_freeness_probe(std::size_t depth = 4,
                                         const Limits& limits = {});

}  // namespace kei
