#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "rrc/ideal.hpp"
#include "rrc/semigroup.hpp"

namespace rrc {

// Ground truth for the closure engine. Nothing here calls into the S/T
// enumeration or the closure engine except powers_rr_check, whose job is to
// run the engine on every power.

/// steps[l-1] = I^{l+1} : I^l for l = 1..max_power.
struct ColonChain {
  std::vector<MonomialIdeal> steps;
  /// Smallest power l < max_power from which every later step equals step l,
  /// if the tail of the chain repeated at all. Diagnostic only: a repeat is
  /// not a proof that the chain has reached its union.
  std::optional<std::size_t> stabilized_at;
};

/// Computes every step up to max_power; never exits early on a repeat.
ColonChain colon_chain(const MonomialIdeal& ideal, std::size_t max_power);

/// Terminal step of the colon chain at l = 2·max(q_S, q_T). Throws
/// HypothesisViolated when the 2q bound is not available.
MonomialIdeal rr_closure_oracle(const PrimaryStaircase& ideal);

/// S and T computed straight from the tuple definition:
/// (α, β) with α <= a_n, 0 <= β <= b_0 and a tuple λ_0..λ_n of length l >= 1
/// with Σλ_i(a_i, b_i) = (α, β + (l-1)·b_0); mirrored for T. Tuples are
/// enumerated one by one without sharing partial states. Works whether or
/// not the integral-closure hypothesis holds.
struct DefinitionalShadows {
  std::vector<LatticePoint> s_points;
  std::vector<LatticePoint> t_points;
  MonomialIdeal ideal_s;
  MonomialIdeal ideal_t;
};
DefinitionalShadows shadows_by_definition(const PrimaryStaircase& ideal);

enum class DecompositionMode {
  /// Requires the hypothesis and l >= max(q_S, q_T).
  Gated,
  /// Evaluates both sides for any l, hypothesis or not.
  Diagnostic,
};

/// I^l == y^{b_0(l-1)} I_S + x^{a_n(l-1)} I_T + x^{a_n}y^{b_0} (I^l : x^{a_n}y^{b_0})
bool decomposition_check(const PrimaryStaircase& ideal, std::size_t l,
                         DecompositionMode mode = DecompositionMode::Gated);

/// Integral closure of <x^c, y^d>: generators x^i y^{ceil((c-i)d/c)}, i = 0..c.
MonomialIdeal integral_closure_box(Exponent c, Exponent d);

/// Whether I^l is Ratliff-Rush for l = 1..max_power. Throws
/// HypothesisViolated (with the power set) if some I^l fails the hypothesis.
std::vector<bool> powers_rr_check(const PrimaryStaircase& ideal, std::size_t max_power);

struct RandomIdealOptions {
  Exponent max_corner = 30;
  std::size_t max_generators = 6;
};

/// Draws corners a_n, b_0 in [1, max_corner], then up to max_generators - 2
/// interior points uniformly from {0 < a < a_n, 0 < b < b_0, a·b_0 + b·a_n >= a_n·b_0},
/// then minimalizes. The result satisfies the hypothesis by construction.
/// The draw sequence depends only on the engine state (no std distributions).
PrimaryStaircase random_hypothesis_ideal(std::mt19937_64& rng, const RandomIdealOptions& options = {});

/// The fixed seed used by the randomized verification suite.
inline constexpr std::uint64_t kSuiteSeed = 20240611;

}  // namespace rrc
