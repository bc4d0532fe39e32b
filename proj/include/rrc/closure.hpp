#pragma once

#include <optional>
#include <vector>

#include "rrc/ideal.hpp"
#include "rrc/semigroup.hpp"

namespace rrc {

/// An interior generator outside the integral closure of <x^{a_n}, y^{b_0}>.
/// deficit = a_n·b_0 - (a·b_0 + b·a_n) > 0.
struct GeneratorDeficit {
  LatticePoint generator;
  Exponent deficit = 0;

  friend bool operator==(const GeneratorDeficit&, const GeneratorDeficit&) = default;
};

struct HypothesisVerdict {
  bool ok = true;
  std::vector<GeneratorDeficit> failures;

  friend bool operator==(const HypothesisVerdict&, const HypothesisVerdict&) = default;
};

/// The closure algorithm is only valid when every generator lies in
/// I(a_n, b_0); it refuses other inputs with this error.
class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(HypothesisVerdict verdict, std::optional<std::size_t> power = std::nullopt);

  const HypothesisVerdict& verdict() const { return verdict_; }
  /// Set when the violation was found on a power I^l rather than on I.
  std::optional<std::size_t> power() const { return power_; }

 private:
  HypothesisVerdict verdict_;
  std::optional<std::size_t> power_;
};

enum class QuickCheck { ProvedRatliffRush, Inconclusive };

struct ClosureReport {
  PrimaryStaircase input;
  HypothesisVerdict hypothesis;
  PointSet s;
  PointSet t;
  MonomialIdeal ideal_s;
  MonomialIdeal ideal_t;
  MonomialIdeal closure;
  bool is_ratliff_rush = false;
  Exponent reduction_bound = 0;
  QuickCheck quick_check = QuickCheck::Inconclusive;

  friend bool operator==(const ClosureReport&, const ClosureReport&) = default;
};

/// x^a y^b ∈ I(a_n, b_0) iff a·b_0 + b·a_n >= a_n·b_0, evaluated in exact
/// integers for each interior generator.
HypothesisVerdict check_hypothesis(const PrimaryStaircase& ideal);

/// Ratliff-Rush closure as I_S ∩ I_T. Throws HypothesisViolated when the
/// hypothesis check fails.
ClosureReport ratliff_rush_closure(const PrimaryStaircase& ideal);

bool is_ratliff_rush(const PrimaryStaircase& ideal);

/// Sufficient conditions for I to be Ratliff-Rush, over interior generators:
///  (1) a_i >= a_n/2 for all i, or b_i >= b_0/2 for all i;
///  (2) for all i, j: a_i + a_j >= a_n, or a_i + a_j = a_k and
///      (b_i + b_j) mod b_0 >= b_k.
/// Never concludes "not Ratliff-Rush".
QuickCheck quick_sufficient_check(const PrimaryStaircase& ideal);

/// 2·max(q_S, q_T), an upper bound on the Ratliff-Rush reduction number.
Exponent reduction_bound(const PrimaryStaircase& ideal);

const char* to_string(QuickCheck q);

}  // namespace rrc
