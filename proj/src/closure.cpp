#include "rrc/closure.hpp"

#include <algorithm>
#include <string>

namespace rrc {

namespace {

std::string describe(const HypothesisVerdict& verdict, std::optional<std::size_t> power) {
  std::string msg = "generators outside the integral closure of <x^a_n, y^b_0>";
  if (power) msg += " in power " + std::to_string(*power);
  msg += ":";
  for (const GeneratorDeficit& f : verdict.failures) {
    msg += " " + to_string(f.generator) + " deficit " + std::to_string(f.deficit);
  }
  return msg;
}

void require_hypothesis(const PrimaryStaircase& ideal) {
  HypothesisVerdict verdict = check_hypothesis(ideal);
  if (!verdict.ok) throw HypothesisViolated(std::move(verdict));
}

}  // namespace

HypothesisViolated::HypothesisViolated(HypothesisVerdict verdict, std::optional<std::size_t> power)
    : Error(describe(verdict, power)), verdict_(std::move(verdict)), power_(power) {}

HypothesisVerdict check_hypothesis(const PrimaryStaircase& ideal) {
  const Exponent a_n = ideal.corner_x();
  const Exponent b_0 = ideal.corner_y();
  const Exponent corner_area = checked_mul(a_n, b_0);
  HypothesisVerdict verdict;
  for (const LatticePoint& g : ideal.interior()) {
    const Exponent weight = checked_add(checked_mul(g.a, b_0), checked_mul(g.b, a_n));
    if (weight < corner_area) verdict.failures.push_back({g, corner_area - weight});
  }
  verdict.ok = verdict.failures.empty();
  return verdict;
}

ClosureReport ratliff_rush_closure(const PrimaryStaircase& ideal) {
  HypothesisVerdict verdict = check_hypothesis(ideal);
  if (!verdict.ok) throw HypothesisViolated(std::move(verdict));

  const SemigroupDescription desc(ideal);
  PointSet s = enumerate_s(desc);
  PointSet t = enumerate_t(desc);
  MonomialIdeal ideal_s = MonomialIdeal::from_staircase(s.minimal);
  MonomialIdeal ideal_t = MonomialIdeal::from_staircase(t.minimal);
  MonomialIdeal closure = intersect(ideal_s, ideal_t);
  const bool rr = closure == ideal.ideal();
  return ClosureReport{
      .input = ideal,
      .hypothesis = std::move(verdict),
      .s = std::move(s),
      .t = std::move(t),
      .ideal_s = std::move(ideal_s),
      .ideal_t = std::move(ideal_t),
      .closure = std::move(closure),
      .is_ratliff_rush = rr,
      .reduction_bound = checked_mul(2, q_bounds(desc).max()),
      .quick_check = quick_sufficient_check(ideal),
  };
}

bool is_ratliff_rush(const PrimaryStaircase& ideal) { return ratliff_rush_closure(ideal).is_ratliff_rush; }

QuickCheck quick_sufficient_check(const PrimaryStaircase& ideal) {
  require_hypothesis(ideal);
  const Exponent a_n = ideal.corner_x();
  const Exponent b_0 = ideal.corner_y();
  auto interior = ideal.interior();

  const bool wide_x = std::all_of(interior.begin(), interior.end(),
                                  [&](LatticePoint g) { return checked_mul(2, g.a) >= a_n; });
  const bool wide_y = std::all_of(interior.begin(), interior.end(),
                                  [&](LatticePoint g) { return checked_mul(2, g.b) >= b_0; });
  if (wide_x || wide_y) return QuickCheck::ProvedRatliffRush;

  auto gens = ideal.generators();
  for (std::size_t i = 0; i < interior.size(); ++i) {
    for (std::size_t j = i; j < interior.size(); ++j) {
      const Exponent sum_a = checked_add(interior[i].a, interior[j].a);
      if (sum_a >= a_n) continue;
      auto k = std::lower_bound(gens.begin(), gens.end(), sum_a,
                                [](const LatticePoint& g, Exponent a) { return g.a < a; });
      if (k == gens.end() || k->a != sum_a) return QuickCheck::Inconclusive;
      if (checked_add(interior[i].b, interior[j].b) % b_0 < k->b) return QuickCheck::Inconclusive;
    }
  }
  return QuickCheck::ProvedRatliffRush;
}

Exponent reduction_bound(const PrimaryStaircase& ideal) {
  require_hypothesis(ideal);
  return checked_mul(2, q_bounds(SemigroupDescription(ideal)).max());
}

const char* to_string(QuickCheck q) {
  return q == QuickCheck::ProvedRatliffRush ? "proved-RR" : "inconclusive";
}

}  // namespace rrc
