#include "rrc/oracle.hpp"

#include <algorithm>

#include "rrc/closure.hpp"

namespace rrc {

ColonChain colon_chain(const MonomialIdeal& ideal, std::size_t max_power) {
  if (max_power == 0) throw InvalidArgument("colon_chain: max power must be at least 1");
  if (ideal.is_zero()) throw InvalidArgument("colon_chain: ideal must be nonzero");

  ColonChain chain;
  chain.steps.reserve(max_power);
  MonomialIdeal lower = ideal;  // I^l
  for (std::size_t l = 1; l <= max_power; ++l) {
    MonomialIdeal upper = multiply(lower, ideal);
    chain.steps.push_back(colon(upper, lower));
    lower = std::move(upper);
  }

  std::size_t first = chain.steps.size() - 1;
  while (first > 0 && chain.steps[first - 1] == chain.steps.back()) --first;
  if (first + 1 < chain.steps.size()) chain.stabilized_at = first + 1;
  return chain;
}

namespace {

// Independent restatement of the integral-closure gate and of 2q.
bool generators_in_corner_closure(const PrimaryStaircase& ideal) {
  const Exponent a_n = ideal.corner_x();
  const Exponent b_0 = ideal.corner_y();
  for (const LatticePoint& g : ideal.generators()) {
    if (checked_add(checked_mul(g.a, b_0), checked_mul(g.b, a_n)) < checked_mul(a_n, b_0)) return false;
  }
  return true;
}

Exponent oracle_q(const PrimaryStaircase& ideal) {
  Exponent q = 1;
  for (const LatticePoint& g : ideal.interior()) {
    q = std::max({q, ideal.corner_x() / g.a, ideal.corner_y() / g.b});
  }
  return q;
}

// Recursively enumerates tuples over `gens`, bounding Σλ·bounded_axis by
// `bound`. Emits (bounded total, periodic total, length) for every tuple of
// length >= 1.
template <class Emit>
void enumerate_tuples(std::span<const LatticePoint> gens, std::size_t index, LatticePoint total, Exponent length,
                      Exponent bound, bool x_bounded, Emit& emit) {
  if (index == gens.size()) {
    if (length > 0) emit(total, length);
    return;
  }
  const LatticePoint g = gens[index];
  const Exponent step = x_bounded ? g.a : g.b;
  enumerate_tuples(gens, index + 1, total, length, bound, x_bounded, emit);
  if (step == 0) {
    // The pure power on the periodic axis: one extra copy shifts the total and
    // the period count together, so lengths beyond one add nothing.
    enumerate_tuples(gens, index + 1, total + g, length + 1, bound, x_bounded, emit);
    return;
  }
  LatticePoint running = total;
  Exponent count = length;
  while (true) {
    running = running + g;
    ++count;
    if ((x_bounded ? running.a : running.b) > bound) break;
    enumerate_tuples(gens, index + 1, running, count, bound, x_bounded, emit);
  }
}

}  // namespace

DefinitionalShadows shadows_by_definition(const PrimaryStaircase& ideal) {
  const Exponent a_n = ideal.corner_x();
  const Exponent b_0 = ideal.corner_y();
  DefinitionalShadows out;

  auto emit_s = [&](LatticePoint total, Exponent length) {
    const Exponent shift = checked_mul(length - 1, b_0);
    if (total.b < shift) return;
    const Exponent beta = total.b - shift;
    if (beta <= b_0) out.s_points.push_back({total.a, beta});
  };
  auto emit_t = [&](LatticePoint total, Exponent length) {
    const Exponent shift = checked_mul(length - 1, a_n);
    if (total.a < shift) return;
    const Exponent alpha = total.a - shift;
    if (alpha <= a_n) out.t_points.push_back({alpha, total.b});
  };
  enumerate_tuples(ideal.generators(), 0, {0, 0}, 0, a_n, true, emit_s);
  enumerate_tuples(ideal.generators(), 0, {0, 0}, 0, b_0, false, emit_t);

  for (auto* pts : {&out.s_points, &out.t_points}) {
    std::sort(pts->begin(), pts->end());
    pts->erase(std::unique(pts->begin(), pts->end()), pts->end());
  }
  out.ideal_s = MonomialIdeal(out.s_points);
  out.ideal_t = MonomialIdeal(out.t_points);
  return out;
}

MonomialIdeal rr_closure_oracle(const PrimaryStaircase& ideal) {
  if (!generators_in_corner_closure(ideal)) throw HypothesisViolated(check_hypothesis(ideal));
  const Exponent bound = checked_mul(2, oracle_q(ideal));
  return colon_chain(ideal.ideal(), bound).steps.back();
}

bool decomposition_check(const PrimaryStaircase& ideal, std::size_t l, DecompositionMode mode) {
  if (l == 0) throw InvalidArgument("decomposition_check: l must be at least 1");
  if (mode == DecompositionMode::Gated) {
    if (!generators_in_corner_closure(ideal)) throw HypothesisViolated(check_hypothesis(ideal));
    if (l < oracle_q(ideal)) {
      throw InvalidArgument("decomposition_check: l must be at least max(q_S, q_T) = " +
                            std::to_string(oracle_q(ideal)));
    }
  }
  const Exponent a_n = ideal.corner_x();
  const Exponent b_0 = ideal.corner_y();
  const LatticePoint corner{a_n, b_0};

  const MonomialIdeal lhs = power(ideal.ideal(), l);
  const DefinitionalShadows shadows = shadows_by_definition(ideal);
  MonomialIdeal rhs = shift(shadows.ideal_s, {0, checked_mul(b_0, l - 1)});
  rhs = add(rhs, shift(shadows.ideal_t, {checked_mul(a_n, l - 1), 0}));
  rhs = add(rhs, shift(colon(lhs, corner), corner));
  return lhs == rhs;
}

MonomialIdeal integral_closure_box(Exponent c, Exponent d) {
  if (c == 0 || d == 0) throw InvalidArgument("integral_closure_box: c and d must be positive");
  std::vector<LatticePoint> gens;
  gens.reserve(c + 1);
  for (Exponent i = 0; i <= c; ++i) {
    const Exponent num = checked_mul(c - i, d);
    gens.push_back({i, num / c + (num % c != 0 ? 1 : 0)});
  }
  return MonomialIdeal(gens);
}

std::vector<bool> powers_rr_check(const PrimaryStaircase& ideal, std::size_t max_power) {
  std::vector<bool> verdicts;
  MonomialIdeal current = ideal.ideal();
  for (std::size_t l = 1; l <= max_power; ++l) {
    if (l > 1) current = multiply(current, ideal.ideal());
    const PrimaryStaircase staircase(current);
    HypothesisVerdict verdict = check_hypothesis(staircase);
    if (!verdict.ok) throw HypothesisViolated(std::move(verdict), l);
    verdicts.push_back(is_ratliff_rush(staircase));
  }
  return verdicts;
}

namespace {

// Uniform in [0, n) by rejection; identical sequences on every standard library.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t v;
  do v = rng(); while (v >= limit);
  return v % n;
}

}  // namespace

PrimaryStaircase random_hypothesis_ideal(std::mt19937_64& rng, const RandomIdealOptions& options) {
  if (options.max_corner == 0 || options.max_generators < 2) {
    throw InvalidArgument("random_hypothesis_ideal: need max_corner >= 1 and max_generators >= 2");
  }
  const Exponent a_n = 1 + draw_below(rng, options.max_corner);
  const Exponent b_0 = 1 + draw_below(rng, options.max_corner);

  std::vector<LatticePoint> region;
  for (Exponent a = 1; a < a_n; ++a) {
    for (Exponent b = 1; b < b_0; ++b) {
      if (a * b_0 + b * a_n >= a_n * b_0) region.push_back({a, b});
    }
  }
  std::vector<LatticePoint> points{{0, b_0}, {a_n, 0}};
  const std::uint64_t draws = draw_below(rng, options.max_generators - 1);
  for (std::uint64_t k = 0; k < draws && !region.empty(); ++k) {
    points.push_back(region[draw_below(rng, region.size())]);
  }
  return PrimaryStaircase(MonomialIdeal(points));
}

}  // namespace rrc
