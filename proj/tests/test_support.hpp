#pragma once

#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include "rrc/closure.hpp"
#include "rrc/ideal.hpp"
#include "rrc/families.hpp"
#include "rrc/oracle.hpp"

namespace rrc {

inline std::ostream& operator<<(std::ostream& os, LatticePoint p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
  os << "<";
  for (std::size_t i = 0; i < ideal.size(); ++i) os << (i ? "," : "") << ideal.gens()[i];
  return os << ">";
}
inline std::ostream& operator<<(std::ostream& os, const PrimaryStaircase& ideal) { return os << ideal.ideal(); }

}  // namespace rrc

namespace rrc::test {

using Points = std::vector<LatticePoint>;

inline MonomialIdeal ideal(std::initializer_list<LatticePoint> pts) { return MonomialIdeal(pts); }
inline PrimaryStaircase primary(std::initializer_list<LatticePoint> pts) { return PrimaryStaircase(MonomialIdeal(pts)); }

// Brute-force membership: some listed point divides m.
inline bool divisible_by_any(const Points& gens, LatticePoint m) {
  for (const auto& g : gens)
    if (g.a <= m.a && g.b <= m.b) return true;
  return false;
}

// Minimal generators of the upward-closed set {m in [0,side]^2 : pred(m)},
// assuming every generator of the set lies inside the box.
inline Points generators_from_box(Exponent side, const std::function<bool(LatticePoint)>& pred) {
  Points out;
  for (Exponent a = 0; a <= side; ++a) {
    for (Exponent b = 0; b <= side; ++b) {
      if (!pred({a, b})) continue;
      const bool left = a > 0 && pred({a - 1, b});
      const bool below = b > 0 && pred({a, b - 1});
      if (!left && !below) out.push_back({a, b});
    }
  }
  return out;
}

inline Exponent uniform(std::mt19937_64& rng, Exponent lo, Exponent hi) {
  return lo + rng() % (hi - lo + 1);
}

// Arbitrary (possibly non-primary) ideal with up to max_gens generators.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, Exponent max_exp, std::size_t max_gens) {
  Points pts;
  const std::size_t n = 1 + rng() % max_gens;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({uniform(rng, 0, max_exp), uniform(rng, 0, max_exp)});
  return MonomialIdeal(pts);
}

// Hypothesis-satisfying ideal whose interior points hug the line
// a·b_0 + b·a_n = a_n·b_0, where non-Ratliff-Rush behaviour concentrates.
inline PrimaryStaircase random_boundary_ideal(std::mt19937_64& rng, Exponent max_corner, std::size_t max_interior) {
  const Exponent a_n = uniform(rng, 2, max_corner);
  const Exponent b_0 = uniform(rng, 2, max_corner);
  Points pts{{0, b_0}, {a_n, 0}};
  const std::size_t n = rng() % (max_interior + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Exponent a = uniform(rng, 1, a_n - 1);
    // smallest b with a·b_0 + b·a_n >= a_n·b_0, plus a small slack
    Exponent b = 0;
    while (a * b_0 + b * a_n < a_n * b_0) ++b;
    b += rng() % 2;
    if (b >= 1 && b < b_0) pts.push_back({a, b});
  }
  return PrimaryStaircase(MonomialIdeal(pts));
}

// The randomized verification suite: seeded hypothesis-satisfying ideals,
// corners <= 30, at most 6 generators.
inline std::vector<PrimaryStaircase> suite(std::size_t count, std::uint64_t seed = kSuiteSeed) {
  std::mt19937_64 rng(seed);
  std::vector<PrimaryStaircase> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_hypothesis_ideal(rng));
  return out;
}

inline std::vector<PrimaryStaircase> boundary_suite(std::size_t count, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::vector<PrimaryStaircase> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_boundary_ideal(rng, 30, 4));
  return out;
}

// Two staircases with hand-checked S, T and closure.
inline PrimaryStaircase staircase_17_28() {
  return primary({{0, 28}, {2, 26}, {10, 14}, {11, 12}, {15, 5}, {17, 0}});
}
inline MonomialIdeal closure_17_28() {
  return ideal({{0, 28}, {2, 26}, {5, 24}, {7, 22}, {8, 20}, {10, 14}, {11, 12}, {13, 10}, {15, 5}, {17, 0}});
}
inline PrimaryStaircase staircase_35_28() { return primary({{35, 0}, {33, 2}, {4, 26}, {0, 28}}); }
inline MonomialIdeal closure_35_28() {
  return ideal({{35, 0}, {33, 2}, {32, 12}, {28, 14}, {24, 16}, {20, 18}, {16, 20}, {13, 22}, {11, 24}, {4, 26},
                {0, 28}});
}
inline PrimaryStaircase below_line_7_14() { return primary({{7, 0}, {6, 1}, {1, 10}, {0, 14}}); }

}  // namespace rrc::test
