#include "rrc/ideal.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace rrc {

std::vector<LatticePoint> minimal_antichain(std::span<const LatticePoint> points) {
  std::vector<LatticePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<LatticePoint> out;
  for (const LatticePoint& p : sorted) {
    // sorted by (a, b): p is minimal iff its b undercuts every kept point.
    if (out.empty() || p.b < out.back().b) out.push_back(p);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::span<const LatticePoint> points) : gens_(minimal_antichain(points)) {}

MonomialIdeal::MonomialIdeal(std::initializer_list<LatticePoint> points)
    : MonomialIdeal(std::span<const LatticePoint>(points.begin(), points.size())) {}

MonomialIdeal MonomialIdeal::from_staircase(std::vector<LatticePoint> gens) {
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (!(gens[i - 1].a < gens[i].a && gens[i - 1].b > gens[i].b)) {
      throw InvalidArgument("generator list is not in staircase normal form at " + to_string(gens[i]));
    }
  }
  MonomialIdeal ideal;
  ideal.gens_ = std::move(gens);
  return ideal;
}

bool contains(const MonomialIdeal& ideal, LatticePoint m) {
  auto gens = ideal.gens();
  // Last generator with a <= m.a has the smallest b among those that can divide m.
  auto it = std::upper_bound(gens.begin(), gens.end(), m.a,
                             [](Exponent a, const LatticePoint& g) { return a < g.a; });
  if (it == gens.begin()) return false;
  return std::prev(it)->b <= m.b;
}

bool is_subset(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  return std::all_of(inner.gens().begin(), inner.gens().end(),
                     [&](LatticePoint g) { return contains(outer, g); });
}

namespace {

enum class Combine { Max, Min };

// Both ideals are step functions a -> lowest b reached at column a. The
// result's step function is the pointwise max (intersection) or min (sum);
// it can only drop at a column where one of the inputs drops.
MonomialIdeal sweep(const MonomialIdeal& lhs, const MonomialIdeal& rhs, Combine mode) {
  auto gl = lhs.gens();
  auto gr = rhs.gens();
  std::optional<Exponent> floor_l, floor_r;
  std::size_t i = 0, j = 0;
  std::vector<LatticePoint> out;
  while (i < gl.size() || j < gr.size()) {
    Exponent a = std::numeric_limits<Exponent>::max();
    if (i < gl.size()) a = gl[i].a;
    if (j < gr.size()) a = std::min(a, gr[j].a);
    if (i < gl.size() && gl[i].a == a) floor_l = gl[i++].b;
    if (j < gr.size() && gr[j].a == a) floor_r = gr[j++].b;

    std::optional<Exponent> b;
    if (mode == Combine::Max) {
      if (floor_l && floor_r) b = std::max(*floor_l, *floor_r);
    } else if (floor_l && floor_r) {
      b = std::min(*floor_l, *floor_r);
    } else {
      b = floor_l ? floor_l : floor_r;
    }
    if (b && (out.empty() || *b < out.back().b)) out.push_back({a, *b});
  }
  return MonomialIdeal::from_staircase(std::move(out));
}

}  // namespace

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  return sweep(lhs, rhs, Combine::Max);
}

MonomialIdeal add(const MonomialIdeal& lhs, const MonomialIdeal& rhs) { return sweep(lhs, rhs, Combine::Min); }

MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  std::vector<LatticePoint> sums;
  sums.reserve(lhs.size() * rhs.size());
  for (const LatticePoint& g : lhs.gens()) {
    for (const LatticePoint& h : rhs.gens()) sums.push_back(g + h);
  }
  return MonomialIdeal(sums);
}

MonomialIdeal shift(const MonomialIdeal& ideal, LatticePoint m) {
  std::vector<LatticePoint> out;
  out.reserve(ideal.size());
  for (const LatticePoint& g : ideal.gens()) out.push_back(g + m);
  return MonomialIdeal::from_staircase(std::move(out));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::size_t exponent) {
  if (exponent == 0) throw InvalidArgument("power: exponent must be at least 1");
  MonomialIdeal result = ideal;
  for (std::size_t l = 1; l < exponent; ++l) result = multiply(result, ideal);
  return result;
}

MonomialIdeal colon(const MonomialIdeal& ideal, LatticePoint m) {
  std::vector<LatticePoint> out;
  out.reserve(ideal.size());
  for (const LatticePoint& g : ideal.gens()) out.push_back(quotient(g, m));
  return MonomialIdeal(out);
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor) {
  if (divisor.is_zero()) throw InvalidArgument("colon: divisor must be a nonzero ideal");
  auto gens = divisor.gens();
  MonomialIdeal result = colon(ideal, gens.front());
  for (std::size_t k = 1; k < gens.size() && !result.is_zero(); ++k) {
    result = intersect(result, colon(ideal, gens[k]));
  }
  return result;
}

PrimaryStaircase::PrimaryStaircase(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
  auto gens = ideal_.gens();
  if (gens.size() < 2 || gens.front().a != 0 || gens.back().b != 0) {
    throw InvalidArgument("ideal is not <x,y>-primary: it must contain a pure power of x and of y");
  }
  // front().b >= 1 and back().a >= 1 follow from staircase order with two or more generators.
}

}  // namespace rrc
