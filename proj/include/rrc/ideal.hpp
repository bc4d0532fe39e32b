#pragma once

#include <span>
#include <vector>

#include "rrc/lattice.hpp"

namespace rrc {

/// A monomial ideal of K[x,y] held as its minimal generators in staircase
/// order: a strictly increasing, b strictly decreasing. The empty list is the
/// zero ideal and [(0,0)] is the unit ideal. Two ideals are equal iff their
/// generator lists are equal.
class MonomialIdeal {
 public:
  /// The zero ideal.
  MonomialIdeal() = default;

  /// Normalizes an arbitrary point list (duplicates and non-minimal points allowed).
  explicit MonomialIdeal(std::span<const LatticePoint> points);
  MonomialIdeal(std::initializer_list<LatticePoint> points);

  /// Wraps a list that is already in staircase normal form; throws
  /// InvalidArgument otherwise.
  static MonomialIdeal from_staircase(std::vector<LatticePoint> gens);
  static MonomialIdeal unit() { return from_staircase({{0, 0}}); }

  std::span<const LatticePoint> gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front() == LatticePoint{0, 0}; }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<LatticePoint> gens_;
};

/// Minimal elements of `points` under divisibility, sorted by increasing a.
/// A point is dropped iff some other input point divides it.
std::vector<LatticePoint> minimal_antichain(std::span<const LatticePoint> points);

inline MonomialIdeal normalize(std::span<const LatticePoint> points) { return MonomialIdeal(points); }

bool contains(const MonomialIdeal& ideal, LatticePoint m);

/// inner ⊆ outer.
bool is_subset(const MonomialIdeal& inner, const MonomialIdeal& outer);

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal add(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// x^m.a y^m.b · ideal
MonomialIdeal shift(const MonomialIdeal& ideal, LatticePoint m);

/// ideal^exponent for exponent >= 1, normalizing after every multiplication.
MonomialIdeal power(const MonomialIdeal& ideal, std::size_t exponent);

/// ideal : <m>
MonomialIdeal colon(const MonomialIdeal& ideal, LatticePoint m);

/// ideal : divisor, for a nonzero divisor.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor);

/// An <x,y>-primary monomial ideal:
///   y^{b_0}, x^{a_1}y^{b_1}, ..., x^{a_{n-1}}y^{b_{n-1}}, x^{a_n}
/// with a_n >= 1 and b_0 >= 1.
class PrimaryStaircase {
 public:
  /// Throws InvalidArgument unless the ideal contains pure powers of x and y
  /// and is proper.
  explicit PrimaryStaircase(MonomialIdeal ideal);

  const MonomialIdeal& ideal() const { return ideal_; }
  std::span<const LatticePoint> generators() const { return ideal_.gens(); }
  /// a_n
  Exponent corner_x() const { return ideal_.gens().back().a; }
  /// b_0
  Exponent corner_y() const { return ideal_.gens().front().b; }
  std::span<const LatticePoint> interior() const { return generators().subspan(1, ideal_.size() - 2); }

  friend bool operator==(const PrimaryStaircase&, const PrimaryStaircase&) = default;

 private:
  MonomialIdeal ideal_;
};

}  // namespace rrc
