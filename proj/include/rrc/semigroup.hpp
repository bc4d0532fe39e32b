#pragma once

#include <span>
#include <vector>

#include "rrc/ideal.hpp"

namespace rrc {

/// Generators (a_i, b_i), i = 0..n, of the semigroup Omega in Z^2, together
/// with the corners a_n and b_0 that bound the S and T boxes.
class SemigroupDescription {
 public:
  explicit SemigroupDescription(const PrimaryStaircase& ideal);

  std::span<const LatticePoint> generators() const { return generators_; }
  Exponent corner_x() const { return generators_.back().a; }
  Exponent corner_y() const { return generators_.front().b; }

 private:
  std::vector<LatticePoint> generators_;
};

/// A finite point set inside [0, a_n] x [0, b_0] with its minimal antichain.
struct PointSet {
  std::vector<LatticePoint> points;   // sorted, no duplicates
  std::vector<LatticePoint> minimal;  // sorted by increasing a

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// S = {(α,β) : α <= a_n, β <= b_0, (α, β + k·b_0) ∈ Ω for some k >= 0}.
///
/// Every tuple (λ_1..λ_n) with Σλ_i a_i <= a_n and l = Σλ_i >= 1 yields the
/// point (Σλ_i a_i, Σλ_i b_i - (l-1)·b_0); λ_0 contributes nothing new and the
/// corner (0, b_0) is added directly. Tuples are walked depth first over the
/// distinct partial states (α, Σλ_i(b_0 - b_i)), so each reachable point is
/// expanded once.
///
/// Throws NegativeShiftError if some tuple drives the shifted y-exponent below
/// zero, which cannot happen when every generator lies in the integral
/// closure of <x^{a_n}, y^{b_0}>.
PointSet enumerate_s(const SemigroupDescription& desc);

/// Mirror of enumerate_s with the roles of x and y exchanged:
/// T = {(α,β) : α <= a_n, β <= b_0, (α + k·a_n, β) ∈ Ω for some k >= 0}.
PointSet enumerate_t(const SemigroupDescription& desc);

struct QBounds {
  Exponent q_s = 1;
  Exponent q_t = 1;

  Exponent max() const { return q_s > q_t ? q_s : q_t; }
  friend bool operator==(const QBounds&, const QBounds&) = default;
};

/// q_S = floor(a_n / a_1), q_T = floor(b_0 / b_{n-1}); both 1 when there are
/// no interior generators.
QBounds q_bounds(const SemigroupDescription& desc);

/// Componentwise-minimal elements, sorted by increasing a.
inline std::vector<LatticePoint> minimal_points(std::span<const LatticePoint> points) {
  return minimal_antichain(points);
}

}  // namespace rrc
