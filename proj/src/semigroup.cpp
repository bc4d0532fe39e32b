#include "rrc/semigroup.hpp"

#include <algorithm>
#include <set>

namespace rrc {

SemigroupDescription::SemigroupDescription(const PrimaryStaircase& ideal)
    : generators_(ideal.generators().begin(), ideal.generators().end()) {}

namespace {

// One DFS step: moving `advance` along the bounded axis and accumulating
// `deficit` = period - (exponent on the periodic axis).
struct Step {
  Exponent advance;
  Exponent deficit;
};

// Returns the reachable states (advance, period - deficit) including the
// empty tuple, which maps to the corner (0, period).
std::set<LatticePoint> walk_shadow(std::span<const Step> steps, Exponent bound, Exponent period) {
  std::set<LatticePoint> visited{{0, 0}};
  std::vector<LatticePoint> stack{{0, 0}};
  while (!stack.empty()) {
    const LatticePoint state = stack.back();
    stack.pop_back();
    for (const Step& s : steps) {
      const Exponent advance = checked_add(state.a, s.advance);
      if (advance > bound) continue;
      const Exponent deficit = checked_add(state.b, s.deficit);
      if (deficit > period) {
        throw NegativeShiftError("semigroup tuple reaching " + std::to_string(advance) +
                                 " needs a negative shifted exponent; the integral-closure hypothesis fails");
      }
      if (visited.insert({advance, deficit}).second) stack.push_back({advance, deficit});
    }
  }
  return visited;
}

PointSet to_point_set(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  PointSet out;
  out.minimal = minimal_antichain(points);
  out.points = std::move(points);
  return out;
}

}  // namespace

PointSet enumerate_s(const SemigroupDescription& desc) {
  const Exponent a_n = desc.corner_x();
  const Exponent b_0 = desc.corner_y();
  std::vector<Step> steps;
  for (const LatticePoint& g : desc.generators().subspan(1)) steps.push_back({g.a, b_0 - g.b});

  std::vector<LatticePoint> points;
  for (const LatticePoint& state : walk_shadow(steps, a_n, b_0)) points.push_back({state.a, b_0 - state.b});
  return to_point_set(std::move(points));
}

PointSet enumerate_t(const SemigroupDescription& desc) {
  const Exponent a_n = desc.corner_x();
  const Exponent b_0 = desc.corner_y();
  auto gens = desc.generators();
  std::vector<Step> steps;
  for (const LatticePoint& g : gens.first(gens.size() - 1)) steps.push_back({g.b, a_n - g.a});

  std::vector<LatticePoint> points;
  for (const LatticePoint& state : walk_shadow(steps, b_0, a_n)) points.push_back({a_n - state.b, state.a});
  return to_point_set(std::move(points));
}

QBounds q_bounds(const SemigroupDescription& desc) {
  auto gens = desc.generators();
  if (gens.size() <= 2) return {};
  // Staircase order puts the smallest nonzero a at index 1 and the smallest
  // nonzero b at index n-1.
  return {desc.corner_x() / gens[1].a, desc.corner_y() / gens[gens.size() - 2].b};
}

}  // namespace rrc
