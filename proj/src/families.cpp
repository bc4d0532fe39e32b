#include "rrc/families.hpp"

#include <string>

#include "rrc/closure.hpp"

namespace rrc {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw InvalidArgument(what);
}

}  // namespace

Exponent mu(Exponent c, Exponent d, Exponent i) {
  require(c > 0 && i <= c, "mu: need c > 0 and i <= c");
  const Exponent num = checked_mul(c - i, d);
  return num / c + (num % c != 0 ? 1 : 0);
}

void SigmaParams::validate() const {
  require(c >= 1 && d >= 1, "sigma: c and d must be positive");
  require(c <= d, "sigma: c must not exceed d");
  require(!parts.empty(), "sigma: at least one part is required");
  Exponent total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i].count >= 1 && parts[i].part >= 1, "sigma: counts and parts must be positive");
    if (i > 0) require(parts[i - 1].part % parts[i].part == 0, "sigma: each part must divide the previous one");
    total = checked_add(total, checked_mul(parts[i].count, parts[i].part));
  }
  require(total == c, "sigma: c must equal the sum of count * part");
}

PrimaryStaircase family_two(Exponent c, Exponent d) {
  require(c >= 1 && d >= 1, "two: c and d must be positive");
  return PrimaryStaircase(MonomialIdeal{{0, d}, {c, 0}});
}

PrimaryStaircase family_three(Exponent c, Exponent d, Exponent u, Exponent v) {
  require(0 < u && u < c && 0 < v && v < d, "three: need 0 < u < c and 0 < v < d");
  PrimaryStaircase ideal(MonomialIdeal{{0, d}, {u, v}, {c, 0}});
  HypothesisVerdict verdict = check_hypothesis(ideal);
  if (!verdict.ok) throw HypothesisViolated(std::move(verdict));
  return ideal;
}

PrimaryStaircase family_sigma(const SigmaParams& params) {
  params.validate();
  std::vector<LatticePoint> gens{{0, params.d}};
  Exponent offset = 0;  // Σ_{i<=j} n_i c_i
  for (const SigmaPart& p : params.parts) {
    for (Exponent q = 1; q <= p.count; ++q) {
      const Exponent sigma = checked_add(offset, checked_mul(q, p.part));
      gens.push_back({sigma, mu(params.c, params.d, sigma)});
    }
    offset = checked_add(offset, checked_mul(p.count, p.part));
  }
  return PrimaryStaircase(MonomialIdeal(gens));
}

PrimaryStaircase family_crispin(Exponent d, Exponent k) {
  require(1 <= k && k < d, "crispin: need 1 <= k < d");
  std::vector<LatticePoint> gens{{0, d}};
  for (Exponent j = 0; j <= k; ++j) gens.push_back({d - k + j, k - j});
  return PrimaryStaircase(MonomialIdeal(gens));
}

SigmaParams crispin_sigma_params(Exponent d, Exponent k) {
  require(1 <= k && k < d, "crispin: need 1 <= k < d");
  return {d, d, {{1, d - k}, {k, 1}}};
}

SigmaParams crispin_sigma_params_as_printed(Exponent d, Exponent k) {
  require(1 <= k && k < d, "crispin: need 1 <= k < d");
  return {d, d, {{1, k}, {d - k, 1}}};
}

PrimaryStaircase family_mk(Exponent m, Exponent k) {
  require(m >= 1 && k >= 1, "mk: need m >= 1 and k >= 1");
  std::vector<LatticePoint> gens;
  const Exponent top = checked_mul(m, k + 1);
  for (Exponent i = 0; i <= k; ++i) gens.push_back({i * m, top - i * m - 1});
  for (Exponent j = 0; j < m; ++j) gens.push_back({k * m + j, m - j - 1});
  return PrimaryStaircase(MonomialIdeal(gens));
}

SigmaParams mk_sigma_params(Exponent m, Exponent k) {
  require(m >= 1 && k >= 1, "mk: need m >= 1 and k >= 1");
  const Exponent c = checked_mul(m, k + 1) - 1;
  SigmaParams params{c, c, {{k, m}}};
  if (m > 1) params.parts.push_back({m - 1, 1});
  return params;
}

PrimaryStaircase family_generator_gap(Exponent c, Exponent d) {
  require(c >= 4 && c % 4 == 0 && d % 4 == 0 && c <= d, "gap: need 4 | c, 4 | d and c <= d");
  const Exponent quarter = c / 4;
  std::vector<LatticePoint> gens{
      {0, d}, {quarter, mu(c, d, quarter)}, {3 * quarter, mu(c, d, 3 * quarter)}, {c, 0}};
  const Exponent mid_mu = mu(c, d, 2 * quarter);
  for (Exponent t = 1; t <= quarter; ++t) gens.push_back({3 * quarter - t, mid_mu + t - 1});
  return PrimaryStaircase(MonomialIdeal(gens));
}

}  // namespace rrc
