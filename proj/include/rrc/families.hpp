#pragma once

#include <vector>

#include "rrc/ideal.hpp"

namespace rrc {

/// One summand count·part of c = n_1 c_1 + ... + n_r c_r.
struct SigmaPart {
  Exponent count = 0;  // n_i
  Exponent part = 0;   // c_i
  friend bool operator==(const SigmaPart&, const SigmaPart&) = default;
};

/// Parameters of the sigma family: c <= d, c = Σ n_i c_i, c_{i+1} | c_i.
struct SigmaParams {
  Exponent d = 0;
  Exponent c = 0;
  std::vector<SigmaPart> parts;

  /// Throws InvalidArgument on any violated constraint.
  void validate() const;
  friend bool operator==(const SigmaParams&, const SigmaParams&) = default;
};

/// ceil((c - i)·d / c)
Exponent mu(Exponent c, Exponent d, Exponent i);

/// <x^c, y^d>
PrimaryStaircase family_two(Exponent c, Exponent d);

/// <x^c, x^u y^v, y^d>; throws HypothesisViolated unless u·d + v·c >= c·d.
PrimaryStaircase family_three(Exponent c, Exponent d, Exponent u, Exponent v);

/// <x^{σ_{j,q}} y^{μ_{σ_{j,q}}} : j = -1..r-1, q = 1..n_{j+1}> with
/// σ_{j,q} = q·c_{j+1} + Σ_{i<=j} n_i c_i.
PrimaryStaircase family_sigma(const SigmaParams& params);

/// I_{d,k} = <y^d, x^{d-k}y^k, x^{d-k+1}y^{k-1}, ..., x^{d-1}y, x^d>, 1 <= k < d.
PrimaryStaircase family_crispin(Exponent d, Exponent k);

/// Sigma parameters reproducing I_{d,k}: c = d, c_1 = d-k, n_1 = 1, c_2 = 1, n_2 = k.
SigmaParams crispin_sigma_params(Exponent d, Exponent k);

/// The assignment c_1 = k, n_1 = 1, c_2 = 1, n_2 = d-k as literally printed
/// alongside I_{d,k}. It yields a different ideal (every x^i y^{d-i}, i >= k);
/// kept so the difference stays pinned by a test.
SigmaParams crispin_sigma_params_as_printed(Exponent d, Exponent k);

/// I_{m,k} = <x^{im} y^{m(k+1-i)-1}>_{i=0..k} + <x^{km+j} y^{m-j-1}>_{j=0..m-1}.
PrimaryStaircase family_mk(Exponent m, Exponent k);

/// c = d = m(k+1)-1, c_1 = m, n_1 = k, c_2 = 1, n_2 = m-1, dropping any part
/// whose count is zero.
SigmaParams mk_sigma_params(Exponent m, Exponent k);

/// <y^d, x^{c/4}y^{μ_{c/4}}, x^{3c/4}y^{μ_{3c/4}}, x^c> + J with
/// J = <x^{3c/4-t} y^{μ_{c/2}+t-1} : t = 1..c/4>. Requires 4 | c, 4 | d, c <= d.
/// Has c/4 + 4 minimal generators; its Ratliff-Rush closure has 5.
PrimaryStaircase family_generator_gap(Exponent c, Exponent d);

}  // namespace rrc
