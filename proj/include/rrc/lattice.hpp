#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rrc {

/// Exponent of a single variable. Arithmetic on exponents goes through the
/// checked helpers below; a wrapped value is never produced.
using Exponent = std::uint64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised by the S/T enumeration when a tuple would need a negative
/// y- (resp. x-) exponent after removing the period shift.
class NegativeShiftError : public Error {
 public:
  using Error::Error;
};

inline Exponent checked_add(Exponent x, Exponent y) {
  Exponent r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("exponent overflow in addition");
  return r;
}

inline Exponent checked_mul(Exponent x, Exponent y) {
  Exponent r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("exponent overflow in multiplication");
  return r;
}

/// Exponent pair (a, b) of the monomial x^a y^b.
struct LatticePoint {
  Exponent a = 0;
  Exponent b = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// True iff x^g.a y^g.b divides x^m.a y^m.b.
constexpr bool divides(LatticePoint g, LatticePoint m) { return g.a <= m.a && g.b <= m.b; }

inline LatticePoint operator+(LatticePoint p, LatticePoint q) {
  return {checked_add(p.a, q.a), checked_add(p.b, q.b)};
}

/// lcm of two monomials.
constexpr LatticePoint join(LatticePoint p, LatticePoint q) {
  return {p.a > q.a ? p.a : q.a, p.b > q.b ? p.b : q.b};
}

/// Exponents of p / gcd(p, h), i.e. the generator of <p> : <h>.
constexpr LatticePoint quotient(LatticePoint p, LatticePoint h) {
  return {p.a > h.a ? p.a - h.a : 0, p.b > h.b ? p.b - h.b : 0};
}

inline std::string to_string(LatticePoint p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

}  // namespace rrc
