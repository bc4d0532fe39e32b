#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rrc/closure.hpp"
#include "rrc/ideal.hpp"

namespace rrc {

using Json = nlohmann::ordered_json;

/// Parses either monomial syntax ("y^28 + x^2*y^26 + x^17"; '*' optional,
/// exponent 1 implicit, "1" for the unit monomial, '+' or ',' between
/// generators) or pair syntax ("[[0,28],[2,26],[17,0]]"). The result is
/// normalized, so generator order and redundant generators do not matter.
/// Throws ParseError on malformed or empty input.
MonomialIdeal parse_ideal(std::string_view text);

std::string format_monomial(LatticePoint p);
/// "y^5 + x^3*y^2 + x^4*y + x^5"; "0" for the zero ideal.
std::string format_ideal(const MonomialIdeal& ideal);
/// "[[0,5],[3,2],[4,1],[5,0]]"
std::string format_pairs(std::span<const LatticePoint> points);

Json to_json(std::span<const LatticePoint> points);

/// Machine document: one object with input, hypothesis, S, T, ideal_S,
/// ideal_T, closure, is_ratliff_rush, reduction_bound, quick_check.
Json report_to_json(const ClosureReport& report);
/// Inverse of report_to_json; throws ParseError on a malformed document.
ClosureReport report_from_json(const Json& doc);

std::string render_report_text(const ClosureReport& report);
std::string render_verdict_text(const PrimaryStaircase& ideal, const HypothesisVerdict& verdict);

/// One character per lattice point of [0, a_n] x [0, b_0], top row y = b_0:
///   o minimal generator   # other point of I   . outside I
/// With an overlay, points outside I are further split into
///   / closure \ I   s  I_S \ I_T   t  I_T \ I_S
std::string render_staircase_ascii(const PrimaryStaircase& ideal, const ClosureReport* overlay = nullptr);
std::string render_staircase_svg(const PrimaryStaircase& ideal, const ClosureReport* overlay = nullptr);

}  // namespace rrc
