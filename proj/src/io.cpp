#include "rrc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace rrc {

namespace {

class MonomialParser {
 public:
  explicit MonomialParser(std::string_view text) : text_(text) {}

  std::vector<LatticePoint> parse() {
    std::vector<LatticePoint> gens;
    skip_space();
    if (done()) fail("empty ideal");
    gens.push_back(term());
    while (true) {
      skip_space();
      if (done()) break;
      if (peek() != '+' && peek() != ',') fail("expected '+' between generators");
      ++pos_;
      gens.push_back(term());
    }
    return gens;
  }

 private:
  LatticePoint term() {
    skip_space();
    if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (number() != 1) fail("only the constant 1 may appear as a coefficient-free term");
      return {0, 0};
    }
    LatticePoint m;
    bool any = false;
    while (true) {
      skip_space();
      if (done()) break;
      const char c = peek();
      if (c == '*' && any) {
        ++pos_;
        skip_space();
        if (done() || (peek() != 'x' && peek() != 'y')) fail("expected a variable after '*'");
        continue;
      }
      if (c != 'x' && c != 'y') break;
      ++pos_;
      Exponent e = 1;
      skip_space();
      if (!done() && peek() == '^') {
        ++pos_;
        skip_space();
        e = number();
      }
      Exponent& slot = c == 'x' ? m.a : m.b;
      slot = checked_add(slot, e);
      any = true;
    }
    if (!any) fail("expected a monomial");
    return m;
  }

  Exponent number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("exponent out of range");
    if (ec != std::errc() || ptr == first) fail("expected a decimal exponent");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<LatticePoint> points_from_json(const Json& arr, const char* field) {
  if (!arr.is_array()) throw ParseError(std::string(field) + ": expected an array of pairs");
  std::vector<LatticePoint> out;
  for (const Json& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
      throw ParseError(std::string(field) + ": each entry must be a pair of nonnegative integers");
    }
    out.push_back({p[0].get<Exponent>(), p[1].get<Exponent>()});
  }
  return out;
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return doc.at(name);
}

PointSet point_set_from_json(const Json& doc, const char* name) {
  const Json& node = field(doc, name);
  return PointSet{points_from_json(field(node, "points"), name), points_from_json(field(node, "minimal"), name)};
}

Json point_set_to_json(const PointSet& set) {
  return Json{{"points", to_json(set.points)}, {"minimal", to_json(set.minimal)}};
}

enum class Cell { Generator, Member, Closure, OnlyS, OnlyT, Outside };

Cell classify(const PrimaryStaircase& ideal, const ClosureReport* overlay, LatticePoint p) {
  const auto gens = ideal.generators();
  if (std::binary_search(gens.begin(), gens.end(), p)) return Cell::Generator;
  if (contains(ideal.ideal(), p)) return Cell::Member;
  if (overlay) {
    if (contains(overlay->closure, p)) return Cell::Closure;
    if (contains(overlay->ideal_s, p)) return Cell::OnlyS;
    if (contains(overlay->ideal_t, p)) return Cell::OnlyT;
  }
  return Cell::Outside;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("malformed pair list: ") + e.what());
    }
    auto points = points_from_json(doc, "ideal");
    if (points.empty()) throw ParseError("empty ideal");
    return MonomialIdeal(points);
  }
  return MonomialIdeal(MonomialParser(text).parse());
}

std::string format_monomial(LatticePoint p) {
  auto var = [](char name, Exponent e) {
    std::string s(1, name);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };
  if (p.a == 0 && p.b == 0) return "1";
  if (p.b == 0) return var('x', p.a);
  if (p.a == 0) return var('y', p.b);
  return var('x', p.a) + "*" + var('y', p.b);
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const LatticePoint& g : ideal.gens()) {
    if (!out.empty()) out += " + ";
    out += format_monomial(g);
  }
  return out;
}

std::string format_pairs(std::span<const LatticePoint> points) { return to_json(points).dump(); }

Json to_json(std::span<const LatticePoint> points) {
  Json arr = Json::array();
  for (const LatticePoint& p : points) arr.push_back({p.a, p.b});
  return arr;
}

Json report_to_json(const ClosureReport& report) {
  Json failures = Json::array();
  for (const GeneratorDeficit& f : report.hypothesis.failures) {
    failures.push_back({{"generator", {f.generator.a, f.generator.b}}, {"deficit", f.deficit}});
  }
  Json doc;
  doc["input"] = to_json(report.input.generators());
  doc["hypothesis"] = {{"ok", report.hypothesis.ok}, {"failures", failures}};
  doc["S"] = point_set_to_json(report.s);
  doc["T"] = point_set_to_json(report.t);
  doc["ideal_S"] = to_json(report.ideal_s.gens());
  doc["ideal_T"] = to_json(report.ideal_t.gens());
  doc["closure"] = to_json(report.closure.gens());
  doc["is_ratliff_rush"] = report.is_ratliff_rush;
  doc["reduction_bound"] = report.reduction_bound;
  doc["quick_check"] = to_string(report.quick_check);
  return doc;
}

ClosureReport report_from_json(const Json& doc) {
  try {
    auto staircase = [&](const char* name) {
      return MonomialIdeal::from_staircase(points_from_json(field(doc, name), name));
    };
    const Json& hyp = field(doc, "hypothesis");
    HypothesisVerdict verdict{field(hyp, "ok").get<bool>(), {}};
    for (const Json& f : field(hyp, "failures")) {
      auto gen = points_from_json(Json::array({field(f, "generator")}), "hypothesis");
      verdict.failures.push_back({gen.front(), field(f, "deficit").get<Exponent>()});
    }
    const std::string quick = field(doc, "quick_check").get<std::string>();
    if (quick != "proved-RR" && quick != "inconclusive") throw ParseError("unknown quick_check '" + quick + "'");
    return ClosureReport{
        .input = PrimaryStaircase(staircase("input")),
        .hypothesis = std::move(verdict),
        .s = point_set_from_json(doc, "S"),
        .t = point_set_from_json(doc, "T"),
        .ideal_s = staircase("ideal_S"),
        .ideal_t = staircase("ideal_T"),
        .closure = staircase("closure"),
        .is_ratliff_rush = field(doc, "is_ratliff_rush").get<bool>(),
        .reduction_bound = field(doc, "reduction_bound").get<Exponent>(),
        .quick_check = quick == "proved-RR" ? QuickCheck::ProvedRatliffRush : QuickCheck::Inconclusive,
    };
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report document: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed report document: ") + e.what());
  }
}

std::string render_verdict_text(const PrimaryStaircase& ideal, const HypothesisVerdict& verdict) {
  std::ostringstream os;
  os << "corner:          x^" << ideal.corner_x() << ", y^" << ideal.corner_y() << "\n";
  if (verdict.ok) {
    os << "hypothesis:      ok (every generator lies in I(" << ideal.corner_x() << "," << ideal.corner_y() << "))\n";
    return os.str();
  }
  os << "hypothesis:      VIOLATED\n";
  for (const GeneratorDeficit& f : verdict.failures) {
    os << "  " << format_monomial(f.generator) << " " << to_string(f.generator) << " deficit " << f.deficit
       << "\n";
  }
  return os.str();
}

std::string render_report_text(const ClosureReport& r) {
  std::ostringstream os;
  os << "input:           " << format_ideal(r.input.ideal()) << "\n";
  os << render_verdict_text(r.input, r.hypothesis);
  os << "S minimal:       " << format_pairs(r.s.minimal) << "\n";
  os << "T minimal:       " << format_pairs(r.t.minimal) << "\n";
  os << "I_S:             " << format_ideal(r.ideal_s) << "\n";
  os << "I_T:             " << format_ideal(r.ideal_t) << "\n";
  os << "closure:         " << format_ideal(r.closure) << "\n";
  os << "is_ratliff_rush: " << (r.is_ratliff_rush ? "true" : "false") << "\n";
  os << "reduction_bound: " << r.reduction_bound << "\n";
  os << "quick_check:     " << to_string(r.quick_check) << "\n";
  return os.str();
}

std::string render_staircase_ascii(const PrimaryStaircase& ideal, const ClosureReport* overlay) {
  const Exponent width = ideal.corner_x();
  const Exponent height = ideal.corner_y();
  const std::size_t label = std::to_string(height).size();
  std::ostringstream os;
  for (Exponent y = height + 1; y-- > 0;) {
    std::string tag = std::to_string(y);
    os << std::string(label - tag.size(), ' ') << tag << " |";
    for (Exponent x = 0; x <= width; ++x) {
      switch (classify(ideal, overlay, {x, y})) {
        case Cell::Generator: os << 'o'; break;
        case Cell::Member: os << '#'; break;
        case Cell::Closure: os << '/'; break;
        case Cell::OnlyS: os << 's'; break;
        case Cell::OnlyT: os << 't'; break;
        case Cell::Outside: os << '.'; break;
      }
    }
    os << "\n";
  }
  os << std::string(label + 1, ' ') << '+' << std::string(width + 1, '-') << "\n";
  os << std::string(label + 2, ' ') << "x = 0.." << width << "\n";
  if (overlay) os << "legend: o generator  # in I  / closure\\I  s I_S\\I_T  t I_T\\I_S  . outside\n";
  return os.str();
}

std::string render_staircase_svg(const PrimaryStaircase& ideal, const ClosureReport* overlay) {
  constexpr Exponent kCell = 10;
  constexpr Exponent kMargin = 10;
  const Exponent width = ideal.corner_x();
  const Exponent height = ideal.corner_y();
  const Exponent view_w = 2 * kMargin + width * kCell;
  const Exponent view_h = 2 * kMargin + height * kCell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << view_w << " " << view_h << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << view_w << "\" height=\"" << view_h << "\" fill=\"white\"/>\n";
  // staircase outline through the generators
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  auto gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Exponent px = kMargin + gens[i].a * kCell;
    const Exponent py = kMargin + (height - gens[i].b) * kCell;
    if (i > 0) os << " " << px << "," << kMargin + (height - gens[i - 1].b) * kCell;
    os << (i > 0 ? " " : "") << px << "," << py;
  }
  os << "\"/>\n";
  for (Exponent y = 0; y <= height; ++y) {
    for (Exponent x = 0; x <= width; ++x) {
      const Exponent cx = kMargin + x * kCell;
      const Exponent cy = kMargin + (height - y) * kCell;
      switch (classify(ideal, overlay, {x, y})) {
        case Cell::Generator:
          os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"black\"/>\n";
          break;
        case Cell::Member:
          os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"1\" fill=\"gray\"/>\n";
          break;
        case Cell::Closure:
          os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
          os << "<line x1=\"" << cx - 4 << "\" y1=\"" << cy + 4 << "\" x2=\"" << cx + 4 << "\" y2=\"" << cy - 4
             << "\" stroke=\"black\"/>\n";
          break;
        case Cell::OnlyS:
          os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
          break;
        case Cell::OnlyT:
          os << "<rect x=\"" << cx - 3 << "\" y=\"" << cy - 3 << "\" width=\"6\" height=\"6\" fill=\"black\"/>\n";
          break;
        case Cell::Outside:
          break;
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rrc
