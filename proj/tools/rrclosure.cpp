// rrclosure: Ratliff-Rush closures of <x,y>-primary monomial ideals.
//
// Exit codes: 0 ok, 1 parse or shape error, 2 hypothesis violated,
// 3 oracle mismatch, 4 exponent overflow.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "rrc/closure.hpp"
#include "rrc/families.hpp"
#include "rrc/io.hpp"
#include "rrc/oracle.hpp"

namespace {

enum ExitCode : int { kOk = 0, kParse = 1, kHypothesis = 2, kMismatch = 3, kOverflow = 4 };

struct Options {
  std::string ideal;
  std::string format = "text";
  std::size_t max_power = 0;
  std::size_t upto = 1;
  std::optional<std::uint64_t> seed;
  std::size_t count = 1;
  bool overlay = false;
  std::string out;
  std::vector<std::uint64_t> numbers;
  std::vector<std::string> sigma_parts;
};

bool json_format(const Options& o) { return o.format == "json-doc"; }

rrc::PrimaryStaircase parse_primary(const std::string& text) {
  return rrc::PrimaryStaircase(rrc::parse_ideal(text));
}

void print_ideal_both(const rrc::MonomialIdeal& ideal, const Options& o) {
  if (json_format(o)) {
    rrc::Json doc{{"ideal", rrc::format_ideal(ideal)}, {"pairs", rrc::to_json(ideal.gens())}};
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << rrc::format_ideal(ideal) << "\n" << rrc::format_pairs(ideal.gens()) << "\n";
}

int cmd_closure(const Options& o) {
  const rrc::ClosureReport report = rrc::ratliff_rush_closure(parse_primary(o.ideal));
  if (json_format(o)) {
    std::cout << rrc::report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << rrc::render_report_text(report);
  }
  return kOk;
}

int cmd_check(const Options& o) {
  const rrc::PrimaryStaircase ideal = parse_primary(o.ideal);
  const rrc::HypothesisVerdict verdict = rrc::check_hypothesis(ideal);
  if (json_format(o)) {
    rrc::Json failures = rrc::Json::array();
    for (const auto& f : verdict.failures) {
      failures.push_back({{"generator", {f.generator.a, f.generator.b}}, {"deficit", f.deficit}});
    }
    rrc::Json doc{{"input", rrc::to_json(ideal.generators())}, {"ok", verdict.ok}, {"failures", failures}};
    if (verdict.ok) {
      doc["quick_check"] = rrc::to_string(rrc::quick_sufficient_check(ideal));
      doc["reduction_bound"] = rrc::reduction_bound(ideal);
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << rrc::render_verdict_text(ideal, verdict);
    if (verdict.ok) {
      std::cout << "quick_check: " << rrc::to_string(rrc::quick_sufficient_check(ideal)) << "\n";
      std::cout << "reduction_bound: " << rrc::reduction_bound(ideal) << "\n";
    }
  }
  return verdict.ok ? kOk : kHypothesis;
}

bool compare_with_chain(const rrc::PrimaryStaircase& ideal, const Options& o, rrc::Json* doc) {
  const rrc::ClosureReport report = rrc::ratliff_rush_closure(ideal);
  const std::size_t length = o.max_power > 0 ? o.max_power : report.reduction_bound;
  const rrc::ColonChain chain = rrc::colon_chain(ideal.ideal(), length);
  const rrc::MonomialIdeal& terminal = chain.steps.back();
  const bool match = terminal == report.closure;
  if (doc) {
    *doc = {{"input", rrc::to_json(ideal.generators())},
            {"engine", rrc::to_json(report.closure.gens())},
            {"chain_terminal", rrc::to_json(terminal.gens())},
            {"max_power", length},
            {"stabilized_at", chain.stabilized_at ? rrc::Json(*chain.stabilized_at) : rrc::Json(nullptr)},
            {"match", match}};
  } else {
    std::cout << "input:          " << rrc::format_ideal(ideal.ideal()) << "\n";
    std::cout << "engine:         " << rrc::format_ideal(report.closure) << "\n";
    std::cout << "chain terminal: " << rrc::format_ideal(terminal) << "  (I^" << length + 1 << " : I^" << length
              << ")\n";
    if (chain.stabilized_at) std::cout << "chain repeats from l = " << *chain.stabilized_at << "\n";
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match;
}

int cmd_oracle(const Options& o) {
  if (o.ideal.empty() == !o.seed.has_value()) {
    throw rrc::ParseError("oracle: give either an ideal or --seed");
  }
  if (!o.seed) {
    rrc::Json doc;
    const bool match = compare_with_chain(parse_primary(o.ideal), o, json_format(o) ? &doc : nullptr);
    if (json_format(o)) std::cout << doc.dump(2) << "\n";
    return match ? kOk : kMismatch;
  }
  std::mt19937_64 rng(*o.seed);
  bool all = true;
  rrc::Json cases = rrc::Json::array();
  for (std::size_t i = 0; i < o.count; ++i) {
    const rrc::PrimaryStaircase ideal = rrc::random_hypothesis_ideal(rng);
    if (json_format(o)) {
      rrc::Json doc;
      all &= compare_with_chain(ideal, o, &doc);
      cases.push_back(doc);
    } else {
      std::cout << "case " << i << "\n";
      all &= compare_with_chain(ideal, o, nullptr);
    }
  }
  if (json_format(o)) std::cout << rrc::Json{{"seed", *o.seed}, {"cases", cases}}.dump(2) << "\n";
  return all ? kOk : kMismatch;
}

int cmd_powers(const Options& o) {
  const rrc::PrimaryStaircase ideal = parse_primary(o.ideal);
  const std::vector<bool> verdicts = rrc::powers_rr_check(ideal, o.upto);
  if (json_format(o)) {
    std::cout << rrc::Json{{"input", rrc::to_json(ideal.generators())}, {"ratliff_rush", verdicts}}.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t l = 0; l < verdicts.size(); ++l) {
    std::cout << "I^" << l + 1 << " ratliff_rush: " << (verdicts[l] ? "true" : "false") << "\n";
  }
  return kOk;
}

rrc::SigmaParams sigma_params(const Options& o) {
  const auto& args = o.sigma_parts;
  if (args.size() < 3) throw rrc::ParseError("family sigma: expected D C followed by COUNT:PART items");
  rrc::SigmaParams params;
  try {
    params.d = std::stoull(args[0]);
    params.c = std::stoull(args[1]);
  } catch (const std::logic_error&) {
    throw rrc::ParseError("family sigma: D and C must be integers");
  }
  for (const std::string& item : std::span(args).subspan(2)) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw rrc::ParseError("family sigma: expected COUNT:PART, got '" + item + "'");
    try {
      params.parts.push_back({std::stoull(item.substr(0, colon)), std::stoull(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw rrc::ParseError("family sigma: bad number in '" + item + "'");
    }
  }
  return params;
}

int cmd_family(const std::string& name, const Options& o) {
  const auto& n = o.numbers;
  auto need = [&](std::size_t k) {
    if (n.size() != k) throw rrc::ParseError("family " + name + ": expected " + std::to_string(k) + " integers");
  };
  std::optional<rrc::PrimaryStaircase> ideal;
  if (name == "two") {
    need(2);
    ideal = rrc::family_two(n[0], n[1]);
  } else if (name == "three") {
    need(4);
    ideal = rrc::family_three(n[0], n[1], n[2], n[3]);
  } else if (name == "crispin") {
    need(2);
    ideal = rrc::family_crispin(n[0], n[1]);
  } else if (name == "mk") {
    need(2);
    ideal = rrc::family_mk(n[0], n[1]);
  } else if (name == "sigma") {
    ideal = rrc::family_sigma(sigma_params(o));
  } else {
    need(2);
    ideal = rrc::family_generator_gap(n[0], n[1]);
  }
  print_ideal_both(ideal->ideal(), o);
  return kOk;
}

int cmd_intclosure(const Options& o) {
  if (o.numbers.size() != 2) throw rrc::ParseError("intclosure: expected C D");
  print_ideal_both(rrc::integral_closure_box(o.numbers[0], o.numbers[1]), o);
  return kOk;
}

int cmd_staircase(const Options& o) {
  const rrc::PrimaryStaircase ideal = parse_primary(o.ideal);
  std::optional<rrc::ClosureReport> report;
  if (o.overlay) report = rrc::ratliff_rush_closure(ideal);
  const rrc::ClosureReport* overlay = report ? &*report : nullptr;

  std::string text;
  if (o.format == "svg") {
    text = rrc::render_staircase_svg(ideal, overlay);
  } else if (o.format == "pairs") {
    rrc::Json doc{{"ideal", rrc::to_json(ideal.generators())}};
    if (report) {
      doc["ideal_S"] = rrc::to_json(report->ideal_s.gens());
      doc["ideal_T"] = rrc::to_json(report->ideal_t.gens());
      doc["closure"] = rrc::to_json(report->closure.gens());
    }
    text = doc.dump() + "\n";
  } else {
    text = rrc::render_staircase_ascii(ideal, overlay);
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw rrc::ParseError("cannot open output file '" + o.out + "'");
    file << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ratliff-Rush closure of <x,y>-primary monomial ideals"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> report_formats{"text", "json-doc"};

  auto* closure = app.add_subcommand("closure", "Compute the Ratliff-Rush closure as I_S ∩ I_T");
  closure->add_option("ideal", o.ideal, "Ideal, e.g. \"y^3 + x^2\" or \"[[0,3],[2,0]]\"")->required();
  closure->add_option("--format", o.format)->check(CLI::IsMember(report_formats));

  auto* check = app.add_subcommand("check", "Check the integral-closure hypothesis");
  check->add_option("ideal", o.ideal)->required();
  check->add_option("--format", o.format)->check(CLI::IsMember(report_formats));

  auto* oracle = app.add_subcommand("oracle", "Compare the engine against the colon chain I^{l+1}:I^l");
  oracle->add_option("ideal", o.ideal);
  oracle->add_option("--max-power", o.max_power, "Chain length (default 2q)")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", o.seed, "Run random hypothesis-satisfying ideals from this seed");
  oracle->add_option("--count", o.count, "Number of random cases with --seed")->check(CLI::PositiveNumber);
  oracle->add_option("--format", o.format)->check(CLI::IsMember(report_formats));

  auto* powers = app.add_subcommand("powers", "Ratliff-Rush verdict for I, I^2, ..., I^L");
  powers->add_option("ideal", o.ideal)->required();
  powers->add_option("--upto", o.upto)->required()->check(CLI::PositiveNumber);
  powers->add_option("--format", o.format)->check(CLI::IsMember(report_formats));

  auto* family = app.add_subcommand("family", "Construct a named ideal family");
  family->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> family_names{
      {"two", "<x^C, y^D>: C D"},
      {"three", "<x^C, x^U y^V, y^D>: C D U V"},
      {"crispin", "I_{d,k}: D K"},
      {"mk", "I_{m,k}: M K"},
      {"sigma", "sigma family: D C COUNT:PART..."},
      {"gap", "generator-gap family: C D"}};
  std::string family_name;
  for (const auto& [name, help] : family_names) {
    auto* sub = family->add_subcommand(name, help);
    sub->add_option("--format", o.format)->check(CLI::IsMember(report_formats));
    if (name == "sigma") {
      sub->add_option("args", o.sigma_parts, "D C COUNT:PART...")->required();
    } else {
      sub->add_option("params", o.numbers)->required();
    }
    sub->callback([&family_name, name = name] { family_name = name; });
  }

  auto* intclosure = app.add_subcommand("intclosure", "Integral closure of <x^C, y^D>");
  intclosure->add_option("c_d", o.numbers)->expected(2)->required();
  intclosure->add_option("--format", o.format)->check(CLI::IsMember(report_formats));

  auto* staircase = app.add_subcommand("staircase", "Draw the staircase diagram");
  staircase->add_option("ideal", o.ideal)->required();
  staircase->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "svg", "pairs"}));
  staircase->add_flag("--overlay", o.overlay, "Mark closure, I_S and I_T points outside I");
  staircase->add_option("--out", o.out, "Write the diagram to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*closure) return cmd_closure(o);
    if (*check) return cmd_check(o);
    if (*oracle) return cmd_oracle(o);
    if (*powers) return cmd_powers(o);
    if (*family) return cmd_family(family_name, o);
    if (*intclosure) return cmd_intclosure(o);
    if (*staircase) return cmd_staircase(o);
  } catch (const rrc::HypothesisViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!o.ideal.empty()) {
      try {
        const auto ideal = parse_primary(o.ideal);
        std::cout << rrc::render_verdict_text(ideal, rrc::check_hypothesis(ideal));
      } catch (const rrc::Error&) {
      }
    }
    return kHypothesis;
  } catch (const rrc::NegativeShiftError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kHypothesis;
  } catch (const rrc::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOverflow;
  } catch (const rrc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}
