#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "msc.h"

namespace {

constexpr int exit_usage = 64;
constexpr int exit_internal = 70;

struct Output {
  bool json = false;
  bool dot = false;
  bool unicode = false;
  msc_format format() const { return json ? MSC_FORMAT_JSON : dot ? MSC_FORMAT_DOT : MSC_FORMAT_TEXT; }
};

const char* kind_name(int code) {
  switch (code) {
  case 1: return "domain";
  case 2: return "verification";
  case exit_usage: return "usage";
  default: return "internal";
  }
}

int exit_code(msc_status s) {
  switch (s) {
  case MSC_OK: return 0;
  case MSC_ERR_DOMAIN: return 1;
  case MSC_ERR_VERIFICATION: return 2;
  case MSC_ERR_INVALID_ARGUMENT: return exit_usage;
  default: return exit_internal;
  }
}

void report_error(const Output& out, int code, const std::string& message, const nlohmann::json& failed = nullptr) {
  if (out.json) {
    nlohmann::json j{{"error", kind_name(code)}, {"exit_code", code}, {"message", message}};
    if (!failed.is_null()) j["failed"] = failed;
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "msc: " << message << "\n";
  }
}

// Prints the library's text and maps the status to an exit code.
int finish(const Output& out, msc_status s, char* text) {
  if (text) {
    std::fputs(text, stdout);
    std::fflush(stdout);
  }
  nlohmann::json failed = nullptr;
  if (s == MSC_ERR_VERIFICATION && out.json && text) {
    // list the failing checks from the JSON report
    auto report = nlohmann::json::parse(text, nullptr, false);
    if (report.is_object() && report.contains("reports")) {
      failed = nlohmann::json::array();
      for (const auto& r : report["reports"])
        for (const auto& c : r["checks"])
          if (!c["passed"].get<bool>())
            failed.push_back({{"subject", r["subject"]}, {"check", c["name"]}, {"detail", c["detail"]}});
    }
  }
  msc_string_free(text);
  const int code = exit_code(s);
  if (code) report_error(out, code, msc_last_error(), failed);
  return code;
}

msc_side parse_side(const std::string& s) { return s == "ind" ? MSC_SIDE_INDUCTION : MSC_SIDE_RESTRICTION; }

int param(const std::optional<int>& n) { return n ? *n : MSC_NO_PARAM; }

int pair_poincare(const Output& out, const std::string& name, const std::optional<int>& n, const std::string& side,
                  std::size_t vertex, std::size_t terms, bool closed_form) {
  msc_pair* p = nullptr;
  if (msc_status s = msc_pair_open(name.c_str(), param(n), &p)) return finish(out, s, nullptr);
  char* text = nullptr;
  msc_status s = msc_pair_poincare(p, parse_side(side), vertex, terms, closed_form, out.format(), out.unicode, &text);
  msc_pair_free(p);
  return finish(out, s, text);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"McKay-Slodowy correspondence: groups, character tables, representation graphs, Poincare series"};
  app.require_subcommand(1);
  Output out;
  auto* json_flag = app.add_flag("--json", out.json, "JSON output");
  auto* dot_flag = app.add_flag("--dot", out.dot, "DOT output (pair only)");
  json_flag->excludes(dot_flag);
  app.add_flag("--unicode", out.unicode, "Greek letters, sub- and superscripts");

  std::string family, name, side = "res", type, kind;
  std::optional<int> n;
  std::optional<int> pos_n;
  bool numeric = false, closed_form = false, all = false;
  std::size_t vertex = 0, terms = 10;
  unsigned cheb_n = 0;
  int max_n = 8;
  const auto sides = CLI::IsMember({"res", "ind"});

  auto* group = app.add_subcommand("group", "Classes of a named group");
  group->fallthrough();
  group->add_option("family", family, "cyclic, binary_dihedral, binary_tetrahedral, binary_octahedral, symmetric4, alternating4")
      ->required();
  group->add_option("param", pos_n, "Family parameter");
  group->add_option("--n", n, "Family parameter");

  auto* chartable = app.add_subcommand("chartable", "Character table of a named group");
  chartable->fallthrough();
  chartable->add_option("family", family, "Group family")->required();
  chartable->add_option("param", pos_n, "Family parameter");
  chartable->add_option("--n", n, "Family parameter");
  chartable->add_flag("--numeric", numeric, "Compute from class sums and snap to exact values");

  auto* pair = app.add_subcommand("pair", "Fusion matrices and representation graphs of a pair");
  pair->fallthrough();
  pair->add_option("name", name, "A2n-1^2, Dn+1^2, A2n^2, E6^2, D4^3, A2^2, S4A4")->required();
  pair->add_option("--n", n, "Family parameter");
  pair->add_option("--side", side, "Graph drawn by --dot")->check(sides);
  auto* pair_series = pair->add_subcommand("poincare", "Multiplicity series at one vertex");
  pair_series->fallthrough();
  pair_series->add_option("--side", side, "res or ind")->check(sides);
  pair_series->add_option("--vertex", vertex, "Basis index");
  pair_series->add_option("--terms", terms, "Number of coefficients")->check(CLI::PositiveNumber);
  pair_series->add_flag("--closed-form", closed_form, "Print the reduced fraction");

  auto* poincare = app.add_subcommand("poincare", "Multiplicity series at one vertex");
  poincare->fallthrough();
  poincare->add_option("--pair", name, "Pair name")->required();
  poincare->add_option("--n", n, "Family parameter");
  poincare->add_option("--side", side, "res or ind")->check(sides);
  poincare->add_option("--vertex", vertex, "Basis index");
  poincare->add_option("--terms", terms, "Number of coefficients")->check(CLI::PositiveNumber);
  poincare->add_flag("--closed-form", closed_form, "Print the reduced fraction");

  auto* chebyshev = app.add_subcommand("chebyshev", "Coefficients of T_n or U_n");
  chebyshev->fallthrough();
  chebyshev->add_option("kind", kind, "T or U")->required()->check(CLI::IsMember({"T", "U"}));
  chebyshev->add_option("N", cheb_n, "Degree")->required();

  auto* exponents = app.add_subcommand("exponents", "Exponents and Coxeter number of a type");
  exponents->fallthrough();
  exponents->add_option("--type", type, "e.g. E_6^(2), C_{10}^(1), F_4")->required();

  auto* verify = app.add_subcommand("verify", "Run the fixtures and invariants");
  verify->fallthrough();
  auto* verify_pair = verify->add_option("--pair", name, "Pair name");
  verify->add_option("--n", n, "Family parameter; all n up to 8 when omitted");
  auto* verify_all = verify->add_flag("--all", all, "Every pair and the global checks");
  verify->add_option("--max-n", max_n, "Largest n for family pairs under --all")->check(CLI::PositiveNumber);
  verify_pair->excludes(verify_all);
  verify->require_option(1, 3);

  try {
    app.parse(argc, argv);
    if (verify->parsed() && !all && name.empty()) throw CLI::RequiredError("--pair or --all");
    if (n && pos_n) throw CLI::ValidationError("--n", "given twice");
    if (out.dot && !pair->parsed()) throw CLI::ValidationError("--dot", "only the pair subcommand renders DOT");
    if (out.dot && pair_series->parsed()) throw CLI::ValidationError("--dot", "a series has no DOT rendering");
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    report_error(out, exit_usage, e.what());
    std::cerr << app.help();
    return exit_usage;
  }
  if (pos_n) n = pos_n;

  char* text = nullptr;
  msc_status s = MSC_OK;
  if (group->parsed()) {
    s = msc_group(family.c_str(), param(n), out.format(), out.unicode, &text);
  } else if (chartable->parsed()) {
    s = msc_chartable(family.c_str(), param(n), numeric, out.format(), out.unicode, &text);
  } else if (pair->parsed()) {
    if (pair_series->parsed()) return pair_poincare(out, name, n, side, vertex, terms, closed_form);
    msc_pair* p = nullptr;
    if ((s = msc_pair_open(name.c_str(), param(n), &p)) == MSC_OK) {
      s = msc_pair_render(p, out.format(), out.unicode, parse_side(side), &text);
      msc_pair_free(p);
    }
  } else if (poincare->parsed()) {
    return pair_poincare(out, name, n, side, vertex, terms, closed_form);
  } else if (chebyshev->parsed()) {
    s = msc_chebyshev(kind[0], cheb_n, out.format(), out.unicode, &text);
  } else if (exponents->parsed()) {
    s = msc_exponents(type.c_str(), out.format(), out.unicode, &text);
  } else if (all) {
    s = msc_verify_all(max_n, out.format(), out.unicode, &text);
  } else {
    s = msc_verify_pair(name.c_str(), param(n), out.format(), out.unicode, &text);
  }
  return finish(out, s, text);
}
