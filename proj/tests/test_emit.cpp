#include <doctest.h>
#include <json.hpp>

#include "dot_grammar.hpp"
#include "msc/emit.hpp"
#include "msc/errors.hpp"

using namespace msc;
using nlohmann::json;

namespace {

const EmitOptions Json{Format::json, false};
const EmitOptions Dot{Format::dot, false};

std::vector<FusionData> all_pairs() {
  std::vector<FusionData> out;
  for (const auto& name : pair_names()) {
    if (!pair_takes_n(name)) {
      out.push_back(fusion_matrices(normal_pair(name)));
      continue;
    }
    for (int n = pair_min_n(name); n <= 8; ++n) out.push_back(fusion_matrices(normal_pair(name, n)));
  }
  return out;
}

} // namespace

TEST_CASE("glyphs") {
  CHECK(glyphs("delta_0^+") == "δ₀⁺");
  CHECK(glyphs("hat(phi_1)") == "φ̂₁");
  CHECK(glyphs("check(rho_2^+)") == "ρ̌₂⁺");
  CHECK(glyphs("tau_1''") == "τ₁''");
  CHECK(glyphs("delta_12") == "δ₁₂");
  CHECK(glyphs("omega_4") == "ω₄");
  CHECK(glyphs("chi_3") == "χ₃");
  CHECK(glyphs("A_{2n-1}^(2)") == "A₂ₙ₋₁⁽²⁾");
  CHECK(glyphs("x_{ab}") == "x_{ab}");
}

TEST_CASE("dot recognizer") {
  CHECK(dotcheck::check("digraph g { 0 [label=\"a (1)\"]; 0 -> 1 [multiplicity=2]; }").empty());
  CHECK(dotcheck::check("graph { a -- b; subgraph s { c } }").empty());
  CHECK_FALSE(dotcheck::check("digraph g { 0 -- 1; }").empty());
  CHECK_FALSE(dotcheck::check("digraph g { 0 -> ; }").empty());
  CHECK_FALSE(dotcheck::check("digraph g { 0 [label=\"x] }").empty());
  CHECK_FALSE(dotcheck::check("digraph g { 0 }}").empty());
}

TEST_CASE("pair renderings") {
  for (const auto& d : all_pairs()) {
    const std::string who = d.pair.name + " " + std::to_string(d.pair.n);
    for (Side s : {Side::restriction, Side::induction})
      for (bool uni : {false, true}) {
        const auto dot = emit_pair(d, {Format::dot, uni}, s);
        CHECK_MESSAGE(dotcheck::check(dot).empty(), who << ": " << dotcheck::check(dot));
        const auto g = graph(d, s);
        for (std::size_t i = 0; i < g.labels.size(); ++i)
          CHECK(dot.find("  " + std::to_string(i) + " [label=\"") != std::string::npos);
      }
    const auto j = json::parse(emit_pair(d, Json));
    CHECK(j["A"].get<IntMatrix>() == d.A);
    CHECK(j["B"].get<IntMatrix>() == d.B);
    CHECK(j["cartan_A"].get<IntMatrix>() == d.cartanA);
    CHECK(j["cartan_B"].get<IntMatrix>() == d.cartanB);
    CHECK(j["dynkin_type"]["restriction"] == graph(d, Side::restriction).dynkin_type);
    CHECK(j["dynkin_type"]["induction"] == graph(d, Side::induction).dynkin_type);
    CHECK(emit_pair(d, {}).find(graph(d, Side::induction).dynkin_type) != std::string::npos);
  }
}

TEST_CASE("edge rendering") {
  const auto d = fusion_matrices(normal_pair("D4^3"));
  const auto dot = emit_pair(d, Dot, Side::induction);
  // the triple bond of G_2^(1) points at one end
  CHECK(dot.find("multiplicity=3, label=\"3\"") != std::string::npos);
  CHECK(dot.find("multiplicity=1, dir=none") != std::string::npos);
}

TEST_CASE("chartable json") {
  for (const char* f : {"binary_tetrahedral", "binary_octahedral", "symmetric4", "alternating4"}) {
    const auto t = table(family(f));
    const auto j = json::parse(emit_chartable(t, Json));
    CHECK(j["labels"].get<std::vector<std::string>>() == t.labels);
    REQUIRE(j["classes"].size() == t.group->num_classes());
    REQUIRE(j["values"].size() == t.size());
    std::size_t total = 0;
    for (std::size_t c = 0; c < t.group->num_classes(); ++c) total += j["classes"][c]["size"].get<std::size_t>();
    CHECK(total == t.group->order());
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t c = 0; c < t.group->num_classes(); ++c)
        CHECK(Cyclotomic::parse(j["values"][i][c].get<std::string>()) == t.irreducibles[i].values[c]);
  }
  const auto text = emit_chartable(table(family("binary_tetrahedral")), {});
  CHECK(text.find("size") != std::string::npos);
  CHECK(text.find("tau_1''") != std::string::npos);
}

TEST_CASE("poincare rendering") {
  const auto d = fusion_matrices(normal_pair("A2^2"));
  auto p = poincare(d, "A2^2", Side::restriction, 0, 10, true);
  const auto text = emit_poincare(p, {});
  CHECK(text.find("series: 1/(1 - 4t^2)") != std::string::npos);
  CHECK(text.find("coefficients: 1, 0, 4, 0, 16, 0, 64, 0, 256, 0") != std::string::npos);
  CHECK(emit_poincare(p, {Format::text, true}).find("1/(1 − 4t²)") != std::string::npos);
  const auto j = json::parse(emit_poincare(p, Json));
  CHECK(j["numerator"] == json::array({1}));
  CHECK(j["denominator"] == json::array({1, 0, -4}));
  CHECK(j["coefficients"] == json::array({1, 0, 4, 0, 16, 0, 64, 0, 256, 0}));
  CHECK_THROWS_AS(poincare(d, "A2^2", Side::restriction, 5, 10, false), DomainError);
  CHECK_THROWS_AS(poincare(d, "A2^2", Side::restriction, 0, 0, false), DomainError);
  // beyond 64 bits the coefficients are strings
  const auto big = json::parse(emit_poincare(poincare(d, "A2^2", Side::restriction, 0, 80, false), Json));
  CHECK(big["coefficients"][78] == "302231454903657293676544");
}

TEST_CASE("other renderings") {
  const auto c = json::parse(emit_chebyshev(chebyshev(ChebyshevKind::first, 4), Json));
  CHECK(c["coefficients"] == json::array({1, 0, -8, 0, 8}));
  CHECK(emit_chebyshev(chebyshev(ChebyshevKind::second, 2), {}).find("U_2(t) = -1 + 4t^2") != std::string::npos);
  const auto e = json::parse(emit_exponents(exponents_catalog("E_6^(2)"), Json));
  CHECK(e["exponents"] == json::array({0, 2, 3, 4, 6}));
  CHECK(e["finite"]["type"] == "F_4");
  CHECK(emit_exponents(exponents_catalog("F_4"), {Format::text, true}).find("F₄") != std::string::npos);
  const auto g = json::parse(emit_group(*family("binary_dihedral", 3), Json));
  CHECK(g["order"] == 12);
  CHECK(g["classes"].size() == 6);
  VerifyReport r{"x", {{"a", true, ""}, {"b", false, "why"}}};
  const auto v = json::parse(emit_verify({r}, Json));
  CHECK(v["failed"] == 1);
  CHECK(v["passed"] == false);
  CHECK(emit_verify({r}, {}).find("FAIL b: why") != std::string::npos);
}
