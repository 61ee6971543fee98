#include <doctest.h>

#include <cmath>

#include "msc/characters.hpp"
#include "msc/errors.hpp"

using namespace msc;

namespace {

// Oracle: the induction formula evaluated literally over all x in G.
ClassFunction induce_elementwise(const NormalPair& p, const ClassFunction& phi) {
  const auto& G = *p.G;
  std::vector<int> n_class(G.order(), -1);
  for (std::size_t i = 0; i < p.embed.size(); ++i)
    n_class[static_cast<std::size_t>(p.embed[i])] = static_cast<int>(p.N->class_of(static_cast<int>(i)));
  ClassFunction r{p.G, {}};
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    const int g = G.class_rep(c);
    Cyclotomic s(0);
    for (std::size_t x = 0; x < G.order(); ++x) {
      int conj = G.multiply(G.multiply(G.inverse(static_cast<int>(x)), g), static_cast<int>(x));
      if (n_class[static_cast<std::size_t>(conj)] >= 0) s += phi.values[static_cast<std::size_t>(n_class[static_cast<std::size_t>(conj)])];
    }
    r.values.push_back(s * Cyclotomic(Rational(1, static_cast<long>(p.N->order()))));
  }
  return r;
}

std::vector<long long> mult_of(const CharacterTable& t, std::initializer_list<std::pair<const char*, long long>> terms) {
  std::vector<long long> m(t.size(), 0);
  for (const auto& [label, k] : terms) m[t.index(label)] += k;
  return m;
}

} // namespace

TEST_CASE("inner products") {
  auto t = family("binary_tetrahedral");
  auto tt = table(t);
  CHECK(inner_product(trivial_character(t), trivial_character(t)) == Cyclotomic(1));
  CHECK(inner_product(tt["tau_1"], tt["tau_1"]) == Cyclotomic(1));
  auto s4 = table(family("symmetric4"));
  CHECK(inner_product(s4["rho_2^+"] * s4["rho_2^+"], s4["rho_1"]) == Cyclotomic(1));
  CHECK_THROWS_AS(inner_product(tt["tau_0"], s4["rho_0^+"]), DomainError);
}

TEST_CASE("closed-form tables are valid") {
  std::vector<GroupPtr> groups = {family("binary_tetrahedral"), family("binary_octahedral"), family("symmetric4"),
                                  family("alternating4")};
  for (int n = 2; n <= 8; ++n) {
    groups.push_back(family("binary_dihedral", n));
    groups.push_back(family("cyclic", n));
  }
  for (const auto& g : groups) {
    std::string why;
    CHECK_MESSAGE(table_is_valid(table(g), &why), g->name() << ": " << why);
  }
}

TEST_CASE("table entries") {
  auto c2 = table(family("cyclic", 2));
  CHECK(c2.irreducibles[0].values == std::vector<Cyclotomic>{1, 1});
  CHECK(c2.irreducibles[1].values == std::vector<Cyclotomic>{1, -1});

  auto d2 = table(family("binary_dihedral", 2));
  std::vector<long> degs;
  for (const auto& r : d2.irreducibles) degs.push_back(r.degree().to_integer().get_si());
  CHECK(degs == std::vector<long>{1, 1, 2, 1, 1});
  Cyclotomic i = root_of_unity(4, 1);
  // sqrt((-1)^2) = 1 on the principal branch.
  CHECK(d2["delta_2^+"].values[3] == Cyclotomic(1));
  CHECK(d2["delta_2^-"].values[3] == Cyclotomic(-1));
  auto d3 = table(family("binary_dihedral", 3));
  CHECK(d3["delta_3^+"].values[4] * d3["delta_3^+"].values[4] == Cyclotomic(-1));
  CHECK(d3["delta_3^+"].values[4] == i);

  auto o = table(family("binary_octahedral"));
  degs.clear();
  for (const auto& r : o.irreducibles) degs.push_back(r.degree().to_integer().get_si());
  CHECK(degs == std::vector<long>{1, 2, 3, 4, 2, 3, 2, 1});

  // The defining representation is delta_1 / tau_1 / omega_1^+ / xi_1 + xi_{n-1}.
  for (int n = 2; n <= 8; ++n) {
    auto g = family("binary_dihedral", n);
    CHECK(table(g)["delta_1"] == natural_character(g));
    auto t = table(g);
    for (int k = 1; k < n; ++k) {
      double expect = 2 * std::cos(M_PI * k / n);
      CHECK(std::abs(t["delta_1"].values[static_cast<std::size_t>(k + 1)].to_complex().real() - expect) < 1e-12);
    }
  }
  auto tg = family("binary_tetrahedral");
  CHECK(table(tg)["tau_1"] == natural_character(tg));
  auto og = family("binary_octahedral");
  CHECK(table(og)["omega_1^+"] == natural_character(og));

  auto gen = generate(family_generators(Family::binary_tetrahedral, 0));
  CHECK_THROWS_AS(table(gen), DomainError);
}

TEST_CASE("table_numeric agrees with table") {
  std::vector<GroupPtr> groups = {family("binary_tetrahedral"), family("binary_octahedral"), family("symmetric4"),
                                  family("alternating4")};
  for (int n = 2; n <= 8; ++n) {
    groups.push_back(family("binary_dihedral", n));
    groups.push_back(family("cyclic", n));
  }
  for (const auto& g : groups) CHECK_MESSAGE(same_up_to_permutation(table(g), table_numeric(g)), g->name());

  auto c3 = table_numeric(family("cyclic", 3));
  for (const auto& row : c3.irreducibles)
    for (const auto& v : row.values) CHECK((v == Cyclotomic(1) || v == root_of_unity(3, 1) || v == root_of_unity(3, 2)));

  // Works on a generic closure without a closed-form table.
  auto gen = generate(family_generators(Family::binary_octahedral, 0));
  CHECK(table_is_valid(table_numeric(gen)));
}

TEST_CASE("restriction and induction") {
  auto p = normal_pair("Dn+1^2", 4); // (D_4, C_8)
  auto tg = table(p.G), tn = table(p.N);
  for (int i = 1; i <= 3; ++i) {
    auto res = restrict(p, tg["delta_" + std::to_string(i)]);
    CHECK(decompose(tn, res) == mult_of(tn, {{("xi_" + std::to_string(i)).c_str(), 1}, {("xi_" + std::to_string(8 - i)).c_str(), 1}}));
    auto ind = induce(p, tn["xi_" + std::to_string(i)]);
    CHECK(ind == tg["delta_" + std::to_string(i)]);
  }
  CHECK(restrict(p, trivial_character(p.G)) == trivial_character(p.N));
  CHECK(induce(p, trivial_character(p.N)).degree() == Cyclotomic(static_cast<long>(p.index)));

  auto e6 = normal_pair("E6^2");
  auto to = table(e6.G), tt = table(e6.N);
  CHECK(decompose(tt, restrict(e6, to["omega_3"])) == mult_of(tt, {{"tau_1'", 1}, {"tau_1''", 1}}));

  auto d4 = normal_pair("D4^3");
  auto tT = table(d4.G), tD = table(d4.N);
  CHECK(decompose(tT, induce(d4, tD["delta_0^+"])) == mult_of(tT, {{"tau_0", 1}, {"tau_0'", 1}, {"tau_0''", 1}}));

  // Aggregate induction equals the literal element-wise formula.
  for (const auto& name : pair_names()) {
    auto q = pair_takes_n(name) ? normal_pair(name, pair_min_n(name) + 1) : normal_pair(name);
    auto tq = table(q.N);
    for (const auto& phi : tq.irreducibles) CHECK(induce(q, phi) == induce_elementwise(q, phi));
  }
}

TEST_CASE("frobenius reciprocity") {
  auto a2 = normal_pair("A2^2");
  auto r = frobenius_check(a2, table(a2.G), table(a2.N));
  CHECK(r.passed);
  CHECK(r.matrix.size() == 2);
  CHECK(r.matrix[0].size() == 5);

  auto t = family("binary_tetrahedral");
  auto same = make_pair("TT", t, t);
  auto rs = frobenius_check(same, table(t), table(t));
  CHECK(rs.passed);
  for (std::size_t i = 0; i < rs.matrix.size(); ++i)
    for (std::size_t j = 0; j < rs.matrix.size(); ++j) CHECK(rs.matrix[i][j] == (i == j ? 1 : 0));

  auto s4 = normal_pair("S4A4");
  auto ts = table(s4.G), ta = table(s4.N);
  auto rf = frobenius_check(s4, ts, ta);
  CHECK(rf.passed);
  CHECK(rf.matrix[ta.index("phi_1")][ts.index("rho_1")] == 1);
}
