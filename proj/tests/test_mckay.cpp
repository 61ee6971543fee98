#include <doctest.h>

#include "msc/fixtures.hpp"
#include "msc/errors.hpp"
#include "msc/mckay.hpp"

using namespace msc;

namespace {

std::vector<NormalPair> all_pairs(int max_n = 8) {
  std::vector<NormalPair> out;
  for (const auto& name : pair_names()) {
    if (!pair_takes_n(name)) {
      out.push_back(normal_pair(name));
      continue;
    }
    for (int n = pair_min_n(name); n <= max_n; ++n) out.push_back(normal_pair(name, n));
  }
  return out;
}

std::string expected_type(const std::string& name, int n, Side s) {
  const bool r = s == Side::restriction;
  if (name == "A2n-1^2") return r ? affine_label('A', 2 * n - 1, 2) : affine_label('B', n, 1);
  if (name == "Dn+1^2") return r ? affine_label('D', n + 1, 2) : affine_label('C', n, 1);
  if (name == "A2n^2") return r ? affine_label('A', 2 * n, 2) : affine_label('C', n, 1);
  if (name == "E6^2") return r ? "E_6^(2)" : "F_4^(1)";
  if (name == "D4^3") return r ? "D_4^(3)" : "G_2^(1)";
  if (name == "A2^2") return r ? "A_2^(2)" : "A_1^(1)";
  return "unrecognized";
}

} // namespace

TEST_CASE("affine catalog: marks span the kernel") {
  for (std::size_t nodes = 2; nodes <= 12; ++nodes)
    for (const auto& t : affine_catalog(nodes)) {
      REQUIRE(t.cartan.size() == nodes);
      for (std::size_t i = 0; i < nodes; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < nodes; ++j) s += t.cartan[i][j] * t.marks[j];
        CHECK_MESSAGE(s == 0, t.label << " row " << i);
      }
    }
}

TEST_CASE("identification is permutation invariant") {
  auto cat = affine_catalog(5);
  for (const auto& t : cat) {
    std::vector<std::size_t> perm = {3, 0, 4, 1, 2};
    IntMatrix m(5, std::vector<long long>(5));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m[perm[i]][perm[j]] = t.cartan[i][j];
    auto id = identify(m);
    REQUIRE(id);
    CHECK(id->label == t.label);
  }
  // The catalog has no duplicates up to permutation.
  for (std::size_t nodes = 2; nodes <= 9; ++nodes)
    for (const auto& t : affine_catalog(nodes)) CHECK(identify(t.cartan)->label == t.label);
  CHECK_FALSE(identify({{2, -1}, {-1, 2}}));
  CHECK(unicode_label("A_5^(2)") == "A₅⁽²⁾");
  CHECK(unicode_label("A_{11}^(2)") == "A₁₁⁽²⁾");
}

TEST_CASE("bases") {
  auto s4 = fusion_matrices(normal_pair("S4A4"));
  CHECK(s4.res_degrees() == std::vector<long long>{1, 2, 3});
  CHECK(s4.ind_degrees() == std::vector<long long>{2, 2, 6});
  CHECK(s4.res.names == std::vector<std::string>{"check(rho_0^+)", "check(rho_1)", "check(rho_2^+)"});
  CHECK(s4.ind.names == std::vector<std::string>{"hat(phi_0)", "hat(phi_1)", "hat(phi_3)"});

  auto a2 = fusion_matrices(normal_pair("A2^2"));
  CHECK(a2.res_degrees() == std::vector<long long>{1, 2});
  CHECK(decompose(a2.tn, a2.res.members[1]) == std::vector<long long>{0, 2});
  CHECK(a2.ind_degrees() == std::vector<long long>{4, 4});

  auto e6 = fusion_matrices(normal_pair("E6^2"));
  CHECK(e6.res_degrees() == std::vector<long long>{1, 2, 3, 4, 2});

  auto d4 = fusion_matrices(normal_pair("D4^3"));
  CHECK(d4.ind_degrees() == std::vector<long long>{3, 6, 3});
  CHECK(d4.ind.origin[2].size() == 3);

  for (const auto& p : all_pairs(6)) {
    auto d = fusion_matrices(p);
    CHECK(d.res.members.size() == p.upsilon_n.size());
    CHECK(d.res.members[0] == trivial_character(p.N));
    CHECK(d.ind.members[0] == induce(p, trivial_character(p.N)));
  }
}

TEST_CASE("fusion matrices") {
  auto s4 = fusion_matrices(normal_pair("S4A4"));
  CHECK(s4.A == IntMatrix{{0, 0, 1}, {0, 0, 1}, {1, 2, 2}});
  CHECK(s4.B == IntMatrix{{0, 0, 1}, {0, 0, 2}, {1, 1, 2}});
  auto a2 = fusion_matrices(normal_pair("A2^2"));
  CHECK(a2.A == IntMatrix{{0, 4}, {1, 0}});
  CHECK(a2.B == IntMatrix{{0, 2}, {2, 0}});
  auto d4 = fusion_matrices(normal_pair("D4^3"));
  CHECK(d4.A == IntMatrix{{0, 1, 0}, {1, 0, 3}, {0, 1, 0}});
  CHECK(d4.B == IntMatrix{{0, 1, 0}, {1, 0, 1}, {0, 3, 0}});
  CHECK(d4.cartanA == IntMatrix{{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}});

  // Not closed under V: an unfaithful module on a generic pair still gives integral data.
  auto p = normal_pair("E6^2");
  auto tg = table(p.G);
  auto d = fusion_matrices(p, tg["omega_2^+"]);
  CHECK(d.v_label == "omega_2^+");
  CHECK_THROWS_AS(fusion_matrices(p, table(p.N)["tau_1"]), DomainError);
}

TEST_CASE("section identities and fusion rules") {
  for (const auto& p : all_pairs()) {
    auto d = fusion_matrices(p);
    auto fx = msc::fixtures::for_pair(p.name, p.n);
    CHECK(!fx.empty());
    for (const auto& f : fx) CHECK_MESSAGE(msc::fixtures::holds(d, f), p.name << " n=" << p.n << ": " << msc::fixtures::describe(f));
  }
}

TEST_CASE("dynkin identification") {
  for (const auto& p : all_pairs()) {
    auto d = fusion_matrices(p);
    for (Side s : {Side::restriction, Side::induction}) {
      auto g = graph(d, s);
      CHECK_MESSAGE(g.dynkin_type == expected_type(p.name, p.n, s), p.name << " n=" << p.n << " " << side_name(s));
      CHECK(g.connected);
    }
  }
  auto s4 = fusion_matrices(normal_pair("S4A4"));
  auto g = graph(s4, Side::restriction);
  CHECK(g.dynkin_type == "unrecognized");
  bool loop = false;
  for (const auto& e : g.edges) loop = loop || (e.i == e.j && e.multiplicity == 2);
  CHECK(loop);
  auto a2 = graph(fusion_matrices(normal_pair("A2^2")), Side::restriction);
  REQUIRE(a2.edges.size() == 1);
  CHECK(a2.edges[0].multiplicity == 4);
  CHECK(a2.edges[0].arrow_to == std::optional<std::size_t>(0));
}

TEST_CASE("null vectors and eigenvectors") {
  for (const auto& p : all_pairs()) {
    auto d = fusion_matrices(p);
    auto nv = null_vector_check(d);
    CHECK_MESSAGE(nv.passed(), p.name << " n=" << p.n);
    CHECK(nv.transposed);
    const bool split = p.name == "A2n^2" || p.name == "A2^2";
    if (p.name != "S4A4") CHECK_MESSAGE(nv.direct == !split, p.name << " n=" << p.n);
    auto ev = eigenvector_check(d);
    CHECK_MESSAGE(ev.passed, p.name << " n=" << p.n << ": " << ev.detail);
  }
  auto d4 = null_vector_check(fusion_matrices(normal_pair("D4^3")));
  CHECK(d4.alpha_A == std::vector<Rational>{1, 2, 1});
}
