#include <doctest.h>

#include <cmath>
#include <random>

#include "msc/cyclotomic.hpp"
#include "msc/errors.hpp"

using namespace msc;

namespace {

// Test-only oracle: schoolbook product of power-basis vectors followed by
// long division by a hand-written modulus polynomial (monic, constant first).
std::vector<Rational> oracle_product_mod(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                         const std::vector<long>& modulus) {
  std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  const std::size_t d = modulus.size() - 1;
  for (std::size_t i = c.size(); i-- > d;) {
    Rational t = c[i];
    for (std::size_t j = 0; j <= d; ++j) c[i - d + j] -= t * modulus[j];
  }
  c.resize(d, Rational(0));
  return c;
}

Cyclotomic random_element(std::mt19937& rng) {
  static const unsigned conductors[] = {1, 3, 4, 5, 8, 12, 7, 9, 16, 15};
  unsigned n = conductors[rng() % 10];
  std::vector<Rational> d(n);
  for (auto& c : d) c = Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
  return Cyclotomic::from_dense(n, d);
}

bool near(std::complex<double> a, std::complex<double> b, double tol) { return std::abs(a - b) <= tol; }

} // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<Integer>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(105).size() == 49);
  CHECK(euler_phi(36) == 12);
}

TEST_CASE("root_of_unity") {
  CHECK(root_of_unity(1, 0) == Cyclotomic(1));
  Cyclotomic i = root_of_unity(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  Cyclotomic s = root_of_unity(8, 1) + root_of_unity(8, -1);
  CHECK(s * s == Cyclotomic(2));
  CHECK(root_of_unity(6, 3) == Cyclotomic(-1));
  CHECK(root_of_unity(10, 2).conductor() == 5);
}

TEST_CASE("arith examples") {
  CHECK(arith(root_of_unity(3, 1), root_of_unity(3, 2), ArithOp::add) == Cyclotomic(-1));
  CHECK(root_of_unity(12, 1).pow(3) == root_of_unity(4, 1));
  CHECK(root_of_unity(12, 3).conductor() == 4);

  // (zeta_8 + zeta_8^-1)^2 against the schoolbook oracle modulo x^4 + 1.
  std::vector<Rational> v = {0, 1, 0, 0, 0, 0, 0, 1};
  auto folded = oracle_product_mod(v, v, {-1, 0, 0, 0, 0, 0, 0, 0, 1}); // mod x^8 - 1
  auto reduced = oracle_product_mod(folded, {1}, {1, 0, 0, 0, 1});
  CHECK(reduced == std::vector<Rational>{2, 0, 0, 0});
  Cyclotomic s = root_of_unity(8, 1) + root_of_unity(8, -1);
  CHECK(arith(s, s, ArithOp::mul) == Cyclotomic(2));
  CHECK_THROWS_AS(arith(s, Cyclotomic(0), ArithOp::div), DomainError);
}

TEST_CASE("products agree with the schoolbook oracle") {
  std::mt19937 rng(7);
  const std::vector<long> phi9 = {1, 0, 0, 1, 0, 0, 1};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> a(6), b(6);
    for (auto& c : a) c = static_cast<long>(rng() % 9) - 4;
    for (auto& c : b) c = static_cast<long>(rng() % 9) - 4;
    auto expected = Cyclotomic::from_dense(9, oracle_product_mod(a, b, phi9));
    CHECK(Cyclotomic::from_dense(9, a) * Cyclotomic::from_dense(9, b) == expected);
  }
}

TEST_CASE("to_complex") {
  CHECK(near(Cyclotomic(1).to_complex(), {1.0, 0.0}, 1e-15));
  CHECK(near(root_of_unity(4, 1).to_complex(), {0.0, 1.0}, 1e-15));
  CHECK(near((root_of_unity(8, 1) + root_of_unity(8, -1)).to_complex(), {std::sqrt(2.0), 0.0}, 1e-12));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    Cyclotomic a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Cyclotomic(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclotomic(1));
      CHECK(a.norm() != 0);
      CHECK((b / a) * a == b);
    }
    CHECK(a.conj().conj() == a);
    auto z = (a.conj() * a).to_complex();
    CHECK(std::abs(z.imag()) < 1e-10);
    auto exact = a.to_complex() * b.to_complex();
    CHECK(near((a * b).to_complex(), exact, 1e-9 * (1 + std::abs(exact))));
  }
}

TEST_CASE("lowering is idempotent and value preserving") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = 2 + rng() % 40;
    std::vector<Rational> d(n, Rational(0));
    unsigned step = 1 + rng() % 4;
    for (unsigned k = 0; k < n; k += step) d[k] = static_cast<long>(rng() % 5) - 2;
    Cyclotomic x = Cyclotomic::from_dense(n, d);
    double mag = 0;
    std::complex<double> direct = 0;
    for (unsigned k = 0; k < n; ++k) {
      mag += std::abs(d[k].get_d());
      direct += d[k].get_d() * std::polar(1.0, 2 * M_PI * k / n);
    }
    CHECK(n % x.conductor() == 0);
    CHECK(near(x.to_complex(), direct, 1e-12 * (1 + mag)));
    Cyclotomic again = Cyclotomic::from_dense(x.conductor(), x.coeffs());
    CHECK(again == x);
    CHECK(again.conductor() == x.conductor());
  }
}

TEST_CASE("text and json round trip") {
  Cyclotomic x = root_of_unity(8, 1) * Cyclotomic(Rational(3, 4)) + Cyclotomic(Rational(-1, 2));
  CHECK(Cyclotomic::parse(x.to_string()) == x);
  CHECK(Cyclotomic::from_json(x.to_json()) == x);
  CHECK(x.to_string() == "cyc(8)[-1/2, 3/4, 0, 0]");
  CHECK(Cyclotomic::parse("cyc(3)[0, 1, 1]") == Cyclotomic(-1));
  CHECK_THROWS_AS(Cyclotomic::parse("cyc(0)[1]"), DomainError);
  CHECK_THROWS_AS(Cyclotomic::parse("cyc(4)[1/0]"), DomainError);
  CHECK_THROWS_AS(Cyclotomic::parse("zeta(4)[1]"), DomainError);
  CHECK(Cyclotomic(Rational(5)).to_rational() == 5);
  CHECK_THROWS_AS(root_of_unity(4, 1).to_rational(), DomainError);
}
