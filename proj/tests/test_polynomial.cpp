#include <doctest.h>

#include <random>

#include "msc/errors.hpp"
#include "msc/polynomial.hpp"

using namespace msc;

namespace {

// Oracle: evaluate the matrix at t = 0..deg, take rational Gaussian
// determinants, then rebuild the polynomial by Lagrange interpolation.
IntPolynomial oracle_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  int deg = 0;
  for (const auto& row : m)
    for (const auto& p : row) deg += std::max(p.degree(), 0);
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= deg; ++k) {
    Rational t = k;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].eval(t);
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a[p][c] == 0) ++p;
      if (p == n) {
        d = 0;
        break;
      }
      if (p != c) {
        std::swap(a[p], a[c]);
        d = -d;
      }
      d *= a[c][c];
      for (std::size_t r = c + 1; r < n; ++r) {
        Rational f = a[r][c] / a[c][c];
        for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      }
    }
    xs.push_back(t);
    ys.push_back(d);
  }
  std::vector<Rational> poly(xs.size(), Rational(0));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += ys[i] * basis[k] / denom;
  }
  std::vector<Integer> out;
  for (auto& c : poly) {
    REQUIRE(c.get_den() == 1);
    out.push_back(c.get_num());
  }
  return IntPolynomial(out);
}

IntPolynomial random_poly(std::mt19937& rng, int maxdeg) {
  std::vector<Integer> c(static_cast<std::size_t>(rng() % (maxdeg + 1)) + 1);
  for (auto& x : c) x = static_cast<long>(rng() % 7) - 3;
  return IntPolynomial(c);
}

} // namespace

TEST_CASE("basic arithmetic and printing") {
  IntPolynomial p{1, -2, -3};
  CHECK(p.to_string() == "1 - 2t - 3t^2");
  CHECK((IntPolynomial{1, -3} * IntPolynomial{1, 1}) == p);
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{0, 1}.to_string() == "t");
  CHECK(p.reversed(3) == IntPolynomial{0, -3, -2, 1});
  CHECK(divide_exact(p, IntPolynomial{1, 1}) == IntPolynomial{1, -3});
  CHECK_THROWS_AS(divide_exact(p, IntPolynomial{1, 2}), VerificationError);
}

TEST_CASE("gcd") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    IntPolynomial f = random_poly(rng, 3), g = random_poly(rng, 3), h = random_poly(rng, 3);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    IntPolynomial d = gcd(f * g, f * h);
    CHECK_NOTHROW(divide_exact(f * g, d));
    CHECK_NOTHROW(divide_exact(f * h, d));
    CHECK_NOTHROW(divide_exact(d, f.primitive()));
  }
  CHECK(gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 2, 1}) == IntPolynomial{1, 1});
}

TEST_CASE("determinants against interpolation oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix a(n, std::vector<long long>(n));
    for (auto& row : a)
      for (auto& v : row) v = static_cast<long long>(rng() % 5);
    PolyMatrix m = identity_minus_t(a);
    IntPolynomial expected = oracle_det(m);
    CHECK(determinant_cofactor(m) == expected);
    CHECK(determinant_bareiss(m) == expected);
    CHECK(determinant(identity_minus_t(a, false)) == expected);
  }
  IntMatrix a{{0, 0, 1}, {0, 0, 1}, {1, 2, 2}};
  CHECK(determinant(identity_minus_t(a)) == IntPolynomial{1, -2, -3});
}

TEST_CASE("bareiss on larger matrices") {
  std::mt19937 rng(5);
  std::size_t n = 14;
  IntMatrix a(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = 1;
  a[0][n - 1] = a[n - 1][0] = 1;
  // cycle graph: det(I - tA) = 2 - t^n T_n-like; compare with cofactor on the same matrix
  PolyMatrix m = identity_minus_t(a);
  CHECK(determinant_bareiss(m) == determinant_cofactor(m));
}

TEST_CASE("rational series") {
  RationalSeries s(IntPolynomial{1, -2, -2}, IntPolynomial{1, -2, -3});
  CHECK(s.coefficients(7) == std::vector<Integer>{1, 0, 1, 2, 7, 20, 61, 182});
  RationalSeries r(IntPolynomial{1, -1} * IntPolynomial{1, 2}, IntPolynomial{1, -1} * IntPolynomial{1, -4});
  CHECK(r.numerator() == IntPolynomial{1, 2});
  CHECK(r.denominator() == IntPolynomial{1, -4});
  CHECK(r == RationalSeries(IntPolynomial{2, 4}, IntPolynomial{2, -8}));
  CHECK(RationalSeries(IntPolynomial{-1}, IntPolynomial{-1, 4}).to_string() == "1/(1 - 4t)");
  CHECK_THROWS_AS(RationalSeries(IntPolynomial{1}, IntPolynomial{0, 1}), DomainError);
}
