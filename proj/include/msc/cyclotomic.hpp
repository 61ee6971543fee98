#pragma once

/**
 * Exact arithmetic in cyclotomic fields Q(zeta_n).
 *
 * A value is stored in the power basis 1, zeta_n, ..., zeta_n^{phi(n)-1}
 * after reduction modulo the n-th cyclotomic polynomial, always at its
 * minimal conductor. With that canonical form, equality is plain
 * coefficient comparison and values coming from different groups compare
 * directly.
 */

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace msc {

using Integer = mpz_class;
using Rational = mpq_class;

unsigned euler_phi(unsigned n);

/// Coefficients of Phi_n, constant term first. Cached; safe to call concurrently.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

class Cyclotomic {
public:
  Cyclotomic();
  Cyclotomic(long value); // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value); // NOLINT(google-explicit-constructor)

  /// Element sum_k dense[k] * zeta_n^k; dense may have any length.
  static Cyclotomic from_dense(unsigned n, std::vector<Rational> dense);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  bool is_integer() const;
  /// Throws DomainError when the value is not rational.
  Rational to_rational() const;
  Integer to_integer() const;

  /// Complex conjugate, zeta -> zeta^{-1}.
  Cyclotomic conj() const;
  /// Galois automorphism zeta_n -> zeta_n^a; requires gcd(a, conductor) = 1.
  Cyclotomic galois(long a) const;
  /// Product of all Galois conjugates over Q.
  Rational norm() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(unsigned k) const;

  std::complex<double> to_complex() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// "cyc(n)[c0, c1, ...]"; integer coefficients print without a denominator.
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

  nlohmann::json to_json() const;
  static Cyclotomic from_json(const nlohmann::json& j);

  std::size_t hash() const;

private:
  Cyclotomic(unsigned n, std::vector<Rational> coeffs);
  void lower();

  unsigned conductor_ = 1;
  std::vector<Rational> coeffs_; // length phi(conductor_)
};

/// sum_i w_i a_i conj(b_i), accumulated densely and reduced once; w defaults to all ones.
Cyclotomic dot_conj(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b,
                    const std::vector<Rational>* w = nullptr);

/// zeta_n^k.
Cyclotomic root_of_unity(long n, long k);

enum class ArithOp { add, sub, mul, div };
Cyclotomic arith(const Cyclotomic& a, const Cyclotomic& b, ArithOp op);

/// Exact value as a short human string: integers, rationals, or the cyc() form.
std::string pretty(const Cyclotomic& x);

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

} // namespace msc

template <>
struct std::hash<msc::Cyclotomic> {
  std::size_t operator()(const msc::Cyclotomic& x) const noexcept { return x.hash(); }
};
