#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "msc/cyclotomic.hpp"

namespace msc {

/// Dense univariate polynomial over Z in t; coeffs[i] multiplies t^i, no trailing zeros.
class IntPolynomial {
public:
  IntPolynomial() = default;
  IntPolynomial(std::vector<Integer> coeffs); // NOLINT(google-explicit-constructor)
  IntPolynomial(std::initializer_list<long> coeffs);
  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, unsigned k);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  Integer leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

  Integer content() const;
  IntPolynomial primitive() const;
  IntPolynomial derivative() const;
  /// Coefficients reversed and padded to length n + 1: t^n p(1/t).
  IntPolynomial reversed(unsigned n) const;

  Rational eval(const Rational& t) const;
  double eval(double t) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const Integer& s);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  IntPolynomial pow(unsigned k) const;

  /// e.g. "1 - 2t - 3t^2".
  std::string to_string(const std::string& var = "t") const;
  std::vector<long long> to_int64() const;

private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Exact quotient; throws VerificationError when b does not divide a over Z.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);
/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// Subresultant PRS gcd over Z with positive leading coefficient.
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

using IntMatrix = std::vector<std::vector<long long>>;
using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

/// I - t M^T (or I - t M when transpose is false).
PolyMatrix identity_minus_t(const IntMatrix& m, bool transpose = true);

IntPolynomial determinant_cofactor(const PolyMatrix& m);
IntPolynomial determinant_bareiss(const PolyMatrix& m);
/// Cofactor expansion up to size 12, Bareiss above.
IntPolynomial determinant(const PolyMatrix& m);

/// numerator / denominator with denominator(0) = 1, plus a lazily extended Taylor stream.
class RationalSeries {
public:
  RationalSeries();
  /// Reduces to lowest terms; throws DomainError if the denominator vanishes at 0.
  RationalSeries(const IntPolynomial& numerator, const IntPolynomial& denominator);

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

  Integer coefficient(std::size_t k) const;
  /// Coefficients 0..k inclusive.
  std::vector<Integer> coefficients(std::size_t k) const;

  /// Equality as rational functions.
  friend bool operator==(const RationalSeries& a, const RationalSeries& b);
  friend bool operator!=(const RationalSeries& a, const RationalSeries& b) { return !(a == b); }
  RationalSeries scaled(const Integer& s) const;

  std::string to_string() const;

private:
  struct Stream {
    std::mutex mu;
    std::vector<Integer> values;
  };
  IntPolynomial num_, den_;
  std::shared_ptr<Stream> stream_;
};

std::string integer_list(const std::vector<Integer>& v);

} // namespace msc
