#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "msc/mckay.hpp"
#include "msc/polynomial.hpp"

namespace msc {

enum class ChebyshevKind { first, second };

struct ChebyshevPoly {
  ChebyshevKind kind;
  unsigned n;
  IntPolynomial coeffs;
};

/// Three-term recursion p_{n+1} = 2t p_n - p_{n-1}.
ChebyshevPoly chebyshev(ChebyshevKind kind, unsigned n);
/// T_n = sum C(n,2i) t^(n-2i) (t^2-1)^i ; U_n = sum (-1)^i C(n-i,i) (2t)^(n-2i).
IntPolynomial chebyshev_additive(ChebyshevKind kind, unsigned n);
/// 2^(n-1) prod (t - cos((2i-1)pi/2n)) resp. 2^n prod (t - cos(pi i/(n+1))), in doubles.
double chebyshev_product(ChebyshevKind kind, unsigned n, double t);

struct IdentityFailure {
  unsigned n;
  std::string id; // "recursion=additive(T)", "T=U-tU", "product(U)", ...
  std::string detail;
};
struct IdentityReport {
  unsigned n_max = 0;
  std::size_t checks = 0;
  std::vector<IdentityFailure> failures;
  bool passed() const { return failures.empty(); }
};
IdentityReport chebyshev_identities_check(unsigned n_max, std::uint64_t seed = 20);

/// c_{n-1}(t) = det(I - tA^T) for the finite C_n diagram, from c_{k+1} = c_k - t^2 c_{k-1}.
/// Cross-checked against 2t^n T_n(1/2t) and the binomial form; VerificationError on mismatch.
IntPolynomial c_family(unsigned n);

struct ClosedFormReport {
  std::string family;
  int n = 0;
  RationalSeries computed;    // m_res^0 by Cramer
  RationalSeries formula;     // binomial closed form
  IntPolynomial det;          // det(I - t A^T), unreduced
  IntPolynomial det_formula;  // (1 - 4t^2) sum (-1)^i C(k-i, i) t^2i
  bool passed = false;
  std::string detail;
};
/// family is "A2n-1^2" or "Dn+1^2"; "A2n^2" shares the second formula.
ClosedFormReport closed_form_check(const std::string& family, int n);

struct Table6Row {
  std::string diagrams, exponents, coxeter;
};
/// The exponent table as printed, row by row.
const std::vector<Table6Row>& table6();

struct ExponentData {
  std::string type_label;
  std::vector<int> exponents;
  int coxeter = 0;
  std::string finite_label;
  std::vector<int> finite_exponents;
  int finite_coxeter = 0;
};
/// Affine labels as produced by affine_label ("A_5^(2)", "C_{10}^(1)"), or finite ones ("B_3", "F_4").
/// DomainError for anything the table does not cover.
ExponentData exponents_catalog(const std::string& label);

IntPolynomial characteristic_polynomial(const IntMatrix& m);
/// Yun: pairs (g, k) with f = c * prod g^k, each g square-free and primitive.
std::vector<std::pair<IntPolynomial, unsigned>> squarefree_factors(const IntPolynomial& f);
/// Companion eigensolve of each square-free factor, repeated by multiplicity.
std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& f);
std::vector<std::complex<double>> eigenvalues(const IntMatrix& m);

struct SpectrumReport {
  std::string type_label;   // restriction-side diagram
  std::vector<double> eigenvalues, characters;
  std::vector<double> cos_form;                 // 2cos(m pi / h) from the table; empty if not catalogued
  std::vector<double> finite_eigenvalues, finite_cos_form;
  bool matches_characters = false;
  bool matches_cos = false;
  bool matches_finite = false;
  bool cos_asserted = false;                    // false for A_2l^(2), A_2^(2) and uncatalogued graphs
  bool passed = false;
  std::string detail;
};
SpectrumReport spectrum_exponents_check(const FusionData& d, double tol = 1e-9);

} // namespace msc
