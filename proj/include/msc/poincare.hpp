#pragma once

#include <string>
#include <vector>

#include "msc/mckay.hpp"
#include "msc/polynomial.hpp"

namespace msc {

/// <basis_j, 1>: the unit vector at 0 whenever the quotient G/N is abelian.
std::vector<Integer> initial_vector(const FusionData& d, Side side);

/// Coefficients 0..K of the multiplicity series at `vertex`, by c_k = M^T c_{k-1}.
std::vector<Integer> series_recursion(const FusionData& d, Side side, std::size_t vertex, std::size_t K);

/// det(I - tM^T with column `vertex` replaced by the initial vector) / det(I - tM^T), reduced.
RationalSeries series_cramer(const FusionData& d, Side side, std::size_t vertex);

/// prod over g in Upsilon(N) of (1 - chi_V(g) t); DomainError unless V is real-valued,
/// VerificationError if a coefficient is not a rational integer.
IntPolynomial denominator_product(const NormalPair& p, const ClassFunction& V);

struct DenominatorReport {
  IntPolynomial detA, detB, product;
  bool passed = false;
};
DenominatorReport denominator_identity_check(const FusionData& d);

/// dim Hom(basis_vertex, V^k) summed over the irreducible constituents.
Integer brute_force_multiplicity(const FusionData& d, Side side, std::size_t vertex, unsigned k);

/// Root lengths from the symmetrizer of the induction-side Cartan matrix; empty if not symmetrizable.
std::vector<bool> long_roots(const IntMatrix& cartan);

struct CorollaryRow {
  std::size_t vertex;
  bool long_root;
  Rational ratio;    // m_res / m_ind when constant, 0 otherwise
  Rational expected; // ratio the relation predicts
  bool holds;
};
struct CorollaryReport {
  std::string form; // "long/short" or "special"
  std::vector<CorollaryRow> rows;
  bool passed = true;
  std::string detail;
};
/// Regular pairs: m_res^i = m_ind^i (long) or |G:N| m_ind^i (short).
/// A2^2 and A2n^2: m_ind^0 = m_res^0 and m_ind^i = 2 m_res^i otherwise.
CorollaryReport corollary_relation_check(const FusionData& d);

} // namespace msc
