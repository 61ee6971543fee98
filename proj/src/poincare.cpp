#include "msc/poincare.hpp"

#include <sstream>

#include "msc/errors.hpp"

namespace msc {

namespace {

const IntMatrix& matrix(const FusionData& d, Side s) { return s == Side::restriction ? d.A : d.B; }

const std::vector<ClassFunction>& members(const FusionData& d, Side s) {
  return s == Side::restriction ? d.res.members : d.ind.members;
}

void check_vertex(const FusionData& d, std::size_t vertex) {
  if (vertex >= d.A.size())
    throw DomainError("vertex " + std::to_string(vertex) + " out of range 0.." + std::to_string(d.A.size() - 1));
}

// m_res / m_ind if constant.
Rational ratio(const RationalSeries& a, const RationalSeries& b) {
  // a = r b  <=>  na * db = r * nb * da
  IntPolynomial lhs = a.numerator() * b.denominator();
  IntPolynomial rhs = b.numerator() * a.denominator();
  if (lhs.is_zero() || rhs.is_zero()) return Rational(0);
  Rational r(lhs.leading(), rhs.leading());
  r.canonicalize();
  IntPolynomial l2 = lhs * Integer(r.get_den());
  IntPolynomial r2 = rhs * Integer(r.get_num());
  return l2 == r2 ? r : Rational(0);
}

} // namespace

std::vector<Integer> initial_vector(const FusionData& d, Side side) {
  const auto& ms = members(d, side);
  std::vector<Integer> h;
  for (const auto& m : ms) h.push_back(inner_product(m, trivial_character(m.group)).to_integer());
  return h;
}

std::vector<Integer> series_recursion(const FusionData& d, Side side, std::size_t vertex, std::size_t K) {
  check_vertex(d, vertex);
  const IntMatrix& M = matrix(d, side);
  const std::size_t n = M.size();
  std::vector<Integer> c = initial_vector(d, side), out{c[vertex]};
  for (std::size_t k = 1; k <= K; ++k) {
    std::vector<Integer> next(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (M[j][i]) next[i] += Integer(static_cast<long>(M[j][i])) * c[j];
    c = std::move(next);
    out.push_back(c[vertex]);
  }
  return out;
}

RationalSeries series_cramer(const FusionData& d, Side side, std::size_t vertex) {
  check_vertex(d, vertex);
  PolyMatrix m = identity_minus_t(matrix(d, side));
  const IntPolynomial den = determinant(m);
  const auto h = initial_vector(d, side);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][vertex] = IntPolynomial::constant(h[i]);
  return RationalSeries(determinant(m), den);
}

IntPolynomial denominator_product(const NormalPair& p, const ClassFunction& V) {
  if (!V.is_real()) throw DomainError("module is not self-dual (character not real)");
  std::vector<Cyclotomic> poly{Cyclotomic(1)};
  for (std::size_t gc : p.upsilon_n) {
    // multiply by (1 - chi t)
    std::vector<Cyclotomic> next(poly.size() + 1, Cyclotomic(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= poly[i] * V.values[gc];
    }
    poly = std::move(next);
  }
  std::vector<Integer> coeffs;
  for (const auto& c : poly) {
    if (!c.is_integer()) throw VerificationError("denominator coefficient " + c.to_string() + " is not an integer");
    coeffs.push_back(c.to_integer());
  }
  return IntPolynomial(coeffs);
}

DenominatorReport denominator_identity_check(const FusionData& d) {
  DenominatorReport r;
  r.detA = determinant(identity_minus_t(d.A));
  r.detB = determinant(identity_minus_t(d.B));
  r.product = denominator_product(d.pair, d.V);
  r.passed = r.detA == r.product && r.detB == r.product;
  return r;
}

Integer brute_force_multiplicity(const FusionData& d, Side side, std::size_t vertex, unsigned k) {
  check_vertex(d, vertex);
  const bool res = side == Side::restriction;
  const CharacterTable& t = res ? d.tn : d.tg;
  const ClassFunction V = res ? restrict(d.pair, d.V) : d.V;
  const FiniteGroup& H = *t.group;
  const auto mult = decompose(t, members(d, side)[vertex]);
  std::vector<Cyclotomic> vk;
  for (const auto& v : V.values) vk.push_back(v.pow(k));
  Cyclotomic total(0);
  for (std::size_t c = 0; c < mult.size(); ++c) {
    if (!mult[c]) continue;
    Cyclotomic s(0);
    for (std::size_t cl = 0; cl < H.num_classes(); ++cl)
      s += Cyclotomic(static_cast<long>(H.class_size(cl))) * vk[cl] * t.irreducibles[c].values[cl].conj();
    total += Cyclotomic(static_cast<long>(mult[c])) * s;
  }
  total = total * Cyclotomic(Rational(1, static_cast<long>(H.order())));
  if (!total.is_integer() || total.to_integer() < 0)
    throw VerificationError("multiplicity " + total.to_string() + " is not a non-negative integer");
  return total.to_integer();
}

std::vector<bool> long_roots(const IntMatrix& c) {
  const std::size_t n = c.size();
  std::vector<Rational> len(n, Rational(0));
  if (!n) return {};
  len[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0) continue;
      if (c[j][i] == 0) return {};
      // len_i * C_ij = len_j * C_ji
      Rational lj = len[i] * Rational(static_cast<long>(c[i][j])) / Rational(static_cast<long>(c[j][i]));
      if (len[j] == 0) {
        len[j] = lj;
        stack.push_back(j);
      } else if (len[j] != lj) {
        return {};
      }
    }
  }
  Rational top = 0;
  for (const auto& l : len) {
    if (l <= 0) return {};
    if (l > top) top = l;
  }
  std::vector<bool> out;
  for (const auto& l : len) out.push_back(l == top);
  return out;
}

CorollaryReport corollary_relation_check(const FusionData& d) {
  CorollaryReport r;
  const std::string& name = d.pair.name;
  const bool special = name == "A2^2" || name == "A2n^2";
  r.form = special ? "special" : "long/short";
  const auto lengths = long_roots(d.cartanB);
  if (!special && lengths.empty()) {
    r.passed = false;
    r.detail = "induction-side Cartan matrix is not symmetrizable";
    return r;
  }
  std::ostringstream why;
  for (std::size_t i = 0; i < d.A.size(); ++i) {
    CorollaryRow row;
    row.vertex = i;
    row.long_root = lengths.empty() ? true : lengths[i];
    row.ratio = ratio(series_cramer(d, Side::restriction, i), series_cramer(d, Side::induction, i));
    if (special)
      row.expected = i == 0 ? Rational(1) : Rational(1, 2);
    else
      row.expected = row.long_root ? Rational(1) : Rational(static_cast<long>(d.pair.index));
    row.holds = row.ratio == row.expected;
    if (!row.holds) {
      r.passed = false;
      why << "vertex " << i << ": m_res/m_ind = " << rational_to_string(row.ratio) << ", expected "
          << rational_to_string(row.expected) << "; ";
    }
    r.rows.push_back(row);
  }
  r.detail = why.str();
  return r;
}

} // namespace msc
