#include "msc/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <regex>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "msc/dynkin.hpp"
#include "msc/errors.hpp"
#include "msc/poincare.hpp"

namespace msc {

namespace {

Integer binom(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer pow2(unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

const IntPolynomial T1{0, 1};

// 1 - 4t^2 times sum_i (-1)^i C(k-i, i) t^2i
IntPolynomial det_formula(int k) {
  std::vector<Integer> c(static_cast<std::size_t>(std::max(k, 0)) + 1, 0);
  for (int i = 0; 2 * i <= k; ++i) {
    Integer b = binom(static_cast<unsigned long>(k - i), static_cast<unsigned long>(i));
    c[static_cast<std::size_t>(2 * i)] = i % 2 ? Integer(-b) : b;
  }
  return IntPolynomial{1, 0, -4} * IntPolynomial(c);
}

} // namespace

ChebyshevPoly chebyshev(ChebyshevKind kind, unsigned n) {
  IntPolynomial prev{1};
  IntPolynomial cur = kind == ChebyshevKind::first ? IntPolynomial{0, 1} : IntPolynomial{0, 2};
  if (n == 0) return {kind, 0, prev};
  const IntPolynomial two_t{0, 2};
  for (unsigned k = 1; k < n; ++k) {
    IntPolynomial next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {kind, n, cur};
}

IntPolynomial chebyshev_additive(ChebyshevKind kind, unsigned n) {
  IntPolynomial sum;
  if (kind == ChebyshevKind::first) {
    const IntPolynomial t2m1{-1, 0, 1};
    for (unsigned i = 0; 2 * i <= n; ++i)
      sum += IntPolynomial::monomial(binom(n, 2 * i), n - 2 * i) * t2m1.pow(i);
  } else {
    for (unsigned i = 0; 2 * i <= n; ++i) {
      Integer c = binom(n - i, i) * pow2(n - 2 * i);
      sum += IntPolynomial::monomial(i % 2 ? Integer(-c) : c, n - 2 * i);
    }
  }
  return sum;
}

double chebyshev_product(ChebyshevKind kind, unsigned n, double t) {
  const double pi = std::numbers::pi;
  if (n == 0) return 1.0;
  double p = kind == ChebyshevKind::first ? std::ldexp(1.0, static_cast<int>(n) - 1) : std::ldexp(1.0, static_cast<int>(n));
  for (unsigned i = 1; i <= n; ++i)
    p *= kind == ChebyshevKind::first ? t - std::cos((2.0 * i - 1) * pi / (2.0 * n)) : t - std::cos(pi * i / (n + 1.0));
  return p;
}

IdentityReport chebyshev_identities_check(unsigned n_max, std::uint64_t seed) {
  if (n_max < 2) throw DomainError("n_max must be at least 2");
  IdentityReport r;
  r.n_max = n_max;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto fail = [&](unsigned n, const std::string& id, const std::string& detail) { r.failures.push_back({n, id, detail}); };

  for (unsigned n = 0; n <= n_max; ++n) {
    const auto T = chebyshev(ChebyshevKind::first, n).coeffs;
    const auto U = chebyshev(ChebyshevKind::second, n).coeffs;
    ++r.checks;
    if (T != chebyshev_additive(ChebyshevKind::first, n)) fail(n, "recursion=additive(T)", T.to_string());
    ++r.checks;
    if (U != chebyshev_additive(ChebyshevKind::second, n)) fail(n, "recursion=additive(U)", U.to_string());
    if (n >= 1) {
      ++r.checks;
      const auto Um1 = chebyshev(ChebyshevKind::second, n - 1).coeffs;
      if (T != U - T1 * Um1) fail(n, "T=U-tU", T.to_string());
    }
    for (int k = 0; k < 20; ++k) {
      const double t = unit(rng);
      // exact value at the double t, then rounded once
      const double tv = T.eval(Rational(t)).get_d(), uv = U.eval(Rational(t)).get_d();
      const double tp = chebyshev_product(ChebyshevKind::first, n, t), up = chebyshev_product(ChebyshevKind::second, n, t);
      r.checks += 2;
      if (std::abs(tv - tp) > 1e-9) {
        std::ostringstream s;
        s << "t=" << t << ": " << tv << " vs " << tp;
        fail(n, "product(T)", s.str());
      }
      if (std::abs(uv - up) > 1e-9) {
        std::ostringstream s;
        s << "t=" << t << ": " << uv << " vs " << up;
        fail(n, "product(U)", s.str());
      }
    }
  }
  return r;
}

IntPolynomial c_family(unsigned n) {
  if (n == 0) throw DomainError("c_family needs n >= 1");
  IntPolynomial prev{1}, cur{1, 0, -2};
  const IntPolynomial t2{0, 0, 1};
  if (n == 1) cur = prev;
  for (unsigned k = 2; k < n; ++k) {
    IntPolynomial next = cur - t2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }

  // 2 t^n T_n(1/2t)
  const auto T = chebyshev(ChebyshevKind::first, n).coeffs;
  std::vector<Integer> rev(n + 1, 0);
  for (unsigned k = 0; k <= n; ++k) {
    Integer a = T.coeff(k);
    if (a == 0) continue;
    Rational v(2 * a, pow2(k));
    v.canonicalize();
    if (v.get_den() != 1) throw VerificationError("2t^n T_n(1/2t) is not integral at n=" + std::to_string(n));
    rev[n - k] = v.get_num();
  }
  if (IntPolynomial(rev) != cur)
    throw VerificationError("c recursion and Chebyshev form differ at n=" + std::to_string(n));

  IntPolynomial bin;
  const IntPolynomial q{1, 0, -4};
  for (unsigned i = 0; 2 * i <= n; ++i) bin += q.pow(i) * binom(n, 2 * i);
  if (divide_exact(bin, IntPolynomial::constant(pow2(n - 1))) != cur)
    throw VerificationError("c recursion and binomial form differ at n=" + std::to_string(n));
  return cur;
}

ClosedFormReport closed_form_check(const std::string& family, int n) {
  ClosedFormReport r;
  r.family = family;
  r.n = n;
  int k;
  int cos_den;     // prod_{i=1}^{cos_den-1} (1 - 2cos(pi i/cos_den) t)
  if (family == "A2n-1^2") {
    k = n - 2;
    cos_den = n - 1;
  } else if (family == "Dn+1^2" || family == "A2n^2") {
    k = n - 1;
    cos_den = n;
  } else {
    throw DomainError("no closed form for " + family);
  }
  const auto p = normal_pair(family, n);
  const auto d = fusion_matrices(p);
  r.computed = series_cramer(d, Side::restriction, 0);
  r.det = determinant(identity_minus_t(d.A));
  r.det_formula = det_formula(k);
  r.formula = RationalSeries(c_family(static_cast<unsigned>(n)), r.det_formula);

  std::ostringstream why;
  if (r.computed != r.formula) why << "m^0 = " << r.computed.to_string() << ", formula " << r.formula.to_string() << "; ";
  if (r.det != r.det_formula) why << "det = " << r.det.to_string() << ", formula " << r.det_formula.to_string() << "; ";

  // cosine products against the exact rational function
  const double pi = std::numbers::pi;
  for (double t : {0.1, 0.23, -0.31, 0.45}) {
    double num = 1, den = 1 - 4 * t * t;
    for (int i = 1; i <= n; ++i) num *= 1 - 2 * std::cos((2.0 * i - 1) * pi / (2.0 * n)) * t;
    for (int i = 1; i < cos_den; ++i) den *= 1 - 2 * std::cos(pi * i / cos_den) * t;
    const double exact = r.computed.numerator().eval(t) / r.computed.denominator().eval(t);
    if (std::abs(num / den - exact) > 1e-9) why << "cosine form off at t=" << t << "; ";
  }
  r.detail = why.str();
  r.passed = r.detail.empty();
  return r;
}

const std::vector<Table6Row>& table6() {
  static const std::vector<Table6Row> rows = {
      {"A_1", "1", "2"},
      {"B_n", "1,3,5,...,2n-1", "2n"},
      {"C_n", "1,3,5,...,2n-1", "2n"},
      {"F_4", "1,5,7,11", "12"},
      {"G_2", "1,5", "6"},
      {"A_1^(1)", "0,1", "1"},
      {"A_2^(2)", "0,2", "2"},
      {"A_{2l}^(2)", "0,1,...,l", "l"},
      {"B_{2l+1}^(1), A_{4l+1}^(2)", "0,1,...,l-1,l,l,l+1,...,2l", "2l"},
      {"B_{2l}^(1), A_{4l-1}^(2)", "0,2,...,2l-2,2l-1,2l,...,2(2l-1)", "2(2l-1)"},
      {"C_l^(1), D_{l+1}^(2)", "0,1,...,l", "l"},
      {"F_4^(1), E_6^(2)", "0,2,3,4,6", "6"},
      {"G_2^(1), D_4^(3)", "0,1,2", "2"},
  };
  return rows;
}

namespace {

struct ParsedLabel {
  char letter;
  int rank;
  int twist; // 0 for finite types
};

std::optional<ParsedLabel> parse_label(const std::string& s) {
  static const std::regex re(R"(([A-G])_(\d+|\{\d+\})(\^\((\d)\))?)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  std::string r = m[2];
  if (r.front() == '{') r = r.substr(1, r.size() - 2);
  return ParsedLabel{m[1].str()[0], std::stoi(r), m[4].matched ? std::stoi(m[4]) : 0};
}

std::string finite_label(char letter, int rank) {
  std::string r = std::to_string(rank);
  if (r.size() > 1) r = "{" + r + "}";
  return std::string(1, letter) + "_" + r;
}

std::vector<int> range(int from, int to, int step = 1) {
  std::vector<int> v;
  for (int i = from; i <= to; i += step) v.push_back(i);
  return v;
}

void set_finite(ExponentData& e, char letter, int rank) {
  e.finite_label = finite_label(letter, rank);
  if (letter == 'A' && rank == 1) {
    e.finite_exponents = {1};
    e.finite_coxeter = 2;
  } else if ((letter == 'B' || letter == 'C') && rank >= 2) {
    e.finite_exponents = range(1, 2 * rank - 1, 2);
    e.finite_coxeter = 2 * rank;
  } else if (letter == 'F' && rank == 4) {
    e.finite_exponents = {1, 5, 7, 11};
    e.finite_coxeter = 12;
  } else if (letter == 'G' && rank == 2) {
    e.finite_exponents = {1, 5};
    e.finite_coxeter = 6;
  } else {
    throw DomainError("no exponent data for " + e.finite_label);
  }
}

} // namespace

ExponentData exponents_catalog(const std::string& label) {
  const auto p = parse_label(label);
  if (!p) throw DomainError("cannot parse type label '" + label + "'");
  ExponentData e;
  e.type_label = label;
  const char X = p->letter;
  const int r = p->rank;

  if (p->twist == 0) {
    set_finite(e, X, r);
    e.exponents = e.finite_exponents;
    e.coxeter = e.finite_coxeter;
    return e;
  }

  auto row = [&](std::vector<int> exps, int h, char fl, int fr) {
    e.exponents = std::move(exps);
    e.coxeter = h;
    set_finite(e, fl, fr);
    return e;
  };
  const int t = p->twist;
  if (X == 'A' && r == 1 && t == 1) return row({0, 1}, 1, 'A', 1);
  if (X == 'A' && r == 2 && t == 2) return row({0, 2}, 2, 'A', 1);
  if (X == 'A' && t == 2 && r % 2 == 0) return row(range(0, r / 2), r / 2, 'C', r / 2);
  // 0..2l with l doubled
  auto odd_row = [&](int l) {
    auto v = range(0, 2 * l);
    v.insert(v.begin() + l, l);
    return v;
  };
  // 0,2,..,2l-2, 2l-1, 2l,2l+2,..,2(2l-1)
  auto even_row = [&](int l) {
    auto v = range(0, 2 * l - 2, 2);
    v.push_back(2 * l - 1);
    for (int x : range(2 * l, 2 * (2 * l - 1), 2)) v.push_back(x);
    return v;
  };
  if (X == 'B' && t == 1 && r >= 3 && r % 2 == 1) return row(odd_row((r - 1) / 2), r - 1, 'B', r);
  if (X == 'A' && t == 2 && r >= 5 && r % 4 == 1) return row(odd_row((r - 1) / 4), (r - 1) / 2, 'C', (r + 1) / 2);
  if (X == 'B' && t == 1 && r >= 4 && r % 2 == 0) return row(even_row(r / 2), 2 * (r - 1), 'B', r);
  if (X == 'A' && t == 2 && r >= 3 && r % 4 == 3) {
    const int l = (r + 1) / 4;
    return row(even_row(l), 2 * (2 * l - 1), 'C', (r + 1) / 2);
  }
  if (X == 'C' && t == 1 && r >= 2) return row(range(0, r), r, 'C', r);
  if (X == 'D' && t == 2 && r >= 3) return row(range(0, r - 1), r - 1, 'B', r - 1);
  if ((X == 'F' && r == 4 && t == 1) || (X == 'E' && r == 6 && t == 2)) return row({0, 2, 3, 4, 6}, 6, 'F', 4);
  if ((X == 'G' && r == 2 && t == 1) || (X == 'D' && r == 4 && t == 3)) return row({0, 1, 2}, 2, 'G', 2);
  throw DomainError("type " + label + " is not in the exponent table");
}

IntPolynomial characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  PolyMatrix x(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Integer a(static_cast<long>(m[i][j]));
      x[i][j] = i == j ? IntPolynomial(std::vector<Integer>{-a, 1}) : IntPolynomial::constant(-a);
    }
  return determinant(x);
}

std::vector<std::pair<IntPolynomial, unsigned>> squarefree_factors(const IntPolynomial& f) {
  std::vector<std::pair<IntPolynomial, unsigned>> out;
  if (f.degree() < 1) return out;
  const IntPolynomial g = f.primitive();
  IntPolynomial a = gcd(g, g.derivative()).primitive();
  IntPolynomial b = divide_exact(g, a);
  IntPolynomial c = divide_exact(g.derivative(), a);
  IntPolynomial dd = c - b.derivative();
  for (unsigned k = 1; b.degree() >= 1; ++k) {
    a = gcd(b, dd).primitive();
    if (a.degree() >= 1) out.emplace_back(a, k);
    b = divide_exact(b, a);
    c = divide_exact(dd, a);
    dd = c - b.derivative();
  }
  return out;
}

std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& f) {
  std::vector<std::complex<double>> roots;
  for (const auto& [g, k] : squarefree_factors(f)) {
    const int n = g.degree();
    const double lc = g.leading().get_d();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -g.coeff(static_cast<std::size_t>(i)).get_d() / lc;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    for (int i = 0; i < n; ++i)
      for (unsigned j = 0; j < k; ++j) roots.push_back(es.eigenvalues()[i]);
  }
  return roots;
}

std::vector<std::complex<double>> eigenvalues(const IntMatrix& m) { return polynomial_roots(characteristic_polynomial(m)); }

namespace {

std::vector<double> real_sorted(const std::vector<std::complex<double>>& z, double tol, bool& real) {
  std::vector<double> out;
  real = true;
  for (const auto& x : z) {
    if (std::abs(x.imag()) > tol) real = false;
    out.push_back(x.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> cos_form(const std::vector<int>& exps, int h) {
  std::vector<double> out;
  for (int m : exps) out.push_back(2 * std::cos(m * std::numbers::pi / h));
  std::sort(out.begin(), out.end());
  return out;
}

bool same(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

std::string list(const std::vector<double>& v) {
  std::ostringstream s;
  s.precision(6);
  s << "{";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << (std::abs(v[i]) < 1e-12 ? 0.0 : v[i]);
  s << "}";
  return s.str();
}

} // namespace

SpectrumReport spectrum_exponents_check(const FusionData& d, double tol) {
  SpectrumReport r;
  std::ostringstream why;
  bool real = true;
  r.eigenvalues = real_sorted(eigenvalues(d.A), tol, real);
  if (!real) why << "complex eigenvalues; ";
  for (std::size_t gc : d.pair.upsilon_n) r.characters.push_back(d.V.values[gc].to_complex().real());
  std::sort(r.characters.begin(), r.characters.end());
  r.matches_characters = real && same(r.eigenvalues, r.characters, tol);
  if (!r.matches_characters) why << "eigenvalues " << list(r.eigenvalues) << " vs characters " << list(r.characters) << "; ";

  r.type_label = graph(d, Side::restriction).dynkin_type;
  std::optional<ExponentData> ex;
  try {
    ex = exponents_catalog(r.type_label);
  } catch (const DomainError&) {
  }
  if (ex) {
    const auto p = parse_label(r.type_label);
    r.cos_asserted = !(p->letter == 'A' && p->twist == 2 && p->rank % 2 == 0);
    r.cos_form = cos_form(ex->exponents, ex->coxeter);
    r.matches_cos = same(r.eigenvalues, r.cos_form, tol);
    if (!r.matches_cos) why << "cos form " << list(r.cos_form) << "; ";

    IntMatrix fin;
    for (std::size_t i = 1; i < d.A.size(); ++i) fin.emplace_back(d.A[i].begin() + 1, d.A[i].end());
    bool freal = true;
    r.finite_eigenvalues = real_sorted(eigenvalues(fin), tol, freal);
    r.finite_cos_form = cos_form(ex->finite_exponents, ex->finite_coxeter);
    r.matches_finite = freal && same(r.finite_eigenvalues, r.finite_cos_form, tol);
    if (!r.matches_finite)
      why << "finite " << ex->finite_label << ": " << list(r.finite_eigenvalues) << " vs " << list(r.finite_cos_form) << "; ";
  } else {
    why << "diagram " << r.type_label << " has no exponent data; ";
  }
  r.passed = r.matches_characters && (!r.cos_asserted || (r.matches_cos && r.matches_finite));
  r.detail = why.str();
  return r;
}

} // namespace msc
