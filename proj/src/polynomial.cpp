#include "msc/polynomial.hpp"

#include <map>
#include <sstream>

#include "msc/errors.hpp"

namespace msc {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, unsigned k) {
  std::vector<Integer> v(k + 1, 0);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> v = coeffs_;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Integer> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed(unsigned n) const {
  if (degree() > static_cast<int>(n)) throw DomainError("reversal length below degree");
  std::vector<Integer> v(n + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[n - i] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

Rational IntPolynomial::eval(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

double IntPolynomial::eval(double t) const {
  double acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i].get_d();
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> v(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::pow(unsigned k) const {
  IntPolynomial r{1}, b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::vector<long long> IntPolynomial::to_int64() const {
  std::vector<long long> v;
  for (const auto& c : coeffs_) {
    if (!c.fits_slong_p()) throw DomainError("coefficient exceeds 64 bits");
    v.push_back(c.get_si());
  }
  return v;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) {
    if (a.is_zero()) return {};
    throw VerificationError("inexact polynomial division");
  }
  std::vector<Integer> q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), bc[db].get_mpz_t()))
      throw VerificationError("inexact polynomial division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), bc[db].get_mpz_t());
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * bc[j];
  }
  for (const auto& x : r)
    if (x != 0) throw VerificationError("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  int e = a.degree() - b.degree() + 1;
  IntPolynomial r = a;
  const Integer lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    IntPolynomial s = IntPolynomial::monomial(r.leading(), r.degree() - b.degree()) * b;
    r = r * lb - s;
    --e;
  }
  Integer f;
  mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
  return r * f;
}

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return a.primitive() * a.content();
  Integer d;
  {
    Integer ca = a.content(), cb = b.content();
    mpz_gcd(d.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  a = a.primitive();
  b = b.primitive();
  Integer g = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = IntPolynomial{1};
      break;
    }
    a = b;
    Integer hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    Integer divisor = g * hd;
    std::vector<Integer> rc = r.coeffs();
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = IntPolynomial(std::move(rc));
    g = a.leading();
    // h <- g^delta / h^(delta - 1)
    Integer gd, hd1;
    mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
    if (delta > 0) {
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
  }
  return b.primitive() * d;
}

PolyMatrix identity_minus_t(const IntMatrix& m, bool transpose) {
  const std::size_t n = m.size();
  PolyMatrix out(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long v = transpose ? m[j][i] : m[i][j];
      out[i][j] = IntPolynomial(std::vector<Integer>{Integer(i == j ? 1 : 0), Integer(-static_cast<long>(v))});
    }
  return out;
}

IntPolynomial determinant_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial{1};
  if (n > 20) throw DomainError("cofactor expansion limited to size 20");
  // memo[mask] = det of the rows popcount(mask)..n-1 restricted to the unused columns.
  std::map<unsigned, IntPolynomial> memo;
  const unsigned full = (1u << n) - 1;
  auto rec = [&](auto& self, unsigned used) -> IntPolynomial {
    if (used == full) return IntPolynomial{1};
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcount(used));
    IntPolynomial acc;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!m[row][c].is_zero()) {
        IntPolynomial term = m[row][c] * self(self, used | (1u << c));
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0);
}

IntPolynomial determinant_bareiss(const PolyMatrix& input) {
  PolyMatrix a = input;
  const std::size_t n = a.size();
  if (n == 0) return IntPolynomial{1};
  IntPolynomial prev{1};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = {};
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

IntPolynomial determinant(const PolyMatrix& m) {
  return m.size() <= 12 ? determinant_cofactor(m) : determinant_bareiss(m);
}

RationalSeries::RationalSeries() : num_{0}, den_{1}, stream_(std::make_shared<Stream>()) {}

RationalSeries::RationalSeries(const IntPolynomial& numerator, const IntPolynomial& denominator)
    : stream_(std::make_shared<Stream>()) {
  if (denominator.coeff(0) == 0) throw DomainError("series denominator vanishes at t = 0");
  IntPolynomial g = gcd(numerator, denominator);
  num_ = numerator.is_zero() ? IntPolynomial{} : divide_exact(numerator, g);
  den_ = divide_exact(denominator, g);
  if (numerator.is_zero()) den_ = IntPolynomial{1};
  Integer c0 = den_.coeff(0);
  if (c0 < 0) {
    num_ = -num_;
    den_ = -den_;
    c0 = -c0;
  }
  if (c0 != 1) {
    // Only possible if the common content was not removed; divide it out when exact.
    Integer cn = num_.content();
    Integer cd = den_.content();
    Integer g2;
    mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (num_.is_zero()) g2 = cd;
    if (g2 != c0) throw DomainError("series denominator constant term is not a unit");
    std::vector<Integer> nv = num_.coeffs(), dv = den_.coeffs();
    for (auto& c : nv) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g2.get_mpz_t());
    for (auto& c : dv) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g2.get_mpz_t());
    num_ = IntPolynomial(std::move(nv));
    den_ = IntPolynomial(std::move(dv));
  }
}

Integer RationalSeries::coefficient(std::size_t k) const {
  std::lock_guard<std::mutex> lock(stream_->mu);
  auto& s = stream_->values;
  const auto& d = den_.coeffs();
  while (s.size() <= k) {
    const std::size_t m = s.size();
    Integer v = num_.coeff(m);
    for (std::size_t i = 1; i < d.size() && i <= m; ++i) v -= d[i] * s[m - i];
    s.push_back(v);
  }
  return s[k];
}

std::vector<Integer> RationalSeries::coefficients(std::size_t k) const {
  coefficient(k);
  std::lock_guard<std::mutex> lock(stream_->mu);
  return {stream_->values.begin(), stream_->values.begin() + static_cast<long>(k) + 1};
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalSeries RationalSeries::scaled(const Integer& s) const { return RationalSeries(num_ * s, den_); }

std::string RationalSeries::to_string() const {
  std::string n = num_.to_string(), d = den_.to_string();
  if (d == "1") return n;
  auto wrap = [](const std::string& s, const IntPolynomial& p) {
    int terms = 0;
    for (const auto& c : p.coeffs()) terms += c != 0;
    return terms > 1 ? "(" + s + ")" : s;
  };
  return wrap(n, num_) + "/" + wrap(d, den_);
}

std::string integer_list(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s;
}

} // namespace msc
