#include "msc/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "msc/errors.hpp"

namespace msc {

namespace {

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

struct PhiEntry {
  std::vector<Integer> dense;
  std::vector<std::pair<unsigned, Integer>> sparse; // nonzero terms below the leading one
};

std::recursive_mutex phi_mutex;
std::map<unsigned, PhiEntry> phi_cache;

const PhiEntry& phi_entry(unsigned n) {
  std::lock_guard<std::recursive_mutex> lock(phi_mutex);
  auto it = phi_cache.find(n);
  if (it != phi_cache.end()) return it->second;

  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = phi_entry(d).dense;
    std::size_t dd = den.size() - 1;
    std::vector<Integer> q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      Integer c = num[i];
      if (c == 0) continue;
      q[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(q);
  }
  PhiEntry e;
  e.dense = num;
  for (unsigned j = 0; j + 1 < num.size(); ++j)
    if (num[j] != 0) e.sparse.emplace_back(j, num[j]);
  return phi_cache.emplace(n, std::move(e)).first->second;
}

long mod_inverse(long a, long m) {
  long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return ((t % m) + m) % m;
}

// Fold a dense vector modulo x^n - 1 and reduce modulo Phi_n; result has length phi(n).
std::vector<Rational> reduce_dense(unsigned n, std::vector<Rational> c) {
  if (c.size() > n) {
    for (std::size_t i = n; i < c.size(); ++i) c[i % n] += c[i];
    c.resize(n);
  }
  const PhiEntry& phi = phi_entry(n);
  const std::size_t deg = phi.dense.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    if (c[i] == 0) continue;
    Rational t = c[i];
    for (const auto& [j, v] : phi.sparse) c[i - deg + j] -= t * v;
    c[i] = 0;
  }
  c.resize(deg, Rational(0));
  return c;
}

} // namespace

unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (unsigned p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic polynomial of order 0");
  return phi_entry(n).dense;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}
Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(unsigned n, std::vector<Rational> coeffs)
    : conductor_(n), coeffs_(std::move(coeffs)) {
  lower();
}

Cyclotomic Cyclotomic::from_dense(unsigned n, std::vector<Rational> c) {
  if (n == 0) throw DomainError("conductor must be positive");
  for (auto& q : c) {
    if (q.get_den() == 0) throw DomainError("zero denominator");
    q.canonicalize();
  }
  return Cyclotomic(n, reduce_dense(n, std::move(c)));
}

void Cyclotomic::lower() {
  bool changed = true;
  while (changed && conductor_ > 1) {
    changed = false;
    const unsigned n = conductor_;
    for (unsigned p : prime_factors(n)) {
      const unsigned m = n / p;
      if (m % p == 0) {
        bool ok = true;
        for (std::size_t k = 0; k < coeffs_.size() && ok; ++k)
          if (k % p != 0 && coeffs_[k] != 0) ok = false;
        if (!ok) continue;
        std::vector<Rational> c(euler_phi(m));
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = coeffs_[j * p];
        conductor_ = m;
        coeffs_ = std::move(c);
      } else {
        // zeta_n^k = zeta_m^{k a} zeta_p^{k b}
        const long a = m == 1 ? 0 : mod_inverse(p, m);
        const long b = mod_inverse(m, p);
        std::vector<std::vector<Rational>> y(p, std::vector<Rational>(m, Rational(0)));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
          if (coeffs_[k] == 0) continue;
          y[(k * b) % p][m == 1 ? 0 : (k * a) % m] += coeffs_[k];
        }
        std::vector<std::vector<Rational>> r(p);
        for (unsigned j = 0; j < p; ++j) r[j] = reduce_dense(m, std::move(y[j]));
        bool ok = true;
        for (unsigned j = 2; j < p && ok; ++j) ok = r[j] == r[1];
        if (!ok) continue;
        for (std::size_t i = 0; i < r[0].size(); ++i) r[0][i] -= r[1][i];
        conductor_ = m;
        coeffs_ = std::move(r[0]);
      }
      changed = true;
      break;
    }
  }
}

bool Cyclotomic::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }

bool Cyclotomic::is_integer() const {
  return conductor_ == 1 && coeffs_[0].get_den() == 1;
}

Rational Cyclotomic::to_rational() const {
  if (conductor_ != 1) throw DomainError("value is not rational: " + to_string());
  return coeffs_[0];
}

Integer Cyclotomic::to_integer() const {
  if (!is_integer()) throw DomainError("value is not an integer: " + to_string());
  return coeffs_[0].get_num();
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (conductor_ == 1) return *this;
  const long n = conductor_;
  long am = ((a % n) + n) % n;
  if (std::gcd(am, n) != 1) throw DomainError("Galois exponent not coprime to conductor");
  std::vector<Rational> d(n, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) d[(k * am) % n] += coeffs_[k];
  return Cyclotomic(conductor_, reduce_dense(conductor_, std::move(d)));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Rational Cyclotomic::norm() const {
  if (conductor_ == 1) return coeffs_[0];
  Cyclotomic p(1);
  for (long a = 1; a < static_cast<long>(conductor_); ++a)
    if (std::gcd(a, static_cast<long>(conductor_)) == 1) p *= galois(a);
  return p.to_rational();
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  Cyclotomic others(1);
  for (long a = 2; a < static_cast<long>(conductor_); ++a)
    if (std::gcd(a, static_cast<long>(conductor_)) == 1) others *= galois(a);
  Rational nm = (*this * others).to_rational();
  return others * Cyclotomic(Rational(1) / nm);
}

Cyclotomic Cyclotomic::pow(unsigned k) const {
  Cyclotomic result(1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    double ang = 2.0 * M_PI * static_cast<double>(k) / conductor_;
    z += coeffs_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

std::vector<Rational> embed(const Cyclotomic& x, unsigned L) {
  std::vector<Rational> d(L, Rational(0));
  const unsigned s = L / x.conductor();
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) d[k * s] = x.coeffs()[k];
  return d;
}

} // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (conductor_ == rhs.conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    lower();
    return *this;
  }
  const unsigned L = lcm_u(conductor_, rhs.conductor_);
  auto a = embed(*this, L);
  auto b = embed(rhs, L);
  for (unsigned k = 0; k < L; ++k) a[k] += b[k];
  *this = Cyclotomic(L, reduce_dense(L, std::move(a)));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.conductor_ == 1) {
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    if (rhs.coeffs_[0] == 0) *this = Cyclotomic();
    return *this;
  }
  if (conductor_ == 1) {
    Rational s = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_) c *= s;
    if (s == 0) *this = Cyclotomic();
    return *this;
  }
  const unsigned L = lcm_u(conductor_, rhs.conductor_);
  const unsigned sa = L / conductor_, sb = L / rhs.conductor_;
  std::vector<Rational> d(L, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      d[(i * sa + j * sb) % L] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  *this = Cyclotomic(L, reduce_dense(L, std::move(d)));
  return *this;
}

Cyclotomic dot_conj(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b, const std::vector<Rational>* w) {
  if (a.size() != b.size() || (w && w->size() != a.size())) throw DomainError("dot_conj: length mismatch");
  unsigned L = 1;
  for (std::size_t i = 0; i < a.size(); ++i) L = lcm_u(L, lcm_u(a[i].conductor(), b[i].conductor()));
  std::vector<Rational> d(L, Rational(0));
  Rational t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned sa = L / a[i].conductor(), sb = L / b[i].conductor();
    const auto& ca = a[i].coeffs();
    const auto& cb = b[i].coeffs();
    for (std::size_t k = 0; k < ca.size(); ++k) {
      if (ca[k] == 0) continue;
      for (std::size_t j = 0; j < cb.size(); ++j) {
        if (cb[j] == 0) continue;
        t = ca[k] * cb[j];
        if (w) t *= (*w)[i];
        d[(k * sa + L - (j * sb) % L) % L] += t;
      }
    }
  }
  return Cyclotomic::from_dense(L, std::move(d));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty rational");
  if (s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits = [](const std::string& t, bool allow_sign) {
    std::size_t i = (allow_sign && !t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(s, true)) throw DomainError("bad rational: " + std::string(text));
    return Rational(Integer(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!digits(p, true) || !digits(q, false)) throw DomainError("bad rational: " + std::string(text));
  Integer den(q);
  if (den == 0) throw DomainError("zero denominator: " + std::string(text));
  Rational r(Integer(p), den);
  r.canonicalize();
  return r;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << "cyc(" << conductor_ << ")[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ", ";
    os << rational_to_string(coeffs_[k]);
  }
  os << "]";
  return os.str();
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  auto bad = [&]() { return DomainError("bad cyclotomic literal: " + std::string(text)); };
  auto open = text.find('(');
  auto close = text.find(')');
  auto lb = text.find('[');
  auto rb = text.rfind(']');
  if (text.substr(0, open) != "cyc" || open == std::string_view::npos ||
      close == std::string_view::npos || lb != close + 1 || rb == std::string_view::npos ||
      rb + 1 != text.size())
    throw bad();
  std::string ns(text.substr(open + 1, close - open - 1));
  if (ns.empty() || ns.find_first_not_of("0123456789") != std::string::npos) throw bad();
  unsigned long n = std::stoul(ns);
  if (n == 0 || n > 1000000) throw bad();
  std::vector<Rational> dense;
  std::string_view body = text.substr(lb + 1, rb - lb - 1);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    std::string_view tok = body.substr(pos, comma - pos);
    if (tok.find_first_not_of(" \t") != std::string_view::npos) dense.push_back(parse_rational(tok));
    else if (!body.empty()) throw bad();
    pos = comma + 1;
  }
  return from_dense(static_cast<unsigned>(n), dense);
}

nlohmann::json Cyclotomic::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : coeffs_) cs.push_back(rational_to_string(c));
  return {{"conductor", conductor_}, {"coeffs", cs}};
}

Cyclotomic Cyclotomic::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw DomainError("cyclotomic JSON needs conductor and coeffs");
  auto n = j.at("conductor").get<long>();
  if (n <= 0) throw DomainError("conductor must be positive");
  std::vector<Rational> dense;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string()) dense.push_back(parse_rational(c.get<std::string>()));
    else if (c.is_number_integer()) dense.emplace_back(c.get<long>());
    else throw DomainError("bad coefficient in cyclotomic JSON");
  }
  return from_dense(static_cast<unsigned>(n), dense);
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<unsigned>{}(conductor_);
  for (const auto& c : coeffs_) {
    std::size_t v = mpz_size(c.get_num_mpz_t()) ? mpz_getlimbn(c.get_num_mpz_t(), 0) : 0;
    v = v * 31 + static_cast<std::size_t>(mpz_sgn(c.get_num_mpz_t()) + 1);
    v ^= mpz_getlimbn(c.get_den_mpz_t(), 0) * 0x9e3779b97f4a7c15ULL;
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Cyclotomic root_of_unity(long n, long k) {
  if (n <= 0) throw DomainError("root_of_unity needs n >= 1");
  long e = ((k % n) + n) % n;
  std::vector<Rational> d(n, Rational(0));
  d[e] = 1;
  return Cyclotomic::from_dense(static_cast<unsigned>(n), d);
}

Cyclotomic arith(const Cyclotomic& a, const Cyclotomic& b, ArithOp op) {
  switch (op) {
  case ArithOp::add: return a + b;
  case ArithOp::sub: return a - b;
  case ArithOp::mul: return a * b;
  case ArithOp::div: return a / b;
  }
  throw DomainError("unknown operation");
}

std::string pretty(const Cyclotomic& x) {
  if (x.is_rational()) return rational_to_string(x.to_rational());
  return x.to_string();
}

} // namespace msc
