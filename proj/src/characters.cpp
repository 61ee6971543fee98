#include "msc/characters.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "msc/errors.hpp"

namespace msc {

ClassFunction ClassFunction::conj() const {
  ClassFunction r{group, {}};
  for (const auto& v : values) r.values.push_back(v.conj());
  return r;
}

bool ClassFunction::is_real() const {
  for (const auto& v : values)
    if (v.conj() != v) return false;
  return true;
}

namespace {

void same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group) throw DomainError("class functions on different groups");
}

} // namespace

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  same_group(a, b);
  ClassFunction r{a.group, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] * b.values[i]);
  return r;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  same_group(a, b);
  ClassFunction r{a.group, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] + b.values[i]);
  return r;
}

ClassFunction operator*(long s, const ClassFunction& a) {
  ClassFunction r{a.group, {}};
  for (const auto& v : a.values) r.values.push_back(v * Cyclotomic(s));
  return r;
}

ClassFunction trivial_character(const GroupPtr& g) {
  return {g, std::vector<Cyclotomic>(g->num_classes(), Cyclotomic(1))};
}

ClassFunction natural_character(const GroupPtr& g) {
  ClassFunction r{g, {}};
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    const auto& e = g->element(g->class_rep(c));
    if (const auto* m = std::get_if<Matrix2>(&e)) {
      r.values.push_back(trace(*m));
    } else {
      const auto& im = std::get<Permutation>(e).images;
      long fixed = 0;
      for (std::size_t i = 0; i < im.size(); ++i) fixed += im[i] == static_cast<int>(i);
      r.values.emplace_back(fixed);
    }
  }
  return r;
}

std::size_t CharacterTable::index(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw DomainError("no character labelled " + label + " for " + group->name());
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  same_group(a, b);
  const auto& g = *a.group;
  std::vector<Rational> w;
  for (std::size_t c = 0; c < g.num_classes(); ++c) w.push_back(Rational(static_cast<long>(g.class_size(c)), static_cast<long>(g.order())));
  for (auto& q : w) q.canonicalize();
  return dot_conj(a.values, b.values, &w);
}

namespace {

Cyclotomic theta(long n, long k) { return root_of_unity(n, k); }

CharacterTable cyclic_table(const GroupPtr& g) {
  const int n = g->param();
  CharacterTable t{g, {}, {}};
  for (int i = 0; i < n; ++i) {
    ClassFunction f{g, {}};
    for (int k = 0; k < n; ++k) f.values.push_back(theta(n, static_cast<long>(i) * k));
    t.irreducibles.push_back(std::move(f));
    t.labels.push_back("xi_" + std::to_string(i));
  }
  return t;
}

CharacterTable dihedral_table(const GroupPtr& g) {
  const int n = g->param();
  // Class order: 1, -1, x, ..., x^{n-1}, y, yx. Power of x for the first n+1 classes.
  std::vector<int> xpow{0, n};
  for (int k = 1; k < n; ++k) xpow.push_back(k);
  const Cyclotomic s = n % 2 == 0 ? Cyclotomic(1) : theta(4, 1);
  CharacterTable t{g, {}, {}};
  auto row = [&](auto at_x, Cyclotomic y, Cyclotomic yx, std::string label) {
    ClassFunction f{g, {}};
    for (int k : xpow) f.values.push_back(at_x(k));
    f.values.push_back(std::move(y));
    f.values.push_back(std::move(yx));
    t.irreducibles.push_back(std::move(f));
    t.labels.push_back(std::move(label));
  };
  auto one = [](int) { return Cyclotomic(1); };
  auto sign = [](int k) { return Cyclotomic(k % 2 == 0 ? 1 : -1); };
  row(one, Cyclotomic(1), Cyclotomic(1), "delta_0^+");
  row(one, Cyclotomic(-1), Cyclotomic(-1), "delta_0^-");
  for (int i = 1; i < n; ++i)
    row([&](int k) { return theta(2 * n, static_cast<long>(i) * k) + theta(2 * n, -static_cast<long>(i) * k); },
        Cyclotomic(0), Cyclotomic(0), "delta_" + std::to_string(i));
  row(sign, s, -s, "delta_" + std::to_string(n) + "^+");
  row(sign, -s, s, "delta_" + std::to_string(n) + "^-");
  return t;
}

CharacterTable literal_table(const GroupPtr& g, const std::vector<std::string>& labels,
                             const std::vector<std::vector<Cyclotomic>>& rows) {
  CharacterTable t{g, {}, labels};
  for (const auto& r : rows) t.irreducibles.push_back({g, r});
  return t;
}

CharacterTable tetrahedral_table(const GroupPtr& g) {
  const Cyclotomic w = theta(3, 1), w2 = theta(3, 2);
  using C = Cyclotomic;
  return literal_table(g, {"tau_0", "tau_0'", "tau_0''", "tau_1", "tau_1'", "tau_1''", "tau_2"},
                       {{1, 1, 1, 1, 1, 1, 1},
                        {1, 1, 1, w, w2, w, w2},
                        {1, 1, 1, w2, w, w2, w},
                        {2, -2, 0, 1, -1, -1, 1},
                        {2, -2, 0, w, -w2, -w, w2},
                        {2, -2, 0, w2, -w, -w2, w},
                        {3, 3, -1, C(0), C(0), C(0), C(0)}});
}

CharacterTable octahedral_table(const GroupPtr& g) {
  const Cyclotomic r2 = theta(8, 1) + theta(8, -1);
  using C = Cyclotomic;
  return literal_table(g,
                       {"omega_0^+", "omega_1^+", "omega_2^+", "omega_3", "omega_4", "omega_2^-", "omega_1^-",
                        "omega_0^-"},
                       {{1, 1, 1, 1, 1, 1, 1, 1},
                        {2, -2, r2, -r2, 0, 0, 1, -1},
                        {3, 3, 1, 1, -1, -1, 0, 0},
                        {4, -4, 0, 0, 0, 0, -1, 1},
                        {2, 2, 0, 0, 2, 0, -1, -1},
                        {3, 3, -1, -1, -1, 1, C(0), C(0)},
                        {2, -2, -r2, r2, 0, 0, 1, -1},
                        {1, 1, -1, -1, 1, -1, 1, 1}});
}

CharacterTable symmetric4_table(const GroupPtr& g) {
  return literal_table(g, {"rho_0^+", "rho_0^-", "rho_1", "rho_2^+", "rho_2^-"},
                       {{1, 1, 1, 1, 1}, {1, -1, 1, -1, 1}, {2, 0, -1, 0, 2}, {3, 1, 0, -1, -1}, {3, -1, 0, 1, -1}});
}

CharacterTable alternating4_table(const GroupPtr& g) {
  const Cyclotomic w = theta(3, 1), w2 = theta(3, 2);
  return literal_table(g, {"phi_0", "phi_1", "phi_2", "phi_3"},
                       {{1, 1, 1, 1}, {1, w, w2, 1}, {1, w2, w, 1}, {3, 0, 0, -1}});
}

} // namespace

CharacterTable table(const GroupPtr& g) {
  switch (g->family()) {
  case Family::cyclic: return cyclic_table(g);
  case Family::binary_dihedral: return dihedral_table(g);
  case Family::binary_tetrahedral: return tetrahedral_table(g);
  case Family::binary_octahedral: return octahedral_table(g);
  case Family::symmetric4: return symmetric4_table(g);
  case Family::alternating4: return alternating4_table(g);
  case Family::generic: break;
  }
  throw DomainError("no closed-form character table for " + g->name() + "; use table_numeric");
}

CharacterTable table_numeric(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  const std::size_t r = g.num_classes();
  if (g.order() > max_group_order()) throw DomainError("group exceeds the closure bound");

  // a[i](j, k) = #{x in C_i : x^{-1} g_k in C_j}
  std::vector<Eigen::MatrixXd> cls(r, Eigen::MatrixXd::Zero(static_cast<long>(r), static_cast<long>(r)));
  for (std::size_t i = 0; i < r; ++i)
    for (int x : g.class_members(i)) {
      const int xi = g.inverse(x);
      for (std::size_t k = 0; k < r; ++k) {
        std::size_t j = g.class_of(g.multiply(xi, g.class_rep(k)));
        cls[i](static_cast<long>(j), static_cast<long>(k)) += 1;
      }
    }

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  Eigen::MatrixXcd vecs;
  bool separated = false;
  for (int attempt = 0; attempt < 32 && !separated; ++attempt) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<long>(r), static_cast<long>(r));
    for (std::size_t i = 0; i < r; ++i) m += unit(rng) * cls[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m.cast<std::complex<double>>());
    if (es.info() != Eigen::Success) continue;
    const auto& ev = es.eigenvalues();
    double scale = 1.0 + ev.cwiseAbs().maxCoeff();
    separated = true;
    for (long a = 0; a < ev.size() && separated; ++a)
      for (long b = a + 1; b < ev.size(); ++b)
        if (std::abs(ev(a) - ev(b)) < 1e-6 * scale) {
          separated = false;
          break;
        }
    if (separated) vecs = es.eigenvectors();
  }
  if (!separated) throw VerificationError("class-sum eigenvalues did not separate for " + g.name());

  const std::size_t id = g.class_of(0);
  std::vector<std::vector<std::complex<double>>> numeric;
  for (std::size_t col = 0; col < r; ++col) {
    Eigen::VectorXcd w = vecs.col(static_cast<long>(col));
    w /= w(static_cast<long>(id));
    double s = 0;
    for (std::size_t k = 0; k < r; ++k) s += std::norm(w(static_cast<long>(k))) / static_cast<double>(g.class_size(k));
    const double deg = std::sqrt(static_cast<double>(g.order()) / s);
    std::vector<std::complex<double>> chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = w(static_cast<long>(k)) * deg / static_cast<double>(g.class_size(k));
    numeric.push_back(std::move(chi));
  }

  // Snap through the power map: eigenvalue multiplicities of rho(g) on o-th roots of unity.
  std::vector<std::vector<std::size_t>> powers(r);
  for (std::size_t c = 0; c < r; ++c) {
    const int o = g.element_order(g.class_rep(c));
    for (int j = 0, x = 0; j < o; ++j, x = g.multiply(x, g.class_rep(c))) powers[c].push_back(g.class_of(x));
  }
  CharacterTable t{gp, {}, {}};
  for (const auto& chi : numeric) {
    ClassFunction f{gp, {}};
    const double deg = chi[id].real();
    for (std::size_t c = 0; c < r; ++c) {
      const int o = static_cast<int>(powers[c].size());
      std::vector<Rational> dense(static_cast<std::size_t>(o), Rational(0));
      long total = 0;
      std::vector<std::complex<double>> roots(static_cast<std::size_t>(o));
      for (int j = 0; j < o; ++j) roots[static_cast<std::size_t>(j)] = std::polar(1.0, -2.0 * M_PI * j / o);
      for (int k = 0; k < o; ++k) {
        std::complex<double> m = 0;
        for (int j = 0; j < o; ++j)
          m += chi[powers[c][static_cast<std::size_t>(j)]] * roots[static_cast<std::size_t>(j * k % o)];
        m /= static_cast<double>(o);
        const double rounded = std::round(m.real());
        if (std::abs(m - std::complex<double>(rounded, 0)) > 1e-6 || rounded < 0) {
          std::ostringstream os;
          os << "cannot snap numeric character value (" << chi[c].real() << ", " << chi[c].imag() << ") on class "
             << c << " of " << g.name();
          throw VerificationError(os.str());
        }
        dense[static_cast<std::size_t>(k)] = static_cast<long>(rounded);
        total += static_cast<long>(rounded);
      }
      if (std::abs(static_cast<double>(total) - deg) > 1e-6)
        throw VerificationError("snapped multiplicities do not sum to the degree on " + g.name());
      f.values.push_back(Cyclotomic::from_dense(static_cast<unsigned>(o), dense));
    }
    t.irreducibles.push_back(std::move(f));
  }
  // Trivial first, then by degree; labels follow the final order.
  std::stable_sort(t.irreducibles.begin(), t.irreducibles.end(), [](const ClassFunction& a, const ClassFunction& b) {
    auto key = [](const ClassFunction& f) {
      bool triv = std::all_of(f.values.begin(), f.values.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
      return std::make_pair(!triv, f.degree().to_rational());
    };
    return key(a) < key(b);
  });
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) t.labels.push_back("chi_" + std::to_string(i));
  std::string why;
  if (!table_is_valid(t, &why)) throw VerificationError("numeric table failed exact verification: " + why);
  return t;
}

std::vector<long long> decompose(const CharacterTable& t, const ClassFunction& f) {
  std::vector<long long> m;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Cyclotomic ip = inner_product(f, t.irreducibles[i]);
    if (!ip.is_integer() || ip.to_integer() < 0 || !ip.to_integer().fits_slong_p())
      throw VerificationError("multiplicity of " + t.labels[i] + " is " + pretty(ip) +
                              ", not a non-negative integer");
    m.push_back(ip.to_integer().get_si());
  }
  return m;
}

ClassFunction compose(const CharacterTable& t, const std::vector<long long>& mult) {
  ClassFunction f{t.group, std::vector<Cyclotomic>(t.group->num_classes(), Cyclotomic(0))};
  for (std::size_t i = 0; i < t.size(); ++i)
    if (mult[i]) f = f + static_cast<long>(mult[i]) * t.irreducibles[i];
  return f;
}

std::string decomposition_string(const CharacterTable& t, const std::vector<long long>& mult) {
  std::string s;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (!mult[i]) continue;
    if (!s.empty()) s += " + ";
    if (mult[i] != 1) s += std::to_string(mult[i]) + " ";
    s += t.labels[i];
  }
  return s.empty() ? "0" : s;
}

ClassFunction restrict(const NormalPair& p, const ClassFunction& chi) {
  if (chi.group != p.G) throw DomainError("restrict: character is not on the pair's G");
  ClassFunction r{p.N, {}};
  for (std::size_t c = 0; c < p.N->num_classes(); ++c) r.values.push_back(chi.values[p.n_class_to_g_class[c]]);
  return r;
}

ClassFunction induce(const NormalPair& p, const ClassFunction& phi) {
  if (phi.group != p.N) throw DomainError("induce: character is not on the pair's N");
  // Sum over x in G of phi(x^-1 g x) equals |G|/|C| times the sum of phi over the class C of g.
  std::vector<Cyclotomic> class_sum(p.G->num_classes(), Cyclotomic(0));
  for (std::size_t d = 0; d < p.N->num_classes(); ++d)
    class_sum[p.n_class_to_g_class[d]] += Cyclotomic(static_cast<long>(p.N->class_size(d))) * phi.values[d];
  ClassFunction r{p.G, {}};
  for (std::size_t c = 0; c < p.G->num_classes(); ++c) {
    Rational f(static_cast<long>(p.G->order()), static_cast<long>(p.N->order() * p.G->class_size(c)));
    f.canonicalize();
    r.values.push_back(class_sum[c] * Cyclotomic(f));
  }
  return r;
}

bool table_is_valid(const CharacterTable& t, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto& g = *t.group;
  if (t.size() != g.num_classes()) return fail("row count differs from class count");
  Integer sq = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& chi = t.irreducibles[i];
    if (!chi.degree().is_integer() || chi.degree().to_integer() <= 0) return fail(t.labels[i] + ": bad degree");
    sq += chi.degree().to_integer() * chi.degree().to_integer();
    for (const auto& v : chi.values)
      for (const auto& c : v.coeffs())
        if (c.get_den() != 1) return fail(t.labels[i] + ": entry is not an algebraic integer");
    for (std::size_t j = i; j < t.size(); ++j)
      if (inner_product(chi, t.irreducibles[j]) != Cyclotomic(i == j ? 1 : 0))
        return fail("rows " + t.labels[i] + ", " + t.labels[j] + " are not orthonormal");
  }
  if (sq != static_cast<long>(g.order())) return fail("sum of squared degrees differs from |G|");
  // Column orthogonality.
  std::vector<std::vector<Cyclotomic>> cols(g.num_classes());
  for (std::size_t a = 0; a < g.num_classes(); ++a)
    for (const auto& chi : t.irreducibles) cols[a].push_back(chi.values[a]);
  for (std::size_t a = 0; a < g.num_classes(); ++a)
    for (std::size_t b = a; b < g.num_classes(); ++b) {
      const Cyclotomic s = dot_conj(cols[a], cols[b]);
      Cyclotomic expect = a == b ? Cyclotomic(static_cast<long>(g.order() / g.class_size(a))) : Cyclotomic(0);
      if (s != expect) return fail("columns " + std::to_string(a) + ", " + std::to_string(b) + " are not orthogonal");
    }
  return true;
}

bool same_up_to_permutation(const CharacterTable& a, const CharacterTable& b) {
  if (a.group != b.group || a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& row : a.irreducibles) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && b.irreducibles[j].values == row.values) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

FrobeniusResult frobenius_check(const NormalPair& p, const CharacterTable& tg, const CharacterTable& tn) {
  FrobeniusResult res;
  std::vector<ClassFunction> restricted;
  for (const auto& rho : tg.irreducibles) restricted.push_back(restrict(p, rho));
  for (std::size_t k = 0; k < tn.size(); ++k) {
    std::vector<long long> row;
    ClassFunction ind_k = induce(p, tn.irreducibles[k]);
    for (std::size_t i = 0; i < tg.size(); ++i) {
      Cyclotomic lhs = inner_product(tg.irreducibles[i], ind_k);
      Cyclotomic rhs = inner_product(restricted[i], tn.irreducibles[k]);
      if (lhs != rhs || !lhs.is_integer()) {
        res.passed = false;
        res.detail = "mismatch at (" + tg.labels[i] + ", " + tn.labels[k] + "): " + pretty(lhs) + " vs " + pretty(rhs);
        row.push_back(-1);
        continue;
      }
      row.push_back(lhs.to_integer().get_si());
    }
    res.matrix.push_back(std::move(row));
  }
  return res;
}

} // namespace msc
