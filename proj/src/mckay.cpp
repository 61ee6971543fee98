#include "msc/mckay.hpp"

#include <sstream>

#include "msc/errors.hpp"

namespace msc {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Columns of `basis` are the unknowns' coefficient vectors.
std::optional<std::vector<Rational>> solve_unique(const std::vector<std::vector<long long>>& basis,
                                                  const std::vector<long long>& target) {
  const std::size_t k = basis.size(), rows = target.size();
  RatMatrix m(rows, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rational(static_cast<long>(basis[j][i]));
    m[i][k] = Rational(static_cast<long>(target[i]));
  }
  auto piv = rref(m, k + 1);
  if (piv.size() != k || (!piv.empty() && piv.back() == k)) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = m[i][k];
  return x;
}

std::vector<long long> integral_column(const std::optional<std::vector<Rational>>& x, const std::string& what) {
  if (!x) throw VerificationError(what + ": not in the span of the basis");
  std::vector<long long> out;
  for (const auto& v : *x) {
    if (v.get_den() != 1 || v < 0) throw VerificationError(what + ": coefficient " + rational_to_string(v));
    out.push_back(v.get_num().get_si());
  }
  return out;
}

IntMatrix cartan_of(const IntMatrix& M) {
  IntMatrix c = M;
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j) c[i][j] = (i == j ? 2 : 0) - M[i][j];
  return c;
}

CharacterTable any_table(const GroupPtr& g) {
  try {
    return table(g);
  } catch (const DomainError&) {
    return table_numeric(g);
  }
}

std::vector<long long> degrees_of(const std::vector<ClassFunction>& fs) {
  std::vector<long long> d;
  for (const auto& f : fs) d.push_back(f.degree().to_integer().get_si());
  return d;
}

bool annihilates(const IntMatrix& c, bool transpose, const std::vector<Rational>& v) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
      s += Rational(static_cast<long>(transpose ? c[j][i] : c[i][j])) * v[j];
    if (s != 0) return false;
  }
  return true;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto x : m[i]) r[i].push_back(Rational(static_cast<long>(x)));
  return r;
}

} // namespace

std::size_t rational_rank(const std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return 0;
  RatMatrix c = m;
  return rref(c, m[0].size()).size();
}

std::vector<long long> FusionData::res_degrees() const { return degrees_of(res.members); }
std::vector<long long> FusionData::ind_degrees() const { return degrees_of(ind.members); }

RestrictionBasis restriction_basis(const NormalPair& p, const CharacterTable& tg, const CharacterTable& tn) {
  RestrictionBasis b;
  for (std::size_t i = 0; i < tg.size(); ++i) {
    ClassFunction r = restrict(p, tg.irreducibles[i]);
    std::size_t k = 0;
    while (k < b.members.size() && !(b.members[k] == r)) ++k;
    if (k == b.members.size()) {
      b.members.push_back(r);
      b.origin.emplace_back();
      b.names.push_back("check(" + tg.labels[i] + ")");
    }
    b.origin[k].push_back(i);
  }
  if (b.members.size() != p.upsilon_n.size())
    throw VerificationError("restriction basis has " + std::to_string(b.members.size()) + " members, |Upsilon(N)| = " +
                            std::to_string(p.upsilon_n.size()));
  std::vector<std::vector<long long>> mult;
  for (const auto& m : b.members) mult.push_back(decompose(tn, m));
  RatMatrix rm;
  for (const auto& row : mult) {
    rm.emplace_back();
    for (auto x : row) rm.back().push_back(Rational(static_cast<long>(x)));
  }
  if (rational_rank(rm) != b.members.size()) throw VerificationError("restriction basis is linearly dependent");
  return b;
}

InductionBasis induction_basis(const NormalPair& p, const CharacterTable& tg, const CharacterTable& tn,
                               const RestrictionBasis& res) {
  std::vector<ClassFunction> induced;
  for (const auto& phi : tn.irreducibles) induced.push_back(induce(p, phi));

  std::vector<ClassFunction> distinct;
  for (const auto& f : induced) {
    bool seen = false;
    for (const auto& d : distinct) seen = seen || d == f;
    if (!seen) distinct.push_back(f);
  }
  if (distinct.size() != p.upsilon_n.size())
    throw VerificationError("induction basis has " + std::to_string(distinct.size()) + " members, |Upsilon(N)| = " +
                            std::to_string(p.upsilon_n.size()));

  InductionBasis b;
  for (const auto& r : res.members) {
    // f(check rho) = hat(phi_k) for the first constituent phi_k of check rho.
    auto m = decompose(tn, r);
    std::size_t k = 0;
    while (k < m.size() && m[k] == 0) ++k;
    const ClassFunction& img = induced[k];
    for (const auto& prev : b.members)
      if (prev == img) throw VerificationError("f is not injective at hat(" + tn.labels[k] + ")");
    b.members.push_back(img);
    b.f_source.push_back(k);
    b.names.push_back("hat(" + tn.labels[k] + ")");
    b.origin.emplace_back();
    for (std::size_t j = 0; j < induced.size(); ++j)
      if (induced[j] == img) b.origin.back().push_back(j);
  }
  (void)tg;
  return b;
}

ClassFunction default_module(const NormalPair& p, const CharacterTable& tg, std::string* label) {
  if (p.name == "S4A4") {
    if (label) *label = "rho_2^+";
    return tg["rho_2^+"];
  }
  ClassFunction v = natural_character(p.G);
  if (label) {
    *label = "natural";
    for (std::size_t i = 0; i < tg.size(); ++i)
      if (tg.irreducibles[i] == v) *label = tg.labels[i];
  }
  return v;
}

FusionData fusion_matrices(const NormalPair& p, std::optional<ClassFunction> V) {
  FusionData d{p, any_table(p.G), any_table(p.N), {}, {}, {}, {}, {}, {}, {}, {}};
  if (V) {
    if (V->group != p.G) throw DomainError("module is not a class function on G");
    d.V = *V;
    d.v_label = "custom";
    for (std::size_t i = 0; i < d.tg.size(); ++i)
      if (d.tg.irreducibles[i] == d.V) d.v_label = d.tg.labels[i];
  } else {
    d.V = default_module(p, d.tg, &d.v_label);
  }
  d.res = restriction_basis(p, d.tg, d.tn);
  d.ind = induction_basis(p, d.tg, d.tn, d.res);
  const std::size_t k = d.res.members.size();
  const ClassFunction Vres = restrict(p, d.V);

  std::vector<std::vector<long long>> res_mult, ind_mult;
  for (const auto& m : d.res.members) res_mult.push_back(decompose(d.tn, m));
  for (const auto& m : d.ind.members) ind_mult.push_back(decompose(d.tg, m));

  d.A.assign(k, std::vector<long long>(k, 0));
  d.B = d.A;
  for (std::size_t j = 0; j < k; ++j) {
    auto a = integral_column(solve_unique(res_mult, decompose(d.tn, Vres * d.res.members[j])),
                             "V x " + d.res.names[j]);
    auto b = integral_column(solve_unique(ind_mult, decompose(d.tg, d.V * d.ind.members[j])),
                             "V x " + d.ind.names[j]);
    for (std::size_t i = 0; i < k; ++i) {
      d.A[i][j] = a[i];
      d.B[i][j] = b[i];
    }
  }
  d.cartanA = cartan_of(d.A);
  d.cartanB = cartan_of(d.B);
  return d;
}

const char* side_name(Side s) { return s == Side::restriction ? "res" : "ind"; }

RepresentationGraph graph(const IntMatrix& M, const std::vector<std::string>& labels,
                          const std::vector<long long>& degrees) {
  RepresentationGraph g;
  g.labels = labels;
  g.degrees = degrees;
  const std::size_t k = M.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const long long a = M[i][j], b = M[j][i];
      if (a == 0 && b == 0) continue;
      GraphEdge e{i, j, std::max(a, b), std::nullopt};
      if (a != b) e.arrow_to = a > b ? i : j;
      g.edges.push_back(e);
    }
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> stack{0};
  if (k) seen[0] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges) {
      std::size_t w = e.i == v ? e.j : e.j == v ? e.i : k;
      if (w < k && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (bool s : seen) g.connected = g.connected && s;
  auto id = identify(cartan_of(M));
  g.dynkin_type = id ? id->label : "unrecognized";
  return g;
}

RepresentationGraph graph(const FusionData& d, Side side) {
  return side == Side::restriction ? graph(d.A, d.res.names, d.res_degrees())
                                   : graph(d.B, d.ind.names, d.ind_degrees());
}

std::string NullVectorReport::variant() const {
  if (direct && transposed) return "both";
  if (direct) return "direct";
  if (transposed) return "transposed";
  return "none";
}

// dI - M with d = deg V; the Cartan matrix when V is 2-dimensional.
IntMatrix shifted(const FusionData& d, const IntMatrix& M) {
  const long long deg = d.V.degree().to_integer().get_si();
  IntMatrix c = M;
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j) c[i][j] = (i == j ? deg : 0) - M[i][j];
  return c;
}

NullVectorReport null_vector_check(const FusionData& d) {
  NullVectorReport r;
  const IntMatrix cA = shifted(d, d.A), cB = shifted(d, d.B);
  const Rational index(static_cast<long>(d.pair.index));
  for (auto x : d.ind_degrees()) r.alpha_A.push_back(Rational(static_cast<long>(x)) / index);
  for (auto x : d.res_degrees()) r.alpha_B.push_back(Rational(static_cast<long>(x)));
  r.direct = annihilates(cA, false, r.alpha_A) && annihilates(cB, false, r.alpha_B);
  r.transposed = annihilates(cA, true, r.alpha_B) && annihilates(cB, true, r.alpha_A);
  r.mixed = annihilates(cA, false, r.alpha_B) && annihilates(cB, true, r.alpha_A);
  const std::size_t k = d.A.size();
  r.kernels_one_dimensional =
      rational_rank(to_rational(cA)) + 1 == k && rational_rank(to_rational(cB)) + 1 == k;
  return r;
}

EigenReport eigenvector_check(const FusionData& d) {
  EigenReport r;
  const auto& p = d.pair;
  const std::size_t k = d.A.size();
  std::ostringstream why;
  for (std::size_t gc : p.upsilon_n) {
    std::size_t nc = 0;
    while (p.n_class_to_g_class[nc] != gc) ++nc;
    const Cyclotomic lambda = d.V.degree() - d.V.values[gc];
    for (int s = 0; s < 2; ++s) {
      const IntMatrix M = shifted(d, s == 0 ? d.A : d.B);
      std::vector<Cyclotomic> v;
      for (std::size_t i = 0; i < k; ++i)
        v.push_back(s == 0 ? d.res.members[i].values[nc] : d.ind.members[i].values[gc]);
      bool nonzero = false;
      for (const auto& x : v) nonzero = nonzero || !x.is_zero();
      if (!nonzero) {
        r.passed = false;
        why << (s == 0 ? "res" : "ind") << " vector vanishes at class " << gc << "; ";
      }
      for (std::size_t j = 0; j < k; ++j) {
        Cyclotomic left(0), col(0);
        for (std::size_t i = 0; i < k; ++i) {
          left += v[i] * Cyclotomic(static_cast<long>(M[i][j]));
          col += v[i] * Cyclotomic(static_cast<long>(M[j][i]));
        }
        if (!(left == lambda * v[j])) {
          r.passed = false;
          why << (s == 0 ? "res" : "ind") << " class " << gc << " entry " << j << "; ";
        }
        if (!(col == lambda * v[j])) r.column_form = false;
      }
    }
  }
  r.detail = why.str();
  return r;
}

} // namespace msc
