#include "msc/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

#include "msc/errors.hpp"

namespace msc {

namespace {

Matrix2 matmul(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Matrix2 scale(const Matrix2& m, const Cyclotomic& c) { return {m[0] * c, m[1] * c, m[2] * c, m[3] * c}; }

Matrix2 identity2() { return diag(Cyclotomic(1), Cyclotomic(1)); }

} // namespace

Matrix2 diag(const Cyclotomic& a, const Cyclotomic& b) { return {a, Cyclotomic(0), Cyclotomic(0), b}; }

Cyclotomic det(const Matrix2& m) { return m[0] * m[3] - m[1] * m[2]; }

Cyclotomic trace(const Matrix2& m) { return m[0] + m[3]; }

bool is_unitary(const Matrix2& m) {
  Matrix2 h = {m[0].conj(), m[2].conj(), m[1].conj(), m[3].conj()};
  return matmul(h, m) == identity2();
}

Permutation perm_from_one_line(const std::vector<int>& one_based) {
  Permutation p;
  std::vector<bool> seen(one_based.size(), false);
  for (int v : one_based) {
    if (v < 1 || v > static_cast<int>(one_based.size()) || seen[v - 1])
      throw DomainError("not a permutation");
    seen[v - 1] = true;
    p.images.push_back(v - 1);
  }
  return p;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index()) throw DomainError("mixed group element backends");
  if (const auto* ma = std::get_if<Matrix2>(&a)) return matmul(*ma, std::get<Matrix2>(b));
  const auto& pa = std::get<Permutation>(a).images;
  const auto& pb = std::get<Permutation>(b).images;
  if (pa.size() != pb.size()) throw DomainError("permutations of different degree");
  Permutation r;
  r.images.resize(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) r.images[i] = pa[static_cast<std::size_t>(pb[i])];
  return r;
}

GroupElement identity_like(const GroupElement& a) {
  if (std::holds_alternative<Matrix2>(a)) return identity2();
  Permutation p;
  p.images.resize(std::get<Permutation>(a).images.size());
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

std::size_t hash_element(const GroupElement& g) {
  std::size_t h = g.index();
  auto mix = [&](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (const auto* m = std::get_if<Matrix2>(&g)) {
    for (const auto& c : *m) mix(c.hash());
  } else {
    for (int v : std::get<Permutation>(g).images) mix(static_cast<std::size_t>(v));
  }
  return h;
}

std::string element_to_string(const GroupElement& g) {
  std::ostringstream os;
  if (const auto* m = std::get_if<Matrix2>(&g)) {
    os << "[[" << pretty((*m)[0]) << ", " << pretty((*m)[1]) << "], [" << pretty((*m)[2]) << ", "
       << pretty((*m)[3]) << "]]";
  } else {
    const auto& im = std::get<Permutation>(g).images;
    for (std::size_t i = 0; i < im.size(); ++i) os << (i ? " " : "") << im[i] + 1;
  }
  return os.str();
}

nlohmann::json element_to_json(const GroupElement& g) {
  if (const auto* m = std::get_if<Matrix2>(&g)) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : *m) a.push_back(c.to_string());
    return a;
  }
  return element_to_string(g);
}

std::string family_name(Family f) {
  switch (f) {
  case Family::cyclic: return "cyclic";
  case Family::binary_dihedral: return "binary_dihedral";
  case Family::binary_tetrahedral: return "binary_tetrahedral";
  case Family::binary_octahedral: return "binary_octahedral";
  case Family::symmetric4: return "symmetric4";
  case Family::alternating4: return "alternating4";
  case Family::generic: return "generic";
  }
  return "generic";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::cyclic, Family::binary_dihedral, Family::binary_tetrahedral,
                   Family::binary_octahedral, Family::symmetric4, Family::alternating4})
    if (family_name(f) == name) return f;
  throw DomainError("unknown group family: " + name);
}

std::size_t max_group_order() {
  if (const char* env = std::getenv("MSC_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

int FiniteGroup::index_of(const GroupElement& g) const {
  auto it = lookup_.find(g);
  return it == lookup_.end() ? -1 : it->second;
}

void FiniteGroup::close(const std::vector<GroupElement>& gens) {
  if (gens.empty()) throw DomainError("generate needs at least one generator");
  for (const auto& g : gens) {
    if (g.index() != gens[0].index()) throw DomainError("generators mix backends");
    if (const auto* p = std::get_if<Permutation>(&g)) {
      if (p->images.size() != std::get<Permutation>(gens[0]).images.size())
        throw DomainError("permutations of different degree");
      perm_from_one_line([&] {
        std::vector<int> v;
        for (int x : p->images) v.push_back(x + 1);
        return v;
      }());
    }
  }
  const std::size_t bound = max_group_order();
  elements_.push_back(identity_like(gens[0]));
  lookup_.emplace(elements_[0], 0);
  word_.emplace_back();
  right_.assign(gens.size(), {});
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      GroupElement y = msc::multiply(elements_[i], gens[s]);
      auto it = lookup_.find(y);
      int idx;
      if (it == lookup_.end()) {
        if (elements_.size() >= bound)
          throw DomainError("group closure exceeds the bound of " + std::to_string(bound) + " elements");
        idx = static_cast<int>(elements_.size());
        lookup_.emplace(y, idx);
        elements_.push_back(std::move(y));
        auto w = word_[i];
        w.push_back(static_cast<int>(s));
        word_.push_back(std::move(w));
      } else {
        idx = it->second;
      }
      right_[s].push_back(idx);
    }
  }
  const std::size_t n = elements_.size();
  right_inv_.assign(gens.size(), std::vector<int>(n));
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t x = 0; x < n; ++x) right_inv_[s][static_cast<std::size_t>(right_[s][x])] = static_cast<int>(x);
  if (n <= 1024) {
    std::vector<int> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = multiply(static_cast<int>(a), static_cast<int>(b));
    table_ = std::move(t);
  }
}

int FiniteGroup::multiply(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)];
  int x = a;
  for (int s : word_[static_cast<std::size_t>(b)]) x = right_[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)];
  return x;
}

int FiniteGroup::inverse(int a) const {
  const auto& w = word_[static_cast<std::size_t>(a)];
  int x = 0;
  for (std::size_t j = w.size(); j-- > 0;) x = right_inv_[static_cast<std::size_t>(w[j])][static_cast<std::size_t>(x)];
  return x;
}

int FiniteGroup::power(int a, long k) const {
  const long o = element_order(a);
  k = ((k % o) + o) % o;
  int x = 0;
  for (int b = a; k; k >>= 1) {
    if (k & 1) x = multiply(x, b);
    if (k > 1) b = multiply(b, b);
  }
  return x;
}

int FiniteGroup::element_order(int a) const {
  if (!class_order_.empty()) return class_order_[class_of(a)];
  int o = 1;
  for (int x = a; x != 0; x = multiply(x, a)) ++o;
  return o;
}

unsigned FiniteGroup::exponent() const {
  unsigned e = 1;
  for (int r : reps_) e = std::lcm(e, static_cast<unsigned>(element_order(r)));
  return e;
}

std::size_t FiniteGroup::power_class(std::size_t c, long k) const { return class_of(power(reps_[c], k)); }

void FiniteGroup::compute_classes() {
  const std::size_t n = order();
  class_of_.assign(n, -1);
  classes_.clear();
  reps_.clear();
  std::vector<int> left_gen;
  for (const auto& r : right_) left_gen.push_back(r[0]);
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] >= 0) continue;
    const int c = static_cast<int>(classes_.size());
    std::vector<int> members{static_cast<int>(x)};
    class_of_[x] = c;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t s = 0; s < right_.size(); ++s) {
        // g_s * m * g_s^{-1}
        int y = right_inv_[s][static_cast<std::size_t>(multiply(left_gen[s], members[i]))];
        if (class_of_[static_cast<std::size_t>(y)] < 0) {
          class_of_[static_cast<std::size_t>(y)] = c;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
    reps_.push_back(static_cast<int>(x));
  }
  // order is a class function
  class_order_.clear();
  std::vector<int> orders;
  for (int r : reps_) orders.push_back(element_order(r));
  class_order_ = std::move(orders);
}

void FiniteGroup::set_reps(const std::vector<GroupElement>& reps) {
  if (reps.size() != classes_.size())
    throw VerificationError(name_ + ": expected " + std::to_string(reps.size()) + " classes, found " +
                            std::to_string(classes_.size()));
  std::vector<std::vector<int>> classes;
  std::vector<int> new_reps;
  std::vector<int> remap(classes_.size(), -1);
  for (const auto& r : reps) {
    int idx = index_of(r);
    if (idx < 0) throw VerificationError(name_ + ": class representative not in group");
    auto c = static_cast<std::size_t>(class_of_[static_cast<std::size_t>(idx)]);
    if (remap[c] >= 0) throw VerificationError(name_ + ": two representatives in one class");
    remap[c] = static_cast<int>(classes.size());
    classes.push_back(classes_[c]);
    new_reps.push_back(idx);
  }
  for (auto& c : class_of_) c = remap[static_cast<std::size_t>(c)];
  classes_ = std::move(classes);
  reps_ = std::move(new_reps);
  class_order_.clear();
  std::vector<int> orders;
  for (int r : reps_) orders.push_back(element_order(r));
  class_order_ = std::move(orders);
}

nlohmann::json FiniteGroup::to_json() const {
  nlohmann::json cls = nlohmann::json::array();
  for (std::size_t c = 0; c < num_classes(); ++c)
    cls.push_back({{"rep", element_to_json(element(reps_[c]))}, {"size", class_size(c)}});
  return {{"name", name_}, {"order", order()}, {"classes", cls}};
}

GroupPtr generate(const std::vector<GroupElement>& gens) {
  auto g = std::make_shared<FiniteGroup>();
  g->close(gens);
  g->compute_classes();
  return g;
}

namespace {

Cyclotomic theta(long n, long k) { return root_of_unity(n, k); }

Cyclotomic inv_sqrt2() { return (theta(8, 1) + theta(8, -1)) * Cyclotomic(Rational(1, 2)); }

Matrix2 dihedral_y() { return {Cyclotomic(0), theta(4, 1), theta(4, 1), Cyclotomic(0)}; }

Matrix2 tetra_z() {
  return scale({theta(8, -1), theta(8, -1), -theta(8, 1), theta(8, 1)}, inv_sqrt2());
}

GroupElement perm(std::vector<int> one_based) { return perm_from_one_line(one_based); }

} // namespace

std::vector<GroupElement> family_generators(Family f, int n) {
  switch (f) {
  case Family::cyclic: return {diag(theta(n, -1), theta(n, 1))};
  case Family::binary_dihedral: return {diag(theta(2 * n, -1), theta(2 * n, 1)), dihedral_y()};
  case Family::binary_tetrahedral: return {diag(theta(4, 1), theta(4, -1)), dihedral_y(), tetra_z()};
  case Family::binary_octahedral: return {diag(theta(8, 1), theta(8, -1)), dihedral_y(), tetra_z()};
  case Family::symmetric4: return {perm({2, 3, 4, 1}), perm({2, 1, 3, 4})};
  case Family::alternating4: return {perm({2, 3, 1, 4}), perm({2, 4, 3, 1})};
  case Family::generic: break;
  }
  throw DomainError("no generators for a generic group");
}

GroupPtr family(const std::string& name, std::optional<int> n) {
  const Family f = parse_family(name);
  const bool takes_n = f == Family::cyclic || f == Family::binary_dihedral;
  if (takes_n && !n) throw DomainError(name + " needs a parameter n");
  if (!takes_n && n) throw DomainError(name + " takes no parameter n");
  if (takes_n && *n < 2) throw DomainError(name + " needs n >= 2");
  const int p = n.value_or(0);
  if (takes_n) {
    std::size_t ord = f == Family::cyclic ? static_cast<std::size_t>(p) : 4 * static_cast<std::size_t>(p);
    if (ord > max_group_order())
      throw DomainError("group order " + std::to_string(ord) + " exceeds the closure bound");
  }

  auto g = std::make_shared<FiniteGroup>();
  g->family_ = f;
  g->param_ = p;
  auto gens = family_generators(f, p);
  g->close(gens);
  g->compute_classes();

  std::vector<GroupElement> reps;
  const Matrix2 one = identity2();
  const Matrix2 minus = scale(one, Cyclotomic(-1));
  switch (f) {
  case Family::cyclic: {
    g->name_ = "C_" + std::to_string(p);
    const auto& z = std::get<Matrix2>(gens[0]);
    Matrix2 cur = one;
    for (int k = 0; k < p; ++k, cur = matmul(cur, z)) reps.push_back(cur);
    break;
  }
  case Family::binary_dihedral: {
    g->name_ = "D_" + std::to_string(p);
    const auto& x = std::get<Matrix2>(gens[0]);
    const auto& y = std::get<Matrix2>(gens[1]);
    reps = {one, minus};
    Matrix2 cur = x;
    for (int k = 1; k < p; ++k, cur = matmul(cur, x)) reps.push_back(cur);
    reps.push_back(y);
    reps.push_back(matmul(y, x));
    break;
  }
  case Family::binary_tetrahedral: {
    g->name_ = "T";
    const auto& x = std::get<Matrix2>(gens[0]);
    const auto& z = std::get<Matrix2>(gens[2]);
    Matrix2 z2 = matmul(z, z);
    reps = {one, minus, x, z, z2, scale(z, Cyclotomic(-1)), scale(z2, Cyclotomic(-1))};
    break;
  }
  case Family::binary_octahedral: {
    g->name_ = "O";
    const auto& u = std::get<Matrix2>(gens[0]);
    const auto& y = std::get<Matrix2>(gens[1]);
    const auto& z = std::get<Matrix2>(gens[2]);
    reps = {one, minus, u, scale(u, Cyclotomic(-1)), y, matmul(u, y), z, scale(z, Cyclotomic(-1))};
    break;
  }
  case Family::symmetric4:
    g->name_ = "S_4";
    reps = {perm({1, 2, 3, 4}), perm({2, 1, 3, 4}), perm({2, 3, 1, 4}), perm({2, 3, 4, 1}), perm({2, 1, 4, 3})};
    break;
  case Family::alternating4:
    g->name_ = "A_4";
    reps = {perm({1, 2, 3, 4}), perm({2, 3, 1, 4}), perm({3, 1, 2, 4}), perm({2, 1, 4, 3})};
    break;
  case Family::generic: break;
  }
  g->set_reps(reps);
  return g;
}

NormalPair make_pair(const std::string& name, GroupPtr G, GroupPtr N) {
  NormalPair p;
  p.name = name;
  p.G = std::move(G);
  p.N = std::move(N);
  std::vector<char> in_n(p.G->order(), 0);
  for (std::size_t i = 0; i < p.N->order(); ++i) {
    int gi = p.G->index_of(p.N->element(static_cast<int>(i)));
    if (gi < 0) throw VerificationError(name + ": N is not contained in G");
    p.embed.push_back(gi);
    in_n[static_cast<std::size_t>(gi)] = 1;
  }
  for (std::size_t g = 0; g < p.G->order(); ++g) {
    const int gi = p.G->inverse(static_cast<int>(g));
    for (int x : p.embed) {
      int c = p.G->multiply(p.G->multiply(static_cast<int>(g), x), gi);
      if (!in_n[static_cast<std::size_t>(c)]) throw VerificationError(name + ": N is not normal in G");
    }
  }
  for (std::size_t c = 0; c < p.N->num_classes(); ++c)
    p.n_class_to_g_class.push_back(p.G->class_of(p.embed[static_cast<std::size_t>(p.N->class_rep(c))]));
  std::vector<char> hit(p.G->num_classes(), 0);
  for (int x : p.embed) hit[p.G->class_of(x)] = 1;
  for (std::size_t c = 0; c < hit.size(); ++c)
    if (hit[c]) p.upsilon_n.push_back(c);
  p.index = p.G->order() / p.N->order();
  return p;
}

const std::vector<std::string>& pair_names() {
  static const std::vector<std::string> names = {"A2n-1^2", "Dn+1^2", "A2n^2", "E6^2", "D4^3", "A2^2", "S4A4"};
  return names;
}

bool pair_takes_n(const std::string& name) {
  return name == "A2n-1^2" || name == "Dn+1^2" || name == "A2n^2";
}

int pair_min_n(const std::string& name) {
  if (name == "A2n-1^2") return 3;
  if (name == "Dn+1^2" || name == "A2n^2") return 2;
  return 0;
}

NormalPair normal_pair(const std::string& name, std::optional<int> n) {
  const auto& names = pair_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw DomainError("unknown pair: " + name);
  if (pair_takes_n(name)) {
    if (!n) throw DomainError(name + " needs a parameter n");
    if (*n < pair_min_n(name))
      throw DomainError(name + " needs n >= " + std::to_string(pair_min_n(name)));
  } else if (n) {
    throw DomainError(name + " takes no parameter n");
  }
  NormalPair p;
  if (name == "A2n-1^2") p = make_pair(name, family("binary_dihedral", 2 * (*n - 1)), family("binary_dihedral", *n - 1));
  else if (name == "Dn+1^2") p = make_pair(name, family("binary_dihedral", *n), family("cyclic", 2 * *n));
  else if (name == "A2n^2") p = make_pair(name, family("binary_dihedral", 2 * *n), family("cyclic", 2 * *n));
  else if (name == "E6^2") p = make_pair(name, family("binary_octahedral"), family("binary_tetrahedral"));
  else if (name == "D4^3") p = make_pair(name, family("binary_tetrahedral"), family("binary_dihedral", 2));
  else if (name == "A2^2") p = make_pair(name, family("binary_dihedral", 2), family("cyclic", 2));
  else p = make_pair(name, family("symmetric4"), family("alternating4"));
  p.n = n.value_or(0);
  return p;
}

} // namespace msc
