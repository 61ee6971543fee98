#include "msc/report.hpp"

#include <functional>
#include <future>
#include <sstream>

#include "msc/chebyshev.hpp"
#include "msc/dynkin.hpp"
#include "msc/errors.hpp"
#include "msc/fixtures.hpp"
#include "msc/poincare.hpp"

namespace msc {

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

// Runs f, turning exceptions into a failed check.
void run(VerifyReport& r, const std::string& name, const std::function<bool(std::string&)>& f) {
  CheckResult c{name, false, ""};
  try {
    c.passed = f(c.detail);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = e.what();
  }
  while (c.detail.size() >= 2 && c.detail.compare(c.detail.size() - 2, 2, "; ") == 0) c.detail.resize(c.detail.size() - 2);
  r.checks.push_back(std::move(c));
}

std::vector<GroupPtr> table_groups() {
  std::vector<GroupPtr> gs;
  for (int n = 2; n <= 8; ++n) gs.push_back(family("binary_dihedral", n));
  for (const char* f : {"binary_tetrahedral", "binary_octahedral", "symmetric4", "alternating4"}) gs.push_back(family(f));
  return gs;
}

} // namespace

VerifyReport verify_pair(const std::string& name, std::optional<int> n, unsigned K) {
  const NormalPair p = normal_pair(name, n);
  VerifyReport r;
  r.subject = pair_takes_n(name) ? name + " n=" + std::to_string(p.n) : name;

  std::optional<FusionData> data;
  run(r, "fusion_matrices", [&](std::string& why) {
    data = fusion_matrices(p);
    why = std::to_string(data->A.size()) + " nodes, V = " + data->v_label;
    return true;
  });
  if (!data) return r;
  const FusionData& d = *data;
  const std::size_t nodes = d.A.size();

  run(r, "character_tables", [&](std::string& why) { return table_is_valid(d.tg, &why) && table_is_valid(d.tn, &why); });
  run(r, "frobenius_reciprocity", [&](std::string& why) {
    auto f = frobenius_check(p, d.tg, d.tn);
    why = f.detail;
    return f.passed;
  });

  const auto fx = fixtures::for_pair(name, p.n);
  if (!fx.empty())
    run(r, "decomposition_fixtures", [&](std::string& why) {
      std::size_t bad = 0;
      for (const auto& f : fx)
        if (!fixtures::holds(d, f)) {
          ++bad;
          why += fixtures::describe(f) + "; ";
        }
      if (!bad) why = std::to_string(fx.size()) + " identities";
      return bad == 0;
    });

  const auto [want_res, want_ind] = fixtures::expected_types(name, p.n);
  run(r, "dynkin_type", [&](std::string& why) {
    const auto res = graph(d, Side::restriction).dynkin_type;
    const auto ind = graph(d, Side::induction).dynkin_type;
    why = "res " + res + ", ind " + ind;
    if (want_res.empty()) return true;
    return res == want_res && ind == want_ind;
  });

  run(r, "null_vector_check", [&](std::string& why) {
    auto nv = null_vector_check(d);
    why = "variant " + nv.variant() + (nv.kernels_one_dimensional ? "" : ", kernel not 1-dimensional");
    return nv.passed();
  });
  run(r, "eigenvector_check", [&](std::string& why) {
    auto e = eigenvector_check(d);
    why = e.detail;
    return e.passed;
  });
  run(r, "denominator_identity_check", [&](std::string& why) {
    auto dr = denominator_identity_check(d);
    why = "det(I-tA^T) = " + dr.detA.to_string() + ", det(I-tB^T) = " + dr.detB.to_string() + ", product = " +
          dr.product.to_string();
    return dr.passed;
  });
  run(r, "invariants_equality", [&](std::string& why) {
    auto a = series_cramer(d, Side::restriction, 0);
    why = a.to_string();
    return a == series_cramer(d, Side::induction, 0);
  });
  run(r, "transpose_determinant", [&](std::string&) {
    return determinant(identity_minus_t(d.A)) == determinant(identity_minus_t(d.A, false)) &&
           determinant(identity_minus_t(d.B)) == determinant(identity_minus_t(d.B, false));
  });
  run(r, "triple_equivalence", [&](std::string& why) {
    for (Side s : {Side::restriction, Side::induction})
      for (std::size_t v = 0; v < nodes; ++v) {
        const auto rec = series_recursion(d, s, v, K);
        const auto cr = series_cramer(d, s, v);
        if (cr.coefficients(K) != rec) {
          why = std::string(side_name(s)) + " vertex " + std::to_string(v) + ": Cramer stream differs";
          return false;
        }
        if (cr.numerator().coeff(0) != (v == 0 ? 1 : 0)) {
          why = std::string(side_name(s)) + " vertex " + std::to_string(v) + ": numerator constant term";
          return false;
        }
        for (unsigned k = 0; k <= K; ++k)
          if (brute_force_multiplicity(d, s, v, k) != rec[k]) {
            why = std::string(side_name(s)) + " vertex " + std::to_string(v) + " k=" + std::to_string(k);
            return false;
          }
      }
    why = "k <= " + std::to_string(K) + ", " + std::to_string(2 * nodes) + " series";
    return true;
  });

  const auto sf = fixtures::series_for_pair(name);
  if (!sf.empty())
    run(r, "series_fixtures", [&](std::string& why) {
      bool ok = true;
      for (const auto& f : sf) {
        std::string w;
        if (!fixtures::holds(d, f, &w)) {
          ok = false;
          why += fixtures::describe(f) + " (got " + w + "); ";
        }
      }
      if (ok) why = std::to_string(sf.size()) + " series";
      return ok;
    });

  if (name != "S4A4")
    run(r, "corollary_relation_check", [&](std::string& why) {
      auto c = corollary_relation_check(d);
      why = c.form + (c.detail.empty() ? "" : ": " + c.detail);
      return c.passed;
    });

  if (name == "A2n-1^2" || name == "Dn+1^2" || name == "A2n^2")
    run(r, "closed_form_check", [&](std::string& why) {
      auto c = closed_form_check(name, p.n);
      why = c.passed ? c.formula.to_string() : c.detail;
      return c.passed;
    });

  run(r, "spectrum_exponents_check", [&](std::string& why) {
    auto s = spectrum_exponents_check(d);
    std::ostringstream w;
    w << s.type_label;
    if (!s.cos_form.empty()) w << (s.cos_asserted ? ", cos form asserted" : ", cos form reported") << (s.matches_cos ? " (matches)" : " (differs)");
    if (!s.detail.empty()) w << "; " << s.detail;
    why = w.str();
    return s.passed;
  });
  return r;
}

VerifyReport verify_global() {
  VerifyReport r;
  r.subject = "global";
  run(r, "character_tables", [&](std::string& why) {
    for (const auto& g : table_groups())
      if (!table_is_valid(table(g), &why)) {
        why = g->name() + ": " + why;
        return false;
      }
    return true;
  });
  run(r, "table_numeric", [&](std::string& why) {
    std::vector<GroupPtr> gs;
    for (int n = 2; n <= 48; ++n) gs.push_back(family("cyclic", n));
    for (int n = 2; n <= 12; ++n) gs.push_back(family("binary_dihedral", n));
    for (const char* f : {"binary_tetrahedral", "binary_octahedral", "symmetric4", "alternating4"}) gs.push_back(family(f));
    for (const auto& g : gs)
      if (!same_up_to_permutation(table(g), table_numeric(g))) {
        why = g->name();
        return false;
      }
    why = std::to_string(gs.size()) + " groups";
    return true;
  });
  run(r, "chebyshev_identities", [&](std::string& why) {
    auto c = chebyshev_identities_check(50);
    why = std::to_string(c.checks) + " checks";
    for (const auto& f : c.failures) why += "; n=" + std::to_string(f.n) + " " + f.id;
    return c.passed();
  });
  run(r, "c_family", [&](std::string&) {
    for (unsigned n = 1; n <= 50; ++n) c_family(n);
    return true;
  });
  run(r, "exponent_table", [&](std::string& why) {
    for (std::size_t nodes = 2; nodes <= 12; ++nodes)
      for (const auto& t : affine_catalog(nodes)) {
        ExponentData e;
        try {
          e = exponents_catalog(t.label);
        } catch (const DomainError&) {
          continue;
        }
        auto s = e.exponents;
        std::sort(s.begin(), s.end());
        if (s.size() != nodes) {
          why = t.label + ": exponent count";
          return false;
        }
        for (std::size_t i = 0; i < s.size(); ++i)
          if (s[i] + s[s.size() - 1 - i] != e.coxeter) {
            why = t.label + ": duality";
            return false;
          }
      }
    return true;
  });
  return r;
}

std::vector<VerifyReport> verify_all(int max_n) {
  std::vector<std::future<VerifyReport>> jobs;
  jobs.push_back(std::async(std::launch::async, [] { return verify_global(); }));
  for (const auto& name : pair_names()) {
    if (!pair_takes_n(name)) {
      jobs.push_back(std::async(std::launch::async, [name] { return verify_pair(name); }));
      continue;
    }
    for (int n = pair_min_n(name); n <= max_n; ++n)
      jobs.push_back(std::async(std::launch::async, [name, n] { return verify_pair(name, n); }));
  }
  std::vector<VerifyReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

} // namespace msc
