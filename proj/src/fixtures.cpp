#include "msc/fixtures.hpp"

#include "msc/dynkin.hpp"
#include "msc/poincare.hpp"

namespace msc::fixtures {

namespace {

std::string d(int i) { return "delta_" + std::to_string(i); }
std::string dp(int i) { return "delta_" + std::to_string(i) + "^+"; }
std::string dm(int i) { return "delta_" + std::to_string(i) + "^-"; }
std::string xi(int i) { return "xi_" + std::to_string(i); }

} // namespace

std::vector<Fixture> for_pair(const std::string& name, int n) {
  using K = Kind;
  std::vector<Fixture> f;
  auto add = [&](Kind k, std::string lhs, std::vector<Term> rhs) { f.push_back({k, std::move(lhs), std::move(rhs)}); };

  if (name == "A2n-1^2") {
    const int m = n - 1; // G = D_{2m}, N = D_m
    for (const char* s : {"+", "-"}) {
      std::string sg(s);
      add(K::res, "delta_0^" + sg, {{1, "delta_0^" + sg}});
      add(K::res, "delta_" + std::to_string(2 * m) + "^" + sg, {{1, "delta_0^" + sg}});
      add(K::ind, "delta_0^" + sg, {{1, "delta_0^" + sg}, {1, "delta_" + std::to_string(2 * m) + "^" + sg}});
      add(K::ind, "delta_" + std::to_string(m) + "^" + sg, {{1, d(m)}});
      add(K::res_fuse, "delta_0^" + sg, {{1, d(1)}});
    }
    for (int i = 1; i <= m - 1; ++i) {
      add(K::res, d(i), {{1, d(i)}});
      add(K::res, d(2 * m - i), {{1, d(i)}});
      add(K::ind, d(i), {{1, d(i)}, {1, d(2 * m - i)}});
    }
    add(K::res, d(m), {{1, dp(m)}, {1, dm(m)}});
    add(K::res_fuse, d(1), {{1, dp(0)}, {1, dm(0)}, {1, d(2)}});
    for (int i = 2; i <= m - 1; ++i) add(K::res_fuse, d(i), {{1, d(i - 1)}, {1, d(i + 1)}});
    add(K::res_fuse, d(m), {{2, d(m - 1)}});
    add(K::ind_fuse, dp(0), {{1, d(1)}});
    add(K::ind_fuse, dm(0), {{1, d(1)}});
    if (m >= 3) add(K::ind_fuse, d(1), {{1, dp(0)}, {1, dm(0)}, {1, d(2)}});
    for (int i = 2; i <= m - 2; ++i) add(K::ind_fuse, d(i), {{1, d(i - 1)}, {1, d(i + 1)}});
    if (m >= 3) add(K::ind_fuse, d(m - 1), {{1, d(m - 2)}, {2, dp(m)}});
    if (m == 2) add(K::ind_fuse, d(1), {{1, dp(0)}, {1, dm(0)}, {2, dp(2)}});
    add(K::ind_fuse, dp(m), {{1, d(m - 1)}});
  } else if (name == "Dn+1^2") {
    add(K::res, dp(0), {{1, xi(0)}});
    add(K::res, dm(0), {{1, xi(0)}});
    add(K::res, dp(n), {{1, xi(n)}});
    add(K::res, dm(n), {{1, xi(n)}});
    add(K::ind, xi(0), {{1, dp(0)}, {1, dm(0)}});
    add(K::ind, xi(n), {{1, dp(n)}, {1, dm(n)}});
    for (int i = 1; i <= n - 1; ++i) {
      add(K::res, d(i), {{1, xi(i)}, {1, xi(2 * n - i)}});
      add(K::ind, xi(i), {{1, d(i)}});
      add(K::ind, xi(2 * n - i), {{1, d(i)}});
    }
    add(K::res_fuse, dp(0), {{1, d(1)}});
    if (n >= 3) {
      add(K::res_fuse, d(1), {{2, dp(0)}, {1, d(2)}});
      add(K::res_fuse, d(n - 1), {{1, d(n - 2)}, {2, dp(n)}});
    } else {
      add(K::res_fuse, d(1), {{2, dp(0)}, {2, dp(2)}});
    }
    for (int i = 2; i <= n - 2; ++i) add(K::res_fuse, d(i), {{1, d(i - 1)}, {1, d(i + 1)}});
    add(K::res_fuse, dp(n), {{1, d(n - 1)}});
    add(K::ind_fuse, xi(0), {{2, xi(1)}});
    add(K::ind_fuse, xi(1), {{1, xi(0)}, {1, xi(2)}});
    for (int i = 2; i <= n - 2; ++i) add(K::ind_fuse, xi(i), {{1, xi(i - 1)}, {1, xi(i + 1)}});
    add(K::ind_fuse, xi(n - 1), {{1, xi(n - 2)}, {1, xi(n)}});
    add(K::ind_fuse, xi(n), {{2, xi(n - 1)}});
  } else if (name == "A2n^2") {
    for (const auto& l : {dp(0), dm(0), dp(2 * n), dm(2 * n)}) add(K::res, l, {{1, xi(0)}});
    add(K::ind, xi(0), {{1, dp(0)}, {1, dm(0)}, {1, dp(2 * n)}, {1, dm(2 * n)}});
    for (int i = 1; i <= n; ++i) {
      add(K::res, d(i), {{1, xi(i)}, {1, xi(2 * n - i)}});
      add(K::res, d(2 * n - i), {{1, xi(i)}, {1, xi(2 * n - i)}});
      add(K::ind, xi(i), {{1, d(i)}, {1, d(2 * n - i)}});
      add(K::ind, xi(2 * n - i), {{1, d(i)}, {1, d(2 * n - i)}});
    }
    add(K::res_fuse, dp(0), {{1, d(1)}});
    add(K::res_fuse, d(1), {{2, dp(0)}, {1, d(2)}});
    for (int i = 2; i <= n - 2; ++i) add(K::res_fuse, d(i), {{1, d(i - 1)}, {1, d(i + 1)}});
    if (n >= 3) add(K::res_fuse, d(n - 1), {{1, d(n - 2)}, {1, d(n)}});
    add(K::res_fuse, d(n), {{2, d(n - 1)}});
    add(K::ind_fuse, xi(0), {{2, xi(1)}});
    add(K::ind_fuse, xi(1), {{1, xi(0)}, {1, xi(2)}});
    for (int i = 2; i <= n - 2; ++i) add(K::ind_fuse, xi(i), {{1, xi(i - 1)}, {1, xi(i + 1)}});
    add(K::ind_fuse, xi(n - 1), {{1, xi(n - 2)}, {1, xi(n)}});
    add(K::ind_fuse, xi(n), {{2, xi(n - 1)}});
  } else if (name == "E6^2") {
    add(K::ind, "tau_0", {{1, "omega_0^+"}, {1, "omega_0^-"}});
    add(K::ind, "tau_1", {{1, "omega_1^+"}, {1, "omega_1^-"}});
    add(K::ind, "tau_2", {{1, "omega_2^+"}, {1, "omega_2^-"}});
    add(K::ind, "tau_1'", {{1, "omega_3"}});
    add(K::ind, "tau_1''", {{1, "omega_3"}});
    add(K::ind, "tau_0'", {{1, "omega_4"}});
    add(K::ind, "tau_0''", {{1, "omega_4"}});
    for (const char* s : {"+", "-"}) {
      std::string sg(s);
      add(K::res, "omega_0^" + sg, {{1, "tau_0"}});
      add(K::res, "omega_1^" + sg, {{1, "tau_1"}});
      add(K::res, "omega_2^" + sg, {{1, "tau_2"}});
    }
    add(K::res, "omega_3", {{1, "tau_1'"}, {1, "tau_1''"}});
    add(K::res, "omega_4", {{1, "tau_0'"}, {1, "tau_0''"}});
    add(K::res_fuse, "omega_0^+", {{1, "omega_1^+"}});
    add(K::res_fuse, "omega_1^+", {{1, "omega_0^+"}, {1, "omega_2^+"}});
    add(K::res_fuse, "omega_2^+", {{1, "omega_1^+"}, {1, "omega_3"}});
    add(K::res_fuse, "omega_3", {{2, "omega_2^+"}, {1, "omega_4"}});
    add(K::res_fuse, "omega_4", {{1, "omega_3"}});
    add(K::ind_fuse, "tau_0", {{1, "tau_1"}});
    add(K::ind_fuse, "tau_1", {{1, "tau_0"}, {1, "tau_2"}});
    add(K::ind_fuse, "tau_2", {{1, "tau_1"}, {2, "tau_1'"}});
    add(K::ind_fuse, "tau_1'", {{1, "tau_2"}, {1, "tau_0'"}});
    add(K::ind_fuse, "tau_0'", {{1, "tau_1'"}});
  } else if (name == "D4^3") {
    add(K::ind, dp(0), {{1, "tau_0"}, {1, "tau_0'"}, {1, "tau_0''"}});
    add(K::ind, d(1), {{1, "tau_1"}, {1, "tau_1'"}, {1, "tau_1''"}});
    for (const auto& l : {dp(2), dm(2), dm(0)}) add(K::ind, l, {{1, "tau_2"}});
    for (const char* t : {"tau_0", "tau_0'", "tau_0''"}) add(K::res, t, {{1, dp(0)}});
    for (const char* t : {"tau_1", "tau_1'", "tau_1''"}) add(K::res, t, {{1, d(1)}});
    add(K::res, "tau_2", {{1, dp(2)}, {1, dm(0)}, {1, dm(2)}});
    add(K::res_fuse, "tau_0", {{1, "tau_1"}});
    add(K::res_fuse, "tau_1", {{1, "tau_0"}, {1, "tau_2"}});
    add(K::res_fuse, "tau_2", {{3, "tau_1"}});
    add(K::ind_fuse, dp(0), {{1, d(1)}});
    add(K::ind_fuse, d(1), {{1, dp(0)}, {3, dp(2)}});
    add(K::ind_fuse, dp(2), {{1, d(1)}});
  } else if (name == "A2^2") {
    for (const auto& l : {dp(0), dm(0), dp(2), dm(2)}) add(K::res, l, {{1, xi(0)}});
    add(K::res, d(1), {{2, xi(1)}});
    add(K::ind, xi(0), {{1, dp(0)}, {1, dm(0)}, {1, dp(2)}, {1, dm(2)}});
    add(K::ind, xi(1), {{2, d(1)}});
    add(K::res_fuse, dp(0), {{1, d(1)}});
    add(K::res_fuse, d(1), {{4, dp(0)}});
    add(K::ind_fuse, xi(0), {{2, xi(1)}});
    add(K::ind_fuse, xi(1), {{2, xi(0)}});
  } else if (name == "S4A4") {
    add(K::ind, "phi_0", {{1, "rho_0^+"}, {1, "rho_0^-"}});
    add(K::ind, "phi_1", {{1, "rho_1"}});
    add(K::ind, "phi_2", {{1, "rho_1"}});
    add(K::ind, "phi_3", {{1, "rho_2^+"}, {1, "rho_2^-"}});
    add(K::res, "rho_0^+", {{1, "phi_0"}});
    add(K::res, "rho_0^-", {{1, "phi_0"}});
    add(K::res, "rho_1", {{1, "phi_1"}, {1, "phi_2"}});
    add(K::res, "rho_2^+", {{1, "phi_3"}});
    add(K::res, "rho_2^-", {{1, "phi_3"}});
    add(K::res_fuse, "rho_0^+", {{1, "rho_2^+"}});
    add(K::res_fuse, "rho_1", {{2, "rho_2^+"}});
    add(K::res_fuse, "rho_2^+", {{1, "rho_0^+"}, {2, "rho_2^+"}, {1, "rho_1"}});
    add(K::ind_fuse, "phi_0", {{1, "phi_3"}});
    add(K::ind_fuse, "phi_1", {{1, "phi_3"}});
    add(K::ind_fuse, "phi_3", {{1, "phi_0"}, {2, "phi_3"}, {2, "phi_1"}});
  }
  return f;
}

std::string describe(const Fixture& fx) {
  static const char* names[] = {"res", "ind", "V*res", "V*ind"};
  std::string s = std::string(names[static_cast<int>(fx.kind)]) + "(" + fx.lhs + ") =";
  for (const auto& t : fx.rhs) s += " " + std::to_string(t.c) + " " + t.label;
  return s;
}

bool holds(const FusionData& d, const Fixture& fx) {
  const auto& p = d.pair;
  auto sum = [&](auto&& term_of) {
    ClassFunction acc = term_of(fx.rhs[0].label);
    acc = static_cast<long>(fx.rhs[0].c) * acc;
    for (std::size_t i = 1; i < fx.rhs.size(); ++i) acc = acc + static_cast<long>(fx.rhs[i].c) * term_of(fx.rhs[i].label);
    return acc;
  };
  switch (fx.kind) {
  case Kind::res:
    return restrict(p, d.tg[fx.lhs]) == sum([&](const std::string& l) { return d.tn[l]; });
  case Kind::ind:
    return induce(p, d.tn[fx.lhs]) == sum([&](const std::string& l) { return d.tg[l]; });
  case Kind::res_fuse:
    return restrict(p, d.V) * restrict(p, d.tg[fx.lhs]) ==
           sum([&](const std::string& l) { return restrict(p, d.tg[l]); });
  case Kind::ind_fuse:
    return d.V * induce(p, d.tn[fx.lhs]) == sum([&](const std::string& l) { return induce(p, d.tn[l]); });
  }
  return false;
}

std::pair<std::string, std::string> expected_types(const std::string& name, int n) {
  if (name == "A2n-1^2") return {affine_label('A', 2 * n - 1, 2), affine_label('B', n, 1)};
  if (name == "Dn+1^2") return {affine_label('D', n + 1, 2), affine_label('C', n, 1)};
  if (name == "A2n^2") return {affine_label('A', 2 * n, 2), affine_label('C', n, 1)};
  if (name == "E6^2") return {"E_6^(2)", "F_4^(1)"};
  if (name == "D4^3") return {"D_4^(3)", "G_2^(1)"};
  if (name == "A2^2") return {"A_2^(2)", "A_1^(1)"};
  return {"", ""};
}

std::vector<SeriesFixture> series_for_pair(const std::string& name) {
  const auto R = Side::restriction, I = Side::induction;
  using P = std::pair<IntPolynomial, IntPolynomial>;
  std::vector<SeriesFixture> f;
  if (name == "S4A4") {
    const IntPolynomial den{1, -2, -3};
    f.push_back({R, 0, {1, 0, 1, 2, 7, 20, 61, 182}, P{{1, -2, -2}, den}, "m_res^0 = (1-2t-2t^2)/(1-2t-3t^2)"});
    f.push_back({I, 0, {1, 0, 1, 2, 7, 20, 61, 182}, P{{1, -2, -2}, den}, "m_ind^0 = m_res^0"});
    f.push_back({R, 2, {0, 1, 2, 7, 20, 61, 182, 547}, P{{0, 1}, den}, "m_res^2 = t/(1-2t-3t^2)"});
    f.push_back({I, 2, {0, 1, 2, 7, 20, 61, 182, 547}, P{{0, 1}, den}, "m_ind^3 = m_res^2"});
    f.push_back({R, 1, {0, 0, 2, 4, 14, 40, 122, 364}, P{{0, 0, 2}, den}, "m_res^1 = 2t^2/(1-2t-3t^2)"});
    f.push_back({I, 1, {0, 0, 1, 2, 7, 20, 61, 182}, P{{0, 0, 1}, den}, "m_res^1 = 2 m_ind^1"});
  } else if (name == "E6^2") {
    const IntPolynomial den{1, 0, -5, 0, 4};
    const std::vector<long> m0{1, 0, 1, 0, 2, 0, 6, 0, 22, 0, 86};
    f.push_back({R, 0, m0, P{{1, 0, -4, 0, 1}, den}, "m^0 = (1-4t^2+t^4)/(1-5t^2+4t^4)"});
    f.push_back({I, 0, m0, P{{1, 0, -4, 0, 1}, den}, "m_ind^0 = m_res^0"});
    const std::vector<long> m1{0, 1, 0, 2, 0, 6, 0, 22, 0, 86};
    const std::vector<long> m2{0, 0, 1, 0, 4, 0, 16, 0, 64, 0, 256};
    f.push_back({R, 1, m1, std::nullopt, "m_res^1 = t+2t^3+6t^5+22t^7+86t^9"});
    f.push_back({I, 1, m1, std::nullopt, "m_ind^1 = m_res^1"});
    f.push_back({R, 2, m2, std::nullopt, "m_res^2 = t^2+4t^4+16t^6+64t^8+256t^10"});
    f.push_back({I, 2, m2, std::nullopt, "m_ind^2 = m_res^2"});
    f.push_back({R, 3, {0, 0, 0, 2, 0, 10, 0, 42, 0, 170}, std::nullopt, "m_res^3 = 2t^3+10t^5+42t^7+170t^9"});
    f.push_back({I, 3, {0, 0, 0, 1, 0, 5, 0, 21, 0, 85}, std::nullopt, "m_res^3 = 2 m_ind^1'"});
    f.push_back({R, 4, {0, 0, 0, 0, 2, 0, 10, 0, 42, 0, 170}, std::nullopt, "m_res^4 = 2t^4+10t^6+42t^8+170t^10"});
    f.push_back({I, 4, {0, 0, 0, 0, 1, 0, 5, 0, 21, 0, 85}, std::nullopt, "m_res^4 = 2 m_ind^0'"});
  } else if (name == "D4^3") {
    const std::vector<long> m0{1, 0, 1, 0, 4, 0, 16, 0, 64, 0, 256};
    f.push_back({R, 0, m0, P{{1, 0, -3}, {1, 0, -4}}, "m^0 = (1-3t^2)/(1-4t^2)"});
    f.push_back({I, 0, m0, P{{1, 0, -3}, {1, 0, -4}}, "m_ind^0 = m_res^0"});
    const std::vector<long> m1{0, 1, 0, 4, 0, 16, 0, 64, 0, 256};
    f.push_back({R, 1, m1, std::nullopt, "m_res^1 = t+4t^3+16t^5+64t^7+256t^9"});
    f.push_back({I, 1, m1, std::nullopt, "m_ind^1 = m_res^1"});
    f.push_back({R, 2, {0, 0, 3, 0, 12, 0, 48, 0, 192}, std::nullopt, "m_res^2 = 3t^2+12t^4+48t^6+192t^8"});
    f.push_back({I, 2, {0, 0, 1, 0, 4, 0, 16, 0, 64}, std::nullopt, "m_res^2 = 3 m_ind^2"});
  } else if (name == "A2^2") {
    const std::vector<long> m0{1, 0, 4, 0, 16, 0, 64, 0, 256, 0, 1024};
    f.push_back({R, 0, m0, P{{1}, {1, 0, -4}}, "m^0 = 1/(1-4t^2)"});
    f.push_back({I, 0, m0, P{{1}, {1, 0, -4}}, "m_ind^0 = m_res^0"});
    f.push_back({I, 1, {0, 4, 0, 16, 0, 64, 0, 256, 0, 1024}, std::nullopt, "m_ind^1 = 4t+16t^3+64t^5+256t^7+1024t^9"});
    f.push_back({R, 1, {0, 2, 0, 8, 0, 32, 0, 128, 0, 512}, std::nullopt, "2 m_res^1 = m_ind^1"});
  }
  return f;
}

std::string describe(const SeriesFixture& fx) {
  return std::string(side_name(fx.side)) + " vertex " + std::to_string(fx.vertex) + ": " + fx.text;
}

bool holds(const FusionData& d, const SeriesFixture& fx, std::string* why) {
  std::vector<Integer> want(fx.coefficients.begin(), fx.coefficients.end());
  const auto got = series_recursion(d, fx.side, fx.vertex, want.size() - 1);
  if (got != want) {
    if (why) *why = "coefficients " + integer_list(got);
    return false;
  }
  if (fx.closed_form) {
    const auto s = series_cramer(d, fx.side, fx.vertex);
    if (s.numerator() != fx.closed_form->first || s.denominator() != fx.closed_form->second) {
      if (why) *why = "closed form " + s.to_string();
      return false;
    }
  }
  return true;
}

} // namespace msc::fixtures
