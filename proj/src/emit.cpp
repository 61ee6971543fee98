#include "msc/emit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "msc/dynkin.hpp"
#include "msc/errors.hpp"
#include "msc/poincare.hpp"

namespace msc {

using nlohmann::json;

namespace {

const std::map<std::string, std::string>& greek() {
  static const std::map<std::string, std::string> m{
      {"alpha", "α"}, {"chi", "χ"}, {"delta", "δ"}, {"omega", "ω"}, {"phi", "φ"},
      {"psi", "ψ"},   {"rho", "ρ"}, {"tau", "τ"},   {"theta", "θ"}, {"xi", "ξ"}};
  return m;
}

// "_12" -> "_{12}" so multi-digit indices stay together.
std::string brace_indices(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += s[i];
    if (s[i] == '_' || s[i] == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j - i - 1 >= 2) {
        out += "{" + s.substr(i + 1, j - i - 1) + "}";
        i = j - 1;
      }
    }
  }
  return out;
}

std::size_t utf8_len(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c >> 5) == 0x6) return 2;
  if ((c >> 4) == 0xe) return 3;
  return 4;
}

std::string poly_text(const IntPolynomial& p, bool unicode) {
  std::string s = p.to_string();
  if (!unicode) return s;
  std::string out;
  for (char c : s) out += c == '-' ? std::string("−") : std::string(1, c);
  return unicode_label(brace_indices(out));
}

std::string series_text(const RationalSeries& r, bool unicode) {
  std::string s = r.to_string();
  if (!unicode) return s;
  std::string out;
  for (char c : s) out += c == '-' ? std::string("−") : std::string(1, c);
  return unicode_label(brace_indices(out));
}

// Sum of roots of unity in the power basis, e.g. "z_8 - z_8^3".
std::string value_text(const Cyclotomic& x, bool unicode) {
  if (x.is_rational()) {
    std::string s = rational_to_string(x.to_rational());
    if (unicode && s[0] == '-') s = "−" + s.substr(1);
    return s;
  }
  const std::string n = std::to_string(x.conductor());
  std::string out;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const Rational& c = x.coeffs()[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (k == 0 || a != 1) out += a.get_str();
    if (k >= 1) out += "z_" + n;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  if (!unicode) return out;
  std::string u;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == '-') u += "−";
    else if (out[i] == 'z') u += "ζ";
    else u += out[i];
  }
  return unicode_label(brace_indices(u));
}

json big(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json big_list(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

std::string list_text(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s;
}

template <class T>
std::string list_text(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

std::string label(const std::string& s, bool unicode) { return unicode ? glyphs(s) : s; }
std::string type_label(const std::string& s, bool unicode) {
  return unicode && s != "unrecognized" ? unicode_label(s) : s;
}

// Display width in code points, ignoring combining marks.
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    const std::size_t l = utf8_len(c);
    const bool combining = l == 2 && (c == 0xcc || (c == 0xcd && static_cast<unsigned char>(s[i + 1]) < 0xb0));
    if (!combining) ++w;
    i += l;
  }
  return w;
}

std::string pad(const std::string& s, std::size_t w, bool left = false) {
  const std::size_t have = width(s);
  if (have >= w) return s;
  std::string fill(w - have, ' ');
  return left ? s + fill : fill + s;
}

void print_matrix(std::ostream& os, const IntMatrix& m, const std::string& indent) {
  std::size_t w = 1;
  for (const auto& r : m)
    for (auto v : r) w = std::max(w, std::to_string(v).size());
  for (const auto& r : m) {
    os << indent;
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << pad(std::to_string(r[j]), w);
    os << "\n";
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

json side_json(const FusionData& d, Side s) {
  const auto g = graph(d, s);
  json edges = json::array();
  for (const auto& e : g.edges) {
    json je{{"i", e.i}, {"j", e.j}, {"multiplicity", e.multiplicity}};
    je["arrow_to"] = e.arrow_to ? json(*e.arrow_to) : json(nullptr);
    edges.push_back(je);
  }
  return {{"labels", g.labels}, {"degrees", g.degrees}, {"dynkin_type", g.dynkin_type},
          {"connected", g.connected}, {"edges", edges}};
}

} // namespace

std::string glyphs(const std::string& ascii) {
  for (const auto& [wrap, mark] : {std::pair<std::string, std::string>{"hat(", "̂"}, {"check(", "̌"}}) {
    if (ascii.rfind(wrap, 0) == 0 && ascii.size() > wrap.size() && ascii.back() == ')') {
      std::string inner = glyphs(ascii.substr(wrap.size(), ascii.size() - wrap.size() - 1));
      const std::size_t l = inner.empty() ? 0 : utf8_len(static_cast<unsigned char>(inner[0]));
      return inner.substr(0, l) + mark + inner.substr(l);
    }
  }
  std::size_t j = 0;
  while (j < ascii.size() && std::isalpha(static_cast<unsigned char>(ascii[j]))) ++j;
  std::string head = ascii.substr(0, j);
  auto it = greek().find(head);
  if (it != greek().end()) head = it->second;
  return head + unicode_label(brace_indices(ascii.substr(j)));
}

std::string emit_group(const FiniteGroup& g, const EmitOptions& o) {
  if (o.format == Format::json) return g.to_json().dump(2) + "\n";
  std::ostringstream os;
  os << g.name() << ": order " << g.order() << ", " << g.num_classes() << " classes\n";
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    const int r = g.class_rep(c);
    os << "  class " << c << ": size " << g.class_size(c) << ", order " << g.element_order(r) << ", rep "
       << element_to_string(g.element(r)) << "\n";
  }
  return os.str();
}

std::string emit_chartable(const CharacterTable& t, const EmitOptions& o) {
  const auto& g = *t.group;
  if (o.format == Format::json) {
    json classes = json::array();
    for (std::size_t c = 0; c < g.num_classes(); ++c)
      classes.push_back({{"rep", element_to_json(g.element(g.class_rep(c)))}, {"size", g.class_size(c)}});
    json values = json::array();
    for (const auto& chi : t.irreducibles) {
      json row = json::array();
      for (const auto& v : chi.values) row.push_back(v.to_string());
      values.push_back(row);
    }
    json j{{"group", g.name()}, {"labels", t.labels}, {"classes", classes}, {"values", values}};
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{g.name()}, sizes{"size"};
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    head.push_back("c" + std::to_string(c));
    sizes.push_back(std::to_string(g.class_size(c)));
  }
  cells.push_back(head);
  cells.push_back(sizes);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{label(t.labels[i], o.unicode)};
    for (const auto& v : t.irreducibles[i].values) row.push_back(value_text(v, o.unicode));
    cells.push_back(row);
  }
  std::vector<std::size_t> w(head.size(), 0);
  for (const auto& r : cells)
    for (std::size_t j = 0; j < r.size(); ++j) w[j] = std::max(w[j], width(r[j]));
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j)
      os << (j ? "  " : "") << (j ? pad(cells[i][j], w[j]) : pad(cells[i][j], w[j], true));
    os << "\n";
    if (i == 1) os << std::string(std::accumulate(w.begin(), w.end(), 2 * (w.size() - 1)), '-') << "\n";
  }
  os << "reps:\n";
  for (std::size_t c = 0; c < g.num_classes(); ++c)
    os << "  c" << c << " = " << element_to_string(g.element(g.class_rep(c))) << "\n";
  return os.str();
}

std::string emit_pair(const FusionData& d, const EmitOptions& o, Side dot_side) {
  const auto& p = d.pair;
  const std::string subject = pair_takes_n(p.name) ? p.name + " n=" + std::to_string(p.n) : p.name;
  if (o.format == Format::dot) {
    const auto g = graph(d, dot_side);
    std::ostringstream os;
    os << "digraph \"" << dot_escape(subject + " " + side_name(dot_side)) << "\" {\n";
    os << "  label=\"" << dot_escape(type_label(g.dynkin_type, o.unicode)) << "\";\n";
    for (std::size_t i = 0; i < g.labels.size(); ++i)
      os << "  " << i << " [label=\"" << dot_escape(label(g.labels[i], o.unicode)) << " (" << g.degrees[i] << ")\"];\n";
    for (const auto& e : g.edges) {
      std::size_t from = e.i, to = e.j;
      if (e.arrow_to && *e.arrow_to == e.i) std::swap(from, to);
      os << "  " << from << " -> " << to << " [multiplicity=" << e.multiplicity;
      if (!e.arrow_to) os << ", dir=none";
      if (e.multiplicity > 1) os << ", label=\"" << e.multiplicity << "\"";
      os << "];\n";
    }
    os << "}\n";
    return os.str();
  }
  if (o.format == Format::json) {
    json j{{"pair", p.name},
           {"n", pair_takes_n(p.name) ? json(p.n) : json(nullptr)},
           {"G", p.G->name()},
           {"N", p.N->name()},
           {"index", p.index},
           {"V", d.v_label},
           {"A", d.A},
           {"B", d.B},
           {"cartan_A", d.cartanA},
           {"cartan_B", d.cartanB},
           {"dynkin_type", {{"restriction", graph(d, Side::restriction).dynkin_type},
                            {"induction", graph(d, Side::induction).dynkin_type}}},
           {"restriction", side_json(d, Side::restriction)},
           {"induction", side_json(d, Side::induction)}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << subject << ": N = " << p.N->name() << " in G = " << p.G->name() << ", index " << p.index
     << ", V = " << label(d.v_label, o.unicode) << "\n";
  for (Side s : {Side::restriction, Side::induction}) {
    const auto g = graph(d, s);
    os << side_name(s) << " (" << type_label(g.dynkin_type, o.unicode) << ")\n";
    os << "  basis:";
    for (std::size_t i = 0; i < g.labels.size(); ++i)
      os << (i ? ", " : " ") << label(g.labels[i], o.unicode) << " (" << g.degrees[i] << ")";
    os << "\n  " << (s == Side::restriction ? "A" : "B") << ":\n";
    print_matrix(os, s == Side::restriction ? d.A : d.B, "    ");
    os << "  cartan:\n";
    print_matrix(os, s == Side::restriction ? d.cartanA : d.cartanB, "    ");
  }
  return os.str();
}

PoincareResult poincare(const FusionData& d, const std::string& subject, Side side, std::size_t vertex,
                        std::size_t terms, bool closed_form) {
  const std::size_t nodes = d.A.size();
  if (vertex >= nodes)
    throw DomainError("vertex " + std::to_string(vertex) + " out of range (" + std::to_string(nodes) + " nodes)");
  if (terms == 0) throw DomainError("terms must be positive");
  PoincareResult r;
  r.subject = subject;
  r.side = side;
  r.vertex = vertex;
  r.vertex_label = (side == Side::restriction ? d.res.names : d.ind.names)[vertex];
  r.series = series_cramer(d, side, vertex);
  r.coefficients = series_recursion(d, side, vertex, terms - 1);
  if (r.series.coefficients(terms - 1) != r.coefficients)
    throw VerificationError("closed form and recursion disagree for " + subject);
  r.closed_form = closed_form;
  return r;
}

std::string emit_poincare(const PoincareResult& p, const EmitOptions& o) {
  if (o.format == Format::json) {
    json j{{"subject", p.subject},
           {"side", side_name(p.side)},
           {"vertex", p.vertex},
           {"vertex_label", p.vertex_label},
           {"numerator", big_list(p.series.numerator().coeffs())},
           {"denominator", big_list(p.series.denominator().coeffs())},
           {"coefficients", big_list(p.coefficients)}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << p.subject << " " << side_name(p.side) << " vertex " << p.vertex << " (" << label(p.vertex_label, o.unicode)
     << ")\n";
  if (p.closed_form) os << "series: " << series_text(p.series, o.unicode) << "\n";
  os << "coefficients: " << list_text(p.coefficients) << "\n";
  return os.str();
}

std::string emit_chebyshev(const ChebyshevPoly& p, const EmitOptions& o) {
  const std::string name = p.kind == ChebyshevKind::first ? "T" : "U";
  if (o.format == Format::json) {
    json j{{"kind", name}, {"n", p.n}, {"coefficients", big_list(p.coeffs.coeffs())}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  const std::string head = name + "_" + std::to_string(p.n) + "(t)";
  os << (o.unicode ? unicode_label(brace_indices(head)) : head) << " = " << poly_text(p.coeffs, o.unicode) << "\n";
  os << "coefficients: " << list_text(p.coeffs.coeffs()) << "\n";
  return os.str();
}

std::string emit_exponents(const ExponentData& e, const EmitOptions& o) {
  if (o.format == Format::json) {
    json j{{"type", e.type_label}, {"exponents", e.exponents}, {"coxeter", e.coxeter}};
    if (!e.finite_label.empty())
      j["finite"] = {{"type", e.finite_label}, {"exponents", e.finite_exponents}, {"coxeter", e.finite_coxeter}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << type_label(e.type_label, o.unicode) << ": exponents " << list_text(e.exponents) << "; h = " << e.coxeter
     << "\n";
  if (!e.finite_label.empty())
    os << type_label(e.finite_label, o.unicode) << ": exponents " << list_text(e.finite_exponents)
       << "; h = " << e.finite_coxeter << "\n";
  return os.str();
}

std::string emit_verify(const std::vector<VerifyReport>& reports, const EmitOptions& o) {
  std::size_t checks = 0, failed = 0;
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      ++checks;
      failed += !c.passed;
    }
  if (o.format == Format::json) {
    json rs = json::array();
    for (const auto& r : reports) {
      json cs = json::array();
      for (const auto& c : r.checks) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      rs.push_back({{"subject", r.subject}, {"passed", r.passed()}, {"checks", cs}});
    }
    json j{{"reports", rs}, {"checks", checks}, {"failed", failed}, {"passed", failed == 0}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.subject << "\n";
    for (const auto& c : r.checks)
      os << "  " << (c.passed ? "PASS" : "FAIL") << " " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  os << checks << " checks, " << failed << " failed\n";
  return os.str();
}

} // namespace msc
