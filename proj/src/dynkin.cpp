#include "msc/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <tuple>

namespace msc {

std::string affine_label(char letter, int rank, int twist) {
  std::string r = std::to_string(rank);
  if (r.size() > 1) r = "{" + r + "}";
  return std::string(1, letter) + "_" + r + "^(" + std::to_string(twist) + ")";
}

namespace {

IntMatrix blank(std::size_t n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
  return m;
}

void bond(IntMatrix& m, std::size_t i, std::size_t j, long long cij = -1, long long cji = -1) {
  m[i][j] = cij;
  m[j][i] = cji;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[i][j] = m[j][i];
  return t;
}

AffineType a1() { return {affine_label('A', 1, 1), {{2, -2}, {-2, 2}}, {1, 1}}; }

AffineType a_untwisted(int l) {
  IntMatrix m = blank(static_cast<std::size_t>(l) + 1);
  for (int i = 0; i <= l; ++i) bond(m, static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % (l + 1)));
  return {affine_label('A', l, 1), m, std::vector<long long>(static_cast<std::size_t>(l) + 1, 1)};
}

// 0 and 1 attached to 2, chain 2..l, l short.
AffineType b_untwisted(int l) {
  const auto L = static_cast<std::size_t>(l);
  IntMatrix m = blank(L + 1);
  bond(m, 0, 2);
  for (std::size_t i = 1; i + 1 < L; ++i) bond(m, i, i + 1);
  bond(m, L, L - 1, -2, -1);
  std::vector<long long> marks(L + 1, 2);
  marks[0] = marks[1] = 1;
  return {affine_label('B', l, 1), m, marks};
}

// 0 => 1 - ... - (l-1) <= l, 0 and l long.
AffineType c_untwisted(int l) {
  const auto L = static_cast<std::size_t>(l);
  IntMatrix m = blank(L + 1);
  bond(m, 1, 0, -2, -1);
  for (std::size_t i = 1; i + 1 < L; ++i) bond(m, i, i + 1);
  bond(m, L - 1, L, -2, -1);
  std::vector<long long> marks(L + 1, 2);
  marks[0] = marks[L] = 1;
  return {affine_label('C', l, 1), m, marks};
}

AffineType d_untwisted(int l) {
  const auto L = static_cast<std::size_t>(l);
  IntMatrix m = blank(L + 1);
  bond(m, 0, 2);
  for (std::size_t i = 1; i + 2 < L; ++i) bond(m, i, i + 1);
  bond(m, L - 2, L - 1);
  bond(m, L - 2, L);
  std::vector<long long> marks(L + 1, 2);
  marks[0] = marks[1] = marks[L - 1] = marks[L] = 1;
  return {affine_label('D', l, 1), m, marks};
}

AffineType e_untwisted(int l) {
  IntMatrix m = blank(static_cast<std::size_t>(l) + 1);
  std::vector<long long> marks;
  if (l == 6) {
    // 1-2-3-4-5 with 6 on 3 and 0 on 6
    bond(m, 1, 2), bond(m, 2, 3), bond(m, 3, 4), bond(m, 4, 5), bond(m, 3, 6), bond(m, 6, 0);
    marks = {1, 1, 2, 3, 2, 1, 2};
  } else if (l == 7) {
    // 0-1-2-3-4-5-6 with 7 on 3
    for (std::size_t i = 0; i < 6; ++i) bond(m, i, i + 1);
    bond(m, 3, 7);
    marks = {1, 2, 3, 4, 3, 2, 1, 2};
  } else {
    // 1-3-4-5-6-7-8-0 with 2 on 4
    bond(m, 1, 3), bond(m, 3, 4), bond(m, 4, 5), bond(m, 5, 6), bond(m, 6, 7), bond(m, 7, 8), bond(m, 2, 4);
    bond(m, 8, 0);
    marks = {1, 2, 3, 4, 6, 5, 4, 3, 2};
  }
  return {affine_label('E', l, 1), m, marks};
}

AffineType f_untwisted() {
  IntMatrix m = blank(5);
  bond(m, 0, 1), bond(m, 1, 2), bond(m, 3, 2, -2, -1), bond(m, 3, 4);
  return {affine_label('F', 4, 1), m, {1, 2, 3, 4, 2}};
}

AffineType g_untwisted() {
  IntMatrix m = blank(3);
  bond(m, 0, 1), bond(m, 2, 1, -3, -1);
  return {affine_label('G', 2, 1), m, {1, 2, 3}};
}

AffineType a2_twisted() { return {affine_label('A', 2, 2), {{2, -4}, {-1, 2}}, {2, 1}}; }

// A_{2l}^(2), l >= 2: 0 <= 1 - ... - (l-1) <= l
AffineType a_even_twisted(int l) {
  const auto L = static_cast<std::size_t>(l);
  IntMatrix m = blank(L + 1);
  bond(m, 0, 1, -2, -1);
  for (std::size_t i = 1; i + 1 < L; ++i) bond(m, i, i + 1);
  bond(m, L - 1, L, -2, -1);
  std::vector<long long> marks(L + 1, 2);
  marks[L] = 1;
  return {affine_label('A', 2 * l, 2), m, marks};
}

AffineType a_odd_twisted(int l) {
  AffineType b = b_untwisted(l);
  std::vector<long long> marks(static_cast<std::size_t>(l) + 1, 2);
  marks[0] = marks[1] = marks[static_cast<std::size_t>(l)] = 1;
  return {affine_label('A', 2 * l - 1, 2), transpose(b.cartan), marks};
}

AffineType d_twisted(int l) {
  AffineType c = c_untwisted(l);
  return {affine_label('D', l + 1, 2), transpose(c.cartan), std::vector<long long>(static_cast<std::size_t>(l) + 1, 1)};
}

AffineType e6_twisted() { return {affine_label('E', 6, 2), transpose(f_untwisted().cartan), {1, 2, 3, 2, 1}}; }

AffineType d4_triality() { return {affine_label('D', 4, 3), transpose(g_untwisted().cartan), {1, 2, 1}}; }

} // namespace

std::vector<AffineType> affine_catalog(std::size_t nodes) {
  std::vector<AffineType> out;
  if (nodes < 2) return out;
  const int l = static_cast<int>(nodes) - 1;
  if (l == 1) {
    out.push_back(a1());
    out.push_back(a2_twisted());
    return out;
  }
  out.push_back(a_untwisted(l));
  if (l >= 3) out.push_back(b_untwisted(l));
  out.push_back(c_untwisted(l));
  if (l >= 4) out.push_back(d_untwisted(l));
  if (l >= 6 && l <= 8) out.push_back(e_untwisted(l));
  if (l == 4) {
    out.push_back(f_untwisted());
    out.push_back(e6_twisted());
  }
  if (l == 2) {
    out.push_back(g_untwisted());
    out.push_back(d4_triality());
  }
  out.push_back(a_even_twisted(l));
  if (l >= 3) out.push_back(a_odd_twisted(l));
  out.push_back(d_twisted(l));
  return out;
}

std::optional<Identification> identify(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  auto signature = [](const IntMatrix& m, std::size_t i) {
    std::vector<long long> row, col;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != i) {
        row.push_back(m[i][j]);
        col.push_back(m[j][i]);
      }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    return std::make_tuple(m[i][i], row, col);
  };
  for (const auto& t : affine_catalog(n)) {
    std::vector<std::size_t> perm(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
      if (i == n) return true;
      const auto sig = signature(cartan, i);
      for (std::size_t c = 0; c < n; ++c) {
        if (used[c] || signature(t.cartan, c) != sig) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
          ok = cartan[i][j] == t.cartan[c][perm[j]] && cartan[j][i] == t.cartan[perm[j]][c];
        if (!ok) continue;
        perm[i] = c;
        used[c] = true;
        if (place(i + 1)) return true;
        used[c] = false;
      }
      return false;
    };
    if (place(0)) return Identification{t.label, perm};
  }
  return std::nullopt;
}

namespace {

// Sub- or superscript glyph for c, or empty when Unicode has none.
std::string script(char c, bool lower) {
  static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  if (std::isdigit(static_cast<unsigned char>(c))) return (lower ? sub : sup)[c - '0'];
  switch (c) {
  case '+': return lower ? "₊" : "⁺";
  case '-': return lower ? "₋" : "⁻";
  case '(': return lower ? "₍" : "⁽";
  case ')': return lower ? "₎" : "⁾";
  case 'n': return lower ? "ₙ" : "ⁿ";
  case 'l': return lower ? "ₗ" : "ˡ";
  case 'k': return lower ? "ₖ" : "ᵏ";
  case 'm': return lower ? "ₘ" : "ᵐ";
  case 'i': return lower ? "ᵢ" : "ⁱ";
  default: return "";
  }
}

} // namespace

std::string unicode_label(const std::string& ascii) {
  std::string out;
  std::size_t i = 0;
  while (i < ascii.size()) {
    const char c = ascii[i];
    if ((c != '_' && c != '^') || i + 1 == ascii.size()) {
      out += c;
      ++i;
      continue;
    }
    const bool lower = c == '_';
    std::size_t b = i + 1, e;
    std::string body;
    if (ascii[b] == '{' || ascii[b] == '(') {
      e = ascii.find(ascii[b] == '{' ? '}' : ')', b);
      if (e == std::string::npos) {
        out += c;
        ++i;
        continue;
      }
      body = ascii[b] == '(' ? ascii.substr(b, e - b + 1) : ascii.substr(b + 1, e - b - 1);
      ++e;
    } else {
      e = b;
      while (e < ascii.size() && std::isdigit(static_cast<unsigned char>(ascii[e]))) ++e;
      if (e == b) ++e;
      body = ascii.substr(b, e - b);
    }
    std::string glyphs;
    bool ok = !body.empty();
    for (char x : body) {
      const std::string g = script(x, lower);
      ok = ok && !g.empty();
      glyphs += g;
    }
    out += ok ? glyphs : ascii.substr(i, e - i);
    i = e;
  }
  return out;
}

} // namespace msc
