#include "msc.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>

#include "msc/emit.hpp"
#include "msc/errors.hpp"

struct msc_pair {
  msc::FusionData data;
  std::string subject;
};

namespace {

thread_local std::string last_error;

msc_status fail(msc_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs f, mapping library exceptions onto status codes.
msc_status guard(const std::function<msc_status()>& f) {
  try {
    last_error.clear();
    return f();
  } catch (const msc::DomainError& e) {
    return fail(MSC_ERR_DOMAIN, e.what());
  } catch (const msc::VerificationError& e) {
    return fail(MSC_ERR_VERIFICATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MSC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MSC_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::optional<int> param(int n) { return n == MSC_NO_PARAM ? std::nullopt : std::optional<int>(n); }

bool options(msc_format fmt, int unicode, msc::EmitOptions& o) {
  switch (fmt) {
  case MSC_FORMAT_TEXT: o.format = msc::Format::text; break;
  case MSC_FORMAT_JSON: o.format = msc::Format::json; break;
  case MSC_FORMAT_DOT: o.format = msc::Format::dot; break;
  default: return false;
  }
  o.unicode = unicode != 0;
  return true;
}

bool side(msc_side s, msc::Side& out) {
  if (s == MSC_SIDE_RESTRICTION) out = msc::Side::restriction;
  else if (s == MSC_SIDE_INDUCTION) out = msc::Side::induction;
  else return false;
  return true;
}

// Shared argument checks for the rendering calls; DOT is only meaningful for pairs.
msc_status prepare(char** out, msc_format fmt, int unicode, msc::EmitOptions& o, bool dot_ok = false) {
  if (!out) return fail(MSC_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  if (!options(fmt, unicode, o)) return fail(MSC_ERR_INVALID_ARGUMENT, "unknown format");
  if (o.format == msc::Format::dot && !dot_ok) return fail(MSC_ERR_INVALID_ARGUMENT, "DOT output is only available for pairs");
  return MSC_OK;
}

msc_status report(const std::vector<msc::VerifyReport>& rs, const msc::EmitOptions& o, char** out) {
  *out = dup(msc::emit_verify(rs, o));
  std::size_t failed = 0;
  for (const auto& r : rs) failed += !r.passed();
  if (failed) return fail(MSC_ERR_VERIFICATION, std::to_string(failed) + " of " + std::to_string(rs.size()) + " reports failed");
  return MSC_OK;
}

} // namespace

extern "C" {

const char* msc_version(void) { return "1.0.0"; }

const char* msc_last_error(void) { return last_error.c_str(); }

void msc_string_free(char* s) { std::free(s); }

msc_status msc_pair_names(char** out) {
  if (!out) return fail(MSC_ERR_INVALID_ARGUMENT, "null output pointer");
  return guard([&] {
    std::string s;
    for (const auto& n : msc::pair_names()) s += n + "\n";
    *out = dup(s);
    return MSC_OK;
  });
}

msc_status msc_pair_open(const char* name, int n, msc_pair** out) {
  if (!name || !out) return fail(MSC_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    const auto p = msc::normal_pair(name, param(n));
    auto* h = new msc_pair{msc::fusion_matrices(p), ""};
    h->subject = msc::pair_takes_n(p.name) ? p.name + " n=" + std::to_string(p.n) : p.name;
    *out = h;
    return MSC_OK;
  });
}

void msc_pair_free(msc_pair* p) { delete p; }

msc_status msc_pair_render(const msc_pair* p, msc_format fmt, int unicode, msc_side dot_side, char** out) {
  msc::EmitOptions o;
  if (auto s = prepare(out, fmt, unicode, o, true)) return s;
  msc::Side sd;
  if (!p || !side(dot_side, sd)) return fail(MSC_ERR_INVALID_ARGUMENT, "null pair or bad side");
  return guard([&] {
    *out = dup(msc::emit_pair(p->data, o, sd));
    return MSC_OK;
  });
}

msc_status msc_pair_dynkin_type(const msc_pair* p, msc_side s, char** out) {
  msc::Side sd;
  if (!p || !out || !side(s, sd)) return fail(MSC_ERR_INVALID_ARGUMENT, "null argument or bad side");
  return guard([&] {
    *out = dup(msc::graph(p->data, sd).dynkin_type);
    return MSC_OK;
  });
}

msc_status msc_pair_poincare(const msc_pair* p, msc_side s, size_t vertex, size_t terms, int closed_form,
                             msc_format fmt, int unicode, char** out) {
  msc::EmitOptions o;
  if (auto st = prepare(out, fmt, unicode, o)) return st;
  msc::Side sd;
  if (!p || !side(s, sd)) return fail(MSC_ERR_INVALID_ARGUMENT, "null pair or bad side");
  return guard([&] {
    *out = dup(msc::emit_poincare(msc::poincare(p->data, p->subject, sd, vertex, terms, closed_form != 0), o));
    return MSC_OK;
  });
}

msc_status msc_group(const char* family, int n, msc_format fmt, int unicode, char** out) {
  msc::EmitOptions o;
  if (auto s = prepare(out, fmt, unicode, o)) return s;
  if (!family) return fail(MSC_ERR_INVALID_ARGUMENT, "null family");
  return guard([&] {
    *out = dup(msc::emit_group(*msc::family(family, param(n)), o));
    return MSC_OK;
  });
}

msc_status msc_chartable(const char* family, int n, int numeric, msc_format fmt, int unicode, char** out) {
  msc::EmitOptions o;
  if (auto s = prepare(out, fmt, unicode, o)) return s;
  if (!family) return fail(MSC_ERR_INVALID_ARGUMENT, "null family");
  return guard([&] {
    const auto g = msc::family(family, param(n));
    *out = dup(msc::emit_chartable(numeric ? msc::table_numeric(g) : msc::table(g), o));
    return MSC_OK;
  });
}

msc_status msc_chebyshev(char kind, unsigned n, msc_format fmt, int unicode, char** out) {
  msc::EmitOptions o;
  if (auto s = prepare(out, fmt, unicode, o)) return s;
  if (kind != 'T' && kind != 'U') return fail(MSC_ERR_DOMAIN, std::string("Chebyshev kind must be T or U, got ") + kind);
  return guard([&] {
    const auto k = kind == 'T' ? msc::ChebyshevKind::first : msc::ChebyshevKind::second;
    *out = dup(msc::emit_chebyshev(msc::chebyshev(k, n), o));
    return MSC_OK;
  });
}

msc_status msc_exponents(const char* label, msc_format fmt, int unicode, char** out) {
  msc::EmitOptions o;
  if (auto s = prepare(out, fmt, unicode, o)) return s;
  if (!label) return fail(MSC_ERR_INVALID_ARGUMENT, "null label");
  return guard([&] {
    *out = dup(msc::emit_exponents(msc::exponents_catalog(label), o));
    return MSC_OK;
  });
}

msc_status msc_verify_pair(const char* name, int n, msc_format fmt, int unicode, char** out) {
  msc::EmitOptions o;
  if (auto s = prepare(out, fmt, unicode, o)) return s;
  if (!name) return fail(MSC_ERR_INVALID_ARGUMENT, "null name");
  return guard([&] {
    // a family pair without n runs the default range
    if (n == MSC_NO_PARAM && msc::pair_takes_n(name)) {
      std::vector<msc::VerifyReport> rs;
      for (int k = msc::pair_min_n(name); k <= 8; ++k) rs.push_back(msc::verify_pair(name, k));
      return report(rs, o, out);
    }
    return report({msc::verify_pair(name, param(n))}, o, out);
  });
}

msc_status msc_verify_all(int max_n, msc_format fmt, int unicode, char** out) {
  msc::EmitOptions o;
  if (auto s = prepare(out, fmt, unicode, o)) return s;
  return guard([&] { return report(msc::verify_all(max_n), o, out); });
}

} // extern "C"
