#pragma once

// Text, JSON and DOT renderings shared by the C API and the command line.

#include <optional>
#include <string>
#include <vector>

#include "msc/chebyshev.hpp"
#include "msc/characters.hpp"
#include "msc/mckay.hpp"
#include "msc/report.hpp"

namespace msc {

enum class Format { text, json, dot };

struct EmitOptions {
  Format format = Format::text;
  bool unicode = false;
};

/// "hat(delta_0^+)" -> "δ̂₀⁺"; affine labels and polynomials go through the same sub/superscript rules.
std::string glyphs(const std::string& ascii);

std::string emit_group(const FiniteGroup& g, const EmitOptions& o);
std::string emit_chartable(const CharacterTable& t, const EmitOptions& o);
/// DOT needs a side; text and JSON show both.
std::string emit_pair(const FusionData& d, const EmitOptions& o, Side dot_side = Side::restriction);

struct PoincareResult {
  std::string subject;
  Side side = Side::restriction;
  std::size_t vertex = 0;
  std::string vertex_label;
  RationalSeries series;
  std::vector<Integer> coefficients;
  bool closed_form = false; // show the fraction in text output
};
/// Recursion coefficients t^0..t^(terms-1) and the reduced Cramer fraction; VerificationError if they disagree.
PoincareResult poincare(const FusionData& d, const std::string& subject, Side side, std::size_t vertex,
                        std::size_t terms, bool closed_form);
std::string emit_poincare(const PoincareResult& p, const EmitOptions& o);

std::string emit_chebyshev(const ChebyshevPoly& p, const EmitOptions& o);
std::string emit_exponents(const ExponentData& e, const EmitOptions& o);
std::string emit_verify(const std::vector<VerifyReport>& reports, const EmitOptions& o);

} // namespace msc
