#pragma once

// Restriction/induction identities, fusion rules, diagram types and printed
// series of the distinguished pairs, transcribed by label.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msc/mckay.hpp"
#include "msc/polynomial.hpp"

namespace msc::fixtures {

enum class Kind {
  res,      // Res(G-label) = sum c N-label
  ind,      // Ind(N-label) = sum c G-label
  res_fuse, // Res V * Res(G-label) = sum c Res(G-label)
  ind_fuse, // V * Ind(N-label) = sum c Ind(N-label)
};

struct Term {
  long long c;
  std::string label;
};

struct Fixture {
  Kind kind;
  std::string lhs;
  std::vector<Term> rhs;
};

std::vector<Fixture> for_pair(const std::string& name, int n);
std::string describe(const Fixture& fx);
/// Exact class-function equality of both sides.
bool holds(const FusionData& d, const Fixture& fx);

/// Diagram types named in the section headings: {restriction side, induction side}.
/// Empty strings for pairs without one (S4A4).
std::pair<std::string, std::string> expected_types(const std::string& name, int n);

struct SeriesFixture {
  Side side;
  std::size_t vertex;
  std::vector<long> coefficients; // from t^0
  std::optional<std::pair<IntPolynomial, IntPolynomial>> closed_form;
  std::string text; // as printed
};
/// The worked examples for S4A4, E6^2, D4^3 and A2^2; empty for other pairs.
std::vector<SeriesFixture> series_for_pair(const std::string& name);
std::string describe(const SeriesFixture& fx);
/// Recursion coefficients and, when given, the reduced closed form.
bool holds(const FusionData& d, const SeriesFixture& fx, std::string* why = nullptr);

} // namespace msc::fixtures
