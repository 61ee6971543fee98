#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msc/polynomial.hpp"

namespace msc {

/// Affine generalized Cartan matrix in Kac's convention: for a double or
/// triple bond the row of the short root carries the -2 or -3.
struct AffineType {
  std::string label; // e.g. "A_5^(2)", "F_4^(1)"
  IntMatrix cartan;  // node 0 first
  std::vector<long long> marks;
};

/// All catalogued affine types with the given number of nodes.
std::vector<AffineType> affine_catalog(std::size_t nodes);

struct Identification {
  std::string label;
  std::vector<std::size_t> perm; // perm[i] = catalog node matched to input node i
};

/// Match a Cartan matrix against the catalog up to a simultaneous permutation.
std::optional<Identification> identify(const IntMatrix& cartan);

/// "A_5^(2)" -> "A₅⁽²⁾".
std::string unicode_label(const std::string& ascii);
/// Label for X_rank^(twist), braces around multi-digit ranks.
std::string affine_label(char letter, int rank, int twist);

} // namespace msc
