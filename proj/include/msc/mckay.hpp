#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msc/characters.hpp"
#include "msc/dynkin.hpp"
#include "msc/polynomial.hpp"

namespace msc {

/// Pared-down restrictions of the G-irreducibles; member 0 restricts the trivial character.
struct RestrictionBasis {
  std::vector<ClassFunction> members;       // on N
  std::vector<std::vector<std::size_t>> origin; // G-irreducible indices
  std::vector<std::string> names;
};

/// Induced N-irreducibles, ordered so that member i = f(restriction member i).
struct InductionBasis {
  std::vector<ClassFunction> members;       // on G
  std::vector<std::vector<std::size_t>> origin; // N-irreducible indices
  std::vector<std::string> names;
  std::vector<std::size_t> f_source;        // N-irreducible chosen by the f-bijection
};

struct FusionData {
  NormalPair pair;
  CharacterTable tg, tn;
  ClassFunction V;
  std::string v_label;
  RestrictionBasis res;
  InductionBasis ind;
  IntMatrix A, B, cartanA, cartanB;

  std::vector<long long> res_degrees() const;
  std::vector<long long> ind_degrees() const;
};

RestrictionBasis restriction_basis(const NormalPair& p, const CharacterTable& tg, const CharacterTable& tn);
InductionBasis induction_basis(const NormalPair& p, const CharacterTable& tg, const CharacterTable& tn,
                               const RestrictionBasis& res);

/// Default module: rho_2^+ for S4A4, the defining character otherwise.
ClassFunction default_module(const NormalPair& p, const CharacterTable& tg, std::string* label = nullptr);

/// Tables come from table() when available, else table_numeric().
FusionData fusion_matrices(const NormalPair& p, std::optional<ClassFunction> V = std::nullopt);

enum class Side { restriction, induction };
const char* side_name(Side s);

struct GraphEdge {
  std::size_t i, j; // i <= j
  long long multiplicity;
  std::optional<std::size_t> arrow_to;
};

struct RepresentationGraph {
  std::vector<std::string> labels;
  std::vector<long long> degrees;
  std::vector<GraphEdge> edges;
  std::string dynkin_type; // "unrecognized" when no catalog entry matches
  bool connected = true;
};

RepresentationGraph graph(const FusionData& d, Side side);
RepresentationGraph graph(const IntMatrix& M, const std::vector<std::string>& labels,
                          const std::vector<long long>& degrees);

/// Kernels of dI - A and dI - B, d = deg V (the Cartan matrices when d = 2).
struct NullVectorReport {
  bool direct = false;     // C_A alpha_A = 0 and C_B alpha_B = 0
  bool transposed = false; // C_A^T alpha_B = 0 and C_B^T alpha_A = 0
  bool mixed = false;      // C_A alpha_B = 0 and C_B^T alpha_A = 0, read literally
  bool kernels_one_dimensional = false;
  std::vector<Rational> alpha_A, alpha_B;
  bool passed() const { return (direct || transposed) && kernels_one_dimensional; }
  std::string variant() const;
};
NullVectorReport null_vector_check(const FusionData& d);

/// For each g in Upsilon(N): v^T (dI - M) = (d - chi_V(g)) v^T with d = deg V and v the
/// restricted (resp. induced) character values at g.
struct EigenReport {
  bool passed = true;
  bool column_form = true; // whether (dI - M) v = (d - chi_V(g)) v also holds
  std::string detail;
};
EigenReport eigenvector_check(const FusionData& d);

/// Rank over Q.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& m);

} // namespace msc
