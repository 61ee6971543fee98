#pragma once

#include <string>
#include <vector>

#include "msc/groups.hpp"

namespace msc {

/// Values indexed by conjugacy class, in the group's class order.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  /// Value at the identity class.
  const Cyclotomic& degree() const { return values.at(0); }
  ClassFunction conj() const;
  bool is_real() const;

  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(long s, const ClassFunction& a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group == b.group && a.values == b.values;
  }
};

ClassFunction trivial_character(const GroupPtr& g);
/// Trace of the defining matrix representation.
ClassFunction natural_character(const GroupPtr& g);

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;
  std::vector<std::string> labels;

  std::size_t size() const { return irreducibles.size(); }
  /// Row index of a label; throws DomainError if absent.
  std::size_t index(const std::string& label) const;
  const ClassFunction& operator[](const std::string& label) const { return irreducibles[index(label)]; }
};

/// (1/|G|) sum over classes of size * a * conj(b).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

/// Closed-form table for the named families; DomainError for generic groups.
CharacterTable table(const GroupPtr& g);
/// Numeric table from class-sum eigenvectors, snapped to exact values and re-verified.
CharacterTable table_numeric(const GroupPtr& g);

/// Multiplicities of each irreducible; VerificationError unless all are non-negative integers.
std::vector<long long> decompose(const CharacterTable& t, const ClassFunction& f);
ClassFunction compose(const CharacterTable& t, const std::vector<long long>& mult);
/// e.g. "tau_0 + 2 tau_2".
std::string decomposition_string(const CharacterTable& t, const std::vector<long long>& mult);

ClassFunction restrict(const NormalPair& p, const ClassFunction& chi);
ClassFunction induce(const NormalPair& p, const ClassFunction& phi);

/// Row orthogonality, sum of squared degrees, and integrality of entries.
bool table_is_valid(const CharacterTable& t, std::string* why = nullptr);
bool same_up_to_permutation(const CharacterTable& a, const CharacterTable& b);

/// Row k, column i: <rho_i, Ind phi_k>_G, checked against <Res rho_i, phi_k>_N.
struct FrobeniusResult {
  std::vector<std::vector<long long>> matrix;
  bool passed = true;
  std::string detail;
};
FrobeniusResult frobenius_check(const NormalPair& p, const CharacterTable& tg, const CharacterTable& tn);

} // namespace msc
