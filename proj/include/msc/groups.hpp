#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "msc/cyclotomic.hpp"

namespace msc {

/// Row-major 2x2 matrix: {a, b, c, d} = [[a, b], [c, d]].
using Matrix2 = std::array<Cyclotomic, 4>;

/// Bijection of {0..m-1}; images[i] is the image of i. Printed 1-based.
struct Permutation {
  std::vector<int> images;
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images == b.images; }
};

using GroupElement = std::variant<Matrix2, Permutation>;

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement identity_like(const GroupElement& a);
std::size_t hash_element(const GroupElement& g);
std::string element_to_string(const GroupElement& g);
nlohmann::json element_to_json(const GroupElement& g);

Matrix2 diag(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic det(const Matrix2& m);
Cyclotomic trace(const Matrix2& m);
bool is_unitary(const Matrix2& m);
/// 1-based cycle-free one-line input, e.g. {2, 3, 1, 4}.
Permutation perm_from_one_line(const std::vector<int>& one_based);

enum class Family { generic, cyclic, binary_dihedral, binary_tetrahedral, binary_octahedral, symmetric4, alternating4 };

std::string family_name(Family f);
Family parse_family(const std::string& name);

/// MSC_MAX_GROUP_ORDER if set and valid, otherwise 10000.
std::size_t max_group_order();

class FiniteGroup {
public:
  const std::string& name() const { return name_; }
  Family family() const { return family_; }
  int param() const { return param_; }

  std::size_t order() const { return elements_.size(); }
  const GroupElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  /// -1 when g is not in the group.
  int index_of(const GroupElement& g) const;

  int multiply(int a, int b) const;
  int inverse(int a) const;
  int power(int a, long k) const;
  int element_order(int a) const;
  unsigned exponent() const;

  std::size_t num_classes() const { return classes_.size(); }
  const std::vector<int>& class_members(std::size_t c) const { return classes_[c]; }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
  int class_rep(std::size_t c) const { return reps_[c]; }
  std::size_t class_of(int x) const { return class_of_[static_cast<std::size_t>(x)]; }
  /// Class of the k-th power of the representative of class c.
  std::size_t power_class(std::size_t c, long k) const;

  nlohmann::json to_json() const;

  friend std::shared_ptr<const FiniteGroup> generate(const std::vector<GroupElement>& gens);
  friend std::shared_ptr<const FiniteGroup> family(const std::string& name, std::optional<int> n);

private:
  struct Hash {
    std::size_t operator()(const GroupElement& g) const { return hash_element(g); }
  };

  void close(const std::vector<GroupElement>& gens);
  void compute_classes();
  void set_reps(const std::vector<GroupElement>& reps);

  std::string name_ = "G";
  Family family_ = Family::generic;
  int param_ = 0;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, int, Hash> lookup_;
  std::vector<std::vector<int>> right_;     // right_[s][x] = x * g_s
  std::vector<std::vector<int>> right_inv_; // inverse permutation of right_[s]
  std::vector<std::vector<int>> word_;      // x = g_{w0} g_{w1} ...
  std::vector<int> table_;                  // full product table when small
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> reps_;
  std::vector<int> class_order_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closure of gens, breadth-first from the identity in generator order.
GroupPtr generate(const std::vector<GroupElement>& gens);
/// Named family built from the explicit SU(2) or permutation generators.
GroupPtr family(const std::string& name, std::optional<int> n = std::nullopt);

/// Generators of the named families, in the order used for closure.
std::vector<GroupElement> family_generators(Family f, int n);

struct NormalPair {
  std::string name;
  int n = 0;
  GroupPtr G;
  GroupPtr N;
  std::vector<int> embed;            // N element index -> G element index
  std::vector<std::size_t> n_class_to_g_class;
  std::vector<std::size_t> upsilon_n; // G-class indices lying in N, ascending
  std::size_t index = 1;
};

/// Embeds N in G by element equality and checks normality exhaustively.
NormalPair make_pair(const std::string& name, GroupPtr G, GroupPtr N);

/// Names: A2n-1^2, Dn+1^2, A2n^2, E6^2, D4^3, A2^2, S4A4.
NormalPair normal_pair(const std::string& name, std::optional<int> n = std::nullopt);
const std::vector<std::string>& pair_names();
bool pair_takes_n(const std::string& name);
int pair_min_n(const std::string& name);

} // namespace msc
