#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "f2c/budget.hpp"

namespace f2c {

class FiniteGroup;
using GroupRef = std::shared_ptr<const FiniteGroup>;

/// A finite group stored as its full multiplication table.
///
/// Element 0 is always the identity. The constructors below fix a canonical
/// element order so that file formats and reports are reproducible.
class FiniteGroup {
 public:
  /// Validates identity-at-0, associativity and inverses; throws InvalidInput.
  static GroupRef from_table(int order, std::vector<int> table,
                             std::vector<std::string> labels = {},
                             nlohmann::json provenance = nullptr);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inverse_[g]); }

  const std::vector<int>& table() const { return table_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const nlohmann::json& provenance() const { return provenance_; }

  int element_order(int a) const { return elem_order_[a]; }
  int class_size(int a) const { return class_size_[a]; }
  bool is_abelian() const;
  /// Same order and identical multiplication table.
  bool same_table(const FiniteGroup& other) const;

 private:
  FiniteGroup() = default;

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> elem_order_;
  std::vector<int> class_size_;
  std::vector<std::string> labels_;
  nlohmann::json provenance_;
};

bool same_group(const GroupRef& a, const GroupRef& b);

/// Sorted element set of a subgroup of `parent`.
struct Subgroup {
  GroupRef parent;
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator<(const Subgroup& o) const;
};

struct Homomorphism {
  GroupRef source;
  GroupRef target;
  std::vector<int> image;

  int operator()(int x) const { return image[x]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
};

Homomorphism identity_hom(const GroupRef& g);
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);
Homomorphism inverse_iso(const Homomorphism& f);
/// The image subgroup f(S).
Subgroup image_of(const Homomorphism& f, const Subgroup& s);
/// x -> g x g^-1 as an automorphism of G.
Homomorphism conjugation_hom(const GroupRef& g, int elem);

struct DoubleCosetDecomposition {
  std::vector<int> representatives;
  std::vector<std::vector<int>> members;
  std::vector<Subgroup> stabilizers;  // H ∩ g K g^-1 for each representative g
  std::vector<int> block_of;          // element -> block index
};

struct QuotientGroup {
  GroupRef group;
  std::vector<int> coset_of;  // element of G -> element of G/N
};

// ---- constructors --------------------------------------------------------

GroupRef cyclic_group(int n);
GroupRef dihedral_group(int order);
GroupRef symmetric_group(int n);
GroupRef alternating_group(int n);
GroupRef product_group(const std::vector<GroupRef>& factors);
/// N ⋊ K with `action[k]` the automorphism of N by which k acts.
GroupRef semidirect_group(const GroupRef& normal, const GroupRef& acting,
                          const std::vector<std::vector<int>>& action);
/// (H × H) ⋊ Z/2 with Z/2 swapping the factors.
GroupRef wreath2_group(const GroupRef& base);
/// Closure of permutations of {0..degree-1}; (p·q)(x) = p(q(x)).
GroupRef permutation_group(int degree, const std::vector<std::vector<int>>& generators,
                           int order_cap = 10000);

/// Builds a group from a JSON GroupSpec (see docs/schemas/group.schema.json).
GroupRef build_group(const nlohmann::json& spec, int order_cap = 10000);

// ---- subgroup machinery --------------------------------------------------

Subgroup trivial_subgroup(const GroupRef& g);
Subgroup whole_group(const GroupRef& g);
Subgroup generate(const GroupRef& g, const std::vector<int>& gens);
/// Throws InvalidInput when `elements` is not a subgroup.
Subgroup subgroup_from_elements(const GroupRef& g, std::vector<int> elements);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// g S g^-1
Subgroup conjugate(const Subgroup& s, int g);
bool is_normal(const Subgroup& s);
/// A small generating set (greedy, in index order).
std::vector<int> generators_of(const Subgroup& s);

/// The subgroup as a standalone group, elements renumbered in sorted order.
GroupRef subgroup_group(const Subgroup& s);
/// Inclusion of subgroup_group(s) into the parent.
Homomorphism inclusion_hom(const Subgroup& s, const GroupRef& sub_group);

std::vector<Subgroup> subgroups(const GroupRef& g, std::optional<int> max_index = std::nullopt,
                                const Budget& budget = default_budget());
Subgroup normal_closure(const Subgroup& h);
Subgroup normalizer(const Subgroup& b);
DoubleCosetDecomposition double_cosets(const Subgroup& h, const Subgroup& k);
std::vector<Subgroup> complements(const Subgroup& h, const Budget& budget = default_budget());
QuotientGroup quotient(const Subgroup& normal);
/// Representatives of the conjugacy classes of subgroups, sorted.
std::vector<Subgroup> subgroup_class_representatives(const GroupRef& g,
                                                     const Budget& budget = default_budget());

// ---- isomorphism search --------------------------------------------------

using SubgroupConstraint = std::pair<Subgroup, Subgroup>;

/// Calls `visit` for every isomorphism G1 -> G2 mapping each constrained source
/// subgroup onto its target. Stops early when `visit` returns false.
void for_each_isomorphism(const GroupRef& g1, const GroupRef& g2,
                          const std::vector<SubgroupConstraint>& constraints,
                          const std::function<bool(const Homomorphism&)>& visit,
                          const Budget& budget = default_budget());
std::vector<Homomorphism> isomorphisms(const GroupRef& g1, const GroupRef& g2,
                                       const std::vector<SubgroupConstraint>& constraints = {},
                                       const Budget& budget = default_budget());
std::optional<Homomorphism> find_isomorphism(const GroupRef& g1, const GroupRef& g2,
                                             const std::vector<SubgroupConstraint>& constraints = {},
                                             const Budget& budget = default_budget());
bool are_isomorphic(const GroupRef& g1, const GroupRef& g2,
                    const Budget& budget = default_budget());

}  // namespace f2c
