#pragma once

#include <optional>
#include <vector>

#include "f2c/core.hpp"

namespace f2c {

// ---- fiber 2-functors -------------------------------------------------------

struct FiberFunctorDatum {
  Subgroup k;  // a complement of H
  GroupRef k_group;
  Cochain omega;      // on k_group, d omega = pi|_K
  std::vector<u64> omega_class;  // coordinates relative to the first trivialization
  Presentation dual;  // C(G, K, pi, omega)
};

std::vector<FiberFunctorDatum> fiber_functors(const Presentation& p, const Budget& budget = default_budget());

bool fiber_equivalent(const Presentation& p, const FiberFunctorDatum& a, const FiberFunctorDatum& b,
                      const Budget& budget = default_budget());

// ---- equivalence of presentations -------------------------------------------

// f : G1 -> G2 with f(H1) = H2 and a 3-cochain xi on G1 such that
//   f*pi2 = pi1 + d xi   and   f*psi2 - xi|_H1 - psi1 is a coboundary.
struct EquivalenceWitness {
  Homomorphism f;
  Cochain xi;
};

std::optional<EquivalenceWitness> equivalent(const Presentation& a, const Presentation& b,
                                             const Budget& budget = default_budget());
// Re-checks both conditions of a witness from scratch.
bool check_witness(const Presentation& a, const Presentation& b, const EquivalenceWitness& w,
                   const Budget& budget = default_budget());

// ---- Tambara-Yamagami -----------------------------------------------------------

struct TYDefectReport {
  bool graded = false;
  bool minus_connected = false;
  bool exact_factorization = false;
  int minus_representative = -1;
  std::optional<FusionRow> defect_fusion;
  std::optional<Homomorphism> wreath_recognized;  // G -> H wr Z/2 with H -> H (+) 0
  bool has_defect() const { return graded && minus_connected && exact_factorization; }
};

TYDefectReport ty_defect(const Presentation& p, const Budget& budget = default_budget());

// A wr Z/2 with A (+) 0 and A (+) A as subgroups.
struct WreathData {
  GroupRef w;
  Subgroup first;  // A (+) 0
  Subgroup base;   // A (+) A
};
WreathData wreath_of(const GroupRef& a);

Presentation build_2ty(const GroupRef& a, const Cochain& pi, const Budget& budget = default_budget());

struct TYClass {
  Cochain pi;                   // representative 4-cocycle on A wr Z/2
  std::vector<u64> coordinates; // in H^4(A wr Z/2)
};

struct TYClassification {
  AbelianInvariants h4;          // H^4(A wr Z/2)
  std::size_t kernel_order = 0;  // classes trivializable on A (+) A
  std::vector<TYClass> classes;  // one per equivalence class
};

// Within the default budget only |A| <= 2 is attempted; pass a larger
// max_dense_cells budget to try bigger A.
TYClassification classify_2ty(const GroupRef& a, const Budget& budget = default_budget());

// Normal abelian subgroups N with H N = G and H ∩ N = {e}.
std::vector<Subgroup> normal_abelian_complements(const Presentation& p, const Budget& budget = default_budget());

// ---- finite 2-groups -----------------------------------------------------------

struct TwoGroupData {
  GroupRef h;
  GroupRef a;                          // abelian
  std::vector<std::vector<int>> rho;   // rho[h][a], an automorphism of A per element of H
  std::vector<int> beta;               // A-valued, over all |H|^3 triples, row-major
  int beta_at(int h1, int h2, int h3) const;
};

// Throws InvalidInput unless A is abelian, rho is an action, and beta is a
// normalized twisted 3-cocycle.
void validate_two_group(const TwoGroupData& t);
std::vector<int> twisted_coboundary_defect(const TwoGroupData& t);  // (d beta) over all 4-tuples

struct CharacterGroup {
  GroupRef group;                     // the dual group of A
  int exponent = 1;
  std::vector<std::vector<int>> values;  // values[alpha][a] in Z/exponent
};
CharacterGroup characters(const GroupRef& a);

struct TwoGroupPi {
  GroupRef group;  // H ⋉ Â, index h * |Â| + alpha
  Cochain pi;
  CharacterGroup dual;
};

TwoGroupPi two_group_pi(const TwoGroupData& t);

// Â ⋊ H (index alpha * |H| + h) and the isomorphism (h, alpha) -> (alpha∘rho(h^-1), h).
struct FootnoteIso {
  GroupRef target;
  Homomorphism iso;
};
FootnoteIso footnote_iso(const TwoGroupData& t, const TwoGroupPi& tp);

struct TwoRepComponent {
  int alpha = 0;                 // orbit representative in Â
  std::vector<int> orbit;
  Subgroup stabilizer;           // in H
  GroupRef stabilizer_group;
  Cochain cocycle;               // alpha∘beta on the stabilizer
  Census census;
};

struct TwoRepDecomposition {
  std::vector<TwoRepComponent> components;
  Presentation presentation;     // C(Â ⋊ H, H, pi', triv)
  int total_simples() const;
};

// Orbit data, cross-checked component by component against components() of
// the presentation; a mismatch raises InvariantViolation.
TwoRepDecomposition two_rep_decomposition(const TwoGroupData& t, const Budget& budget = default_budget());

}  // namespace f2c
