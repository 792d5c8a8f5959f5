#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2c/budget.hpp"
#include "f2c/cochain.hpp"
#include "f2c/group.hpp"

namespace f2c {

/// The data (G, H, pi, psi): a 4-cocycle pi on G and a 3-cochain psi on H
/// with d psi = pi|_H. psi lives on h_group = subgroup_group(h).
struct Presentation {
  GroupRef g;
  Subgroup h;
  GroupRef h_group;
  Cochain pi;
  Cochain psi;
  std::vector<std::string> notes;  // free-form remarks carried into reports
};

/// Checks shapes (groups, degrees) only; use validate() for the equations.
Presentation make_presentation(GroupRef g, Subgroup h, Cochain pi, Cochain psi);
Presentation trivial_presentation(const GroupRef& g, const Subgroup& h);

/// A second algebra (K, omega) for two-sided bimodule computations.
struct ModuleSide {
  Subgroup k;
  GroupRef k_group;
  Cochain omega;
};
ModuleSide side_of(const Presentation& p);

struct ValidationIssue {
  std::string kind;        // "pi-not-closed" or "algebra-condition"
  std::vector<int> tuple;  // indices in G
  QZ defect;
};

struct ValidationReport {
  bool pi_closed = true;
  bool algebra_condition = true;
  std::size_t failing_tuples = 0;
  std::vector<ValidationIssue> issues;  // the first few failures
  bool valid() const { return pi_closed && algebra_condition; }
};

ValidationReport validate(const Presentation& p, std::size_t max_issues = 16);

struct XiResult {
  Subgroup stabilizer;  // H ∩ g K g^-1, in G
  GroupRef stabilizer_group;
  Cochain xi;  // 3-cochain on stabilizer_group
};

/// The 3-cocycle attached to the double coset of g.
XiResult xi_g(const Presentation& p, const ModuleSide& other, int g);

struct CensusEntry {
  Subgroup b;                // in the stabilizer group's own indices
  std::vector<int> b_in_g;   // the same subgroup in G
  AbelianInvariants h2;      // H^2(B; Q/Z)
  int count = 0;             // orbit count, or torsor size when inexact
  bool exact = true;
};

struct Census {
  std::vector<CensusEntry> entries;
  bool xi_trivializable = true;
  int total() const;
  bool exact() const;
};

/// Simple objects of Mod(Vect_L^xi), grouped by the conjugacy class of the
/// subgroup B on which xi is trivialized.
Census simple_census(const GroupRef& l, const Cochain& xi, const Budget& budget = default_budget(),
                     const Homomorphism* into_g = nullptr);

struct ComponentRecord {
  int representative = 0;
  int grade = -1;  // element of G/H^G; -1 for two-sided computations
  Subgroup stabilizer;
  GroupRef stabilizer_group;
  Cochain xi;
  bool xi_trivial = true;
  Census census;
  std::string name;
  std::vector<int> support;  // the double coset H g K
};

std::vector<ComponentRecord> components(const Presentation& p, const std::optional<ModuleSide>& other = std::nullopt,
                                        const Budget& budget = default_budget());

struct FusionRow {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> summands;  // (representative, multiplicity), by representative
  int total() const;
};

FusionRow fuse(const Presentation& p, int f, int g);

struct FusionTable {
  std::vector<int> representatives;
  std::vector<std::string> names;
  std::vector<FusionRow> rows;  // row-major over ordered pairs of representatives
};

FusionTable fusion_table(const Presentation& p);
/// Display names of the components, in representative order.
std::vector<std::string> component_names(const Presentation& p);
/// "D□D = X ⊞ Y" style rendering of a row.
std::string render_fusion(const FusionRow& row, const std::vector<int>& reps, const std::vector<std::string>& names);

struct Grading {
  Subgroup normal_closure;      // H^G
  QuotientGroup quotient;       // G / H^G
  std::vector<int> representatives;
  std::vector<int> grade;       // per representative
};

Grading universal_grading(const Presentation& p);
std::vector<int> support(const Presentation& p, int g);

}  // namespace f2c
