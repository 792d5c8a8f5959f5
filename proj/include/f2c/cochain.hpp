#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "f2c/budget.hpp"
#include "f2c/group.hpp"
#include "f2c/linalg.hpp"

namespace f2c {

/// An element of Q/Z in lowest terms, 0 <= num < den.
struct QZ {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static QZ make(long long num, std::uint64_t den);
  QZ operator+(const QZ& o) const;
  QZ operator-(const QZ& o) const;
  QZ operator-() const;
  bool operator==(const QZ& o) const { return num == o.num && den == o.den; }
  bool is_zero() const { return num == 0; }
  std::string str() const;
};

/// Largest denominator a cochain may carry.
constexpr std::uint64_t kMaxDenominator = 1u << 30;

/// A normalized n-cochain on G with values in (1/N)Z/Z.
///
/// Values are stored densely over tuples of non-identity elements; a tuple
/// (g_1, ..., g_n) sits at index sum (g_i - 1) (|G| - 1)^(n - i). Tuples that
/// contain the identity are not representable and always evaluate to 0.
class Cochain {
 public:
  Cochain() = default;
  Cochain(GroupRef g, int degree, std::uint64_t denominator = 1);

  const GroupRef& group() const { return g_; }
  int degree() const { return n_; }
  std::uint64_t denominator() const { return den_; }
  std::size_t size() const { return nums_.size(); }
  const std::vector<std::uint32_t>& numerators() const { return nums_; }

  /// Index of a tuple of non-identity elements.
  std::size_t index_of(const int* tuple) const;
  /// Inverse of index_of.
  std::vector<int> tuple_at(std::size_t index) const;

  /// Numerator over denominator(); 0 when the tuple contains the identity.
  std::uint64_t num(const int* tuple) const;
  std::uint64_t num(const std::vector<int>& tuple) const { return num(tuple.data()); }
  std::uint64_t num_at(std::size_t index) const { return nums_[index]; }
  QZ at(const std::vector<int>& tuple) const;

  /// Sets a value; its denominator must divide denominator().
  void set(const std::vector<int>& tuple, const QZ& v);
  void set_num(const std::vector<int>& tuple, long long num);
  void set_num_at(std::size_t index, long long num);

  /// The same values written over a multiple of the denominator.
  Cochain at_level(std::uint64_t denominator) const;
  /// The same values over the smallest possible denominator.
  Cochain reduced() const;
  /// Numerators over `level` (a multiple of the denominator).
  Vec vector_at_level(std::uint64_t level) const;
  static Cochain from_vector(GroupRef g, int degree, const Vec& v, std::uint64_t level);

  bool is_zero() const;
  /// Equality as Q/Z-valued functions, whatever the stored denominators.
  bool operator==(const Cochain& o) const;

 private:
  GroupRef g_;
  int n_ = 0;
  std::uint64_t den_ = 1;
  std::vector<std::uint32_t> nums_;
};

/// (|G| - 1)^n, with a budget-style failure when it would not fit in memory.
std::size_t tuple_count(int group_order, int degree);

Cochain zero_cochain(const GroupRef& g, int degree);
Cochain coboundary(const Cochain& phi);
bool is_cocycle(const Cochain& phi);
/// (f* phi)(g_1, ...) = phi(f(g_1), ...); f must land in phi's group.
Cochain pullback(const Cochain& phi, const Homomorphism& f);
/// Restriction to a subgroup, as a cochain on subgroup_group(s).
Cochain restrict_to(const Cochain& phi, const Subgroup& s, const GroupRef& sub_group);
Cochain combine(const Cochain& a, const Cochain& b, int sign);
Cochain scale(const Cochain& a, long long k);

/// Matrix of d from n-cochains to (n+1)-cochains over Z/modulus; rows are
/// (n+1)-tuples, columns n-tuples.
ModMatrix coboundary_matrix(const GroupRef& g, int n, u32 modulus);

/// A cochain psi with d psi = phi, or nothing when phi is not a coboundary
/// over Q/Z. Throws InvalidInput when phi is not a cocycle.
std::optional<Cochain> trivialize(const Cochain& phi, const Budget& budget = default_budget());
bool same_class(const Cochain& a, const Cochain& b, const Budget& budget = default_budget());

struct CohomologyResult {
  AbelianInvariants invariants;
  std::vector<Cochain> generators;  // generators[i] has order invariants.factors[i]
};

CohomologyResult cohomology(const GroupRef& g, int n, const Budget& budget = default_budget());

/// Coordinates c with phi - sum c_i gen_i a coboundary; c_i is reduced mod
/// the i-th invariant factor.
std::vector<u64> class_coordinates(const CohomologyResult& h, const Cochain& phi,
                                   const Budget& budget = default_budget());

/// Cochain JSON: {"degree", "denominator", "entries": [{"tuple", "num"}]}, or
/// the string "trivial". `relabel` maps indices in the file to indices of g
/// (-1 for elements outside g).
Cochain cochain_from_json(const nlohmann::json& j, const GroupRef& g, int degree,
                          const std::vector<int>* relabel = nullptr);
/// `label_map` turns indices of the cochain's group into the indices to write.
nlohmann::json cochain_to_json(const Cochain& c, const std::vector<int>* label_map = nullptr);

}  // namespace f2c
