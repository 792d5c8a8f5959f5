#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "f2c/budget.hpp"

namespace f2c {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
/// Dense vector over Z/N, entries in [0, N).
using Vec = std::vector<u32>;

/// Moduli are capped so that a + b*c stays below 2^32 for reduced a, b, c.
constexpr u32 kMaxModulus = 1u << 16;

class Zmod {
 public:
  explicit Zmod(u32 n);
  u32 n() const { return n_; }
  bool pow2() const { return pow2_; }
  u32 reduce(u32 x) const {
    if (pow2_) return x & mask_;
    const u64 low = magic_ * x;
    return static_cast<u32>((static_cast<unsigned __int128>(low) * n_) >> 64);
  }
  u32 from_int(long long x) const {
    long long r = x % static_cast<long long>(n_);
    return static_cast<u32>(r < 0 ? r + n_ : r);
  }
  u32 add(u32 a, u32 b) const { return reduce(a + b); }
  u32 sub(u32 a, u32 b) const { return reduce(a + n_ - b); }
  u32 mul(u32 a, u32 b) const { return reduce(a * b); }
  u32 neg(u32 a) const { return a == 0 ? 0 : n_ - a; }
  /// dst[from..) += q * src[from..)
  void axpy(u32* dst, const u32* src, u32 q, std::size_t from, std::size_t len) const;

 private:
  u32 n_;
  bool pow2_;
  u32 mask_;
  u64 magic_;
};

long long ext_gcd(long long a, long long b, long long& s, long long& t);
u32 gcd_u(u32 a, u32 b);
/// A unit u with u*a ≡ gcd(a, N) (mod N).
u32 normalizing_unit(u32 a, u32 n);

struct ModEntry {
  int row;
  int col;
  u32 value;
};

/// Sparse matrix over Z/N. Entries are kept sorted by (row, col), reduced and
/// free of duplicates once finalize() has run.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int rows, int cols, u32 modulus);

  static ModMatrix from_dense(const std::vector<Vec>& rows, int cols, u32 modulus);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  u32 modulus() const { return modulus_; }
  const std::vector<ModEntry>& entries() const { return entries_; }

  /// Accumulates v into (r, c); call finalize() before reading.
  void add(int r, int c, long long v);
  void finalize();
  bool finalized() const { return finalized_; }

  std::vector<Vec> dense_rows() const;
  Vec row(int r) const;
  /// M x
  Vec apply(const Vec& x) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  u32 modulus_ = 2;
  std::vector<ModEntry> entries_;
  bool finalized_ = true;
};

/// Incrementally maintained Howell form of a row module over Z/N.
///
/// Rows are fully reduced: every pivot is a divisor of N, entries in other
/// rows at a pivot column lie in [0, pivot), and the annihilator (N/p)·row of
/// every pivot row is itself in the module spanned by the later rows.
class RowEchelon {
 public:
  RowEchelon(int cols, u32 modulus);

  int cols() const { return cols_; }
  u32 modulus() const { return z_.n(); }
  const Zmod& ring() const { return z_; }

  void insert(Vec v);
  void insert_sparse(const std::vector<std::pair<int, u32>>& entries);

  /// Canonical remainder of v modulo the row module.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;

  /// Rows sorted by pivot column (the Howell form).
  std::vector<Vec> rows() const;
  std::size_t size() const { return live_; }
  /// Generators of {x : r·x = 0 for every row r}.
  std::vector<Vec> kernel() const;
  /// Order of the row module (product over pivots of N/p).
  long double module_order() const;

 private:
  void place(Vec v, std::vector<Vec>& pending);
  void reduce_from(Vec& v, int from) const;
  void fix_nonunit_columns(Vec& v, int from) const;
  void add_pivot(Vec v, int c, std::vector<Vec>& pending);

  int cols_;
  Zmod z_;
  std::vector<Vec> rows_;
  std::vector<int> pivot_col_;  // -1 for a free slot
  std::vector<u32> pivot_val_;
  std::vector<int> row_at_col_;
  std::vector<int> free_slots_;
  std::set<int> nonunit_;
  std::size_t live_ = 0;
};

struct AffineSolveResult {
  std::optional<Vec> particular;
  std::vector<Vec> kernel_basis;
};

struct AbelianInvariants {
  std::vector<u64> factors;  // d_1 | d_2 | ..., each > 1
  u64 order() const;
  bool operator==(const AbelianInvariants& o) const { return factors == o.factors; }
};

/// Quotient module with explicit generators given as coefficient vectors over
/// the rows of the numerator matrix.
struct QuotientPresentation {
  AbelianInvariants invariants;
  std::vector<Vec> generator_coefficients;
};

ModMatrix transpose(const ModMatrix& m);
ModMatrix howell_form(const ModMatrix& m);
std::vector<Vec> kernel_basis(const ModMatrix& m, const Budget& budget = default_budget());
/// Solves M x = b. The particular solution is the least element of its coset
/// in lexicographic order.
AffineSolveResult solve_affine(const ModMatrix& m, const Vec& b,
                               const Budget& budget = default_budget());
/// Presents (span Z + span B) / span B, which is Z/B whenever B lies in Z.
/// The cost is governed by the number of Z and B rows, not the ambient width.
AbelianInvariants quotient_invariants(const ModMatrix& z_gens, const ModMatrix& b_gens);
QuotientPresentation quotient_presentation(const ModMatrix& z_gens, const ModMatrix& b_gens);

/// Smith form over Z/N of a dense matrix with `cols` columns. Returns the
/// diagonal (normalized divisors of N, N standing for a zero entry) and the
/// inverse of the column transform, W = V^-1, so that the quotient
/// (Z/N)^cols / rowspan(M) is ⊕ Z/d_i generated by the rows of W.
struct SmithResult {
  std::vector<u32> diagonal;  // length cols
  std::vector<Vec> w;         // cols × cols
};
SmithResult smith_form(std::vector<Vec> m, int cols, u32 modulus);

void check_matrix_budget(std::uint64_t cols, const Budget& budget, const char* what);

}  // namespace f2c
