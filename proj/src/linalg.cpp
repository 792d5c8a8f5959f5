#include "f2c/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "f2c/errors.hpp"

namespace f2c {

// ---- scalar helpers ------------------------------------------------------

Zmod::Zmod(u32 n) : n_(n) {
  if (n < 2 || n > kMaxModulus)
    fail_budget("modulus " + std::to_string(n) + " outside supported range [2, 65536]");
  pow2_ = (n & (n - 1)) == 0;
  mask_ = n - 1;
  magic_ = ~u64{0} / n + 1;
}

void Zmod::axpy(u32* dst, const u32* src, u32 q, std::size_t from, std::size_t len) const {
  if (q == 0) return;
  if (pow2_) {
    const u32 m = mask_;
    for (std::size_t j = from; j < len; ++j) dst[j] = (dst[j] + q * src[j]) & m;
  } else {
    for (std::size_t j = from; j < len; ++j) dst[j] = reduce(dst[j] + q * src[j]);
  }
}

long long ext_gcd(long long a, long long b, long long& s, long long& t) {
  long long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const long long q = a / b;
    long long tmp = a - q * b;
    a = b;
    b = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

u32 gcd_u(u32 a, u32 b) { return std::gcd(a, b); }

u32 normalizing_unit(u32 a, u32 n) {
  const u32 g = std::gcd(a, n);
  if (g == 0) return 1;
  const u32 a1 = a / g, n1 = n / g;
  u32 u = 1;
  if (n1 > 1) {
    long long s, t;
    ext_gcd(a1, n1, s, t);
    u = static_cast<u32>(((s % n1) + n1) % n1);
  }
  // lift the inverse mod n/g to a unit mod n
  while (std::gcd(u, n) != 1) u += n1;
  return u % n;
}

void check_matrix_budget(std::uint64_t cols, const Budget& budget, const char* what) {
  if (cols * cols > budget.max_dense_cells)
    fail_budget(std::string(what) + ": dense basis of " + std::to_string(cols) + "^2 cells exceeds budget " +
                std::to_string(budget.max_dense_cells));
}

// ---- ModMatrix -----------------------------------------------------------

ModMatrix::ModMatrix(int rows, int cols, u32 modulus) : rows_(rows), cols_(cols), modulus_(modulus) {
  Zmod check(modulus);
  (void)check;
}

ModMatrix ModMatrix::from_dense(const std::vector<Vec>& rows, int cols, u32 modulus) {
  ModMatrix m(static_cast<int>(rows.size()), cols, modulus);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c)
      if (rows[r][c] % modulus) m.entries_.push_back({static_cast<int>(r), c, rows[r][c] % modulus});
  return m;
}

void ModMatrix::add(int r, int c, long long v) {
  const long long red = ((v % modulus_) + modulus_) % modulus_;
  if (red == 0) return;
  entries_.push_back({r, c, static_cast<u32>(red)});
  finalized_ = false;
}

void ModMatrix::finalize() {
  if (finalized_) return;
  std::sort(entries_.begin(), entries_.end(), [](const ModEntry& a, const ModEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<ModEntry> merged;
  for (auto& e : entries_) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
      merged.back().value = (merged.back().value + e.value) % modulus_;
    else
      merged.push_back(e);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const ModEntry& e) { return e.value == 0; }),
               merged.end());
  entries_ = std::move(merged);
  finalized_ = true;
}

std::vector<Vec> ModMatrix::dense_rows() const {
  std::vector<Vec> out(rows_, Vec(cols_, 0));
  for (auto& e : entries_) out[e.row][e.col] = (out[e.row][e.col] + e.value) % modulus_;
  return out;
}

Vec ModMatrix::row(int r) const {
  Vec v(cols_, 0);
  for (auto& e : entries_)
    if (e.row == r) v[e.col] = (v[e.col] + e.value) % modulus_;
  return v;
}

Vec ModMatrix::apply(const Vec& x) const {
  Vec y(rows_, 0);
  for (auto& e : entries_) y[e.row] = static_cast<u32>((y[e.row] + u64{e.value} * x[e.col]) % modulus_);
  return y;
}

// ---- RowEchelon ----------------------------------------------------------

RowEchelon::RowEchelon(int cols, u32 modulus)
    : cols_(cols), z_(modulus), row_at_col_(cols, -1) {}

void RowEchelon::insert(Vec v) {
  ensure(static_cast<int>(v.size()) == cols_, "RowEchelon::insert: width mismatch");
  std::vector<Vec> pending;
  pending.push_back(std::move(v));
  while (!pending.empty()) {
    Vec w = std::move(pending.back());
    pending.pop_back();
    place(std::move(w), pending);
  }
}

void RowEchelon::insert_sparse(const std::vector<std::pair<int, u32>>& entries) {
  Vec v(cols_, 0);
  bool any = false;
  for (auto& [c, x] : entries) {
    v[c] = z_.add(v[c], z_.reduce(x));
    any = any || v[c] != 0;
  }
  if (any) insert(std::move(v));
}

void RowEchelon::reduce_from(Vec& v, int from) const {
  for (int c = from; c < cols_; ++c) {
    const u32 a = v[c];
    if (a == 0) continue;
    const int r = row_at_col_[c];
    if (r < 0) continue;
    const u32 p = pivot_val_[r];
    if (a >= p) z_.axpy(v.data(), rows_[r].data(), z_.neg(a / p), c, cols_);
  }
}

void RowEchelon::fix_nonunit_columns(Vec& v, int from) const {
  for (auto it = nonunit_.lower_bound(from); it != nonunit_.end(); ++it) {
    const int c = *it;
    const int r = row_at_col_[c];
    const u32 p = pivot_val_[r];
    if (v[c] >= p) z_.axpy(v.data(), rows_[r].data(), z_.neg(v[c] / p), c, cols_);
  }
}

void RowEchelon::add_pivot(Vec v, int c, std::vector<Vec>& pending) {
  const u32 n = z_.n();
  const u32 u = normalizing_unit(v[c], n);
  if (u != 1)
    for (int j = c; j < cols_; ++j) v[j] = z_.mul(v[j], u);
  const u32 g = v[c];
  reduce_from(v, c + 1);

  int slot;
  if (!free_slots_.empty()) {
    slot = free_slots_.back();
    free_slots_.pop_back();
  } else {
    slot = static_cast<int>(rows_.size());
    rows_.emplace_back();
    pivot_col_.push_back(-1);
    pivot_val_.push_back(0);
  }
  rows_[slot] = v;
  pivot_col_[slot] = c;
  pivot_val_[slot] = g;
  row_at_col_[c] = slot;
  if (g != 1) nonunit_.insert(c);
  ++live_;

  const u32* pv = rows_[slot].data();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (static_cast<int>(r) == slot || pivot_col_[r] < 0 || pivot_col_[r] > c) continue;
    Vec& row = rows_[r];
    if (row[c] >= g) {
      z_.axpy(row.data(), pv, z_.neg(row[c] / g), c, cols_);
      fix_nonunit_columns(row, c + 1);
    }
  }

  if (g != 1) {
    Vec ann(cols_, 0);
    const u32 k = n / g;
    bool any = false;
    for (int j = c; j < cols_; ++j) {
      ann[j] = z_.mul(v[j], k);
      any = any || ann[j];
    }
    if (any) pending.push_back(std::move(ann));
  }
}

void RowEchelon::place(Vec v, std::vector<Vec>& pending) {
  const u32 n = z_.n();
  for (int c = 0; c < cols_; ++c) {
    const u32 a = v[c];
    if (a == 0) continue;
    const int r = row_at_col_[c];
    if (r < 0) {
      add_pivot(std::move(v), c, pending);
      return;
    }
    const u32 p = pivot_val_[r];
    if (a % p == 0) {
      z_.axpy(v.data(), rows_[r].data(), z_.neg(a / p), c, cols_);
      continue;
    }
    // Unimodular 2x2 step: (P, v) -> (sP + tv, (a/g)P - (p/g)v).
    long long s, t;
    const long long g = ext_gcd(p, a, s, t);
    const u32 su = z_.from_int(s), tu = z_.from_int(t);
    const u32 ag = static_cast<u32>(a / g), pg = z_.neg(static_cast<u32>(p / g));
    const Vec& prow = rows_[r];
    Vec np(cols_, 0), rem(cols_, 0);
    for (int j = c; j < cols_; ++j) {
      np[j] = z_.add(z_.mul(su, prow[j]), z_.mul(tu, v[j]));
      rem[j] = z_.add(z_.mul(ag, prow[j]), z_.mul(pg, v[j]));
    }
    (void)n;
    row_at_col_[c] = -1;
    pivot_col_[r] = -1;
    nonunit_.erase(c);
    rows_[r].clear();
    rows_[r].shrink_to_fit();
    free_slots_.push_back(r);
    --live_;
    pending.push_back(std::move(rem));
    add_pivot(std::move(np), c, pending);
    return;
  }
}

Vec RowEchelon::reduce(Vec v) const {
  for (auto& x : v) x = z_.reduce(x % z_.n());
  reduce_from(v, 0);
  return v;
}

bool RowEchelon::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](u32 x) { return x == 0; });
}

std::vector<Vec> RowEchelon::rows() const {
  std::vector<Vec> out;
  for (int c = 0; c < cols_; ++c)
    if (row_at_col_[c] >= 0) out.push_back(rows_[row_at_col_[c]]);
  return out;
}

long double RowEchelon::module_order() const {
  long double o = 1;
  for (int c = 0; c < cols_; ++c)
    if (row_at_col_[c] >= 0) o *= static_cast<long double>(z_.n() / pivot_val_[row_at_col_[c]]);
  return o;
}

std::vector<Vec> RowEchelon::kernel() const {
  const u32 n = z_.n();
  // Columns that are not unit pivots carry the free part of the solution.
  std::vector<int> s_cols;
  std::vector<int> pos(cols_, -1);
  for (int c = 0; c < cols_; ++c) {
    const int r = row_at_col_[c];
    if (r < 0 || pivot_val_[r] != 1) {
      pos[c] = static_cast<int>(s_cols.size());
      s_cols.push_back(c);
    }
  }
  const std::size_t m = s_cols.size();
  std::vector<Vec> gens;
  std::vector<u32> tval;

  auto combine = [&](std::size_t i, std::size_t j, long long s, long long t, long long a, long long b,
                     long long g) {
    // gens[i] <- s*gi + t*gj, gens[j] <- (b/g)*gi - (a/g)*gj where a, b are the
    // residues carried by gi, gj.
    const u32 su = z_.from_int(s), tu = z_.from_int(t);
    const u32 x = z_.from_int(b / g), y = z_.from_int(-(a / g));
    for (std::size_t k = 0; k < m; ++k) {
      const u32 gi = gens[i][k], gj = gens[j][k];
      gens[i][k] = z_.add(z_.mul(su, gi), z_.mul(tu, gj));
      gens[j][k] = z_.add(z_.mul(x, gi), z_.mul(y, gj));
    }
    const u32 ti = tval[i], tj = tval[j];
    tval[i] = z_.add(z_.mul(su, ti), z_.mul(tu, tj));
    tval[j] = z_.add(z_.mul(x, ti), z_.mul(y, tj));
  };

  for (std::size_t k = m; k-- > 0;) {
    const int c = s_cols[k];
    const int r = row_at_col_[c];
    if (r < 0) {
      Vec e(m, 0);
      e[k] = 1;
      gens.push_back(std::move(e));
      continue;
    }
    const u32 p = pivot_val_[r];
    const Vec& row = rows_[r];
    tval.assign(gens.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      u64 acc = 0;
      for (std::size_t q = k + 1; q < m; ++q) acc += u64{row[s_cols[q]]} * gens[i][q];
      tval[i] = static_cast<u32>(acc % n);
    }
    long long carrier = -1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const long long ti = tval[i] % p;
      if (ti == 0) continue;
      if (carrier < 0) {
        carrier = static_cast<long long>(i);
        continue;
      }
      const long long tc = tval[carrier] % p;
      long long s, t;
      const long long g = ext_gcd(tc, ti, s, t);
      combine(static_cast<std::size_t>(carrier), i, s, t, tc, ti, g);
    }
    if (carrier >= 0) {
      const u32 tc = tval[carrier] % p;
      const u32 scale = p / std::gcd(tc, p);
      for (auto& x : gens[carrier]) x = z_.mul(x, scale);
      tval[carrier] = z_.mul(tval[carrier], scale);
    }
    for (std::size_t i = 0; i < gens.size(); ++i) gens[i][k] = z_.neg(tval[i] / p);
    Vec ann(m, 0);
    ann[k] = n / p;
    gens.push_back(std::move(ann));
  }

  std::vector<Vec> out;
  for (auto& gsub : gens) {
    if (std::all_of(gsub.begin(), gsub.end(), [](u32 x) { return x == 0; })) continue;
    Vec x(cols_, 0);
    for (std::size_t k = 0; k < m; ++k) x[s_cols[k]] = gsub[k];
    for (int c = 0; c < cols_; ++c) {
      const int r = row_at_col_[c];
      if (r < 0 || pivot_val_[r] != 1) continue;
      const Vec& row = rows_[r];
      u64 acc = 0;
      for (std::size_t k = 0; k < m; ++k) acc += u64{row[s_cols[k]]} * gsub[k];
      x[c] = z_.neg(static_cast<u32>(acc % n));
    }
    out.push_back(std::move(x));
  }
  return out;
}

// ---- operations ----------------------------------------------------------

u64 AbelianInvariants::order() const {
  u64 o = 1;
  for (auto f : factors) o *= f;
  return o;
}

ModMatrix transpose(const ModMatrix& m) {
  ModMatrix t(m.cols(), m.rows(), m.modulus());
  for (auto& e : m.entries()) t.add(e.col, e.row, e.value);
  t.finalize();
  return t;
}

ModMatrix howell_form(const ModMatrix& m) {
  RowEchelon e(m.cols(), m.modulus());
  for (auto& r : m.dense_rows()) e.insert(r);
  return ModMatrix::from_dense(e.rows(), m.cols(), m.modulus());
}

namespace {

RowEchelon echelon_of(const ModMatrix& m, int extra_cols, const Vec* last, const Budget& budget,
                      const char* what) {
  check_matrix_budget(static_cast<u64>(m.cols() + extra_cols), budget, what);
  ensure(m.finalized(), "matrix must be finalized before elimination");
  RowEchelon e(m.cols() + extra_cols, m.modulus());
  const Zmod z(m.modulus());
  std::vector<std::pair<int, u32>> row;
  int cur = -1;
  auto flush = [&](int r) {
    if (last && (*last)[r] % m.modulus()) row.emplace_back(m.cols(), z.neg((*last)[r] % m.modulus()));
    if (!row.empty()) e.insert_sparse(row);
    row.clear();
  };
  std::vector<char> seen(m.rows(), 0);
  std::size_t count = 0;
  for (auto& en : m.entries()) {
    if (en.row != cur) {
      if (cur >= 0) flush(cur);
      cur = en.row;
      seen[cur] = 1;
    }
    row.emplace_back(en.col, en.value);
    if ((++count & 0xfff) == 0) budget.check_time(what);
  }
  if (cur >= 0) flush(cur);
  if (last)
    for (int r = 0; r < m.rows(); ++r)
      if (!seen[r] && (*last)[r] % m.modulus()) {
        row.clear();
        flush(r);
      }
  return e;
}

}  // namespace

std::vector<Vec> kernel_basis(const ModMatrix& m, const Budget& budget) {
  return echelon_of(m, 0, nullptr, budget, "kernel_basis").kernel();
}

AffineSolveResult solve_affine(const ModMatrix& m, const Vec& b, const Budget& budget) {
  ensure(static_cast<int>(b.size()) == m.rows(), "solve_affine: right-hand side has wrong length");
  const u32 n = m.modulus();
  const Zmod z(n);
  const int cols = m.cols();
  auto gens = echelon_of(m, 1, &b, budget, "solve_affine").kernel();

  // Concentrate the last coordinate on a single generator.
  long long carrier = -1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const u32 li = gens[i][cols];
    if (li == 0) continue;
    if (carrier < 0) {
      carrier = static_cast<long long>(i);
      continue;
    }
    const u32 lc = gens[carrier][cols];
    long long s, t;
    const long long g = ext_gcd(lc, li, s, t);
    const u32 su = z.from_int(s), tu = z.from_int(t);
    const u32 x = z.from_int(li / g), y = z.from_int(-static_cast<long long>(lc / g));
    for (int k = 0; k <= cols; ++k) {
      const u32 gc = gens[carrier][k], gi = gens[i][k];
      gens[carrier][k] = z.add(z.mul(su, gc), z.mul(tu, gi));
      gens[i][k] = z.add(z.mul(x, gc), z.mul(y, gi));
    }
  }

  AffineSolveResult res;
  std::vector<Vec> kern;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (static_cast<long long>(i) != carrier) kern.emplace_back(gens[i].begin(), gens[i].begin() + cols);
  if (carrier >= 0) {
    Vec& cv = gens[carrier];
    const u32 lc = cv[cols];
    const u32 g = std::gcd(lc, n);
    Vec multiple(cols);
    for (int k = 0; k < cols; ++k) multiple[k] = z.mul(cv[k], n / g);
    kern.push_back(std::move(multiple));
    if (g == 1) {
      const u32 u = normalizing_unit(lc, n);
      Vec part(cols);
      for (int k = 0; k < cols; ++k) part[k] = z.mul(cv[k], u);
      res.particular = std::move(part);
    }
  }
  RowEchelon kh(cols, n);
  for (auto& k : kern) kh.insert(k);
  if (res.particular) res.particular = kh.reduce(*res.particular);
  res.kernel_basis = kh.rows();
  return res;
}

SmithResult smith_form(std::vector<Vec> a, int cols, u32 modulus) {
  const Zmod z(modulus);
  const int rows = static_cast<int>(a.size());
  SmithResult res;
  res.w.assign(cols, Vec(cols, 0));
  for (int i = 0; i < cols; ++i) res.w[i][i] = 1;
  auto& w = res.w;

  auto row_comb = [&](int r1, int r2, u32 a11, u32 a12, u32 a21, u32 a22) {
    for (int j = 0; j < cols; ++j) {
      const u32 x = a[r1][j], y = a[r2][j];
      a[r1][j] = z.add(z.mul(a11, x), z.mul(a12, y));
      a[r2][j] = z.add(z.mul(a21, x), z.mul(a22, y));
    }
  };
  // Column transform E on columns (c1, c2) given by new c1 = e11*c1 + e21*c2,
  // new c2 = e12*c1 + e22*c2; W is updated by E^-1 on rows (c1, c2).
  auto col_comb = [&](int c1, int c2, u32 e11, u32 e12, u32 e21, u32 e22, u32 i11, u32 i12, u32 i21,
                      u32 i22) {
    for (int i = 0; i < rows; ++i) {
      const u32 x = a[i][c1], y = a[i][c2];
      a[i][c1] = z.add(z.mul(e11, x), z.mul(e21, y));
      a[i][c2] = z.add(z.mul(e12, x), z.mul(e22, y));
    }
    for (int j = 0; j < cols; ++j) {
      const u32 x = w[c1][j], y = w[c2][j];
      w[c1][j] = z.add(z.mul(i11, x), z.mul(i12, y));
      w[c2][j] = z.add(z.mul(i21, x), z.mul(i22, y));
    }
  };

  int r = 0;
  const int lim = std::min(rows, cols);
  for (; r < lim; ++r) {
    int bi = -1, bj = -1;
    u32 best = modulus + 1;
    for (int i = r; i < rows; ++i)
      for (int j = r; j < cols; ++j)
        if (a[i][j]) {
          const u32 g = std::gcd(a[i][j], modulus);
          if (g < best) {
            best = g;
            bi = i;
            bj = j;
          }
        }
    if (bi < 0) break;
    std::swap(a[r], a[bi]);
    if (bj != r) {
      for (int i = 0; i < rows; ++i) std::swap(a[i][r], a[i][bj]);
      std::swap(w[r], w[bj]);
    }
    for (;;) {
      const u32 u = normalizing_unit(a[r][r], modulus);
      if (u != 1)
        for (int j = 0; j < cols; ++j) a[r][j] = z.mul(a[r][j], u);
      const u32 p = a[r][r];
      bool changed = false;
      for (int i = r + 1; i < rows && !changed; ++i) {
        const u32 x = a[i][r];
        if (!x) continue;
        if (x % p == 0) {
          for (int j = r; j < cols; ++j) a[i][j] = z.sub(a[i][j], z.mul(x / p, a[r][j]));
        } else {
          long long s, t;
          const long long g = ext_gcd(p, x, s, t);
          row_comb(r, i, z.from_int(s), z.from_int(t), z.from_int(x / g), z.from_int(-(long long)(p / g)));
          changed = true;
        }
      }
      if (changed) continue;
      for (int j = r + 1; j < cols && !changed; ++j) {
        const u32 x = a[r][j];
        if (!x) continue;
        if (x % p == 0) {
          const u32 q = x / p;
          col_comb(r, j, 1, z.neg(q), 0, 1, 1, q, 0, 1);
        } else {
          long long s, t;
          const long long g = ext_gcd(p, x, s, t);
          const u32 su = z.from_int(s), tu = z.from_int(t);
          const u32 ag = z.from_int(x / g), pg = z.from_int(p / g);
          // E = [[s, -x/g], [t, p/g]], E^-1 = [[p/g, x/g], [-t, s]]
          col_comb(r, j, su, z.neg(ag), tu, pg, pg, ag, z.neg(tu), su);
          changed = true;
        }
      }
      if (changed) continue;
      // The pivot must divide the whole remaining block.
      int bad = -1;
      for (int i = r + 1; i < rows && bad < 0; ++i)
        for (int j = r + 1; j < cols; ++j)
          if (a[i][j] % p) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = 0; j < cols; ++j) a[r][j] = z.add(a[r][j], a[bad][j]);
    }
  }
  res.diagonal.assign(cols, modulus);
  for (int i = 0; i < r; ++i) res.diagonal[i] = std::gcd(a[i][i], modulus) ? std::gcd(a[i][i], modulus) : modulus;
  return res;
}

QuotientPresentation quotient_presentation(const ModMatrix& zg, const ModMatrix& bg) {
  if (zg.modulus() != bg.modulus() || zg.cols() != bg.cols())
    fail_input("quotient_invariants: modulus or ambient dimension mismatch");
  const u32 n = zg.modulus();
  const int nz = zg.rows(), nb = bg.rows(), dim = zg.cols();
  auto zrows = zg.dense_rows();
  auto brows = bg.dense_rows();
  // Relations among the Z generators: left kernel of [Z; B], projected to Z.
  RowEchelon te(nz + nb, n);
  for (int j = 0; j < dim; ++j) {
    Vec col(nz + nb, 0);
    bool any = false;
    for (int i = 0; i < nz; ++i) any |= (col[i] = zrows[i][j]) != 0;
    for (int i = 0; i < nb; ++i) any |= (col[nz + i] = brows[i][j]) != 0;
    if (any) te.insert(std::move(col));
  }
  std::vector<Vec> rel;
  for (auto& k : te.kernel()) rel.emplace_back(k.begin(), k.begin() + nz);
  auto sm = smith_form(std::move(rel), nz, n);

  QuotientPresentation q;
  std::vector<std::pair<u32, Vec>> gens;
  for (int i = 0; i < nz; ++i)
    if (sm.diagonal[i] > 1) gens.emplace_back(sm.diagonal[i], sm.w[i]);
  // Smith order already gives a divisibility chain.
  for (auto& [d, v] : gens) {
    q.invariants.factors.push_back(d);
    q.generator_coefficients.push_back(v);
  }
  return q;
}

AbelianInvariants quotient_invariants(const ModMatrix& zg, const ModMatrix& bg) {
  return quotient_presentation(zg, bg).invariants;
}

}  // namespace f2c
