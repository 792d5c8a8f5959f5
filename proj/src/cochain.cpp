#include "f2c/cochain.hpp"

#include <algorithm>
#include <numeric>

#include "f2c/errors.hpp"

namespace f2c {

namespace {

using u64 = std::uint64_t;

u64 mod_ll(long long x, u64 n) {
  long long r = x % static_cast<long long>(n);
  return static_cast<u64>(r < 0 ? r + static_cast<long long>(n) : r);
}

u64 checked_lcm(u64 a, u64 b) {
  const u64 l = std::lcm(a, b);
  if (l > kMaxDenominator) fail_budget("cochain denominator " + std::to_string(l) + " exceeds supported range");
  return l;
}

// Walks all tuples of non-identity elements in index order.
template <class F>
void for_each_tuple(int order, int n, F&& f) {
  const std::size_t total = tuple_count(order, n);
  std::vector<int> t(n, 1);
  for (std::size_t idx = 0; idx < total; ++idx) {
    f(t.data(), idx);
    for (int i = n - 1; i >= 0; --i) {
      if (++t[i] < order) break;
      t[i] = 1;
    }
  }
}

long long sign_of(int k) { return (k % 2) ? -1 : 1; }

// Faces of the bar differential on an (n+1)-tuple: calls emit(face_tuple, sign)
// for every face whose entries are all non-identity.
template <class F>
void for_each_face(const FiniteGroup& g, const int* t, int n, F&& emit) {
  int buf[32];
  emit(t + 1, 1LL);
  for (int i = 1; i <= n; ++i) {
    const int p = g.mul(t[i - 1], t[i]);
    if (p == 0) continue;
    int k = 0;
    for (int j = 0; j < i - 1; ++j) buf[k++] = t[j];
    buf[k++] = p;
    for (int j = i + 1; j <= n; ++j) buf[k++] = t[j];
    emit(static_cast<const int*>(buf), sign_of(i));
  }
  emit(t, sign_of(n + 1));
}

u64 coboundary_num(const Cochain& phi, const int* t) {
  const u64 den = phi.denominator();
  long long acc = 0;
  for_each_face(*phi.group(), t, phi.degree(), [&](const int* face, long long s) {
    acc += s * static_cast<long long>(phi.num_at(phi.index_of(face)));
  });
  return mod_ll(acc, den);
}

}  // namespace

// ---- QZ ------------------------------------------------------------------

QZ QZ::make(long long num, u64 den) {
  if (den == 0) fail_input("Q/Z value with zero denominator");
  u64 n = mod_ll(num, den);
  const u64 g = std::gcd(n, den);
  return n == 0 ? QZ{0, 1} : QZ{n / g, den / g};
}

QZ QZ::operator+(const QZ& o) const {
  const u64 l = std::lcm(den, o.den);
  return make(static_cast<long long>(num * (l / den) + o.num * (l / o.den)), l);
}

QZ QZ::operator-() const { return make(-static_cast<long long>(num), den); }
QZ QZ::operator-(const QZ& o) const { return *this + (-o); }

std::string QZ::str() const { return num == 0 ? "0" : std::to_string(num) + "/" + std::to_string(den); }

// ---- Cochain -------------------------------------------------------------

std::size_t tuple_count(int order, int n) {
  if (n < 0) fail_input("negative cochain degree");
  std::size_t c = 1;
  for (int i = 0; i < n; ++i) {
    c *= static_cast<std::size_t>(order - 1);
    if (c > (std::size_t{1} << 28))
      fail_budget("cochain space of degree " + std::to_string(n) + " on a group of order " +
                  std::to_string(order) + " is too large");
  }
  return c;
}

Cochain::Cochain(GroupRef g, int degree, u64 denominator)
    : g_(std::move(g)), n_(degree), den_(denominator) {
  if (!g_) fail_input("cochain without a group");
  if (degree > 30) fail_input("cochain degree too large");
  if (den_ == 0 || den_ > kMaxDenominator) fail_input("cochain denominator out of range");
  nums_.assign(tuple_count(g_->order(), degree), 0);
}

std::size_t Cochain::index_of(const int* t) const {
  const std::size_t b = static_cast<std::size_t>(g_->order() - 1);
  std::size_t idx = 0;
  for (int i = 0; i < n_; ++i) idx = idx * b + static_cast<std::size_t>(t[i] - 1);
  return idx;
}

std::vector<int> Cochain::tuple_at(std::size_t index) const {
  const std::size_t b = static_cast<std::size_t>(g_->order() - 1);
  std::vector<int> t(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    t[i] = static_cast<int>(index % b) + 1;
    index /= b;
  }
  return t;
}

u64 Cochain::num(const int* t) const {
  for (int i = 0; i < n_; ++i)
    if (t[i] == 0) return 0;
  return nums_[index_of(t)];
}

QZ Cochain::at(const std::vector<int>& t) const {
  if (static_cast<int>(t.size()) != n_) fail_input("tuple length does not match cochain degree");
  return QZ::make(static_cast<long long>(num(t.data())), den_);
}

void Cochain::set(const std::vector<int>& t, const QZ& v) {
  if (den_ % v.den) fail_input("value " + v.str() + " does not fit denominator " + std::to_string(den_));
  set_num(t, static_cast<long long>(v.num * (den_ / v.den)));
}

void Cochain::set_num(const std::vector<int>& t, long long num) {
  if (static_cast<int>(t.size()) != n_) fail_input("tuple length does not match cochain degree");
  for (int x : t) {
    if (x < 0 || x >= g_->order()) fail_input("tuple entry out of range");
    if (x == 0) fail_input("normalized cochains take no value on tuples containing the identity");
  }
  set_num_at(index_of(t.data()), num);
}

void Cochain::set_num_at(std::size_t index, long long num) {
  nums_.at(index) = static_cast<std::uint32_t>(mod_ll(num, den_));
}

Cochain Cochain::at_level(u64 level) const {
  if (level % den_) fail_invariant("at_level: new denominator is not a multiple of the old one");
  Cochain c(g_, n_, level);
  const u64 k = level / den_;
  for (std::size_t i = 0; i < nums_.size(); ++i) c.nums_[i] = static_cast<std::uint32_t>(nums_[i] * k);
  return c;
}

Cochain Cochain::reduced() const {
  u64 g = den_;
  for (auto x : nums_) {
    g = std::gcd(g, static_cast<u64>(x));
    if (g == 1) return *this;
  }
  Cochain c(g_, n_, den_ / g);
  for (std::size_t i = 0; i < nums_.size(); ++i) c.nums_[i] = static_cast<std::uint32_t>(nums_[i] / g);
  return c;
}

Vec Cochain::vector_at_level(u64 level) const {
  if (level % den_ || level > kMaxModulus) fail_invariant("vector_at_level: bad level");
  const u64 k = level / den_;
  Vec v(nums_.size());
  for (std::size_t i = 0; i < nums_.size(); ++i) v[i] = static_cast<u32>(nums_[i] * k);
  return v;
}

Cochain Cochain::from_vector(GroupRef g, int degree, const Vec& v, u64 level) {
  Cochain c(std::move(g), degree, level);
  if (v.size() != c.nums_.size()) fail_invariant("from_vector: length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) c.nums_[i] = static_cast<std::uint32_t>(v[i] % level);
  return c.reduced();
}

bool Cochain::is_zero() const {
  return std::all_of(nums_.begin(), nums_.end(), [](std::uint32_t x) { return x == 0; });
}

bool Cochain::operator==(const Cochain& o) const {
  if (n_ != o.n_ || !same_group(g_, o.g_)) return false;
  const u64 l = std::lcm(den_, o.den_);
  const u64 ka = l / den_, kb = l / o.den_;
  for (std::size_t i = 0; i < nums_.size(); ++i)
    if (nums_[i] * ka != o.nums_[i] * kb) return false;
  return true;
}

// ---- operations ------------------------------------------------------------

Cochain zero_cochain(const GroupRef& g, int degree) { return Cochain(g, degree, 1); }

Cochain coboundary(const Cochain& phi) {
  Cochain out(phi.group(), phi.degree() + 1, phi.denominator());
  if (phi.is_zero()) return out;
  for_each_tuple(phi.group()->order(), phi.degree() + 1, [&](const int* t, std::size_t idx) {
    out.set_num_at(idx, static_cast<long long>(coboundary_num(phi, t)));
  });
  return out;
}

bool is_cocycle(const Cochain& phi) {
  if (phi.is_zero()) return true;
  const int order = phi.group()->order();
  const int n = phi.degree() + 1;
  const std::size_t total = tuple_count(order, n);
  std::vector<int> t(n, 1);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (coboundary_num(phi, t.data())) return false;
    for (int i = n - 1; i >= 0; --i) {
      if (++t[i] < order) break;
      t[i] = 1;
    }
  }
  return true;
}

Cochain pullback(const Cochain& phi, const Homomorphism& f) {
  if (!same_group(f.target, phi.group())) fail_input("pullback: homomorphism does not land in the cochain's group");
  const int n = phi.degree();
  Cochain out(f.source, n, phi.denominator());
  if (phi.is_zero()) return out;
  std::vector<int> img(n);
  for_each_tuple(f.source->order(), n, [&](const int* t, std::size_t idx) {
    for (int i = 0; i < n; ++i) img[i] = f(t[i]);
    out.set_num_at(idx, static_cast<long long>(phi.num(img.data())));
  });
  return out;
}

Cochain restrict_to(const Cochain& phi, const Subgroup& s, const GroupRef& sub_group) {
  return pullback(phi, inclusion_hom(s, sub_group));
}

Cochain combine(const Cochain& a, const Cochain& b, int sign) {
  if (a.degree() != b.degree()) fail_input("combine: degree mismatch");
  if (!same_group(a.group(), b.group())) fail_input("combine: cochains live on different groups");
  if (sign != 1 && sign != -1) fail_input("combine: sign must be +1 or -1");
  const u64 l = checked_lcm(a.denominator(), b.denominator());
  Cochain out(a.group(), a.degree(), l);
  const u64 ka = l / a.denominator(), kb = l / b.denominator();
  for (std::size_t i = 0; i < out.size(); ++i)
    out.set_num_at(i, static_cast<long long>(a.num_at(i) * ka) + sign * static_cast<long long>(b.num_at(i) * kb));
  return out.reduced();
}

Cochain scale(const Cochain& a, long long k) {
  Cochain out(a.group(), a.degree(), a.denominator());
  const long long kk = static_cast<long long>(mod_ll(k, a.denominator()));
  for (std::size_t i = 0; i < out.size(); ++i) out.set_num_at(i, static_cast<long long>(a.num_at(i)) * kk);
  return out.reduced();
}

ModMatrix coboundary_matrix(const GroupRef& g, int n, u32 modulus) {
  const int order = g->order();
  const std::size_t rows = tuple_count(order, n + 1);
  const std::size_t cols = tuple_count(order, n);
  ModMatrix m(static_cast<int>(rows), static_cast<int>(cols), modulus);
  const std::size_t b = static_cast<std::size_t>(order - 1);
  for_each_tuple(order, n + 1, [&](const int* t, std::size_t r) {
    for_each_face(*g, t, n, [&](const int* face, long long s) {
      std::size_t idx = 0;
      for (int i = 0; i < n; ++i) idx = idx * b + static_cast<std::size_t>(face[i] - 1);
      m.add(static_cast<int>(r), static_cast<int>(idx), s);
    });
  });
  m.finalize();
  return m;
}

std::optional<Cochain> trivialize(const Cochain& phi, const Budget& budget) {
  if (phi.degree() == 0) fail_input("trivialize: degree 0 cochains have no primitive");
  if (!is_cocycle(phi)) fail_input("trivialize: input is not a cocycle");
  const GroupRef& g = phi.group();
  if (phi.is_zero()) return zero_cochain(g, phi.degree() - 1);
  const u64 level = phi.denominator() * static_cast<u64>(g->order());
  if (level > kMaxModulus)
    fail_budget("trivialize: working denominator " + std::to_string(level) + " exceeds " +
                std::to_string(kMaxModulus));
  check_matrix_budget(tuple_count(g->order(), phi.degree() - 1) + 1, budget, "trivialize");
  auto d = coboundary_matrix(g, phi.degree() - 1, static_cast<u32>(level));
  auto sol = solve_affine(d, phi.vector_at_level(level), budget);
  if (!sol.particular) return std::nullopt;
  auto psi = Cochain::from_vector(g, phi.degree() - 1, *sol.particular, level);
  if (!(coboundary(psi) == phi)) fail_invariant("trivialize: solution does not satisfy d psi = phi");
  return psi;
}

bool same_class(const Cochain& a, const Cochain& b, const Budget& budget) {
  return trivialize(combine(a, b, -1), budget).has_value();
}

CohomologyResult cohomology(const GroupRef& g, int n, const Budget& budget) {
  if (n < 1) fail_input("cohomology: degree must be at least 1");
  CohomologyResult res;
  const u64 order = static_cast<u64>(g->order());
  const std::size_t dim = tuple_count(g->order(), n);
  if (order == 1 || dim == 0) return res;
  const u64 big = order * order;
  if (big > kMaxModulus) fail_budget("cohomology: group order too large for exact elimination");
  check_matrix_budget(dim, budget, "cohomology");
  check_matrix_budget(tuple_count(g->order(), n - 1) + 1, budget, "cohomology");

  // Cocycles with values in (1/|G|)Z/Z.
  auto zgens = kernel_basis(coboundary_matrix(g, n, static_cast<u32>(order)), budget);
  // Coboundaries with values in (1/|G|^2)Z/Z.
  auto bmat = transpose(coboundary_matrix(g, n - 1, static_cast<u32>(big)));

  RowEchelon span(static_cast<int>(dim), static_cast<u32>(big));
  for (auto& r : bmat.dense_rows()) span.insert(std::move(r));
  std::vector<Vec> chosen, chosen_scaled;
  for (auto& z : zgens) {
    budget.check_time("cohomology");
    Vec v(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) v[i] = static_cast<u32>(z[i] * order);
    if (span.contains(v)) continue;
    span.insert(v);
    chosen.push_back(z);
    chosen_scaled.push_back(std::move(v));
  }
  if (chosen.empty()) return res;

  auto pres = quotient_presentation(
      ModMatrix::from_dense(chosen_scaled, static_cast<int>(dim), static_cast<u32>(big)), bmat);
  res.invariants = pres.invariants;
  for (auto& coeffs : pres.generator_coefficients) {
    Vec v(dim, 0);
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      const u64 c = coeffs[j] % order;
      if (!c) continue;
      for (std::size_t i = 0; i < dim; ++i) v[i] = static_cast<u32>((v[i] + c * chosen[j][i]) % order);
    }
    res.generators.push_back(Cochain::from_vector(g, n, v, order));
  }
  return res;
}

std::vector<u64> class_coordinates(const CohomologyResult& h, const Cochain& phi, const Budget& budget) {
  const std::size_t k = h.generators.size();
  if (k == 0) return {};
  const GroupRef& g = h.generators[0].group();
  const int n = h.generators[0].degree();
  if (!same_group(g, phi.group()) || phi.degree() != n) fail_input("class_coordinates: cochain mismatch");
  u64 base = phi.denominator();
  for (auto& gen : h.generators) base = std::lcm(base, gen.denominator());
  const u64 level = base * static_cast<u64>(g->order());
  if (level > kMaxModulus) fail_budget("class_coordinates: working denominator too large");
  const std::size_t rows = phi.size();
  const std::size_t prev = tuple_count(g->order(), n - 1);
  check_matrix_budget(k + prev, budget, "class_coordinates");

  ModMatrix m(static_cast<int>(rows), static_cast<int>(k + prev), static_cast<u32>(level));
  for (std::size_t i = 0; i < k; ++i) {
    auto v = h.generators[i].vector_at_level(level);
    for (std::size_t r = 0; r < rows; ++r)
      if (v[r]) m.add(static_cast<int>(r), static_cast<int>(i), v[r]);
  }
  const auto d = coboundary_matrix(g, n - 1, static_cast<u32>(level));
  for (auto& e : d.entries())
    m.add(e.row, static_cast<int>(k) + e.col, e.value);
  m.finalize();
  auto sol = solve_affine(m, phi.vector_at_level(level), budget);
  if (!sol.particular) fail_invariant("class_coordinates: class is not spanned by the cohomology generators");
  std::vector<u64> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = (*sol.particular)[i] % h.invariants.factors[i];
  return c;
}

// ---- JSON ------------------------------------------------------------------

Cochain cochain_from_json(const nlohmann::json& j, const GroupRef& g, int degree, const std::vector<int>* relabel) {
  if (j.is_string()) {
    if (j.get<std::string>() != "trivial") fail_input("cochain: unknown shorthand \"" + j.get<std::string>() + "\"");
    return zero_cochain(g, degree);
  }
  if (!j.is_object()) fail_input("cochain: expected an object or \"trivial\"");
  if (j.contains("degree") && (!j["degree"].is_number_integer() || j["degree"].get<int>() != degree))
    fail_input("cochain: expected degree " + std::to_string(degree));
  u64 den = 1;
  if (j.contains("denominator")) {
    if (!j["denominator"].is_number_integer() || j["denominator"].get<long long>() <= 0 ||
        j["denominator"].get<long long>() > static_cast<long long>(kMaxDenominator))
      fail_input("cochain: \"denominator\" must be a positive integer");
    den = j["denominator"].get<u64>();
  }
  Cochain c(g, degree, den);
  if (!j.contains("entries")) return c;
  if (!j["entries"].is_array()) fail_input("cochain: \"entries\" must be an array");
  std::vector<char> seen(c.size(), 0);
  int pos = 0;
  for (auto& e : j["entries"]) {
    const std::string where = "cochain entries[" + std::to_string(pos++) + "]";
    if (!e.is_object() || !e.contains("tuple") || !e.contains("num") || !e["tuple"].is_array() ||
        !e["num"].is_number_integer())
      fail_input(where + ": expected {\"tuple\": [...], \"num\": integer}");
    if (static_cast<int>(e["tuple"].size()) != degree) fail_input(where + ": tuple has wrong length");
    std::vector<int> t;
    for (auto& x : e["tuple"]) {
      if (!x.is_number_integer()) fail_input(where + ": tuple entries must be integers");
      int v = x.get<int>();
      if (relabel) {
        if (v < 0 || v >= static_cast<int>(relabel->size()) || (*relabel)[v] < 0)
          fail_input(where + ": element " + std::to_string(v) + " is not in the cochain's group");
        v = (*relabel)[v];
      } else if (v < 0 || v >= g->order()) {
        fail_input(where + ": element " + std::to_string(v) + " out of range");
      }
      if (v == 0) fail_input(where + ": tuple contains the identity; cochains must be normalized");
      t.push_back(v);
    }
    const std::size_t idx = c.index_of(t.data());
    if (seen[idx]) fail_input(where + ": duplicate tuple");
    seen[idx] = 1;
    c.set_num_at(idx, e["num"].get<long long>());
  }
  return c;
}

nlohmann::json cochain_to_json(const Cochain& raw, const std::vector<int>* label_map) {
  const Cochain c = raw.reduced();
  nlohmann::json j;
  j["degree"] = c.degree();
  j["denominator"] = c.denominator();
  auto entries = nlohmann::json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c.num_at(i)) continue;
    auto t = c.tuple_at(i);
    if (label_map)
      for (auto& x : t) x = (*label_map)[x];
    entries.push_back({{"tuple", t}, {"num", c.num_at(i)}});
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace f2c
