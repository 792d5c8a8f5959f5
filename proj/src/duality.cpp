#include "f2c/duality.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "f2c/errors.hpp"

namespace f2c {

namespace {

std::vector<int> positions(const Subgroup& s) {
  std::vector<int> pos(s.parent->order(), -1);
  for (std::size_t i = 0; i < s.elements.size(); ++i) pos[s.elements[i]] = static_cast<int>(i);
  return pos;
}

// f restricted to s1 -> s2, in the local indices of the subgroup groups.
Homomorphism restrict_hom(const Homomorphism& f, const Subgroup& s1, const GroupRef& g1, const Subgroup& s2,
                          const GroupRef& g2) {
  const auto pos = positions(s2);
  Homomorphism r{g1, g2, std::vector<int>(s1.elements.size())};
  for (std::size_t i = 0; i < s1.elements.size(); ++i) {
    const int img = pos[f(s1.elements[i])];
    if (img < 0) fail_invariant("restrict_hom: subgroup not mapped into target");
    r.image[i] = img;
  }
  return r;
}

constexpr u64 kMaxEnumeratedClasses = 1u << 16;

// Every element of the finite abelian group with the given invariant factors,
// in mixed-radix order (first coordinate fastest), zero first.
std::vector<std::vector<u64>> all_classes(const AbelianInvariants& inv) {
  const u64 total = inv.order();
  if (total > kMaxEnumeratedClasses) fail_budget("cohomology group too large to enumerate");
  std::vector<std::vector<u64>> out;
  out.reserve(total);
  std::vector<u64> c(inv.factors.size(), 0);
  for (u64 n = 0; n < total; ++n) {
    out.push_back(c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (++c[i] < inv.factors[i]) break;
      c[i] = 0;
    }
  }
  return out;
}

Cochain with_class(const Cochain& base, const CohomologyResult& h, const std::vector<u64>& coords) {
  Cochain out = base;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) out = combine(out, scale(h.generators[i], static_cast<long long>(coords[i])), 1);
  return out;
}

struct RestrictionTarget {
  Subgroup s;
  GroupRef sg;
  Cochain c;  // 3-cocycle on sg
};

// Finds 3-cocycles z on G whose restrictions match prescribed classes.
// H^3(G) and the restriction maps are computed on first use and cached.
class Lifter {
 public:
  Lifter(GroupRef g, const Budget& budget) : g_(std::move(g)), budget_(budget) {}

  std::optional<Cochain> lift(const std::vector<RestrictionTarget>& targets) {
    bool all_trivial = true;
    for (auto& t : targets)
      if (!trivialize(t.c, budget_)) {
        all_trivial = false;
        break;
      }
    if (all_trivial) return zero_cochain(g_, 3);

    if (!hg_) hg_ = cohomology(g_, 3, budget_);
    std::vector<u64> moduli, want;
    std::vector<std::vector<u64>> images(hg_->generators.size());
    for (auto& t : targets) {
      const Target& data = target(t.s, t.sg);
      for (u64 d : data.h.invariants.factors) moduli.push_back(d);
      for (u64 x : class_coordinates(data.h, t.c, budget_)) want.push_back(x);
      for (std::size_t j = 0; j < images.size(); ++j)
        images[j].insert(images[j].end(), data.images[j].begin(), data.images[j].end());
    }
    for (auto& coeff : all_classes(hg_->invariants)) {
      bool ok = true;
      for (std::size_t k = 0; k < moduli.size() && ok; ++k) {
        u64 acc = 0;
        for (std::size_t j = 0; j < coeff.size(); ++j) acc = (acc + coeff[j] * images[j][k]) % moduli[k];
        ok = acc == want[k];
      }
      if (ok) return with_class(zero_cochain(g_, 3), *hg_, coeff);
    }
    return std::nullopt;
  }

 private:
  struct Target {
    CohomologyResult h;
    std::vector<std::vector<u64>> images;  // images[j]: coordinates of gen_j restricted
  };

  const Target& target(const Subgroup& s, const GroupRef& sg) {
    auto it = cache_.find(s.elements);
    if (it != cache_.end()) return it->second;
    Target t{cohomology(sg, 3, budget_), {}};
    for (auto& gen : hg_->generators) t.images.push_back(class_coordinates(t.h, restrict_to(gen, s, sg), budget_));
    return cache_.emplace(s.elements, std::move(t)).first->second;
  }

  GroupRef g_;
  const Budget& budget_;
  std::optional<CohomologyResult> hg_;
  std::map<std::vector<int>, Target> cache_;
};

// A 3-cochain xi with d xi = f*pi2 - pi1, or nothing.
std::optional<Cochain> match_pi(const Cochain& pi1, const Cochain& pi2, const Homomorphism& f, const Budget& budget) {
  auto diff = combine(pullback(pi2, f), pi1, -1);
  if (diff.is_zero()) return zero_cochain(pi1.group(), 3);
  return trivialize(diff, budget);
}

// f*c2 - xi|_S1 - c1 as a cocycle on the first subgroup group.
Cochain side_defect(const Homomorphism& f, const Cochain& xi, const Subgroup& s1, const GroupRef& g1,
                    const Cochain& c1, const Subgroup& s2, const GroupRef& g2, const Cochain& c2) {
  auto pulled = pullback(c2, restrict_hom(f, s1, g1, s2, g2));
  return combine(combine(pulled, restrict_to(xi, s1, g1), -1), c1, -1);
}

void check_iso_budget(const GroupRef& g, const Budget& budget, const char* what) {
  if (g->order() > budget.max_iso_order)
    fail_budget(std::string(what) + ": group order " + std::to_string(g->order()) + " exceeds the automorphism budget " +
                std::to_string(budget.max_iso_order));
}

}  // namespace

// ---- fiber 2-functors -------------------------------------------------------

std::vector<FiberFunctorDatum> fiber_functors(const Presentation& p, const Budget& budget) {
  std::vector<FiberFunctorDatum> out;
  for (auto& k : complements(p.h, budget)) {
    budget.check_time("fiber_functors");
    auto kg = subgroup_group(k);
    auto base = trivialize(restrict_to(p.pi, k, kg), budget);
    if (!base) continue;
    auto h3 = cohomology(kg, 3, budget);
    for (auto& coords : all_classes(h3.invariants)) {
      FiberFunctorDatum d{k, kg, with_class(*base, h3, coords).reduced(), coords, {}};
      d.dual = make_presentation(p.g, k, p.pi, d.omega);
      out.push_back(std::move(d));
    }
  }
  return out;
}

bool fiber_equivalent(const Presentation& p, const FiberFunctorDatum& a, const FiberFunctorDatum& b,
                      const Budget& budget) {
  if (a.k.order() != b.k.order()) return false;
  check_iso_budget(p.g, budget, "fiber_equivalent");
  Lifter lifter(p.g, budget);
  bool found = false;
  for_each_isomorphism(
      p.g, p.g, {{p.h, p.h}, {a.k, b.k}},
      [&](const Homomorphism& f) {
        budget.check_time("fiber_equivalent");
        auto gamma = match_pi(p.pi, p.pi, f, budget);
        if (!gamma) return true;
        std::vector<RestrictionTarget> targets{
            {p.h, p.h_group, side_defect(f, *gamma, p.h, p.h_group, p.psi, p.h, p.h_group, p.psi)},
            {a.k, a.k_group, side_defect(f, *gamma, a.k, a.k_group, a.omega, b.k, b.k_group, b.omega)}};
        found = lifter.lift(targets).has_value();
        return !found;
      },
      budget);
  return found;
}

// ---- equivalence --------------------------------------------------------------

std::optional<EquivalenceWitness> equivalent(const Presentation& a, const Presentation& b, const Budget& budget) {
  if (a.g->order() != b.g->order() || a.h.order() != b.h.order()) return std::nullopt;
  check_iso_budget(a.g, budget, "equivalent");
  Lifter lifter(a.g, budget);
  std::optional<EquivalenceWitness> witness;
  for_each_isomorphism(
      a.g, b.g, {{a.h, b.h}},
      [&](const Homomorphism& f) {
        budget.check_time("equivalent");
        auto xi = match_pi(a.pi, b.pi, f, budget);
        if (!xi) return true;
        auto c = side_defect(f, *xi, a.h, a.h_group, a.psi, b.h, b.h_group, b.psi);
        auto z = lifter.lift({{a.h, a.h_group, c}});
        if (!z) return true;
        witness = EquivalenceWitness{f, combine(*xi, *z, 1).reduced()};
        return false;
      },
      budget);
  return witness;
}

bool check_witness(const Presentation& a, const Presentation& b, const EquivalenceWitness& w, const Budget& budget) {
  const auto& f = w.f;
  if (!same_group(f.source, a.g) || !same_group(f.target, b.g)) return false;
  if (!f.is_homomorphism() || !f.is_bijective()) return false;
  if (image_of(f, a.h) != b.h) return false;
  if (!(combine(pullback(b.pi, f), a.pi, -1) == coboundary(w.xi))) return false;
  auto c = side_defect(f, w.xi, a.h, a.h_group, a.psi, b.h, b.h_group, b.psi);
  return trivialize(c, budget).has_value();
}

// ---- Tambara-Yamagami -----------------------------------------------------------

WreathData wreath_of(const GroupRef& a) {
  WreathData d;
  d.w = wreath2_group(a);
  const int n = a->order();
  std::vector<int> first, base;
  for (int h = 0; h < n; ++h) first.push_back(h * n * 2);
  for (int x = 0; x < d.w->order(); x += 2) base.push_back(x);
  d.first = subgroup_from_elements(d.w, first);
  d.base = subgroup_from_elements(d.w, base);
  return d;
}

TYDefectReport ty_defect(const Presentation& p, const Budget& budget) {
  TYDefectReport r;
  const auto gr = universal_grading(p);
  r.graded = gr.quotient.group->order() == 2;
  if (!r.graded) return r;
  const auto& coset = gr.quotient.coset_of;
  const int plus = coset[0];

  std::vector<int> minus_reps;
  for (int rep : gr.representatives)
    if (coset[rep] != plus) minus_reps.push_back(rep);
  r.minus_connected = minus_reps.size() == 1;
  if (!minus_reps.empty()) r.minus_representative = minus_reps.front();

  r.exact_factorization = true;
  for (int g = 0; g < p.g->order() && r.exact_factorization; ++g)
    if (coset[g] != plus) r.exact_factorization = intersect(p.h, conjugate(p.h, g)).order() == 1;

  if (r.has_defect()) {
    const int f = r.minus_representative;
    r.defect_fusion = fuse(p, f, p.g->inv(f));
  }

  // With H normal in G_+, the group is H wr Z/2 and an isomorphism can be
  // found that sends H to the first factor.
  const auto& gplus = gr.normal_closure;
  const int n = p.h.order();
  if (r.has_defect() && p.g->order() == 2 * n * n && p.g->order() <= budget.max_iso_order) {
    bool normal_in_plus = true;
    for (int x : gplus.elements) {
      if (!normal_in_plus) break;
      for (int h : p.h.elements)
        if (!p.h.contains(p.g->conj(x, h))) {
          normal_in_plus = false;
          break;
        }
    }
    if (normal_in_plus) {
      auto wd = wreath_of(p.h_group);
      r.wreath_recognized = find_isomorphism(p.g, wd.w, {{p.h, wd.first}}, budget);
    }
  }
  return r;
}

Presentation build_2ty(const GroupRef& a, const Cochain& pi, const Budget& budget) {
  if (!a->is_abelian()) fail_input("build_2ty: A must be abelian");
  auto wd = wreath_of(a);
  if (!same_group(pi.group(), wd.w) || pi.degree() != 4)
    fail_input("build_2ty: pi must be a 4-cochain on A wr Z/2");
  if (!is_cocycle(pi)) fail_input("build_2ty: pi is not a cocycle");
  if (!trivialize(restrict_to(pi, wd.base, subgroup_group(wd.base)), budget))
    fail_input("build_2ty: pi is not trivializable on A (+) A");
  auto fg = subgroup_group(wd.first);
  auto psi = trivialize(restrict_to(pi, wd.first, fg), budget);
  ensure(psi.has_value(), "build_2ty: restriction to A (+) 0 is not trivializable");
  return make_presentation(wd.w, wd.first, pi, *psi);
}

TYClassification classify_2ty(const GroupRef& a, const Budget& budget) {
  if (!a->is_abelian()) fail_input("classify_2ty: A must be abelian");
  auto wd = wreath_of(a);
  check_iso_budget(wd.w, budget, "classify_2ty");
  TYClassification out;
  auto h4 = cohomology(wd.w, 4, budget);
  out.h4 = h4.invariants;
  auto bg = subgroup_group(wd.base);

  std::vector<std::vector<u64>> kernel;
  std::vector<Cochain> reps;
  for (auto& coords : all_classes(h4.invariants)) {
    budget.check_time("classify_2ty");
    auto pi = with_class(zero_cochain(wd.w, 4), h4, coords);
    if (trivialize(restrict_to(pi, wd.base, bg), budget)) {
      kernel.push_back(coords);
      reps.push_back(pi);
    }
  }
  out.kernel_order = kernel.size();

  std::vector<int> parent(kernel.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::vector<u64>, int> index;
  for (std::size_t i = 0; i < kernel.size(); ++i) index[kernel[i]] = static_cast<int>(i);
  for_each_isomorphism(
      wd.w, wd.w, {{wd.first, wd.first}},
      [&](const Homomorphism& f) {
        budget.check_time("classify_2ty");
        for (std::size_t i = 0; i < reps.size(); ++i) {
          auto it = index.find(class_coordinates(h4, pullback(reps[i], f), budget));
          ensure(it != index.end(), "classify_2ty: automorphism left the restriction kernel");
          int x = find(static_cast<int>(i)), y = find(it->second);
          if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }
        return true;
      },
      budget);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) out.classes.push_back({reps[i].reduced(), kernel[i]});
  return out;
}

std::vector<Subgroup> normal_abelian_complements(const Presentation& p, const Budget& budget) {
  std::vector<Subgroup> out;
  const int want = p.g->order() / p.h.order();
  for (auto& n : subgroups(p.g, std::nullopt, budget))
    if (n.order() == want && is_normal(n) && intersect(n, p.h).order() == 1 && subgroup_group(n)->is_abelian())
      out.push_back(n);
  return out;
}

// ---- finite 2-groups -----------------------------------------------------------

int TwoGroupData::beta_at(int h1, int h2, int h3) const {
  const int n = h->order();
  return beta[(static_cast<std::size_t>(h1) * n + h2) * n + h3];
}

std::vector<int> twisted_coboundary_defect(const TwoGroupData& t) {
  const FiniteGroup& H = *t.h;
  const FiniteGroup& A = *t.a;
  const int n = H.order();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) * n * n * n);
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2)
      for (int h3 = 0; h3 < n; ++h3)
        for (int h4 = 0; h4 < n; ++h4) {
          int v = t.rho[h1][t.beta_at(h2, h3, h4)];
          v = A.mul(v, A.inv(t.beta_at(H.mul(h1, h2), h3, h4)));
          v = A.mul(v, t.beta_at(h1, H.mul(h2, h3), h4));
          v = A.mul(v, A.inv(t.beta_at(h1, h2, H.mul(h3, h4))));
          v = A.mul(v, t.beta_at(h1, h2, h3));
          out.push_back(v);
        }
  return out;
}

void validate_two_group(const TwoGroupData& t) {
  if (!t.h || !t.a) fail_input("2-group: missing groups");
  const FiniteGroup& H = *t.h;
  const FiniteGroup& A = *t.a;
  if (!A.is_abelian()) fail_input("2-group: A must be abelian");
  const int n = H.order(), m = A.order();
  if (static_cast<int>(t.rho.size()) != n) fail_input("2-group: action must list one automorphism per element of H");
  for (int h = 0; h < n; ++h) {
    const auto& r = t.rho[h];
    if (static_cast<int>(r.size()) != m) fail_input("2-group: action[" + std::to_string(h) + "] has the wrong length");
    std::vector<bool> seen(m, false);
    for (int x : r) {
      if (x < 0 || x >= m || seen[x]) fail_input("2-group: action[" + std::to_string(h) + "] is not a bijection");
      seen[x] = true;
    }
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (r[A.mul(x, y)] != A.mul(r[x], r[y]))
          fail_input("2-group: action[" + std::to_string(h) + "] is not a homomorphism");
  }
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2)
      for (int x = 0; x < m; ++x)
        if (t.rho[H.mul(h1, h2)][x] != t.rho[h1][t.rho[h2][x]])
          fail_input("2-group: action is not a homomorphism H -> Aut(A)");
  if (t.beta.size() != static_cast<std::size_t>(n) * n * n) fail_input("2-group: beta has the wrong size");
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2)
      for (int h3 = 0; h3 < n; ++h3) {
        const int v = t.beta_at(h1, h2, h3);
        if (v < 0 || v >= m) fail_input("2-group: beta value out of range");
        if ((h1 == 0 || h2 == 0 || h3 == 0) && v != 0) fail_input("2-group: beta is not normalized");
      }
  auto d = twisted_coboundary_defect(t);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) {
      std::vector<int> tup(4);
      std::size_t k = i;
      for (int j = 3; j >= 0; --j) {
        tup[j] = static_cast<int>(k % n);
        k /= n;
      }
      fail_input("2-group: beta is not a twisted cocycle at (" + std::to_string(tup[0]) + "," +
                 std::to_string(tup[1]) + "," + std::to_string(tup[2]) + "," + std::to_string(tup[3]) + ")");
    }
}

CharacterGroup characters(const GroupRef& a) {
  if (!a->is_abelian()) fail_input("characters: group must be abelian");
  const FiniteGroup& A = *a;
  const int m = A.order();
  int e = 1;
  for (int x = 0; x < m; ++x) e = std::lcm(e, A.element_order(x));
  const auto gens = generators_of(whole_group(a));

  std::set<std::vector<int>> found;
  std::vector<int> assign(gens.size(), 0);
  for (;;) {
    // Extend the assignment on generators by breadth-first products.
    std::vector<int> val(m, -1);
    val[0] = 0;
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      const int x = queue[q];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int y = A.mul(x, gens[i]);
        const int v = (val[x] + assign[i]) % e;
        if (val[y] < 0) {
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) found.insert(val);
    std::size_t i = 0;
    while (i < assign.size() && ++assign[i] == e) assign[i++] = 0;
    if (i == assign.size()) break;
  }
  ensure(static_cast<int>(found.size()) == m, "characters: dual group has the wrong order");

  CharacterGroup c;
  c.exponent = e;
  c.values.assign(found.begin(), found.end());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[c.values[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> s(m);
      for (int x = 0; x < m; ++x) s[x] = (c.values[i][x] + c.values[j][x]) % e;
      table[static_cast<std::size_t>(i) * m + j] = index.at(s);
    }
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back("chi" + std::to_string(i));
  c.group = FiniteGroup::from_table(m, std::move(table), std::move(labels));
  return c;
}

namespace {

// act[h][alpha] = alpha∘rho(h)
std::vector<std::vector<int>> right_action(const TwoGroupData& t, const CharacterGroup& dual) {
  const int n = t.h->order(), m = t.a->order();
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[dual.values[i]] = i;
  std::vector<std::vector<int>> act(n, std::vector<int>(m));
  for (int h = 0; h < n; ++h)
    for (int al = 0; al < m; ++al) {
      std::vector<int> v(m);
      for (int x = 0; x < m; ++x) v[x] = dual.values[al][t.rho[h][x]];
      act[h][al] = index.at(v);
    }
  return act;
}

}  // namespace

TwoGroupPi two_group_pi(const TwoGroupData& t) {
  validate_two_group(t);
  TwoGroupPi out;
  out.dual = characters(t.a);
  const auto act = right_action(t, out.dual);
  const FiniteGroup& H = *t.h;
  const FiniteGroup& D = *out.dual.group;
  const int n = H.order(), m = D.order();

  // (h1, a1)(h2, a2) = (h1 h2, (a1∘rho(h2)) + a2)
  std::vector<int> table(static_cast<std::size_t>(n * m) * (n * m));
  std::vector<std::string> labels(n * m);
  for (int h1 = 0; h1 < n; ++h1)
    for (int a1 = 0; a1 < m; ++a1) {
      const int x = h1 * m + a1;
      labels[x] = "(" + H.label(h1) + "," + D.label(a1) + ")";
      for (int h2 = 0; h2 < n; ++h2)
        for (int a2 = 0; a2 < m; ++a2)
          table[static_cast<std::size_t>(x) * (n * m) + h2 * m + a2] = H.mul(h1, h2) * m + D.mul(act[h2][a1], a2);
    }
  out.group = FiniteGroup::from_table(n * m, std::move(table), std::move(labels),
                                      nlohmann::json{{"construction", "h-ltimes-dual"}});

  const u64 e = static_cast<u64>(out.dual.exponent);
  Cochain pi(out.group, 4, std::max<u64>(e, 1));
  for (std::size_t i = 0; i < pi.size(); ++i) {
    auto x = pi.tuple_at(i);
    const int alpha1 = x[0] % m;
    const int b = t.beta_at(x[1] / m, x[2] / m, x[3] / m);
    pi.set_num_at(i, out.dual.values[alpha1][b]);
  }
  ensure(is_cocycle(pi), "two_group_pi: pi is not a cocycle");
  for (std::size_t i = 0; i < pi.size(); ++i) {
    auto x = pi.tuple_at(i);
    if (x[0] % m == 0 || x[1] / m == 0 || x[2] / m == 0 || x[3] / m == 0)
      ensure(pi.num_at(i) == 0, "two_group_pi: pi does not vanish where it must");
  }
  out.pi = pi.reduced();
  return out;
}

FootnoteIso footnote_iso(const TwoGroupData& t, const TwoGroupPi& tp) {
  const auto act = right_action(t, tp.dual);
  const FiniteGroup& H = *t.h;
  const int n = H.order(), m = tp.dual.group->order();
  // phi_h(alpha) = alpha∘rho(h^-1)
  std::vector<std::vector<int>> action(n, std::vector<int>(m));
  for (int h = 0; h < n; ++h)
    for (int al = 0; al < m; ++al) action[h][al] = act[H.inv(h)][al];
  FootnoteIso fi;
  fi.target = semidirect_group(tp.dual.group, t.h, action);
  fi.iso = Homomorphism{tp.group, fi.target, std::vector<int>(n * m)};
  for (int h = 0; h < n; ++h)
    for (int al = 0; al < m; ++al) fi.iso.image[h * m + al] = action[h][al] * n + h;
  ensure(fi.iso.is_homomorphism() && fi.iso.is_bijective(), "footnote_iso: map is not an isomorphism");
  return fi;
}

int TwoRepDecomposition::total_simples() const {
  int t = 0;
  for (auto& c : components) t += c.census.total();
  return t;
}

TwoRepDecomposition two_rep_decomposition(const TwoGroupData& t, const Budget& budget) {
  const auto tp = two_group_pi(t);
  const auto fi = footnote_iso(t, tp);
  const FiniteGroup& H = *t.h;
  const int n = H.order(), m = tp.dual.group->order();

  std::vector<int> h_in_target(n);
  std::iota(h_in_target.begin(), h_in_target.end(), 0);  // (0, h) has index h
  auto hsub = subgroup_from_elements(fi.target, h_in_target);
  TwoRepDecomposition out;
  out.presentation =
      make_presentation(fi.target, hsub, pullback(tp.pi, inverse_iso(fi.iso)), zero_cochain(subgroup_group(hsub), 3));
  ensure(validate(out.presentation).valid(), "two_rep_decomposition: transported presentation is invalid");
  const auto comps = components(out.presentation, std::nullopt, budget);

  const auto act = right_action(t, tp.dual);
  const u64 e = static_cast<u64>(tp.dual.exponent);
  std::vector<bool> seen(m, false);
  for (int al = 0; al < m; ++al) {
    if (seen[al]) continue;
    TwoRepComponent c;
    c.alpha = al;
    std::vector<int> stab;
    for (int h = 0; h < n; ++h) {
      const int img = act[H.inv(h)][al];
      if (!seen[img]) {
        seen[img] = true;
        c.orbit.push_back(img);
      }
      if (img == al) stab.push_back(h);
    }
    std::sort(c.orbit.begin(), c.orbit.end());
    c.stabilizer = subgroup_from_elements(t.h, stab);
    c.stabilizer_group = subgroup_group(c.stabilizer);
    Cochain co(c.stabilizer_group, 3, std::max<u64>(e, 1));
    for (std::size_t i = 0; i < co.size(); ++i) {
      auto x = co.tuple_at(i);
      co.set_num_at(i, tp.dual.values[al][t.beta_at(stab[x[0]], stab[x[1]], stab[x[2]])]);
    }
    c.cocycle = co.reduced();
    c.census = simple_census(c.stabilizer_group, c.cocycle, budget);
    out.components.push_back(std::move(c));
  }

  if (comps.size() != out.components.size())
    fail_invariant("two_rep_decomposition: " + std::to_string(out.components.size()) + " orbits but " +
                   std::to_string(comps.size()) + " components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& mine = out.components[i];
    const auto& theirs = comps[i];
    const std::string where = "two_rep_decomposition: component " + std::to_string(i);
    if (theirs.representative != mine.alpha * n) fail_invariant(where + " has a different representative");
    if (theirs.stabilizer.elements != mine.stabilizer.elements) fail_invariant(where + " has a different stabilizer");
    if (!same_class(theirs.xi, mine.cocycle, budget)) fail_invariant(where + " has a different 3-cocycle class");
    if (theirs.census.total() != mine.census.total()) fail_invariant(where + " has a different census");
  }
  return out;
}

}  // namespace f2c
