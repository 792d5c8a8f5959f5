#include "f2c/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "f2c/errors.hpp"

namespace f2c {

GroupRef FiniteGroup::from_table(int order, std::vector<int> table, std::vector<std::string> labels,
                                 nlohmann::json provenance) {
  if (order < 1) fail_input("group order must be positive");
  const std::size_t n = static_cast<std::size_t>(order);
  if (table.size() != n * n) fail_input("multiplication table has wrong size");
  for (int v : table)
    if (v < 0 || v >= order) fail_input("multiplication table entry out of range");
  for (std::size_t x = 0; x < n; ++x)
    if (table[x] != static_cast<int>(x) || table[x * n] != static_cast<int>(x))
      fail_input("element 0 is not the identity");

  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int ab = at(a, b);
      for (int c = 0; c < order; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          fail_input("table is not associative at (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ")");
    }

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->n_ = order;
  g->inverse_.assign(n, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (at(a, b) == 0) {
        g->inverse_[a] = b;
        break;
      }
    if (g->inverse_[a] < 0 || at(g->inverse_[a], a) != 0)
      fail_input("element " + std::to_string(a) + " has no two-sided inverse");
  }
  g->table_ = std::move(table);

  if (labels.empty()) {
    labels.reserve(n);
    for (int a = 0; a < order; ++a) labels.push_back(std::to_string(a));
  }
  if (labels.size() != n) fail_input("label list has wrong length");
  g->labels_ = std::move(labels);
  g->provenance_ = std::move(provenance);

  g->elem_order_.assign(n, 1);
  for (int a = 1; a < order; ++a) {
    int k = 1, x = a;
    while (x != 0) {
      x = g->mul(x, a);
      ++k;
    }
    g->elem_order_[a] = k;
  }
  g->class_size_.assign(n, 0);
  std::vector<int> cls(n, -1);
  for (int a = 0; a < order; ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> members;
    for (int h = 0; h < order; ++h) {
      const int c = g->conj(h, a);
      if (cls[c] < 0) {
        cls[c] = a;
        members.push_back(c);
      }
    }
    for (int m : members) g->class_size_[m] = static_cast<int>(members.size());
  }
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return n_ == other.n_ && table_ == other.table_;
}

bool same_group(const GroupRef& a, const GroupRef& b) {
  return a == b || (a && b && a->same_table(*b));
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (elements.size() != o.elements.size()) return elements.size() < o.elements.size();
  return elements < o.elements;
}

bool Homomorphism::is_homomorphism() const {
  const int n = source->order();
  if (static_cast<int>(image.size()) != n || image[0] != 0) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (image[source->mul(a, b)] != target->mul(image[a], image[b])) return false;
  return true;
}

bool Homomorphism::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> seen(target->order(), 0);
  for (int v : image) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Homomorphism identity_hom(const GroupRef& g) {
  Homomorphism h{g, g, std::vector<int>(g->order())};
  std::iota(h.image.begin(), h.image.end(), 0);
  return h;
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  Homomorphism h{inner.source, outer.target, std::vector<int>(inner.image.size())};
  for (std::size_t i = 0; i < inner.image.size(); ++i) h.image[i] = outer.image[inner.image[i]];
  return h;
}

Homomorphism inverse_iso(const Homomorphism& f) {
  ensure(f.is_bijective(), "inverse_iso: map is not bijective");
  Homomorphism h{f.target, f.source, std::vector<int>(f.image.size())};
  for (std::size_t i = 0; i < f.image.size(); ++i) h.image[f.image[i]] = static_cast<int>(i);
  return h;
}

Subgroup image_of(const Homomorphism& f, const Subgroup& s) {
  std::vector<int> el;
  el.reserve(s.elements.size());
  for (int x : s.elements) el.push_back(f.image[x]);
  std::sort(el.begin(), el.end());
  el.erase(std::unique(el.begin(), el.end()), el.end());
  return Subgroup{f.target, std::move(el)};
}

Homomorphism conjugation_hom(const GroupRef& g, int elem) {
  Homomorphism h{g, g, std::vector<int>(g->order())};
  for (int x = 0; x < g->order(); ++x) h.image[x] = g->conj(elem, x);
  return h;
}

// ---- subgroups -----------------------------------------------------------

Subgroup trivial_subgroup(const GroupRef& g) { return Subgroup{g, {0}}; }

Subgroup whole_group(const GroupRef& g) {
  Subgroup s{g, std::vector<int>(g->order())};
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}

namespace {

// Closure of `seed` (assumed to contain 0) under right multiplication by gens.
std::vector<char> close_under(const FiniteGroup& g, std::vector<char> mask,
                              const std::vector<int>& gens) {
  std::vector<int> queue;
  for (int x = 0; x < g.order(); ++x)
    if (mask[x]) queue.push_back(x);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (int s : gens) {
      const int y = g.mul(x, s);
      if (!mask[y]) {
        mask[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return mask;
}

std::vector<int> mask_to_elements(const std::vector<char>& mask) {
  std::vector<int> el;
  for (std::size_t x = 0; x < mask.size(); ++x)
    if (mask[x]) el.push_back(static_cast<int>(x));
  return el;
}

}  // namespace

Subgroup generate(const GroupRef& g, const std::vector<int>& gens) {
  std::vector<char> mask(g->order(), 0);
  mask[0] = 1;
  for (int x : gens) {
    if (x < 0 || x >= g->order()) fail_input("generator index out of range");
  }
  mask = close_under(*g, std::move(mask), gens);
  return Subgroup{g, mask_to_elements(mask)};
}

Subgroup subgroup_from_elements(const GroupRef& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements[0] != 0) fail_input("subgroup must contain the identity");
  Subgroup s{g, std::move(elements)};
  for (int a : s.elements) {
    if (a < 0 || a >= g->order()) fail_input("subgroup element out of range");
    if (!s.contains(g->inv(a))) fail_input("subgroup not closed under inverses");
    for (int b : s.elements)
      if (!s.contains(g->mul(a, b))) fail_input("subgroup not closed under multiplication");
  }
  return s;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup s{a.parent, {}};
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(s.elements));
  return s;
}

Subgroup conjugate(const Subgroup& s, int g) {
  Subgroup c{s.parent, {}};
  c.elements.reserve(s.elements.size());
  for (int x : s.elements) c.elements.push_back(s.parent->conj(g, x));
  std::sort(c.elements.begin(), c.elements.end());
  return c;
}

bool is_normal(const Subgroup& s) {
  const auto& g = *s.parent;
  for (int x = 0; x < g.order(); ++x)
    for (int h : s.elements)
      if (!s.contains(g.conj(x, h))) return false;
  return true;
}

std::vector<int> generators_of(const Subgroup& s) {
  const auto& g = *s.parent;
  std::vector<char> mask(g.order(), 0);
  mask[0] = 1;
  std::vector<int> gens;
  // Prefer elements of large order so that few generators are needed.
  std::vector<int> cand(s.elements.begin(), s.elements.end());
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  for (int x : cand) {
    if (mask[x]) continue;
    gens.push_back(x);
    mask = close_under(g, std::move(mask), gens);
  }
  return gens;
}

GroupRef subgroup_group(const Subgroup& s) {
  const auto& g = *s.parent;
  const int k = s.order();
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < k; ++i) local[s.elements[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back(g.label(s.elements[i]));
    for (int j = 0; j < k; ++j) {
      const int v = local[g.mul(s.elements[i], s.elements[j])];
      ensure(v >= 0, "subgroup_group: element set is not closed");
      table[static_cast<std::size_t>(i) * k + j] = v;
    }
  }
  nlohmann::json prov = {{"kind", "subgroup"}, {"elements", s.elements}};
  return FiniteGroup::from_table(k, std::move(table), std::move(labels), std::move(prov));
}

Homomorphism inclusion_hom(const Subgroup& s, const GroupRef& sub_group) {
  ensure(sub_group->order() == s.order(), "inclusion_hom: order mismatch");
  return Homomorphism{sub_group, s.parent, s.elements};
}

std::vector<Subgroup> subgroups(const GroupRef& gp, std::optional<int> max_index,
                                const Budget& budget) {
  const auto& g = *gp;
  const int n = g.order();
  if (n > budget.max_subgroup_order)
    fail_budget("subgroups: group order " + std::to_string(n) + " exceeds cap " +
                std::to_string(budget.max_subgroup_order));

  // One generator per cyclic subgroup suffices to reach every subgroup by
  // adding generators one at a time.
  std::vector<int> cyc_gens;
  {
    std::set<std::vector<int>> seen;
    for (int x = 1; x < n; ++x) {
      auto c = generate(gp, {x}).elements;
      if (seen.insert(c).second) cyc_gens.push_back(x);
    }
  }

  struct Entry {
    std::vector<char> mask;
    std::vector<int> gens;
  };
  std::vector<Entry> found;
  std::set<std::vector<char>> known;
  std::vector<char> triv(n, 0);
  triv[0] = 1;
  found.push_back({triv, {}});
  known.insert(triv);
  for (std::size_t i = 0; i < found.size(); ++i) {
    budget.check_time("subgroups");
    for (int x : cyc_gens) {
      if (found[i].mask[x]) continue;
      auto gens = found[i].gens;
      gens.push_back(x);
      auto mask = close_under(g, found[i].mask, gens);
      if (known.insert(mask).second) found.push_back({std::move(mask), std::move(gens)});
    }
  }

  std::vector<Subgroup> out;
  for (auto& e : found) {
    Subgroup s{gp, mask_to_elements(e.mask)};
    if (max_index && n / s.order() > *max_index) continue;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup normal_closure(const Subgroup& h) {
  const auto& g = *h.parent;
  std::vector<int> gens;
  std::vector<char> conj_mask(g.order(), 0);
  for (int x = 0; x < g.order(); ++x)
    for (int e : h.elements) {
      const int c = g.conj(x, e);
      if (!conj_mask[c]) {
        conj_mask[c] = 1;
        gens.push_back(c);
      }
    }
  return generate(h.parent, gens);
}

Subgroup normalizer(const Subgroup& b) {
  const auto& g = *b.parent;
  Subgroup out{b.parent, {}};
  for (int x = 0; x < g.order(); ++x)
    if (conjugate(b, x) == b) out.elements.push_back(x);
  return out;
}

DoubleCosetDecomposition double_cosets(const Subgroup& h, const Subgroup& k) {
  const auto& g = *h.parent;
  DoubleCosetDecomposition d;
  d.block_of.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (d.block_of[x] >= 0) continue;
    const int block = static_cast<int>(d.representatives.size());
    std::vector<int> mem;
    for (int a : h.elements)
      for (int b : k.elements) {
        const int y = g.mul(g.mul(a, x), b);
        if (d.block_of[y] < 0) {
          d.block_of[y] = block;
          mem.push_back(y);
        }
      }
    std::sort(mem.begin(), mem.end());
    d.representatives.push_back(x);
    d.members.push_back(std::move(mem));
    d.stabilizers.push_back(intersect(h, conjugate(k, x)));
  }
  return d;
}

std::vector<Subgroup> complements(const Subgroup& h, const Budget& budget) {
  const int n = h.parent->order();
  std::vector<Subgroup> out;
  if (n % h.order() != 0) return out;
  const int want = n / h.order();
  for (auto& k : subgroups(h.parent, std::nullopt, budget)) {
    if (k.order() != want) continue;
    if (intersect(h, k).order() == 1) out.push_back(std::move(k));
  }
  return out;
}

QuotientGroup quotient(const Subgroup& nsub) {
  const auto& g = *nsub.parent;
  ensure(is_normal(nsub), "quotient: subgroup is not normal");
  QuotientGroup q;
  q.coset_of.assign(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] >= 0) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : nsub.elements) q.coset_of[g.mul(x, m)] = idx;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back(g.label(reps[i]) + "N");
    for (int j = 0; j < k; ++j)
      table[static_cast<std::size_t>(i) * k + j] = q.coset_of[g.mul(reps[i], reps[j])];
  }
  nlohmann::json prov = {{"kind", "quotient"}, {"normal", nsub.elements}};
  q.group = FiniteGroup::from_table(k, std::move(table), std::move(labels), std::move(prov));
  return q;
}

std::vector<Subgroup> subgroup_class_representatives(const GroupRef& g, const Budget& budget) {
  auto all = subgroups(g, std::nullopt, budget);
  std::set<std::vector<int>> covered;
  std::vector<Subgroup> reps;
  for (auto& s : all) {
    if (covered.count(s.elements)) continue;
    reps.push_back(s);
    for (int x = 0; x < g->order(); ++x) covered.insert(conjugate(s, x).elements);
  }
  return reps;
}

// ---- isomorphisms --------------------------------------------------------

void for_each_isomorphism(const GroupRef& g1, const GroupRef& g2,
                          const std::vector<SubgroupConstraint>& constraints,
                          const std::function<bool(const Homomorphism&)>& visit,
                          const Budget& budget) {
  const int n = g1->order();
  if (n != g2->order()) return;
  if (n > budget.max_iso_order)
    fail_budget("isomorphism search: order " + std::to_string(n) + " exceeds cap " +
                std::to_string(budget.max_iso_order));

  auto fingerprint = [](const FiniteGroup& g, int x) {
    return std::make_pair(g.element_order(x), g.class_size(x));
  };
  {
    std::multiset<std::pair<int, int>> f1, f2;
    for (int x = 0; x < n; ++x) {
      f1.insert(fingerprint(*g1, x));
      f2.insert(fingerprint(*g2, x));
    }
    if (f1 != f2) return;
  }

  const auto gens = generators_of(whole_group(g1));
  std::vector<std::vector<int>> candidates;
  for (int s : gens) {
    std::vector<int> c;
    for (int y = 0; y < n; ++y)
      if (fingerprint(*g2, y) == fingerprint(*g1, s)) c.push_back(y);
    candidates.push_back(std::move(c));
  }

  std::vector<int> images(gens.size(), -1);
  bool stop = false;

  // Extends the assignment on the first `count` generators to the subgroup they
  // generate; fails if the map is not well defined or not injective.
  auto extend = [&](std::size_t count, std::vector<int>& map) {
    map.assign(n, -1);
    std::vector<char> used(n, 0);
    map[0] = 0;
    used[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (std::size_t j = 0; j < count; ++j) {
        const int y = g1->mul(x, gens[j]);
        const int v = g2->mul(map[x], images[j]);
        if (map[y] < 0) {
          if (used[v]) return false;
          map[y] = v;
          used[v] = 1;
          queue.push_back(y);
        } else if (map[y] != v) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<int> map;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop) return;
    if (depth == gens.size()) {
      if (!extend(depth, map)) return;
      Homomorphism f{g1, g2, map};
      for (auto& [src, dst] : constraints)
        if (image_of(f, src).elements != dst.elements) return;
      if (!visit(f)) stop = true;
      return;
    }
    for (int y : candidates[depth]) {
      images[depth] = y;
      if (extend(depth + 1, map)) rec(depth + 1);
      if (stop) return;
    }
    budget.check_time("isomorphism search");
  };
  rec(0);
}

std::vector<Homomorphism> isomorphisms(const GroupRef& g1, const GroupRef& g2,
                                       const std::vector<SubgroupConstraint>& constraints,
                                       const Budget& budget) {
  std::vector<Homomorphism> out;
  for_each_isomorphism(
      g1, g2, constraints,
      [&](const Homomorphism& f) {
        out.push_back(f);
        return true;
      },
      budget);
  return out;
}

std::optional<Homomorphism> find_isomorphism(const GroupRef& g1, const GroupRef& g2,
                                             const std::vector<SubgroupConstraint>& constraints,
                                             const Budget& budget) {
  std::optional<Homomorphism> out;
  for_each_isomorphism(
      g1, g2, constraints,
      [&](const Homomorphism& f) {
        out = f;
        return false;
      },
      budget);
  return out;
}

bool are_isomorphic(const GroupRef& g1, const GroupRef& g2, const Budget& budget) {
  return find_isomorphism(g1, g2, {}, budget).has_value();
}

}  // namespace f2c
