#include "f2c/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "f2c/errors.hpp"

namespace f2c {

namespace {

// Position of each element of s inside subgroup_group(s), -1 outside.
std::vector<int> local_index(const Subgroup& s) {
  std::vector<int> pos(s.parent->order(), -1);
  for (std::size_t i = 0; i < s.elements.size(); ++i) pos[s.elements[i]] = static_cast<int>(i);
  return pos;
}

long long mod_ll(long long x, long long n) {
  long long r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Presentation make_presentation(GroupRef g, Subgroup h, Cochain pi, Cochain psi) {
  if (!same_group(h.parent, g)) fail_input("presentation: subgroup does not belong to the group");
  if (!same_group(pi.group(), g) || pi.degree() != 4) fail_input("presentation: pi must be a 4-cochain on G");
  Presentation p;
  p.g = std::move(g);
  p.h = std::move(h);
  p.h_group = subgroup_group(p.h);
  if (psi.degree() != 3) fail_input("presentation: psi must be a 3-cochain on H");
  if (!same_group(psi.group(), p.h_group)) {
    if (psi.group()->same_table(*p.h_group)) {
      Cochain moved(p.h_group, 3, psi.denominator());
      for (std::size_t i = 0; i < psi.size(); ++i) moved.set_num_at(i, static_cast<long long>(psi.num_at(i)));
      psi = moved;
    } else {
      fail_input("presentation: psi does not live on H");
    }
  }
  p.pi = std::move(pi);
  p.psi = std::move(psi);
  return p;
}

Presentation trivial_presentation(const GroupRef& g, const Subgroup& h) {
  auto hg = subgroup_group(h);
  return make_presentation(g, h, zero_cochain(g, 4), zero_cochain(hg, 3));
}

ModuleSide side_of(const Presentation& p) { return ModuleSide{p.h, p.h_group, p.psi}; }

ValidationReport validate(const Presentation& p, std::size_t max_issues) {
  ValidationReport r;
  const Cochain dpi = coboundary(p.pi);
  for (std::size_t i = 0; i < dpi.size(); ++i) {
    if (!dpi.num_at(i)) continue;
    r.pi_closed = false;
    ++r.failing_tuples;
    if (r.issues.size() < max_issues)
      r.issues.push_back({"pi-not-closed", dpi.tuple_at(i),
                          QZ::make(static_cast<long long>(dpi.num_at(i)), dpi.denominator())});
  }
  const Cochain lhs = coboundary(p.psi);
  const Cochain rhs = restrict_to(p.pi, p.h, p.h_group);
  const Cochain diff = combine(lhs, rhs, -1);
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (!diff.num_at(i)) continue;
    r.algebra_condition = false;
    ++r.failing_tuples;
    if (r.issues.size() < max_issues) {
      auto t = diff.tuple_at(i);
      for (auto& x : t) x = p.h.elements[x];
      r.issues.push_back({"algebra-condition", t, QZ::make(static_cast<long long>(diff.num_at(i)), diff.denominator())});
    }
  }
  return r;
}

XiResult xi_g(const Presentation& p, const ModuleSide& other, int g) {
  const FiniteGroup& G = *p.g;
  if (g < 0 || g >= G.order()) fail_input("xi_g: element out of range");
  XiResult res;
  res.stabilizer = intersect(p.h, conjugate(other.k, g));
  res.stabilizer_group = subgroup_group(res.stabilizer);
  const auto hpos = local_index(p.h);
  const auto kpos = local_index(other.k);
  const u64 den = std::lcm(std::lcm(p.pi.denominator(), p.psi.denominator()), other.omega.denominator());
  const long long kpi = static_cast<long long>(den / p.pi.denominator());
  const long long kpsi = static_cast<long long>(den / p.psi.denominator());
  const long long kom = static_cast<long long>(den / other.omega.denominator());
  const int ginv = G.inv(g);

  Cochain xi(res.stabilizer_group, 3, den);
  auto pi = [&](int a, int b, int c, int d) {
    const int t[4] = {a, b, c, d};
    return kpi * static_cast<long long>(p.pi.num(t));
  };
  const auto& L = res.stabilizer.elements;
  for (std::size_t idx = 0; idx < xi.size(); ++idx) {
    const auto lt = xi.tuple_at(idx);
    const int h1 = L[lt[0]], h2 = L[lt[1]], h3 = L[lt[2]];
    // k_i = g^-1 h_i^-1 g lies in K by construction.
    const int k1 = G.conj(ginv, G.inv(h1)), k2 = G.conj(ginv, G.inv(h2)), k3 = G.conj(ginv, G.inv(h3));
    const int hp[3] = {hpos[h1], hpos[h2], hpos[h3]};
    const int kp[3] = {kpos[k3], kpos[k2], kpos[k1]};
    ensure(kp[0] >= 0 && kp[1] >= 0 && kp[2] >= 0, "xi_g: conjugate left K");
    long long v = kpsi * static_cast<long long>(p.psi.num(hp)) - kom * static_cast<long long>(other.omega.num(kp));
    const int h3i = G.inv(h3), h2i = G.inv(h2), h1i = G.inv(h1);
    v += pi(h3, G.mul(h3i, g), k2, k1);
    v += pi(g, k3, k2, k1);
    v -= pi(h2, h3, G.mul(G.mul(h3i, h2i), g), k1);
    v -= pi(h1, h2, h3, G.mul(G.mul(G.mul(h3i, h2i), h1i), g));
    xi.set_num_at(idx, mod_ll(v, static_cast<long long>(den)));
  }
  res.xi = xi.reduced();
  return res;
}

// ---- census ------------------------------------------------------------------

int Census::total() const {
  int t = 0;
  for (auto& e : entries) t += e.count;
  return t;
}

bool Census::exact() const {
  return std::all_of(entries.begin(), entries.end(), [](const CensusEntry& e) { return e.exact; });
}

namespace {

// Orbits of a group of automorphisms of Z/d_1 ⊕ ... ⊕ Z/d_k, each given by the
// images of the standard generators.
int count_orbits(const std::vector<u64>& d, const std::vector<std::vector<std::vector<u64>>>& maps) {
  std::size_t size = 1;
  for (u64 x : d) size *= x;
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto decode = [&](std::size_t code) {
    std::vector<u64> v(d.size());
    for (std::size_t i = d.size(); i-- > 0;) {
      v[i] = code % d[i];
      code /= d[i];
    }
    return v;
  };
  auto encode = [&](const std::vector<u64>& v) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < d.size(); ++i) code = code * d[i] + v[i];
    return code;
  };
  for (std::size_t c = 0; c < size; ++c) {
    auto v = decode(c);
    for (auto& m : maps) {
      std::vector<u64> w(d.size(), 0);
      for (std::size_t j = 0; j < d.size(); ++j)
        for (std::size_t i = 0; i < d.size(); ++i) w[i] = (w[i] + v[j] * m[j][i]) % d[i];
      const int a = find(static_cast<int>(c)), b = find(static_cast<int>(encode(w)));
      if (a != b) parent[a] = b;
    }
  }
  int orbits = 0;
  for (std::size_t c = 0; c < size; ++c) orbits += find(static_cast<int>(c)) == static_cast<int>(c);
  return orbits;
}

}  // namespace

Census simple_census(const GroupRef& l, const Cochain& xi, const Budget& budget, const Homomorphism* into_g) {
  if (!same_group(xi.group(), l) || xi.degree() != 3) fail_input("simple_census: xi must be a 3-cochain on L");
  if (!is_cocycle(xi)) fail_input("simple_census: xi is not a cocycle");
  Census census;
  census.xi_trivializable = trivialize(xi, budget).has_value();
  for (auto& b : subgroup_class_representatives(l, budget)) {
    budget.check_time("simple_census");
    auto bg = subgroup_group(b);
    if (!census.xi_trivializable && !trivialize(restrict_to(xi, b, bg), budget)) continue;
    CensusEntry e;
    e.b = b;
    for (int x : b.elements) e.b_in_g.push_back(into_g ? (*into_g)(x) : x);
    std::sort(e.b_in_g.begin(), e.b_in_g.end());
    auto h2 = cohomology(bg, 2, budget);
    e.h2 = h2.invariants;
    const int torsor = static_cast<int>(h2.invariants.order());
    if (torsor == 1) {
      e.count = 1;
    } else if (!census.xi_trivializable) {
      // The normalizer acts on trivializations through a transported choice
      // we cannot pin down; report the torsor size as an upper bound.
      e.count = torsor;
      e.exact = false;
    } else {
      const auto bpos = local_index(b);
      std::vector<std::vector<std::vector<u64>>> maps;
      for (int n : generators_of(normalizer(b))) {
        Homomorphism c{bg, bg, std::vector<int>(bg->order())};
        for (int i = 0; i < bg->order(); ++i) c.image[i] = bpos[l->conj(n, b.elements[i])];
        std::vector<std::vector<u64>> m;
        for (auto& gen : h2.generators) m.push_back(class_coordinates(h2, pullback(gen, c), budget));
        maps.push_back(std::move(m));
      }
      e.count = count_orbits(h2.invariants.factors, maps);
    }
    census.entries.push_back(std::move(e));
  }
  return census;
}

// ---- components and fusion ------------------------------------------------------

namespace {

std::vector<std::string> names_for(const Presentation& p, const DoubleCosetDecomposition& dc) {
  const std::size_t n = dc.representatives.size();
  std::vector<std::string> names(n);
  if (p.h.order() == 1) {
    for (std::size_t i = 0; i < n; ++i) names[i] = "V[" + p.g->label(dc.representatives[i]) + "]";
    return names;
  }
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (dc.stabilizers[i].order() == 1) free.push_back(i);
  if (free.size() == 1) {
    names[free[0]] = "D";
  } else {
    for (std::size_t j = 0; j < free.size(); ++j) names[free[j]] = "T" + std::string(j, '\'');
  }
  static const char* letters[] = {"Y", "Z", "W", "U", "R", "S", "P", "Q"};
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!names[i].empty()) continue;
    if (dc.representatives[i] == 0) {
      names[i] = "X";
    } else if (next < std::size(letters)) {
      names[i] = letters[next++];
    } else {
      names[i] = "V[" + p.g->label(dc.representatives[i]) + "]";
    }
  }
  return names;
}

}  // namespace

std::vector<std::string> component_names(const Presentation& p) { return names_for(p, double_cosets(p.h, p.h)); }

std::vector<ComponentRecord> components(const Presentation& p, const std::optional<ModuleSide>& other,
                                        const Budget& budget) {
  const ModuleSide side = other ? *other : side_of(p);
  if (!same_group(side.k.parent, p.g)) fail_input("components: K is not a subgroup of G");
  const bool square = !other.has_value();
  const auto dc = double_cosets(p.h, side.k);
  std::vector<std::string> names = square ? names_for(p, dc) : std::vector<std::string>{};
  std::optional<Grading> grading;
  if (square) grading = universal_grading(p);

  std::vector<ComponentRecord> out;
  for (std::size_t i = 0; i < dc.representatives.size(); ++i) {
    budget.check_time("components");
    ComponentRecord c;
    c.representative = dc.representatives[i];
    auto xr = xi_g(p, side, c.representative);
    c.stabilizer = xr.stabilizer;
    c.stabilizer_group = xr.stabilizer_group;
    c.xi = xr.xi;
    if (!is_cocycle(c.xi)) fail_invariant("components: xi_g is not a 3-cocycle for representative " + p.g->label(c.representative));
    const Homomorphism into_g = inclusion_hom(c.stabilizer, c.stabilizer_group);
    c.census = simple_census(c.stabilizer_group, c.xi, budget, &into_g);
    c.xi_trivial = c.census.xi_trivializable;
    c.support = dc.members[i];
    if (square) {
      c.name = names[i];
      c.grade = grading->grade[i];
    } else {
      c.name = "V[" + p.g->label(c.representative) + "]";
    }
    out.push_back(std::move(c));
  }
  return out;
}

int FusionRow::total() const {
  int t = 0;
  for (auto& [r, m] : summands) t += m;
  return t;
}

namespace {

FusionRow fuse_with(const Presentation& p, const DoubleCosetDecomposition& dc, int f, int g) {
  std::map<int, int> mult;
  for (int h : p.h.elements) ++mult[dc.representatives[dc.block_of[p.g->mul(p.g->mul(f, h), g)]]];
  FusionRow row;
  row.left = dc.representatives[dc.block_of[f]];
  row.right = dc.representatives[dc.block_of[g]];
  row.summands.assign(mult.begin(), mult.end());
  return row;
}

}  // namespace

FusionRow fuse(const Presentation& p, int f, int g) {
  if (f < 0 || g < 0 || f >= p.g->order() || g >= p.g->order()) fail_input("fuse: element out of range");
  return fuse_with(p, double_cosets(p.h, p.h), f, g);
}

FusionTable fusion_table(const Presentation& p) {
  const auto dc = double_cosets(p.h, p.h);
  FusionTable t;
  t.representatives = dc.representatives;
  t.names = names_for(p, dc);
  for (int f : dc.representatives)
    for (int g : dc.representatives) t.rows.push_back(fuse_with(p, dc, f, g));
  return t;
}

std::string render_fusion(const FusionRow& row, const std::vector<int>& reps, const std::vector<std::string>& names) {
  auto name_of = [&](int rep) {
    auto it = std::find(reps.begin(), reps.end(), rep);
    return it == reps.end() ? std::string("?") : names[it - reps.begin()];
  };
  std::string s = name_of(row.left) + "□" + name_of(row.right) + " = ";
  for (std::size_t i = 0; i < row.summands.size(); ++i) {
    if (i) s += " ⊞ ";
    if (row.summands[i].second > 1) s += std::to_string(row.summands[i].second);
    s += name_of(row.summands[i].first);
  }
  return s;
}

Grading universal_grading(const Presentation& p) {
  Grading gr;
  gr.normal_closure = normal_closure(p.h);
  gr.quotient = quotient(gr.normal_closure);
  const auto dc = double_cosets(p.h, p.h);
  gr.representatives = dc.representatives;
  for (int r : dc.representatives) gr.grade.push_back(gr.quotient.coset_of[r]);
  return gr;
}

std::vector<int> support(const Presentation& p, int g) {
  if (g < 0 || g >= p.g->order()) fail_input("support: element out of range");
  const auto dc = double_cosets(p.h, p.h);
  return dc.members[dc.block_of[g]];
}

}  // namespace f2c
