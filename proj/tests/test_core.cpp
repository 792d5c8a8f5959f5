#include <gtest/gtest.h>

#include <map>
#include <set>

#include "f2c/core.hpp"
#include "f2c/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace f2c;
using f2c::testing::random_cochain;
using f2c::testing::random_cocycle;
using f2c::testing::random_side;
using f2c::testing::random_valid;
using f2c::testing::xi_expanded;

namespace {

GroupRef klein() { return product_group({cyclic_group(2), cyclic_group(2)}); }

// The nontrivial 3-cocycle of Z/2, pulled back along x -> first coordinate of
// Z/2 ⊕ Z/2 (product index 2a + b).
Cochain klein_first_factor_cocycle(const GroupRef& v) {
  Cochain c(v, 3, 2);
  for (int a : {2, 3})
    for (int b : {2, 3})
      for (int d : {2, 3}) c.set({a, b, d}, QZ::make(1, 2));
  return c;
}

std::vector<int> census_totals(const std::vector<ComponentRecord>& cs) {
  std::vector<int> t;
  for (auto& c : cs) t.push_back(c.census.total());
  return t;
}

std::vector<int> stabilizer_orders(const std::vector<ComponentRecord>& cs) {
  std::vector<int> t;
  for (auto& c : cs) t.push_back(c.stabilizer.order());
  return t;
}

Subgroup find_subgroup(const GroupRef& g, int order, const GroupRef& iso_type) {
  for (auto& s : subgroups(g))
    if (s.order() == order && are_isomorphic(subgroup_group(s), iso_type)) return s;
  throw std::runtime_error("no such subgroup");
}

std::string row_text(const Presentation& p, int f, int g) {
  auto t = fusion_table(p);
  return render_fusion(fuse(p, f, g), t.representatives, t.names);
}

}  // namespace

TEST(Validate, Examples) {
  auto d8 = dihedral_group(8);
  EXPECT_TRUE(validate(trivial_presentation(d8, generate(d8, {4}))).valid());

  auto z2 = cyclic_group(2);
  Cochain psi(z2, 3, 2);
  psi.set({1, 1, 1}, QZ::make(1, 2));
  EXPECT_TRUE(validate(make_presentation(z2, whole_group(z2), zero_cochain(z2, 4), psi)).valid());

  auto rng = f2c::testing::make_rng(41);
  auto p = random_valid(rng, d8, generate(d8, {1}));
  EXPECT_TRUE(validate(p).valid());
  Cochain bad = p.psi.at_level(p.psi.denominator() * 2);
  const std::size_t idx = 17;
  bad.set_num_at(idx, static_cast<long long>(bad.num_at(idx)) + 1);
  auto broken = make_presentation(p.g, p.h, p.pi, bad);
  auto r = validate(broken);
  EXPECT_FALSE(r.valid());
  EXPECT_TRUE(r.pi_closed);
  ASSERT_FALSE(r.issues.empty());
  EXPECT_EQ(r.issues[0].kind, "algebra-condition");
  EXPECT_EQ(r.issues[0].tuple.size(), 4u);
  for (int x : r.issues[0].tuple) EXPECT_TRUE(p.h.contains(x));
}

TEST(Xi, TrivialDataGivesZero) {
  auto p = trivial_presentation(dihedral_group(8), generate(dihedral_group(8), {4}));
  for (int g = 0; g < 8; ++g) EXPECT_TRUE(xi_g(p, side_of(p), g).xi.is_zero());
}

TEST(Xi, IdentityRepresentativeIsCohomologousToZero) {
  auto rng = f2c::testing::make_rng(42);
  for (auto& g : {dihedral_group(8), symmetric_group(3), klein()}) {
    for (auto& h : subgroups(g)) {
      auto hg = subgroup_group(h);
      auto psi = random_cocycle(rng, hg, 3, static_cast<u32>(h.order()));
      auto p = make_presentation(g, h, zero_cochain(g, 4), psi);
      auto xi = xi_g(p, side_of(p), 0).xi;
      // xi_e(h1,h2,h3) = psi(h1,h2,h3) - psi(h3^-1,h2^-1,h1^-1)
      for (std::size_t i = 0; i < xi.size(); ++i) {
        auto t = xi.tuple_at(i);
        std::vector<int> r = {hg->inv(t[2]), hg->inv(t[1]), hg->inv(t[0])};
        ASSERT_EQ(xi.at(t), psi.at(t) - psi.at(r));
      }
      EXPECT_TRUE(same_class(xi, zero_cochain(hg, 3)));
    }
  }
}

TEST(Xi, CocycleOnRandomValidInputs) {
  auto rng = f2c::testing::make_rng(43);
  std::vector<GroupRef> gs = {dihedral_group(8), symmetric_group(3), klein(), cyclic_group(4),
                              product_group({cyclic_group(4), cyclic_group(2)})};
  for (int t = 0; t < f2c::testing::cases(40); ++t) {
    auto& g = gs[rng() % gs.size()];
    auto subs = subgroups(g);
    auto h = subs[rng() % subs.size()];
    auto k = subs[rng() % subs.size()];
    auto p = random_valid(rng, g, h);
    ASSERT_TRUE(validate(p).valid());
    auto side = random_side(rng, p, k);
    for (int x = 0; x < g->order(); ++x) {
      auto r = xi_g(p, side, x);
      ASSERT_TRUE(is_cocycle(r.xi)) << "case " << t << " g=" << x;
      ASSERT_TRUE(r.xi == xi_expanded(p, side, x, r)) << "case " << t << " g=" << x;
    }
  }
}

TEST(Xi, TrivialPiMatchesConjugationForm) {
  auto rng = f2c::testing::make_rng(44);
  for (auto& g : {dihedral_group(8), symmetric_group(3), product_group({cyclic_group(4), cyclic_group(2)})}) {
    auto subs = subgroups(g);
    for (int t = 0; t < 6; ++t) {
      auto h = subs[rng() % subs.size()];
      auto k = subs[rng() % subs.size()];
      auto hg = subgroup_group(h), kg = subgroup_group(k);
      auto p = make_presentation(g, h, zero_cochain(g, 4), random_cocycle(rng, hg, 3, static_cast<u32>(h.order())));
      ModuleSide side{k, kg, random_cocycle(rng, kg, 3, static_cast<u32>(k.order()))};
      for (int x = 0; x < g->order(); ++x) {
        auto r = xi_g(p, side, x);
        Cochain zeta(r.stabilizer_group, 3, r.xi.denominator() * 12);
        const auto& L = r.stabilizer.elements;
        auto pos = [](const Subgroup& s, int y) {
          return static_cast<int>(std::lower_bound(s.elements.begin(), s.elements.end(), y) - s.elements.begin());
        };
        for (std::size_t i = 0; i < zeta.size(); ++i) {
          auto lt = zeta.tuple_at(i);
          std::vector<int> ht, kt;
          for (int j : lt) {
            ht.push_back(pos(h, L[j]));
            kt.push_back(pos(k, g->conj(g->inv(x), L[j])));
          }
          zeta.set(lt, p.psi.at(ht) - side.omega.at(kt));
        }
        ASSERT_TRUE(same_class(r.xi, zeta));
      }
    }
  }
}

TEST(Census, Examples) {
  auto z2 = cyclic_group(2);
  auto c0 = simple_census(z2, zero_cochain(z2, 3));
  EXPECT_EQ(c0.total(), 2);
  EXPECT_TRUE(c0.exact());
  Cochain w(z2, 3, 2);
  w.set({1, 1, 1}, QZ::make(1, 2));
  auto c1 = simple_census(z2, w);
  EXPECT_EQ(c1.total(), 1);
  ASSERT_EQ(c1.entries.size(), 1u);
  EXPECT_EQ(c1.entries[0].b.order(), 1);
  EXPECT_TRUE(c1.exact());
  EXPECT_EQ(simple_census(symmetric_group(3), zero_cochain(symmetric_group(3), 3)).total(), 4);
}

TEST(Census, TwoRepCounts) {
  // Simples of 2Rep(G): pairs (B up to conjugacy, H^2(B) class up to N(B)).
  EXPECT_EQ(simple_census(cyclic_group(3), zero_cochain(cyclic_group(3), 3)).total(), 2);
  EXPECT_EQ(simple_census(klein(), zero_cochain(klein(), 3)).total(), 6);
  EXPECT_EQ(simple_census(dihedral_group(8), zero_cochain(dihedral_group(8), 3)).total(), 11);
  auto s4 = symmetric_group(4);
  // 11 classes; V4 (both classes), D8, A4 and S4 each carry one extra class.
  EXPECT_EQ(simple_census(s4, zero_cochain(s4, 3)).total(), 11 + 5);
  for (auto& g : {cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
    auto p = trivial_presentation(g, whole_group(g));
    auto cs = components(p);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].census.total(), static_cast<int>(subgroup_class_representatives(g).size()));
  }
}

TEST(Census, CoboundaryTwistIsExact) {
  // A nonzero but trivializable xi gives the same census as zero.
  auto rng = f2c::testing::make_rng(45);
  auto g = dihedral_group(8);
  auto xi = coboundary(random_cochain(rng, g, 2, 8));
  ASSERT_FALSE(xi.is_zero());
  auto c = simple_census(g, xi);
  EXPECT_TRUE(c.exact());
  EXPECT_EQ(c.total(), 11);
}

TEST(Components, D8Reflection) {
  auto d8 = dihedral_group(8);
  auto p = trivial_presentation(d8, generate(d8, {4}));
  auto cs = components(p);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(stabilizer_orders(cs), (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(census_totals(cs), (std::vector<int>{2, 1, 2}));
  std::vector<std::string> names;
  for (auto& c : cs) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"X", "D", "Y"}));
  EXPECT_EQ(cs[1].support.size(), 4u);
  EXPECT_EQ(cs[0].support, p.h.elements);
}

TEST(Components, S4OverS3) {
  auto s4 = symmetric_group(4);
  auto p = trivial_presentation(s4, find_subgroup(s4, 6, symmetric_group(3)));
  auto cs = components(p);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(census_totals(cs), (std::vector<int>{4, 2}));
}

TEST(Components, TwistChangesTheCount) {
  // D8 as (Z/2 ⊕ Z/2) ⋊ Z/2 with the swap; psi pulled back from the first factor.
  auto v = klein();
  auto g = semidirect_group(v, cyclic_group(2), {{0, 1, 2, 3}, {0, 2, 1, 3}});
  auto a = subgroup_from_elements(g, {0, 2, 4, 6});
  auto ag = subgroup_group(a);
  ASSERT_TRUE(ag->same_table(*v));
  auto psi = klein_first_factor_cocycle(ag);
  // omega = psi - rho* psi is not trivializable.
  Homomorphism rho{ag, ag, {0, 2, 1, 3}};
  ASSERT_TRUE(rho.is_homomorphism());
  EXPECT_FALSE(trivialize(combine(psi, pullback(psi, rho), -1)).has_value());

  auto plain = components(trivial_presentation(g, a));
  auto twisted = components(make_presentation(g, a, zero_cochain(g, 4), psi));
  ASSERT_EQ(plain.size(), 2u);
  ASSERT_EQ(twisted.size(), 2u);
  EXPECT_EQ(plain[1].census.total(), 6);
  EXPECT_FALSE(twisted[1].xi_trivial);
  EXPECT_LT(twisted[1].census.total(), plain[1].census.total());
  EXPECT_EQ(plain[0].census.total(), twisted[0].census.total());
}

TEST(Components, TwoSidedBimodules) {
  auto d8 = dihedral_group(8);
  auto p = trivial_presentation(d8, generate(d8, {4}));
  auto k = generate(d8, {5});
  ModuleSide side{k, subgroup_group(k), zero_cochain(subgroup_group(k), 3)};
  auto cs = components(p, side);
  std::size_t total = 0;
  for (auto& c : cs) {
    total += c.support.size();
    EXPECT_EQ(c.grade, -1);
  }
  EXPECT_EQ(total, 8u);
  EXPECT_EQ(cs.size(), 2u);  // <s> and <rs> are not conjugate, so every coset has size 4
}

TEST(Fusion, Examples) {
  auto d8 = dihedral_group(8);
  auto pd = trivial_presentation(d8, generate(d8, {4}));
  EXPECT_EQ(row_text(pd, 1, 1), "D□D = X ⊞ Y");
  auto row = fuse(pd, 1, 1);
  EXPECT_EQ(row.summands, (std::vector<std::pair<int, int>>{{0, 1}, {2, 1}}));

  auto s3 = symmetric_group(3);
  auto ps = trivial_presentation(s3, find_subgroup(s3, 2, cyclic_group(2)));
  auto t = fusion_table(ps);
  ASSERT_EQ(t.names, (std::vector<std::string>{"X", "D"}));
  EXPECT_EQ(render_fusion(fuse(ps, t.representatives[1], t.representatives[1]), t.representatives, t.names),
            "D□D = X ⊞ D");
}

TEST(Fusion, A4TripleCycle) {
  auto a4 = alternating_group(4);
  auto h = find_subgroup(a4, 2, cyclic_group(2));
  auto p = trivial_presentation(a4, h);
  auto t = fusion_table(p);
  ASSERT_EQ(t.representatives.size(), 4u);
  std::multiset<std::string> names(t.names.begin(), t.names.end());
  EXPECT_EQ(names, (std::multiset<std::string>{"X", "T", "T'", "Y"}));
  for (auto& c : components(p)) {
    if (c.name == "Y") EXPECT_EQ(c.stabilizer.order(), 2);
    if (c.name[0] == 'T') EXPECT_EQ(c.stabilizer.order(), 1);
  }
  int tcycle = -1;
  for (int x = 0; x < a4->order(); ++x)
    if (a4->element_order(x) == 3) {
      tcycle = x;
      break;
    }
  auto row = fuse(p, tcycle, tcycle);
  ASSERT_EQ(row.summands.size(), 1u);
  EXPECT_EQ(row.summands[0].second, 2);
  // The summand is the component of t^2, not of t.
  EXPECT_EQ(support(p, row.summands[0].first), support(p, a4->mul(tcycle, tcycle)));
  EXPECT_NE(support(p, tcycle), support(p, a4->mul(tcycle, tcycle)));
  // 4 components, and 6 simples in total.
  int total = 0;
  for (auto& c : components(p)) total += c.census.total();
  EXPECT_EQ(total, 6);
}

TEST(Fusion, WreathZ3) {
  auto w = wreath2_group(cyclic_group(3));
  auto h = subgroup_from_elements(w, {0, 6, 12});
  auto p = trivial_presentation(w, h);
  auto t = fusion_table(p);
  EXPECT_EQ(t.names, (std::vector<std::string>{"X", "D", "Y", "Z"}));
  std::map<std::string, int> rep;
  for (std::size_t i = 0; i < t.names.size(); ++i) rep[t.names[i]] = t.representatives[i];
  auto text = [&](const char* a, const char* b) {
    return render_fusion(fuse(p, rep[a], rep[b]), t.representatives, t.names);
  };
  EXPECT_EQ(text("X", "Y"), "X□Y = 3Y");
  EXPECT_EQ(text("D", "X"), "D□X = 3D");
  EXPECT_EQ(text("D", "D"), "D□D = X ⊞ Y ⊞ Z");
  EXPECT_EQ(text("Y", "Y"), "Y□Y = 3Z");
  EXPECT_EQ(text("X", "X"), "X□X = 3X");
}

TEST(Fusion, TrivialSubgroupGivesGroupTable) {
  auto g = symmetric_group(3);
  auto p = trivial_presentation(g, trivial_subgroup(g));
  auto t = fusion_table(p);
  ASSERT_EQ(t.representatives.size(), 6u);
  for (auto& row : t.rows) {
    ASSERT_EQ(row.summands.size(), 1u);
    EXPECT_EQ(row.summands[0], std::make_pair(g->mul(row.left, row.right), 1));
  }
}

TEST(Fusion, StructuralProperties) {
  std::vector<Presentation> ps;
  auto d8 = dihedral_group(8);
  for (auto& h : subgroups(d8)) ps.push_back(trivial_presentation(d8, h));
  auto s3 = symmetric_group(3);
  for (auto& h : subgroups(s3)) ps.push_back(trivial_presentation(s3, h));
  auto a4 = alternating_group(4);
  ps.push_back(trivial_presentation(a4, find_subgroup(a4, 2, cyclic_group(2))));
  for (auto& p : ps) {
    auto gr = universal_grading(p);
    const FiniteGroup& q = *gr.quotient.group;
    for (int f = 0; f < p.g->order(); ++f)
      for (int g = 0; g < p.g->order(); ++g) {
        auto row = fuse(p, f, g);
        ASSERT_EQ(row.total(), p.h.order());
        // Grades multiply.
        const int want = q.mul(gr.quotient.coset_of[f], gr.quotient.coset_of[g]);
        for (auto& [r, m] : row.summands) ASSERT_EQ(gr.quotient.coset_of[r], want);
        // Supports multiply.
        std::set<int> prod, uni;
        for (int a : support(p, f))
          for (int b : support(p, g)) prod.insert(p.g->mul(a, b));
        for (auto& [r, m] : row.summands)
          for (int x : support(p, r)) uni.insert(x);
        ASSERT_EQ(prod, uni);
      }
    for (int g = 0; g < p.g->order(); ++g) {
      auto row = fuse(p, g, p.g->inv(g));
      EXPECT_EQ(row.summands.front().first, 0) << "unit component appears in V[g]□V[g^-1]";
      auto row_e = fuse(p, 0, g);
      bool found = false;
      for (auto& [r, m] : row_e.summands) found |= support(p, r) == support(p, g);
      EXPECT_TRUE(found);
    }
  }
}

TEST(Grading, Examples) {
  auto d8 = dihedral_group(8);
  auto pd = trivial_presentation(d8, generate(d8, {4}));
  auto gd = universal_grading(pd);
  EXPECT_EQ(gd.quotient.group->order(), 2);
  EXPECT_EQ(gd.grade, (std::vector<int>{0, 1, 0}));

  auto a4 = alternating_group(4);
  auto ga = universal_grading(trivial_presentation(a4, find_subgroup(a4, 2, cyclic_group(2))));
  EXPECT_TRUE(are_isomorphic(ga.quotient.group, cyclic_group(3)));

  auto s3 = symmetric_group(3);
  auto gs = universal_grading(trivial_presentation(s3, find_subgroup(s3, 2, cyclic_group(2))));
  EXPECT_EQ(gs.quotient.group->order(), 1);
}

TEST(Support, Examples) {
  auto d8 = dihedral_group(8);
  auto p = trivial_presentation(d8, generate(d8, {4}));
  EXPECT_EQ(support(p, 0), p.h.elements);
  EXPECT_EQ(support(p, 1), (std::vector<int>{1, 3, 5, 7}));
}

TEST(Components, DiagonalInSquareGivesConjugacyClasses) {
  for (auto& g : {symmetric_group(3), dihedral_group(8), cyclic_group(4)}) {
    const int n = g->order();
    auto gg = product_group({g, g});
    std::vector<int> diag;
    for (int x = 0; x < n; ++x) diag.push_back(x * n + x);
    auto p = trivial_presentation(gg, subgroup_from_elements(gg, diag));
    auto cs = components(p);

    std::set<std::set<int>> classes;
    for (int x = 0; x < n; ++x) {
      std::set<int> cls;
      for (int y = 0; y < n; ++y) cls.insert(g->conj(y, x));
      classes.insert(cls);
    }
    ASSERT_EQ(cs.size(), classes.size());

    std::set<std::set<int>> seen;
    for (auto& c : cs) {
      // (a, b) lies in the double coset of (a b^-1, e).
      const int a = c.representative / n, b = c.representative % n;
      const int x = g->mul(a, g->inv(b));
      std::set<int> cls;
      for (int y = 0; y < n; ++y) cls.insert(g->conj(y, x));
      EXPECT_TRUE(seen.insert(cls).second);
      std::vector<int> centralizer;
      for (int y = 0; y < n; ++y)
        if (g->mul(y, x) == g->mul(x, y)) centralizer.push_back(y);
      auto cent = subgroup_group(subgroup_from_elements(g, centralizer));
      EXPECT_TRUE(are_isomorphic(c.stabilizer_group, cent));
      EXPECT_EQ(c.support.size(), static_cast<std::size_t>(n * (n / cent->order())));
    }
    EXPECT_EQ(seen, classes);
  }
}
