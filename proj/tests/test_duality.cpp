#include <gtest/gtest.h>

#include <set>

#include "f2c/duality.hpp"
#include "f2c/errors.hpp"
#include "support.hpp"

using namespace f2c;

namespace {

GroupRef klein() { return product_group({cyclic_group(2), cyclic_group(2)}); }

Subgroup find_subgroup(const GroupRef& g, int order, const GroupRef& iso_type) {
  for (auto& s : subgroups(g))
    if (s.order() == order && are_isomorphic(subgroup_group(s), iso_type)) return s;
  throw std::runtime_error("no such subgroup");
}

std::vector<Subgroup> brute_complements(const Subgroup& h) {
  std::vector<Subgroup> out;
  const int want = h.parent->order() / h.order();
  for (auto& k : subgroups(h.parent)) {
    if (k.order() != want) continue;
    std::set<int> prod;
    for (int a : h.elements)
      for (int b : k.elements) prod.insert(h.parent->mul(a, b));
    if (static_cast<int>(prod.size()) == h.parent->order()) out.push_back(k);
  }
  return out;
}

std::set<std::vector<int>> complement_set(const std::vector<FiberFunctorDatum>& ds) {
  std::set<std::vector<int>> ks;
  for (auto& d : ds) ks.insert(d.k.elements);
  return ks;
}

TwoGroupData trivial_action_data(const GroupRef& h, const GroupRef& a) {
  TwoGroupData t;
  t.h = h;
  t.a = a;
  std::vector<int> id(a->order());
  for (int i = 0; i < a->order(); ++i) id[i] = i;
  t.rho.assign(h->order(), id);
  t.beta.assign(static_cast<std::size_t>(h->order()) * h->order() * h->order(), 0);
  return t;
}

// Z/2 acting on Z/n by inversion.
TwoGroupData inversion_data(int n) {
  auto t = trivial_action_data(cyclic_group(2), cyclic_group(n));
  for (int i = 0; i < n; ++i) t.rho[1][i] = (n - i) % n;
  return t;
}

TwoGroupData nontrivial_postnikov() {
  auto t = trivial_action_data(cyclic_group(2), cyclic_group(2));
  t.beta[7] = 1;  // beta(1,1,1)
  return t;
}

// All normalized twisted 3-cocycles, by brute force over the free entries.
std::vector<TwoGroupData> all_cocycles(const TwoGroupData& shape) {
  const int n = shape.h->order(), m = shape.a->order();
  std::vector<std::size_t> free;
  for (int h1 = 1; h1 < n; ++h1)
    for (int h2 = 1; h2 < n; ++h2)
      for (int h3 = 1; h3 < n; ++h3) free.push_back((static_cast<std::size_t>(h1) * n + h2) * n + h3);
  std::vector<TwoGroupData> out;
  std::vector<int> v(free.size(), 0);
  for (;;) {
    auto t = shape;
    for (std::size_t i = 0; i < free.size(); ++i) t.beta[free[i]] = v[i];
    auto d = twisted_coboundary_defect(t);
    if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) out.push_back(t);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == m) v[i++] = 0;
    if (i == v.size()) break;
  }
  return out;
}

}  // namespace

TEST(Fiber, CyclicHasNone) {
  auto z4 = cyclic_group(4);
  EXPECT_TRUE(fiber_functors(trivial_presentation(z4, generate(z4, {2}))).empty());
}

TEST(Fiber, S4OverS3) {
  auto s4 = symmetric_group(4);
  auto h = find_subgroup(s4, 6, symmetric_group(3));
  auto p = trivial_presentation(s4, h);
  auto ds = fiber_functors(p);
  std::set<std::vector<int>> oracle;
  for (auto& k : brute_complements(h)) oracle.insert(k.elements);
  EXPECT_EQ(complement_set(ds), oracle);
  bool cyclic = false, klein4 = false;
  std::size_t expected = 0;
  for (auto& k : brute_complements(h)) {
    auto kg = subgroup_group(k);
    cyclic |= are_isomorphic(kg, cyclic_group(4));
    klein4 |= are_isomorphic(kg, klein());
    expected += cohomology(kg, 3).invariants.order();
  }
  EXPECT_TRUE(cyclic);
  EXPECT_TRUE(klein4);
  EXPECT_EQ(ds.size(), expected);
  for (auto& d : ds) {
    EXPECT_TRUE(coboundary(d.omega) == restrict_to(p.pi, d.k, d.k_group));
    EXPECT_TRUE(validate(d.dual).valid());
  }
  // Distinct omega classes on one complement are distinct classes.
  for (std::size_t i = 0; i + 1 < ds.size(); ++i)
    if (ds[i].k == ds[i + 1].k) EXPECT_FALSE(same_class(ds[i].omega, ds[i + 1].omega));

  const FiberFunctorDatum *zc = nullptr, *vc = nullptr;
  for (auto& d : ds) {
    if (!zc && are_isomorphic(d.k_group, cyclic_group(4))) zc = &d;
    if (!vc && are_isomorphic(d.k_group, klein())) vc = &d;
  }
  ASSERT_TRUE(zc && vc);
  EXPECT_FALSE(fiber_equivalent(p, *zc, *vc));
  EXPECT_TRUE(fiber_equivalent(p, *zc, *zc));
  EXPECT_TRUE(fiber_equivalent(p, *vc, *vc));
}

TEST(Fiber, TwoTYOverZ2HasTwoComplements) {
  auto wd = wreath_of(cyclic_group(2));
  auto p = build_2ty(cyclic_group(2), zero_cochain(wd.w, 4));
  auto ks = complement_set(fiber_functors(p));
  std::set<std::vector<int>> oracle;
  for (auto& k : brute_complements(p.h)) oracle.insert(k.elements);
  EXPECT_EQ(ks.size(), 2u);
  EXPECT_EQ(ks, oracle);
}

TEST(Fiber, NontrivialPostnikovGivesEquivalentFunctors) {
  auto tp = two_group_pi(nontrivial_postnikov());
  // H ⋉ Â with index 2h + alpha; Â is {0, 1}.
  auto p = make_presentation(tp.group, subgroup_from_elements(tp.group, {0, 1}), tp.pi,
                             zero_cochain(subgroup_group(subgroup_from_elements(tp.group, {0, 1})), 3));
  ASSERT_TRUE(validate(p).valid());
  ASSERT_FALSE(trivialize(p.pi).has_value());
  auto ds = fiber_functors(p);
  auto ks = complement_set(ds);
  EXPECT_EQ(ks, (std::set<std::vector<int>>{{0, 2}, {0, 3}}));
  for (auto& a : ds) {
    EXPECT_TRUE(fiber_equivalent(p, a, a));
    if (a.k.elements != std::vector<int>{0, 3}) continue;
    bool matched = false;
    for (auto& b : ds)
      if (b.k.elements == std::vector<int>{0, 2}) matched |= fiber_equivalent(p, a, b);
    EXPECT_TRUE(matched);
  }
}

TEST(Fiber, DualityIsAnInvolution) {
  auto s3 = symmetric_group(3);
  for (auto& h : {find_subgroup(s3, 3, cyclic_group(3)), find_subgroup(s3, 2, cyclic_group(2))}) {
    auto p = trivial_presentation(s3, h);
    auto ds = fiber_functors(p);
    ASSERT_FALSE(ds.empty());
    for (auto& d : ds) {
      bool back = false;
      for (auto& dd : fiber_functors(d.dual)) {
        if (dd.k != p.h) continue;
        if (!same_class(dd.omega, p.psi)) continue;
        back = true;
        auto w = equivalent(dd.dual, p);
        ASSERT_TRUE(w.has_value());
        EXPECT_TRUE(check_witness(dd.dual, p, *w));
      }
      EXPECT_TRUE(back);
    }
  }
}

TEST(Equivalence, ExoticTwoGroupPair) {
  auto d8 = dihedral_group(8);
  auto a = trivial_presentation(d8, generate(d8, {4}));
  auto sd = semidirect_group(klein(), cyclic_group(2), {{0, 1, 2, 3}, {0, 2, 1, 3}});
  auto b = trivial_presentation(sd, subgroup_from_elements(sd, {0, 1}));
  auto w = equivalent(a, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(check_witness(a, b, *w));
  EXPECT_EQ(image_of(w->f, a.h), b.h);
}

namespace {

// The mixed cocycle a1 * carry(b2 + c2) / 4 on Z/4 ⊕ Z/2 (index 2 a1 + a2).
Cochain mixed_z4z2(const GroupRef& g) {
  Cochain c(g, 3, 4);
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto t = c.tuple_at(i);
    const int a1 = t[0] / 2, b2 = t[1] % 2, c2 = t[2] % 2;
    c.set_num_at(i, a1 * ((b2 + c2) / 2));
  }
  return c;
}

// The mixed cocycle a1 * carry(b2 + c2) / 2 on Z/2 ⊕ Z/2 (index 2 a1 + a2).
Cochain mixed_z2z2(const GroupRef& g) {
  Cochain c(g, 3, 2);
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto t = c.tuple_at(i);
    c.set_num_at(i, (t[0] / 2) * ((t[1] % 2 + t[2] % 2) / 2));
  }
  return c;
}

}  // namespace

TEST(Equivalence, RestrictionFromZ4Z2IsSurjective) {
  auto g = product_group({cyclic_group(4), cyclic_group(2)});
  auto h = subgroup_from_elements(g, {0, 1, 4, 5});
  auto hg = subgroup_group(h);
  ASSERT_TRUE(hg->same_table(*klein()));

  // Explicit oracle: the mixed class on G restricts to the mixed class on H,
  // which is nonzero. Together with the two pure classes this hits all of H^3(H).
  auto wg = mixed_z4z2(g);
  ASSERT_TRUE(is_cocycle(wg));
  auto wh = mixed_z2z2(hg);
  ASSERT_TRUE(is_cocycle(wh));
  EXPECT_FALSE(trivialize(wh).has_value());
  EXPECT_TRUE(same_class(restrict_to(wg, h, hg), wh));

  auto h3g = cohomology(g, 3);
  auto h3h = cohomology(hg, 3);
  EXPECT_EQ(h3g.invariants.factors, (std::vector<u64>{2, 2, 4}));
  ASSERT_EQ(h3h.invariants.order(), 8u);
  std::set<std::vector<u64>> image;
  f2c::testing::for_all_vectors(static_cast<int>(h3g.generators.size()), 4, [&](const Vec& c) {
    Cochain z = zero_cochain(g, 3);
    for (std::size_t j = 0; j < c.size(); ++j) z = combine(z, scale(h3g.generators[j], c[j]), 1);
    image.insert(class_coordinates(h3h, restrict_to(z, h, hg)));
  });
  EXPECT_EQ(image.size(), 8u);

  // Hence every twist of C(Z/4 ⊕ Z/2, Z/2 ⊕ Z/2) is equivalent to the untwisted one.
  auto a = trivial_presentation(g, h);
  f2c::testing::for_all_vectors(3, 2, [&](const Vec& c) {
    Cochain psi = zero_cochain(hg, 3);
    for (std::size_t j = 0; j < c.size(); ++j) psi = combine(psi, scale(h3h.generators[j], c[j]), 1);
    auto b = make_presentation(g, h, zero_cochain(g, 4), psi);
    auto w = equivalent(a, b);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(check_witness(a, b, *w));
  });
}

TEST(Equivalence, NonExtendingPsiIsInequivalent) {
  // Search small (G, H) for a class of H^3(H) outside the image of
  // restriction, and check that equivalence tells it apart from the trivial one.
  int found = 0;
  for (auto& g : {cyclic_group(4), dihedral_group(8), product_group({cyclic_group(4), cyclic_group(2)}),
                  cyclic_group(8), symmetric_group(3)}) {
    auto h3g = cohomology(g, 3);
    for (auto& h : subgroups(g)) {
      auto hg = subgroup_group(h);
      auto h3h = cohomology(hg, 3);
      if (h3h.invariants.order() <= 1) continue;
      std::vector<std::vector<u64>> images;
      for (auto& z : h3g.generators) images.push_back(class_coordinates(h3h, restrict_to(z, h, hg)));
      // Brute-force span of the images.
      std::set<std::vector<u64>> span{std::vector<u64>(h3h.generators.size(), 0)};
      bool grew = true;
      while (grew) {
        grew = false;
        for (auto v : std::vector<std::vector<u64>>(span.begin(), span.end()))
          for (auto& im : images) {
            auto w = v;
            for (std::size_t k = 0; k < w.size(); ++k) w[k] = (w[k] + im[k]) % h3h.invariants.factors[k];
            grew |= span.insert(w).second;
          }
      }
      if (span.size() == h3h.invariants.order()) continue;
      for (std::size_t j = 0; j < h3h.generators.size(); ++j) {
        std::vector<u64> e(h3h.generators.size(), 0);
        e[j] = 1;
        const bool extends = span.count(e) > 0;
        auto a = trivial_presentation(g, h);
        auto b = make_presentation(g, h, zero_cochain(g, 4), h3h.generators[j]);
        auto w = equivalent(a, b);
        if (!extends) {
          // Automorphisms preserve the image, so no witness can exist.
          EXPECT_FALSE(w.has_value());
          ++found;
        } else {
          ASSERT_TRUE(w.has_value());
          EXPECT_TRUE(check_witness(a, b, *w));
        }
      }
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Equivalence, ReflexiveAndSymmetric) {
  auto rng = f2c::testing::make_rng(51);
  std::vector<Presentation> lib;
  for (auto& g : {dihedral_group(8), klein(), symmetric_group(3), cyclic_group(4),
                  product_group({cyclic_group(4), cyclic_group(2)})})
    for (auto& h : subgroups(g)) {
      lib.push_back(trivial_presentation(g, h));
      auto hg = subgroup_group(h);
      auto h3 = cohomology(hg, 3);
      if (h3.generators.empty()) continue;
      auto psi = scale(h3.generators[rng() % h3.generators.size()], 1 + static_cast<long long>(rng() % 3));
      lib.push_back(make_presentation(g, h, zero_cochain(g, 4), psi));
    }
  for (std::size_t i = 0; i < lib.size(); ++i) {
    auto self = equivalent(lib[i], lib[i]);
    ASSERT_TRUE(self.has_value()) << i;
    EXPECT_TRUE(check_witness(lib[i], lib[i], *self));
  }
  for (int t = 0; t < f2c::testing::cases(60); ++t) {
    auto& a = lib[rng() % lib.size()];
    auto& b = lib[rng() % lib.size()];
    auto ab = equivalent(a, b);
    auto ba = equivalent(b, a);
    ASSERT_EQ(ab.has_value(), ba.has_value());
    if (ab) {
      EXPECT_TRUE(check_witness(a, b, *ab));
      EXPECT_TRUE(check_witness(b, a, *ba));
      // The inverse of a witness is a witness.
      auto finv = inverse_iso(ab->f);
      EquivalenceWitness inv{finv, scale(pullback(ab->xi, finv), -1)};
      EXPECT_TRUE(check_witness(b, a, inv));
    }
  }
}

TEST(TY, DefectReports) {
  auto d8 = dihedral_group(8);
  auto r = ty_defect(trivial_presentation(d8, generate(d8, {4})));
  EXPECT_TRUE(r.has_defect());
  ASSERT_TRUE(r.defect_fusion.has_value());
  EXPECT_EQ(r.defect_fusion->summands, (std::vector<std::pair<int, int>>{{0, 1}, {2, 1}}));
  EXPECT_TRUE(r.wreath_recognized.has_value());

  auto s3 = symmetric_group(3);
  auto rs = ty_defect(trivial_presentation(s3, find_subgroup(s3, 2, cyclic_group(2))));
  EXPECT_FALSE(rs.graded);
  EXPECT_FALSE(rs.has_defect());

  auto wd = wreath_of(cyclic_group(3));
  auto rw = ty_defect(trivial_presentation(wd.w, wd.first));
  EXPECT_TRUE(rw.has_defect());
  ASSERT_TRUE(rw.defect_fusion.has_value());
  EXPECT_EQ(rw.defect_fusion->summands.size(), 3u);
  EXPECT_TRUE(rw.wreath_recognized.has_value());

  // Graded but the minus part is not 2Vect: D8 over its center.
  auto rc = ty_defect(trivial_presentation(d8, generate(d8, {2})));
  EXPECT_FALSE(rc.has_defect());
}

TEST(TY, Build) {
  auto z2 = cyclic_group(2);
  auto wd2 = wreath_of(z2);
  auto p2 = build_2ty(z2, zero_cochain(wd2.w, 4));
  auto d8 = dihedral_group(8);
  EXPECT_TRUE(equivalent(p2, trivial_presentation(d8, generate(d8, {4}))).has_value());

  auto z3 = cyclic_group(3);
  auto wd3 = wreath_of(z3);
  auto p3 = build_2ty(z3, zero_cochain(wd3.w, 4));
  auto cs = components(p3);
  int simples = 0, plus_components = 0, plus_simples = 0;
  auto gr = universal_grading(p3);
  EXPECT_EQ(gr.quotient.group->order(), 2);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    simples += cs[i].census.total();
    if (gr.grade[i] == gr.quotient.coset_of[0]) {
      ++plus_components;
      plus_simples += cs[i].census.total();
    }
  }
  EXPECT_EQ(cs.size(), 4u);
  EXPECT_EQ(simples, 7);
  EXPECT_EQ(plus_components, 3);
  EXPECT_EQ(plus_simples, 3 * simple_census(z3, zero_cochain(z3, 3)).total());
  auto r = ty_defect(p3);
  ASSERT_TRUE(r.has_defect());
  EXPECT_EQ(r.defect_fusion->total(), 3);
  // Odd order: no abelian normal complement, so not 2Rep of a 2-group.
  EXPECT_TRUE(normal_abelian_complements(p3).empty());
  EXPECT_FALSE(fiber_functors(p3).empty());
}

TEST(TY, NormalAbelianComplement) {
  auto s3 = symmetric_group(3);
  auto cs = normal_abelian_complements(trivial_presentation(s3, find_subgroup(s3, 2, cyclic_group(2))));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].order(), 3);
}

TEST(TY, ClassifyZ2) {
  auto z2 = cyclic_group(2);
  auto c = classify_2ty(z2);
  EXPECT_EQ(c.h4.factors, (std::vector<u64>{2, 2}));
  EXPECT_EQ(c.kernel_order, 2u);
  ASSERT_EQ(c.classes.size(), 2u);
  EXPECT_TRUE(c.classes[0].pi.is_zero());
  for (auto& cl : c.classes) {
    auto p = build_2ty(z2, cl.pi);
    auto r = ty_defect(p);
    EXPECT_TRUE(r.has_defect());
    EXPECT_EQ(r.defect_fusion->total(), 2);
  }
  auto wd = wreath_of(z2);
  EXPECT_FALSE(equivalent(build_2ty(z2, c.classes[0].pi), build_2ty(z2, c.classes[1].pi)).has_value());
  // A class outside the kernel is rejected.
  auto h4 = cohomology(wd.w, 4);
  bool rejected = false;
  for (auto& gen : h4.generators) {
    if (trivialize(restrict_to(gen, wd.base, subgroup_group(wd.base)))) continue;
    EXPECT_THROW(build_2ty(z2, gen), InvalidInput);
    rejected = true;
  }
  EXPECT_TRUE(rejected);
}

TEST(TY, ClassifyZ3NeedsOptIn) {
  EXPECT_THROW(classify_2ty(cyclic_group(3)), BudgetExceeded);
}

TEST(TwoGroup, PiBasics) {
  auto t0 = trivial_action_data(cyclic_group(2), cyclic_group(2));
  auto tp0 = two_group_pi(t0);
  EXPECT_TRUE(tp0.pi.is_zero());
  EXPECT_EQ(tp0.group->order(), 4);

  auto tp = two_group_pi(nontrivial_postnikov());
  EXPECT_TRUE(is_cocycle(tp.pi));
  EXPECT_FALSE(trivialize(tp.pi).has_value());
  auto h4 = cohomology(tp.group, 4);
  EXPECT_EQ(h4.invariants.factors, (std::vector<u64>{2, 2}));
  auto coords = class_coordinates(h4, tp.pi);
  EXPECT_NE(coords, (std::vector<u64>{0, 0}));
}

TEST(TwoGroup, AllZ2CocyclesGiveCocycles) {
  auto cs = all_cocycles(trivial_action_data(cyclic_group(2), cyclic_group(2)));
  EXPECT_EQ(cs.size(), 2u);
  for (auto& t : cs) EXPECT_TRUE(is_cocycle(two_group_pi(t).pi));
}

TEST(TwoGroup, SmallTwoGroupsGiveCocycles) {
  std::vector<TwoGroupData> shapes = {inversion_data(3), inversion_data(4),
                                      trivial_action_data(cyclic_group(3), cyclic_group(2)),
                                      trivial_action_data(cyclic_group(2), cyclic_group(4)),
                                      trivial_action_data(cyclic_group(2), klein())};
  // Z/2 swapping the factors of Z/2 ⊕ Z/2.
  auto swap = trivial_action_data(cyclic_group(2), klein());
  swap.rho[1] = {0, 2, 1, 3};
  shapes.push_back(swap);
  for (auto& s : shapes) {
    auto cs = all_cocycles(s);
    ASSERT_FALSE(cs.empty());
    for (auto& t : cs) {
      auto tp = two_group_pi(t);
      ASSERT_TRUE(is_cocycle(tp.pi));
      auto fi = footnote_iso(t, tp);
      EXPECT_TRUE(fi.iso.is_homomorphism());
    }
  }
}

TEST(TwoGroup, RejectsBadData) {
  auto t = trivial_action_data(cyclic_group(2), cyclic_group(2));
  t.beta[1] = 1;  // beta(0,0,1): not normalized
  EXPECT_THROW(two_group_pi(t), InvalidInput);
  auto u = trivial_action_data(cyclic_group(3), cyclic_group(2));
  u.beta[(1 * 3 + 1) * 3 + 1] = 1;  // single entry is not a cocycle on Z/3
  EXPECT_THROW(validate_two_group(u), InvalidInput);
  auto v = trivial_action_data(cyclic_group(2), cyclic_group(3));
  v.rho[1] = {0, 2, 2};
  EXPECT_THROW(validate_two_group(v), InvalidInput);
  auto w = trivial_action_data(cyclic_group(2), symmetric_group(3));
  EXPECT_THROW(validate_two_group(w), InvalidInput);
}

TEST(TwoGroup, Characters) {
  for (auto& a : {cyclic_group(4), klein(), product_group({cyclic_group(2), cyclic_group(3)})}) {
    auto c = characters(a);
    EXPECT_EQ(c.group->order(), a->order());
    EXPECT_TRUE(are_isomorphic(c.group, a));
    for (auto& v : c.values)
      for (int x = 0; x < a->order(); ++x)
        for (int y = 0; y < a->order(); ++y) ASSERT_EQ(v[a->mul(x, y)], (v[x] + v[y]) % c.exponent);
  }
}

TEST(TwoGroup, TwoRepDecomposition) {
  auto r3 = two_rep_decomposition(inversion_data(3));
  ASSERT_EQ(r3.components.size(), 2u);
  EXPECT_EQ(r3.components[0].stabilizer.order(), 2);
  EXPECT_EQ(r3.components[1].stabilizer.order(), 1);
  EXPECT_EQ(r3.components[1].orbit, (std::vector<int>{1, 2}));
  EXPECT_EQ(r3.total_simples(), 3);
  // The S3 example: the same category as C(S3, Z/2).
  auto s3 = symmetric_group(3);
  EXPECT_TRUE(equivalent(r3.presentation, trivial_presentation(s3, find_subgroup(s3, 2, cyclic_group(2)))).has_value());

  auto r2 = two_rep_decomposition(trivial_action_data(cyclic_group(2), cyclic_group(2)));
  EXPECT_EQ(r2.components.size(), 2u);
  EXPECT_EQ(r2.total_simples(), 4);

  auto r1 = two_rep_decomposition(trivial_action_data(cyclic_group(1), cyclic_group(1)));
  EXPECT_EQ(r1.components.size(), 1u);
  EXPECT_EQ(r1.total_simples(), 1);

  // Nontrivial Postnikov data: the nontrivial character sees a nontrivial cocycle.
  auto rp = two_rep_decomposition(nontrivial_postnikov());
  ASSERT_EQ(rp.components.size(), 2u);
  EXPECT_TRUE(trivialize(rp.components[0].cocycle).has_value());
  EXPECT_FALSE(trivialize(rp.components[1].cocycle).has_value());
  EXPECT_EQ(rp.total_simples(), 3);

  for (auto& s : {inversion_data(4), trivial_action_data(cyclic_group(2), klein())})
    for (auto& t : all_cocycles(s)) EXPECT_NO_THROW(two_rep_decomposition(t));
}
