// Random generators for cochains and presentations, and the independent
// formula for xi_g used to cross-check the engine. Shared by the test suites
// and the acceptance runner.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "f2c/core.hpp"

namespace f2c::testing {

inline std::vector<GroupRef> groups_up_to_8() {
  return {cyclic_group(2), cyclic_group(3), cyclic_group(4), product_group({cyclic_group(2), cyclic_group(2)}),
          cyclic_group(5), symmetric_group(3), cyclic_group(6), dihedral_group(8),
          product_group({cyclic_group(4), cyclic_group(2)})};
}

inline Cochain random_cochain(std::mt19937_64& rng, const GroupRef& g, int degree, u64 den) {
  Cochain c(g, degree, den);
  for (std::size_t i = 0; i < c.size(); ++i) c.set_num_at(i, static_cast<long long>(rng() % den));
  return c;
}

// A random combination of kernel generators of d.
inline Cochain random_cocycle(std::mt19937_64& rng, const GroupRef& g, int degree, u32 den) {
  if (den < 2) return zero_cochain(g, degree);
  auto ker = kernel_basis(coboundary_matrix(g, degree, den));
  Vec v(tuple_count(g->order(), degree), 0);
  for (auto& k : ker) {
    u64 c = rng() % den;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<u32>((v[i] + c * k[i]) % den);
  }
  return Cochain::from_vector(g, degree, v, den);
}

// A valid presentation with nontrivial cochains: pi = d gamma and
// psi = gamma|_H + z for a random cocycle z on H.
inline Presentation random_valid(std::mt19937_64& rng, const GroupRef& g, const Subgroup& h) {
  auto gamma = random_cochain(rng, g, 3, 2 * g->order());
  auto hg = subgroup_group(h);
  auto z = random_cocycle(rng, hg, 3, static_cast<u32>(h.order()));
  return make_presentation(g, h, coboundary(gamma), combine(restrict_to(gamma, h, hg), z, 1));
}

// A second side (K, omega) trivializing the same pi.
inline ModuleSide random_side(std::mt19937_64& rng, const Presentation& p, const Subgroup& k) {
  auto gamma = trivialize(p.pi);
  auto kg = subgroup_group(k);
  auto z = random_cocycle(rng, kg, 3, static_cast<u32>(k.order()));
  return ModuleSide{k, kg, combine(restrict_to(*gamma, k, kg), z, 1)};
}

// The fully expanded expression for xi_g, written with g k_3 and g k_3 k_2 in
// place of h_3^-1 g and h_3^-1 h_2^-1 g. `ref` supplies the stabilizer.
inline Cochain xi_expanded(const Presentation& p, const ModuleSide& s, int g, const XiResult& ref) {
  const FiniteGroup& G = *p.g;
  const u64 den = ref.xi.denominator() * p.pi.denominator() * p.psi.denominator() * s.omega.denominator();
  Cochain out(ref.stabilizer_group, 3, den);
  auto pos = [](const Subgroup& sub, int x) {
    return static_cast<int>(std::lower_bound(sub.elements.begin(), sub.elements.end(), x) - sub.elements.begin());
  };
  auto val = [&](const Cochain& c, std::vector<int> t) {
    return QZ::make(static_cast<long long>(c.num(t)), c.denominator());
  };
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto lt = out.tuple_at(i);
    int h[3], k[3];
    for (int j = 0; j < 3; ++j) {
      h[j] = ref.stabilizer.elements[lt[j]];
      k[j] = G.mul(G.mul(G.inv(g), G.inv(h[j])), g);
    }
    QZ v = val(p.psi, {pos(p.h, h[0]), pos(p.h, h[1]), pos(p.h, h[2])});
    v = v + val(p.pi, {h[2], G.mul(g, k[2]), k[1], k[0]});
    v = v + val(p.pi, {g, k[2], k[1], k[0]});
    v = v - val(s.omega, {pos(s.k, k[2]), pos(s.k, k[1]), pos(s.k, k[0])});
    v = v - val(p.pi, {h[1], h[2], G.mul(G.mul(g, k[2]), k[1]), k[0]});
    v = v - val(p.pi, {h[0], h[1], h[2], G.mul(G.mul(G.mul(g, k[2]), k[1]), k[0])});
    out.set(lt, v);
  }
  return out;
}

}  // namespace f2c::testing
