// Shared helpers for the test suites: seeded randomness and brute-force
// oracles that never touch the elimination code under test.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "f2c/linalg.hpp"

namespace f2c::testing {

inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("F2C_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611ULL;
}

inline std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(test_seed() * 1000003ULL + salt); }

inline int cases(int full) {
  if (const char* s = std::getenv("F2C_QUICK")) return std::max(1, full / 10);
  return full;
}

inline Vec random_vec(std::mt19937_64& rng, int len, u32 n) {
  Vec v(len);
  for (auto& x : v) x = static_cast<u32>(rng() % n);
  return v;
}

// Every Z/n-linear combination of `gens`, as a set.
inline std::set<Vec> brute_span(const std::vector<Vec>& gens, int len, u32 n) {
  std::set<Vec> span{Vec(len, 0)};
  std::vector<Vec> frontier{Vec(len, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (auto& v : frontier)
      for (auto& g : gens) {
        Vec w(len);
        for (int i = 0; i < len; ++i) w[i] = (v[i] + g[i]) % n;
        if (span.insert(w).second) next.push_back(w);
      }
    frontier.swap(next);
  }
  return span;
}

// Calls f on every vector of (Z/n)^len.
template <class F>
void for_all_vectors(int len, u32 n, F&& f) {
  Vec v(len, 0);
  for (;;) {
    f(v);
    int i = 0;
    while (i < len && ++v[i] == n) v[i++] = 0;
    if (i == len) return;
  }
}

inline Vec mat_vec(const std::vector<Vec>& m, const Vec& x, u32 n) {
  Vec y(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc += std::uint64_t{m[r][c]} * x[c];
    y[r] = static_cast<u32>(acc % n);
  }
  return y;
}

}  // namespace f2c::testing
