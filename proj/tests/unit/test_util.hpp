#pragma once

// Brute-force oracles and random generators shared by the unit tests.

#include <cstdint>
#include <vector>

#include "gcrank/core.hpp"
#include "gcrank/numeric.hpp"
#include "gcrank/random.hpp"

namespace gcrank::testing {

inline std::vector<Integer> ints(std::initializer_list<long long> v) {
  std::vector<Integer> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

inline std::vector<Integer> random_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<Integer> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(uniform_int(rng, lo, hi));
  return v;
}

// Positive-weight vector: at least one entry > 0.
inline WeightVector random_weights(Rng& rng, std::size_t n, std::int64_t hi) {
  auto v = random_vector(rng, n, 0, hi);
  v[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1))] += 1;
  return WeightVector(v);
}

// max ct.x over 0/1 points with c.x <= capacity, signed ct allowed.
inline Integer brute_force_max(const std::vector<Integer>& c, const Integer& capacity, const std::vector<Integer>& ct) {
  const std::size_t n = c.size();
  Integer best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Integer w = 0, p = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) {
        w += c[i];
        p += ct[i];
      }
    if (w <= capacity && p > best) best = p;
  }
  return best;
}

// ct.x*(eps) >= max over P_I for a signed ct, straight from the definition.
inline bool signed_critical(const Instance& inst, const std::vector<Integer>& ct) {
  Rational at = 0;
  for (const auto& x : ct) at += inst.xstar_coordinate() * Rational(x);
  return at >= Rational(brute_force_max(inst.c().entries(), inst.knapsack_capacity(), ct));
}

}  // namespace gcrank::testing
