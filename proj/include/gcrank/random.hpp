#pragma once

// Seeded randomness. Both std::mt19937_64 and std::seed_seq have their
// output fully specified by the C++ standard, so streams are bit-identical
// across platforms and standard libraries. Distributions from <random> are
// not, which is why the helpers below draw raw words themselves.

#include <cstdint>
#include <random>
#include <vector>

#include "gcrank/error.hpp"
#include "gcrank/numeric.hpp"

namespace gcrank {

using Rng = std::mt19937_64;

/// Generator for (seed, stream): independent per-trial streams that do not
/// depend on evaluation order.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

/// Uniform on {0, ..., hi}: draw bit_length(hi) bits, reject values above hi.
inline Integer uniform_integer(Rng& rng, const Integer& hi) {
  if (hi < 0) throw Error(ErrorCode::kInvalidArgument, "uniform_integer needs hi >= 0");
  if (hi == 0) return 0;
  const unsigned bits = bit_length(hi);
  for (;;) {
    Integer x = 0;
    unsigned have = 0;
    while (have < bits) {
      const unsigned take = bits - have < 64 ? bits - have : 64;
      std::uint64_t word = rng();
      if (take < 64) word &= (std::uint64_t{1} << take) - 1;
      x <<= take;
      x += Integer(word);
      have += take;
    }
    if (x <= hi) return x;
  }
}

/// Uniform on {lo, ..., hi} for 64-bit bounds.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "empty range");
  return lo + uniform_integer(rng, Integer(hi) - lo).convert_to<std::int64_t>();
}

}  // namespace gcrank
