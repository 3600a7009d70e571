#pragma once

// Additive bases and the greedy knapsack solution J with c(J) = |c|_1 / 2
// whose profit is at least |ct|_1 / 2 + |ct - c/lambda|_1 / 16 when the
// weight vector carries three light disjoint bases.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gcrank/core.hpp"
#include "gcrank/error.hpp"
#include "gcrank/numeric.hpp"

namespace gcrank {

/// Largest M such that the subset sums of `values` contain every integer in
/// {0, ..., M}. Sorted ascending, the sums cover [0, s] as long as each next
/// value is at most s + 1; the first violation ends the contiguous range.
inline Integer contiguous_cover(std::vector<Integer> values) {
  std::sort(values.begin(), values.end());
  Integer s = 0;
  for (const auto& v : values) {
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, "basis values must be nonnegative");
    if (v > s + 1) break;
    s += v;
  }
  return s;
}

inline bool is_additive_basis(const std::vector<Integer>& values, const Integer& interval_max) {
  if (interval_max < 0) return true;
  return contiguous_cover(values) >= interval_max;
}

/// (2^0, 2^1, ..., 2^(floor(m/8)+1)): a basis for {0, ..., 2 * 2^(m/8)}.
inline std::vector<Integer> powers_basis(int m) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "m must be nonnegative");
  std::vector<Integer> b;
  for (int e = 0; e <= m / 8 + 1; ++e) b.push_back(pow2(static_cast<unsigned>(e)));
  return b;
}

struct AdditiveBasis {
  std::vector<std::size_t> indices;
  std::vector<Integer> values;  // values[k] = c[indices[k]]
  Integer covered_interval_max = 0;
};

inline AdditiveBasis make_additive_basis(const std::vector<Integer>& c, std::vector<std::size_t> indices) {
  AdditiveBasis b;
  std::sort(indices.begin(), indices.end());
  b.indices = std::move(indices);
  for (auto i : b.indices) b.values.push_back(c.at(i));
  b.covered_interval_max = contiguous_cover(b.values);
  return b;
}

inline constexpr std::size_t kFillDpLimit = 10'000'000;

/// Indices S of the basis with sum_{i in S} c_i = target.
inline std::vector<std::size_t> basis_fill(const AdditiveBasis& basis, const Integer& target) {
  if (target < 0) throw Error(ErrorCode::kNoExactFill, "negative target " + target.str());
  std::vector<std::size_t> out;
  if (target == 0) return out;

  // Inside the contiguous range a descending greedy over the chain elements is exact.
  std::vector<std::size_t> order(basis.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return basis.values[a] < basis.values[b]; });
  std::vector<std::size_t> chain;
  Integer s = 0;
  for (auto k : order) {
    if (basis.values[k] > s + 1) break;
    s += basis.values[k];
    chain.push_back(k);
  }
  if (target <= s) {
    Integer rem = target;
    for (auto it = chain.rbegin(); it != chain.rend() && rem > 0; ++it) {
      if (basis.values[*it] <= rem) {
        rem -= basis.values[*it];
        out.push_back(basis.indices[*it]);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Outside it, fall back to subset-sum with witness recovery.
  if (target > Integer(kFillDpLimit))
    throw Error(ErrorCode::kNoExactFill, "target " + target.str() + " outside the covered interval");
  const auto t = target.convert_to<std::size_t>();
  const std::size_t n = basis.values.size();
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(t + 1, false));
  reach[0][0] = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& v = basis.values[k];
    for (std::size_t r = 0; r <= t; ++r) {
      reach[k + 1][r] = reach[k][r];
      if (!reach[k + 1][r] && v <= Integer(r) && reach[k][r - v.convert_to<std::size_t>()]) reach[k + 1][r] = true;
    }
  }
  if (!reach[n][t]) throw Error(ErrorCode::kNoExactFill, "target " + target.str() + " is not a subset sum");
  std::size_t r = t;
  for (std::size_t k = n; k-- > 0;) {
    if (!reach[k][r]) {
      r -= basis.values[k].convert_to<std::size_t>();
      out.push_back(basis.indices[k]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct GreedyCertificate {
  std::vector<Integer> c;
  std::vector<Integer> ctilde;
  std::array<std::vector<std::size_t>, 3> bases;

  std::vector<std::size_t> sorted_order;  // by ratio ctilde_i / c_i, descending
  Rational inv_lambda;                    // profit threshold 1/lambda
  bool threshold_strict = true;           // no ratio equals 1/lambda
  std::size_t q = 0;                      // prefix length above the threshold
  std::size_t k = 0;                      // maximal prefix with c([k] \ B) <= |c|_1/2
  int basis = 0;                          // chosen B among the three
  std::vector<std::size_t> J;
  std::vector<Rational> w;                // relative profits ctilde_i - c_i / lambda
  Rational w_l1;
  Integer half_weight;                    // |c|_1 / 2
  Rational bound_value;                   // |ct|_1/2 + |w|_1/16
  Integer achieved_value;                 // ct(J)

  std::optional<Rational> lambda() const {
    if (inv_lambda == 0) return std::nullopt;
    return Rational(1) / inv_lambda;
  }
};

namespace detail {

// Sort key: zero-cost items with positive profit have infinite ratio and go
// first; zero-cost zero-profit items go last; ties break by index.
struct RatioKey {
  int cls = 1;  // 0: +inf, 1: finite, 2: undefined (0/0)
  Rational ratio;
};

inline RatioKey ratio_key(const Integer& ct, const Integer& c) {
  if (c == 0) return ct > 0 ? RatioKey{0, 0} : RatioKey{2, 0};
  return RatioKey{1, Rational(ct, c)};
}

inline bool ratio_before(const RatioKey& a, const RatioKey& b) {
  if (a.cls != b.cls) return a.cls < b.cls;
  if (a.cls == 1) return a.ratio > b.ratio;
  return false;
}

inline Rational threshold_below(const Rational& lower) { return lower > 0 ? Rational(2 * lower) : Rational(1); }

inline void validate_bases(std::size_t n, const std::array<std::vector<std::size_t>, 3>& bases) {
  std::vector<bool> used(n, false);
  for (const auto& b : bases) {
    for (auto i : b) {
      if (i >= n) throw Error(ErrorCode::kInvalidBases, "basis index " + std::to_string(i) + " out of range");
      if (used[i]) throw Error(ErrorCode::kInvalidBases, "bases are not disjoint at index " + std::to_string(i));
      used[i] = true;
    }
  }
}

}  // namespace detail

inline std::array<std::vector<std::size_t>, 3> bases_array(const std::vector<std::vector<std::size_t>>& bases) {
  if (bases.size() != 3) throw Error(ErrorCode::kInvalidBases, "exactly three bases are required");
  return {bases[0], bases[1], bases[2]};
}

/// The constructive proof: greedy by ratio, threshold, lightest basis, prefix
/// skipping B, exact fill of the remaining gap from B.
inline GreedyCertificate greedy_certificate(const WeightVector& c, const ProfitVector& ctilde,
                                            const std::array<std::vector<std::size_t>, 3>& bases) {
  const std::size_t n = c.size();
  if (ctilde.size() != n) throw Error(ErrorCode::kLengthMismatch, "profit vector length differs from n");
  if (!ctilde.nonnegative()) throw Error(ErrorCode::kNegativeProfit, "greedy certificate needs ctilde >= 0");
  if (c.l1() % 2 != 0) throw Error(ErrorCode::kOddTotalWeight, "|c|_1 = " + c.l1().str() + " is odd");
  detail::validate_bases(n, bases);

  GreedyCertificate cert;
  cert.c = c.entries();
  cert.ctilde = ctilde.entries;
  cert.bases = bases;
  cert.half_weight = c.l1() / 2;
  const Integer& half = cert.half_weight;

  std::vector<detail::RatioKey> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = detail::ratio_key(ctilde[i], c[i]);
  cert.sorted_order.resize(n);
  std::iota(cert.sorted_order.begin(), cert.sorted_order.end(), 0);
  std::stable_sort(cert.sorted_order.begin(), cert.sorted_order.end(),
                   [&](std::size_t a, std::size_t b) { return detail::ratio_before(keys[a], keys[b]); });

  // q: longest prefix whose weight stays within |c|_1/2. Since the total is
  // 2 * half > half, the item at position q exists and has positive weight.
  Integer prefix = 0;
  std::size_t q = 0;
  while (q < n && prefix + c[cert.sorted_order[q]] <= half) prefix += c[cert.sorted_order[q++]];
  cert.q = q;
  const auto& lower = keys[cert.sorted_order[q]];
  if (q == 0 || keys[cert.sorted_order[q - 1]].cls == 0) {
    cert.inv_lambda = detail::threshold_below(lower.ratio);
  } else {
    const auto& upper = keys[cert.sorted_order[q - 1]];
    if (upper.ratio == lower.ratio) {
      // The prefix boundary splits a tie group: the threshold sits on the tied
      // ratio, the limit of any perturbation that orders the group by index.
      cert.inv_lambda = upper.ratio;
      cert.threshold_strict = false;
    } else {
      cert.inv_lambda = (upper.ratio + lower.ratio) / 2;
    }
  }

  cert.w.resize(n);
  cert.w_l1 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    cert.w[i] = Rational(ctilde[i]) - Rational(c[i]) * cert.inv_lambda;
    cert.w_l1 += abs(cert.w[i]);
  }

  std::array<Rational, 3> mass;
  for (int l = 0; l < 3; ++l) {
    mass[l] = 0;
    for (auto i : bases[l]) mass[l] += abs(cert.w[i]);
  }
  cert.basis = static_cast<int>(std::min_element(mass.begin(), mass.end()) - mass.begin());
  const auto& chosen = bases[cert.basis];
  std::vector<bool> in_basis(n, false);
  for (auto i : chosen) in_basis[i] = true;

  Integer taken = 0;
  std::size_t k = 0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const auto i = cert.sorted_order[pos];
    if (!in_basis[i]) {
      if (taken + c[i] > half) break;
      taken += c[i];
    }
    k = pos + 1;
  }
  cert.k = k;

  const Integer gap = half - taken;
  std::vector<std::size_t> fill;
  try {
    fill = basis_fill(make_additive_basis(c.entries(), chosen), gap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoExactFill) throw;
    throw Error(ErrorCode::kGapNotFillable, "gap " + gap.str() + " cannot be filled from basis " +
                                                std::to_string(cert.basis) + " (|c|_inf exceeds its coverage)");
  }
  for (std::size_t pos = 0; pos < k; ++pos)
    if (!in_basis[cert.sorted_order[pos]]) cert.J.push_back(cert.sorted_order[pos]);
  cert.J.insert(cert.J.end(), fill.begin(), fill.end());
  std::sort(cert.J.begin(), cert.J.end());

  if (sum_over(c.entries(), cert.J) != half)
    throw Error(ErrorCode::kInvalidArgument, "internal: greedy solution does not fill the knapsack exactly");
  cert.achieved_value = sum_over(ctilde.entries, cert.J);
  cert.bound_value = Rational(ctilde.l1(), 2) + cert.w_l1 / 16;
  return cert;
}

struct ClaimReport {
  Rational delta;
  Rational central_window_mass;
  Rational claim1_bound;
  Rational claim2_lhs;
  Rational claim2_bound;
  Rational basis_mass;
  Rational basis_mass_bound;
  bool claim1_holds = false;
  bool claim2_holds = false;
  bool basis_mass_holds = false;
  bool fills_exactly = false;
  bool certified_bound_holds = false;
  bool preconditions_hold = false;
};

/// Lemma hypotheses on (c, ctilde, bases) for a given delta. Zero-cost
/// coordinates are free items and are excluded from the norms.
inline bool lemma3_preconditions(const std::vector<Integer>& c, const std::vector<Integer>& ctilde,
                                 const std::array<std::vector<std::size_t>, 3>& bases, const Rational& delta) {
  const Integer l1 = sum(c);
  const Integer linf = linf_norm(c);
  if (Rational(linf) > delta * Rational(l1)) return false;
  for (const auto& b : bases) {
    if (b.empty()) return false;
    if (Rational(sum_over(c, b)) > delta * Rational(l1)) return false;
    std::vector<Integer> values;
    for (auto i : b) values.push_back(c[i]);
    if (!is_additive_basis(values, linf)) return false;
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] > 0 && ctilde[i] <= 0) return false;
  return true;
}

inline ClaimReport check_claims(const GreedyCertificate& cert, const WeightVector& c,
                                const Rational& delta = Rational(1, 100)) {
  if (c.entries() != cert.c) throw Error(ErrorCode::kInvalidArgument, "certificate was built for a different c");
  const std::size_t n = c.size();
  ClaimReport r;
  r.delta = delta;
  const Rational l1(c.l1());
  const Rational lo = (Rational(1, 2) - delta) * l1;
  const Rational hi = (Rational(1, 2) + delta) * l1;

  r.central_window_mass = 0;
  Integer prefix = 0;
  for (auto i : cert.sorted_order) {
    prefix += c[i];
    if (Rational(prefix) >= lo && Rational(prefix) <= hi) r.central_window_mass += abs(cert.w[i]);
  }
  r.claim1_bound = 9 * delta * cert.w_l1;

  std::vector<bool> in_j(n, false);
  for (auto i : cert.J) in_j[i] = true;
  r.claim2_lhs = 0;
  for (std::size_t i = 0; i < n; ++i) r.claim2_lhs += in_j[i] ? cert.w[i] : Rational(-cert.w[i]);
  r.claim2_bound = cert.w_l1 / 8;

  r.basis_mass = 0;
  for (auto i : cert.bases[cert.basis]) r.basis_mass += abs(cert.w[i]);
  r.basis_mass_bound = cert.w_l1 / 3;

  r.claim1_holds = r.central_window_mass <= r.claim1_bound;
  r.claim2_holds = r.claim2_lhs >= r.claim2_bound;
  r.basis_mass_holds = r.basis_mass <= r.basis_mass_bound;
  r.fills_exactly = sum_over(c.entries(), cert.J) * 2 == c.l1();
  r.certified_bound_holds = Rational(cert.achieved_value) >= cert.bound_value;
  r.preconditions_hold = lemma3_preconditions(cert.c, cert.ctilde, cert.bases, delta);
  return r;
}

/// Constants of the profit bound max_{P_I} ct.x >= |ct|_1/2 + kappa |ct - c/lambda|_1
/// derived for one concrete weight vector. With rho = |c|_inf/|c|_1,
/// beta = max c(B_l)/|c|_1 and d = max(rho, beta), the central window
/// carries at most mu = (d + rho)/(1/2 - d) of |w|_1, so kappa = 1/6 - mu.
/// Valid only when the three bases cover {0..|c|_inf} and kappa > 0.
struct InstanceConstants {
  Rational rho;
  Rational beta;
  Rational mu;
  Rational kappa;
  bool bases_cover = false;
  bool valid = false;
};

inline InstanceConstants instance_constants(const WeightVector& c, const std::array<std::vector<std::size_t>, 3>& bases) {
  detail::validate_bases(c.size(), bases);
  InstanceConstants k;
  const Rational l1(c.l1());
  k.rho = Rational(c.linf()) / l1;
  k.beta = 0;
  k.bases_cover = true;
  for (const auto& b : bases) {
    const Rational share = Rational(sum_over(c.entries(), b)) / l1;
    if (share > k.beta) k.beta = share;
    std::vector<Integer> values;
    for (auto i : b) values.push_back(c[i]);
    if (b.empty() || !is_additive_basis(values, c.linf())) k.bases_cover = false;
  }
  const Rational d = k.rho > k.beta ? k.rho : k.beta;
  if (d >= Rational(1, 2)) {
    k.mu = 0;
    k.kappa = 0;
    return k;
  }
  k.mu = (d + k.rho) / (Rational(1, 2) - d);
  k.kappa = Rational(1, 6) - k.mu;
  k.valid = k.bases_cover && k.kappa > 0;
  return k;
}

}  // namespace gcrank
