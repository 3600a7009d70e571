#pragma once

// Random normal vectors that resist short simultaneous Diophantine
// approximation, the instance c = (a, b, b, b, 0) built from them, and the
// necessary condition |lambda ct - c|_1 <= 32 eps |c|_1 on critical vectors.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "gcrank/basis_greedy.hpp"
#include "gcrank/core.hpp"
#include "gcrank/error.hpp"
#include "gcrank/numeric.hpp"
#include "gcrank/random.hpp"

namespace gcrank {

// ---------------------------------------------------------------------------
// Instance generation

enum class BasisStyle {
  kPowers,  // (2^0, ..., 2^(t+1)) with t = ceil(log2 D)
  kTight,   // (1, 2, ..., 2^(k-1), 2D - (2^k - 1)): sums to exactly 2D
};

inline std::string_view basis_style_name(BasisStyle s) { return s == BasisStyle::kPowers ? "powers" : "tight"; }

inline BasisStyle parse_basis_style(std::string_view s) {
  if (s == "powers") return BasisStyle::kPowers;
  if (s == "tight") return BasisStyle::kTight;
  throw Error(ErrorCode::kParse, "unknown basis style '" + std::string(s) + "'");
}

/// 2^floor(m/8).
inline Integer default_D(int m) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "m must be nonnegative");
  return pow2(static_cast<unsigned>(m / 8));
}

inline unsigned ceil_log2(const Integer& x) {
  if (x <= 1) return 0;
  return bit_length(x - 1);
}

/// Basis for {0, ..., 2D}. With D = 2^(m/8) the powers style equals powers_basis(m).
inline std::vector<Integer> basis_for(const Integer& D, BasisStyle style) {
  if (D < 1) throw Error(ErrorCode::kInvalidArgument, "D must be positive");
  std::vector<Integer> b;
  if (style == BasisStyle::kPowers) {
    const unsigned t = ceil_log2(D);
    for (unsigned e = 0; e <= t + 1; ++e) b.push_back(pow2(e));
    return b;
  }
  const Integer top = 2 * D;
  Integer s = 0, p = 1;
  while (s + p <= top) {
    b.push_back(p);
    s += p;
    p <<= 1;
  }
  if (s < top) b.push_back(top - s);
  return b;
}

struct HardInstanceSpec {
  int m = 0;
  Integer D;
  std::uint64_t seed = 0;
  BasisStyle basis_style = BasisStyle::kPowers;
  std::vector<Integer> a;
  std::vector<Integer> b;
  std::size_t n = 0;
  std::optional<std::size_t> parity_slot;  // zero slot set to 1 to make |c|_1 even
};

struct HardInstance {
  HardInstanceSpec spec;
  Instance instance;
};

/// m entries uniform on {D, ..., 2D}, drawn from make_rng(seed) by rejection
/// on bit_length(D)-bit words.
inline std::vector<Integer> sample_hard_vector(int m, const Integer& D, std::uint64_t seed) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  if (D < 1) throw Error(ErrorCode::kInvalidArgument, "D must be positive");
  auto rng = make_rng(seed);
  std::vector<Integer> a;
  a.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) a.push_back(D + uniform_integer(rng, D));
  return a;
}

/// Layout [a | b | b | b | 0...0]. The dimension is 2m, widened when the
/// three basis copies plus a parity slot do not fit (small m).
inline HardInstance assemble_hard_instance(const std::vector<Integer>& a, const Integer& D, const Rational& eps,
                                           BasisStyle style = BasisStyle::kPowers) {
  const auto m = a.size();
  if (m < 8) throw Error(ErrorCode::kDimensionOverflow, "m = " + std::to_string(m) + " < 8 leaves no room for the bases");
  for (const auto& x : a)
    if (x < D || x > 2 * D) throw Error(ErrorCode::kInvalidArgument, "a entry " + x.str() + " outside [D, 2D]");

  HardInstance out;
  out.spec.m = static_cast<int>(m);
  out.spec.D = D;
  out.spec.basis_style = style;
  out.spec.a = a;
  out.spec.b = basis_for(D, style);
  const std::size_t nb = out.spec.b.size();

  std::vector<Integer> c(a);
  std::vector<std::vector<std::size_t>> bases(3);
  for (int copy = 0; copy < 3; ++copy) {
    for (const auto& v : out.spec.b) {
      bases[copy].push_back(c.size());
      c.push_back(v);
    }
  }
  const bool odd = sum(c) % 2 != 0;
  const std::size_t used = m + 3 * nb + (odd ? 1 : 0);
  const std::size_t n = std::max(2 * m, used);
  if (odd) out.spec.parity_slot = m + 3 * nb;
  c.resize(n, Integer(0));
  if (odd) c[*out.spec.parity_slot] = 1;
  out.spec.n = n;

  out.instance = Instance(WeightVector(std::move(c)), eps);
  out.instance.set_bases(std::move(bases));
  return out;
}

inline HardInstance generate_hard_instance(int m, const Integer& D, std::uint64_t seed, const Rational& eps,
                                           BasisStyle style = BasisStyle::kPowers) {
  auto hi = assemble_hard_instance(sample_hard_vector(m, D, seed), D, eps, style);
  hi.spec.seed = seed;
  return hi;
}

// ---------------------------------------------------------------------------
// Diophantine audit

enum class AuditMode { kCertified, kExhaustive, kHeuristic };
enum class AuditVerdict { kCounterexampleFound, kCertifiedNone, kNoneFoundHeuristic };

inline std::string_view audit_mode_name(AuditMode m) {
  switch (m) {
    case AuditMode::kCertified: return "certified";
    case AuditMode::kExhaustive: return "exhaustive";
    case AuditMode::kHeuristic: return "heuristic";
  }
  return "?";
}

inline AuditMode parse_audit_mode(std::string_view s) {
  if (s == "certified") return AuditMode::kCertified;
  if (s == "exhaustive") return AuditMode::kExhaustive;
  if (s == "heuristic") return AuditMode::kHeuristic;
  throw Error(ErrorCode::kParse, "unknown audit mode '" + std::string(s) + "'");
}

inline std::string_view verdict_name(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::kCounterexampleFound: return "counterexample_found";
    case AuditVerdict::kCertifiedNone: return "certified_none";
    case AuditVerdict::kNoneFoundHeuristic: return "none_found_heuristic";
  }
  return "?";
}

struct AuditConfig {
  Rational residual_factor = 128;  // residual bound = factor * eps * m * D
  std::optional<Rational> window_factor;  // per-index window = factor * eps * D; default 4 * residual_factor
  Rational entry_factor = 2;        // per-index size cap = floor(entry_factor / (alpha eps))
  std::uint64_t grid_budget = 50'000'000;   // relaxation events
  std::uint64_t exact_budget = 2'000'000;   // lambda values for the exact optimizer
  std::uint64_t exhaustive_budget = 5'000'000;
  std::uint64_t heuristic_samples = 2000;
  std::uint64_t seed = 0;

  Rational window() const { return window_factor ? *window_factor : Rational(4 * residual_factor); }
};

struct Approximant {
  Rational lambda;
  std::vector<Integer> atilde;
  Rational residual;
};

struct DiophantineAuditReport {
  std::vector<Integer> a;
  Integer D;
  Rational eps;
  Rational alpha;
  AuditMode mode = AuditMode::kCertified;
  Integer budget;            // floor(m / (alpha eps))
  Rational residual_bound;   // residual_factor * eps * m * D
  Rational window;           // window_factor * eps * D
  Integer entry_cap;         // floor(entry_factor / (alpha eps))
  bool in_range = true;      // 1/D <= eps <= 1/4
  AuditVerdict verdict = AuditVerdict::kNoneFoundHeuristic;
  std::string certified_by;  // "relaxation", "exact" or "exhaustive" for certified_none
  std::optional<Approximant> witness;
  // The zero approximant: ||0 * lambda - a||_1 = ||a||_1. Excluded from the
  // verdict and reported here.
  Rational zero_residual;
  bool zero_satisfies = false;
  std::size_t zero_good_indices = 0;   // indices good with atilde_i = 0 alone
  std::size_t max_good_indices = 0;    // relaxation maximum over lambda
  std::uint64_t lambda_grid_size = 0;
  std::uint64_t exact_lambda_count = 0;
};

namespace detail {

inline Rational residual_of(const std::vector<Integer>& a, const std::vector<Integer>& at, const Rational& lambda) {
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += abs(lambda * Rational(at[i]) - Rational(a[i]));
  return r;
}

// Best atilde >= 0 with 1 <= |atilde|_1 <= budget at a fixed lambda > 0.
// Increments per coordinate have gains lambda (while lambda * x <= a_i), then
// one partial gain 2 r_i - lambda, then negative gains; the objective is
// separable convex so taking the largest gains first is optimal.
inline Approximant best_at_lambda(const std::vector<Integer>& a, const Rational& lambda, const Integer& budget) {
  const std::size_t m = a.size();
  Approximant out;
  out.lambda = lambda;
  out.atilde.assign(m, Integer(0));
  std::vector<Integer> full(m);
  std::vector<Rational> rem(m);
  Integer total_full = 0;
  for (std::size_t i = 0; i < m; ++i) {
    full[i] = floor(Rational(a[i]) / lambda);
    rem[i] = Rational(a[i]) - lambda * Rational(full[i]);
    total_full += full[i];
  }
  Integer left = budget;
  for (std::size_t i = 0; i < m && left > 0; ++i) {
    const Integer take = full[i] < left ? full[i] : left;
    out.atilde[i] = take;
    left -= take;
  }
  if (left > 0) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < m; ++i)
      if (2 * rem[i] > lambda) order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return rem[x] > rem[y]; });
    for (auto i : order) {
      if (left == 0) break;
      out.atilde[i] += 1;
      left -= 1;
    }
  }
  bool zero = true;
  for (const auto& x : out.atilde)
    if (x != 0) zero = false;
  if (zero && budget >= 1) {
    // No profitable increment: the best nonzero choice is the single unit with the largest gain.
    std::size_t best = 0;
    Rational best_gain;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational gain = Rational(a[i]) - abs(lambda - Rational(a[i]));
      if (i == 0 || gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    out.atilde[best] = 1;
  }
  out.residual = residual_of(a, out.atilde, lambda);
  return out;
}

// Minimizer over lambda of sum_i w_i |lambda - p_i|: a weighted median.
inline Rational weighted_median(std::vector<std::pair<Rational, Integer>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Integer total = 0;
  for (const auto& p : pts) total += p.second;
  Integer acc = 0;
  for (const auto& p : pts) {
    acc += p.second;
    if (2 * acc >= total) return p.first;
  }
  return pts.empty() ? Rational(0) : pts.back().first;
}

inline bool less_approx(const Approximant& x, const Approximant& y) {
  if (x.residual != y.residual) return x.residual < y.residual;
  if (x.lambda != y.lambda) return x.lambda < y.lambda;
  return x.atilde < y.atilde;
}

}  // namespace detail

/// Optimal lambda for a fixed approximant, minimizing |lambda at - a|_1.
inline Rational optimal_lambda(const std::vector<Integer>& a, const std::vector<Integer>& at) {
  std::vector<std::pair<Rational, Integer>> pts;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (at[i] > 0) pts.emplace_back(Rational(a[i], at[i]), at[i]);
  if (pts.empty()) return 0;
  return detail::weighted_median(std::move(pts));
}

/// Lambda values where the relaxation count can change, excluding duplicates.
inline std::uint64_t relaxation_event_count(std::size_t m, const Integer& entry_cap) {
  if (entry_cap <= 0) return 0;
  const Integer ev = Integer(2) * Integer(m) * entry_cap;
  return ev > Integer(std::numeric_limits<std::uint64_t>::max() / 2) ? std::numeric_limits<std::uint64_t>::max() / 2
                                                                      : ev.convert_to<std::uint64_t>();
}

namespace detail {

// Maximum over lambda > 0 of the number of indices i admitting atilde_i in
// {0..cap} with |lambda atilde_i - a_i| <= W. Each (i, t >= 1) contributes a
// closed lambda-interval; indices with a_i <= W are good for every lambda.
inline std::size_t relaxation_max_good(const std::vector<Integer>& a, const Rational& W, const Integer& cap,
                                       std::size_t& zero_good) {
  const std::size_t m = a.size();
  zero_good = 0;
  std::vector<bool> always(m, false);
  for (std::size_t i = 0; i < m; ++i)
    if (Rational(a[i]) <= W) {
      always[i] = true;
      ++zero_good;
    }
  struct Event {
    Rational x;
    int kind;  // 0 open, 1 close: opens first at equal x keeps intervals closed
    std::size_t i;
  };
  std::vector<Event> ev;
  if (cap > 0) {
    const auto t_max = cap.convert_to<std::uint64_t>();
    for (std::size_t i = 0; i < m; ++i) {
      if (always[i]) continue;
      for (std::uint64_t t = 1; t <= t_max; ++t) {
        const Rational lo = (Rational(a[i]) - W) / Rational(Integer(t));
        const Rational hi = (Rational(a[i]) + W) / Rational(Integer(t));
        ev.push_back({lo > 0 ? lo : Rational(0), 0, i});
        ev.push_back({hi, 1, i});
      }
    }
  }
  std::sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) {
    if (x.x != y.x) return x.x < y.x;
    return x.kind < y.kind;
  });
  std::vector<int> cover(m, 0);
  std::size_t cur = 0, best = 0;
  for (const auto& e : ev) {
    if (e.kind == 0) {
      if (cover[e.i]++ == 0) ++cur;
      best = std::max(best, cur);
    } else if (--cover[e.i] == 0) {
      --cur;
    }
  }
  return best + zero_good;
}

inline void enumerate_compositions(std::size_t m, const Integer& total, std::vector<Integer>& cur, std::size_t pos,
                                   const std::function<void(const std::vector<Integer>&)>& visit) {
  if (pos + 1 == m) {
    cur[pos] = total;
    visit(cur);
    return;
  }
  for (Integer x = total; x >= 0; --x) {
    cur[pos] = x;
    enumerate_compositions(m, total - x, cur, pos + 1, visit);
  }
}

}  // namespace detail

/// Exact minimum of |lambda at - a|_1 over lambda > 0 and at != 0 with
/// |at|_1 <= budget. Optimal lambda lies at a breakpoint a_i / t.
inline std::optional<Approximant> exact_best_approximant(const std::vector<Integer>& a, const Integer& budget,
                                                          std::uint64_t lambda_limit, std::uint64_t& lambda_count) {
  lambda_count = 0;
  if (budget < 1) return std::nullopt;
  const Integer count = Integer(a.size()) * budget;
  if (count > Integer(lambda_limit)) {
    lambda_count = std::numeric_limits<std::uint64_t>::max();
    return std::nullopt;
  }
  std::vector<Rational> lambdas;
  const auto t_max = budget.convert_to<std::uint64_t>();
  for (const auto& ai : a)
    for (std::uint64_t t = 1; t <= t_max; ++t) lambdas.emplace_back(Rational(ai, Integer(t)));
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
  lambda_count = lambdas.size();
  std::optional<Approximant> best;
  for (const auto& l : lambdas) {
    auto cand = detail::best_at_lambda(a, l, budget);
    if (!best || detail::less_approx(cand, *best)) best = std::move(cand);
  }
  return best;
}

inline DiophantineAuditReport diophantine_audit(const std::vector<Integer>& a, const Integer& D, const Rational& eps,
                                                const Rational& alpha, AuditMode mode, const AuditConfig& cfg = {}) {
  const std::size_t m = a.size();
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "empty vector a");
  if (eps <= 0) throw Error(ErrorCode::kInvalidEpsilon, "audit needs eps > 0");
  if (alpha <= 0) throw Error(ErrorCode::kInvalidArgument, "alpha must be positive");
  if (D < 1) throw Error(ErrorCode::kInvalidArgument, "D must be positive");

  DiophantineAuditReport r;
  r.a = a;
  r.D = D;
  r.eps = eps;
  r.alpha = alpha;
  r.mode = mode;
  r.budget = floor(Rational(Integer(m)) / (alpha * eps));
  r.residual_bound = cfg.residual_factor * eps * Rational(Integer(m)) * Rational(D);
  r.window = cfg.window() * eps * Rational(D);
  r.entry_cap = floor(cfg.entry_factor / (alpha * eps));
  r.in_range = eps >= Rational(Integer(1), D) && eps <= Rational(1, 4);
  r.zero_residual = Rational(sum(a));
  r.zero_satisfies = r.zero_residual <= r.residual_bound;

  auto accept = [&](Approximant w) {
    r.verdict = AuditVerdict::kCounterexampleFound;
    r.witness = std::move(w);
  };

  if (mode == AuditMode::kExhaustive) {
    // Every at >= 0 with 1 <= |at|_1 <= budget, each at its optimal lambda.
    const Integer combos = [&] {
      Integer total = 0, row = 1;  // C(k + m - 1, m - 1) summed over k
      for (Integer k = 1; k <= r.budget; ++k) {
        row = 1;
        for (std::size_t j = 1; j < m; ++j) row = row * (k + Integer(j)) / Integer(j);
        total += row;
        if (total > Integer(cfg.exhaustive_budget)) break;
      }
      return total;
    }();
    if (combos > Integer(cfg.exhaustive_budget))
      throw Error(ErrorCode::kGridTooLarge, "exhaustive search exceeds " + std::to_string(cfg.exhaustive_budget) + " vectors");
    std::optional<Approximant> best;
    std::vector<Integer> cur(m);
    for (Integer k = 1; k <= r.budget; ++k) {
      detail::enumerate_compositions(m, k, cur, 0, [&](const std::vector<Integer>& at) {
        Approximant cand{optimal_lambda(a, at), at, 0};
        cand.residual = detail::residual_of(a, at, cand.lambda);
        if (!best || detail::less_approx(cand, *best)) best = std::move(cand);
      });
    }
    r.exact_lambda_count = static_cast<std::uint64_t>(combos.convert_to<std::uint64_t>());
    if (best && best->residual <= r.residual_bound) accept(*best);
    else {
      r.verdict = AuditVerdict::kCertifiedNone;
      r.certified_by = "exhaustive";
    }
    return r;
  }

  if (mode == AuditMode::kHeuristic) {
    auto rng = make_rng(cfg.seed, 0x68657572);
    std::optional<Approximant> best;
    if (r.budget >= 1) {
      const auto t_max = r.budget > Integer(std::numeric_limits<std::int64_t>::max())
                             ? std::numeric_limits<std::int64_t>::max()
                             : r.budget.convert_to<std::int64_t>();
      for (std::uint64_t s = 0; s < cfg.heuristic_samples; ++s) {
        const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(m) - 1));
        const auto t = uniform_int(rng, 1, t_max);
        auto cand = detail::best_at_lambda(a, Rational(a[i], Integer(t)), r.budget);
        if (!best || detail::less_approx(cand, *best)) best = std::move(cand);
      }
    }
    if (best && best->residual <= r.residual_bound) accept(*best);
    else r.verdict = AuditVerdict::kNoneFoundHeuristic;
    return r;
  }

  // Certified: the coordinatewise relaxation first, then the exact optimizer.
  r.lambda_grid_size = relaxation_event_count(m, r.entry_cap);
  if (r.lambda_grid_size > cfg.grid_budget)
    throw Error(ErrorCode::kGridTooLarge, "relaxation grid has " + std::to_string(r.lambda_grid_size) + " events");
  r.max_good_indices = detail::relaxation_max_good(a, r.window, r.entry_cap, r.zero_good_indices);
  if (4 * r.max_good_indices < m) {
    r.verdict = AuditVerdict::kCertifiedNone;
    r.certified_by = "relaxation";
    return r;
  }
  auto best = exact_best_approximant(a, r.budget, cfg.exact_budget, r.exact_lambda_count);
  if (r.exact_lambda_count == std::numeric_limits<std::uint64_t>::max()) {
    auto h = cfg;
    auto heur = diophantine_audit(a, D, eps, alpha, AuditMode::kHeuristic, h);
    r.verdict = heur.verdict;
    r.witness = heur.witness;
    r.exact_lambda_count = 0;
    return r;
  }
  if (best && best->residual <= r.residual_bound) accept(*best);
  else {
    r.verdict = AuditVerdict::kCertifiedNone;
    r.certified_by = "exact";
  }
  return r;
}

/// Re-checks both defining inequalities of a reported approximant.
inline bool verify_approximant(const std::vector<Integer>& a, const Approximant& w, const Integer& budget,
                               const Rational& residual_bound) {
  if (w.atilde.size() != a.size() || w.lambda <= 0) return false;
  Integer norm = 0;
  bool nonzero = false;
  for (const auto& x : w.atilde) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
    norm += x;
  }
  const Rational res = detail::residual_of(a, w.atilde, w.lambda);
  return nonzero && norm <= budget && res == w.residual && res <= residual_bound;
}

// ---------------------------------------------------------------------------
// Necessary condition on critical vectors

struct NecessaryConditionResult {
  Rational lambda_opt;
  Rational residual;   // min over lambda > 0 of |lambda ct - c|_1 (an infimum when lambda_opt = 0)
  Rational threshold;  // factor * eps * |c|_1
  Rational factor;
  bool satisfied = false;
  bool preconditions_met = false;
  // satisfied == false proves non-criticality only when this is set.
  bool certifies = false;
};

/// Paper hypotheses on c: three registered disjoint bases for {0..|c|_inf},
/// |c|_inf <= delta |c|_1 and c(B_l) <= delta |c|_1.
inline bool weight_preconditions(const Instance& inst, const Rational& delta = Rational(1, 100)) {
  if (inst.bases().size() != 3) return false;
  const auto bases = bases_array(inst.bases());
  try {
    detail::validate_bases(inst.n(), bases);
  } catch (const Error&) {
    return false;
  }
  const auto& c = inst.c().entries();
  // lemma3_preconditions also demands ct > 0; pass c itself to test only c.
  return lemma3_preconditions(c, c, bases, delta);
}

inline Rational min_residual_lambda(const std::vector<Integer>& c, const std::vector<Integer>& ct) {
  std::vector<std::pair<Rational, Integer>> pts;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (ct[i] > 0) pts.emplace_back(Rational(c[i], ct[i]), ct[i]);
  return detail::weighted_median(std::move(pts));
}

inline Rational l1_residual(const std::vector<Integer>& c, const std::vector<Integer>& ct, const Rational& lambda) {
  return detail::residual_of(c, ct, lambda);
}

/// Condition with a caller-chosen factor F: critical ct force min_lambda
/// |lambda ct - c|_1 <= F eps |c|_1. `valid_eps_max` is the largest eps for
/// which the constant behind F was derived.
inline NecessaryConditionResult necessary_condition_with(const Instance& inst, const ProfitVector& ctilde,
                                                         const Rational& factor, bool preconditions_met,
                                                         const Rational& valid_eps_max) {
  if (ctilde.size() != inst.n()) throw Error(ErrorCode::kLengthMismatch, "profit vector length differs from n");
  if (!ctilde.nonnegative()) throw Error(ErrorCode::kNegativeProfit, "necessary condition expects ctilde >= 0");
  if (ctilde.is_zero()) throw Error(ErrorCode::kZeroVector, "necessary condition needs a nonzero vector");
  NecessaryConditionResult r;
  r.factor = factor;
  r.lambda_opt = min_residual_lambda(inst.c().entries(), ctilde.entries);
  r.residual = l1_residual(inst.c().entries(), ctilde.entries, r.lambda_opt);
  r.threshold = factor * inst.eps() * Rational(inst.c().l1());
  r.satisfied = r.residual <= r.threshold;
  r.preconditions_met = preconditions_met;
  r.certifies = preconditions_met && inst.eps() <= valid_eps_max;
  return r;
}

/// The condition with the paper's constant 32 (valid for eps <= 1/32 under
/// the delta = 1/100 hypotheses).
inline NecessaryConditionResult necessary_condition(const Instance& inst, const ProfitVector& ctilde,
                                                    const Rational& factor = 32) {
  return necessary_condition_with(inst, ctilde, factor, weight_preconditions(inst), Rational(1, 32));
}

/// Coefficient kappa of the profit bound max_{P_I} ct.x >= |ct|_1/2 +
/// kappa |ct - c/lambda|_1: the paper's 1/16 when its hypotheses hold,
/// otherwise the instance value from instance_constants, whichever is larger.
///
/// Criticality then gives r := |lambda ct - c|_1 <= (eps/kappa) |lambda ct|_1
/// <= (eps/kappa)(|c|_1 + r), so r <= eps |c|_1 / (kappa - eps) for eps < kappa.
/// At eps <= kappa/2 this is the familiar 2/kappa factor (32 for kappa = 1/16).
struct NcConstants {
  std::string source;  // "paper", "instance" or "none"
  Rational kappa;
  bool valid = false;

  bool applies(const Rational& eps) const { return valid && eps < kappa; }
  /// Residual bound eps |c|_1 / (kappa - eps); requires applies(eps).
  Rational threshold(const Rational& eps, const Integer& l1) const { return eps * Rational(l1) / (kappa - eps); }
};

inline NcConstants nc_constants(const Instance& inst) {
  NcConstants k;
  if (weight_preconditions(inst)) {
    k.source = "paper";
    k.kappa = Rational(1, 16);
    k.valid = true;
  }
  if (inst.bases().size() == 3) {
    const auto ic = instance_constants(inst.c(), bases_array(inst.bases()));
    if (ic.valid && (!k.valid || ic.kappa > k.kappa)) {
      k.source = "instance";
      k.kappa = ic.kappa;
      k.valid = true;
    }
  }
  if (!k.valid) k.source = "none";
  return k;
}

}  // namespace gcrank
