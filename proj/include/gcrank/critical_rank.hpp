#pragma once

// L_c(eps), the length of the shortest critical vector: exact search at small
// n, the explicit upper bound floor(delta c), certified lower bounds on an
// eps-grid, and the resulting lower bound on the Chvatal rank.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcrank/core.hpp"
#include "gcrank/error.hpp"
#include "gcrank/hardness.hpp"
#include "gcrank/knapsack.hpp"
#include "gcrank/numeric.hpp"
#include "gcrank/parallel.hpp"

namespace gcrank {

// ---------------------------------------------------------------------------
// Shortest critical vector by enumeration

struct LMinResult {
  bool found = false;            // false: no critical vector with norm <= search_budget
  Integer value;                 // |witness|_1 when found
  ProfitVector witness;
  Integer search_budget;
  std::uint64_t vectors_tested = 0;

  /// Certified lower bound on L_c(eps).
  Integer lower_bound() const { return found ? value : Integer(search_budget + 1); }
};

struct LMinOptions {
  unsigned jobs = 1;
  KnapsackBudget knapsack;
  std::size_t block = 4096;  // vectors per parallel batch
};

namespace detail {

// Nonnegative vectors with |v|_1 = s in increasing lexicographic order.
class CompositionCursor {
 public:
  CompositionCursor(std::size_t n, std::uint64_t s) : v_(n, 0) {
    if (n > 0) v_.back() = s;
  }

  const std::vector<std::uint64_t>& value() const { return v_; }

  bool next() {
    const std::size_t n = v_.size();
    if (n <= 1) return false;
    // Find the rightmost position before the last that can be increased: the
    // tail after it must then be rebuilt in its smallest arrangement.
    std::uint64_t tail = v_[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
      if (tail > 0) {
        ++v_[i];
        --tail;
        for (std::size_t j = i + 1; j < n; ++j) v_[j] = 0;
        v_[n - 1] = tail;
        return true;
      }
      tail += v_[i];
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> v_;
};

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const auto r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace detail

/// Searches nonnegative vectors by increasing norm (lexicographic within a
/// norm), skipping those with entry gcd > 1 since criticality is invariant
/// under positive scaling. Returns the first critical vector.
inline LMinResult l_min(const Instance& inst, const Integer& budget, const LMinOptions& opt = {}) {
  if (budget < 0) throw Error(ErrorCode::kInvalidArgument, "budget must be nonnegative");
  if (!fits_int64(budget)) throw Error(ErrorCode::kTooLarge, "budget too large");
  LMinResult res;
  res.search_budget = budget;
  const std::size_t n = inst.n();
  const auto max_norm = budget.convert_to<std::uint64_t>();
  for (std::uint64_t s = 1; s <= max_norm; ++s) {
    detail::CompositionCursor cur(n, s);
    bool more = true;
    while (more) {
      std::vector<std::vector<std::uint64_t>> batch;
      while (more && batch.size() < opt.block) {
        const auto& v = cur.value();
        std::uint64_t g = 0;
        for (auto x : v) g = detail::gcd_u64(g, x);
        if (g == 1) batch.push_back(v);
        more = cur.next();
      }
      std::vector<char> hit(batch.size(), 0);
      parallel_for(batch.size(), opt.jobs, [&](std::size_t k) {
        ProfitVector p;
        for (auto x : batch[k]) p.entries.emplace_back(x);
        hit[k] = is_critical(inst, p, opt.knapsack).is_critical ? 1 : 0;
      });
      for (std::size_t k = 0; k < batch.size(); ++k) {
        if (!hit[k]) continue;
        res.vectors_tested += k + 1;
        res.found = true;
        res.value = s;
        for (auto x : batch[k]) res.witness.entries.emplace_back(x);
        return res;
      }
      res.vectors_tested += batch.size();
    }
  }
  return res;
}

/// floor(delta c) with delta = n / (|c|_1 eps): always critical, norm <= n/eps.
inline ProfitVector critical_upper(const Instance& inst) {
  if (inst.eps() <= 0) throw Error(ErrorCode::kInvalidEpsilon, "critical_upper needs eps > 0");
  const Rational delta = Rational(Integer(inst.n())) / (Rational(inst.c().l1()) * inst.eps());
  ProfitVector out;
  for (const auto& ci : inst.c().entries()) out.entries.push_back(floor(delta * Rational(ci)));
  return out;
}

// ---------------------------------------------------------------------------
// Necessary-condition sweep: the smallest norm k for which some ct with
// |ct|_1 <= k and some lambda > 0 reach |lambda ct - c|_1 <= T. Every critical
// vector satisfies the condition, so L_c(eps) >= k.

struct NcSweepResult {
  Integer bound;             // min(k*, budget + 1)
  bool found = false;        // k* <= budget
  Rational lambda;           // lambda = v / t attaining k* when found
  std::uint64_t lambdas = 0; // lambda values examined
};

namespace detail {

using Wide = __int128;

inline Wide to_wide(const Integer& x) {
  if (bit_length(abs(x)) > 120) throw Error(ErrorCode::kTooLarge, "value exceeds 120 bits: " + x.str());
  const bool neg = x < 0;
  Integer a = abs(x);
  const Integer mask = Integer(~std::uint64_t{0});
  const Wide hi = static_cast<Wide>(Integer(a >> 64).convert_to<std::uint64_t>());
  const Wide lo = static_cast<Wide>(Integer(a & mask).convert_to<std::uint64_t>());
  const Wide r = (hi << 64) | lo;
  return neg ? -r : r;
}

inline Integer from_wide(Wide x) {
  const bool neg = x < 0;
  if (neg) x = -x;
  Integer r = Integer(static_cast<std::uint64_t>(x >> 64));
  r <<= 64;
  r += Integer(static_cast<std::uint64_t>(x));
  return neg ? Integer(-r) : r;
}

struct SweepData {
  std::vector<Wide> c;      // all entries, zeros included
  std::vector<Wide> values; // distinct positive entries, ascending
  Wide total = 0;
};

inline SweepData sweep_data(const std::vector<Integer>& c) {
  SweepData d;
  for (const auto& x : c) {
    d.c.push_back(to_wide(x));
    d.total += d.c.back();
    if (x > 0) d.values.push_back(d.c.back());
  }
  std::sort(d.values.begin(), d.values.end());
  d.values.erase(std::unique(d.values.begin(), d.values.end()), d.values.end());
  return d;
}

// floor(T * t) for T = p/q >= 0.
inline Wide floor_scaled(const Rational& T, std::uint64_t t) { return to_wide(floor(T * Rational(Integer(t)))); }

// Minimal number of increments at lambda = v / t bringing the residual to <= T
// (scaled by t, need = total t - floor(T t) must be gained). -1 if impossible.
inline Wide min_increments(const SweepData& d, Wide v, std::uint64_t t, Wide need) {
  const Wide tt = static_cast<Wide>(t);
  Wide full = 0;
  for (auto ci : d.c) full += (ci * tt) / v;
  if (v * full >= need) return (need + v - 1) / v;
  Wide rem = need - v * full;
  std::vector<Wide> gains;
  for (auto ci : d.c) {
    const Wide g = 2 * ((ci * tt) % v) - v;
    if (g > 0) gains.push_back(g);
  }
  std::sort(gains.begin(), gains.end(), std::greater<>());
  Wide k = full;
  for (auto g : gains) {
    ++k;
    if (g >= rem) return k;
    rem -= g;
  }
  return -1;
}

}  // namespace detail

inline NcSweepResult nc_min_norm(const std::vector<Integer>& c, const Rational& threshold, const Integer& budget) {
  if (budget < 0 || !fits_int64(budget)) throw Error(ErrorCode::kInvalidArgument, "bad sweep budget");
  const auto d = detail::sweep_data(c);
  NcSweepResult r;
  if (d.values.empty()) throw Error(ErrorCode::kAllZeroWeights, "weight vector has no positive entry");
  if (Rational(Integer(sum(c))) <= threshold) {
    // ct = e_i with lambda = c_i leaves |c|_1 - c_i.
    r.found = budget >= 1;
    r.bound = budget >= 1 ? Integer(1) : Integer(budget + 1);
    r.lambda = Rational(Integer(sum(c)));
    return r;
  }
  const auto limit = budget.convert_to<std::uint64_t>();
  std::uint64_t best = limit + 1;
  // The optimal lambda for a vector of norm k sits at some c_i / t with t <= k.
  for (std::uint64_t t = 1; t < best; ++t) {
    const detail::Wide need = d.total * static_cast<detail::Wide>(t) - detail::floor_scaled(threshold, t);
    // Scanning values downward: the full-step lower bound need / v grows as v
    // shrinks, so once it reaches best the remaining values are skipped.
    // The largest value failing this test means every later t fails too.
    if ((need + d.values.back() - 1) / d.values.back() >= static_cast<detail::Wide>(best)) break;
    for (auto it = d.values.rbegin(); it != d.values.rend(); ++it) {
      const detail::Wide v = *it;
      if ((need + v - 1) / v >= static_cast<detail::Wide>(best)) break;
      ++r.lambdas;
      const detail::Wide k = detail::min_increments(d, v, t, need);
      if (k >= 0 && k < static_cast<detail::Wide>(best)) {
        best = static_cast<std::uint64_t>(k < 1 ? 1 : k);
        r.lambda = Rational(detail::from_wide(v), Integer(t));
      }
    }
  }
  r.found = best <= limit;
  r.bound = Integer(best);
  return r;
}

/// min |lambda x - c|_1 over integer x >= 0 with |x|_1 <= k at lambda = v / t,
/// times t. Written separately from the sweep so certificates can be replayed
/// by different code: full steps are counted per coordinate and the partial
/// steps are chosen by selection rather than a sorted scan.
inline Integer scaled_residual_after(const std::vector<Integer>& c, const Integer& v, const Integer& t, const Integer& k) {
  Integer residual = 0, full = 0;
  std::vector<Integer> partial;
  for (const auto& ci : c) {
    const Integer scaled = ci * t;
    residual += scaled;
    Integer q, r;
    boost::multiprecision::divide_qr(scaled, v, q, r);
    full += q;
    if (2 * r > v) partial.push_back(2 * r - v);
  }
  if (k <= full) return residual - v * k;
  residual -= v * full;
  Integer extra = k - full;
  if (extra >= Integer(partial.size())) {
    for (const auto& g : partial) residual -= g;
    return residual;
  }
  const auto e = extra.convert_to<std::size_t>();
  std::nth_element(partial.begin(), partial.begin() + static_cast<std::ptrdiff_t>(e), partial.end(), std::greater<>());
  for (std::size_t i = 0; i < e; ++i) residual -= partial[i];
  return residual;
}

// ---------------------------------------------------------------------------
// Gamma certificates

enum class GammaMethod { kExactLmin, kNecessaryCondition };

inline std::string_view gamma_method_name(GammaMethod m) {
  return m == GammaMethod::kExactLmin ? "exact_lmin" : "necessary_condition";
}

inline GammaMethod parse_gamma_method(std::string_view s) {
  if (s == "exact_lmin") return GammaMethod::kExactLmin;
  if (s == "necessary_condition" || s == "nc") return GammaMethod::kNecessaryCondition;
  throw Error(ErrorCode::kParse, "unknown gamma method '" + std::string(s) + "'");
}

struct GammaPoint {
  Rational eps;
  Integer l_bound;               // certified L_c(eps) >= l_bound
  bool exact = false;            // l_bound is L_c(eps) itself (exact method, witness found)
  bool condition_applies = true; // necessary condition valid at this eps
  ProfitVector witness;          // exact method: shortest critical vector
  std::optional<Rational> lambda;  // sweep: lambda attaining the bound
};

struct GammaCertificate {
  std::vector<Integer> c;
  std::vector<std::vector<std::size_t>> bases;
  GammaMethod method = GammaMethod::kNecessaryCondition;
  Rational delta0, delta1;
  std::vector<GammaPoint> points;  // grid order: delta0 first, delta1 last
  Integer budget;                  // l_min or sweep budget
  NcConstants constants;           // necessary-condition method only
  Rational gamma;
  std::size_t weakest_cell = 0;
};

struct GammaOptions {
  Integer lmin_budget = 12;
  Integer sweep_budget = 200000;
  unsigned jobs = 1;
  KnapsackBudget knapsack;
};

inline void validate_grid(const Rational& delta0, const Rational& delta1, const std::vector<Rational>& grid) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidGrid, "empty grid");
  if (delta1 <= 0) throw Error(ErrorCode::kInvalidGrid, "delta1 must be positive");
  if (delta0 < delta1) throw Error(ErrorCode::kInvalidGrid, "delta0 must be >= delta1");
  if (delta0 >= Rational(1, 2)) throw Error(ErrorCode::kInvalidGrid, "delta0 must be < 1/2");
  if (grid.front() != delta0 || grid.back() != delta1)
    throw Error(ErrorCode::kInvalidGrid, "grid must start at delta0 and end at delta1");
  for (std::size_t j = 1; j < grid.size(); ++j)
    if (!(grid[j] < grid[j - 1])) throw Error(ErrorCode::kInvalidGrid, "grid must be strictly decreasing");
}

/// delta0, delta0/r, delta0/r^2, ... above delta1, then delta1. Interior
/// points are rounded down to dyadic rationals with about 24 significant bits
/// so that certificates stay short; any decreasing grid is valid.
inline std::vector<Rational> geometric_grid(const Rational& delta0, const Rational& delta1, const Rational& ratio) {
  if (ratio <= 1) throw Error(ErrorCode::kInvalidGrid, "grid ratio must exceed 1");
  if (delta1 <= 0 || delta0 < delta1) throw Error(ErrorCode::kInvalidGrid, "need delta0 >= delta1 > 0");
  std::vector<Rational> g{delta0};
  for (Rational e = delta0 / ratio; e > delta1; e /= ratio) {
    const unsigned s = bit_length(ceil(1 / e)) + 24;
    const Rational snapped(floor(e * Rational(pow2(s))), pow2(s));
    if (snapped > delta1 && snapped < g.back()) g.push_back(snapped);
  }
  if (g.back() != delta1) g.push_back(delta1);
  return g;
}

/// Cell [eps_{j+1}, eps_j]: L non-increasing in eps gives L(eps) >= L(eps_j)
/// >= gamma / eps_{j+1} >= gamma / eps, so the cell certifies
/// gamma_j = L(eps_j) * eps_{j+1}. A single point certifies delta0 * L(delta0).
inline std::pair<Rational, std::size_t> stitch_gamma(const std::vector<GammaPoint>& pts) {
  if (pts.size() == 1) return {pts[0].eps * Rational(pts[0].l_bound), 0};
  Rational g;
  std::size_t weakest = 0;
  for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
    const Rational cell = Rational(pts[j].l_bound) * pts[j + 1].eps;
    if (j == 0 || cell < g) {
      g = cell;
      weakest = j;
    }
  }
  return {g, weakest};
}

inline GammaPoint gamma_point_nc(const std::vector<Integer>& c, const Integer& l1, const NcConstants& k,
                                 const Rational& eps, const Integer& budget) {
  GammaPoint p;
  p.eps = eps;
  if (!k.applies(eps)) {
    // Outside the range of the constant only nonzero-ness is known.
    p.condition_applies = false;
    p.l_bound = 1;
    return p;
  }
  const auto sw = nc_min_norm(c, k.threshold(eps, l1), budget);
  p.l_bound = sw.bound;
  if (sw.found) p.lambda = sw.lambda;
  return p;
}

inline GammaCertificate verify_gamma(const Instance& inst, const Rational& delta0, const Rational& delta1,
                                     const std::vector<Rational>& grid, GammaMethod method, const GammaOptions& opt = {}) {
  validate_grid(delta0, delta1, grid);
  GammaCertificate cert;
  cert.c = inst.c().entries();
  cert.bases = inst.bases();
  cert.method = method;
  cert.delta0 = delta0;
  cert.delta1 = delta1;
  cert.points.resize(grid.size());
  if (method == GammaMethod::kExactLmin) {
    cert.budget = opt.lmin_budget;
    LMinOptions lo;
    lo.jobs = opt.jobs;
    lo.knapsack = opt.knapsack;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const auto r = l_min(inst.with_eps(grid[j]), opt.lmin_budget, lo);
      auto& p = cert.points[j];
      p.eps = grid[j];
      p.l_bound = r.lower_bound();
      p.exact = r.found;
      if (r.found) p.witness = r.witness;
    }
  } else {
    cert.budget = opt.sweep_budget;
    cert.constants = nc_constants(inst);
    if (!cert.constants.valid)
      throw Error(ErrorCode::kUncertifiableGrid,
                  "no valid necessary-condition constant for this weight vector (bases too heavy or |c|_inf too large)");
    const Integer l1 = inst.c().l1();
    parallel_for(grid.size(), opt.jobs, [&](std::size_t j) {
      cert.points[j] = gamma_point_nc(cert.c, l1, cert.constants, grid[j], opt.sweep_budget);
    });
  }
  std::tie(cert.gamma, cert.weakest_cell) = stitch_gamma(cert.points);
  if (cert.gamma <= 0) throw Error(ErrorCode::kUncertifiableGrid, "some cell certifies gamma <= 0");
  return cert;
}

/// Geometric grids with ratios 2, 3/2, 5/4, ... until gamma reaches `target`
/// or the refinements run out; returns the best certificate seen.
inline GammaCertificate verify_gamma_auto(const Instance& inst, const Rational& delta0, const Rational& delta1,
                                          GammaMethod method, const GammaOptions& opt = {}, const Rational& target = 2,
                                          int refinements = 5, Rational ratio = 2) {
  std::optional<GammaCertificate> best;
  for (int r = 0; r <= refinements; ++r) {
    auto cert = verify_gamma(inst, delta0, delta1, geometric_grid(delta0, delta1, ratio), method, opt);
    if (!best || cert.gamma > best->gamma) best = std::move(cert);
    if (best->gamma >= target || delta0 == delta1) break;
    ratio = (ratio + 1) / 2;
  }
  return *best;
}

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> problems;
  void fail(std::string why) {
    ok = false;
    problems.push_back(std::move(why));
  }
};

/// Replays a certificate from its data alone.
inline CertificateCheck check_gamma_certificate(const GammaCertificate& cert, const GammaOptions& opt = {}) {
  CertificateCheck chk;
  std::vector<Rational> grid;
  for (const auto& p : cert.points) grid.push_back(p.eps);
  try {
    validate_grid(cert.delta0, cert.delta1, grid);
  } catch (const Error& e) {
    chk.fail(e.what());
    return chk;
  }
  const WeightVector c(cert.c);
  Instance inst(c, cert.points.front().eps);
  inst.set_bases(cert.bases);

  if (cert.method == GammaMethod::kExactLmin) {
    LMinOptions lo;
    lo.jobs = opt.jobs;
    for (std::size_t j = 0; j < cert.points.size(); ++j) {
      const auto& p = cert.points[j];
      const auto at = inst.with_eps(p.eps);
      if (p.exact) {
        if (sum(p.witness.entries) != p.l_bound || !is_critical(at, p.witness).is_critical)
          chk.fail("point " + std::to_string(j) + ": witness is not a critical vector of the stated norm");
      }
      const Integer need = p.l_bound - 1;
      if (need > cert.budget) chk.fail("point " + std::to_string(j) + ": bound exceeds the search budget");
      const auto r = l_min(at, need, lo);
      if (r.found) chk.fail("point " + std::to_string(j) + ": critical vector of norm " + r.value.str() + " below bound");
    }
  } else {
    const auto k = nc_constants(inst);
    if (!k.valid || k.source != cert.constants.source || k.kappa != cert.constants.kappa) {
      chk.fail("necessary-condition constants do not match the weight vector");
      return chk;
    }
    const Integer l1 = c.l1();
    std::vector<Integer> values;
    for (const auto& x : cert.c)
      if (x > 0) values.push_back(x);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::string> bad(cert.points.size());
    parallel_for(cert.points.size(), opt.jobs, [&](std::size_t j) {
      const auto& p = cert.points[j];
      if (p.l_bound < 1) {
        bad[j] = "nonpositive bound";
        return;
      }
      if (p.l_bound == 1) return;  // every critical vector is nonzero
      if (!k.applies(p.eps)) {
        bad[j] = "bound above 1 outside the constant's eps range";
        return;
      }
      const Rational T = k.threshold(p.eps, l1);
      const Integer kk = p.l_bound - 1;
      // Every vector of norm <= kk must fail the condition at every lambda = v / t, t <= kk.
      // Each increment gains at most v, so t with |c|_1 t - v_max kk > T t is hopeless.
      for (Integer t = 1; t <= kk; ++t) {
        const Rational Tt = T * Rational(t);
        if (Rational(l1 * t - values.back() * kk) > Tt) break;
        for (const auto& v : values) {
          if (Rational(scaled_residual_after(cert.c, v, t, kk)) <= Tt) {
            bad[j] = "norm " + kk.str() + " reaches the threshold at lambda = " + v.str() + "/" + t.str();
            return;
          }
        }
      }
    });
    for (std::size_t j = 0; j < bad.size(); ++j)
      if (!bad[j].empty()) chk.fail("point " + std::to_string(j) + ": " + bad[j]);
  }
  const auto [g, w] = stitch_gamma(cert.points);
  if (g != cert.gamma) chk.fail("gamma does not match the stitched grid value " + to_string(g));
  return chk;
}

// ---------------------------------------------------------------------------
// Rank bound

namespace detail {

// Enclosure of atanh(z) for 0 <= z < 1: partial sums of sum z^(2j+1)/(2j+1)
// from below, plus the geometric tail bound z^(2N+3) / ((2N+3)(1 - z^2)).
inline std::pair<Rational, Rational> atanh_enclosure(const Rational& z, const Rational& tol) {
  Rational sum = 0, power = z;
  const Rational z2 = z * z;
  for (unsigned j = 0;; ++j) {
    sum += power / Rational(Integer(2 * j + 1));
    power *= z2;
    const Rational tail = power / (Rational(Integer(2 * j + 3)) * (1 - z2));
    if (tail <= tol || z == 0) return {sum, sum + tail};
  }
}

}  // namespace detail

/// [lo, hi] containing ln(x) for rational x >= 1, width about 4 * tol * (k + 1).
inline std::pair<Rational, Rational> ln_enclosure(const Rational& x, const Rational& tol = Rational(1, Integer(1) << 96)) {
  if (x < 1) throw Error(ErrorCode::kInvalidArgument, "ln_enclosure expects x >= 1");
  const unsigned k = bit_length(floor(x)) - 1;
  const Rational y = x / Rational(pow2(k));  // in [1, 2)
  const auto [l2lo, l2hi] = detail::atanh_enclosure(Rational(1, 3), tol);
  const auto [ylo, yhi] = detail::atanh_enclosure((y - 1) / (y + 1), tol);
  return {2 * Rational(Integer(k)) * l2lo + 2 * ylo, 2 * Rational(Integer(k)) * l2hi + 2 * yhi};
}

/// Rounds forced by the certified per-point bounds, read off the proof of the
/// rank lemma without its gamma >= 2 simplification. One round moves eps_i to
/// at least eps_i - 1 / L(eps_i), and on the cell (eps_{j+1}, eps_j] we know
/// L >= l_j. With H(x) = inf over y in [x, delta0] of y - 1/L(y), a monotone
/// step function, eps_i >= H^i(delta0), so the rank is at least the number of
/// H-steps taken before falling below delta1.
inline Integer grid_walk_rank_bound(const std::vector<GammaPoint>& pts, std::uint64_t max_steps = 100'000'000) {
  if (pts.empty()) throw Error(ErrorCode::kInvalidGrid, "empty grid");
  for (const auto& p : pts)
    if (p.l_bound < 1) throw Error(ErrorCode::kInvalidGrid, "grid bounds must be positive");
  const Rational& delta1 = pts.back().eps;
  auto H = [&](const Rational& x) {
    std::optional<Rational> best;
    auto consider = [&](const Rational& v) {
      if (!best || v < *best) best = v;
    };
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
      if (pts[j].eps < x) break;
      consider((x > pts[j + 1].eps ? x : pts[j + 1].eps) - Rational(1) / Rational(pts[j].l_bound));
    }
    if (pts.back().eps >= x) consider(pts.back().eps - Rational(1) / Rational(pts.back().l_bound));
    return *best;
  };
  Rational x = pts.front().eps;
  std::uint64_t steps = 0;
  while (x >= delta1) {
    if (++steps > max_steps) throw Error(ErrorCode::kBudgetExceeded, "walk exceeds step budget");
    x = H(x);
  }
  return Integer(steps);
}

struct RankBound {
  Rational gamma, delta0, delta1;
  Rational ln_lo, ln_hi;  // enclosure of ln(delta0 / delta1)
  Rational bound_lo;      // (gamma / 2) * ln_lo
  Integer floor_bound;
};

/// rk(P(c, delta0)) >= (gamma/2) ln(delta0/delta1), evaluated from below.
inline RankBound rank_lower_bound(const Rational& gamma, const Rational& delta0, const Rational& delta1) {
  if (gamma < 2) throw Error(ErrorCode::kGammaTooSmall, "gamma = " + to_string(gamma) + " < 2");
  if (!(delta1 > 0) || !(delta0 > delta1)) throw Error(ErrorCode::kInvalidArgument, "need delta0 > delta1 > 0");
  RankBound r;
  r.gamma = gamma;
  r.delta0 = delta0;
  r.delta1 = delta1;
  std::tie(r.ln_lo, r.ln_hi) = ln_enclosure(delta0 / delta1);
  r.bound_lo = gamma / 2 * r.ln_lo;
  r.floor_bound = floor(r.bound_lo);
  return r;
}

}  // namespace gcrank
