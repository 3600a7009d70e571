#pragma once

// Tiny-dimension H-polytopes: Gomory-Chvatal cuts, the closure truncated to
// normals with |c|_inf <= K, and the position of the diagonal point
// x*(eps) = (1/2 + eps) 1 across rounds.
//
// The truncated closure is an upper-bounding relaxation of the true closure
// P': it intersects only finitely many of the cuts. Statements of the form
// "x*(eps) is cut off by round i" are therefore sound for the true sequence.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gcrank/core.hpp"
#include "gcrank/error.hpp"
#include "gcrank/lp.hpp"
#include "gcrank/numeric.hpp"

namespace gcrank {

struct Inequality {
  std::vector<Integer> a;
  Rational b;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

struct HPolytope {
  std::size_t n = 0;
  std::vector<Inequality> ineqs;
};

struct ZeroOneHull {
  std::size_t n = 0;
  std::vector<std::vector<int>> vertices;
};

inline constexpr std::size_t kSandboxMaxDim = 4;

inline HPolytope unit_cube(std::size_t n) {
  HPolytope p;
  p.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> lo(n, Integer(0)), hi(n, Integer(0));
    lo[i] = -1;
    hi[i] = 1;
    p.ineqs.push_back({lo, 0});
    p.ineqs.push_back({hi, 1});
  }
  return p;
}

inline bool is_cube_bound(const Inequality& q) {
  int nonzero = 0;
  Integer v = 0;
  for (const auto& x : q.a)
    if (x != 0) {
      ++nonzero;
      v = x;
    }
  return nonzero == 1 && ((v == 1 && q.b == 1) || (v == -1 && q.b == 0));
}

inline Rational dot(const std::vector<Integer>& a, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
  return s;
}

inline bool contains(const HPolytope& p, const std::vector<Rational>& x) {
  for (const auto& q : p.ineqs)
    if (dot(q.a, x) > q.b) return false;
  return true;
}

inline LpResult lp_max_full(const HPolytope& poly, const std::vector<Integer>& objective) {
  if (objective.size() != poly.n) throw Error(ErrorCode::kLengthMismatch, "objective length differs from n");
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& q : poly.ineqs) {
    if (q.a.size() != poly.n) throw Error(ErrorCode::kLengthMismatch, "inequality length differs from n");
    rows.emplace_back(q.a.begin(), q.a.end());
    rhs.push_back(q.b);
  }
  const auto r = lp_solve(rows, rhs, std::vector<Rational>(objective.begin(), objective.end()));
  if (r.status == LpStatus::kInfeasible) throw Error(ErrorCode::kEmptyPolytope, "polytope is empty");
  if (r.status == LpStatus::kUnbounded) throw Error(ErrorCode::kUnboundedPolytope, "objective is unbounded");
  return r;
}

inline Rational lp_max(const HPolytope& poly, const std::vector<Integer>& objective) {
  return lp_max_full(poly, objective).value;
}

/// c.x <= floor(max{c.y : y in poly}).
inline Inequality gc_cut(const HPolytope& poly, const std::vector<Integer>& c) {
  return Inequality{c, Rational(floor(lp_max(poly, c)))};
}

struct ClosureOptions {
  std::uint64_t enumeration_budget = 2'000'000;  // n (2K+1)^n
  bool reduce = true;
};

/// Drops inequalities implied by the others; cube bounds are always kept.
inline HPolytope remove_redundant(const HPolytope& poly) {
  HPolytope cur = poly;
  // Exact duplicates and dominated copies of the same normal first.
  std::vector<Inequality> uniq;
  for (const auto& q : cur.ineqs) {
    auto it = std::find_if(uniq.begin(), uniq.end(), [&](const Inequality& u) { return u.a == q.a; });
    if (it == uniq.end()) uniq.push_back(q);
    else if (q.b < it->b) it->b = q.b;
  }
  cur.ineqs = std::move(uniq);
  for (std::size_t i = 0; i < cur.ineqs.size();) {
    if (is_cube_bound(cur.ineqs[i])) {
      ++i;
      continue;
    }
    HPolytope rest;
    rest.n = cur.n;
    for (std::size_t j = 0; j < cur.ineqs.size(); ++j)
      if (j != i) rest.ineqs.push_back(cur.ineqs[j]);
    // Unbounded without it: the inequality is needed.
    bool redundant = false;
    try {
      redundant = lp_max(rest, cur.ineqs[i].a) <= cur.ineqs[i].b;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnboundedPolytope) throw;
    }
    if (redundant) cur.ineqs = std::move(rest.ineqs);
    else ++i;
  }
  return cur;
}

/// Intersection of poly with the GC cuts of all primitive c with |c|_inf <= K.
/// Non-primitive normals are implied: floor(k beta) >= k floor(beta).
inline HPolytope candidate_closure(const HPolytope& poly, int K, const ClosureOptions& opt = {}) {
  const std::size_t n = poly.n;
  if (n == 0 || n > kSandboxMaxDim) throw Error(ErrorCode::kTooLarge, "sandbox supports 1 <= n <= 4");
  if (K < 1) throw Error(ErrorCode::kInvalidArgument, "K must be at least 1");
  const Integer work = Integer(n) * boost::multiprecision::pow(Integer(2 * K + 1), static_cast<unsigned>(n));
  if (work > Integer(opt.enumeration_budget))
    throw Error(ErrorCode::kBudgetExceeded, "closure enumeration n(2K+1)^n = " + work.str() + " exceeds budget");

  HPolytope out = poly;
  const auto base = unit_cube(n);
  for (const auto& q : base.ineqs)
    if (std::find(out.ineqs.begin(), out.ineqs.end(), q) == out.ineqs.end()) out.ineqs.push_back(q);

  std::vector<int> c(n, -K);
  for (;;) {
    std::vector<Integer> ci(c.begin(), c.end());
    if (content(ci) == 1) {
      const Rational beta = lp_max(poly, ci);
      const Integer fb = floor(beta);
      if (Rational(fb) < beta) out.ineqs.push_back({ci, Rational(fb)});
    }
    std::size_t pos = 0;
    while (pos < n && c[pos] == K) c[pos++] = -K;
    if (pos == n) break;
    ++c[pos];
  }
  return opt.reduce ? remove_redundant(out) : out;
}

/// max{eps : (1/2 + eps) 1 in poly}, solved per inequality in closed form:
/// with s = sum(a), a.x* <= b reads eps <= b/s - 1/2 for s > 0 and
/// eps >= b/s - 1/2 for s < 0. Empty when the diagonal misses the polytope.
inline std::optional<Rational> diagonal_max_eps(const HPolytope& poly) {
  std::optional<Rational> hi, lo;
  for (const auto& q : poly.ineqs) {
    const Integer s = sum(q.a);
    if (s == 0) {
      if (q.b < 0) return std::nullopt;
      continue;
    }
    const Rational bound = q.b / Rational(s) - Rational(1, 2);
    if (s > 0) {
      if (!hi || bound < *hi) hi = bound;
    } else if (!lo || bound > *lo) {
      lo = bound;
    }
  }
  if (!hi) throw Error(ErrorCode::kUnboundedPolytope, "diagonal is unbounded above");
  if (lo && *lo > *hi) return std::nullopt;
  return hi;
}

struct TraceStep {
  int round = 0;
  std::optional<Rational> eps_bar;
  std::size_t inequalities = 0;
};

/// eps_bar for poly0 and for each of `rounds` truncated closures. Once the
/// polytope is a fixed point (no cut removes anything) later rounds repeat.
inline std::vector<TraceStep> diagonal_trace(const HPolytope& poly0, int K, int rounds, const ClosureOptions& opt = {}) {
  if (rounds < 0) throw Error(ErrorCode::kInvalidArgument, "rounds must be nonnegative");
  std::vector<TraceStep> trace;
  HPolytope cur = poly0;
  trace.push_back({0, diagonal_max_eps(cur), cur.ineqs.size()});
  for (int r = 1; r <= rounds; ++r) {
    cur = candidate_closure(cur, K, opt);
    trace.push_back({r, diagonal_max_eps(cur), cur.ineqs.size()});
  }
  return trace;
}

// ---------------------------------------------------------------------------
// P(c, eps) in H-form for n <= 4, and 0/1 hulls

namespace detail {

// Nullspace vector of an r x (r+1) rational matrix of full row rank, or empty.
inline std::vector<Rational> kernel_vector(std::vector<std::vector<Rational>> m) {
  const std::size_t rows = m.size(), cols = rows + 1;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational pv = m[r][c];
    for (auto& v : m[r]) v /= pv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < rows) return {};
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> v(cols, Rational(0));
  v[free_col] = 1;
  for (std::size_t i = 0; i < rows; ++i) v[pivot_col[i]] = -m[i][free_col];
  return v;
}

inline std::vector<Integer> primitive_integer(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, denom(x));
  std::vector<Integer> out;
  for (const auto& x : v) out.push_back(numer(x * Rational(l)));
  const Integer g = content(out);
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace detail

/// Facets of conv(points) for full-dimensional point sets, by testing every
/// hyperplane through n affinely independent points.
inline HPolytope hull_of_points(const std::vector<std::vector<Rational>>& pts, std::size_t n) {
  if (n == 0 || n > kSandboxMaxDim) throw Error(ErrorCode::kTooLarge, "sandbox supports 1 <= n <= 4");
  HPolytope out;
  out.n = n;
  const std::size_t k = pts.size();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  if (k < n + 1) throw Error(ErrorCode::kDegeneratePolytope, "fewer than n + 1 points");
  for (;;) {
    std::vector<std::vector<Rational>> m;
    for (auto i : idx) {
      auto row = pts[i];
      row.push_back(-1);
      m.push_back(row);
    }
    const auto ker = detail::kernel_vector(m);  // (a, b) with a.p = b on all chosen points
    if (!ker.empty()) {
      auto ab = detail::primitive_integer(ker);
      std::vector<Integer> a(ab.begin(), ab.begin() + static_cast<std::ptrdiff_t>(n));
      Rational b(ab[n]);
      bool any_zero_a = true;
      for (const auto& x : a)
        if (x != 0) any_zero_a = false;
      if (!any_zero_a) {
        int side = 0;
        bool facet = true;
        for (const auto& p : pts) {
          const Rational v = dot(a, p) - b;
          const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
          if (s == 0) continue;
          if (side == 0) side = s;
          else if (s != side) {
            facet = false;
            break;
          }
        }
        if (facet && side != 0) {
          if (side > 0) {
            for (auto& x : a) x = -x;
            b = -b;
          }
          // The points lie on the side a.x <= b now; store each facet once.
          const Inequality q{a, b};
          if (std::find(out.ineqs.begin(), out.ineqs.end(), q) == out.ineqs.end()) out.ineqs.push_back(q);
        }
      }
    }
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] == k - n + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (out.ineqs.size() < n + 1) throw Error(ErrorCode::kDegeneratePolytope, "point set is not full-dimensional");
  return out;
}

/// P(c, eps) = conv({x in {0,1}^n : cx <= |c|_1/2} u {x*(eps)}) for n <= 4.
inline HPolytope polytope_from_instance(const Instance& inst) {
  const std::size_t n = inst.n();
  if (n == 0 || n > kSandboxMaxDim) throw Error(ErrorCode::kTooLarge, "sandbox supports 1 <= n <= 4");
  std::vector<std::vector<Rational>> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Integer w = 0;
    std::vector<Rational> p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = (mask >> i) & 1 ? 1 : 0;
      if ((mask >> i) & 1) w += inst.c()[i];
    }
    if (w <= inst.knapsack_capacity()) pts.push_back(p);
  }
  const auto xs = inst.xstar();
  if (std::find(pts.begin(), pts.end(), xs) == pts.end()) pts.push_back(xs);
  return hull_of_points(pts, n);
}

inline ZeroOneHull make_zero_one_hull(const HPolytope& poly) {
  if (poly.n > 20) throw Error(ErrorCode::kTooLarge, "0/1 enumeration limited to n <= 20");
  ZeroOneHull h;
  h.n = poly.n;
  for (std::size_t mask = 0; mask < (std::size_t{1} << poly.n); ++mask) {
    std::vector<Rational> x(poly.n);
    std::vector<int> v(poly.n);
    for (std::size_t i = 0; i < poly.n; ++i) {
      v[i] = static_cast<int>((mask >> i) & 1);
      x[i] = v[i];
    }
    if (contains(poly, x)) h.vertices.push_back(v);
  }
  return h;
}

inline std::optional<Integer> hull_max(const ZeroOneHull& hull, const std::vector<Integer>& d) {
  std::optional<Integer> best;
  for (const auto& v : hull.vertices) {
    Integer s = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (v[i]) s += d[i];
    if (!best || s > *best) best = s;
  }
  return best;
}

/// Integrality gap 1 in direction d: max over poly equals max over its 0/1 points.
inline bool is_saturated(const HPolytope& poly, const ZeroOneHull& hull, const std::vector<Integer>& d) {
  const auto h = hull_max(hull, d);
  if (!h) return false;
  return lp_max(poly, d) == Rational(*h);
}

/// H-description of the 0/1 hull (needs a full-dimensional vertex set).
inline HPolytope hull_polytope(const ZeroOneHull& hull) {
  std::vector<std::vector<Rational>> pts;
  for (const auto& v : hull.vertices) pts.emplace_back(v.begin(), v.end());
  return hull_of_points(pts, hull.n);
}

}  // namespace gcrank
