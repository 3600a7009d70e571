#pragma once

// The knapsack polytope with an extra fractional vertex,
//   P(c, eps) = conv({x in {0,1}^n : cx <= |c|_1 / 2} u {x*(eps)}),
// with x*(eps) = (1/2 + eps) * 1, and the criticality test for cut normals.

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "gcrank/error.hpp"
#include "gcrank/knapsack.hpp"
#include "gcrank/numeric.hpp"

namespace gcrank {

/// Nonnegative integer normal vector c with at least one positive entry.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
    bool any_positive = false;
    for (const auto& e : entries_) {
      if (e < 0) throw Error(ErrorCode::kNegativeWeight, "weight entries must be nonnegative, got " + e.str());
      if (e > 0) any_positive = true;
    }
    if (!any_positive) throw Error(ErrorCode::kAllZeroWeights, "weight vector has no positive entry");
    l1_ = sum(entries_);
    linf_ = linf_norm(entries_);
  }

  const std::vector<Integer>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  const Integer& l1() const { return l1_; }
  const Integer& linf() const { return linf_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Integer> entries_;
  Integer l1_ = 0;
  Integer linf_ = 0;
};

/// Candidate cut normal; entries may be negative until reduced.
struct ProfitVector {
  std::vector<Integer> entries;

  std::size_t size() const { return entries.size(); }
  const Integer& operator[](std::size_t i) const { return entries[i]; }
  Integer l1() const { return l1_norm(entries); }
  bool nonnegative() const {
    for (const auto& e : entries)
      if (e < 0) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& e : entries)
      if (e != 0) return false;
    return true;
  }

  friend bool operator==(const ProfitVector&, const ProfitVector&) = default;
};

inline ProfitVector make_profits(std::initializer_list<long long> values) {
  ProfitVector p;
  for (auto v : values) p.entries.emplace_back(v);
  return p;
}

inline WeightVector make_weights(std::initializer_list<long long> values) {
  std::vector<Integer> e;
  for (auto v : values) e.emplace_back(v);
  return WeightVector(std::move(e));
}

class Instance {
 public:
  Instance() = default;
  Instance(WeightVector c, Rational eps) : c_(std::move(c)), eps_(std::move(eps)) {
    if (eps_ < 0 || eps_ >= Rational(1, 2))
      throw Error(ErrorCode::kInvalidEpsilon, "eps must lie in [0, 1/2), got " + to_string(eps_));
    capacity_ = Rational(c_.l1(), 2);
    knapsack_capacity_ = floor(capacity_);
  }

  const WeightVector& c() const { return c_; }
  const Rational& eps() const { return eps_; }
  std::size_t n() const { return c_.size(); }
  /// |c|_1 / 2, exact.
  const Rational& capacity() const { return capacity_; }
  /// floor(|c|_1 / 2): the capacity seen by integer points.
  const Integer& knapsack_capacity() const { return knapsack_capacity_; }
  /// Common coordinate 1/2 + eps of x*(eps).
  Rational xstar_coordinate() const { return Rational(1, 2) + eps_; }
  std::vector<Rational> xstar() const { return std::vector<Rational>(n(), xstar_coordinate()); }

  Instance with_eps(const Rational& eps) const {
    Instance copy(c_, eps);
    copy.bases_ = bases_;
    return copy;
  }

  /// Disjoint index sets registered as additive bases (empty unless assembled).
  const std::vector<std::vector<std::size_t>>& bases() const { return bases_; }
  void set_bases(std::vector<std::vector<std::size_t>> bases) {
    for (const auto& b : bases)
      for (auto i : b)
        if (i >= n()) throw Error(ErrorCode::kInvalidBases, "basis index out of range");
    bases_ = std::move(bases);
  }

 private:
  WeightVector c_;
  Rational eps_;
  Rational capacity_;
  Integer knapsack_capacity_;
  std::vector<std::vector<std::size_t>> bases_;
};

inline Instance make_instance(const WeightVector& c, const Rational& eps) { return Instance(c, eps); }

struct CriticalityReport {
  ProfitVector ctilde;
  Integer knapsack_opt;
  Rational ctilde_at_xstar;
  bool is_critical = false;
  std::vector<std::size_t> witness;
};

/// Componentwise positive part; shortens the vector and keeps criticality.
inline ProfitVector nonneg_reduce(const ProfitVector& ctilde) {
  ProfitVector out = ctilde;
  for (auto& e : out.entries)
    if (e < 0) e = 0;
  return out;
}

inline KnapsackQuery knapsack_query(const Instance& inst, const ProfitVector& ctilde) {
  if (ctilde.size() != inst.n()) throw Error(ErrorCode::kLengthMismatch, "profit vector length differs from n");
  return KnapsackQuery{inst.c().entries(), inst.knapsack_capacity(), ctilde.entries};
}

/// ctilde.x*(eps) = (1/2 + eps) * |ctilde|_1 for nonnegative ctilde.
inline Rational value_at_xstar(const Instance& inst, const ProfitVector& ctilde) {
  return inst.xstar_coordinate() * Rational(sum(ctilde.entries));
}

inline CriticalityReport is_critical(const Instance& inst, const ProfitVector& ctilde,
                                     const KnapsackBudget& budget = {}) {
  if (ctilde.size() != inst.n()) throw Error(ErrorCode::kLengthMismatch, "profit vector length differs from n");
  if (!ctilde.nonnegative())
    throw Error(ErrorCode::kNegativeProfit, "criticality is tested on nonnegative vectors; apply nonneg_reduce");
  const auto ks = knapsack_max(knapsack_query(inst, ctilde), std::nullopt, budget);
  CriticalityReport report;
  report.ctilde = ctilde;
  report.knapsack_opt = ks.opt_value;
  report.ctilde_at_xstar = value_at_xstar(inst, ctilde);
  report.is_critical = report.ctilde_at_xstar >= Rational(ks.opt_value);
  report.witness = ks.witness;
  return report;
}

/// Largest eps' with x*(eps') surviving the single Gomory-Chvatal cut
/// ctilde.x <= floor(beta), beta = max{ctilde.x : x in P(c, eps)}.
inline Rational epsilon_step(const Instance& inst, const ProfitVector& ctilde, const KnapsackBudget& budget = {}) {
  if (ctilde.size() != inst.n()) throw Error(ErrorCode::kLengthMismatch, "profit vector length differs from n");
  if (!ctilde.nonnegative())
    throw Error(ErrorCode::kNegativeProfit, "epsilon_step expects a nonnegative vector");
  if (ctilde.is_zero()) throw Error(ErrorCode::kZeroVector, "epsilon_step needs a nonzero vector");
  const auto ks = knapsack_max(knapsack_query(inst, ctilde), std::nullopt, budget);
  const Rational at_xstar = value_at_xstar(inst, ctilde);
  const Rational beta = at_xstar > Rational(ks.opt_value) ? at_xstar : Rational(ks.opt_value);
  return Rational(floor(beta), sum(ctilde.entries)) - Rational(1, 2);
}

}  // namespace gcrank
