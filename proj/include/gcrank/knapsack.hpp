#pragma once

// Exact 0/1 knapsack: max{ p.x : w.x <= capacity, x in {0,1}^n }.
//
// Three engines (capacity DP, meet-in-the-middle, exhaustive enumeration) are
// exposed as suffix value oracles: value(j, r) is the best profit achievable
// with items j..n-1 under capacity r. A single reconstruction routine walks
// the items in index order and takes the first item that still admits an
// optimal completion, which yields the lexicographically smallest optimal
// index set for every engine.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcrank/error.hpp"
#include "gcrank/numeric.hpp"

namespace gcrank {

enum class KnapsackMethod { kDp, kMeetInTheMiddle, kExhaustive };

inline std::string_view method_name(KnapsackMethod m) {
  switch (m) {
    case KnapsackMethod::kDp: return "dp";
    case KnapsackMethod::kMeetInTheMiddle: return "meet_in_the_middle";
    case KnapsackMethod::kExhaustive: return "exhaustive";
  }
  return "unknown";
}

struct KnapsackBudget {
  std::uint64_t max_dp_cells = 10'000'000;
  std::size_t max_mitm_items = 40;
  std::size_t max_exhaustive_items = 20;
};

struct KnapsackQuery {
  std::vector<Integer> weights;
  Integer capacity;
  std::vector<Integer> profits;
};

struct KnapsackResult {
  Integer opt_value;
  std::vector<std::size_t> witness;  // sorted, lexicographically smallest optimal set
  KnapsackMethod method = KnapsackMethod::kDp;
};

inline constexpr std::size_t kExhaustiveOracleLimit = 25;

namespace detail {

inline void validate(const KnapsackQuery& q) {
  if (q.weights.size() != q.profits.size())
    throw Error(ErrorCode::kLengthMismatch, "weights and profits differ in length");
  if (q.capacity < 0) throw Error(ErrorCode::kInvalidArgument, "negative capacity");
  for (const auto& w : q.weights)
    if (w < 0) throw Error(ErrorCode::kNegativeWeight, "negative weight " + w.str());
  for (const auto& p : q.profits)
    if (p < 0) throw Error(ErrorCode::kNegativeProfit, "negative profit " + p.str());
}

template <class Num>
Num convert(const Integer& v) {
  if constexpr (std::is_same_v<Num, Integer>) {
    return v;
  } else {
    return v.template convert_to<Num>();
  }
}

// Items with 0 < w <= capacity, in index order. Zero-weight items are free and
// handled outside the engines; heavier items can never be packed.
template <class Num>
struct Eligible {
  std::vector<std::size_t> index;
  std::vector<Num> weight;
  std::vector<Num> profit;
};

template <class Num>
class DpOracle {
 public:
  DpOracle(const Eligible<Num>& items, std::size_t capacity)
      : n_(items.index.size()), width_(capacity + 1), table_((n_ + 1) * width_, Num(0)) {
    for (std::size_t j = n_; j-- > 0;) {
      const std::size_t wj = static_cast<std::size_t>(items.weight[j]);
      const Num& pj = items.profit[j];
      Num* row = &table_[j * width_];
      const Num* next = &table_[(j + 1) * width_];
      for (std::size_t r = 0; r < width_; ++r) {
        row[r] = next[r];
        if (wj <= r) {
          Num with = next[r - wj] + pj;
          if (with > row[r]) row[r] = std::move(with);
        }
      }
    }
  }

  Num value(std::size_t j, const Num& r) const {
    const auto cap = std::min<std::size_t>(static_cast<std::size_t>(r), width_ - 1);
    return table_[j * width_ + cap];
  }

 private:
  std::size_t n_;
  std::size_t width_;
  std::vector<Num> table_;
};

template <class Num>
class ExhaustiveOracle {
 public:
  explicit ExhaustiveOracle(const Eligible<Num>& items) : items_(items) {}

  Num value(std::size_t j, const Num& r) const {
    Num best = 0;
    search(j, r, Num(0), best);
    return best;
  }

 private:
  void search(std::size_t j, const Num& room, const Num& acc, Num& best) const {
    if (acc > best) best = acc;
    for (std::size_t i = j; i < items_.index.size(); ++i) {
      if (items_.weight[i] <= room) search(i + 1, room - items_.weight[i], acc + items_.profit[i], best);
    }
  }

  const Eligible<Num>& items_;
};

template <class Num>
class MitmOracle {
 public:
  explicit MitmOracle(const Eligible<Num>& items) : items_(items) {}

  Num value(std::size_t j, const Num& r) const {
    const std::size_t k = items_.index.size() - j;
    const std::size_t h = k / 2;
    auto left = enumerate(j, j + h, r);
    auto right = enumerate(j + h, j + k, r);
    std::sort(right.begin(), right.end(), [](const auto& a, const auto& b) {
      return a.first < b.first || (a.first == b.first && a.second > b.second);
    });
    // Running maximum turns the sorted list into a step function of capacity.
    for (std::size_t i = 1; i < right.size(); ++i)
      if (right[i].second < right[i - 1].second) right[i].second = right[i - 1].second;
    Num best = 0;
    for (const auto& [w, p] : left) {
      const Num room = r - w;
      auto it = std::upper_bound(right.begin(), right.end(), room,
                                 [](const Num& v, const auto& e) { return v < e.first; });
      if (it == right.begin()) continue;
      Num total = p + std::prev(it)->second;
      if (total > best) best = std::move(total);
    }
    return best;
  }

 private:
  std::vector<std::pair<Num, Num>> enumerate(std::size_t lo, std::size_t hi, const Num& r) const {
    std::vector<std::pair<Num, Num>> out{{Num(0), Num(0)}};
    for (std::size_t i = lo; i < hi; ++i) {
      const std::size_t size = out.size();
      for (std::size_t s = 0; s < size; ++s) {
        Num w = out[s].first + items_.weight[i];
        if (w <= r) out.emplace_back(std::move(w), out[s].second + items_.profit[i]);
      }
    }
    return out;
  }

  const Eligible<Num>& items_;
};

template <class Num, class Oracle>
KnapsackResult reconstruct(const KnapsackQuery& q, const Integer& capacity, const Eligible<Num>& items,
                           const Oracle& oracle, KnapsackMethod method) {
  const std::size_t n = q.weights.size();
  // first_eligible[j]: position in `items` of the first eligible index >= j.
  std::vector<std::size_t> first_eligible(n + 1, items.index.size());
  for (std::size_t e = items.index.size(); e-- > 0;) first_eligible[items.index[e]] = e;
  for (std::size_t j = n; j-- > 0;) first_eligible[j] = std::min(first_eligible[j], first_eligible[j + 1]);
  std::vector<Num> free_suffix(n + 1, Num(0));
  for (std::size_t j = n; j-- > 0;) {
    free_suffix[j] = free_suffix[j + 1];
    if (q.weights[j] == 0) free_suffix[j] += convert<Num>(q.profits[j]);
  }
  auto value = [&](std::size_t j, const Num& r) { return free_suffix[j] + oracle.value(first_eligible[j], r); };

  Num room = convert<Num>(capacity);
  Num need = value(0, room);
  KnapsackResult result;
  result.opt_value = Integer(need);
  result.method = method;
  std::size_t i = 0;
  while (need > 0) {
    bool taken = false;
    for (std::size_t j = i; j < n; ++j) {
      if (q.weights[j] > capacity) continue;
      const Num wj = convert<Num>(q.weights[j]);
      if (wj > room) continue;
      const Num pj = convert<Num>(q.profits[j]);
      if (pj > need) continue;
      if (pj + value(j + 1, room - wj) >= need) {
        result.witness.push_back(j);
        need -= pj;
        room -= wj;
        i = j + 1;
        taken = true;
        break;
      }
    }
    if (!taken) throw Error(ErrorCode::kInvalidArgument, "internal: witness reconstruction failed");
  }
  return result;
}

template <class Num>
Eligible<Num> eligible_items(const KnapsackQuery& q, const Integer& capacity) {
  Eligible<Num> items;
  for (std::size_t i = 0; i < q.weights.size(); ++i) {
    if (q.weights[i] > 0 && q.weights[i] <= capacity) {
      items.index.push_back(i);
      items.weight.push_back(convert<Num>(q.weights[i]));
      items.profit.push_back(convert<Num>(q.profits[i]));
    }
  }
  return items;
}

template <class Num>
KnapsackResult solve_with(const KnapsackQuery& q, const Integer& capacity, KnapsackMethod method) {
  const auto items = eligible_items<Num>(q, capacity);
  switch (method) {
    case KnapsackMethod::kDp: {
      DpOracle<Num> oracle(items, capacity.convert_to<std::size_t>());
      return reconstruct(q, capacity, items, oracle, method);
    }
    case KnapsackMethod::kMeetInTheMiddle: {
      MitmOracle<Num> oracle(items);
      return reconstruct(q, capacity, items, oracle, method);
    }
    case KnapsackMethod::kExhaustive: {
      ExhaustiveOracle<Num> oracle(items);
      return reconstruct(q, capacity, items, oracle, method);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown knapsack method");
}

inline KnapsackResult dispatch(const KnapsackQuery& q, const Integer& capacity, KnapsackMethod method) {
  // 64-bit accumulators whenever every partial sum provably fits.
  const Integer limit = pow2(62);
  if (sum(q.profits) < limit && sum(q.weights) < limit) return solve_with<std::int64_t>(q, capacity, method);
  return solve_with<Integer>(q, capacity, method);
}

inline std::size_t eligible_count(const KnapsackQuery& q, const Integer& capacity) {
  std::size_t k = 0;
  for (const auto& w : q.weights)
    if (w > 0 && w <= capacity) ++k;
  return k;
}

inline bool dp_fits(std::size_t items, const Integer& capacity, const KnapsackBudget& budget) {
  if (capacity >= Integer(budget.max_dp_cells)) return false;
  const Integer cells = Integer(items + 1) * (capacity + 1);
  return cells <= Integer(budget.max_dp_cells);
}

}  // namespace detail

/// Exact optimum with the lexicographically smallest optimal witness.
/// Without a hint the engine is the capacity DP when its table fits the cell
/// budget, then exhaustive search, then meet-in-the-middle.
inline KnapsackResult knapsack_max(const KnapsackQuery& q, std::optional<KnapsackMethod> hint = std::nullopt,
                                   const KnapsackBudget& budget = {}) {
  detail::validate(q);
  const Integer total = sum(q.weights);
  const Integer capacity = q.capacity > total ? total : q.capacity;
  const std::size_t k = detail::eligible_count(q, capacity);
  const bool dp_ok = detail::dp_fits(k, capacity, budget);
  const bool ex_ok = k <= budget.max_exhaustive_items;
  const bool mitm_ok = k <= budget.max_mitm_items;

  KnapsackMethod method;
  if (hint) {
    method = *hint;
    const bool ok = (method == KnapsackMethod::kDp && dp_ok) || (method == KnapsackMethod::kExhaustive && ex_ok) ||
                    (method == KnapsackMethod::kMeetInTheMiddle && mitm_ok);
    if (!ok)
      throw Error(ErrorCode::kResourceBudgetExceeded,
                  std::string(method_name(method)) + " does not fit the configured budget (" + std::to_string(k) +
                      " items, capacity " + capacity.str() + ")");
  } else if (dp_ok) {
    method = KnapsackMethod::kDp;
  } else if (ex_ok) {
    method = KnapsackMethod::kExhaustive;
  } else if (mitm_ok) {
    method = KnapsackMethod::kMeetInTheMiddle;
  } else {
    throw Error(ErrorCode::kResourceBudgetExceeded,
                "no knapsack engine fits: " + std::to_string(k) + " items, capacity " + capacity.str());
  }
  return detail::dispatch(q, capacity, method);
}

/// Ground-truth oracle by full enumeration, independent of the DP tables.
inline KnapsackResult knapsack_max_exhaustive(const KnapsackQuery& q) {
  detail::validate(q);
  if (q.weights.size() > kExhaustiveOracleLimit)
    throw Error(ErrorCode::kTooLarge, "exhaustive oracle limited to " + std::to_string(kExhaustiveOracleLimit) + " items");
  const Integer total = sum(q.weights);
  const Integer capacity = q.capacity > total ? total : q.capacity;
  return detail::dispatch(q, capacity, KnapsackMethod::kExhaustive);
}

}  // namespace gcrank
