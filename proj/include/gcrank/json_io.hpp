#pragma once

// JSON forms of the library's values. Big integers are decimal strings,
// rationals are "p/q" strings, indices and counts are plain numbers.
// nlohmann::json keeps object keys sorted, so output is byte-stable.

#include <json.hpp>

#include <string>
#include <vector>

#include "gcrank/basis_greedy.hpp"
#include "gcrank/closure_sandbox.hpp"
#include "gcrank/core.hpp"
#include "gcrank/critical_rank.hpp"
#include "gcrank/error.hpp"
#include "gcrank/hardness.hpp"
#include "gcrank/numeric.hpp"

namespace gcrank::json_io {

using nlohmann::json;

inline json of(const Integer& x) { return x.str(); }
inline json of(const Rational& x) { return to_string(x); }

inline json of(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline json of(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline json of(const std::vector<std::size_t>& v) { return json(v); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline Integer integer(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  throw Error(ErrorCode::kParse, "expected an integer string, got " + j.dump());
}

inline Rational rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorCode::kParse, "expected a rational string, got " + j.dump());
}

inline std::vector<Integer> integers(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected an array");
  std::vector<Integer> v;
  for (const auto& x : j) v.push_back(integer(x));
  return v;
}

inline std::vector<Rational> rationals(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected an array");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational(x));
  return v;
}

inline std::vector<std::size_t> indices(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected an index array");
  std::vector<std::size_t> v;
  for (const auto& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
      throw Error(ErrorCode::kParse, "bad index " + x.dump());
    v.push_back(x.get<std::size_t>());
  }
  return v;
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

// --- Instance ---------------------------------------------------------------

inline json to_json(const Instance& inst) {
  json j;
  j["c"] = of(inst.c().entries());
  j["eps"] = of(inst.eps());
  json b = json::array();
  for (const auto& x : inst.bases()) b.push_back(of(x));
  j["bases"] = b;
  return j;
}

inline Instance instance_from_json(const json& j) {
  Instance inst(WeightVector(integers(field(j, "c"))), rational(field(j, "eps")));
  if (j.contains("bases")) {
    std::vector<std::vector<std::size_t>> b;
    for (const auto& x : j.at("bases")) b.push_back(indices(x));
    inst.set_bases(std::move(b));
  }
  return inst;
}

inline json to_json(const HardInstance& hi) {
  json j = to_json(hi.instance);
  json s;
  s["m"] = hi.spec.m;
  s["D"] = of(hi.spec.D);
  s["seed"] = hi.spec.seed;
  s["basis_style"] = std::string(basis_style_name(hi.spec.basis_style));
  s["a"] = of(hi.spec.a);
  s["b"] = of(hi.spec.b);
  s["n"] = hi.spec.n;
  s["parity_slot"] = hi.spec.parity_slot ? json(*hi.spec.parity_slot) : json(nullptr);
  j["hard"] = s;
  return j;
}

// --- Criticality and search ---------------------------------------------------

inline json to_json(const CriticalityReport& r) {
  json j;
  j["ctilde"] = of(r.ctilde.entries);
  j["knapsack_opt"] = of(r.knapsack_opt);
  j["value_at_xstar"] = of(r.ctilde_at_xstar);
  j["critical"] = r.is_critical;
  j["witness"] = of(r.witness);
  return j;
}

inline json to_json(const LMinResult& r) {
  json j;
  j["found"] = r.found;
  j["budget_exceeded"] = !r.found;
  j["value"] = r.found ? of(r.value) : json(nullptr);
  j["witness"] = r.found ? of(r.witness.entries) : json(nullptr);
  j["search_budget"] = of(r.search_budget);
  j["lower_bound"] = of(r.lower_bound());
  j["vectors_tested"] = r.vectors_tested;
  return j;
}

// --- Greedy certificate -----------------------------------------------------

inline json to_json(const ClaimReport& r) {
  json j;
  j["delta"] = of(r.delta);
  j["central_window_mass"] = of(r.central_window_mass);
  j["claim1_bound"] = of(r.claim1_bound);
  j["claim1_holds"] = r.claim1_holds;
  j["claim2_lhs"] = of(r.claim2_lhs);
  j["claim2_bound"] = of(r.claim2_bound);
  j["claim2_holds"] = r.claim2_holds;
  j["basis_mass"] = of(r.basis_mass);
  j["basis_mass_bound"] = of(r.basis_mass_bound);
  j["basis_mass_holds"] = r.basis_mass_holds;
  j["fills_exactly"] = r.fills_exactly;
  j["certified_bound_holds"] = r.certified_bound_holds;
  j["preconditions_hold"] = r.preconditions_hold;
  return j;
}

inline json to_json(const GreedyCertificate& cert, const ClaimReport& claims) {
  json j;
  j["kind"] = "greedy_certificate";
  j["c"] = of(cert.c);
  j["ctilde"] = of(cert.ctilde);
  j["bases"] = json::array({of(cert.bases[0]), of(cert.bases[1]), of(cert.bases[2])});
  const auto lam = cert.lambda();
  j["lambda"] = lam ? of(*lam) : json(nullptr);
  j["inv_lambda"] = of(cert.inv_lambda);
  j["threshold_strict"] = cert.threshold_strict;
  j["sorted_order"] = of(cert.sorted_order);
  j["q"] = cert.q;
  j["k"] = cert.k;
  j["basis"] = cert.basis;
  j["J"] = of(cert.J);
  j["w"] = of(cert.w);
  j["w_l1"] = of(cert.w_l1);
  j["achieved"] = of(cert.achieved_value);
  j["bound"] = of(cert.bound_value);
  j["half_weight"] = of(cert.half_weight);
  j["claims"] = to_json(claims);
  return j;
}

// --- Audit and necessary condition ----------------------------------------------

inline json to_json(const DiophantineAuditReport& r) {
  json j;
  j["a"] = of(r.a);
  j["D"] = of(r.D);
  j["eps"] = of(r.eps);
  j["alpha"] = of(r.alpha);
  j["mode"] = std::string(audit_mode_name(r.mode));
  j["budget"] = of(r.budget);
  j["residual_bound"] = of(r.residual_bound);
  j["window"] = of(r.window);
  j["entry_cap"] = of(r.entry_cap);
  j["in_range"] = r.in_range;
  j["verdict"] = std::string(verdict_name(r.verdict));
  j["certified_by"] = r.certified_by.empty() ? json(nullptr) : json(r.certified_by);
  if (r.witness) {
    json w;
    w["lambda"] = of(r.witness->lambda);
    w["atilde"] = of(r.witness->atilde);
    w["residual"] = of(r.witness->residual);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  json z;
  z["residual"] = of(r.zero_residual);
  z["satisfies_event"] = r.zero_satisfies;
  z["good_indices"] = r.zero_good_indices;
  j["degenerate_zero"] = z;
  j["max_good_indices"] = r.max_good_indices;
  j["lambda_grid_size"] = r.lambda_grid_size;
  j["exact_lambda_count"] = r.exact_lambda_count;
  return j;
}

inline json to_json(const NecessaryConditionResult& r) {
  json j;
  j["lambda_opt"] = of(r.lambda_opt);
  j["residual"] = of(r.residual);
  j["threshold"] = of(r.threshold);
  j["factor"] = of(r.factor);
  j["satisfied"] = r.satisfied;
  j["preconditions_met"] = r.preconditions_met;
  j["certifies"] = r.certifies;
  return j;
}

// --- Gamma certificate ------------------------------------------------------

inline json to_json(const NcConstants& k) {
  json j;
  j["source"] = k.source;
  j["kappa"] = k.valid ? of(k.kappa) : json(nullptr);
  j["valid"] = k.valid;
  return j;
}

inline NcConstants nc_constants_from_json(const json& j) {
  NcConstants k;
  k.source = field(j, "source").get<std::string>();
  k.valid = field(j, "valid").get<bool>();
  if (k.valid) k.kappa = rational(field(j, "kappa"));
  return k;
}

inline json to_json(const GammaCertificate& cert) {
  json j;
  j["kind"] = "gamma_certificate";
  j["c"] = of(cert.c);
  json b = json::array();
  for (const auto& x : cert.bases) b.push_back(of(x));
  j["bases"] = b;
  j["method"] = std::string(gamma_method_name(cert.method));
  j["delta0"] = of(cert.delta0);
  j["delta1"] = of(cert.delta1);
  j["budget"] = of(cert.budget);
  if (cert.method == GammaMethod::kNecessaryCondition) j["constants"] = to_json(cert.constants);
  json pts = json::array();
  for (const auto& p : cert.points) {
    json q;
    q["eps"] = of(p.eps);
    q["l_bound"] = of(p.l_bound);
    q["exact"] = p.exact;
    q["condition_applies"] = p.condition_applies;
    q["witness"] = p.exact ? of(p.witness.entries) : json(nullptr);
    q["lambda"] = p.lambda ? of(*p.lambda) : json(nullptr);
    pts.push_back(q);
  }
  j["points"] = pts;
  j["gamma"] = of(cert.gamma);
  j["weakest_cell"] = cert.weakest_cell;
  return j;
}

inline GammaCertificate gamma_certificate_from_json(const json& j) {
  if (!j.contains("kind") || j.at("kind") != "gamma_certificate") throw Error(ErrorCode::kParse, "not a gamma certificate");
  GammaCertificate cert;
  cert.c = integers(field(j, "c"));
  for (const auto& x : field(j, "bases")) cert.bases.push_back(indices(x));
  cert.method = parse_gamma_method(field(j, "method").get<std::string>());
  cert.delta0 = rational(field(j, "delta0"));
  cert.delta1 = rational(field(j, "delta1"));
  cert.budget = integer(field(j, "budget"));
  if (cert.method == GammaMethod::kNecessaryCondition) cert.constants = nc_constants_from_json(field(j, "constants"));
  for (const auto& q : field(j, "points")) {
    GammaPoint p;
    p.eps = rational(field(q, "eps"));
    p.l_bound = integer(field(q, "l_bound"));
    p.exact = field(q, "exact").get<bool>();
    p.condition_applies = field(q, "condition_applies").get<bool>();
    if (p.exact) p.witness.entries = integers(field(q, "witness"));
    if (!field(q, "lambda").is_null()) p.lambda = rational(q.at("lambda"));
    cert.points.push_back(std::move(p));
  }
  cert.gamma = rational(field(j, "gamma"));
  cert.weakest_cell = field(j, "weakest_cell").get<std::size_t>();
  return cert;
}

inline json to_json(const RankBound& r) {
  json j;
  j["gamma"] = of(r.gamma);
  j["delta0"] = of(r.delta0);
  j["delta1"] = of(r.delta1);
  j["ln_ratio_lower"] = of(r.ln_lo);
  j["ln_ratio_upper"] = of(r.ln_hi);
  j["bound_lower"] = of(r.bound_lo);
  j["bound_decimal"] = to_decimal(r.bound_lo, 12);
  j["floor_bound"] = of(r.floor_bound);
  return j;
}

// --- Polytopes --------------------------------------------------------------

inline json to_json(const HPolytope& p) {
  json j;
  j["n"] = p.n;
  json rows = json::array();
  for (const auto& q : p.ineqs) {
    json r;
    r["a"] = of(q.a);
    r["b"] = of(q.b);
    rows.push_back(r);
  }
  j["ineqs"] = rows;
  return j;
}

inline HPolytope polytope_from_json(const json& j) {
  HPolytope p;
  p.n = field(j, "n").get<std::size_t>();
  for (const auto& r : field(j, "ineqs")) {
    Inequality q{integers(field(r, "a")), rational(field(r, "b"))};
    if (q.a.size() != p.n) throw Error(ErrorCode::kParse, "inequality length differs from n");
    p.ineqs.push_back(std::move(q));
  }
  return p;
}

inline std::string trace_csv(const std::vector<TraceStep>& trace) {
  std::string out = "round,eps_bar,inequalities\n";
  for (const auto& s : trace)
    out += std::to_string(s.round) + "," + (s.eps_bar ? to_string(*s.eps_bar) : std::string("none")) + "," +
           std::to_string(s.inequalities) + "\n";
  return out;
}

}  // namespace gcrank::json_io
