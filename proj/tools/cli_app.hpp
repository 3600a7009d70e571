#pragma once

// The gcrank command line. run() is the whole program so tests can drive it
// in-process; tools/gcrank.cpp only forwards argv.
//
// Exit codes: 0 success, 2 a sound negative outcome reported as data
// (search budget exhausted, no approximant exists), 1 errors.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gcrank/basis_greedy.hpp"
#include "gcrank/closure_sandbox.hpp"
#include "gcrank/core.hpp"
#include "gcrank/critical_rank.hpp"
#include "gcrank/error.hpp"
#include "gcrank/hardness.hpp"
#include "gcrank/json_io.hpp"
#include "gcrank/numeric.hpp"
#include "gcrank/random.hpp"

namespace gcrank::cli {

using json_io::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json(const std::string& path) { return json_io::parse(read_file(path)); }

// Splits "3,-2,5" or "3 -2 5" into tokens.
inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> v;
  std::string tok;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n') {
      if (!tok.empty()) v.push_back(tok);
      tok.clear();
    } else {
      tok.push_back(ch);
    }
  }
  return v;
}

inline std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> v;
  for (const auto& s : split_list(text)) v.push_back(parse_integer(s));
  return v;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> v;
  for (const auto& s : split_list(text)) v.push_back(parse_rational(s));
  return v;
}

// Budgets may come from the environment; flags given explicitly win.
inline std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

struct Options {
  std::map<std::string, std::string> values;  // long flag name -> raw text

  std::string& operator[](const std::string& k) { return values[k]; }
  const std::string& at(const std::string& k) const { return values.at(k); }
  Integer integer(const std::string& k) const { return parse_integer(at(k)); }
  Rational rational(const std::string& k) const { return parse_rational(at(k)); }
  std::uint64_t u64(const std::string& k) const {
    const Integer x = integer(k);
    if (x < 0 || bit_length(x) > 64) throw Error(ErrorCode::kInvalidArgument, "--" + k + " out of range");
    return x.convert_to<std::uint64_t>();
  }
  bool flag(const std::string& k) const { return at(k) == "true"; }
};

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err), app_("Gomory-Chvatal rank toolkit for knapsack polytopes", "gcrank") {
    app_.require_subcommand(1);
    app_.set_help_all_flag("--help-all", "Expand all help");
    add_gen();
    add_lmin();
    add_upper();
    add_audit();
    add_greedy();
    add_gamma();
    add_rank_bound();
    add_closure();
    add_trace();
    add_verify();
  }

  int run(std::vector<std::string> args) {
    std::reverse(args.begin(), args.end());  // CLI11 consumes the vector from the back
    try {
      app_.parse(args);
    } catch (const CLI::CallForHelp&) {
      out_ << app_.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app_.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "gcrank: " << e.what() << "\n";
      if (auto* sub = active()) err_ << sub->help();
      return kExitError;
    }
    auto* sub = active();
    try {
      return handlers_.at(sub->get_name())();
    } catch (const Error& e) {
      err_ << "gcrank " << sub->get_name() << ": " << e.what() << "\n";
      return kExitError;
    } catch (const json::exception& e) {
      err_ << "gcrank " << sub->get_name() << ": Parse: " << e.what() << "\n";
      return kExitError;
    } catch (const std::exception& e) {
      err_ << "gcrank " << sub->get_name() << ": " << e.what() << "\n";
      return kExitError;
    }
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_;
  std::map<std::string, Options> opts_;
  std::map<std::string, std::function<int()>> handlers_;

  CLI::App* active() {
    for (auto* s : app_.get_subcommands()) return s;
    return nullptr;
  }

  CLI::App* sub(const std::string& name, const std::string& help) {
    auto* s = app_.add_subcommand(name, help);
    opts_[name];
    return s;
  }

  // Every option writes into the subcommand's string map; parsing into
  // exact numbers happens in the handler so errors carry our codes.
  void opt(CLI::App* s, const std::string& name, const std::string& def, const std::string& help, bool required = false) {
    auto& slot = opts_[s->get_name()][name];
    slot = def;
    auto* o = s->add_option("--" + name, slot, help);
    if (!def.empty()) o->default_str(def);
    if (required) o->required();
  }

  void flag(CLI::App* s, const std::string& name, const std::string& help) {
    auto& slot = opts_[s->get_name()][name];
    slot = "false";
    s->add_flag_callback("--" + name, [&slot] { slot = "true"; }, help);
  }

  void positional(CLI::App* s, const std::string& name, const std::string& help, bool required = true) {
    auto& slot = opts_[s->get_name()][name];
    auto* o = s->add_option(name, slot, help);
    if (required) o->required();
  }

  void output_opt(CLI::App* s) {
    auto& slot = opts_[s->get_name()]["output"];
    s->add_option("-o,--output", slot, "Write the artifact here instead of stdout");
  }

  void jobs_opt(CLI::App* s) { opt(s, "jobs", "1", "Worker threads (0 = all cores)"); }

  json config(const std::string& name) const {
    json c;
    c["subcommand"] = name;
    for (const auto& [k, v] : opts_.at(name).values)
      if (k != "output" && k != "jobs") c[k] = v;
    return c;
  }

  void emit(const std::string& name, const std::string& text) {
    const auto& path = opts_.at(name).values.count("output") ? opts_.at(name).at("output") : std::string();
    if (path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
    f << text;
  }

  void emit_json(const std::string& name, json body) {
    body["config"] = config(name);
    emit(name, body.dump(2) + "\n");
  }

  static unsigned jobs(const Options& o) { return static_cast<unsigned>(o.u64("jobs")); }

  static KnapsackBudget knapsack_budget(const Options& o) {
    KnapsackBudget b;
    b.max_dp_cells = o.u64("dp-cells");
    return b;
  }

  void knapsack_opt(CLI::App* s) {
    opt(s, "dp-cells", env_or("GCRANK_DP_CELLS", "10000000"), "Knapsack DP table budget (env GCRANK_DP_CELLS)");
  }

  static Instance load_instance(const Options& o) {
    Instance inst = json_io::instance_from_json(read_json(o.at("instance")));
    if (o.values.count("eps") && !o.at("eps").empty()) inst = inst.with_eps(o.rational("eps"));
    return inst;
  }

  // --- gen -------------------------------------------------------------------

  void add_gen() {
    auto* s = sub("gen", "Sample a and assemble c = (a, b, b, b, 0)");
    opt(s, "m", "", "Length of the random vector a (>= 8)", true);
    opt(s, "D", "", "Range parameter; a_i in [D, 2D] (default 2^(m/8))");
    opt(s, "seed", "0", "PRNG seed");
    opt(s, "eps", "1/4", "eps stored with the instance");
    opt(s, "basis", "powers", "Basis blocks: powers (2^0..2^(t+1)) or tight (sums to 2D)");
    output_opt(s);
    handlers_["gen"] = [this] {
      const auto& o = opts_.at("gen");
      const int m = static_cast<int>(o.u64("m"));
      const Integer D = o.at("D").empty() ? default_D(m) : o.integer("D");
      const auto hi = generate_hard_instance(m, D, o.u64("seed"), o.rational("eps"), parse_basis_style(o.at("basis")));
      emit_json("gen", json_io::to_json(hi));
      return kExitOk;
    };
  }

  // --- lmin / upper ------------------------------------------------------------

  void add_lmin() {
    auto* s = sub("lmin", "Shortest critical vector by enumeration (exit 2: none within budget)");
    positional(s, "instance", "Instance JSON");
    opt(s, "budget", env_or("GCRANK_LMIN_BUDGET", "8"), "Largest |ct|_1 explored (env GCRANK_LMIN_BUDGET)");
    opt(s, "eps", "", "Override the instance eps");
    jobs_opt(s);
    knapsack_opt(s);
    output_opt(s);
    handlers_["lmin"] = [this] {
      const auto& o = opts_.at("lmin");
      const auto inst = load_instance(o);
      LMinOptions lo;
      lo.jobs = jobs(o);
      lo.knapsack = knapsack_budget(o);
      const auto r = l_min(inst, o.integer("budget"), lo);
      json j = json_io::to_json(r);
      j["eps"] = json_io::of(inst.eps());
      emit_json("lmin", j);
      return r.found ? kExitOk : kExitNegative;
    };
  }

  void add_upper() {
    auto* s = sub("upper", "Critical vector floor(delta c) with |ct|_1 <= n/eps");
    positional(s, "instance", "Instance JSON");
    opt(s, "eps", "", "Override the instance eps");
    flag(s, "no-check", "Skip the knapsack re-check of criticality");
    knapsack_opt(s);
    output_opt(s);
    handlers_["upper"] = [this] {
      const auto& o = opts_.at("upper");
      const auto inst = load_instance(o);
      const auto ct = critical_upper(inst);
      json j;
      j["ctilde"] = json_io::of(ct.entries);
      j["norm"] = json_io::of(sum(ct.entries));
      j["norm_bound"] = json_io::of(Rational(Integer(inst.n())) / inst.eps());
      j["eps"] = json_io::of(inst.eps());
      if (!o.flag("no-check")) {
        const auto rep = is_critical(inst, ct, knapsack_budget(o));
        j["report"] = json_io::to_json(rep);
      } else {
        j["report"] = nullptr;
      }
      emit_json("upper", j);
      return kExitOk;
    };
  }

  // --- audit -----------------------------------------------------------------

  void add_audit() {
    auto* s = sub("audit", "Simultaneous Diophantine approximation audit of a (exit 2: certified none)");
    opt(s, "instance", "", "Take a and D from a gen artifact");
    opt(s, "a", "", "Comma-separated a (with --D)");
    opt(s, "m", "", "Sample a of this length (with --seed, --D)");
    opt(s, "D", "", "Range parameter (default 2^(m/8))");
    opt(s, "seed", "0", "Seed for sampling a and for heuristic mode");
    opt(s, "eps", "1/64", "eps");
    opt(s, "alpha", "2000", "alpha; budget = floor(m / (alpha eps))");
    opt(s, "mode", "certified", "certified, exhaustive or heuristic");
    opt(s, "residual-factor", "128", "Residual bound factor (bound = factor eps m D)");
    opt(s, "window-factor", "", "Per-index window factor (default 4 x residual factor)");
    opt(s, "entry-factor", "2", "Per-index cap = floor(factor / (alpha eps))");
    opt(s, "grid-budget", env_or("GCRANK_GRID_BUDGET", "50000000"), "Relaxation grid budget (env GCRANK_GRID_BUDGET)");
    opt(s, "samples", "2000", "Heuristic lambda samples");
    output_opt(s);
    handlers_["audit"] = [this] {
      const auto& o = opts_.at("audit");
      std::vector<Integer> a;
      Integer D;
      if (!o.at("instance").empty()) {
        const auto j = read_json(o.at("instance"));
        const auto& h = json_io::field(j, "hard");
        a = json_io::integers(json_io::field(h, "a"));
        D = json_io::integer(json_io::field(h, "D"));
      } else if (!o.at("a").empty()) {
        a = parse_integer_list(o.at("a"));
        if (o.at("D").empty()) throw Error(ErrorCode::kInvalidArgument, "--a needs --D");
        D = o.integer("D");
      } else if (!o.at("m").empty()) {
        const int m = static_cast<int>(o.u64("m"));
        D = o.at("D").empty() ? default_D(m) : o.integer("D");
        a = sample_hard_vector(m, D, o.u64("seed"));
      } else {
        throw Error(ErrorCode::kInvalidArgument, "give one of --instance, --a or --m");
      }
      AuditConfig cfg;
      cfg.residual_factor = o.rational("residual-factor");
      if (!o.at("window-factor").empty()) cfg.window_factor = o.rational("window-factor");
      cfg.entry_factor = o.rational("entry-factor");
      cfg.grid_budget = o.u64("grid-budget");
      cfg.heuristic_samples = o.u64("samples");
      cfg.seed = o.u64("seed");
      const auto r = diophantine_audit(a, D, o.rational("eps"), o.rational("alpha"), parse_audit_mode(o.at("mode")), cfg);
      emit_json("audit", json_io::to_json(r));
      return r.verdict == AuditVerdict::kCertifiedNone ? kExitNegative : kExitOk;
    };
  }

  // --- greedy-cert -------------------------------------------------------------

  void add_greedy() {
    auto* s = sub("greedy-cert", "Greedy knapsack solution J with the certified profit bound");
    positional(s, "instance", "Instance JSON with three registered bases");
    opt(s, "ctilde", "", "Comma-separated profit vector");
    opt(s, "random-max", "", "Instead draw ctilde_i uniformly from 1..this");
    opt(s, "seed", "0", "Seed for --random-max");
    opt(s, "delta", "1/100", "delta used by the claim checks");
    output_opt(s);
    handlers_["greedy-cert"] = [this] {
      const auto& o = opts_.at("greedy-cert");
      const auto inst = load_instance(o);
      ProfitVector ct;
      if (!o.at("ctilde").empty()) {
        ct.entries = parse_integer_list(o.at("ctilde"));
      } else if (!o.at("random-max").empty()) {
        auto rng = make_rng(o.u64("seed"));
        const Integer hi = o.integer("random-max");
        for (std::size_t i = 0; i < inst.n(); ++i) ct.entries.push_back(1 + uniform_integer(rng, hi - 1));
      } else {
        throw Error(ErrorCode::kInvalidArgument, "give --ctilde or --random-max");
      }
      const auto cert = greedy_certificate(inst.c(), ct, bases_array(inst.bases()));
      const auto claims = check_claims(cert, inst.c(), o.rational("delta"));
      emit_json("greedy-cert", json_io::to_json(cert, claims));
      return kExitOk;
    };
  }

  // --- gamma -----------------------------------------------------------------

  void add_gamma() {
    auto* s = sub("gamma", "Certify L_c(eps) >= gamma / eps on [delta1, delta0]");
    positional(s, "instance", "Instance JSON");
    opt(s, "delta0", "", "Upper end of the eps range", true);
    opt(s, "delta1", "", "Lower end of the eps range", true);
    opt(s, "grid", "", "Explicit comma-separated grid (delta0 first)");
    opt(s, "ratio", "2", "Geometric grid ratio");
    flag(s, "auto", "Refine the ratio until gamma >= 2 or refinements run out");
    opt(s, "refinements", "5", "Refinement steps for --auto");
    opt(s, "method", "necessary_condition", "necessary_condition or exact_lmin");
    opt(s, "lmin-budget", env_or("GCRANK_LMIN_BUDGET", "12"), "exact_lmin search budget (env GCRANK_LMIN_BUDGET)");
    opt(s, "sweep-budget", env_or("GCRANK_SWEEP_BUDGET", "200000"),
        "Necessary-condition sweep budget (env GCRANK_SWEEP_BUDGET)");
    jobs_opt(s);
    knapsack_opt(s);
    output_opt(s);
    handlers_["gamma"] = [this] {
      const auto& o = opts_.at("gamma");
      const auto inst = load_instance(o);
      GammaOptions go;
      go.lmin_budget = o.integer("lmin-budget");
      go.sweep_budget = o.integer("sweep-budget");
      go.jobs = jobs(o);
      go.knapsack = knapsack_budget(o);
      const auto method = parse_gamma_method(o.at("method"));
      const Rational d0 = o.rational("delta0"), d1 = o.rational("delta1");
      GammaCertificate cert;
      if (!o.at("grid").empty()) {
        cert = verify_gamma(inst, d0, d1, parse_rational_list(o.at("grid")), method, go);
      } else if (o.flag("auto")) {
        cert = verify_gamma_auto(inst, d0, d1, method, go, 2, static_cast<int>(o.u64("refinements")), o.rational("ratio"));
      } else {
        cert = verify_gamma(inst, d0, d1, geometric_grid(d0, d1, o.rational("ratio")), method, go);
      }
      json j = json_io::to_json(cert);
      j["rank"] = rank_summary(cert);
      emit_json("gamma", j);
      return kExitOk;
    };
  }

  // Both rank bounds a certificate supports.
  static json rank_summary(const GammaCertificate& cert) {
    json r;
    r["grid_walk_bound"] = json_io::of(grid_walk_rank_bound(cert.points));
    if (cert.gamma >= 2 && cert.delta0 > cert.delta1) r["lemma"] = json_io::to_json(rank_lower_bound(cert.gamma, cert.delta0, cert.delta1));
    else r["lemma"] = nullptr;
    Integer best = grid_walk_rank_bound(cert.points);
    if (!r["lemma"].is_null()) {
      const auto f = rank_lower_bound(cert.gamma, cert.delta0, cert.delta1).floor_bound;
      if (f > best) best = f;
    }
    r["floor_bound"] = json_io::of(best);
    return r;
  }

  // --- rank-bound --------------------------------------------------------------

  void add_rank_bound() {
    auto* s = sub("rank-bound", "Rank lower bound from gamma or from a gamma certificate");
    opt(s, "gamma", "", "gamma >= 2");
    opt(s, "delta0", "", "Upper end of the eps range");
    opt(s, "delta1", "", "Lower end of the eps range");
    opt(s, "cert", "", "Gamma certificate JSON (verified before use)");
    flag(s, "no-verify", "Trust --cert without replaying it");
    jobs_opt(s);
    output_opt(s);
    handlers_["rank-bound"] = [this] {
      const auto& o = opts_.at("rank-bound");
      if (!o.at("cert").empty()) {
        const auto cert = json_io::gamma_certificate_from_json(read_json(o.at("cert")));
        json j;
        if (!o.flag("no-verify")) {
          GammaOptions go;
          go.jobs = jobs(o);
          const auto chk = check_gamma_certificate(cert, go);
          if (!chk.ok) {
            for (const auto& p : chk.problems) err_ << "gcrank rank-bound: " << p << "\n";
            throw Error(ErrorCode::kInvalidArgument, "certificate does not verify");
          }
          j["verified"] = true;
        } else {
          j["verified"] = false;
        }
        j["gamma"] = json_io::of(cert.gamma);
        j["delta0"] = json_io::of(cert.delta0);
        j["delta1"] = json_io::of(cert.delta1);
        j["rank"] = rank_summary(cert);
        j["floor_bound"] = j["rank"]["floor_bound"];
        emit_json("rank-bound", j);
        return kExitOk;
      }
      if (o.at("gamma").empty() || o.at("delta0").empty() || o.at("delta1").empty())
        throw Error(ErrorCode::kInvalidArgument, "give --cert or all of --gamma, --delta0, --delta1");
      const auto r = rank_lower_bound(o.rational("gamma"), o.rational("delta0"), o.rational("delta1"));
      emit_json("rank-bound", json_io::to_json(r));
      return kExitOk;
    };
  }

  // --- closure / trace -----------------------------------------------------------

  void polytope_opts(CLI::App* s) {
    opt(s, "poly", "", "HPolytope JSON");
    opt(s, "instance", "", "Instance JSON (n <= 4); uses P(c, eps)");
    opt(s, "c", "", "Weights for P(c, eps) given inline");
    opt(s, "eps", "", "eps for --c or overriding --instance");
    opt(s, "K", "2", "Normals c with |c|_inf <= K");
    opt(s, "enum-budget", "2000000", "Cap on n (2K+1)^n normals");
  }

  HPolytope load_polytope(const Options& o) const {
    if (!o.at("poly").empty()) return json_io::polytope_from_json(read_json(o.at("poly")));
    if (!o.at("instance").empty()) return polytope_from_instance(load_instance(o));
    if (!o.at("c").empty()) {
      if (o.at("eps").empty()) throw Error(ErrorCode::kInvalidArgument, "--c needs --eps");
      return polytope_from_instance(Instance(WeightVector(parse_integer_list(o.at("c"))), o.rational("eps")));
    }
    throw Error(ErrorCode::kInvalidArgument, "give one of --poly, --instance or --c");
  }

  static ClosureOptions closure_options(const Options& o) {
    ClosureOptions c;
    c.enumeration_budget = o.u64("enum-budget");
    return c;
  }

  void add_closure() {
    auto* s = sub("closure", "Truncated Gomory-Chvatal closure (a superset of the true closure)");
    polytope_opts(s);
    opt(s, "rounds", "1", "Closure rounds");
    output_opt(s);
    handlers_["closure"] = [this] {
      const auto& o = opts_.at("closure");
      HPolytope p = load_polytope(o);
      const int K = static_cast<int>(o.u64("K"));
      const auto rounds = o.u64("rounds");
      for (std::uint64_t r = 0; r < rounds; ++r) p = candidate_closure(p, K, closure_options(o));
      json j = json_io::to_json(p);
      j["relaxation"] = "upper-bounding relaxation of the closure: normals truncated to |c|_inf <= K";
      const auto e = diagonal_max_eps(p);
      j["eps_bar"] = e ? json_io::of(*e) : json(nullptr);
      emit_json("closure", j);
      return kExitOk;
    };
  }

  void add_trace() {
    auto* s = sub("trace", "eps_bar per round of truncated closures, as CSV");
    polytope_opts(s);
    opt(s, "rounds", "3", "Closure rounds");
    flag(s, "k-sweep", "Also run with K+1 and flag a changed trace on stderr");
    output_opt(s);
    handlers_["trace"] = [this] {
      const auto& o = opts_.at("trace");
      const HPolytope p = load_polytope(o);
      const int K = static_cast<int>(o.u64("K"));
      const int rounds = static_cast<int>(o.u64("rounds"));
      const auto trace = diagonal_trace(p, K, rounds, closure_options(o));
      std::string text = "# " + config("trace").dump() + "\n" + json_io::trace_csv(trace);
      if (o.flag("k-sweep")) {
        const auto next = diagonal_trace(p, K + 1, rounds, closure_options(o));
        bool same = next.size() == trace.size();
        for (std::size_t i = 0; same && i < trace.size(); ++i) same = trace[i].eps_bar == next[i].eps_bar;
        text += "# K+1 trace " + std::string(same ? "unchanged" : "CHANGED") + "\n";
        if (!same) err_ << "gcrank trace: trace changes between K=" << K << " and K=" << K + 1 << "\n";
      }
      emit("trace", text);
      return kExitOk;
    };
  }

  // --- verify-cert -------------------------------------------------------------

  void add_verify() {
    auto* s = sub("verify-cert", "Replay a gamma or greedy certificate in exact arithmetic");
    positional(s, "certificate", "Certificate JSON");
    jobs_opt(s);
    output_opt(s);
    handlers_["verify-cert"] = [this] {
      const auto& o = opts_.at("verify-cert");
      const auto j = read_json(o.at("certificate"));
      const std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "";
      CertificateCheck chk;
      if (kind == "gamma_certificate") {
        GammaOptions go;
        go.jobs = jobs(o);
        chk = check_gamma_certificate(json_io::gamma_certificate_from_json(j), go);
      } else if (kind == "greedy_certificate") {
        chk = check_greedy_json(j);
      } else {
        throw Error(ErrorCode::kParse, "unknown certificate kind '" + kind + "'");
      }
      json r;
      r["kind"] = kind;
      r["ok"] = chk.ok;
      r["problems"] = chk.problems;
      emit_json("verify-cert", r);
      for (const auto& p : chk.problems) err_ << "gcrank verify-cert: " << p << "\n";
      return chk.ok ? kExitOk : kExitError;
    };
  }

  // Rebuilds the certificate from (c, ctilde, bases) and compares every field,
  // then re-derives J's weight and value directly.
  static CertificateCheck check_greedy_json(const json& j) {
    CertificateCheck chk;
    const WeightVector c(json_io::integers(json_io::field(j, "c")));
    ProfitVector ct;
    ct.entries = json_io::integers(json_io::field(j, "ctilde"));
    std::vector<std::vector<std::size_t>> b;
    for (const auto& x : json_io::field(j, "bases")) b.push_back(json_io::indices(x));
    const auto cert = greedy_certificate(c, ct, bases_array(b));
    const auto claims = check_claims(cert, c, json_io::rational(json_io::field(json_io::field(j, "claims"), "delta")));
    const json again = json_io::to_json(cert, claims);
    for (const auto& [k, v] : again.items())
      if (!j.contains(k) || j.at(k) != v) chk.fail("field '" + k + "' does not match the recomputed certificate");
    const auto J = json_io::indices(json_io::field(j, "J"));
    if (sum_over(c.entries(), J) != c.l1() / 2) chk.fail("c(J) differs from |c|_1 / 2");
    if (sum_over(ct.entries, J) != json_io::integer(json_io::field(j, "achieved"))) chk.fail("ctilde(J) differs from 'achieved'");
    return chk;
  }
};

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  App app(out, err);
  return app.run(args);
}

}  // namespace gcrank::cli
