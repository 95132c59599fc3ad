// Command-line front end for the semigame library: exact game solving on
// finite semigroups, invariant-measure polytopes, tile checks, asymptotic
// densities, and iterated asymptotic integrals.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "semigame/averaging.hpp"
#include "semigame/errors.hpp"
#include "semigame/game.hpp"
#include "semigame/integer_sets.hpp"
#include "semigame/iterated.hpp"
#include "semigame/lp.hpp"
#include "semigame/measures.hpp"
#include "semigame/parse.hpp"
#include "semigame/pn.hpp"
#include "semigame/random_instances.hpp"
#include "semigame/rational.hpp"
#include "semigame/version.hpp"
#include "semigame/wald.hpp"
#include "semigame/wset.hpp"

namespace sg = semigame;
using sg::cli::Json;

namespace {

// ---------------------------------------------------------------------------
// JSON building blocks.  Exact values are strings; *_approx doubles are
// companions for human reading only.

std::string jrat(const sg::Rational& q) { return sg::format_rational(q); }

std::string jbig(const sg::BigInt& v) { return v.str(); }

void put_rat(Json& obj, const std::string& key, const sg::Rational& q) {
  obj[key] = jrat(q);
  obj[key + "_approx"] = sg::approx(q);
}

Json jvec(const std::vector<sg::Rational>& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(jrat(q));
  return arr;
}

Json jprob(const sg::ProbabilityVector& p) { return jvec(p.weights()); }

Json jsamples(const std::vector<std::pair<sg::BigInt, sg::Rational>>& samples) {
  Json arr = Json::array();
  for (const auto& s : samples) {
    Json row;
    row["n"] = jbig(s.first);
    put_rat(row, "ratio", s.second);
    arr.push_back(std::move(row));
  }
  return arr;
}

const char* verdict_name(sg::Verdict v) {
  switch (v) {
    case sg::Verdict::converged: return "converged";
    case sg::Verdict::oscillating: return "oscillating";
    case sg::Verdict::undecided: return "undecided";
  }
  return "unknown";
}

Json jstabilization(const sg::StabilizationResult& r) {
  Json out;
  out["verdict"] = verdict_name(r.verdict);
  out["exact"] = r.exact;
  if (r.verdict == sg::Verdict::converged) put_rat(out, "value", r.value);
  put_rat(out, "low", r.low);
  put_rat(out, "high", r.high);
  put_rat(out, "window_low", r.window_low);
  put_rat(out, "window_high", r.window_high);
  put_rat(out, "window_spread", r.window_spread);
  return out;
}

Json jstage(const sg::StageEvidence& ev) {
  Json out;
  out["mode"] = sg::stage_mode_name(ev.mode);
  out["decided"] = ev.decided;
  out["exact"] = ev.exact;
  if (ev.decided) put_rat(out, "value", ev.value);
  put_rat(out, "low", ev.low);
  put_rat(out, "high", ev.high);
  Json arr = Json::array();
  for (const auto& s : ev.samples) {
    Json row;
    row["n"] = s.first;
    put_rat(row, "average", s.second);
    arr.push_back(std::move(row));
  }
  out["samples"] = std::move(arr);
  if (!ev.note.empty()) out["note"] = ev.note;
  return out;
}

Json jiterated(const sg::IteratedReport& r) {
  Json out;
  out["order"] = r.order == sg::SumOrder::x_inner ? "x_inner" : "y_inner";
  out["decided"] = r.decided;
  out["exact"] = r.exact;
  if (r.decided) put_rat(out, "value", r.value);
  out["outer"] = jstage(r.outer);
  out["inner_example_point"] = r.inner_example_point;
  out["inner_example"] = jstage(r.inner_example);
  out["inner_stages"] = r.inner_stages;
  out["inner_undecided"] = r.inner_undecided;
  out["evaluations"] = r.evaluations;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json jsolution(const sg::GameSolution& sol) {
  Json out;
  put_rat(out, "value", sol.value);
  out["p_star"] = jprob(sol.p_star);
  out["q_star"] = jprob(sol.q_star);
  out["row_guarantee"] = jrat(sol.row_guarantee);
  out["col_guarantee"] = jrat(sol.col_guarantee);
  return out;
}

Json jpolytope(const sg::InvariantMeasurePolytope& poly, bool verify_certificate) {
  Json out;
  out["n"] = poly.n;
  out["equations"] = static_cast<long long>(poly.system.eq_coeffs.size());
  out["status"] =
      poly.status == sg::PolytopeStatus::nonempty ? "nonempty" : "empty";
  if (poly.status == sg::PolytopeStatus::empty) {
    out["empty_reason"] = poly.empty_reason;
    out["farkas"] = jvec(poly.farkas);
    if (verify_certificate) {
      out["farkas_verified"] =
          sg::lp::verify_farkas(sg::invariance_feasibility_lp(poly.system),
                                poly.farkas);
    }
    return out;
  }
  out["unique"] = poly.unique;
  out["complete"] = poly.complete;
  out["dim"] = poly.dim;
  Json pts = Json::array();
  for (const auto& m : poly.extreme_points) pts.push_back(jprob(m));
  out["extreme_points"] = std::move(pts);
  return out;
}

Json jtheorem(const sg::TheoremReport& rep) {
  Json out;
  out["applicable"] = rep.applicable;
  out["all_hold"] = rep.all_hold;
  out["polytope"] = jpolytope(rep.polytope, /*verify_certificate=*/true);
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json row;
    row["measure"] = jprob(c.measure);
    put_rat(row, "mean", c.mean);
    row["value_matches"] = c.value_matches;
    row["reply_to_row"] = Json{{"index", c.reply_to_row.index},
                               {"payoff", jrat(c.reply_to_row.payoff)}};
    row["reply_to_col"] = Json{{"index", c.reply_to_col.index},
                               {"payoff", jrat(c.reply_to_col.payoff)}};
    row["optimal_for_row"] = c.optimal_for_row;
    row["optimal_for_col"] = c.optimal_for_col;
    checks.push_back(std::move(row));
  }
  out["checks"] = std::move(checks);
  return out;
}

// ---------------------------------------------------------------------------
// Shared option state.

struct GlobalOpts {
  std::string format = "json";
  bool strict = false;
  int jobs = 1;
  std::uint64_t seed = 0;
};

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
  }
};

void emit(const GlobalOpts& g, const std::string& command, Json inputs,
          Json results, const Timer& timer) {
  Json report =
      sg::cli::make_report(command, std::move(inputs), std::move(results),
                           timer.ms());
  std::cout << sg::cli::render_report(report, g.format);
}

sg::PayoffFunction resolve_payoff(const sg::FiniteSemigroup& s,
                                  const std::string& payoff_spec,
                                  const std::string& winset_spec,
                                  const std::string& signed_spec) {
  int given = !payoff_spec.empty() + !winset_spec.empty() + !signed_spec.empty();
  if (given != 1) {
    throw sg::BadParamError(
        "exactly one of --payoff, --winset, --signed is required");
  }
  if (!payoff_spec.empty()) return sg::parse_payoff_spec(payoff_spec, s.size());
  if (!winset_spec.empty()) {
    return sg::PayoffFunction::characteristic(
        sg::parse_subset_spec(winset_spec, s.size()));
  }
  return sg::PayoffFunction::signed_characteristic(
      sg::parse_subset_spec(signed_spec, s.size()));
}

std::vector<int> parse_translates(const std::string& spec) {
  std::vector<int> out;
  for (const auto& part : sg::split_top_level(spec, ',')) {
    out.push_back(static_cast<int>(sg::parse_int(part)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand bodies.  Each returns the process exit code.

int run_validate(const GlobalOpts& g, const std::string& semigroup_spec) {
  Timer timer;
  sg::FiniteSemigroup s = sg::parse_semigroup_spec(semigroup_spec);
  bool commutative = true;
  for (int x = 0; x < s.size() && commutative; ++x) {
    for (int y = x + 1; y < s.size() && commutative; ++y) {
      commutative = s.op(x, y) == s.op(y, x);
    }
  }
  Json results;
  results["n"] = s.size();
  results["associative"] = s.is_associative();
  if (auto w = s.associativity_witness()) {
    auto [x, y, z] = *w;
    results["associativity_witness"] = Json{{"x", x}, {"y", y}, {"z", z}};
  }
  results["commutative"] = commutative;
  if (s.size() <= 16) results["table"] = s.table();
  emit(g, "validate", Json{{"semigroup", semigroup_spec}}, std::move(results),
       timer);
  return 0;
}

struct SolveSpecs {
  std::string semigroup, payoff, winset, signed_set;
  bool verify = false;
  std::string batch_file;
};

Json solve_one(const std::string& semigroup_spec, const sg::PayoffFunction& f,
               const sg::FiniteSemigroup& s, bool verify) {
  Json results;
  results["semigroup"] = semigroup_spec;
  results["payoff"] = jvec(f.values());
  if (verify) {
    sg::TheoremReport rep = sg::verify_main_theorem(s, f);
    results["solution"] = jsolution(rep.solution);
    results["theorem"] = jtheorem(rep);
  } else {
    sg::GameSolution sol = sg::solve_zero_sum(sg::build_payoff_matrix(s, f));
    results["solution"] = jsolution(sol);
  }
  return results;
}

int run_solve_batch(const GlobalOpts& g, const SolveSpecs& spec) {
  std::ifstream in(spec.batch_file);
  if (!in) throw sg::ParseError("cannot open batch file: " + spec.batch_file);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(line);
  }

  std::vector<std::string> outputs(lines.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> any_error{false};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= lines.size()) return;
      Json out;
      out["line"] = static_cast<long long>(i);
      try {
        Json req = Json::parse(lines[i]);
        std::string sspec = req.at("semigroup").get<std::string>();
        std::string pspec = req.at("payoff").get<std::string>();
        sg::FiniteSemigroup s = sg::parse_semigroup_spec(sspec);
        sg::PayoffFunction f = sg::parse_payoff_spec(pspec, s.size());
        out["results"] = solve_one(sspec, f, s, spec.verify);
      } catch (const std::exception& e) {
        out["error"] = e.what();
        any_error = true;
      }
      outputs[i] = out.dump();
    }
  };

  int jobs = std::max(1, g.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& line : outputs) std::cout << line << "\n";
  return any_error ? 2 : 0;
}

int run_solve(const GlobalOpts& g, const SolveSpecs& spec) {
  if (!spec.batch_file.empty()) return run_solve_batch(g, spec);
  Timer timer;
  sg::FiniteSemigroup s = sg::parse_semigroup_spec(spec.semigroup);
  sg::PayoffFunction f =
      resolve_payoff(s, spec.payoff, spec.winset, spec.signed_set);
  Json inputs{{"semigroup", spec.semigroup}};
  if (!spec.payoff.empty()) inputs["payoff"] = spec.payoff;
  if (!spec.winset.empty()) inputs["winset"] = spec.winset;
  if (!spec.signed_set.empty()) inputs["signed"] = spec.signed_set;
  inputs["verify"] = spec.verify;
  emit(g, "solve", std::move(inputs),
       solve_one(spec.semigroup, f, s, spec.verify), timer);
  return 0;
}

int run_measures(const GlobalOpts& g, const std::string& semigroup_spec,
                 int max_dim, long combination_cap) {
  Timer timer;
  sg::FiniteSemigroup s = sg::parse_semigroup_spec(semigroup_spec);
  sg::InvariantMeasurePolytope poly =
      sg::invariant_measures(s, max_dim, combination_cap);
  Json results = jpolytope(poly, /*verify_certificate=*/true);
  results["associative"] = s.is_associative();
  emit(g, "measures",
       Json{{"semigroup", semigroup_spec},
            {"max_dim", max_dim},
            {"combination_cap", combination_cap}},
       std::move(results), timer);
  return 0;
}

int run_imbounds(const GlobalOpts& g, const std::string& semigroup_spec,
                 const std::string& payoff_spec, const std::string& winset_spec,
                 const std::string& signed_spec) {
  Timer timer;
  sg::FiniteSemigroup s = sg::parse_semigroup_spec(semigroup_spec);
  sg::PayoffFunction f =
      resolve_payoff(s, payoff_spec, winset_spec, signed_spec);
  Json inputs{{"semigroup", semigroup_spec}};
  if (!payoff_spec.empty()) inputs["payoff"] = payoff_spec;
  if (!winset_spec.empty()) inputs["winset"] = winset_spec;
  if (!signed_spec.empty()) inputs["signed"] = signed_spec;

  Json results;
  try {
    sg::ImBounds bounds = sg::im_bounds(s, f);
    results["status"] = "computed";
    put_rat(results, "lower", bounds.lower);
    put_rat(results, "upper", bounds.upper);
    results["has_property_IM"] = bounds.lower == bounds.upper;
    if (s.is_associative()) {
      sg::GameSolution sol = sg::solve_zero_sum(sg::build_payoff_matrix(s, f));
      put_rat(results, "game_value", sol.value);
      results["bounds_bracket_value"] =
          bounds.lower <= sol.value && sol.value <= bounds.upper;
    }
  } catch (const sg::NoInvariantMeasureError& e) {
    results["status"] = "no_invariant_measure";
    results["detail"] = e.what();
  }
  emit(g, "imbounds", std::move(inputs), std::move(results), timer);
  return 0;
}

int run_tile(const GlobalOpts& g, const std::string& semigroup_spec,
             const std::string& set_spec, const std::string& translates_spec) {
  Timer timer;
  sg::FiniteSemigroup s = sg::parse_semigroup_spec(semigroup_spec);
  sg::Subset w = sg::parse_subset_spec(set_spec, s.size());
  std::vector<int> translates = parse_translates(translates_spec);
  Json inputs{{"semigroup", semigroup_spec},
              {"set", set_spec},
              {"translates", translates_spec}};

  Json results;
  sg::TileCheck check = sg::verify_tile(s, w, translates);
  results["is_tile"] = check.ok;
  results["k"] = check.k;
  if (!check.ok) {
    if (check.uncovered) results["uncovered"] = *check.uncovered;
    if (check.overlap) {
      auto [i, j, e] = *check.overlap;
      results["overlap"] = Json{{"translate_i", i}, {"translate_j", j}, {"element", e}};
    }
    emit(g, "tile", std::move(inputs), std::move(results), timer);
    return 0;
  }
  try {
    sg::TileMeasureReport rep = sg::tile_measure_check(s, w, translates);
    put_rat(results, "expected", rep.expected);
    results["point_measures"] = jvec(rep.point_measures);
    put_rat(results, "lower", rep.bounds.lower);
    put_rat(results, "upper", rep.bounds.upper);
    results["all_match"] = rep.all_match;
    results["violations"] = rep.violations;
  } catch (const sg::NoInvariantMeasureError& e) {
    results["measure_status"] = "no_invariant_measure";
    results["detail"] = e.what();
  }
  emit(g, "tile", std::move(inputs), std::move(results), timer);
  return 0;
}

int run_density(const GlobalOpts& g, const std::string& sequence_spec,
                const std::string& set_spec, const std::string& at_spec,
                const std::string& schedule_spec, long long enum_cap) {
  Timer timer;
  sg::AveragingSequence seq = sg::parse_sequence_spec(sequence_spec);
  sg::IntegerSet a = sg::parse_set_spec(set_spec);
  Json inputs{{"sequence", sequence_spec}, {"set", set_spec}};
  if (!at_spec.empty()) inputs["at"] = at_spec;
  if (!schedule_spec.empty()) inputs["schedule"] = schedule_spec;
  inputs["enum_cap"] = enum_cap;

  Json results;
  results["sequence"] = sg::describe_sequence(seq);
  results["set"] = sg::describe_set(a);
  if (!at_spec.empty()) {
    sg::BigInt n = sg::parse_bigint(at_spec);
    results["n"] = jbig(n);
    results["stage_size"] = jbig(sg::stage_size(seq, n));
    put_rat(results, "ratio", sg::density_along(seq, a, n, enum_cap));
    emit(g, "density", std::move(inputs), std::move(results), timer);
    return 0;
  }

  std::vector<sg::BigInt> schedule;
  if (!schedule_spec.empty()) schedule = sg::parse_schedule_spec(schedule_spec);
  sg::DensityReport rep =
      sg::limit_density(seq, a, schedule, sg::StabilizationParams{}, enum_cap);
  results["samples"] = jsamples(rep.samples);
  results["stabilization"] = jstabilization(rep.result);
  bool undecided = rep.result.verdict == sg::Verdict::undecided;
  emit(g, "density", std::move(inputs), std::move(results), timer);
  return (g.strict && undecided) ? 3 : 0;
}

int run_pn(const GlobalOpts& g, int n, int cap, const std::string& set_spec) {
  Timer timer;
  Json inputs{{"n", n}, {"cap", cap}};
  if (!set_spec.empty()) inputs["set"] = set_spec;

  Json results;
  results["n"] = n;
  results["size"] = jbig(sg::pn_size(n));
  std::vector<sg::BigInt> elements = sg::generate_pn(n, cap);
  results["size_matches_formula"] =
      sg::BigInt(elements.size()) == sg::pn_size(n);
  if (elements.size() <= 100) {
    Json arr = Json::array();
    for (const auto& v : elements) arr.push_back(jbig(v));
    results["elements"] = std::move(arr);
  }
  if (!set_spec.empty()) {
    sg::IntegerSet a = sg::parse_set_spec(set_spec);
    results["set"] = sg::describe_set(a);
    put_rat(results, "density", sg::multiplicative_density(a, n, cap));
  }
  emit(g, "pn", std::move(inputs), std::move(results), timer);
  return 0;
}

int run_wtable(const GlobalOpts& g, int jmax) {
  Timer timer;
  Json results;
  Json rows = Json::array();
  for (const auto& row : sg::w_oscillation_table(jmax)) {
    Json r;
    r["j"] = row.j;
    r["low_n"] = jbig(row.low_n);
    put_rat(r, "low_ratio", row.low_ratio);
    r["high_n"] = jbig(row.high_n);
    put_rat(r, "high_ratio", row.high_ratio);
    put_rat(r, "one_minus_high", row.one_minus_high);
    rows.push_back(std::move(r));
  }
  results["rows"] = std::move(rows);
  results["note"] = sg::w_table_note();
  emit(g, "wtable", Json{{"jmax", jmax}}, std::move(results), timer);
  return 0;
}

int run_wald(const GlobalOpts& g, const std::string& support_spec,
             const std::string& response_spec, int random_count) {
  Timer timer;
  Json inputs;
  Json results;
  if (!support_spec.empty()) {
    inputs["support"] = support_spec;
    sg::FiniteSupportStrategy p = sg::parse_support_spec(support_spec);
    Json atoms = Json::array();
    for (const auto& atom : p.atoms()) {
      atoms.push_back(Json{{"point", jbig(atom.first)},
                           {"weight", jrat(atom.second)}});
    }
    results["atoms"] = std::move(atoms);
    results["max_support"] = jbig(p.max_support());
    sg::WaldResponse best = sg::wald_best_response(p);
    results["best_response"] = jbig(best.reply);
    put_rat(results, "payoff_against_best", best.payoff);
    if (!response_spec.empty()) {
      inputs["response"] = response_spec;
      sg::BigInt t = sg::parse_bigint(response_spec);
      put_rat(results, "payoff_against_response",
              sg::wald_expected_payoff(p, t));
    }
  } else if (random_count > 0) {
    inputs["random"] = random_count;
    inputs["seed"] = g.seed;
    sg::InstanceRng rng(g.seed);
    bool all_minus_one = true;
    sg::Rational worst(1);
    Json first;
    for (int i = 0; i < random_count; ++i) {
      sg::FiniteSupportStrategy p = sg::random_finite_support_strategy(rng);
      sg::WaldResponse best = sg::wald_best_response(p);
      if (best.payoff < worst) worst = best.payoff;
      all_minus_one &= best.payoff == sg::Rational(-1);
      if (i == 0) {
        Json atoms = Json::array();
        for (const auto& atom : p.atoms()) {
          atoms.push_back(Json{{"point", jbig(atom.first)},
                               {"weight", jrat(atom.second)}});
        }
        first = Json{{"atoms", std::move(atoms)},
                     {"best_response", jbig(best.reply)},
                     {"payoff", jrat(best.payoff)}};
      }
    }
    results["count"] = random_count;
    results["all_payoffs_minus_one"] = all_minus_one;
    put_rat(results, "worst_payoff", worst);
    results["first_example"] = std::move(first);
  } else {
    throw sg::BadParamError("wald needs --support or --random");
  }
  emit(g, "wald", std::move(inputs), std::move(results), timer);
  return 0;
}

int run_fubini(const GlobalOpts& g, const std::string& example,
               int random_count) {
  Timer timer;
  Json inputs;
  Json results;
  bool undecided = false;

  auto run_both = [&](auto f, const sg::SideMeasure& mu,
                      const sg::SideMeasure& nu) {
    sg::IteratedReport rx =
        sg::iterated_asymptotic_integral(f, mu, nu, sg::SumOrder::x_inner);
    sg::IteratedReport ry =
        sg::iterated_asymptotic_integral(f, mu, nu, sg::SumOrder::y_inner);
    results["x_inner"] = jiterated(rx);
    results["y_inner"] = jiterated(ry);
    if (rx.decided && ry.decided) {
      results["orders_agree"] = rx.value == ry.value;
      put_rat(results, "difference", rx.value - ry.value);
    } else {
      undecided = true;
    }
  };

  if (!example.empty()) {
    inputs["example"] = example;
    if (example == "wald") {
      run_both([](long long x, long long y) { return sg::wald_payoff(x, y); },
               sg::SideMeasure::averaging(sg::AveragingSequence::n_interval(0)),
               sg::SideMeasure::averaging(sg::AveragingSequence::n_interval(0)));
    } else if (example == "parity") {
      auto f = [](long long x, long long y) -> long long {
        long long z = x + y;
        if (z <= 0) return 0;
        return (z % 2 == 0) ? 1 : -1;
      };
      run_both(f, sg::SideMeasure::averaging(sg::AveragingSequence::pos_even()),
               sg::SideMeasure::averaging(sg::AveragingSequence::neg_even()));
    } else if (example == "finite") {
      sg::FiniteSupportStrategy p({{0, sg::Rational(1, 2)}, {3, sg::Rational(1, 2)}});
      sg::FiniteSupportStrategy q({{1, sg::Rational(1, 3)}, {2, sg::Rational(2, 3)}});
      run_both([](long long x, long long y) { return sg::wald_payoff(x, y); },
               sg::SideMeasure::finite(p), sg::SideMeasure::finite(q));
    } else {
      throw sg::BadParamError("unknown fubini example: " + example +
                              " (expected parity, wald, or finite)");
    }
  } else if (random_count > 0) {
    inputs["random"] = random_count;
    inputs["seed"] = g.seed;
    sg::InstanceRng rng(g.seed);
    bool all_equal = true;
    int failures = 0;
    for (int i = 0; i < random_count; ++i) {
      sg::FiniteSupportStrategy p = sg::random_finite_support_strategy(rng);
      sg::FiniteSupportStrategy q = sg::random_finite_support_strategy(rng);
      auto f = [](long long x, long long y) { return sg::wald_payoff(x, y); };
      sg::IteratedReport rx = sg::iterated_asymptotic_integral(
          f, sg::SideMeasure::finite(p), sg::SideMeasure::finite(q),
          sg::SumOrder::x_inner);
      sg::IteratedReport ry = sg::iterated_asymptotic_integral(
          f, sg::SideMeasure::finite(p), sg::SideMeasure::finite(q),
          sg::SumOrder::y_inner);
      bool ok = rx.decided && ry.decided && rx.value == ry.value;
      if (!ok) ++failures;
      all_equal &= ok;
    }
    results["count"] = random_count;
    results["all_orders_agree"] = all_equal;
    results["failures"] = failures;
  } else {
    throw sg::BadParamError("fubini needs --example or --random");
  }
  emit(g, "fubini", std::move(inputs), std::move(results), timer);
  return (g.strict && undecided) ? 3 : 0;
}

int run_benford(const GlobalOpts& g, const std::string& digits_spec, int n,
                int cap) {
  Timer timer;
  std::set<int> digits = sg::parse_digit_set(digits_spec);
  sg::BenfordEstimate est = sg::benford_density_estimate(digits, n, cap);
  Json results;
  results["n"] = est.n;
  results["digits"] = digits_spec;
  results["hits"] = jbig(est.hits);
  results["total"] = jbig(est.total);
  put_rat(results, "ratio", est.ratio);
  results["label"] = est.label;
  emit(g, "benford", Json{{"digits", digits_spec}, {"n", n}, {"cap", cap}},
       std::move(results), timer);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "semigame: exact zero-sum games on finite semigroups, invariant "
      "measures, and asymptotic densities"};
  app.set_version_flag("--version", std::string("semigame ") + sg::kVersion);
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_flag("--strict", g.strict,
               "Exit 3 when an asymptotic verdict is undecided");
  app.add_option("--jobs", g.jobs, "Worker threads for batch mode")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized sweeps")
      ->capture_default_str();

  std::string semigroup_spec, payoff_spec, winset_spec, signed_spec;
  std::string set_spec, translates_spec, sequence_spec, at_spec, schedule_spec;
  std::string support_spec, response_spec, example_spec, digits_spec = "1";
  long long enum_cap = sg::kDefaultEnumCap;
  int max_dim = 8;
  long combination_cap = 200000;
  int pn_n = 2, pn_cap = sg::kPnDefaultCap, jmax = 4;
  int random_count = 0;
  SolveSpecs solve_specs;

  CLI::App* validate = app.add_subcommand(
      "validate", "Check a Cayley table: closure, associativity, commutativity");
  validate->add_option("--semigroup", semigroup_spec, "Structure spec")
      ->required();

  CLI::App* solve = app.add_subcommand(
      "solve", "Solve the zero-sum game with payoff f(x*y) exactly");
  solve->add_option("--semigroup", solve_specs.semigroup, "Structure spec");
  solve->add_option("--payoff", solve_specs.payoff, "Payoff spec");
  solve->add_option("--winset", solve_specs.winset, "Subset spec for chi_W");
  solve->add_option("--signed", solve_specs.signed_set,
                    "Subset spec for chi_W - chi_complement");
  solve->add_flag("--verify", solve_specs.verify,
                  "Cross-check optimal invariant measures");
  solve->add_option("--batch", solve_specs.batch_file,
                    "LDJSON file of {\"semigroup\":..., \"payoff\":...} lines");

  CLI::App* measures = app.add_subcommand(
      "measures", "Describe the invariant-measure polytope");
  measures->add_option("--semigroup", semigroup_spec, "Structure spec")
      ->required();
  measures->add_option("--max-dim", max_dim, "Vertex enumeration dimension cap")
      ->capture_default_str();
  measures
      ->add_option("--cap", combination_cap, "Vertex enumeration subset cap")
      ->capture_default_str();

  CLI::App* imbounds = app.add_subcommand(
      "imbounds", "Exact payoff bounds over the invariant-measure polytope");
  imbounds->add_option("--semigroup", semigroup_spec, "Structure spec")
      ->required();
  imbounds->add_option("--payoff", payoff_spec, "Payoff spec");
  imbounds->add_option("--winset", winset_spec, "Subset spec for chi_W");
  imbounds->add_option("--signed", signed_spec,
                       "Subset spec for chi_W - chi_complement");

  CLI::App* tile = app.add_subcommand(
      "tile", "Check a left-translation tiling and its measure 1/k");
  tile->add_option("--semigroup", semigroup_spec, "Structure spec")->required();
  tile->add_option("--set", set_spec, "Subset spec for the tile W")->required();
  tile->add_option("--translates", translates_spec, "Comma-separated elements")
      ->required();

  CLI::App* density = app.add_subcommand(
      "density", "Exact densities along an averaging sequence");
  density->add_option("--sequence", sequence_spec, "Averaging sequence spec")
      ->required();
  density->add_option("--set", set_spec, "Integer set spec")->required();
  density->add_option("--at", at_spec, "Single stage index n");
  density->add_option("--schedule", schedule_spec,
                      "Stage schedule, e.g. pow2:4..20 or 16,32,64");
  density->add_option("--cap", enum_cap, "Enumeration cap for predicate sets")
      ->capture_default_str();

  CLI::App* pn = app.add_subcommand(
      "pn", "The multiplicative stage P_n: size and exact densities");
  pn->add_option("--n", pn_n, "Stage index")->required();
  pn->add_option("--cap", pn_cap, "Largest allowed n")->capture_default_str();
  pn->add_option("--set", set_spec, "Integer set spec to measure");

  CLI::App* wtable = app.add_subcommand(
      "wtable", "Oscillation nodes of the block set W");
  wtable->add_option("--jmax", jmax, "Last node index (<= 6)")
      ->capture_default_str();

  CLI::App* wald = app.add_subcommand(
      "wald", "Pick-the-bigger-integer: best responses to finite strategies");
  wald->add_option("--support", support_spec,
                   "Strategy atoms, e.g. 0:1/2,5:1/2");
  wald->add_option("--response", response_spec,
                   "Also evaluate against this pure reply");
  wald->add_option("--random", random_count,
                   "Sweep this many random strategies (with --seed)");

  CLI::App* fubini = app.add_subcommand(
      "fubini", "Iterated asymptotic integrals in both orders");
  fubini->add_option("--example", example_spec,
                     "Named instance: parity, wald, or finite");
  fubini->add_option("--random", random_count,
                     "Random finite-support instances (with --seed)");

  CLI::App* benford = app.add_subcommand(
      "benford", "Leading-digit share inside P_n (estimate only)");
  benford->add_option("--digits", digits_spec, "Digit set, e.g. 123")
      ->capture_default_str();
  benford->add_option("--n", pn_n, "Stage index")->capture_default_str();
  benford->add_option("--cap", pn_cap, "Largest allowed n")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return run_validate(g, semigroup_spec);
    if (solve->parsed()) {
      if (solve_specs.batch_file.empty() && solve_specs.semigroup.empty()) {
        throw sg::BadParamError("solve needs --semigroup or --batch");
      }
      return run_solve(g, solve_specs);
    }
    if (measures->parsed())
      return run_measures(g, semigroup_spec, max_dim, combination_cap);
    if (imbounds->parsed())
      return run_imbounds(g, semigroup_spec, payoff_spec, winset_spec,
                          signed_spec);
    if (tile->parsed())
      return run_tile(g, semigroup_spec, set_spec, translates_spec);
    if (density->parsed())
      return run_density(g, sequence_spec, set_spec, at_spec, schedule_spec,
                         enum_cap);
    if (pn->parsed()) return run_pn(g, pn_n, pn_cap, set_spec);
    if (wtable->parsed()) return run_wtable(g, jmax);
    if (wald->parsed())
      return run_wald(g, support_spec, response_spec, random_count);
    if (fubini->parsed()) return run_fubini(g, example_spec, random_count);
    if (benford->parsed()) return run_benford(g, digits_spec, pn_n, pn_cap);
    return 2;
  } catch (const sg::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
