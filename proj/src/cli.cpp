#include "secretary/cli.hpp"

#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "secretary/asymptotic.hpp"
#include "secretary/combinatorics.hpp"
#include "secretary/finite.hpp"
#include "secretary/montecarlo.hpp"
#include "secretary/optimize.hpp"

namespace secretary::cli {

namespace {

using nlohmann::json;

struct Options {
  long long n = 1;
  long long k = 1;
  long long m = 0;
  double c = 0.5;
  double step = 0.01;
  StrategyKind strategy = StrategyKind::Inclusive;
  EvalMode mode = EvalMode::Auto;
  std::string mode_name = "auto";
  std::string strategy_name = "inclusive";
  std::string format = "json";
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::uint32_t chunk_size = 1u << 14;
  unsigned workers = 0;
  std::vector<long long> k_list;
  long long finite_n = 0;
  bool asymptotic = false;
};

const std::map<std::string, StrategyKind> kStrategyNames{
    {"inclusive", StrategyKind::Inclusive}, {"strict", StrategyKind::Strict}};
const std::map<std::string, EvalMode> kModeNames{
    {"auto", EvalMode::Auto}, {"exact", EvalMode::Exact}, {"float", EvalMode::Float}};

std::string mode_label(const Probability& p) {
  return p.is_exact() ? "exact" : "float";
}

void emit(std::ostream& out, const json& j, const std::string& format,
          const std::vector<std::string>& csv_columns) {
  if (format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  // CSV: one line per record; arrays become one line per element
  auto write_row = [&](const json& record) {
    bool first = true;
    for (const auto& column : csv_columns) {
      if (!first) out << ",";
      first = false;
      const json& cell = record.at(column);
      if (cell.is_string())
        out << cell.get<std::string>();
      else
        out << cell.dump();
    }
    out << "\n";
  };
  bool first = true;
  for (const auto& column : csv_columns) {
    if (!first) out << ",";
    first = false;
    out << column;
  }
  out << "\n";
  if (j.is_array())
    for (const auto& record : j) write_row(record);
  else
    write_row(j);
}

json probability_result(const Probability& p) {
  json result;
  if (p.is_exact()) result["rational"] = p.rational().to_string();
  result["value"] = p.value();
  return result;
}

json flatten(const json& record) {
  // CSV needs a flat record: inputs and result fields side by side
  json flat;
  for (const auto& [key, value] : record.at("inputs").items()) flat[key] = value;
  flat["mode"] = record.at("mode");
  for (const auto& [key, value] : record.at("result").items()) flat[key] = value;
  return flat;
}

int run_exact_or_brute(const Options& opt, bool brute, std::ostream& out) {
  const ProblemSize size(opt.n, opt.k);
  const Strategy strategy{opt.strategy, opt.m};
  const Probability p =
      brute ? brute_force_win_probability(size, strategy)
            : (opt.strategy == StrategyKind::Inclusive
                   ? win_probability_inclusive(size, opt.m, opt.mode)
                   : win_probability_strict(size, opt.m, opt.mode));
  json record{{"command", brute ? "brute" : "exact"},
              {"inputs",
               {{"n", opt.n},
                {"k", opt.k},
                {"m", opt.m},
                {"strategy", opt.strategy_name},
                {"mode", opt.mode_name}}},
              {"mode", mode_label(p)},
              {"result", probability_result(p)}};
  std::vector<std::string> columns{"n", "k", "m", "strategy", "mode", "value"};
  if (p.is_exact()) columns.insert(columns.end() - 1, "rational");
  emit(out, opt.format == "csv" ? flatten(record) : record, opt.format, columns);
  return 0;
}

int run_simulate(const Options& opt, std::ostream& out) {
  const ProblemSize size(opt.n, opt.k);
  const Strategy strategy{opt.strategy, opt.m};
  const SimulationConfig config{opt.trials, opt.seed, opt.chunk_size};
  const SimulationReport report = estimate(size, strategy, config, opt.workers);
  json record{{"command", "simulate"},
              {"inputs",
               {{"n", opt.n},
                {"k", opt.k},
                {"m", opt.m},
                {"strategy", opt.strategy_name},
                {"trials", opt.trials},
                {"seed", opt.seed},
                {"chunk_size", opt.chunk_size},
                {"workers", opt.workers}}},
              {"mode", "estimate"},
              {"result",
               {{"estimate", report.estimate},
                {"std_error", report.std_error},
                {"wins", report.wins},
                {"trials", report.trials}}}};
  emit(out, opt.format == "csv" ? flatten(record) : record, opt.format,
       {"n", "k", "m", "strategy", "trials", "seed", "estimate", "std_error", "wins"});
  return 0;
}

double limit_value(StrategyKind kind, long long k, double c) {
  if (c == 0.0 || c == 1.0) return limit_boundary_extension(k, c, kind);
  const LimitQuery query(k, c);
  return kind == StrategyKind::Inclusive ? limit_inclusive(query)
                                         : limit_strict(query);
}

int run_limit(const Options& opt, std::ostream& out) {
  const double value = limit_value(opt.strategy, opt.k, opt.c);
  json record{{"command", "limit"},
              {"inputs", {{"k", opt.k}, {"c", opt.c}, {"strategy", opt.strategy_name}}},
              {"mode", "float"},
              {"result", {{"value", value}}}};
  emit(out, opt.format == "csv" ? flatten(record) : record, opt.format,
       {"k", "c", "strategy", "value"});
  return 0;
}

int run_curve(const Options& opt, std::ostream& out) {
  if (!(opt.step > 0.0 && opt.step < 1.0))
    throw std::domain_error("curve: step must lie in (0,1)");
  json rows = json::array();
  auto add_row = [&](double c) {
    rows.push_back(json{{"k", opt.k},
                        {"strategy", opt.strategy_name},
                        {"c", c},
                        {"value", limit_value(opt.strategy, opt.k, c)}});
  };
  add_row(0.0);
  for (long long i = 1; static_cast<double>(i) * opt.step < 1.0 - opt.step / 2; ++i)
    add_row(static_cast<double>(i) * opt.step);
  add_row(1.0);
  emit(out, rows, opt.format, {"k", "strategy", "c", "value"});
  return 0;
}

int run_optimize(const Options& opt, std::ostream& out) {
  if (opt.asymptotic == (opt.finite_n > 0))
    throw std::domain_error("optimize: pass exactly one of --finite N or --asymptotic");
  json record;
  std::vector<std::string> columns;
  if (opt.asymptotic) {
    const AsymptoticOptimum best = best_c_asymptotic(opt.k, opt.strategy);
    record = json{{"command", "optimize"},
                  {"inputs",
                   {{"asymptotic", true}, {"k", opt.k}, {"strategy", opt.strategy_name}}},
                  {"mode", "float"},
                  {"result",
                   {{"c_star", best.c_star},
                    {"value", best.value},
                    {"method", "grid_refine"},
                    {"tolerance", best.tolerance}}}};
    columns = {"k", "strategy", "c_star", "value", "method"};
  } else {
    const ProblemSize size(opt.finite_n, opt.k);
    const FiniteOptimum best = best_cutoff_finite(size, opt.strategy, opt.mode);
    json result{{"m_star", best.cutoff_m},
                {"method", "exhaustive_scan"},
                {"tolerance", best.tolerance}};
    const json probability = probability_result(best.value);
    for (const auto& [key, value] : probability.items()) result[key] = value;
    record = json{{"command", "optimize"},
                  {"inputs",
                   {{"finite", opt.finite_n},
                    {"k", opt.k},
                    {"strategy", opt.strategy_name},
                    {"mode", opt.mode_name}}},
                  {"mode", mode_label(best.value)},
                  {"result", result}};
    columns = {"finite", "k", "strategy", "m_star", "value", "method"};
  }
  emit(out, opt.format == "csv" ? flatten(record) : record, opt.format, columns);
  return 0;
}

int run_table(const Options& opt, std::ostream& out) {
  if (opt.k_list.empty()) throw std::domain_error("table: --k list must be nonempty");
  const std::vector<TableRow> rows = table_optimal(opt.k_list, opt.strategy);
  if (opt.format == "csv") {
    out << "k,c_star,p_star\n";
    for (const TableRow& row : rows) {
      out << row.k << "," << std::fixed << std::setprecision(3) << row.c_star
          << "," << row.p_star << "\n";
      out.unsetf(std::ios_base::floatfield);
    }
    return 0;
  }
  json array = json::array();
  for (const TableRow& row : rows)
    array.push_back(json{{"k", row.k}, {"c_star", row.c_star}, {"p_star", row.p_star}});
  out << array.dump(2) << "\n";
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Win probabilities for the best-choice problem over the multiset "
               "{1^k,...,n^k}: exact finite-n formulas, a brute-force oracle, "
               "Monte Carlo estimation, large-n limits, and threshold optimization."};
  app.require_subcommand(1);

  Options opt;

  auto add_strategy = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", opt.strategy_name,
                    "Threshold family: accept a later item ranked >= the prefix "
                    "maximum (inclusive) or > it (strict)")
        ->check(CLI::IsMember({"inclusive", "strict"}))
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", opt.mode_name,
                    "Arithmetic: exact rationals, log-space floats, or auto "
                    "(exact when kn <= 64)")
        ->check(CLI::IsMember({"auto", "exact", "float"}))
        ->capture_default_str();
  };
  auto add_problem = [&](CLI::App* cmd, bool with_cutoff) {
    cmd->add_option("--n", opt.n, "Number of ranks")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--k", opt.k, "Items per rank")->required()->check(CLI::PositiveNumber);
    if (with_cutoff)
      cmd->add_option("--m", opt.m, "Cutoff: items allowed to pass before selecting")
          ->required()
          ->check(CLI::NonNegativeNumber);
  };

  CLI::App* exact = app.add_subcommand(
      "exact", "Win probability at finite n from the closed formula");
  add_problem(exact, true);
  add_strategy(exact);
  add_mode(exact);
  add_format(exact);

  CLI::App* brute = app.add_subcommand(
      "brute", "Win probability by exhaustive enumeration (kn <= 12)");
  add_problem(brute, true);
  add_strategy(brute);
  add_format(brute);

  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo estimate of the win probability");
  add_problem(simulate, true);
  add_strategy(simulate);
  simulate->add_option("--trials", opt.trials, "Number of plays")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  simulate->add_option("--chunk-size", opt.chunk_size, "Trials per RNG stream")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--workers", opt.workers,
                       "Worker threads (0 = hardware concurrency); does not "
                       "affect the result")
      ->capture_default_str();
  add_format(simulate);

  CLI::App* limit =
      app.add_subcommand("limit", "Limiting win probability for M ~ c*k*n");
  limit->add_option("--k", opt.k, "Items per rank")->required()->check(CLI::PositiveNumber);
  limit->add_option("--c", opt.c, "Fraction of items allowed to pass, in [0,1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  add_strategy(limit);
  add_format(limit);

  CLI::App* curve = app.add_subcommand(
      "curve", "Limiting win probability over a grid of c values");
  curve->add_option("--k", opt.k, "Items per rank")->required()->check(CLI::PositiveNumber);
  curve->add_option("--step", opt.step, "Grid step")->capture_default_str();
  add_strategy(curve);
  add_format(curve);

  CLI::App* optimize = app.add_subcommand(
      "optimize", "Best cutoff M at finite n, or best fraction c in the limit");
  optimize->add_option("--k", opt.k, "Items per rank")
      ->required()
      ->check(CLI::PositiveNumber);
  optimize->add_option("--finite", opt.finite_n, "Optimize the exact cutoff at this n")
      ->check(CLI::PositiveNumber);
  optimize->add_flag("--asymptotic", opt.asymptotic, "Optimize the limiting fraction c");
  add_strategy(optimize);
  add_mode(optimize);
  add_format(optimize);

  CLI::App* table = app.add_subcommand(
      "table", "Optimal c and probability per k, rounded to 3 decimals");
  table->add_option("--k", opt.k_list, "Comma-separated k values")
      ->required()
      ->delimiter(',');
  add_strategy(table);
  add_format(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;  // 0 is --help / --version
  }

  opt.strategy = kStrategyNames.at(opt.strategy_name);
  opt.mode = kModeNames.at(opt.mode_name);

  try {
    if (exact->parsed()) return run_exact_or_brute(opt, false, out);
    if (brute->parsed()) return run_exact_or_brute(opt, true, out);
    if (simulate->parsed()) return run_simulate(opt, out);
    if (limit->parsed()) return run_limit(opt, out);
    if (curve->parsed()) return run_curve(opt, out);
    if (optimize->parsed()) return run_optimize(opt, out);
    if (table->parsed()) return run_table(opt, out);
  } catch (const ToleranceNotReached& e) {
    err << "numeric failure: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace secretary::cli
