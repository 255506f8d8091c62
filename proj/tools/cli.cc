// Copyright 2026 The folimits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "folimits/cache.h"
#include "folimits/enumerate.h"
#include "folimits/errors.h"
#include "folimits/families.h"
#include "folimits/intervals.h"
#include "folimits/limits.h"
#include "folimits/model.h"
#include "folimits/montecarlo.h"
#include "folimits/report.h"

namespace folimits::cli {
namespace {

// Bad flag values or combinations found after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model = "graph";
  std::optional<int> d;
  std::optional<double> c;
  std::optional<int> size;
  std::optional<int> max_size;
  double from = 0.0;
  double to = 0.0;
  int steps = 1;
  std::optional<long> n;
  int trials = 2000;
  std::uint64_t seed = 1;
  std::optional<int> max_cycle_len;
  std::optional<int> fragment_max_size;
  double p = 0.5;
  double eps = 0.02;
  int k_cap = 4096;
  std::string what = "unicycles";
  std::string format = "json";
  std::string out;
  std::string trials_csv;
  std::string cache_dir;
  std::string action;
  unsigned threads = 0;
  bool summary = false;
};

int Uniformity(const Options& o) {
  if (o.model == "graph") {
    if (o.d && *o.d != 2) throw UsageError("--d applies to --model hyper only");
    return 2;
  }
  const int d = o.d.value_or(3);
  if (d < 3) throw UsageError("--d must be at least 3 for hypergraphs");
  return d;
}

Json KindJson(int d) {
  return {{"kind", d == 2 ? "graph" : "hyper"}, {"d", d}};
}

ModelParams RequireModel(const Options& o, int d) {
  if (!o.c) throw UsageError("--c is required");
  return ModelParams::ForUniformity(d, *o.c);
}

ModelParams RequireSubcriticalModel(const Options& o, int d) {
  const ModelParams model = RequireModel(o, d);
  if (!(model.c() > 0.0) || !model.subcritical()) {
    throw UsageError("--c must lie in (0, " + FormatSig(model.critical_c()) +
                     ") for this command");
  }
  return model;
}

EnumerationBudget BudgetFor(const Options& o, int d) {
  EnumerationBudget budget = EnumerationBudget::ForUniformity(d);
  if (o.max_size) budget.max_size = *o.max_size;
  return budget;
}

std::filesystem::path CacheDirectory(const Options& o) {
  return o.cache_dir.empty() ? DefaultCacheDirectory()
                             : std::filesystem::path(o.cache_dir);
}

int DefaultVerifySize(int d) { return d == 2 ? 10 : d == 3 ? 8 : 6; }

Json RunC0(const Options& o) {
  const int d = Uniformity(o);
  Json j = {{"command", "c0"}, {"model", KindJson(d)}};
  j.update(ToJson(SolveC0(d)));
  return j;
}

Json RunEnumerate(const Options& o) {
  const int d = Uniformity(o);
  const EnumerationBudget budget = EnumerationBudget::ForUniformity(d);
  const int max_size = o.size.value_or(o.max_size.value_or(d == 2 ? 8 : 5));
  if (max_size < 0) throw UsageError("--max-size must be nonnegative");
  Json j = {{"command", "enumerate"}, {"what", o.what}, {"model", KindJson(d)}};
  j["max_size"] = max_size;
  j["size"] = o.size ? Json(*o.size) : Json();
  Json shapes = Json::array();
  std::map<int, long> counts;
  std::string source = "computed";

  if (o.what == "trees") {
    if (d == 2) {
      if (max_size < 1) throw UsageError("rooted trees need --max-size >= 1");
      for (const auto& level : EnumerateRootedTrees(max_size, budget)) {
        for (const auto& tree : level) {
          if (o.size && tree.size != *o.size) continue;
          ++counts[tree.size];
          if (!o.summary) {
            shapes.push_back({{"code", tree.code},
                              {"size", tree.size},
                              {"aut", ToString(tree.aut)}});
          }
        }
      }
    } else {
      for (const auto& level : EnumerateHyperTrees(d, max_size, budget)) {
        for (const auto& tree : level) {
          if (o.size && tree.edge_count != *o.size) continue;
          ++counts[tree.edge_count];
          if (!o.summary) {
            shapes.push_back({{"code", tree.code},
                              {"size", tree.edge_count},
                              {"aut", ToString(tree.aut)}});
          }
        }
      }
    }
  } else {
    const ShapeCache cache(CacheDirectory(o));
    if (o.what == "unicycles" && o.size &&
        *o.size < (d == 2 ? 3 : 2)) {
      throw UsageError("--size is below the minimum cycle length");
    }
    const auto lookup = cache.Unicycles(d, max_size, budget);
    source = ToString(lookup.source);
    if (o.what == "unicycles") {
      for (const auto& shape : *lookup.shapes) {
        if (o.size && shape.size != *o.size) continue;
        ++counts[shape.size];
        if (!o.summary) shapes.push_back(ShapeJson(shape));
      }
    } else {
      const FragmentTable table(d, max_size, lookup.shapes);
      for (std::size_t i = 0; i < table.size(); ++i) {
        const int size = table.entries()[i].size;
        if (o.size && size != *o.size) continue;
        ++counts[size];
        if (!o.summary) shapes.push_back(ShapeJson(table.Shape(i)));
      }
    }
  }
  long total = 0;
  Json by_size = Json::array();
  for (const auto& [size, count] : counts) {
    by_size.push_back({{"size", size}, {"count", count}});
    total += count;
  }
  j["source"] = source;
  j["count"] = total;
  j["counts_by_size"] = by_size;
  j["shapes"] = shapes;
  return j;
}

Json RunIntervals(const Options& o) {
  const int d = Uniformity(o);
  const ModelParams model = RequireSubcriticalModel(o, d);
  Json j = {{"command", "intervals"}};
  j.update(ToJson(MakeGapReport(model, BudgetFor(o, d))));
  return j;
}

std::vector<SweepRow> SweepRows(const Options& o, int d) {
  return SweepIntervals(d, o.from, o.to, o.steps, BudgetFor(o, d), o.threads);
}

Json RunSweep(const Options& o) {
  const int d = Uniformity(o);
  Json rows = Json::array();
  for (const auto& row : SweepRows(o, d)) rows.push_back(ToJson(row));
  return {{"command", "sweep"}, {"model", KindJson(d)}, {"rows", rows}};
}

Json RunSimulate(const Options& o) {
  const int d = Uniformity(o);
  SampleConfig config;
  config.model = RequireModel(o, d);
  config.n = o.n.value_or(d == 2 ? 100000 : 10000);
  config.trials = o.trials;
  config.master_seed = o.seed;
  config.max_cycle_len = o.max_cycle_len.value_or(d == 2 ? 4 : 3);
  config.fragment_max_size = o.fragment_max_size.value_or(d == 2 ? 8 : 6);
  config.threads = o.threads;
  config.keep_trials = !o.trials_csv.empty();
  try {
    config.Validate();
  } catch (const BudgetError& e) {
    throw UsageError(e.what());
  }
  const SimResult result = RunExperiment(config);
  if (!o.trials_csv.empty()) {
    std::ofstream csv(o.trials_csv);
    if (!csv) throw Error("cannot write " + o.trials_csv);
    csv << TrialCsv(result);
  }
  Json j = {{"command", "simulate"}};
  j.update(ToJson(result));
  return j;
}

Json RunApprox(const Options& o) {
  const int d = Uniformity(o);
  const ModelParams model = RequireModel(o, d);
  if (model.x() < 1.0) {
    throw UsageError("approx needs --c >= " + FormatSig(model.critical_c()));
  }
  if (!(o.p > 0.0 && o.p < 1.0)) throw UsageError("--p must lie in (0, 1)");
  if (!(o.eps > 0.0)) throw UsageError("--eps must be positive");
  Json j = {{"command", "approx"}, {"model", ModelJson(model)}};
  j["p"] = Number(o.p);
  j["eps"] = Number(o.eps);
  j.update(ToJson(FoApproximation(o.p, o.eps, model, o.k_cap)));
  return j;
}

Json RunVerify(const Options& o, bool& ok) {
  const int d = Uniformity(o);
  const int max_size = o.max_size.value_or(DefaultVerifySize(d));
  const EnumerationBudget budget = EnumerationBudget::ForUniformity(d);
  Json families = Json::array();
  ok = true;
  for (Family family : FamiliesFor(d)) {
    for (int k = FamilyMinSize(family); k <= max_size; ++k) {
      const FamilyCheck check = CheckFamilySum(family, d, k, budget);
      ok = ok && check.holds;
      families.push_back(ToJson(check));
    }
  }
  Json j = {{"command", "verify"}, {"model", KindJson(d)},
            {"max_size", max_size}, {"families", families}};
  if (d == 2) {
    Json bounds = Json::array();
    for (int k = 4; k <= max_size; ++k) {
      const InverseAutBoundCheck check = CheckInverseAutLowerBound(k, budget);
      ok = ok && check.holds;
      bounds.push_back(ToJson(check));
    }
    j["inverse_aut_bounds"] = bounds;
    j["aut_bound"] = nullptr;
  } else {
    j["inverse_aut_bounds"] = Json::array();
    const AutBoundReport report = VerifyAutBound(d, max_size, budget);
    ok = ok && report.ratio_bound_holds && report.free_vertex_bound_holds &&
         report.excess_holds;
    j["aut_bound"] = ToJson(report);
  }
  j["ok"] = ok;
  return j;
}

Json RunCache(const Options& o) {
  const ShapeCache cache(CacheDirectory(o));
  Json j = {{"command", "cache"}, {"action", o.action}};
  j["directory"] = cache.directory().string();
  if (o.action == "clear") {
    j["removed"] = cache.Clear();
    j["status"] = "cleared";
    return j;
  }
  const int d = Uniformity(o);
  const int max_size = o.max_size.value_or(d == 2 ? 10 : 6);
  const CacheSource source =
      cache.Warm(d, max_size, EnumerationBudget::ForUniformity(d));
  j["model"] = KindJson(d);
  j["max_size"] = max_size;
  j["status"] = source == CacheSource::kCache ? "cached" : "written";
  j["path"] = cache.FilePath(d, max_size).string();
  return j;
}

void AddModelFlags(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "graph or hyper")
      ->check(CLI::IsMember({"graph", "hyper"}));
  sub->add_option("--d", o.d, "hypergraph uniformity (default 3)")
      ->check(CLI::Range(2, 20));
}

void AddOutputFlags(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "write the document to a file");
  sub->add_option("--format", o.format, "json (csv for sweep only)")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Closure of first-order limiting probabilities for sparse "
               "random graphs and hypergraphs"};
  app.require_subcommand(1);
  Options o;

  auto* c0 = app.add_subcommand("c0", "critical constant c0");
  AddModelFlags(c0, o);
  AddOutputFlags(c0, o);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate shapes");
  AddModelFlags(enumerate, o);
  AddOutputFlags(enumerate, o);
  enumerate->add_option("--what", o.what, "trees, unicycles or fragments")
      ->check(CLI::IsMember({"trees", "unicycles", "fragments"}));
  enumerate->add_option("--size", o.size, "only shapes of this size")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--max-size", o.max_size, "largest size")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--cache-dir", o.cache_dir, "cache directory");
  enumerate->add_flag("--summary", o.summary, "counts only");

  auto* intervals = app.add_subcommand("intervals", "closure as intervals");
  AddModelFlags(intervals, o);
  AddOutputFlags(intervals, o);
  intervals->add_option("--c", o.c, "edge density")->required();
  intervals->add_option("--max-size", o.max_size, "enumeration budget")
      ->check(CLI::NonNegativeNumber);

  auto* sweep = app.add_subcommand("sweep", "interval counts over a c range");
  AddModelFlags(sweep, o);
  AddOutputFlags(sweep, o);
  sweep->add_option("--from", o.from, "first c")->required();
  sweep->add_option("--to", o.to, "last c")->required();
  sweep->add_option("--steps", o.steps, "number of rows")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--max-size", o.max_size, "enumeration budget")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--threads", o.threads, "worker threads (0 = all)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo experiment");
  AddModelFlags(simulate, o);
  AddOutputFlags(simulate, o);
  simulate->add_option("--c", o.c, "edge density")->required()
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--n", o.n, "vertices")->check(CLI::PositiveNumber);
  simulate->add_option("--trials", o.trials, "trials")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", o.seed, "master seed");
  simulate->add_option("--max-cycle-len", o.max_cycle_len,
                       "longest cycle counted")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--fragment-max-size", o.fragment_max_size,
                       "largest shape with its own chi-square category")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--trials-csv", o.trials_csv, "per-trial CSV dump");
  simulate->add_option("--threads", o.threads, "worker threads (0 = all)");

  auto* approx = app.add_subcommand("approx", "cycle-count approximation");
  AddModelFlags(approx, o);
  AddOutputFlags(approx, o);
  approx->add_option("--c", o.c, "edge density")->required();
  approx->add_option("--p", o.p, "target probability")->required();
  approx->add_option("--eps", o.eps, "tolerance")->required();
  approx->add_option("--k-cap", o.k_cap, "longest cycle length tried")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "exact identities and bounds");
  AddModelFlags(verify, o);
  AddOutputFlags(verify, o);
  verify->add_option("--max-size", o.max_size, "largest size checked")
      ->check(CLI::NonNegativeNumber);

  auto* cache = app.add_subcommand("cache", "manage the enumeration cache");
  AddModelFlags(cache, o);
  AddOutputFlags(cache, o);
  cache->add_option("action", o.action, "warm or clear")
      ->required()
      ->check(CLI::IsMember({"warm", "clear"}));
  cache->add_option("--max-size", o.max_size, "largest size")
      ->check(CLI::NonNegativeNumber);
  cache->add_option("--cache-dir", o.cache_dir, "cache directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string text;
  int code = kExitOk;
  try {
    if (o.format == "csv" && !sweep->parsed()) {
      throw UsageError("--format csv is only available for sweep");
    }
    Json doc;
    if (c0->parsed()) doc = RunC0(o);
    else if (enumerate->parsed()) doc = RunEnumerate(o);
    else if (intervals->parsed()) doc = RunIntervals(o);
    else if (simulate->parsed()) doc = RunSimulate(o);
    else if (approx->parsed()) doc = RunApprox(o);
    else if (cache->parsed()) doc = RunCache(o);
    else if (verify->parsed()) {
      bool ok = false;
      doc = RunVerify(o, ok);
      if (!ok) code = kExitFailure;
    }
    if (sweep->parsed()) {
      const int d = Uniformity(o);
      text = o.format == "csv" ? SweepCsv(SweepRows(o, d))
                               : RunSweep(o).dump(2) + "\n";
    } else {
      text = doc.dump(2) + "\n";
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SupercriticalError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!file || !(file << text)) {
      err << "error: cannot write " << o.out << '\n';
      return kExitFailure;
    }
  }
  return code;
}

}  // namespace folimits::cli
