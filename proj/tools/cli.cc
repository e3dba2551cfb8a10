// Copyright 2026 The Authors.
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

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "dmp/clearing.h"
#include "dmp/demand.h"
#include "dmp/fixtures.h"
#include "dmp/gaussian.h"
#include "dmp/io.h"
#include "dmp/linear_opt.h"
#include "dmp/model.h"
#include "dmp/plc_opt.h"
#include "dmp/properties.h"
#include "dmp/revenue.h"
#include "json.hpp"

namespace dmp::cli {
namespace {

using json = nlohmann::json;

// A failed library call: message to `err`, exit code 1.
class Failure {
 public:
  explicit Failure(absl::Status status) : status_(std::move(status)) {}
  const absl::Status& status() const { return status_; }

 private:
  absl::Status status_;
};

template <typename T>
T Unwrap(absl::StatusOr<T> v) {
  if (!v.ok()) throw Failure(v.status());
  return *std::move(v);
}

void Check(const absl::Status& s) {
  if (!s.ok()) throw Failure(s);
}

template <typename T>
std::vector<T> ParseCsv(const std::string& text, const char* what) {
  std::vector<T> out;
  if (text.empty()) return out;
  for (absl::string_view piece : absl::StrSplit(text, ',')) {
    T v;
    bool ok;
    if constexpr (std::is_integral_v<T>) {
      ok = absl::SimpleAtoi(piece, &v);
    } else {
      ok = absl::SimpleAtod(piece, &v);
    }
    if (!ok) {
      throw CLI::ValidationError(what,
                                 absl::StrCat("bad list entry '", piece, "'"));
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> ParseEdges(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  if (text.empty()) return edges;
  for (absl::string_view piece : absl::StrSplit(text, ',')) {
    std::vector<absl::string_view> ends = absl::StrSplit(piece, '-');
    int u, v;
    if (ends.size() != 2 || !absl::SimpleAtoi(ends[0], &u) ||
        !absl::SimpleAtoi(ends[1], &v)) {
      throw CLI::ValidationError("--edges",
                                 absl::StrCat("bad edge '", piece, "'"));
    }
    edges.emplace_back(u, v);
  }
  return edges;
}

json PriceJson(const std::vector<Money>& prices) { return json(prices); }

// Either a price vector or a shard set, checked against the instance.
struct PricingInput {
  std::optional<PriceVector> prices;
  std::optional<ShardSet> shards;
};

PricingInput LoadPricing(const Instance& instance,
                         const std::string& prices_path,
                         const std::string& shards_path) {
  if (prices_path.empty() && shards_path.empty()) {
    throw CLI::RequiredError("--prices or --shards");
  }
  PricingInput in;
  if (!prices_path.empty()) {
    in.prices = Unwrap(LoadPriceVector(prices_path));
    if (in.prices->size() != instance.num_datasets()) {
      Check(absl::InvalidArgumentError("price count differs from m"));
    }
  } else {
    in.shards = Unwrap(LoadShardSet(shards_path));
    if (in.shards->size() != instance.num_datasets()) {
      Check(absl::InvalidArgumentError("curve count differs from m"));
    }
  }
  return in;
}

struct Options {
  std::string instance;
  std::string out;
  std::string prices;
  std::string shards;
  bool allocate = false;

  std::string method;
  std::string order;
  uint64_t seed = 0;
  int steps = ContinuousGreedyOptions{}.steps;
  int samples = ContinuousGreedyOptions{}.samples;
  int roundings = ContinuousGreedyOptions{}.roundings;
  int buyer = 0;

  std::string family;
  int n = 4;
  int m = 4;
  int k = 3;
  double eps = kDefaultEpsilon;
  double value_scale = 1.0;
  double budget_scale = 1.0;
  int vertices = 3;
  std::string edges = "0-1,1-2,0-2";

  std::string property;
  int64_t check_samples = 10000;

  double tau0 = 1.0;
  double mu = 0.0;
  std::string tau;
  std::string counts;
  int64_t trials = 100000;
};

void SolvePlcCommand(const Options& o, std::ostream& out) {
  const Instance inst = Unwrap(LoadInstance(o.instance));
  const PlcSolution sol = Unwrap(SolvePlc(inst));
  std::optional<Allocation> alloc;
  if (o.allocate) alloc = Unwrap(ExtractAllocation(inst, sol.shards));
  const std::string text = SerializePlcSolution(sol, alloc);
  if (!o.out.empty()) Check(WriteFile(o.out, text + "\n"));
  out << text << "\n";
}

void SolveLinearCommand(const Options& o, std::ostream& out) {
  const Instance inst = Unwrap(LoadInstance(o.instance));
  LinearSolution sol;
  if (o.method == "exact") {
    sol = Unwrap(ExactBruteforce(inst));
  } else if (o.method == "greedy") {
    std::vector<int> order = ParseCsv<int>(o.order, "--order");
    if (order.empty()) {
      order.resize(inst.num_datasets());
      std::iota(order.begin(), order.end(), 0);
    }
    sol = Unwrap(Greedy(inst, order));
  } else if (o.method == "rgreedy") {
    sol = RandomizedGreedy(inst, o.seed);
  } else {
    ContinuousGreedyOptions cg;
    cg.steps = o.steps;
    cg.samples = o.samples;
    cg.roundings = o.roundings;
    sol = Unwrap(ContinuousGreedy(inst, cg, o.seed));
  }
  out << SerializeLinearSolution(sol) << "\n";
}

void DemandCommand(const Options& o, std::ostream& out) {
  const Instance inst = Unwrap(LoadInstance(o.instance));
  const PricingInput in = LoadPricing(inst, o.prices, o.shards);
  const ShardSet shards =
      in.shards ? *in.shards : ShardSetFromPrices(*in.prices);
  const Bundle bundle = Unwrap(OptimalDemand(inst, o.buyer, shards));
  json j;
  j["buyer"] = o.buyer;
  j["fractions"] = bundle.fractions;
  j["payment"] = bundle.payment;
  out << j.dump(2) << "\n";
}

void ClearCommand(const Options& o, std::ostream& out) {
  const Instance inst = Unwrap(LoadInstance(o.instance));
  const PricingInput in = LoadPricing(inst, o.prices, o.shards);
  const ItemMarket market = in.shards ? ShardsToItems(inst, *in.shards)
                                      : DirectMarket(inst, *in.prices);
  const ClearingResult result = Clearabilize(market);
  json j;
  j["prices_before"] = PriceJson(market.prices);
  j["prices_after"] = PriceJson(result.prices);
  j["revenue_before"] = ItemRevenueByBuyer(market, market.prices);
  j["revenue_after"] = ItemRevenueByBuyer(market, result.prices);
  j["iterations"] = result.iterations;
  j["iteration_bound"] = ClearingIterationBound(market);
  j["clearable"] = IsClearable(market, result.prices);
  if (!market.origin.empty()) {
    json origin = json::array();
    for (const auto& [dataset, shard] : market.origin) {
      origin.push_back({{"dataset", dataset}, {"shard", shard}});
    }
    j["items"] = origin;
  }
  out << j.dump(2) << "\n";
}

void GenCommand(const Options& o, std::ostream& out) {
  Instance inst;
  json extra = json::object();
  if (o.family == "nonsub") {
    inst = Unwrap(GenNonsub(o.eps));
  } else if (o.family == "cese") {
    inst = Unwrap(GenCeSe(o.n));
  } else if (o.family == "greedysub") {
    inst = GenGreedySuboptimal();
  } else if (o.family == "greedytight") {
    inst = Unwrap(GenGreedyTight(o.n, o.eps));
  } else if (o.family == "lingap") {
    inst = Unwrap(GenLingap(o.n, o.eps));
  } else if (o.family == "sepgap") {
    inst = Unwrap(GenSepgap(o.m, o.k));
  } else if (o.family == "vc") {
    VertexCoverInstance vc =
        Unwrap(GenVertexCover(o.vertices, ParseEdges(o.edges), o.eps));
    extra["normal_buyers"] = vc.normal_buyers;
    extra["edge_value"] = vc.edge_value;
    inst = std::move(vc.instance);
  } else {
    inst = Unwrap(GenRandom(o.n, o.m, o.seed, o.value_scale, o.budget_scale));
  }
  Check(SaveInstance(inst, o.out));
  json j = extra;
  j["family"] = o.family;
  j["out"] = o.out;
  j["num_buyers"] = inst.num_buyers();
  j["num_datasets"] = inst.num_datasets();
  out << j.dump(2) << "\n";
}

void CheckCommand(const Options& o, std::ostream& out) {
  if (o.property == "appendixB") {
    json j;
    j["property"] = o.property;
    j["extension_infeasible"] = AppendixBCheck();
    j["relaxed_feasible"] = AppendixBRelaxedFeasible();
    out << j.dump(2) << "\n";
    return;
  }
  const Instance inst = o.instance.empty()
                            ? Unwrap(GenRandom(o.n, o.m, o.seed))
                            : Unwrap(LoadInstance(o.instance));
  const PropertyReport report =
      o.property == "ksubmodular"
          ? SampleNSubmodularity(inst, o.check_samples, o.seed)
          : SampleExtensionSubmodularity(inst, o.check_samples, o.seed);
  out << SerializePropertyReport(o.property, report) << "\n";
}

void GaussianCommand(const Options& o, std::ostream& out) {
  GaussianTask task;
  task.prior_precision = o.tau0;
  task.prior_mean = o.mu;
  task.signal_precisions = ParseCsv<double>(o.tau, "--tau");
  task.record_counts = ParseCsv<int>(o.counts, "--counts");
  const GaussianReport report =
      Unwrap(SimulatePosteriorMse(task, o.trials, o.seed));
  out << SerializeGaussianReport(task, report) << "\n";
}

void AddPricingFlags(CLI::App* cmd, Options& o) {
  auto* prices = cmd->add_option("--prices", o.prices, "price vector JSON");
  auto* shards = cmd->add_option("--shards", o.shards, "shard set JSON");
  prices->excludes(shards);
  shards->excludes(prices);
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Revenue-maximizing pricing for data markets", "dmp"};
  app.require_subcommand(1);
  Options o;

  auto* plc = app.add_subcommand("solve-plc", "optimal separable PLC pricing");
  plc->add_option("--instance", o.instance)->required();
  plc->add_option("--out", o.out, "also write the result here");
  plc->add_flag("--allocate", o.allocate, "include every buyer's bundle");

  auto* lin = app.add_subcommand("solve-linear", "linear pricing");
  lin->add_option("--instance", o.instance)->required();
  lin->add_option("--method", o.method)
      ->required()
      ->check(CLI::IsMember({"exact", "greedy", "rgreedy", "cgreedy"}));
  lin->add_option("--order", o.order, "comma-separated dataset order");
  lin->add_option("--seed", o.seed);
  lin->add_option("--steps", o.steps)->check(CLI::PositiveNumber);
  lin->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  lin->add_option("--roundings", o.roundings)->check(CLI::PositiveNumber);

  auto* dem = app.add_subcommand("demand", "one buyer's optimal bundle");
  dem->add_option("--instance", o.instance)->required();
  dem->add_option("--buyer", o.buyer)->required();
  AddPricingFlags(dem, o);

  auto* clr = app.add_subcommand("clear", "make prices clearable");
  clr->add_option("--instance", o.instance)->required();
  AddPricingFlags(clr, o);

  auto* gen = app.add_subcommand("gen", "write a fixture instance");
  gen->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"nonsub", "cese", "greedysub", "greedytight",
                             "lingap", "sepgap", "vc", "random"}));
  gen->add_option("--out", o.out)->required();
  gen->add_option("--n", o.n, "buyers (cese, greedytight, lingap, random)");
  gen->add_option("--m", o.m, "datasets (sepgap, random)");
  gen->add_option("--k", o.k, "flexible buyers (sepgap)");
  gen->add_option("--eps", o.eps);
  gen->add_option("--seed", o.seed);
  gen->add_option("--value-scale", o.value_scale);
  gen->add_option("--budget-scale", o.budget_scale);
  gen->add_option("--vertices", o.vertices, "vertex count (vc)");
  gen->add_option("--edges", o.edges, "edge list like 0-1,1-2 (vc)");

  auto* chk = app.add_subcommand("check", "structural property checks");
  chk->add_option("--property", o.property)
      ->required()
      ->check(CLI::IsMember({"ksubmodular", "extension", "appendixB"}));
  chk->add_option("--instance", o.instance,
                  "defaults to a random instance of size --n x --m");
  chk->add_option("--samples", o.check_samples)->check(CLI::PositiveNumber);
  chk->add_option("--seed", o.seed);
  chk->add_option("--n", o.n);
  chk->add_option("--m", o.m);

  auto* gau = app.add_subcommand("validate-gaussian",
                                 "Monte Carlo check of posterior precision");
  gau->add_option("--tau0", o.tau0)->required();
  gau->add_option("--mu", o.mu);
  gau->add_option("--tau", o.tau, "comma-separated")->required();
  gau->add_option("--counts", o.counts, "comma-separated")->required();
  gau->add_option("--trials", o.trials)->required();
  gau->add_option("--seed", o.seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (plc->parsed()) SolvePlcCommand(o, out);
    if (lin->parsed()) SolveLinearCommand(o, out);
    if (dem->parsed()) DemandCommand(o, out);
    if (clr->parsed()) ClearCommand(o, out);
    if (gen->parsed()) GenCommand(o, out);
    if (chk->parsed()) CheckCommand(o, out);
    if (gau->parsed()) GaussianCommand(o, out);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Failure& f) {
    err << "error: " << f.status().message() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace dmp::cli
