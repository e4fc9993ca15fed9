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

#include "paving/cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "paving/error.h"
#include "paving/matroid.h"
#include "paving/matroid_io.h"
#include "paving/numeric.h"
#include "paving/paving.h"
#include "paving/steiner.h"
#include "paving/walk.h"

namespace paving {
namespace {

constexpr std::string_view kChecksumPrefix = "# checksum ";

struct RunConfig {
  std::string input_path;
  uint64_t seed = 1;
  uint64_t steps = 0;
  uint64_t samples = 0;
  uint64_t count = 1;
  double epsilon = 0.05;
  std::vector<int> pair = {0, 1};
  std::size_t expansion_limit = kDefaultExpansionLimit;
  std::size_t graph_budget = kDefaultGraphBudget;
  uint64_t minor_limit = 59049;  // 3^10
  std::string steiner_cache;
  bool no_cache = false;
  bool key_value_lines = false;
};

// Ordered key=value fields, printed on one line or one per line.
class Report {
 public:
  void Add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
  }
  void Add(std::string key, uint64_t value) { Add(std::move(key), std::to_string(value)); }
  void Add(std::string key, int value) { Add(std::move(key), std::to_string(value)); }
  void Add(std::string key, bool value) { Add(std::move(key), std::string(value ? "true" : "false")); }

  void Print(std::ostream& out, bool lines) const {
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out << fields_[i].first << '=' << fields_[i].second;
      out << (lines || i + 1 == fields_.size() ? '\n' : ' ');
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::filesystem::path DefaultCachePath() {
  if (const char* dir = std::getenv("PAVING_CACHE_DIR"); dir && *dir) {
    return std::filesystem::path(dir) / "steiner_5_8_24.txt";
  }
  std::filesystem::path base;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    base = xdg;
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    base = std::filesystem::path(home) / ".cache";
  } else {
    return {};
  }
  return base / "paving" / "steiner_5_8_24.txt";
}

SetList SteinerSetList(const SteinerSystem& system) {
  return SetList{kSteinerPoints, kSteinerBlockSize, SetListKind::kBlocks, system.blocks};
}

ExplicitMatroid LoadMatroid(const std::string& path) {
  const SetList list = ReadSetList(path);
  switch (list.kind) {
    case SetListKind::kBases:
      return ExplicitMatroid(list.ground_size, list.set_size, list.sets);
    case SetListKind::kCircuits:
      return BasesFromCircuits(CircuitFamily(list.ground_size, list.set_size, list.sets));
    case SetListKind::kBlocks:
      break;
  }
  throw MatroidError(ErrorCode::kInvalidArgument,
                     path + " holds blocks, not bases or circuits");
}

CircuitFamily LoadCircuits(const std::string& path) {
  const SetList list = ReadSetList(path);
  if (list.kind != SetListKind::kCircuits) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       path + " must list circuits, found " +
                           std::string(SetListKindName(list.kind)));
  }
  return CircuitFamily(list.ground_size, list.set_size, list.sets);
}

SteinerSystem SteinerFor(const RunConfig& config, std::ostream& err) {
  if (config.no_cache) return BuildSteinerSystem();
  const std::filesystem::path path =
      config.steiner_cache.empty() ? DefaultCachePath() : std::filesystem::path(config.steiner_cache);
  return LoadSteinerSystem(path, err);
}

void CheckPair(const RunConfig& config) {
  for (int x : config.pair) {
    if (x < 0 || x >= kSteinerPoints) {
      throw MatroidError(ErrorCode::kOutOfRange, "--pair points must lie in 0..23");
    }
  }
  if (config.pair[0] == config.pair[1]) {
    throw MatroidError(ErrorCode::kInvalidArgument, "--pair points must differ");
  }
}

int CmdVerifyCounterexample(const RunConfig& config, std::ostream& out, std::ostream& err) {
  CheckPair(config);
  const SteinerSystem system = SteinerFor(config, err);
  const CounterexampleReport report = VerifyCounterexample(system, config.pair[0], config.pair[1]);
  Report fields;
  fields.Add("e", report.e);
  fields.Add("f", report.f);
  fields.Add("blocks_e", report.blocks.with_e);
  fields.Add("blocks_ef", report.blocks.with_both);
  fields.Add("blocks_e_not_f", report.blocks.with_e_not_f);
  fields.Add("circuits_e_only", report.circuits.with_e_only);
  fields.Add("circuits_f_only", report.circuits.with_f_only);
  fields.Add("circuits_neither", report.circuits.with_neither);
  fields.Add("circuits", report.circuits.total());
  fields.Add("paving", report.paving);
  fields.Add("sparse", report.sparse);
  fields.Add("n_ef", report.n_ef);
  fields.Add("n_e_not_f", report.n_e_not_f);
  fields.Add("n_not_e_f", report.n_not_e_f);
  fields.Add("n_neither", report.n_neither);
  fields.Add("bases", report.bases());
  fields.Add("ratio", FormatRational(report.ratio));
  fields.Add("correlation", std::string(report.positively_correlated() ? "positive" : "negative"));
  fields.Print(out, config.key_value_lines);
  const std::vector<std::string> mismatches = CounterexampleMismatches(report);
  if (!mismatches.empty()) {
    err << "ERROR: mismatch: " << mismatches.front() << '\n';
    return 1;
  }
  return 0;
}

int CmdHam(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const SimpleGraph graph = ReadGraph(config.input_path);
  const HamiltonianIdentity identity = HamiltonianCountIdentity(graph);
  if (static_cast<int>(graph.edges.size()) == graph.vertex_count) {
    err << "WARNING: m = r = " << graph.vertex_count
        << "; the only candidate circuit is the whole edge set and the matroid is degenerate\n";
  }
  Report fields;
  fields.Add("cycles", identity.cycles);
  fields.Add("bases", identity.bases);
  fields.Add("total", identity.total_subsets);
  fields.Add("identity", std::string(identity.holds ? "ok" : "mismatch"));
  fields.Print(out, config.key_value_lines);
  if (!identity.holds) {
    err << "ERROR: identity: cycles=" << identity.cycles
        << " differs from total-bases=" << identity.complement << '\n';
    return 1;
  }
  return 0;
}

std::string FormatChain(const CountEstimate& estimate) {
  std::string out;
  for (const StageRecord& record : estimate.chain) {
    if (!out.empty()) out += ',';
    out += fmt::format("{}:{}:{}", record.element,
                       record.branch == Branch::kContract ? "contract" : "delete",
                       FormatRational(record.ratio));
  }
  return out.empty() ? "-" : out;
}

int CmdCount(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
    throw MatroidError(ErrorCode::kInvalidArgument, "--epsilon must lie in (0, 1)");
  }
  const CircuitFamily family = LoadCircuits(config.input_path);
  const CountEstimate estimate =
      ApproxCount(family, config.epsilon, config.seed, CountOptions{config.samples, config.steps});
  const double value = ToDouble(estimate.estimate);
  Report fields;
  fields.Add("estimate", fmt::format("{:.6f}", value));
  fields.Add("epsilon", fmt::format("{}", config.epsilon));
  fields.Add("seed", config.seed);
  fields.Add("samples_per_stage", estimate.samples_per_stage);
  fields.Add("stages", static_cast<uint64_t>(estimate.chain.size()));
  fields.Add("base_count", estimate.base_count);
  fields.Add("chain", FormatChain(estimate));
  if (Binomial(family.ground_size(), family.rank()) <= config.graph_budget) {
    const uint64_t exact = NonCircuitSubsets(family).size();
    fields.Add("exact", exact);
    fields.Add("rel_error", fmt::format("{:.6f}", std::abs(value - exact) / exact));
  }
  fields.Print(out, config.key_value_lines);
  return 0;
}

int CmdExpansion(const RunConfig& config, std::ostream& out, std::ostream&) {
  const ExplicitMatroid matroid = LoadMatroid(config.input_path);
  const ExchangeGraph graph = BuildExchangeGraph(matroid, config.graph_budget);
  const Rational alpha = EdgeExpansion(graph, config.expansion_limit);
  Report fields;
  fields.Add("bases", static_cast<uint64_t>(graph.size()));
  fields.Add("edges", static_cast<uint64_t>(graph.edge_count()));
  fields.Add("connected", IsConnected(graph));
  fields.Add("alpha", FormatRational(alpha));
  fields.Print(out, config.key_value_lines);
  return 0;
}

int CmdBalance(const RunConfig& config, std::ostream& out, std::ostream&) {
  const ExplicitMatroid matroid = LoadMatroid(config.input_path);
  const BalanceResult result = IsBalanced(matroid, config.minor_limit);
  Report fields;
  fields.Add("balanced", result.balanced);
  fields.Add("minors_checked", result.minors_checked);
  if (result.violation) {
    const BalanceViolation& v = *result.violation;
    fields.Add("deleted", v.minor.deleted.ToString());
    fields.Add("contracted", v.minor.contracted.ToString());
    fields.Add("e", v.e);
    fields.Add("f", v.f);
    fields.Add("n_ef", v.report.n_ef);
    fields.Add("n_e_not_f", v.report.n_e_not_f);
    fields.Add("n_not_e_f", v.report.n_not_e_f);
    fields.Add("n_neither", v.report.n_neither);
    fields.Add("ratio", v.report.ratio ? FormatRational(*v.report.ratio) : std::string("-"));
  }
  fields.Print(out, config.key_value_lines);
  return 0;
}

int CmdSample(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.count == 0) throw MatroidError(ErrorCode::kInvalidArgument, "--count must be positive");
  const ExplicitMatroid matroid = LoadMatroid(config.input_path);
  for (uint64_t i = 0; i < config.count; ++i) {
    const SubsetMask basis = SampleBasis(matroid, config.steps, DeriveSeed(config.seed, i));
    out << "basis=" << basis.ToString() << '\n';
  }
  return 0;
}

int CmdSteinerExport(const RunConfig& config, std::ostream& out, std::ostream&) {
  const SteinerSystem system = BuildSteinerSystem();
  std::ofstream file(config.input_path, std::ios::binary | std::ios::trunc);
  if (!file) throw MatroidError(ErrorCode::kIo, "cannot write " + config.input_path);
  file << FormatSteinerFile(system);
  if (!file) throw MatroidError(ErrorCode::kIo, "write failed for " + config.input_path);
  Report fields;
  fields.Add("blocks", static_cast<uint64_t>(system.blocks.size()));
  fields.Add("path", config.input_path);
  fields.Print(out, config.key_value_lines);
  return 0;
}

int CmdCounterexampleExport(const RunConfig& config, std::ostream& out, std::ostream& err) {
  CheckPair(config);
  const SteinerSystem system = SteinerFor(config, err);
  const Counterexample built = BuildCounterexample(system, config.pair[0], config.pair[1]);
  const CircuitFamily& family = built.family;
  WriteSetList(config.input_path,
               SetList{family.ground_size(), family.rank(), SetListKind::kCircuits,
                       std::vector<SubsetMask>(family.circuits().begin(), family.circuits().end())},
               {fmt::format("S(5,8,24) counterexample, e={} f={}", config.pair[0], config.pair[1])});
  Report fields;
  fields.Add("circuits", static_cast<uint64_t>(family.size()));
  fields.Add("path", config.input_path);
  fields.Print(out, config.key_value_lines);
  return 0;
}

}  // namespace

uint64_t SteinerChecksum(const SteinerSystem& system) {
  const std::string body = FormatSetList(SteinerSetList(system));
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : body) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string FormatSteinerFile(const SteinerSystem& system) {
  return FormatSetList(SteinerSetList(system),
                       {"S(5,8,24) octads", fmt::format("checksum {:016x}", SteinerChecksum(system))});
}

SteinerSystem LoadSteinerSystem(const std::filesystem::path& path, std::ostream& err) {
  auto rebuild = [&]() {
    SteinerSystem system = BuildSteinerSystem();
    if (!path.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(path.parent_path(), ec);
      std::ofstream file(path, std::ios::binary | std::ios::trunc);
      if (file) {
        file << FormatSteinerFile(system);
      } else {
        err << "WARNING: cannot write Steiner cache " << path.string() << '\n';
      }
    }
    return system;
  };
  if (path.empty() || !std::filesystem::exists(path)) return rebuild();

  const std::string text = ReadTextFile(path);
  const std::string shape_failure =
      "steiner cache " + path.string() + " fails invariant " +
      std::string(SteinerDefectName(SteinerDefect::kBlockShape));
  SetList list;
  try {
    list = ParseSetList(text);
  } catch (const MatroidError& e) {
    if (e.code() != ErrorCode::kParse) throw;
    throw MatroidError(ErrorCode::kVerification, shape_failure + " (" + e.what() + ")");
  }
  if (list.kind != SetListKind::kBlocks || list.ground_size != kSteinerPoints ||
      list.set_size != kSteinerBlockSize) {
    throw MatroidError(ErrorCode::kVerification, shape_failure);
  }
  SteinerSystem system{list.sets};
  std::optional<std::string> recorded;
  for (std::size_t pos = text.find(kChecksumPrefix); pos != std::string::npos;
       pos = std::string::npos) {
    const std::size_t end = text.find('\n', pos);
    recorded = text.substr(pos + kChecksumPrefix.size(), end - pos - kChecksumPrefix.size());
  }
  if (recorded && *recorded != fmt::format("{:016x}", SteinerChecksum(system))) {
    err << "WARNING: Steiner cache checksum mismatch; rebuilding " << path.string() << '\n';
    return rebuild();
  }
  if (const SteinerDefect defect = FindSteinerDefect(system); defect != SteinerDefect::kNone) {
    throw MatroidError(ErrorCode::kVerification, "steiner cache " + path.string() +
                                                     " fails invariant " +
                                                     std::string(SteinerDefectName(defect)));
  }
  return system;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Paving matroids: construction, balance checks, and basis sampling"};
  app.name("paving");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--kv", config.key_value_lines, "Print one key=value field per line");

  auto* verify = app.add_subcommand("verify-counterexample",
                                    "Rebuild the S(5,8,24) paving matroid and check its counts");
  verify->add_option("--pair", config.pair, "Distinguished points e f")->expected(2);
  verify->add_option("--steiner-cache", config.steiner_cache, "Steiner system cache file");
  verify->add_flag("--no-cache", config.no_cache, "Always rebuild the Steiner system");

  auto* ham = app.add_subcommand("ham", "Hamiltonian-cycle matroid and its counting identity");
  ham->add_option("graph", config.input_path, "Graph file")->required();

  auto* count = app.add_subcommand("count", "Approximate basis count by random walk");
  count->add_option("matroid", config.input_path, "Circuits file")->required();
  count->add_option("--epsilon", config.epsilon, "Target relative error in (0, 1)");
  count->add_option("--seed", config.seed, "Random seed");
  count->add_option("--steps", config.steps, "Walk steps between samples (0: default)");
  count->add_option("--samples", config.samples, "Samples per stage (0: default)");
  count->add_option("--graph-budget", config.graph_budget,
                    "Largest C(m,r) for which the exact count is also printed");

  auto* expansion = app.add_subcommand("expansion", "Exact edge expansion of the exchange graph");
  expansion->add_option("matroid", config.input_path, "Bases or circuits file")->required();
  expansion->add_option("--expansion-limit", config.expansion_limit,
                        "Largest basis count for the exhaustive cut scan");
  expansion->add_option("--graph-budget", config.graph_budget, "Largest exchange graph to build");

  auto* balance = app.add_subcommand("balance", "Negative correlation over all minors");
  balance->add_option("matroid", config.input_path, "Bases or circuits file")->required();
  balance->add_option("--minor-limit", config.minor_limit, "Largest number of minors (3^m)");

  auto* sample = app.add_subcommand("sample", "Sample bases with the exchange walk");
  sample->add_option("matroid", config.input_path, "Bases or circuits file")->required();
  sample->add_option("--steps", config.steps, "Walk length per sample")->required();
  sample->add_option("--seed", config.seed, "Random seed");
  sample->add_option("--count", config.count, "Number of samples");

  auto* steiner = app.add_subcommand("steiner", "S(5,8,24) utilities");
  steiner->require_subcommand(1);
  auto* steiner_export = steiner->add_subcommand("export", "Write the 759 octads");
  steiner_export->add_option("path", config.input_path, "Output file")->required();

  auto* counterexample = app.add_subcommand("counterexample", "Counterexample utilities");
  counterexample->require_subcommand(1);
  auto* counterexample_export =
      counterexample->add_subcommand("export", "Write the counterexample circuit family");
  counterexample_export->add_option("path", config.input_path, "Output file")->required();
  counterexample_export->add_option("--pair", config.pair, "Distinguished points e f")
      ->expected(2);
  counterexample_export->add_option("--steiner-cache", config.steiner_cache,
                                    "Steiner system cache file");
  counterexample_export->add_flag("--no-cache", config.no_cache,
                                  "Always rebuild the Steiner system");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ERROR: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (verify->parsed()) return CmdVerifyCounterexample(config, out, err);
    if (ham->parsed()) return CmdHam(config, out, err);
    if (count->parsed()) return CmdCount(config, out, err);
    if (expansion->parsed()) return CmdExpansion(config, out, err);
    if (balance->parsed()) return CmdBalance(config, out, err);
    if (sample->parsed()) return CmdSample(config, out, err);
    if (steiner_export->parsed()) return CmdSteinerExport(config, out, err);
    if (counterexample_export->parsed()) return CmdCounterexampleExport(config, out, err);
  } catch (const MatroidError& e) {
    err << "ERROR: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
  err << "ERROR: usage: no command\n";
  return 2;
}

}  // namespace paving
