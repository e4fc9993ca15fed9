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

// End-to-end acceptance checks. Prints one PASS or FAIL line per criterion
// and exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "oracles.h"
#include "paving/cli.h"
#include "paving/matroid.h"
#include "paving/paving.h"
#include "paving/steiner.h"
#include "paving/walk.h"

namespace paving {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few problems of a criterion; passes when none were
// recorded.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string Summary() const {
    std::string out = fmt::format("{} failure(s)", failures_);
    for (const std::string& m : messages_) out += "; " + m;
    return out;
  }

 private:
  int failures_ = 0;
  std::vector<std::string> messages_;
};

bool Report(int number, const std::string& title, const Check& check, const std::string& detail) {
  std::cout << (check.ok() ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ("
            << (check.ok() ? detail : check.Summary() + "; " + detail) << ")" << std::endl;
  return check.ok();
}

struct SuiteMember {
  CircuitFamily family;
  uint64_t seed;
};

// Seeded random sparse paving matroids with 6 <= m <= 9 and 2 <= r <= m-2.
std::vector<SuiteMember> RandomSuite() {
  std::vector<SuiteMember> suite;
  for (uint64_t seed = 0; seed < 240; ++seed) {
    const int m = 6 + static_cast<int>(seed % 4);
    const int r = 2 + static_cast<int>((seed / 4) % (m - 3));
    const int max_circuits = 1 + static_cast<int>((seed * 7) % 10);
    suite.push_back({RandomSparseFamily(m, r, max_circuits, 400, 1000 + seed), 1000 + seed});
  }
  return suite;
}

bool CounterexampleCriterion() {
  const auto start = Clock::now();
  Check check;
  const SteinerSystem system = BuildSteinerSystem();
  const CounterexampleReport report = VerifyCounterexample(system, 0, 1);
  for (const std::string& m : CounterexampleMismatches(report)) check.Expect(false, m);
  check.Expect(FormatRational(report.ratio) == "89015/86436", "ratio not in lowest terms");
  const double seconds = SecondsSince(start);
  check.Expect(seconds < 10, fmt::format("took {:.1f} s", seconds));
  return Report(1, "counterexample counts reproduced exactly", check,
                fmt::format("n_ef={} n_e~f={} n_~ef={} n_~e~f={} ratio={} blocks=({},{},{}) "
                            "circuits=({},{},{}) in {:.2f} s",
                            report.n_ef, report.n_e_not_f, report.n_not_e_f, report.n_neither,
                            FormatRational(report.ratio), report.blocks.with_e,
                            report.blocks.with_both, report.blocks.with_e_not_f,
                            report.circuits.with_e_only, report.circuits.with_f_only,
                            report.circuits.with_neither, seconds));
}

bool SteinerCriterion() {
  const auto start = Clock::now();
  Check check;
  const SteinerSystem system = BuildSteinerSystem();
  check.Expect(system.blocks.size() == 759, fmt::format("{} blocks", system.blocks.size()));
  // Independent of FindSteinerDefect: count the blocks over each 5-set and
  // compare every pair of blocks.
  uint64_t five_sets = 0;
  uint64_t bad_cover = 0;
  ForEachSubsetOfSize(24, 5, [&](SubsetMask five) {
    ++five_sets;
    int n = 0;
    for (SubsetMask block : system.blocks) n += five.IsSubsetOf(block);
    bad_cover += n != 1;
  });
  check.Expect(five_sets == 42504 && bad_cover == 0,
               fmt::format("{} of {} five-sets not covered once", bad_cover, five_sets));
  int widest = 0;
  for (std::size_t i = 0; i < system.blocks.size(); ++i) {
    check.Expect(system.blocks[i].size() == 8, "block of wrong size");
    for (std::size_t j = i + 1; j < system.blocks.size(); ++j) {
      widest = std::max(widest, (system.blocks[i] & system.blocks[j]).size());
    }
  }
  check.Expect(widest <= 4, fmt::format("blocks meet in {} points", widest));
  check.Expect(VerifySteiner(system), "VerifySteiner rejects the system");
  const double seconds = SecondsSince(start);
  check.Expect(seconds < 5, fmt::format("took {:.1f} s", seconds));
  return Report(2, "S(5,8,24) validity", check,
                fmt::format("759 octads, {} five-sets each covered once, max intersection {}, "
                            "in {:.2f} s",
                            five_sets, widest, seconds));
}

bool PropertyCriterion(const std::vector<SuiteMember>& suite) {
  const auto start = Clock::now();
  Check check;
  uint64_t minors = 0, pairs = 0, balanced_scans = 0, balance_minors = 0;
  for (const SuiteMember& member : suite) {
    const CircuitFamily& family = member.family;
    const int m = family.ground_size();
    const int r = family.rank();
    const std::string tag = fmt::format("seed {} (m={} r={})", member.seed, m, r);
    const bool sparse = ValidateSparse(family);
    check.Expect(sparse, tag + " not sparse");
    if (sparse) check.Expect(ValidatePaving(family), tag + " sparse but not paving");

    // Every disjoint (deleted, contracted) pair leaving a valid rank.
    for (int removed = 0; removed <= m; ++removed) {
      ForEachSubsetOfSize(m, removed, [&](SubsetMask gone) {
        for (uint64_t sub = gone.bits();; sub = (sub - 1) & gone.bits()) {
          const MinorSpec spec{SubsetMask(sub), gone - SubsetMask(sub)};
          if (spec.contracted.size() <= r && spec.deleted.size() <= m - r) {
            ++minors;
            check.Expect(ValidateSparse(MinorFamily(family, spec)),
                         tag + " minor " + spec.deleted.ToString() + "/" +
                             spec.contracted.ToString() + " not sparse");
          }
          if (sub == 0) break;
        }
      });
    }

    const ExplicitMatroid matroid = BasesFromCircuits(family);
    for (int e = 0; e < m; ++e) {
      for (int f = 0; f < m; ++f) {
        if (e == f || IsLoop(matroid, f)) continue;
        ++pairs;
        const ClassSizeBounds inequalities = ClassSizeInequalities(matroid, e, f);
        check.Expect(inequalities.sparse_inequality && inequalities.paving_inequality,
                     fmt::format("{} inequality fails for ({}, {})", tag, e, f));
        check.Expect(ExchangeDegreeBounds(matroid, e, f),
                     fmt::format("{} degree bounds fail for ({}, {})", tag, e, f));
        check.Expect(Correlation(matroid, e, f).negatively_correlated,
                     fmt::format("{} ({}, {}) positively correlated", tag, e, f));
      }
    }
    if (m <= 8) {
      ++balanced_scans;
      const BalanceResult result = IsBalanced(matroid, 6561);
      balance_minors += result.minors_checked;
      check.Expect(result.balanced, tag + " not balanced");
      if (result.violation) {
        // Any violation must come from a minor of rank at least four.
        check.Expect(r - result.violation->minor.contracted.size() >= 4,
                     tag + " violation below rank four");
      }
    }
  }
  check.Expect(suite.size() >= 200, "suite too small");
  return Report(3, "sparse paving property suite", check,
                fmt::format("{} matroids, {} minor families, {} ordered pairs, {} exhaustive "
                            "balance scans over {} minors, in {:.1f} s",
                            suite.size(), minors, pairs, balanced_scans, balance_minors,
                            SecondsSince(start)));
}

bool ExpansionCriterion(const std::vector<SuiteMember>& suite) {
  Check check;
  const auto alpha = [](const ExplicitMatroid& m) { return EdgeExpansion(BuildExchangeGraph(m)); };
  check.Expect(alpha(UniformMatroid(1, 2)) == 1, "alpha(U(1,2)) != 1");
  check.Expect(alpha(UniformMatroid(1, 3)) == 2, "alpha(U(1,3)) != 2");
  check.Expect(alpha(UniformMatroid(2, 4)) == 2, "alpha(U(2,4)) != 2");
  int examined = 0;
  Rational smallest = -1;
  for (const SuiteMember& member : suite) {
    const ExplicitMatroid m = BasesFromCircuits(member.family);
    if (m.size() > 24) continue;
    ++examined;
    const Rational a = alpha(m);
    if (smallest < 0 || a < smallest) smallest = a;
    check.Expect(a >= 1, fmt::format("seed {}: alpha = {}", member.seed, FormatRational(a)));
  }
  check.Expect(examined >= 20, fmt::format("only {} suite members with |B| <= 24", examined));
  return Report(4, "edge expansion at least 1", check,
                fmt::format("alpha(U(1,2))=1 alpha(U(1,3))=2 alpha(U(2,4))=2; {} suite members "
                            "with |B| <= 24, smallest alpha {}",
                            examined, smallest < 0 ? "-" : FormatRational(smallest)));
}

bool WalkCriterion(const std::vector<SuiteMember>& suite) {
  Check check;
  std::vector<ExplicitMatroid> instances = {
      UniformMatroid(1, 2), UniformMatroid(2, 4), UniformMatroid(3, 6),
      BasesFromCircuits(FromHamiltonianCycles(oracle::CompleteGraph(4)))};
  for (const SuiteMember& member : suite) {
    ExplicitMatroid m = BasesFromCircuits(member.family);
    if (m.size() <= 100 && instances.size() < 60) instances.push_back(std::move(m));
  }
  // Rounding in the |B|-term sum can move TV by a few ulps once it reaches
  // the 1e-16 level, so each step may rise by at most |B| * DBL_EPSILON.
  double worst_rise = 0;
  double tv_at_worst = 0;
  for (const ExplicitMatroid& m : instances) {
    const ExchangeGraph graph = BuildExchangeGraph(m);
    const std::vector<double> uniform(m.size(), 1.0 / static_cast<double>(m.size()));
    check.Expect(ApplyTransition(graph, uniform) == uniform, "uniform vector moved");
    const double slack = static_cast<double>(m.size()) * std::numeric_limits<double>::epsilon();
    std::vector<double> p(m.size(), 0.0);
    p[0] = 1.0;
    double previous = TvDistance(p, uniform);
    for (int t = 1; t <= 500; ++t) {
      p = ApplyTransition(graph, p);
      const double tv = TvDistance(p, uniform);
      check.Expect(tv <= previous + slack,
                   fmt::format("TV rose from {:.3g} to {:.3g} at t={}", previous, tv, t));
      if (tv - previous > worst_rise) {
        worst_rise = tv - previous;
        tv_at_worst = tv;
      }
      previous = tv;
    }
  }
  const ExplicitMatroid u12 = UniformMatroid(1, 2);
  const std::vector<double> one_step = ExactWalkDistribution(u12, LexLeastBasis(u12), 1);
  check.Expect(one_step == std::vector<double>{0.5, 0.5}, "U(1,2) not uniform at t=1");
  return Report(5, "walk stationarity and TV decay", check,
                fmt::format("{} instances with |B| <= 100: uniform fixed exactly, TV "
                            "non-increasing over t=0..500 (largest rounding rise {:.2g} at TV "
                            "{:.2g}); U(1,2) uniform at t=1",
                            instances.size(), worst_rise, tv_at_worst));
}

bool CountingCriterion() {
  const auto start = Clock::now();
  Check check;
  struct Instance {
    std::string name;
    CircuitFamily family;
    double exact;
  };
  const std::vector<Instance> instances = {
      {"U(2,4)", CircuitFamily(4, 2, {}), 6},
      {"K4", FromHamiltonianCycles(oracle::CompleteGraph(4)), 12},
      {"K5", FromHamiltonianCycles(oracle::CompleteGraph(5)), 240},
  };
  std::string detail;
  for (const Instance& instance : instances) {
    int within = 0;
    double worst = 0;
    for (uint64_t seed = 1; seed <= 100; ++seed) {
      const double value = ToDouble(ApproxCount(instance.family, 0.05, seed).estimate);
      const double error = std::abs(value - instance.exact) / instance.exact;
      worst = std::max(worst, error);
      within += error <= 0.05;
    }
    check.Expect(within >= 95, fmt::format("{}: {}/100 within 5%", instance.name, within));
    detail += fmt::format("{} {}/100 (worst {:.2f}%), ", instance.name, within, 100 * worst);
  }
  const double seconds = SecondsSince(start);
  check.Expect(seconds < 120, fmt::format("took {:.0f} s", seconds));
  return Report(6, "approximate counting within 5%", check,
                detail + fmt::format("epsilon=0.05, in {:.1f} s", seconds));
}

bool IdentityCriterion() {
  Check check;
  struct Graph {
    std::string name;
    SimpleGraph graph;
  };
  const std::vector<Graph> graphs = {{"K4", oracle::CompleteGraph(4)},
                                     {"K5", oracle::CompleteGraph(5)},
                                     {"Petersen", oracle::PetersenGraph()}};
  std::string detail;
  for (const Graph& g : graphs) {
    const HamiltonianIdentity identity = HamiltonianCountIdentity(g.graph);
    const uint64_t by_permutation = oracle::HamiltonianCycles(g.graph).size();
    check.Expect(identity.holds, g.name + ": identity fails");
    check.Expect(identity.cycles == by_permutation,
                 fmt::format("{}: {} cycles, permutation search finds {}", g.name,
                             identity.cycles, by_permutation));
    detail += fmt::format("{} cycles={} bases={}; ", g.name, identity.cycles, identity.bases);
  }
  const CircuitFamily petersen = FromHamiltonianCycles(oracle::PetersenGraph());
  check.Expect(petersen.size() == 0, "Petersen graph has circuits");
  check.Expect(BasesFromCircuits(petersen).size() == Binomial(15, 10),
               "Petersen bases differ from C(15,10)");
  return Report(7, "Hamiltonian counting identity", check, detail + "Petersen bases = C(15,10)");
}

bool DeterminismCriterion() {
  Check check;
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "paving_acceptance_k4.txt";
  {
    std::ofstream out(path);
    const CircuitFamily family = FromHamiltonianCycles(oracle::CompleteGraph(4));
    out << "6 4\ncircuits\n";
    for (SubsetMask c : family.circuits()) out << c.ToIndexList() << '\n';
  }
  const auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = RunCli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  };
  const std::vector<std::vector<std::string>> commands = {
      {"count", path.string(), "--epsilon", "0.05", "--seed", "42"},
      {"sample", path.string(), "--steps", "500", "--seed", "42", "--count", "50"},
  };
  for (const auto& args : commands) {
    const std::string first = run(args);
    check.Expect(first.rfind("0\n", 0) == 0, args[0] + " failed: " + first);
    check.Expect(first == run(args), args[0] + " output differs between runs");
  }
  std::filesystem::remove(path);
  return Report(8, "byte-identical count and sample output", check,
                "count and sample each run twice with seed 42");
}

}  // namespace
}  // namespace paving

// With arguments, runs only the listed criteria, e.g. `acceptance 1 5`.
int main(int argc, char** argv) {
  using namespace paving;
  const std::vector<SuiteMember> suite = RandomSuite();
  const std::vector<std::function<bool()>> criteria = {
      CounterexampleCriterion,
      SteinerCriterion,
      [&] { return PropertyCriterion(suite); },
      [&] { return ExpansionCriterion(suite); },
      [&] { return WalkCriterion(suite); },
      CountingCriterion,
      IdentityCriterion,
      DeterminismCriterion,
  };
  std::vector<bool> selected(criteria.size(), argc == 1);
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << argv[i] << '\n';
      return 2;
    }
    selected[n - 1] = true;
  }
  int failed = 0;
  for (const auto& criterion : criteria) {
    if (!selected[&criterion - criteria.data()]) continue;
    try {
      failed += !criterion();
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "FAIL criterion " << (&criterion - criteria.data()) + 1
                << ": unexpected exception: " << e.what() << std::endl;
    }
  }
  return failed == 0 ? 0 : 1;
}
