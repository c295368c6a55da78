// Copyright 2026 The Credible Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "credible/cli.h"

#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "credible/automaton.h"
#include "credible/behavior.h"
#include "credible/errors.h"
#include "credible/finite_solver.h"
#include "credible/io.h"
#include "credible/perfect_info.h"
#include "credible/selftest.h"
#include "credible/stage_nash.h"

namespace credible {

namespace {

Json RatsToJson(const RatVector& v) {
  Json arr = Json::array();
  for (const Rat& x : v) arr.push_back(x.ToString());
  return arr;
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

struct CommonOptions {
  std::size_t cap = 0;
  std::string format = "human";
  std::string delta;
  bool serial = false;
};

class Session {
 public:
  Session(const CommonOptions& options, std::string command, std::ostream& out)
      : options_(options), command_(std::move(command)), out_(out) {
    report_["command"] = command_;
  }

  bool structured() const { return options_.format == "structured"; }
  Exec exec() const { return options_.serial ? Exec::kSerial : Exec::kParallel; }
  std::ostream& out() { return out_; }
  Json& report() { return report_; }

  SolverCaps caps() const {
    SolverCaps c;
    if (options_.cap > 0) {
      c.nodes = c.objects_per_stage = c.profiles_per_stage = options_.cap;
    }
    return c;
  }
  std::size_t Cap(std::size_t fallback) const {
    return options_.cap > 0 ? options_.cap : fallback;
  }

  MultiStageGame LoadGame(const std::string& path) const {
    MultiStageGame game = ParseGame(ReadJsonFile(path));
    if (!options_.delta.empty()) game.delta = Rat::Parse(options_.delta);
    RequireValid(game);
    return game;
  }

  // Emits the structured report when requested.
  void Flush() {
    if (structured()) out_ << report_.dump(2) << "\n";
  }

  void HumanVerdict(const std::string& title, const Verdict& v,
                    const std::vector<std::string>& names) {
    if (structured()) return;
    out_ << title << ": " << (v.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& w : v.witnesses) {
      out_ << "  " << FormatWitness(w, names) << "\n";
    }
  }

 private:
  const CommonOptions& options_;
  std::string command_;
  std::ostream& out_;
  Json report_;
};

void PrintProfile(std::ostream& os, const MultiStageGame& game,
                  const HistoryTree& tree, const BehaviorProfile& p) {
  for (int t = 1; t <= tree.Horizon(); ++t) {
    for (std::size_t i = 0; i < tree.LevelSize(t); ++i) {
      os << "  t" << t << " " << FormatHistory(game, tree.HistoryAt(t, i))
         << " -> " << FormatMixed(tree.Stage(t), p.At(t, i)) << "\n";
    }
  }
}

// ---------------------------------------------------------------- nash

int RunNash(Session& s, const std::string& game_path, int stage,
            const std::string& check) {
  const MultiStageGame game = s.LoadGame(game_path);
  if (stage < 1 || (game.IsFinite() && stage > game.Horizon())) {
    throw InputError("--stage " + std::to_string(stage) +
                     " is outside the horizon");
  }
  const StageGame& g = game.StageAt(stage);
  const NashSet census = NashCensus(g, s.Cap(kDefaultProfileCap), s.exec());
  Json& r = s.report();
  r["stage"] = stage;
  r["pure"] = Json::array();
  for (const auto& a : census.pure) {
    r["pure"].push_back(
        {{"profile", g.ProfileLabel(a)}, {"payoffs", RatsToJson(g.Payoff(a))}});
  }
  r["mixed_enumerated"] = g.NumPlayers() == 2;
  r["mixed"] = Json::array();
  for (const auto& m : census.mixed) {
    r["mixed"].push_back({{"profile", MixedToJson(g, m)},
                          {"payoffs", RatsToJson(ExpectedStagePayoff(g, m))}});
  }
  r["degenerate"] = census.degenerate;
  if (!s.structured()) {
    auto& os = s.out();
    os << "stage " << stage << " equilibria of " << game.players.size()
       << "-player game\n";
    os << "pure equilibria: " << census.pure.size() << "\n";
    for (const auto& a : census.pure) {
      os << "  (" << g.ProfileLabel(a) << ") payoffs " << ToString(g.Payoff(a))
         << "\n";
    }
    if (g.NumPlayers() == 2) {
      os << "mixed equilibria: " << census.mixed.size() << "\n";
      for (const auto& m : census.mixed) {
        os << "  " << FormatMixed(g, m) << " payoffs "
           << ToString(ExpectedStagePayoff(g, m)) << "\n";
      }
      os << "degenerate: " << YesNo(census.degenerate) << "\n";
    } else {
      os << "mixed equilibria: not enumerated for more than two players\n";
    }
  }
  int code = kExitOk;
  if (!check.empty()) {
    const auto profile = g.ParseProfileLabel(check);
    if (!profile) throw InputError("--check: '" + check + "' is not a profile");
    const Verdict v = IsNash(g, MixedProfile::Pure(g, *profile));
    r["check"] = {{"profile", check}, {"verdict", ToJson(v)}};
    s.HumanVerdict("check (" + check + ")", v, game.players);
    if (!v.pass) code = kExitVerdictFail;
  }
  s.Flush();
  return code;
}

// ------------------------------------------------------- finite horizon

int ReportVerdict(Session& s, const std::string& title, const Verdict& v,
                  const std::vector<std::string>& names) {
  s.report()["verdict"] = ToJson(v);
  s.HumanVerdict(title, v, names);
  s.Flush();
  return v.pass ? kExitOk : kExitVerdictFail;
}

int RunVerify(Session& s, bool credible, const std::string& game_path,
              const std::string& profile_path) {
  if (profile_path.empty()) throw InputError("a profile file is required");
  const MultiStageGame game = s.LoadGame(game_path);
  const BehaviorProfile p = ParseProfile(game, ReadJsonFile(profile_path));
  const Verdict v = credible ? VerifyCredible(game, p, s.caps(), s.exec())
                             : VerifySpne(game, p, s.caps(), s.exec());
  return ReportVerdict(s, credible ? "credible" : "subgame perfect", v,
                       game.players);
}

int RunEnumerate(Session& s, bool credible, const std::string& game_path) {
  const MultiStageGame game = s.LoadGame(game_path);
  const EquilibriumSet set =
      credible ? EnumeratePureCredible(game, s.caps(), s.exec())
               : EnumeratePureSpne(game, s.caps(), s.exec());
  Json& r = s.report();
  r["truncated"] = set.truncated;
  if (set.truncated) {
    r["cap"] = set.cap_info;
    if (!s.structured()) s.out() << "enumeration truncated: " << set.cap_info << "\n";
    s.Flush();
    return kExitCapExceeded;
  }
  HistoryTree tree(game, s.caps().nodes);
  r["count"] = set.profiles.size();
  r["profiles"] = Json::array();
  for (const auto& table : set.profiles) {
    r["profiles"].push_back(ProfileToJson(game, ToBehavior(tree, table)));
  }
  if (!s.structured()) {
    s.out() << (credible ? "pure credible equilibria: "
                         : "pure subgame perfect equilibria: ")
            << set.profiles.size() << "\n";
    for (std::size_t k = 0; k < set.profiles.size(); ++k) {
      s.out() << "profile " << k + 1 << "\n";
      PrintProfile(s.out(), game, tree, ToBehavior(tree, set.profiles[k]));
    }
  }
  s.Flush();
  return kExitOk;
}

int RunConstruct(Session& s, const std::string& game_path,
                 const std::string& out_path) {
  const MultiStageGame game = s.LoadGame(game_path);
  const OpenLoopProfile open =
      ConstructCredible(game, s.Cap(kDefaultProfileCap));
  Json& r = s.report();
  r["summary"] = FormatOpenLoop(game, open);
  r["open_loop"] = OpenLoopToJson(game, open);
  if (game.IsFinite()) {
    HistoryTree tree(game, s.caps().nodes);
    r["profile"] = ProfileToJson(game, ToBehavior(tree, open));
    if (!out_path.empty()) WriteJsonFile(out_path, r["profile"]);
  } else if (!out_path.empty()) {
    throw UnsupportedHorizon(
        "--out writes a full profile file and needs a finite horizon");
  }
  if (!s.structured()) {
    s.out() << "credible equilibrium: " << FormatOpenLoop(game, open) << "\n";
  }
  s.Flush();
  return kExitOk;
}

int RunUnique(Session& s, const std::string& game_path) {
  const MultiStageGame game = s.LoadGame(game_path);
  const UniquenessReport u = AnalyzeUniqueness(game, s.Cap(kDefaultProfileCap));
  Json& r = s.report();
  r["status"] = ToString(u.status);
  if (!u.reason.empty()) r["reason"] = u.reason;
  if (u.status == UniquenessStatus::kUnique) {
    r["summary"] = FormatOpenLoop(game, u.profile);
    r["open_loop"] = OpenLoopToJson(game, u.profile);
    if (game.IsFinite()) {
      HistoryTree tree(game, s.caps().nodes);
      r["profile"] = ProfileToJson(game, ToBehavior(tree, u.profile));
    }
    if (!s.structured()) {
      s.out() << "unique credible equilibrium: "
              << FormatOpenLoop(game, u.profile) << "\n";
    }
    s.Flush();
    return kExitOk;
  }
  const StageGame& g = game.StageAt(std::max(u.stage_time, 1));
  r["stage"] = u.stage_time;
  r["equilibria"] = Json::array();
  for (const auto& m : u.equilibria) r["equilibria"].push_back(MixedToJson(g, m));
  if (!s.structured()) {
    if (u.status == UniquenessStatus::kNotApplicable) {
      s.out() << "no uniqueness guarantee: stage " << u.stage_time
              << " has several equilibria";
      for (std::size_t k = 0; k < u.equilibria.size(); ++k) {
        s.out() << (k ? " and " : " ") << FormatMixed(g, u.equilibria[k]);
      }
      s.out() << "\n";
    } else {
      s.out() << "uniqueness unknown: " << u.reason << "\n";
    }
  }
  s.Flush();
  return kExitVerdictFail;
}

// ----------------------------------------------------------- automata

struct RepeatedSetup {
  MultiStageGame game;
  AutomatonProfile profile;
  const StageGame& stage() const { return game.cycle[0]; }
};

RepeatedSetup LoadRepeated(Session& s, const std::string& game_path,
                           const std::string& auto_path) {
  RepeatedSetup setup{s.LoadGame(game_path), {}};
  if (setup.game.IsFinite() || !setup.game.stages.empty() ||
      setup.game.cycle.size() != 1) {
    throw UnsupportedHorizon(
        "automaton commands need an infinitely repeated stage game (empty "
        "prefix, one-stage cycle)");
  }
  setup.profile = ParseAutomata(setup.stage(), ReadJsonFile(auto_path));
  s.report()["delta"] = setup.game.delta.ToString();
  return setup;
}

int RunAutoValues(Session& s, const std::string& game_path,
                  const std::string& auto_path) {
  const RepeatedSetup setup = LoadRepeated(s, game_path, auto_path);
  const StageGame& g = setup.stage();
  const std::size_t cap = s.Cap(kDefaultJointStateCap);
  const ValueTable values =
      AutomatonValues(g, setup.game.delta, setup.profile, cap);
  const ValueTable residuals =
      BellmanResiduals(g, setup.game.delta, setup.profile, values);
  const JointStateSpace space(g, setup.profile, cap);
  bool zero = true;
  Json states = Json::array();
  for (std::size_t q = 0; q < space.Size(); ++q) {
    for (const Rat& x : residuals[q]) zero = zero && x.IsZero();
    states.push_back({{"state", space.Labels(q)},
                      {"value", RatsToJson(values[q])},
                      {"residual", RatsToJson(residuals[q])}});
  }
  s.report()["states"] = states;
  s.report()["residuals_zero"] = zero;
  if (!s.structured()) {
    s.out() << "joint state values at delta " << setup.game.delta << ":\n";
    for (std::size_t q = 0; q < space.Size(); ++q) {
      const auto labels = space.Labels(q);
      std::string name;
      for (const auto& l : labels) name += (name.empty() ? "" : ",") + l;
      s.out() << "  (" << name << ") " << ToString(values[q]) << "\n";
    }
    s.out() << "bellman residuals: " << (zero ? "all zero" : "NONZERO") << "\n";
  }
  s.Flush();
  return zero ? kExitOk : kExitVerdictFail;
}

int RunAutoVerify(Session& s, bool credible, const std::string& game_path,
                  const std::string& auto_path) {
  const RepeatedSetup setup = LoadRepeated(s, game_path, auto_path);
  const std::size_t cap = s.Cap(kDefaultJointStateCap);
  if (!credible) {
    const Verdict v = VerifySpneAutomaton(setup.stage(), setup.game.delta,
                                          setup.profile, cap, s.exec());
    return ReportVerdict(s, "subgame perfect", v, setup.game.players);
  }
  const AutomatonCredibility c = VerifyCredibleAutomaton(
      setup.stage(), setup.game.delta, setup.profile, cap, s.exec());
  s.report()["preperiod"] = c.preperiod;
  s.report()["period"] = c.period;
  s.report()["cross_time_changes_verdict"] = c.cross_time_changes_verdict;
  if (!s.structured()) {
    s.out() << "reachable joint-state sets: preperiod " << c.preperiod
            << ", period " << c.period << "\n";
    s.out() << "comparing states across different times would change the "
               "verdict: "
            << YesNo(c.cross_time_changes_verdict) << "\n";
  }
  return ReportVerdict(s, "credible", c.verdict, setup.game.players);
}

// -------------------------------------------------------------- trees

std::vector<std::string> TreeNames(const ParsedTree& t) {
  if (!t.player_names.empty()) return t.player_names;
  std::vector<std::string> names;
  for (int p = 0; p < t.tree.NumPlayers(); ++p) {
    names.push_back("P" + std::to_string(p + 1));
  }
  return names;
}

int RunTree(Session& s, const std::string& mode, const std::string& tree_path,
            const std::string& strategy_path) {
  const ParsedTree parsed = ParseTree(ReadJsonFile(tree_path));
  const GameTree& tree = parsed.tree;
  const auto names = TreeNames(parsed);
  const std::size_t cap = s.Cap(kDefaultTreeProfileCap);
  Json& r = s.report();
  if (mode == "prop3") {
    const Prop3Report rep = CheckProp3(tree, cap);
    r["status"] = ToString(rep.status);
    r["tie_free"] = rep.tie_free;
    r["num_spne"] = rep.num_spne;
    if (rep.counterexample) {
      r["counterexample"] = TreeStrategyToJson(tree, *rep.counterexample);
      r["verdict"] = ToJson(rep.counterexample_verdict);
    }
    if (!s.structured()) {
      auto& os = s.out();
      os << "status: " << ToString(rep.status) << "\n";
      os << "tie-free: " << YesNo(rep.tie_free)
         << (rep.tie_free ? " (single subgame perfect profile; credibility "
                            "holds structurally)"
                          : " (payoff ties during backward induction)")
         << "\n";
      os << "subgame perfect profiles: " << rep.num_spne << "\n";
      if (rep.counterexample) {
        os << "counterexample:\n" << FormatStrategy(tree, *rep.counterexample);
        for (const auto& w : rep.counterexample_verdict.witnesses) {
          os << "  " << FormatWitness(w, names) << "\n";
        }
      }
    }
    s.Flush();
    switch (rep.status) {
      case Prop3Status::kHolds: return kExitOk;
      case Prop3Status::kCounterexample: return kExitVerdictFail;
      case Prop3Status::kTruncatedUnknown: return kExitCapExceeded;
    }
  }
  if (strategy_path.empty()) {
    if (mode == "credible") throw InputError("a strategy file is required");
    const BackwardInductionResult bi = BackwardInductionAll(tree, cap);
    r["truncated"] = bi.truncated;
    r["tie_free"] = bi.tie_free;
    r["strategies"] = Json::array();
    for (const auto& st : bi.strategies) {
      r["strategies"].push_back(TreeStrategyToJson(tree, st));
    }
    if (!s.structured()) {
      s.out() << "subgame perfect strategies: " << bi.strategies.size()
              << (bi.truncated ? " (truncated)" : "")
              << ", tie-free: " << YesNo(bi.tie_free) << "\n";
      for (std::size_t k = 0; k < bi.strategies.size(); ++k) {
        s.out() << "strategy " << k + 1 << "\n"
                << FormatStrategy(tree, bi.strategies[k]);
      }
    }
    s.Flush();
    return bi.truncated ? kExitCapExceeded : kExitOk;
  }
  const TreeStrategy st = ParseTreeStrategy(tree, ReadJsonFile(strategy_path));
  if (mode == "credible") {
    return ReportVerdict(s, "credible", VerifyCredibleTree(tree, st), names);
  }
  return ReportVerdict(s, "subgame perfect", VerifySpneTree(tree, st), names);
}

// ----------------------------------------------------------- selftest

int RunSelftest(Session& s, std::uint64_t seed, const std::string& fixtures) {
  SelftestOptions options;
  options.seed = seed;
  if (!fixtures.empty()) options.fixtures = fixtures;
  const auto results = RunAcceptance(options);
  bool all = true;
  Json list = Json::array();
  for (const auto& res : results) {
    all = all && res.pass;
    list.push_back({{"id", res.id},
                    {"name", res.name},
                    {"pass", res.pass},
                    {"detail", res.detail}});
    if (!s.structured()) s.out() << FormatResult(res) << "\n";
  }
  s.report()["seed"] = seed;
  s.report()["criteria"] = list;
  s.report()["pass"] = all;
  s.Flush();
  return all ? kExitOk : kExitVerdictFail;
}

void AddCommon(CLI::App* app, CommonOptions& o) {
  app->add_option("--cap", o.cap, "Node/profile/state cap")
      ->check(CLI::PositiveNumber);
  app->add_option("--format", o.format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));
  app->add_option("--delta", o.delta, "Override the discount factor (a/b)");
  app->add_flag("--serial", o.serial, "Disable parallel kernels");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Credible equilibrium solver and verifier", "credible"};
  app.require_subcommand(1);
  CommonOptions common;
  std::string game, second, mode, check, out_path, fixtures;
  int stage = 1;
  std::uint64_t seed = SelftestOptions{}.seed;
  std::function<int(Session&)> action;
  std::string command;

  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& help, std::function<int(Session&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    AddCommon(sub, common);
    const std::string full =
        (parent == &app ? "" : parent->get_name() + " ") + name;
    sub->callback([&action, &command, full, fn] {
      action = fn;
      command = full;
    });
    return sub;
  };

  auto* nash = leaf(&app, "nash", "Stage-game equilibrium census",
                    [&](Session& s) { return RunNash(s, game, stage, check); });
  nash->add_option("game", game, "Game file")->required();
  nash->add_option("--stage", stage, "Stage time (default 1)");
  nash->add_option("--check", check, "Check a pure profile, e.g. B,B");

  for (const bool credible : {false, true}) {
    auto* group = app.add_subcommand(
        credible ? "credible" : "spne",
        credible ? "Credible equilibria of finite games"
                 : "Subgame perfect equilibria of finite games");
    group->require_subcommand(1);
    auto* verify = leaf(group, "verify", "Verify a profile", [&, credible](
                                                                 Session& s) {
      return RunVerify(s, credible, game, second);
    });
    verify->add_option("game", game, "Game file")->required();
    verify->add_option("profile", second, "Profile file")->required();
    auto* enumerate =
        leaf(group, "enumerate", "All pure equilibria",
             [&, credible](Session& s) { return RunEnumerate(s, credible, game); });
    enumerate->add_option("game", game, "Game file")->required();
    if (credible) {
      auto* construct =
          leaf(group, "construct", "Build a credible equilibrium",
               [&](Session& s) { return RunConstruct(s, game, out_path); });
      construct->add_option("game", game, "Game file")->required();
      construct->add_option("--out", out_path, "Write the profile file here");
    }
  }

  auto* unique = leaf(&app, "unique", "Uniqueness analysis",
                      [&](Session& s) { return RunUnique(s, game); });
  unique->add_option("game", game, "Game file")->required();

  auto* autom = app.add_subcommand("auto", "Automaton strategies in repeated games");
  autom->require_subcommand(1);
  auto* values = leaf(autom, "values", "Exact joint-state values",
                      [&](Session& s) { return RunAutoValues(s, game, second); });
  auto* aspne = leaf(autom, "spne", "One-shot deviation check",
                     [&](Session& s) {
                       return RunAutoVerify(s, false, game, second);
                     });
  auto* acred = leaf(autom, "credible", "Credibility check", [&](Session& s) {
    return RunAutoVerify(s, true, game, second);
  });
  for (auto* sub : {values, aspne, acred}) {
    sub->add_option("game", game, "Repeated game file")->required();
    sub->add_option("automata", second, "Automaton file")->required();
  }

  auto* tree = app.add_subcommand("tree", "Perfect-information game trees");
  tree->require_subcommand(1);
  for (const std::string m : {"spne", "credible", "prop3"}) {
    auto* sub = leaf(tree, m, "Tree " + m, [&, m](Session& s) {
      return RunTree(s, m, game, second);
    });
    sub->add_option("tree", game, "Tree file")->required();
    if (m != "prop3") sub->add_option("strategy", second, "Strategy file");
  }

  auto* selftest = leaf(&app, "selftest", "Run the acceptance suite",
                        [&](Session& s) { return RunSelftest(s, seed, fixtures); });
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--fixtures", fixtures, "Fixture directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Session session(common, command, out);
  auto fail = [&](const std::string& kind, const std::string& message,
                  int code) {
    err << "error: " << message << "\n";
    if (common.format == "structured") {
      Json j;
      j["command"] = command;
      j["error"] = {{"kind", kind}, {"message", message}};
      out << j.dump(2) << "\n";
    }
    return code;
  };
  try {
    return action(session);
  } catch (const CapExceeded& e) {
    return fail("CapExceeded", e.what(), kExitCapExceeded);
  } catch (const AmbiguousIsomorphism& e) {
    return fail("AmbiguousIsomorphism", e.what(), kExitInputError);
  } catch (const NoStageNashFound& e) {
    return fail("NoStageNashFound", e.what(), kExitInputError);
  } catch (const UnsupportedHorizon& e) {
    return fail("UnsupportedHorizon", e.what(), kExitInputError);
  } catch (const Error& e) {
    return fail("InputError", e.what(), kExitInputError);
  } catch (const std::domain_error& e) {
    return fail("InputError", e.what(), kExitInputError);
  }
}

}  // namespace credible
