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

#include "credible/selftest.h"

#include <chrono>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include "credible/cli.h"
#include "credible/io.h"
#include "credible/oracles.h"
#include "credible/random_games.h"

namespace credible {

namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure only.
  void Require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Invocation {
  int code = -1;
  std::string out;
  Json json;
};

Invocation Invoke(std::vector<std::string> args, bool structured = true) {
  if (structured) {
    args.push_back("--format");
    args.push_back("structured");
  }
  std::ostringstream out, err;
  Invocation inv;
  inv.code = RunCli(args, out, err);
  inv.out = out.str() + err.str();
  if (structured) {
    inv.json = Json::parse(out.str(), nullptr, /*allow_exceptions=*/false);
  }
  return inv;
}

std::string Describe(const std::vector<std::string>& args, const Invocation& r) {
  std::string cmd;
  for (const auto& a : args) cmd += (cmd.empty() ? "" : " ") + a;
  return "'" + cmd + "' exited " + std::to_string(r.code);
}

class Runner {
 public:
  explicit Runner(const SelftestOptions& o) : options_(o) {
    scratch_ = o.scratch;
    if (scratch_.empty()) {
      scratch_ = fs::temp_directory_path() /
                 ("credible-selftest-" + std::to_string(o.seed) + "-" +
                  std::to_string(std::chrono::steady_clock::now()
                                     .time_since_epoch()
                                     .count()));
      owns_scratch_ = true;
    }
    fs::create_directories(scratch_);
  }
  ~Runner() {
    if (owns_scratch_) {
      std::error_code ec;
      fs::remove_all(scratch_, ec);
    }
  }

  std::string Fixture(const std::string& name) const {
    return (options_.fixtures / name).string();
  }
  std::string Scratch(const std::string& name) const {
    return (scratch_ / name).string();
  }
  Rng MakeRng(int id) const { return Rng(options_.seed * 1000003 + id); }

  Outcome Criterion1() {
    Outcome o;
    const std::string game = Fixture("twice_cde.game");
    const std::string profile = Fixture("pstar.profile");
    std::vector<std::string> spne{"spne", "verify", game, profile};
    const auto a = Invoke(spne);
    o.Require(a.code == kExitOk, Describe(spne, a) + ", expected 0");
    std::vector<std::string> cred{"credible", "verify", game, profile};
    const auto b = Invoke(cred);
    o.Require(b.code == kExitVerdictFail, Describe(cred, b) + ", expected 1");
    bool found = false;
    if (b.json.is_object() && b.json.contains("verdict")) {
      for (const auto& w : b.json["verdict"]["witnesses"]) {
        found = found || (w["kind"] == "CredibilityFailure" &&
                          w["player"] == 0 &&
                          w["location"] == Json::array({"C,C"}) &&
                          w["other_location"] == Json::array({"C,D"}) &&
                          w["payoffs"] == Json::array({"3", "1"}));
      }
    }
    o.Require(found, "no credibility witness for Row at (C,C)/(C,D) with "
                     "payoffs 3 vs 1");
    return o;
  }

  Outcome Criterion2() {
    Outcome o;
    const std::string game = Fixture("threat.game");
    std::vector<std::string> cred{"credible", "verify", game,
                                  Fixture("threat.profile")};
    const auto a = Invoke(cred);
    o.Require(a.code == kExitOk, Describe(cred, a) + ", expected 0");
    std::vector<std::string> nash{"nash", game, "--stage", "1", "--check",
                                  "B,B"};
    const auto b = Invoke(nash);
    o.Require(b.code == kExitVerdictFail, Describe(nash, b) + ", expected 1");
    bool found = false;
    if (b.json.is_object() && b.json.contains("check")) {
      const Json& v = b.json["check"]["verdict"];
      for (const auto& w : v["witnesses"]) {
        found = found || (w["player"] == 1 && w["payoffs"][0] == "2" &&
                          w["payoffs"][1] == "3" && w["gain"] == "1");
      }
    }
    o.Require(found, "no column deviation from (B,B) with gain 1 (2 -> 3)");
    return o;
  }

  Outcome Criterion3() {
    Outcome o;
    const std::string game = Fixture("pd.game");
    for (const std::string delta : {"1/4", "1/2", "3/5", "9/10"}) {
      const bool patient = Rat::Parse(delta) >= Rat(1, 2);
      std::vector<std::string> spne{"auto", "spne", game, Fixture("grim.auto"),
                                    "--delta", delta};
      const auto a = Invoke(spne);
      o.Require(a.code == (patient ? kExitOk : kExitVerdictFail),
                Describe(spne, a));
      std::vector<std::string> cred{"auto", "credible", game,
                                    Fixture("grim.auto"), "--delta", delta};
      const auto b = Invoke(cred);
      o.Require(b.code == kExitVerdictFail, Describe(cred, b) + ", expected 1");
      std::vector<std::string> ad{"auto", "credible", game,
                                  Fixture("always_defect.auto"), "--delta",
                                  delta};
      const auto c = Invoke(ad);
      o.Require(c.code == kExitOk, Describe(ad, c) + ", expected 0");
    }
    return o;
  }

  Outcome Criterion4() {
    Outcome o;
    Rng rng = MakeRng(4);
    RandomGameOptions opt;
    opt.require_pure_nash = true;
    int ok = 0;
    for (int k = 0; k < 200; ++k) {
      const MultiStageGame g = RandomFiniteGame(rng, opt);
      const std::string game = Scratch("c4.game");
      const std::string profile = Scratch("c4.profile");
      WriteJsonFile(game, GameToJson(g));
      std::vector<std::string> build{"credible", "construct", game, "--out",
                                     profile};
      const auto a = Invoke(build);
      o.Require(a.code == kExitOk, Describe(build, a) + " on game " +
                                       std::to_string(k));
      std::vector<std::string> check{"credible", "verify", game, profile};
      const auto b = Invoke(check);
      o.Require(b.code == kExitOk,
                Describe(check, b) + " on game " + std::to_string(k));
      if (a.code == kExitOk && b.code == kExitOk) ++ok;
    }
    if (o.pass) o.detail = std::to_string(ok) + "/200 verified";
    return o;
  }

  Outcome Criterion5() {
    Outcome o;
    Rng rng = MakeRng(5);
    RandomGameOptions opt;
    opt.dominant = true;
    int ok = 0;
    for (int k = 0; k < 100; ++k) {
      const MultiStageGame g = RandomFiniteGame(rng, opt);
      const std::string game = Scratch("c5.game");
      WriteJsonFile(game, GameToJson(g));
      std::vector<std::string> en{"credible", "enumerate", game};
      const auto a = Invoke(en);
      std::vector<std::string> un{"unique", game};
      const auto b = Invoke(un);
      const bool one = a.code == kExitOk && a.json.value("count", -1) == 1;
      o.Require(one, Describe(en, a) + " on game " + std::to_string(k) +
                         ", expected exactly one profile");
      const bool same = one && b.code == kExitOk &&
                        b.json.value("status", "") == "Unique" &&
                        b.json["profile"] == a.json["profiles"][0];
      o.Require(same, Describe(un, b) + " on game " + std::to_string(k) +
                          ", expected the enumerated profile");
      if (one && same) ++ok;
    }
    if (o.pass) o.detail = std::to_string(ok) + "/100 matched";
    return o;
  }

  Outcome Criterion6() {
    Outcome o;
    Rng rng = MakeRng(6);
    RandomGameOptions opt;
    opt.min_players = opt.max_players = 2;
    opt.min_actions = 2;
    opt.max_actions = 2;
    opt.max_stages = 2;
    opt.payoff_hi = 3;
    std::size_t total = 0;
    for (int k = 0; k < 100; ++k) {
      const MultiStageGame g = RandomFiniteGame(rng, opt);
      const std::string game = Scratch("c6.game");
      WriteJsonFile(game, GameToJson(g));
      const HistoryTree tree(g);
      auto tables = [&](const Json& report) {
        std::set<PureTable> out;
        for (const auto& entry : report["profiles"]) {
          out.insert(*AsPureTable(tree, ParseProfile(g, entry)));
        }
        return out;
      };
      std::vector<std::string> se{"spne", "enumerate", game};
      std::vector<std::string> ce{"credible", "enumerate", game};
      const auto a = Invoke(se);
      const auto b = Invoke(ce);
      o.Require(a.code == kExitOk, Describe(se, a));
      o.Require(b.code == kExitOk, Describe(ce, b));
      if (a.code != kExitOk || b.code != kExitOk) continue;
      const auto spne = tables(a.json);
      const auto cred = tables(b.json);
      const auto oracle_list = oracle::AllPureSpne(g);
      const std::set<PureTable> oracle(oracle_list.begin(), oracle_list.end());
      o.Require(std::includes(spne.begin(), spne.end(), cred.begin(),
                              cred.end()),
                "credible set not contained in the SPNE set on game " +
                    std::to_string(k));
      o.Require(spne == oracle, "SPNE set differs from the brute-force oracle "
                                "on game " + std::to_string(k));
      total += spne.size();
    }
    if (o.pass) o.detail = std::to_string(total) + " SPNE tables matched";
    return o;
  }

  Outcome Criterion7() {
    Outcome o;
    Rng rng = MakeRng(7);
    for (int k = 0; k < 200; ++k) {
      const int players = std::uniform_int_distribution<int>(2, 3)(rng);
      const GameTree t = RandomTieFreeTree(rng, players, 10);
      const std::string path = Scratch("c7.tree");
      WriteJsonFile(path, TreeToJson(t));
      std::vector<std::string> cmd{"tree", "prop3", path};
      const auto a = Invoke(cmd);
      o.Require(a.code == kExitOk && a.json.value("status", "") == "Holds" &&
                    a.json.value("tie_free", false),
                Describe(cmd, a) + " on tree " + std::to_string(k) +
                    ", expected Holds with tie_free");
    }
    const std::string tied = Fixture("tied_copies.tree");
    std::vector<std::string> cmd{"tree", "prop3", tied};
    const auto b = Invoke(cmd);
    o.Require(b.code == kExitVerdictFail &&
                  b.json.value("status", "") == "Counterexample",
              Describe(cmd, b) + ", expected a counterexample");
    o.Require(b.json.is_object() && b.json.value("tie_free", true) == false,
              "tie tree not flagged as having ties");
    if (b.json.is_object() && b.json.contains("counterexample")) {
      const ParsedTree parsed = ParseTree(ReadJsonFile(tied));
      const TreeStrategy s =
          ParseTreeStrategy(parsed.tree, b.json["counterexample"]);
      o.Require(oracle::IsTreeSpneExhaustive(parsed.tree, s),
                "counterexample is not subgame perfect under the exhaustive "
                "oracle");
      const std::string path = Scratch("c7.strategy");
      WriteJsonFile(path, b.json["counterexample"]);
      std::vector<std::string> cred{"tree", "credible", tied, path};
      const auto c = Invoke(cred);
      o.Require(c.code == kExitVerdictFail,
                Describe(cred, c) + ", expected 1");
    } else {
      o.Require(false, "no counterexample reported");
    }
    return o;
  }

  Outcome Criterion8() {
    Outcome o;
    std::vector<std::string> cmd{"auto", "values", Fixture("pd.game"),
                                 Fixture("grim.auto"), "--delta", "3/5"};
    const auto a = Invoke(cmd);
    o.Require(a.code == kExitOk, Describe(cmd, a));
    if (!a.json.is_object() || !a.json.contains("states")) {
      o.Require(false, "no state values reported");
      return o;
    }
    int matched = 0;
    for (const auto& st : a.json["states"]) {
      if (st["state"] == Json::array({"coop", "coop"})) {
        o.Require(st["value"] == Json::array({"15/2", "15/2"}),
                  "(coop,coop) value is " + st["value"].dump());
        ++matched;
      }
      if (st["state"] == Json::array({"punish", "punish"})) {
        o.Require(st["value"] == Json::array({"5/2", "5/2"}),
                  "(punish,punish) value is " + st["value"].dump());
        ++matched;
      }
      for (const auto& r : st["residual"]) {
        o.Require(r == "0", "nonzero Bellman residual at " + st["state"].dump());
      }
    }
    o.Require(matched == 2, "missing (coop,coop) or (punish,punish)");
    o.Require(a.json.value("residuals_zero", false), "residuals not all zero");
    return o;
  }

 private:
  SelftestOptions options_;
  fs::path scratch_;
  bool owns_scratch_ = false;
};

}  // namespace

std::vector<CriterionResult> RunAcceptance(const SelftestOptions& options) {
  Runner runner(options);
  struct Spec {
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Spec> specs = {
      {"coordination profile: subgame perfect but not credible (3 vs 1)", 1,
       [&] { return runner.Criterion1(); }},
      {"threat profile credible; (B,B) not a stage equilibrium (gain 1)", 1,
       [&] { return runner.Criterion2(); }},
      {"grim trigger never credible; always-defect always credible", 1,
       [&] { return runner.Criterion3(); }},
      {"constructed profiles verify on 200 random games", 60,
       [&] { return runner.Criterion4(); }},
      {"dominant-action games: one credible profile, equal to unique", 60,
       [&] { return runner.Criterion5(); }},
      {"credible within SPNE; SPNE equals brute-force oracle", 120,
       [&] { return runner.Criterion6(); }},
      {"tie-free trees hold; tie tree yields a checked counterexample", 0,
       [&] { return runner.Criterion7(); }},
      {"grim-trigger values exact at delta 3/5; zero Bellman residuals", 0,
       [&] { return runner.Criterion8(); }},
  };
  std::vector<CriterionResult> results;
  for (std::size_t k = 0; k < specs.size(); ++k) {
    CriterionResult r;
    r.id = static_cast<int>(k) + 1;
    r.name = specs[k].name;
    r.limit_seconds = specs[k].limit;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = specs[k].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
    r.pass = o.pass;
    r.detail = o.detail;
    if (r.pass && r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.pass = false;
      r.detail = "over the time limit";
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string FormatResult(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  ("
     << std::fixed << std::setprecision(3) << r.seconds << " s";
  if (r.limit_seconds > 0) {
    os << ", limit " << std::defaultfloat << r.limit_seconds << " s";
  }
  os << ")";
  if (!r.detail.empty()) os << ": " << r.detail;
  return os.str();
}

}  // namespace credible
