// Copyright 2026 The teamsem Authors
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


#include "commands.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "teamsem/equivcheck.h"
#include "teamsem/errors.h"
#include "teamsem/formula_ops.h"
#include "teamsem/rewrite.h"
#include "teamsem/semantics.h"
#include "teamsem/structures.h"
#include "teamsem/text_io.h"
#include "teamsem/well_formed.h"

namespace teamsem::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

Registry load_registry(const CommonOptions& common) {
  Registry reg = builtin_registry();
  if (!common.deps_path.empty()) {
    reg = load_dependency_defs(read_file(common.deps_path), std::move(reg));
  }
  return reg;
}

EvalOptions eval_options(const CommonOptions& common) {
  EvalOptions opts = common.plain ? plain_options() : EvalOptions{};
  opts.budget.max_team_rows = common.max_team;
  opts.budget.max_branches = common.max_branches;
  opts.budget.timeout = std::chrono::milliseconds(common.timeout_ms);
  return opts;
}

// Human lines go to out unless --machine is set; records always do then.
class Report {
 public:
  explicit Report(const CommonOptions& common) : machine_(common.machine) {}

  void line(const std::string& s) {
    if (!machine_) result_.out += s + "\n";
  }
  void record(const std::vector<std::pair<std::string, std::string>>& kv) {
    if (!machine_) return;
    std::string s;
    for (const auto& [k, v] : kv) {
      if (!s.empty()) s += ' ';
      s += k + "=" + quote(v);
    }
    result_.out += s + "\n";
  }
  CommandResult finish(int code) {
    result_.exit_code = code;
    return std::move(result_);
  }

 private:
  static std::string quote(const std::string& v) {
    const bool plain =
        !v.empty() && v.find_first_of(" \t\"\\=\n") == std::string::npos;
    if (plain) return v;
    std::ostringstream os;
    os << std::quoted(v);
    return os.str();
  }

  bool machine_;
  CommandResult result_;
};

CommandResult failure(int code, const std::string& message) {
  CommandResult r;
  r.exit_code = code;
  r.err = "error: " + message + "\n";
  return r;
}

// Maps library exceptions to exit codes.
template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return failure(kBudget, std::string("budget exceeded: ") + e.what());
  } catch (const ParseError& e) {
    return failure(kUsage, std::string("parse error at ") +
                               std::to_string(e.span().begin) + ": " +
                               e.what());
  } catch (const Error& e) {
    return failure(kUsage, e.what());
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string sizes_text(const std::vector<std::size_t>& sizes) {
  std::string s;
  for (std::size_t n : sizes) {
    if (!s.empty()) s += ',';
    s += std::to_string(n);
  }
  return s;
}

// Random teams over x,y in m; each assignment kept with probability p.
Team random_team(const Model& m, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Tuple> rows;
  for (Element a = 0; a < m.size(); ++a) {
    for (Element b = 0; b < m.size(); ++b) {
      if (keep(rng)) rows.push_back({a, b});
    }
  }
  return Team({"x", "y"}, std::move(rows));
}

const std::vector<std::string>& open_corpus() {
  static const std::vector<std::string> kCorpus = {
      "inc(x ; y)",
      "E(x,y) /\\ inc(y ; x)",
      "exists z. (E(x,z) /\\ inc(z ; y))",
      "forall z. (E(x,z) => inc(z ; x))",
      "x != y \\/ inc(x ; y)",
      "exists z. (E(z,y) /\\ (inc(z ; x) /\\ inc(x ; z)))",
  };
  return kCorpus;
}

const std::vector<std::string>& fo_corpus() {
  static const std::vector<std::string> kCorpus = {
      "E(x,y)",
      "x = y \\/ E(x,y)",
      "exists z. (E(x,z) /\\ E(z,y))",
      "forall z. (E(x,z) \\/ z != y)",
      "!E(x,y) /\\ exists z. (E(x,z) /\\ !E(z,y))",
  };
  return kCorpus;
}

}  // namespace

const std::vector<std::string>& unsafety_corpus() {
  static const std::vector<std::string> kCorpus = {
      "forall x. exists y. (E(x,y) /\\ inc(y ; x))",
      "exists x. forall y. (E(x,y) => inc(y ; x))",
      "forall x y. (E(x,y) => inc(x ; y))",
      "exists x y. (E(x,y) /\\ inc(x ; y))",
      "forall x. exists y z. (E(x,y) /\\ E(x,z) /\\ y != z /\\ inc(y ; z))",
      "forall x. exists y. (x != y /\\ inc(y ; x))",
      "exists x. forall y. (x = y \\/ inc(y ; x))",
      "forall x y. exists z. ((E(x,z) \\/ E(y,z)) /\\ inc(z ; x))",
      "forall x. exists y. (E(x,y) /\\ forall z. (E(y,z) => inc(z ; x)))",
      "forall x. (exists y. (E(x,y) /\\ inc(x ; y)) \\/ forall y. !E(x,y))",
      "exists x. (inc(x ; x) /\\ forall y. (E(x,y) => exists z. (E(y,z) /\\ "
      "inc(z ; y))))",
      "forall x y. (x = y \\/ exists z. (E(x,z) /\\ inc(z ; y)))",
      "forall x. exists y z. (E(x,y) /\\ E(y,z) /\\ x != z /\\ inc(z ; x))",
      "exists x y. (x != y /\\ !E(x,y) /\\ inc(y ; x))",
  };
  return kCorpus;
}

CommandResult cmd_eval(const CommonOptions& common,
                       const std::string& model_path, TeamSource source,
                       const std::string& team_path,
                       const std::string& formula) {
  return guarded([&] {
    Report rep(common);
    const Registry reg = load_registry(common);
    std::vector<std::string> warnings;
    const Model m = parse_model(read_file(model_path), &warnings);
    const Formula f = parse_formula(formula, reg);
    const WellFormedness wf = well_formed(f, m.signature(), reg);
    if (!wf.ok()) {
      std::string why = wf.to_string();
      while (!why.empty() && why.back() == '\n') why.pop_back();
      return failure(kUsage, "ill-formed formula\n" + why);
    }
    Team x;
    switch (source) {
      case TeamSource::kEpsilon: x = Team::epsilon(); break;
      case TeamSource::kEmpty: x = Team(); break;
      case TeamSource::kFile: x = parse_team(read_file(team_path), m); break;
    }
    const bool value = eval(m, x, f, reg, eval_options(common));
    CommandResult r;
    rep.line(yes_no(value));
    rep.record({{"command", "eval"}, {"result", yes_no(value)}});
    r = rep.finish(value ? kTrue : kFalse);
    for (const auto& w : warnings) r.err += "warning: " + w + "\n";
    return r;
  });
}

CommandResult cmd_rewrite(const CommonOptions& common, const std::string& pass,
                          const std::string& formula,
                          const RewriteFlags& flags) {
  return guarded([&] {
    static const std::set<std::string> kPasses = {
        "expand-macros", "prenex",      "disj-to-hook",
        "hook-normalize", "normal-form", "eliminate-all"};
    if (!kPasses.count(pass)) return failure(kUsage, "unknown pass '" + pass + "'");
    Report rep(common);
    const Registry reg = load_registry(common);
    const Formula input = parse_formula(formula, reg);
    MacroSet macros = default_macros();
    if (flags.inclusion) macros.insert(Macro::kInclusion);

    RewriteResult out;
    if (pass == "expand-macros") {
      out = expand_macros(input, macros);
    } else if (pass == "prenex") {
      out = to_prenex(input);
    } else if (pass == "disj-to-hook") {
      out = disj_to_hook(input);
    } else if (pass == "hook-normalize") {
      out = hook_normalize(input);
    } else {
      if (!is_sentence(input)) {
        return failure(kUsage, pass + " needs a sentence; free variables: " +
                                   [&] {
                                     std::string s;
                                     for (const auto& v : free_vars(input)) {
                                       s += (s.empty() ? "" : " ") + v;
                                     }
                                     return s;
                                   }());
      }
      if (pass == "normal-form") {
        NormalFormResult nf = to_normal_form(input);
        out = {nf.formula, nf.trace};
      } else {
        RewriteResult ex = expand_macros(input, macros);
        RewriteResult el = eliminate_totality(ex.formula);
        out.formula = el.formula;
        out.trace = ex.trace;
        out.trace.append(el.trace);
      }
    }

    rep.line(print_formula(out.formula));
    rep.record({{"command", "rewrite"},
                {"pass", pass},
                {"output", print_formula(out.formula)},
                {"steps", std::to_string(out.trace.steps.size())}});
    if (flags.trace && !common.machine) rep.line(format_trace(out.trace));

    int code = kTrue;
    if (flags.verify) {
      EquivOptions eo;
      eo.sizes = flags.sizes;
      eo.threads = common.threads;
      eo.eval = eval_options(common);
      const Verdict v = equivalent(input, out.formula, reg, eo);
      rep.line("verify (sizes " + sizes_text(flags.sizes) + "): " +
               v.summary());
      rep.record({{"verify", v.equivalent() ? "equivalent" : "counterexample"},
                  {"pairs", std::to_string(v.pairs_checked)}});
      if (v.counterexample()) {
        rep.line(print_model(*v.model));
        rep.line(print_team(*v.team, *v.model));
        code = kFalse;
      }
    }
    return rep.finish(code);
  });
}

CommandResult cmd_demo_unsafety(const CommonOptions& common, int n,
                                const std::string& write_dir) {
  if (n < 1 || n > 12) {
    return failure(kUsage, "--n must be between 1 and 12");
  }
  return guarded([&] {
    Report rep(common);
    const Registry reg = load_registry(common);
    const EvalOptions opts = eval_options(common);
    const std::string a_name = "A" + std::to_string(n);
    const std::string b_name = "B" + std::to_string(n);
    const Model a = graph_An(n);
    const Model b = graph_Bn(n);
    if (!write_dir.empty()) {
      std::filesystem::create_directories(write_dir);
      write_file(write_dir + "/" + a_name + ".model", print_model(a));
      write_file(write_dir + "/" + b_name + ".model", print_model(b));
    }
    bool all_ok = true;
    auto row = [&](const std::string& check, const std::string& expected,
                   const std::string& got, bool ok) {
      all_ok = all_ok && ok;
      std::ostringstream os;
      os << std::left << std::setw(34) << check << std::setw(14) << expected
         << std::setw(14) << got << (ok ? "ok" : "MISMATCH");
      rep.line(os.str());
      rep.record({{"check", check},
                  {"expected", expected},
                  {"got", got},
                  {"ok", yes_no(ok)}});
    };
    rep.line("models: " + a_name + " (" + std::to_string(a.size()) +
             " vertices), " + b_name + " (" + std::to_string(b.size()) +
             " vertices)");
    {
      std::ostringstream os;
      os << std::left << std::setw(34) << "check" << std::setw(14)
         << "expected" << std::setw(14) << "got" << "status";
      rep.line(os.str());
    }

    const Formula nonconn = nonconn_sentence();
    const Team eps = Team::epsilon();
    for (const auto* mp : {&a, &b}) {
      const bool expected = !is_connected(*mp);
      const bool got = eval(*mp, eps, nonconn, reg, opts);
      row("nonconn on " + (mp == &a ? a_name : b_name), yes_no(expected),
          yes_no(got), got == expected);
    }

    const std::set<std::string> kinds = {"inc"};
    std::size_t agree = 0, total = 0;
    for (const auto& text : unsafety_corpus()) {
      const Formula phi = parse_formula(text, reg);
      const Formula flat = flatten(phi, kinds);
      for (const auto* mp : {&a, &b}) {
        ++total;
        if (eval(*mp, eps, phi, reg, opts) == eval(*mp, eps, flat, reg, opts)) {
          ++agree;
        }
      }
    }
    row("corpus flattening agreement", std::to_string(total) + "/" +
                                            std::to_string(total),
        std::to_string(agree) + "/" + std::to_string(total), agree == total);

    constexpr std::size_t kTeams = 100;
    std::mt19937_64 rng(20260101 + static_cast<std::uint64_t>(n));
    std::size_t idem = 0, uni = 0, focl = 0, focl_total = 0, clinc = 0,
                clinc_total = 0;
    std::vector<Formula> fo, open;
    for (const auto& t : fo_corpus()) fo.push_back(parse_formula(t, reg));
    for (const auto& t : open_corpus()) open.push_back(parse_formula(t, reg));
    for (const auto* mp : {&a, &b}) {
      const auto perms = automorphisms(*mp);
      const double p = 4.0 / static_cast<double>(mp->size() * mp->size());
      for (std::size_t i = 0; i < kTeams; ++i) {
        const Team y = random_team(*mp, rng, p);
        const Team z = random_team(*mp, rng, p);
        const Team cy = closure(y, perms);
        if (closure(cy, perms).same_assignments(cy)) ++idem;
        if (closure(team_union(y, z), perms)
                .same_assignments(team_union(cy, closure(z, perms)))) {
          ++uni;
        }
        for (const auto& f : fo) {
          ++focl_total;
          if (eval(*mp, y, f, reg, opts) == eval(*mp, cy, f, reg, opts)) ++focl;
        }
        for (const auto& f : open) {
          ++clinc_total;
          if (eval(*mp, cy, f, reg, opts) ==
              eval(*mp, cy, flatten(f, kinds), reg, opts)) {
            ++clinc;
          }
        }
      }
    }
    auto frac = [](std::size_t k, std::size_t t) {
      return std::to_string(k) + "/" + std::to_string(t);
    };
    row("closure idempotence", frac(2 * kTeams, 2 * kTeams),
        frac(idem, 2 * kTeams), idem == 2 * kTeams);
    row("closure of unions", frac(2 * kTeams, 2 * kTeams),
        frac(uni, 2 * kTeams), uni == 2 * kTeams);
    row("first-order invariance under Cl", frac(focl_total, focl_total),
        frac(focl, focl_total), focl == focl_total);
    row("flattening on closed teams", frac(clinc_total, clinc_total),
        frac(clinc, clinc_total), clinc == clinc_total);
    rep.line(all_ok ? "all checks match" : "some checks do not match");
    return rep.finish(all_ok ? kTrue : kFalse);
  });
}

CommandResult cmd_props(const CommonOptions& common, const std::string& name,
                        std::size_t arity, std::size_t bound) {
  return guarded([&] {
    Report rep(common);
    const Registry reg = load_registry(common);
    if (!reg.has_name(name)) {
      return failure(kUsage, "unknown dependency '" + name + "'");
    }
    DependencyPtr d;
    if (arity > 0) {
      d = reg.lookup(name, arity);
    } else {
      for (std::size_t k = 1; k <= 6 && !d; ++k) d = reg.lookup(name, k);
    }
    if (!d) {
      return failure(kUsage, "dependency '" + name + "' has no arity " +
                                 std::to_string(arity));
    }
    const ClosureReport report = verify_closure_flags(*d, bound);
    rep.line(name + "/" + std::to_string(d->arity) + ", all teams on models "
             "of size 1.." + std::to_string(bound));
    bool declared_ok = true;
    auto show = [&](const char* label, const FlagCheck& c, FlagState declared) {
      const bool holds = c.result == FlagState::kAsserted;
      if (declared == FlagState::kAsserted && !holds) declared_ok = false;
      if (declared == FlagState::kRefuted && holds) declared_ok = false;
      std::string text = std::string(label) + ": " +
                         (holds ? "confirmed" : "refuted");
      if (declared != FlagState::kUnknown) {
        text += std::string(" (declared ") + to_string(declared) + ")";
      }
      rep.line(text);
      rep.record({{"flag", label},
                  {"result", holds ? "confirmed" : "refuted"},
                  {"declared", to_string(declared)}});
      if (!holds) {
        const Model m = equality_model(c.model_size);
        std::string w = "  " + c.explanation + ", size " +
                        std::to_string(c.model_size) + ":";
        for (const auto& t : c.witnesses) w += " " + format_team(t, m);
        rep.line(w);
      }
    };
    show("downward-closed", report.downward_closed, d->flags.downward_closed);
    show("upward-closed", report.upward_closed, d->flags.upward_closed);
    show("union-closed", report.union_closed, d->flags.union_closed);
    show("empty-team", report.empty_team, d->flags.empty_team);
    return rep.finish(declared_ok ? kTrue : kFalse);
  });
}

CommandResult cmd_equiv(const CommonOptions& common, const std::string& f1,
                        const std::string& f2, const EquivFlags& flags) {
  return guarded([&] {
    Report rep(common);
    const Registry reg = load_registry(common);
    const Formula a = parse_formula(f1, reg);
    const Formula b = parse_formula(f2, reg);
    EquivOptions eo;
    eo.sizes = flags.sizes;
    eo.min_size = flags.min_size;
    eo.samples = flags.samples;
    eo.seed = flags.seed;
    eo.threads = common.threads;
    eo.eval = eval_options(common);
    const Verdict v = equivalent(a, b, reg, eo);
    const char* status = v.equivalent()       ? "equivalent"
                         : v.counterexample() ? "counterexample"
                                              : "no-counterexample";
    rep.line(v.summary());
    rep.record({{"command", "equiv"},
                {"status", status},
                {"pairs", std::to_string(v.pairs_checked)}});
    if (v.counterexample()) {
      const std::string model_text = print_model(*v.model);
      const std::string team_text = print_team(*v.team, *v.model);
      rep.line("model:\n" + model_text + "team: " +
               format_team(*v.team, *v.model));
      rep.record({{"first", yes_no(v.first)},
                  {"second", yes_no(v.second)},
                  {"team", format_team(*v.team, *v.model)}});
      if (!flags.counterexample_prefix.empty()) {
        write_file(flags.counterexample_prefix + ".model", model_text);
        write_file(flags.counterexample_prefix + ".team", team_text);
      }
    }
    return rep.finish(v.counterexample() ? kFalse : kTrue);
  });
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Model checking and rewriting for team semantics"};
  app.require_subcommand(1);
  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--deps", common.deps_path, "dependency definitions file");
    sub->add_option("--max-team", common.max_team, "largest team built");
    sub->add_option("--max-branches", common.max_branches,
                    "enumeration budget per evaluation");
    sub->add_option("--timeout", common.timeout_ms,
                    "deadline per evaluation in milliseconds");
    sub->add_flag("--machine", common.machine, "key=value output");
    sub->add_flag("--plain", common.plain, "disable prunings");
    sub->add_option("--threads", common.threads, "worker threads")
        ->check(CLI::PositiveNumber);
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula on a team");
  std::vector<std::string> eval_args;
  bool epsilon = false, empty = false;
  eval_cmd->add_option("args", eval_args, "MODEL [TEAM] FORMULA")->required();
  eval_cmd->add_flag("--epsilon", epsilon, "use the team {eps}");
  eval_cmd->add_flag("--empty", empty, "use the empty team");
  add_common(eval_cmd);

  auto* rw = app.add_subcommand("rewrite", "run a rewrite pass");
  std::string pass, rw_formula, rw_sizes = "2,3";
  RewriteFlags rflags;
  rw->add_option("pass", pass, "pass name")->required();
  rw->add_option("formula", rw_formula, "formula")->required();
  rw->add_flag("--trace", rflags.trace, "print the rewrite trace");
  rw->add_flag("--verify", rflags.verify, "check equivalence of input and output");
  rw->add_flag("--inc", rflags.inclusion, "also expand inclusion atoms");
  rw->add_option("--sizes", rflags.sizes, "model sizes for --verify")
      ->delimiter(',');
  add_common(rw);

  auto* demo = app.add_subcommand("demo-unsafety", "constancy vs inclusion demo");
  int n = 1;
  std::string write_dir;
  demo->add_option("--n", n, "family index")->required();
  demo->add_option("--write-models", write_dir, "directory for model files");
  add_common(demo);

  auto* props = app.add_subcommand("props", "check closure properties");
  std::string dep;
  std::size_t arity = 0, bound = 3;
  props->add_option("dependency", dep, "dependency name")->required();
  props->add_option("--arity", arity, "arity (default: smallest defined)");
  props->add_option("--bound", bound, "largest model size");
  add_common(props);

  auto* eq = app.add_subcommand("equiv", "bounded equivalence check");
  std::string e1, e2;
  EquivFlags eflags;
  eq->add_option("first", e1, "first formula")->required();
  eq->add_option("second", e2, "second formula")->required();
  eq->add_option("--sizes", eflags.sizes, "model sizes")->delimiter(',');
  eq->add_option("--min-size", eflags.min_size, "smallest admitted size");
  eq->add_option("--samples", eflags.samples, "random pairs instead of all");
  eq->add_option("--seed", eflags.seed, "sampling seed");
  eq->add_option("--write-counterexample", eflags.counterexample_prefix,
                 "write PREFIX.model and PREFIX.team");
  add_common(eq);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kUsage;
  }

  CommandResult r;
  if (eval_cmd->parsed()) {
    if (epsilon && empty) {
      r = failure(kUsage, "--epsilon and --empty are exclusive");
    } else if ((epsilon || empty) && eval_args.size() == 2) {
      r = cmd_eval(common, eval_args[0],
                   epsilon ? TeamSource::kEpsilon : TeamSource::kEmpty, "",
                   eval_args[1]);
    } else if (!epsilon && !empty && eval_args.size() == 3) {
      r = cmd_eval(common, eval_args[0], TeamSource::kFile, eval_args[1],
                   eval_args[2]);
    } else {
      r = failure(kUsage,
                  "usage: eval MODEL TEAM FORMULA or eval MODEL "
                  "--epsilon|--empty FORMULA");
    }
  } else if (rw->parsed()) {
    r = cmd_rewrite(common, pass, rw_formula, rflags);
  } else if (demo->parsed()) {
    r = cmd_demo_unsafety(common, n, write_dir);
  } else if (props->parsed()) {
    r = cmd_props(common, dep, arity, bound);
  } else {
    r = cmd_equiv(common, e1, e2, eflags);
  }
  out << r.out;
  err << r.err;
  return r.exit_code;
}

}  // namespace teamsem::cli
