#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ruleplay.h"

namespace {

int fail(int rc) {
  std::fprintf(stderr, "error: %s\n", rp_last_error());
  return rc;
}

// Collects config settings from flags and an optional config file; flags
// win over file entries.
struct ConfigArgs {
  std::map<std::string, std::string> values;
  std::string config_file;

  void attach(CLI::App* cmd) {
    auto opt = [this, cmd](const std::string& flag, const std::string& key,
                           const std::string& desc) {
      cmd->add_option_function<std::string>(
          flag, [this, key](const std::string& v) { values[key] = v; }, desc);
    };
    opt("--difficulty", "difficulty", "game tier: easy | medium | hard");
    opt("--games", "games", "training games per run");
    opt("--eval-games", "eval_games", "evaluation games per split");
    opt("--episodes", "episodes", "training episodes per run");
    opt("--seeds", "seeds", "independent runs");
    opt("--seed", "seed", "base seed");
    opt("--gamma", "gamma", "return discount");
    opt("--alpha", "alpha", "constraint truth threshold");
    opt("--tau", "tau", "crisp extraction weight threshold");
    opt("--epochs", "epochs", "gradient epochs per rule fit");
    opt("--lr", "lr", "learning rate");
    opt("--explore", "explore", "uniform mixing while collecting");
    opt("--noise-drop", "noise_drop", "training fact drop probability");
    opt("--noise-swap", "noise_swap", "training argument swap probability");
    opt("--milestone", "milestone", "episodes before pruning freezes");
    opt("--k-percent", "k_percent", "top return percentile kept per subset");
    opt("--min-support", "min_support", "minimum subset fraction");
    opt("--max-steps", "max_steps", "step cap per episode");
    cmd->add_flag_callback(
        "--or", [this] { values["use_or"] = "true"; }, "outlier rejection on");
    cmd->add_flag_callback(
        "--no-or", [this] { values["use_or"] = "false"; },
        "outlier rejection off");
    cmd->add_flag_callback(
        "--prune", [this] { values["use_prune"] = "true"; },
        "action pruning on");
    cmd->add_flag_callback(
        "--no-prune", [this] { values["use_prune"] = "false"; },
        "action pruning off");
    cmd->add_flag_callback(
        "--no-distractors", [this] { values["include_distractors"] = "false"; },
        "goal-relevant knowledge triples only");
    cmd->add_flag_callback(
        "--negated", [this] { values["include_negated"] = "true"; },
        "negated candidate literals on");
    cmd->add_flag_callback(
        "--no-negated", [this] { values["include_negated"] = "false"; },
        "negated candidate literals off");
    cmd->add_option("--config", config_file, "key = value configuration file");
  }

  int apply(rp_config* config) const {
    if (!config_file.empty())
      if (int rc = rp_config_load(config, config_file.c_str())) return rc;
    for (const auto& [key, value] : values)
      if (int rc = rp_config_set(config, key.c_str(), value.c_str()))
        return rc;
    return RP_OK;
  }
};

// Owns an rp_config for one command invocation.
struct ConfigHandle {
  rp_config* ptr = nullptr;
  ConfigHandle() { rp_config_new(&ptr); }
  ~ConfigHandle() { rp_config_free(ptr); }
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
};

int run_pipeline(const ConfigArgs& args, const std::string& out_dir,
                 int (*command)(const rp_config*, const char*, char**)) {
  ConfigHandle config;
  if (int rc = args.apply(config.ptr)) return fail(rc);
  char* summary = nullptr;
  if (int rc = command(config.ptr, out_dir.c_str(), &summary)) return fail(rc);
  std::fputs(summary, stdout);
  rp_string_free(summary);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ruleplay: rule-learning agents for cleanup text games"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a deterministic game set");
  std::string gen_difficulty = "easy", gen_split = "train", gen_out;
  int gen_count = 10, gen_max_steps = 50;
  std::uint64_t gen_seed = 7;
  gen->add_option("--difficulty", gen_difficulty, "easy | medium | hard");
  gen->add_option("--split", gen_split, "train | in_dist | out_dist");
  gen->add_option("--count", gen_count, "number of games");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--max-steps", gen_max_steps, "step cap per episode");
  gen->add_option("--out", gen_out, "output directory")->required();

  auto* train = app.add_subcommand("train", "learn rules and evaluate them");
  ConfigArgs train_args;
  std::string train_out;
  train_args.attach(train);
  train->add_option("--out", train_out, "artifact directory")->required();

  auto* prune_cmd =
      app.add_subcommand("prune", "report the counterfactual prune verdicts");
  ConfigArgs prune_args;
  std::string prune_out;
  prune_args.attach(prune_cmd);
  prune_cmd->add_option("--out", prune_out, "artifact directory")->required();

  auto* eval = app.add_subcommand("eval", "greedy rollouts of stored rules");
  ConfigArgs eval_args;
  std::vector<std::string> eval_rules;
  std::string eval_split = "in_dist", eval_out;
  eval_args.attach(eval);
  eval->add_option("--rules", eval_rules, "rule file, one per run")
      ->required()
      ->expected(-1);
  eval->add_option("--split", eval_split, "in_dist | out_dist");
  eval->add_option("--out", eval_out, "artifact directory")->required();

  auto* curve =
      app.add_subcommand("curve", "score vs training-episode budget");
  ConfigArgs curve_args;
  std::vector<std::size_t> curve_budgets;
  std::string curve_out;
  curve_args.attach(curve);
  curve->add_option("--budgets", curve_budgets, "ascending episode budgets")
      ->required()
      ->expected(-1);
  curve->add_option("--out", curve_out, "artifact directory")->required();

  auto* rules = app.add_subcommand("rules", "inspect rule files");
  rules->require_subcommand(1);
  std::string rules_file, rules_source = "learned";
  auto* check = rules->add_subcommand("check", "validate a rule file");
  auto* dump = rules->add_subcommand("dump", "print the canonical form");
  for (auto* sub : {check, dump}) {
    sub->add_option("--rules", rules_file, "rule file")->required();
    sub->add_option("--source", rules_source, "learned | human");
  }

  CLI11_PARSE(app, argc, argv);

  if (*gen) {
    rp_games* games = nullptr;
    if (int rc = rp_games_generate(gen_difficulty.c_str(), gen_split.c_str(),
                                   gen_count, gen_seed, gen_max_steps, &games))
      return fail(rc);
    int rc = rp_games_save(games, gen_out.c_str());
    size_t n = 0;
    rp_games_count(games, &n);
    rp_games_free(games);
    if (rc) return fail(rc);
    std::printf("wrote %zu games to %s\n", n, gen_out.c_str());
    return 0;
  }
  if (*train) return run_pipeline(train_args, train_out, rp_train);
  if (*prune_cmd) return run_pipeline(prune_args, prune_out, rp_prune);
  if (*eval) {
    ConfigHandle config;
    if (int rc = eval_args.apply(config.ptr)) return fail(rc);
    std::vector<const char*> files;
    for (const auto& f : eval_rules) files.push_back(f.c_str());
    char* summary = nullptr;
    if (int rc = rp_eval(config.ptr, files.data(), files.size(),
                         eval_split.c_str(), eval_out.c_str(), &summary))
      return fail(rc);
    std::fputs(summary, stdout);
    rp_string_free(summary);
    return 0;
  }
  if (*curve) {
    ConfigHandle config;
    if (int rc = curve_args.apply(config.ptr)) return fail(rc);
    char* summary = nullptr;
    if (int rc = rp_curve(config.ptr, curve_budgets.data(),
                          curve_budgets.size(), curve_out.c_str(), &summary))
      return fail(rc);
    std::fputs(summary, stdout);
    rp_string_free(summary);
    return 0;
  }
  if (*rules) {
    rp_rules* handle = nullptr;
    if (int rc = rp_rules_load(rules_file.c_str(), rules_source.c_str(),
                               &handle))
      return fail(rc);
    if (*dump) {
      char* text = nullptr;
      int rc = rp_rules_serialize(handle, &text);
      rp_rules_free(handle);
      if (rc) return fail(rc);
      std::fputs(text, stdout);
      rp_string_free(text);
    } else {
      rp_rules_free(handle);
      std::printf("ok: %s\n", rules_file.c_str());
    }
    return 0;
  }
  return 0;
}
