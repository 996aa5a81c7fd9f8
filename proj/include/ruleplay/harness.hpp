#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ruleplay/game.hpp"
#include "ruleplay/gen.hpp"
#include "ruleplay/knowledge.hpp"
#include "ruleplay/learner.hpp"
#include "ruleplay/pruner.hpp"
#include "ruleplay/rules.hpp"

namespace ruleplay {

// One knob set for the whole train/eval pipeline. (config, seed) determines
// every artifact byte for byte.
struct HarnessConfig {
  Difficulty difficulty = Difficulty::easy;
  std::size_t games = 8;       // training games
  std::size_t eval_games = 8;  // per evaluation split
  std::size_t episodes = 100;
  std::size_t seeds = 5;
  std::uint64_t seed = 7;
  double gamma = 0.9;
  double alpha = 0.95;
  double tau = 0.5;
  std::size_t epochs = 200;
  double lr = 0.05;
  double explore = 0.1;  // uniform mixing weight while collecting
  NoiseConfig noise;     // training-time parser noise; evaluation is clean
  bool use_or = true;
  bool use_prune = true;
  std::size_t milestone = 10;  // episodes before A_pruned freezes
  OutlierOptions outlier;
  bool include_distractors = true;
  // Negated candidate literals (take(x,y) :- ... & not atlocation(x,y)).
  // Off by default: they hand return-inheriting junk actions a second dial
  // for suppressing correct groundings, which destabilizes the fits.
  bool include_negated = false;
  int max_steps = 50;
};

struct TrainResult {
  RuleSet rules;  // crisp rules, one per surviving action predicate
  std::optional<PruneReport> prune_report;
  std::vector<EpisodeRecord> episodes;
  std::vector<ActionPredicate> trained_predicates;
};

struct EvalGameRow {
  std::size_t game = 0;
  double total_reward = 0.0;
  double max_reward = 0.0;
  double score = 0.0;  // total / max
  std::size_t steps = 0;
};

struct EvalRun {
  std::vector<EvalGameRow> games;
  double mean_score = 0.0;
  double mean_steps = 0.0;
};

struct EvalResult {
  std::vector<EvalRun> runs;  // one per seed / rule set
  double score_mean = 0.0;
  double score_std = 0.0;  // population std over runs
  double steps_mean = 0.0;
  double steps_std = 0.0;
};

// Deterministic training game set for (config, run seed).
std::vector<GameSpec> training_games(const HarnessConfig& config,
                                     std::uint64_t run_seed,
                                     const EntityVocabulary& vocab);
std::vector<GameSpec> evaluation_games(const HarnessConfig& config,
                                       Split split, std::uint64_t run_seed,
                                       const EntityVocabulary& vocab);

// One training run: iterative collect with the weighted rules learned so
// far (uniform-mixed for exploration), pruning frozen at the milestone,
// full retrain each episode, final fit with outlier rejection when enabled.
TrainResult train_run(const HarnessConfig& config, std::uint64_t run_seed,
                      const std::vector<GameSpec>& specs,
                      const CommonsenseGraph& graph);

// Greedy noise-free rollouts of one rule set over a game set.
EvalRun eval_rules(const RuleSet& rules, const std::vector<GameSpec>& specs,
                   const CommonsenseGraph& graph, bool include_distractors = true);
EvalResult aggregate_eval(std::vector<EvalRun> runs);

// Discounted return of a greedy rollout, gamma^t-weighted from step 0.
double greedy_discounted_return(const RuleSet& rules, const GameSpec& spec,
                                double gamma, const CommonsenseGraph& graph,
                                bool include_distractors = true);

// Exhaustive-search optimum over action sequences, skipping the inert
// verbs (look/inventory/examine never change state or reward).
double optimal_discounted_return(const GameSpec& spec, double gamma);

// Deterministic artifact renderers (no timestamps, sorted keys).
std::string eval_result_to_json(const EvalResult& result,
                                const HarnessConfig& config);
std::string eval_result_to_csv(const EvalResult& result);
std::string episodes_to_csv(const std::vector<EpisodeRecord>& episodes);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Applies one `key = value` setting (config-file and C-API surface share
// this). Unknown key or unparsable value -> error.
void set_config_value(HarnessConfig& config, const std::string& key,
                      const std::string& value);

// Command cores. Each writes its artifacts under out_dir (created if
// missing, file names fixed and relative) and returns a summary JSON
// document. All outputs are deterministic in (config, inputs).
std::string cmd_train(const HarnessConfig& config, const std::string& out_dir);
std::string cmd_prune(const HarnessConfig& config, const std::string& out_dir);
std::string cmd_eval(const HarnessConfig& config,
                     const std::vector<std::string>& rule_files, Split split,
                     const std::string& out_dir);
std::string cmd_curve(const HarnessConfig& config,
                      const std::vector<std::size_t>& budgets,
                      const std::string& out_dir);

}  // namespace ruleplay
