#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ruleplay/game.hpp"
#include "ruleplay/knowledge.hpp"
#include "ruleplay/lnn.hpp"
#include "ruleplay/parser.hpp"
#include "ruleplay/policy.hpp"
#include "ruleplay/rules.hpp"

namespace ruleplay {

// One buffered step of experience.
struct Transition {
  FactSet state;
  std::vector<ActionCommand> admissible;
  ActionCommand action;
  double reward = 0.0;
  double g = 0.0;  // discounted return from this step
  std::size_t episode = 0;
  std::size_t step = 0;
};

using Buffer = std::vector<Transition>;

// g_t = sum_{k>=t} gamma^{k-t} r_k. gamma must lie in [0, 1].
std::vector<double> compute_returns(const std::vector<double>& rewards,
                                    double gamma);

// Predicate name plus arity, the unit of the template set P.
struct PredicateSig {
  std::string name;
  int arity = 0;

  friend bool operator==(const PredicateSig&, const PredicateSig&) = default;
  friend auto operator<=>(const PredicateSig&, const PredicateSig&) = default;
};

struct Templates {
  std::vector<PredicateSig> state_predicates;      // P, sorted unique
  std::vector<ActionPredicate> action_predicates;  // A, sorted unique
};

// P = predicates occurring in any s_t; A = predicates in any adm_t.
Templates extract_templates(const Buffer& buffer);

// All arity-compatible candidate literals for an action head: p(x) for
// unary heads; p(x), p(y) and role-preserving q(x,y) for binary heads.
// Negated twins are appended behind the flag.
std::vector<Literal> candidate_literals(const ActionPredicate& action,
                                        const std::vector<PredicateSig>& P,
                                        bool include_negated = false);

// Replayable record of one collected episode, the pruner's input.
struct EpisodeRecord {
  std::size_t spec_index = 0;
  std::vector<ActionCommand> actions;
  double total_reward = 0.0;
  double max_reward = 0.0;  // goal count, for normalized scores
};

struct PlayOptions {
  double gamma = 0.9;
  std::uint64_t seed = 0;
  const CommonsenseGraph* graph = nullptr;  // optional state augmentation
  bool include_distractors = true;
  NoiseConfig noise;  // applied to the merged symbolic state
};

struct EpisodePlay {
  std::vector<Transition> transitions;
  EpisodeRecord record;
};

// Plays one episode with the given policy, building s_t = parse(text) with
// noise applied, merged with the spec's commonsense subgraph.
EpisodePlay play_episode(const RulePolicy& policy, const GameSpec& spec,
                         std::size_t spec_index, const PlayOptions& options);

struct CollectResult {
  Buffer buffer;
  std::vector<EpisodeRecord> episodes;
};

// Round-robin over specs for the requested episode count with a fixed
// policy; episode e uses seed derive_seed(options.seed, e).
CollectResult collect(const RulePolicy& policy,
                      const std::vector<GameSpec>& specs, std::size_t episodes,
                      const PlayOptions& options);

struct TrainOptions {
  std::size_t epochs = 200;
  double lr = 0.05;
  double epsilon = 1e-6;  // likelihood floor in the normalization
  double alpha = 0.95;
  // Constraint penalty weight for rule fitting. Default 0: the truth-table
  // constraints pull every weight toward the bias, which defeats sparse
  // threshold extraction; they stay on where conjunctions are fit as logic.
  double lambda = 0.0;
  // Start weights at each literal's mean truth over taken groundings, so
  // literals the data never varies keep an evidence-backed weight instead
  // of an arbitrary one.
  bool empirical_init = true;
  bool include_negated = false;
};

// One trainable rule: candidate literals plus conjunction neuron.
struct RuleModel {
  ActionPredicate action;
  std::vector<Literal> candidates;
  std::optional<ConjunctionNeuron> neuron;  // nullopt iff candidates empty
  bool trained = false;
  bool fallback = false;      // outlier rejection fell back to plain training
  bool empty_buffer = false;  // B_a was empty, model returned untrained
};

RuleModel make_rule_model(const ActionPredicate& action,
                          const std::vector<PredicateSig>& P,
                          const TrainOptions& options);

// Transitions whose taken action has the given predicate.
Buffer sub_buffer(const Buffer& buffer, const ActionPredicate& action);

// Return-weighted REINFORCE ascent on sum g_t log pi(a_t | s_t), where pi
// normalizes the neuron likelihood over admissible groundings of the same
// predicate. Full-batch updates; all-zero returns leave parameters at init.
void train_rule(RuleModel& model, const Buffer& b_a,
                const TrainOptions& options);

// Return-weighted negative log-likelihood, the selection metric for
// outlier rejection; computed over whatever buffer is passed.
double evaluation_loss(const RuleModel& model, const Buffer& b_a,
                       const TrainOptions& options);

struct OutlierOptions {
  double k_percent = 50.0;    // top fraction kept per candidate subset
  double min_support = 0.10;  // subset rejected below this fraction of B_a
};

// Consensus-based noise rejection: per state predicate p, train one model
// on the top-k% (by g_t) of transitions whose state mentions p, then keep
// the model with the smallest evaluation loss on the full B_a.
RuleModel train_with_outlier_rejection(const ActionPredicate& action,
                                       const Buffer& b_a,
                                       const std::vector<PredicateSig>& P,
                                       const OutlierOptions& outlier,
                                       const TrainOptions& options);

// Crisp body = candidates with weight >= tau; weights and bias retained as
// annotations. An empty body yields an always-true rule, caller-visible.
HornRule extract_crisp_rule(const RuleModel& model, double tau);

// All candidates with their current weights, for weighted sampling during
// training collection.
HornRule weighted_rule(const RuleModel& model);

}  // namespace ruleplay
