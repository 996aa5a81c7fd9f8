#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ruleplay/facts.hpp"
#include "ruleplay/rng.hpp"
#include "ruleplay/rules.hpp"

namespace ruleplay {

// Truth of one literal under a head-variable binding: 1.0 iff some fact has
// the literal's predicate and pairwise root-noun-equal arguments; negation
// as failure complements it.
double match_literal(const Literal& lit, const std::vector<std::string>& binding,
                     const FactSet& facts);

// Likelihood of one grounded action: body literals matched under the
// binding head(x,y) -> args, combined by crisp AND (default) or by the
// weighted conjunction using @w/@b annotations. No rule -> 0.
double score_action(const RuleSet& rules, const ActionCommand& action,
                    const FactSet& facts, bool weighted = false);

struct PolicyConfig {
  bool weighted = false;
  // Post-prune action set: predicates outside it score 0. Empty optional
  // means every predicate is allowed.
  std::optional<std::set<ActionPredicate>> allowed;
  // Uniform mixing weight in [0, 1] over allowed actions; keeps unseen
  // predicates reachable while collecting. Preserves the argmax.
  double explore = 0.0;
  // sample() acts greedily except for explore-coin uniform draws. Sampling
  // proportional to mildly separated scores keeps junk actions frequent
  // enough to anchor their weights below threshold; argmax collection
  // self-corrects instead.
  bool act_greedy = false;
};

// Executes a rule set as a stochastic or greedy policy over admissible
// actions. An empty rule set scores everything 0 and therefore acts as the
// uniform policy through the zero-sum fallback.
class RulePolicy {
 public:
  explicit RulePolicy(RuleSet rules, PolicyConfig config = {});

  const RuleSet& rules() const { return rules_; }
  const PolicyConfig& config() const { return config_; }

  // Normalized probabilities aligned with `admissible`; zero-likelihood
  // states fall back to uniform over allowed actions.
  std::vector<double> distribution(const std::vector<ActionCommand>& admissible,
                                   const FactSet& facts) const;

  // Argmax with a deterministic tie-break: non-movement before movement,
  // then fewer arguments, then lexicographic by rendered command. Movement
  // and re-grasp groundings tie with productive actions under crisp rules,
  // and plain lexicographic order would walk greedy rollouts in circles.
  // When `banned` is given (rendered commands), picks the best non-banned
  // action and falls back to the unrestricted argmax if all are banned;
  // rollouts pass the commands already tried in the current engine state
  // so deterministic loops degrade to the next-best action instead.
  ActionCommand greedy(const std::vector<ActionCommand>& admissible,
                       const FactSet& facts,
                       const std::set<std::string>* banned = nullptr) const;

  // Categorical draw from distribution().
  ActionCommand sample(const std::vector<ActionCommand>& admissible,
                       const FactSet& facts, Rng& rng) const;

 private:
  bool action_allowed(const ActionCommand& a) const;

  RuleSet rules_;
  PolicyConfig config_;
};

}  // namespace ruleplay
