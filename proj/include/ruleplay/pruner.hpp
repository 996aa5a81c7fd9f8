#pragma once

#include <string>
#include <vector>

#include "ruleplay/actions.hpp"
#include "ruleplay/game.hpp"
#include "ruleplay/learner.hpp"

namespace ruleplay {

struct PruneEntry {
  ActionPredicate predicate;
  double mean_with = 0.0;
  double mean_without = 0.0;
  bool pruned = false;
};

// Counterfactual replay report. a_pruned() is the surviving action set:
// predicates whose removal left mean episodic reward unchanged are dropped.
struct PruneReport {
  std::vector<PruneEntry> entries;  // sorted by predicate
  double tolerance = 0.0;

  std::vector<ActionPredicate> a_pruned() const;
  bool keeps(const ActionPredicate& p) const;
};

// Replays every episode once per predicate with that predicate's actions
// removed (remaining actions still count against the step cap) and compares
// mean total reward against the original runs.
PruneReport prune(const std::vector<GameSpec>& specs,
                  const std::vector<EpisodeRecord>& episodes,
                  const std::vector<ActionPredicate>& actions,
                  double tolerance = 0.0);

std::string prune_report_to_json(const PruneReport& report);

}  // namespace ruleplay
