#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ruleplay/game.hpp"
#include "ruleplay/vocabulary.hpp"

namespace ruleplay {

struct GenOptions {
  Difficulty difficulty = Difficulty::easy;
  Split split = Split::train;
  int count = 1;
  std::uint64_t seed = 0;
  const EntityVocabulary* vocab = nullptr;  // nullptr -> builtin vocabulary
  int max_steps = 50;
  // Overrides for the per-tier object-count range; 0 keeps tier defaults
  // (easy 1-3, medium 2-4, hard 3-5).
  int min_objects = 0;
  int max_objects = 0;
};

// Stable partition of (object, initial location, goal holder) configurations
// into train-part (true) and eval-part (false). Train games draw only
// train-part configurations and in_dist games only eval-part ones, so an
// in_dist configuration can never occur in any train game of any seed.
bool config_in_train_part(const std::string& object,
                          const std::string& initial_location,
                          const std::string& goal_holder);

// Deterministically generates `count` solvable specs for the tier/split.
// Tier shapes: easy = 1 room, objects start on the floor; medium = 1 room,
// at least one distractor holder, mixed floor/wrong-holder starts; hard =
// 2 rooms with at least one cross-room goal. out_dist games contain at
// least one held-out object. Raises InputError when the vocabulary cannot
// satisfy the request, naming the shortfall.
std::vector<GameSpec> generate_games(const GenOptions& options);

}  // namespace ruleplay
