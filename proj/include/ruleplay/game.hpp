#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ruleplay/actions.hpp"
#include "ruleplay/facts.hpp"
#include "ruleplay/vocabulary.hpp"

namespace ruleplay {

enum class Difficulty { easy, medium, hard };
enum class Split { train, in_dist, out_dist };

std::string to_string(Difficulty d);
std::string to_string(Split s);
Difficulty difficulty_from_string(const std::string& s);
Split split_from_string(const std::string& s);

struct RoomSpec {
  std::string name;
  // direction word ("north"/"south"/"east"/"west") -> destination room name.
  std::map<std::string, std::string> exits;
};

enum class EntityKind { object, container, supporter };

struct EntitySpec {
  std::string phrase;
  EntityKind kind = EntityKind::object;
  // Objects: room name (floor start) when on_floor, else holder phrase.
  // Holders: room name.
  std::string location;
  bool on_floor = false;
  // Containers only. Generated games never start anything closed; the
  // engine still models openness for hand-built specs.
  bool closed = false;
};

struct GameSpec {
  Difficulty difficulty = Difficulty::easy;
  std::uint64_t seed = 0;
  int max_steps = 50;
  std::vector<RoomSpec> rooms;
  std::vector<EntitySpec> entities;
  // object phrase -> holder phrase that scores the point.
  std::map<std::string, std::string> goal_map;
  // Minimal solving command sequence recorded by the generator.
  std::vector<std::string> witness;

  // Structural checks: rooms nonempty, exits resolvable, goal holders
  // present, locations resolvable, root nouns pairwise distinct.
  void validate() const;
};

struct Observation {
  std::string text;
  double reward = 0.0;
  bool done = false;
  std::vector<ActionCommand> admissible;
};

// Deterministic single-player engine over a GameSpec.
class Game {
 public:
  explicit Game(GameSpec spec);

  const GameSpec& spec() const { return spec_; }

  Observation reset();

  // Steps the episode. Malformed actions raise InputError; stepping a
  // finished episode raises InputError. Inadmissible but well-formed
  // actions consume a step, change nothing and answer with the
  // "Nothing happens." template.
  Observation step(const ActionCommand& action);

  bool done() const { return done_; }
  int steps_taken() const { return steps_; }
  double total_reward() const { return total_reward_; }

  // Ground-truth fact view of the current state; equals what the parser
  // extracts from the rendered observation.
  FactSet oracle_facts() const;

  std::vector<ActionCommand> admissible_actions() const;

  // Resets and executes a recorded command sequence, ignoring nothing-
  // happens outcomes; returns total reward. Stops early when done.
  double replay(const std::vector<ActionCommand>& actions);

  // Canonical fingerprint of the mutable state (player room, object
  // placements, container openness, reward latches). Two unfinished states
  // with equal keys behave identically under every action sequence except
  // for the step budget, which is excluded so revisits are recognizable.
  std::string state_key() const;

 private:
  struct ObjectState {
    // Exactly one of: holder phrase, or room name with on_floor, or carried.
    std::string at;
    bool on_floor = false;
    bool carried = false;
  };

  std::string render_room() const;
  std::string render_inventory() const;
  std::string compose(const std::string& response) const;
  bool all_placed() const;
  bool object_visible(const std::string& phrase) const;
  const EntitySpec& entity(const std::string& phrase) const;

  GameSpec spec_;
  std::string player_room_;
  std::map<std::string, ObjectState> objects_;   // object phrase -> state
  std::map<std::string, bool> container_open_;   // container phrase -> open?
  std::map<std::string, bool> rewarded_;         // reward latch per object
  std::vector<std::string> object_order_;        // spec order, stable
  std::vector<std::string> holder_order_;
  int steps_ = 0;
  double total_reward_ = 0.0;
  bool done_ = false;
  bool started_ = false;
};

}  // namespace ruleplay
