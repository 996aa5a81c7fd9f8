#pragma once

#include <string>
#include <vector>

#include "ruleplay/game.hpp"

namespace ruleplay {

// GameSpec <-> JSON document (format tag "ruleplay-game/1").
std::string spec_to_json(const GameSpec& spec);
GameSpec spec_from_json(const std::string& text);

// One file per game, zero-padded names ("game_000.json", ...). The
// directory is created when missing; loading reads *.json sorted by name.
void save_games(const std::vector<GameSpec>& specs, const std::string& dir);
std::vector<GameSpec> load_games(const std::string& dir_or_file);

}  // namespace ruleplay
