#include "ruleplay/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "ruleplay/entities.hpp"

namespace ruleplay {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kFormat = "ruleplay-game/1";

std::string kind_name(EntityKind k) {
  switch (k) {
    case EntityKind::object: return "object";
    case EntityKind::container: return "container";
    case EntityKind::supporter: return "supporter";
  }
  return "object";
}

EntityKind kind_from(const std::string& s) {
  if (s == "object") return EntityKind::object;
  if (s == "container") return EntityKind::container;
  if (s == "supporter") return EntityKind::supporter;
  throw ParseError("game json: unknown entity kind '" + s + "'");
}

}  // namespace

std::string spec_to_json(const GameSpec& spec) {
  json j;
  j["format"] = kFormat;
  j["difficulty"] = to_string(spec.difficulty);
  j["seed"] = spec.seed;
  j["max_steps"] = spec.max_steps;
  j["rooms"] = json::array();
  for (const auto& r : spec.rooms) {
    json room;
    room["name"] = r.name;
    room["exits"] = json::object();
    for (const auto& [dir, dest] : r.exits) room["exits"][dir] = dest;
    j["rooms"].push_back(room);
  }
  j["entities"] = json::array();
  for (const auto& e : spec.entities) {
    json ent;
    ent["phrase"] = e.phrase;
    ent["kind"] = kind_name(e.kind);
    ent["location"] = e.location;
    if (e.kind == EntityKind::object) ent["on_floor"] = e.on_floor;
    if (e.closed) ent["closed"] = true;
    j["entities"].push_back(ent);
  }
  j["goal"] = json::object();
  for (const auto& [obj, holder] : spec.goal_map) j["goal"][obj] = holder;
  j["witness"] = spec.witness;
  return j.dump(2) + "\n";
}

GameSpec spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("game json: ") + e.what());
  }
  try {
    if (j.value("format", "") != kFormat)
      throw ParseError("game json: missing or unknown format tag");
    GameSpec spec;
    spec.difficulty = difficulty_from_string(j.at("difficulty").get<std::string>());
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.max_steps = j.at("max_steps").get<int>();
    for (const auto& room : j.at("rooms")) {
      RoomSpec r;
      r.name = room.at("name").get<std::string>();
      if (room.contains("exits"))
        for (const auto& [dir, dest] : room.at("exits").items())
          r.exits[dir] = dest.get<std::string>();
      spec.rooms.push_back(std::move(r));
    }
    for (const auto& ent : j.at("entities")) {
      EntitySpec e;
      e.phrase = ent.at("phrase").get<std::string>();
      e.kind = kind_from(ent.at("kind").get<std::string>());
      e.location = ent.at("location").get<std::string>();
      e.on_floor = ent.value("on_floor", false);
      e.closed = ent.value("closed", false);
      spec.entities.push_back(std::move(e));
    }
    for (const auto& [obj, holder] : j.at("goal").items())
      spec.goal_map[obj] = holder.get<std::string>();
    if (j.contains("witness"))
      spec.witness = j.at("witness").get<std::vector<std::string>>();
    spec.validate();
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("game json: ") + e.what());
  }
}

void save_games(const std::vector<GameSpec>& specs, const std::string& dir) {
  fs::create_directories(dir);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "game_%03zu.json", i);
    std::ofstream out(fs::path(dir) / name);
    if (!out) throw InputError("save_games: cannot write to '" + dir + "'");
    out << spec_to_json(specs[i]);
  }
}

std::vector<GameSpec> load_games(const std::string& dir_or_file) {
  fs::path p(dir_or_file);
  std::vector<fs::path> files;
  if (fs::is_directory(p)) {
    for (const auto& entry : fs::directory_iterator(p))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else if (fs::exists(p)) {
    files.push_back(p);
  } else {
    throw InputError("load_games: no such file or directory '" + dir_or_file + "'");
  }
  if (files.empty())
    throw InputError("load_games: no .json games in '" + dir_or_file + "'");
  std::vector<GameSpec> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    try {
      out.push_back(spec_from_json(text));
    } catch (const ParseError& e) {
      throw ParseError(f.string() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ruleplay
