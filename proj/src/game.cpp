#include "ruleplay/game.hpp"

#include <algorithm>
#include <set>

#include "ruleplay/entities.hpp"

namespace ruleplay {

namespace {

const std::vector<std::string> kDirections = {"north", "south", "east", "west"};

bool is_direction(const std::string& w) {
  return std::find(kDirections.begin(), kDirections.end(), w) != kDirections.end();
}

}  // namespace

std::string to_string(Difficulty d) {
  switch (d) {
    case Difficulty::easy: return "easy";
    case Difficulty::medium: return "medium";
    case Difficulty::hard: return "hard";
  }
  return "easy";
}

std::string to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::in_dist: return "in_dist";
    case Split::out_dist: return "out_dist";
  }
  return "train";
}

Difficulty difficulty_from_string(const std::string& s) {
  if (s == "easy") return Difficulty::easy;
  if (s == "medium") return Difficulty::medium;
  if (s == "hard") return Difficulty::hard;
  throw InputError("unknown difficulty '" + s + "' (easy|medium|hard)");
}

Split split_from_string(const std::string& s) {
  if (s == "train") return Split::train;
  if (s == "in_dist") return Split::in_dist;
  if (s == "out_dist") return Split::out_dist;
  throw InputError("unknown split '" + s + "' (train|in_dist|out_dist)");
}

void GameSpec::validate() const {
  if (rooms.empty()) throw InputError("spec: no rooms");
  std::set<std::string> room_names;
  for (const auto& r : rooms) {
    if (r.name.empty()) throw InputError("spec: empty room name");
    if (!room_names.insert(r.name).second)
      throw InputError("spec: duplicate room '" + r.name + "'");
  }
  for (const auto& r : rooms) {
    for (const auto& [dir, dest] : r.exits) {
      if (!is_direction(dir))
        throw InputError("spec: bad exit direction '" + dir + "' in room '" +
                         r.name + "'");
      if (!room_names.count(dest))
        throw InputError("spec: exit from '" + r.name + "' to unknown room '" +
                         dest + "'");
    }
  }
  std::set<std::string> phrases;
  std::set<std::string> roots;
  std::set<std::string> holders;
  std::set<std::string> objs;
  for (const auto& e : entities) {
    if (e.phrase.empty()) throw InputError("spec: empty entity phrase");
    if (!phrases.insert(e.phrase).second)
      throw InputError("spec: duplicate entity '" + e.phrase + "'");
    if (!roots.insert(root_noun(e.phrase)).second)
      throw InputError("spec: root noun collision on '" + e.phrase + "'");
    if (e.kind == EntityKind::object) objs.insert(e.phrase);
    else holders.insert(e.phrase);
  }
  for (const auto& e : entities) {
    if (e.kind == EntityKind::object) {
      if (e.on_floor) {
        if (!room_names.count(e.location))
          throw InputError("spec: object '" + e.phrase +
                           "' on floor of unknown room '" + e.location + "'");
      } else if (!holders.count(e.location)) {
        throw InputError("spec: object '" + e.phrase + "' on unknown holder '" +
                         e.location + "'");
      }
      if (e.closed)
        throw InputError("spec: object '" + e.phrase + "' cannot be closed");
    } else {
      if (!room_names.count(e.location))
        throw InputError("spec: holder '" + e.phrase + "' in unknown room '" +
                         e.location + "'");
      if (e.closed && e.kind != EntityKind::container)
        throw InputError("spec: supporter '" + e.phrase + "' cannot be closed");
    }
  }
  for (const auto& [obj, holder] : goal_map) {
    if (!objs.count(obj))
      throw InputError("spec: goal for unknown object '" + obj + "'");
    if (!holders.count(holder))
      throw InputError("spec: goal holder '" + holder + "' not in game");
  }
  if (max_steps <= 0) throw InputError("spec: max_steps must be positive");
}

Game::Game(GameSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  reset();
}

Observation Game::reset() {
  player_room_ = spec_.rooms.front().name;
  objects_.clear();
  container_open_.clear();
  rewarded_.clear();
  object_order_.clear();
  holder_order_.clear();
  for (const auto& e : spec_.entities) {
    if (e.kind == EntityKind::object) {
      objects_[e.phrase] = ObjectState{e.location, e.on_floor, false};
      object_order_.push_back(e.phrase);
      rewarded_[e.phrase] = false;
    } else {
      holder_order_.push_back(e.phrase);
      if (e.kind == EntityKind::container)
        container_open_[e.phrase] = !e.closed;
    }
  }
  steps_ = 0;
  total_reward_ = 0.0;
  done_ = false;
  return Observation{compose(""), 0.0, false, admissible_actions()};
}

const EntitySpec& Game::entity(const std::string& phrase) const {
  for (const auto& e : spec_.entities)
    if (e.phrase == phrase) return e;
  throw InputError("game: unknown entity '" + phrase + "'");
}

bool Game::object_visible(const std::string& phrase) const {
  const auto& st = objects_.at(phrase);
  if (st.carried) return false;
  if (st.on_floor) return st.at == player_room_;
  const EntitySpec& holder = entity(st.at);
  if (holder.location != player_room_) return false;
  if (holder.kind == EntityKind::container)
    return container_open_.at(holder.phrase);
  return true;
}

bool Game::all_placed() const {
  for (const auto& [obj, holder] : spec_.goal_map) {
    const auto& st = objects_.at(obj);
    if (st.carried || st.on_floor || st.at != holder) return false;
  }
  return true;
}

std::string Game::render_room() const {
  std::vector<std::string> lines;
  lines.push_back("-= " + player_room_ + " =-");

  std::vector<std::string> here_holders;
  for (const auto& h : holder_order_)
    if (entity(h).location == player_room_) here_holders.push_back(h);

  std::vector<std::string> floor_objs;
  for (const auto& o : object_order_) {
    const auto& st = objects_.at(o);
    if (!st.carried && st.on_floor && st.at == player_room_)
      floor_objs.push_back(o);
  }

  if (here_holders.empty() && floor_objs.empty()) {
    lines.push_back("The room is empty.");
  }
  if (!here_holders.empty()) {
    lines.push_back("You see " + join_noun_list(here_holders) + ".");
  }
  for (const auto& h : here_holders) {
    const EntitySpec& hs = entity(h);
    bool open_container = hs.kind == EntityKind::container &&
                          container_open_.at(h);
    std::vector<std::string> contents;
    if (hs.kind == EntityKind::supporter || open_container) {
      for (const auto& o : object_order_) {
        const auto& st = objects_.at(o);
        if (!st.carried && !st.on_floor && st.at == h) contents.push_back(o);
      }
    }
    if (!contents.empty()) {
      const char* prep = hs.kind == EntityKind::supporter ? " on the " : " in the ";
      lines.push_back("There is " + join_noun_list(contents) + prep +
                      root_noun(h) + ".");
    }
    // Openness is only worth a sentence for containers the spec marks
    // closed at the start; everything else is open and unremarkable.
    if (hs.kind == EntityKind::container && hs.closed) {
      lines.push_back(container_open_.at(h) ? "The " + h + " is open."
                                            : "The " + h + " is closed.");
    }
  }
  if (!floor_objs.empty()) {
    lines.push_back("There is " + join_noun_list(floor_objs) + " on the floor.");
  }

  const RoomSpec* room = nullptr;
  for (const auto& r : spec_.rooms)
    if (r.name == player_room_) room = &r;
  std::vector<std::string> dirs;
  for (const auto& d : kDirections)
    if (room && room->exits.count(d)) dirs.push_back(d);
  if (dirs.size() == 1) {
    lines.push_back("There is an exit to the " + dirs[0] + ".");
  } else if (dirs.size() > 1) {
    std::string list;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      if (i > 0) list += (i + 1 == dirs.size()) ? " and " : ", ";
      list += dirs[i];
    }
    lines.push_back("There are exits to the " + list + ".");
  }

  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += lines[i];
  }
  return out;
}

std::string Game::render_inventory() const {
  std::vector<std::string> carried;
  for (const auto& o : object_order_)
    if (objects_.at(o).carried) carried.push_back(o);
  if (carried.empty()) return "You are carrying nothing.";
  return "You are carrying: " + join_noun_list(carried) + ".";
}

std::string Game::compose(const std::string& response) const {
  std::string out;
  if (!response.empty()) out = response + "\n";
  out += render_room();
  out += '\n';
  out += render_inventory();
  return out;
}

std::vector<ActionCommand> Game::admissible_actions() const {
  std::vector<ActionCommand> out;
  if (done_) return out;
  out.push_back(make_command(verb::look));
  out.push_back(make_command(verb::inventory));

  std::vector<std::string> here_holders;
  for (const auto& h : holder_order_)
    if (entity(h).location == player_room_) here_holders.push_back(h);

  for (const auto& h : here_holders) out.push_back(make_command(verb::examine, {h}));
  for (const auto& o : object_order_) {
    const auto& st = objects_.at(o);
    if (st.carried || object_visible(o))
      out.push_back(make_command(verb::examine, {o}));
  }
  for (const auto& h : here_holders) {
    const EntitySpec& hs = entity(h);
    if (hs.kind == EntityKind::container && !container_open_.at(h))
      out.push_back(make_command(verb::open, {h}));
  }
  const RoomSpec* room = nullptr;
  for (const auto& r : spec_.rooms)
    if (r.name == player_room_) room = &r;
  for (const auto& d : kDirections)
    if (room && room->exits.count(d)) out.push_back(make_command(verb::go, {d}));

  for (const auto& o : object_order_) {
    const auto& st = objects_.at(o);
    if (!st.carried && st.on_floor && st.at == player_room_)
      out.push_back(make_command(verb::take, {o}));
  }
  for (const auto& o : object_order_) {
    const auto& st = objects_.at(o);
    if (!st.carried && !st.on_floor && object_visible(o))
      out.push_back(make_command(verb::take, {o, st.at}));
  }
  for (const auto& o : object_order_) {
    if (!objects_.at(o).carried) continue;
    for (const auto& h : here_holders) {
      const EntitySpec& hs = entity(h);
      if (hs.kind == EntityKind::supporter)
        out.push_back(make_command(verb::put, {o, h}));
      else if (container_open_.at(h))
        out.push_back(make_command(verb::insert, {o, h}));
    }
  }
  return out;
}

Observation Game::step(const ActionCommand& action) {
  if (done_) throw InputError("step: episode already finished");
  if (!well_formed(action))
    throw InputError("step: malformed action '" + action.verb + "/" +
                     std::to_string(action.args.size()) + "'");

  const auto adm = admissible_actions();
  const bool admissible =
      std::find(adm.begin(), adm.end(), action) != adm.end();

  std::string response;
  double reward = 0.0;
  if (!admissible) {
    response = "Nothing happens.";
  } else if (action.verb == verb::look) {
    response = "";
  } else if (action.verb == verb::inventory) {
    response = "";
  } else if (action.verb == verb::examine) {
    response = "You see nothing special about the " + action.args[0] + ".";
  } else if (action.verb == verb::go) {
    const RoomSpec* room = nullptr;
    for (const auto& r : spec_.rooms)
      if (r.name == player_room_) room = &r;
    player_room_ = room->exits.at(action.args[0]);
    response = "You go " + action.args[0] + ".";
  } else if (action.verb == verb::open) {
    container_open_[action.args[0]] = true;
    response = "You open the " + action.args[0] + ".";
  } else if (action.verb == verb::take) {
    auto& st = objects_.at(action.args[0]);
    st.carried = true;
    st.on_floor = false;
    st.at.clear();
    response = "You take the " + action.args[0] + ".";
  } else {  // put | insert
    auto& st = objects_.at(action.args[0]);
    st.carried = false;
    st.on_floor = false;
    st.at = action.args[1];
    const char* prep = action.verb == verb::put ? " on the " : " into the ";
    response = "You put the " + action.args[0] + prep +
               root_noun(action.args[1]) + ".";
    auto goal = spec_.goal_map.find(action.args[0]);
    if (goal != spec_.goal_map.end() && goal->second == action.args[1] &&
        !rewarded_.at(action.args[0])) {
      rewarded_[action.args[0]] = true;
      reward = 1.0;
    }
  }

  total_reward_ += reward;
  ++steps_;
  if (reward > 0.0) response += "\nYour score has just gone up by one point.";
  done_ = all_placed() || steps_ >= spec_.max_steps;
  return Observation{compose(response), reward, done_, admissible_actions()};
}

FactSet Game::oracle_facts() const {
  FactSet facts;
  std::vector<std::string> here_holders;
  for (const auto& h : holder_order_)
    if (entity(h).location == player_room_) here_holders.push_back(h);
  // be-located-at is unary and names the located thing; holders are scenery
  // and never produce location facts.
  for (const auto& o : object_order_)
    if (object_visible(o)) facts.push_back(fact1(pred::be_located_at, o));
  for (const auto& o : object_order_)
    if (objects_.at(o).carried) facts.push_back(fact1(pred::carry, o));
  const RoomSpec* room = nullptr;
  for (const auto& r : spec_.rooms)
    if (r.name == player_room_) room = &r;
  for (const auto& d : kDirections)
    if (room && room->exits.count(d)) facts.push_back(fact1(pred::direction, d));
  for (const auto& h : here_holders) {
    const EntitySpec& hs = entity(h);
    if (hs.kind == EntityKind::container && hs.closed && container_open_.at(h))
      facts.push_back(fact1(pred::open, h));
  }
  canonicalize(facts);
  return facts;
}

std::string Game::state_key() const {
  std::string key = player_room_;
  for (const auto& [phrase, st] : objects_) {
    key += '\x1f';
    key += phrase;
    key += '=';
    key += st.carried ? "~carried" : st.at;
    if (st.on_floor) key += "~floor";
  }
  for (const auto& [phrase, open] : container_open_) {
    key += '\x1f';
    key += phrase;
    key += open ? "~open" : "~closed";
  }
  for (const auto& [phrase, latched] : rewarded_) {
    if (!latched) continue;
    key += '\x1f';
    key += phrase;
    key += "~done";
  }
  return key;
}

double Game::replay(const std::vector<ActionCommand>& actions) {
  reset();
  for (const auto& a : actions) {
    if (done_) break;
    step(a);
  }
  return total_reward_;
}

}  // namespace ruleplay
