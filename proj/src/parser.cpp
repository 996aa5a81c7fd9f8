#include "ruleplay/parser.hpp"

#include <algorithm>

#include "ruleplay/entities.hpp"
#include "ruleplay/rng.hpp"

namespace ruleplay {

namespace {

const std::vector<std::string> kDirections = {"north", "south", "east", "west"};

bool is_direction(const std::string& w) {
  return std::find(kDirections.begin(), kDirections.end(), w) != kDirections.end();
}

bool starts_with(const std::string& s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string strip_article(const std::string& item, const std::string& line) {
  if (starts_with(item, "an ")) return item.substr(3);
  if (starts_with(item, "a ")) return item.substr(2);
  throw ParseError("parse_observation: missing article in noun list of: " + line);
}

// "a x, a y and a z" -> {x, y, z}. Entity phrases must not contain the
// list separators themselves.
std::vector<std::string> split_noun_list(const std::string& list,
                                         const std::string& line) {
  std::vector<std::string> items;
  for (auto& part : split(list, ", ")) items.push_back(part);
  if (!items.empty()) {
    std::string last = items.back();
    items.pop_back();
    for (auto& part : split(last, " and "))
      items.push_back(part);
  }
  std::vector<std::string> out;
  for (const auto& item : items) out.push_back(strip_article(item, line));
  return out;
}

// Matches "<prefix><middle><suffix>" and returns the middle.
bool extract(const std::string& line, std::string_view prefix,
             std::string_view suffix, std::string& middle) {
  if (!starts_with(line, prefix) || !ends_with(line, suffix)) return false;
  if (line.size() < prefix.size() + suffix.size()) return false;
  middle = line.substr(prefix.size(), line.size() - prefix.size() - suffix.size());
  return !middle.empty();
}

void parse_line(const std::string& line, FactSet& facts) {
  std::string mid;
  // Templates with no fact content.
  if (starts_with(line, "-= ") && ends_with(line, " =-")) return;
  if (line == "The room is empty.") return;
  if (line == "Nothing happens.") return;
  if (line == "Your score has just gone up by one point.") return;
  if (line == "You are carrying nothing.") return;
  if (extract(line, "You see nothing special about the ", ".", mid)) return;
  if (extract(line, "You take the ", ".", mid)) return;
  if (extract(line, "You put the ", ".", mid)) return;
  if (extract(line, "You open the ", ".", mid)) return;
  if (extract(line, "You go ", ".", mid)) return;
  if (extract(line, "The ", " is closed.", mid)) return;
  // Holder enumerations are scenery; be-located-at names located objects
  // only, so this template contributes no facts.
  if (extract(line, "You see ", ".", mid)) return;

  if (extract(line, "The ", " is open.", mid)) {
    facts.push_back(fact1(pred::open, mid));
    return;
  }
  if (extract(line, "You are carrying: ", ".", mid)) {
    for (auto& e : split_noun_list(mid, line))
      facts.push_back(fact1(pred::carry, e));
    return;
  }
  if (extract(line, "There is ", " on the floor.", mid)) {
    for (auto& e : split_noun_list(mid, line))
      facts.push_back(fact1(pred::be_located_at, e));
    return;
  }
  if (extract(line, "There is an exit to the ", ".", mid)) {
    if (!is_direction(mid))
      throw ParseError("parse_observation: unknown direction '" + mid + "'");
    facts.push_back(fact1(pred::direction, mid));
    return;
  }
  if (extract(line, "There are exits to the ", ".", mid)) {
    for (auto& part : split(mid, ", ")) {
      for (auto& d : split(part, " and ")) {
        if (!is_direction(d))
          throw ParseError("parse_observation: unknown direction '" + d + "'");
        facts.push_back(fact1(pred::direction, d));
      }
    }
    return;
  }
  // Holder contents; the holder is referenced by root noun and the facts
  // stay unary, so only the object list matters.
  if (starts_with(line, "There is ") && ends_with(line, ".")) {
    std::string body = line.substr(9, line.size() - 10);
    for (auto sep : {std::string(" on the "), std::string(" in the ")}) {
      std::size_t pos = body.rfind(sep);
      if (pos != std::string::npos) {
        for (auto& e : split_noun_list(body.substr(0, pos), line))
          facts.push_back(fact1(pred::be_located_at, e));
        return;
      }
    }
  }
  throw ParseError("parse_observation: unknown sentence: " + line);
}

}  // namespace

FactSet parse_observation(const std::string& text) {
  FactSet facts;
  for (const auto& raw : split(text, "\n")) {
    std::string line = trim(raw);
    if (line.empty()) continue;
    parse_line(line, facts);
  }
  canonicalize(facts);
  return facts;
}

ActionCommand parse_action(const std::string& command) {
  std::string c = trim(command);
  if (c.empty()) throw ParseError("parse_action: empty command");
  if (c == "look") return make_command(verb::look);
  if (c == "inventory") return make_command(verb::inventory);

  std::size_t sp = c.find(' ');
  std::string v = c.substr(0, sp);
  std::string rest = sp == std::string::npos ? "" : c.substr(sp + 1);
  auto need_rest = [&]() {
    if (rest.empty())
      throw ParseError("parse_action: verb '" + v + "' needs an argument: " + c);
  };
  if (v == verb::go) {
    need_rest();
    if (!is_direction(rest))
      throw ParseError("parse_action: unknown direction '" + rest + "'");
    return make_command(verb::go, {rest});
  }
  if (v == verb::open || v == verb::examine) {
    need_rest();
    return make_command(v, {rest});
  }
  if (v == verb::take) {
    need_rest();
    std::size_t pos = rest.find(" from ");
    if (pos == std::string::npos) return make_command(verb::take, {rest});
    return make_command(verb::take, {rest.substr(0, pos), rest.substr(pos + 6)});
  }
  if (v == verb::put) {
    need_rest();
    std::size_t pos = rest.find(" on ");
    if (pos == std::string::npos)
      throw ParseError("parse_action: expected 'put <x> on <y>': " + c);
    return make_command(verb::put, {rest.substr(0, pos), rest.substr(pos + 4)});
  }
  if (v == verb::insert) {
    need_rest();
    std::size_t pos = rest.find(" into ");
    if (pos == std::string::npos)
      throw ParseError("parse_action: expected 'insert <x> into <y>': " + c);
    return make_command(verb::insert, {rest.substr(0, pos), rest.substr(pos + 6)});
  }
  throw ParseError("parse_action: unknown verb '" + v + "' in: " + c);
}

NoiseModel::NoiseModel(NoiseConfig config, std::vector<std::string> pool)
    : config_(config), pool_(std::move(pool)), state_(config.seed) {
  if (config_.p_drop < 0.0 || config_.p_drop > 1.0)
    throw InputError("noise: p_drop must be in [0, 1]");
  if (config_.p_swap < 0.0 || config_.p_swap > 1.0)
    throw InputError("noise: p_swap must be in [0, 1]");
  if (config_.p_swap > 0.0 && pool_.empty())
    throw InputError("noise: p_swap needs a nonempty entity pool");
}

FactSet NoiseModel::apply(const FactSet& facts) {
  FactSet in = facts;
  canonicalize(in);
  Rng rng(state_);
  FactSet out;
  for (const auto& f : in) {
    if (config_.p_drop > 0.0 && rng.bernoulli(config_.p_drop)) continue;
    SymbolicFact g = f;
    for (auto& arg : g.args) {
      if (config_.p_swap > 0.0 && rng.bernoulli(config_.p_swap))
        arg = pool_[rng.bounded(pool_.size())];
    }
    out.push_back(std::move(g));
  }
  state_ = rng.next_u64();
  canonicalize(out);
  return out;
}

FactSet apply_noise(const FactSet& facts, const NoiseConfig& config,
                    std::vector<std::string> pool) {
  NoiseModel model(config, std::move(pool));
  return model.apply(facts);
}

}  // namespace ruleplay
