#include "ruleplay/actions.hpp"

#include "ruleplay/entities.hpp"

namespace ruleplay {

std::string to_string(const ActionPredicate& p) {
  return p.verb + "/" + std::to_string(p.arity);
}

bool well_formed(const ActionCommand& a) {
  const std::size_t n = a.args.size();
  if (a.verb == verb::go) return n == 1;
  if (a.verb == verb::take) return n == 1 || n == 2;
  if (a.verb == verb::put) return n == 2;
  if (a.verb == verb::insert) return n == 2;
  if (a.verb == verb::open) return n == 1;
  if (a.verb == verb::examine) return n == 1;
  if (a.verb == verb::look) return n == 0;
  if (a.verb == verb::inventory) return n == 0;
  return false;
}

std::string render_command(const ActionCommand& a) {
  if (!well_formed(a)) {
    throw InputError("render_command: malformed action " + a.verb + "/" +
                     std::to_string(a.args.size()));
  }
  if (a.verb == verb::look || a.verb == verb::inventory) return a.verb;
  if (a.verb == verb::take && a.args.size() == 2)
    return "take " + a.args[0] + " from " + a.args[1];
  if (a.verb == verb::put) return "put " + a.args[0] + " on " + a.args[1];
  if (a.verb == verb::insert) return "insert " + a.args[0] + " into " + a.args[1];
  return a.verb + " " + a.args[0];
}

ActionCommand make_command(std::string verb, std::vector<std::string> args) {
  return ActionCommand{std::move(verb), std::move(args)};
}

}  // namespace ruleplay
