#include "ruleplay/policy.hpp"

#include <algorithm>
#include <tuple>

#include "ruleplay/entities.hpp"
#include "ruleplay/lnn.hpp"

namespace ruleplay {

double match_literal(const Literal& lit, const std::vector<std::string>& binding,
                     const FactSet& facts) {
  std::vector<std::string> bound;
  for (Var v : lit.vars) {
    std::size_t idx = v == Var::x ? 0 : 1;
    if (idx >= binding.size())
      throw InputError("match: unbound variable '" + to_string(v) + "' in '" +
                       lit.predicate + "'");
    bound.push_back(binding[idx]);
  }
  bool found = false;
  for (const auto& f : facts) {
    if (f.predicate != lit.predicate || f.args.size() != bound.size()) continue;
    bool all = true;
    for (std::size_t i = 0; i < bound.size(); ++i)
      if (!same_root(f.args[i], bound[i])) { all = false; break; }
    if (all) { found = true; break; }
  }
  double v = found ? 1.0 : 0.0;
  return lit.negated ? 1.0 - v : v;
}

double score_action(const RuleSet& rules, const ActionCommand& action,
                    const FactSet& facts, bool weighted) {
  const HornRule* rule = rules.find(action.predicate());
  if (!rule) return 0.0;
  if (rule->body.empty()) {
    if (!weighted) return 1.0;
    return std::clamp(rule->bias.value_or(1.0), 0.0, 1.0);
  }
  std::vector<double> truths;
  truths.reserve(rule->body.size());
  for (const auto& lit : rule->body)
    truths.push_back(match_literal(lit, action.args, facts));

  if (!weighted) {
    for (double t : truths)
      if (t < 1.0) return 0.0;
    return 1.0;
  }
  ConjunctionNeuron neuron(rule->body.size());
  std::vector<double> w(rule->body.size(), 1.0);
  for (std::size_t k = 0; k < rule->body.size(); ++k) {
    // Negated literals stay crisp gates; their annotations are ignored.
    if (!rule->body[k].negated && rule->body[k].weight) w[k] = *rule->body[k].weight;
  }
  neuron.set_parameters(std::move(w), rule->bias.value_or(1.0));
  return neuron.forward(truths);
}

RulePolicy::RulePolicy(RuleSet rules, PolicyConfig config)
    : rules_(std::move(rules)), config_(std::move(config)) {
  if (config_.explore < 0.0 || config_.explore > 1.0)
    throw InputError("policy: explore must lie in [0, 1]");
}

bool RulePolicy::action_allowed(const ActionCommand& a) const {
  return !config_.allowed || config_.allowed->count(a.predicate()) > 0;
}

std::vector<double> RulePolicy::distribution(
    const std::vector<ActionCommand>& admissible, const FactSet& facts) const {
  if (admissible.empty()) throw InputError("policy: no admissible actions");
  std::vector<double> probs(admissible.size(), 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < admissible.size(); ++i) {
    if (!action_allowed(admissible[i])) continue;
    probs[i] = score_action(rules_, admissible[i], facts, config_.weighted);
    sum += probs[i];
  }
  std::size_t n_allowed = 0;
  for (const auto& a : admissible) n_allowed += action_allowed(a) ? 1 : 0;
  if (sum > 0.0) {
    for (auto& p : probs) p /= sum;
  } else if (n_allowed == 0) {
    // Zero likelihood everywhere and the allowed set filtered everything
    // out: uniform over all admissible.
    std::fill(probs.begin(), probs.end(), 1.0 / admissible.size());
  } else {
    for (std::size_t i = 0; i < admissible.size(); ++i)
      probs[i] = action_allowed(admissible[i]) ? 1.0 / n_allowed : 0.0;
  }
  if (config_.explore > 0.0 && n_allowed > 0) {
    for (std::size_t i = 0; i < admissible.size(); ++i) {
      probs[i] *= 1.0 - config_.explore;
      if (action_allowed(admissible[i]))
        probs[i] += config_.explore / static_cast<double>(n_allowed);
    }
  }
  return probs;
}

ActionCommand RulePolicy::greedy(const std::vector<ActionCommand>& admissible,
                                 const FactSet& facts,
                                 const std::set<std::string>* banned) const {
  auto probs = distribution(admissible, facts);
  const ActionCommand* pick = nullptr;
  for (int pass = banned ? 0 : 1; pass < 2 && !pick; ++pass) {
    double best = 0.0;
    std::tuple<int, int, std::string> pick_key;
    bool have_best = false;
    for (std::size_t i = 0; i < admissible.size(); ++i) {
      const auto& a = admissible[i];
      std::string rendered = render_command(a);
      if (pass == 0 && banned->count(rendered) > 0) continue;
      if (have_best && probs[i] < best) continue;
      std::tuple<int, int, std::string> key{a.verb == verb::go ? 1 : 0,
                                            static_cast<int>(a.args.size()),
                                            std::move(rendered)};
      if (!have_best || probs[i] > best || key < pick_key) {
        pick = &a;
        pick_key = std::move(key);
        best = probs[i];
        have_best = true;
      }
    }
  }
  return *pick;
}

ActionCommand RulePolicy::sample(const std::vector<ActionCommand>& admissible,
                                 const FactSet& facts, Rng& rng) const {
  if (config_.act_greedy) {
    if (config_.explore <= 0.0 || rng.uniform() >= config_.explore)
      return greedy(admissible, facts);
    std::vector<const ActionCommand*> pool;
    for (const auto& a : admissible)
      if (action_allowed(a)) pool.push_back(&a);
    if (pool.empty())
      for (const auto& a : admissible) pool.push_back(&a);
    return *pool[rng.bounded(pool.size())];
  }
  auto probs = distribution(admissible, facts);
  double u = rng.uniform();
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    last_positive = i;
    acc += probs[i];
    if (u < acc) return admissible[i];
  }
  return admissible[last_positive];
}

}  // namespace ruleplay
