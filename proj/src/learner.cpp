#include "ruleplay/learner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "ruleplay/entities.hpp"
#include "ruleplay/rng.hpp"

namespace ruleplay {

std::vector<double> compute_returns(const std::vector<double>& rewards,
                                    double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw InputError("returns: gamma must lie in [0, 1]");
  std::vector<double> g(rewards.size(), 0.0);
  double acc = 0.0;
  for (std::size_t i = rewards.size(); i > 0; --i) {
    acc = rewards[i - 1] + gamma * acc;
    g[i - 1] = acc;
  }
  return g;
}

Templates extract_templates(const Buffer& buffer) {
  if (buffer.empty()) throw InputError("templates: empty buffer");
  Templates t;
  for (const auto& tr : buffer) {
    for (const auto& f : tr.state)
      t.state_predicates.push_back(
          {f.predicate, static_cast<int>(f.args.size())});
    for (const auto& a : tr.admissible)
      t.action_predicates.push_back(a.predicate());
  }
  std::sort(t.state_predicates.begin(), t.state_predicates.end());
  t.state_predicates.erase(
      std::unique(t.state_predicates.begin(), t.state_predicates.end()),
      t.state_predicates.end());
  std::sort(t.action_predicates.begin(), t.action_predicates.end());
  t.action_predicates.erase(
      std::unique(t.action_predicates.begin(), t.action_predicates.end()),
      t.action_predicates.end());
  return t;
}

std::vector<Literal> candidate_literals(const ActionPredicate& action,
                                        const std::vector<PredicateSig>& P,
                                        bool include_negated) {
  std::vector<Literal> out;
  for (const auto& p : P) {
    if (p.arity == 1) {
      if (action.arity >= 1) out.push_back({p.name, {Var::x}, false, {}});
      if (action.arity == 2) out.push_back({p.name, {Var::y}, false, {}});
    } else if (p.arity == 2 && action.arity == 2) {
      out.push_back({p.name, {Var::x, Var::y}, false, {}});
    }
  }
  if (include_negated) {
    std::size_t positives = out.size();
    for (std::size_t i = 0; i < positives; ++i) {
      Literal neg = out[i];
      neg.negated = true;
      out.push_back(std::move(neg));
    }
  }
  return out;
}

namespace {

// Per transition: candidate truth rows for every admissible grounding of
// the model's predicate, plus the taken grounding's row index.
struct TruthTables {
  std::vector<std::vector<std::vector<double>>> rows;
  std::vector<std::size_t> taken;
};

TruthTables build_tables(const std::vector<Literal>& candidates,
                         const ActionPredicate& action, const Buffer& b_a) {
  TruthTables tt;
  tt.rows.reserve(b_a.size());
  tt.taken.reserve(b_a.size());
  for (const auto& tr : b_a) {
    if (tr.action.predicate() != action)
      throw InputError("train: sub-buffer contains foreign action '" +
                       to_string(tr.action.predicate()) + "'");
    std::vector<std::vector<double>> rows;
    std::size_t taken = std::numeric_limits<std::size_t>::max();
    for (const auto& adm : tr.admissible) {
      if (adm.predicate() != action) continue;
      std::vector<double> row(candidates.size());
      for (std::size_t k = 0; k < candidates.size(); ++k)
        row[k] = match_literal(candidates[k], adm.args, tr.state);
      if (adm == tr.action) taken = rows.size();
      rows.push_back(std::move(row));
    }
    if (taken == std::numeric_limits<std::size_t>::max())
      throw InputError("train: taken action missing from admissible set");
    tt.rows.push_back(std::move(rows));
    tt.taken.push_back(taken);
  }
  return tt;
}

// Mean of -g_t log pi over the buffer; optionally accumulates the mean
// gradient. The likelihood floor epsilon keeps log finite; floored values
// carry no gradient.
double nll_pass(const ConjunctionNeuron& neuron, const TruthTables& tt,
                const Buffer& b_a, double eps, ParamGrad* grad) {
  double loss = 0.0;
  for (std::size_t t = 0; t < b_a.size(); ++t) {
    const auto& rows = tt.rows[t];
    const std::size_t j = tt.taken[t];
    std::vector<double> f(rows.size());
    double S = 0.0;
    for (std::size_t g = 0; g < rows.size(); ++g) {
      f[g] = std::max(neuron.forward(rows[g]), eps);
      S += f[g];
    }
    loss += -b_a[t].g * (std::log(f[j]) - std::log(S));
    if (!grad) continue;
    // The taken grounding always keeps its likelihood gradient. When the
    // forward clamps to zero the subgradient would vanish and the transition
    // would degrade into a pure vote to suppress every competitor, which is
    // how fits freeze with all forwards floored; instead the taken grounding
    // falls back to the affine corner gradient (the same convention the
    // constraint penalty uses). Both likelihood levers, 1/f for the taken
    // grounding and 1/S for the normalizer, saturate at the noise band
    // 1-alpha: below that the rule already counts the grounding as logically
    // rejected, extra sharpening carries no extra gradient, and a transition
    // whose every grounding is rejected goes exactly neutral instead of
    // blowing up the suppression term as S collapses toward the floor.
    const double band = 1.0 - neuron.config().alpha;
    const double s_lever = 1.0 / std::max(S, band);
    for (std::size_t g = 0; g < rows.size(); ++g) {
      if (g == j) {
        double coeff = 1.0 / std::max(f[j], band) - s_lever;
        ParamGrad pg = neuron.param_grad(rows[g]);
        if (neuron.affine(rows[g]) <= 0.0) {
          pg = ParamGrad(rows[g].size());
          for (std::size_t k = 0; k < rows[g].size(); ++k)
            pg.w[k] = -(1.0 - rows[g][k]);
          pg.beta = 1.0;
        }
        grad->add_scaled(pg, -b_a[t].g * coeff);
        continue;
      }
      if (f[g] <= eps) continue;  // floored or clamped at 0: no gradient
      ParamGrad pg = neuron.param_grad(rows[g]);
      grad->add_scaled(pg, b_a[t].g * s_lever);
    }
  }
  double n = static_cast<double>(b_a.size());
  loss /= n;
  if (grad) grad->scale(1.0 / n);
  return loss;
}

}  // namespace

RuleModel make_rule_model(const ActionPredicate& action,
                          const std::vector<PredicateSig>& P,
                          const TrainOptions& options) {
  RuleModel m;
  m.action = action;
  m.candidates = candidate_literals(action, P, options.include_negated);
  if (!m.candidates.empty())
    m.neuron.emplace(m.candidates.size(),
                     ConjunctionConfig{options.alpha, options.lambda});
  return m;
}

Buffer sub_buffer(const Buffer& buffer, const ActionPredicate& action) {
  Buffer out;
  for (const auto& tr : buffer)
    if (tr.action.predicate() == action) out.push_back(tr);
  return out;
}

void train_rule(RuleModel& model, const Buffer& b_a,
                const TrainOptions& options) {
  if (b_a.empty()) {
    model.empty_buffer = true;
    return;
  }
  if (model.candidates.empty()) {
    model.trained = true;  // nothing to fit: bodyless always-true rule
    return;
  }
  TruthTables tt = build_tables(model.candidates, model.action, b_a);
  ConjunctionNeuron& neuron = *model.neuron;

  if (options.empirical_init) {
    std::vector<double> w(model.candidates.size(), 0.0);
    for (std::size_t t = 0; t < b_a.size(); ++t)
      for (std::size_t k = 0; k < w.size(); ++k)
        w[k] += tt.rows[t][tt.taken[t]][k];
    for (auto& v : w) v /= static_cast<double>(b_a.size());
    // Negated literals start at zero regardless of their taken-mean: the
    // complement of a constant-false literal is constant-true, which the
    // mean would hand a full frozen weight (constant inputs get no gradient).
    // They earn weight only from discriminative pressure.
    for (std::size_t k = 0; k < w.size(); ++k)
      if (model.candidates[k].negated) w[k] = 0.0;
    neuron.set_parameters(std::move(w), 1.0);
  }

  bool any_return = false;
  for (const auto& tr : b_a)
    if (tr.g != 0.0) { any_return = true; break; }
  if (!any_return) {
    model.trained = true;  // zero loss gradient: parameters stay at init
    return;
  }

  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    ParamGrad grad(model.candidates.size());
    nll_pass(neuron, tt, b_a, options.epsilon, &grad);
    neuron.update(grad, options.lr);
    // Rule fits keep the clause falsifiable: with a crisp literal at weight 1
    // the single-low truth-table constraint reduces to beta <= 1, and without
    // it the junk credit in the buffer inflates beta until every forward
    // clamps at 1 and the fit freezes on an unfalsifiable plateau.
    if (neuron.beta() > 1.0) {
      std::vector<double> w = neuron.weights();
      neuron.set_parameters(std::move(w), 1.0);
    }
  }
  model.trained = true;
}

double evaluation_loss(const RuleModel& model, const Buffer& b_a,
                       const TrainOptions& options) {
  if (b_a.empty()) throw InputError("loss: empty buffer");
  if (model.candidates.empty()) return 0.0;
  TruthTables tt = build_tables(model.candidates, model.action, b_a);
  return nll_pass(*model.neuron, tt, b_a, options.epsilon, nullptr);
}

namespace {

// Return-weighted affine margin by which the model rejects its own taken
// groundings: sum of g * max(0, -affine(taken)). Transitions with a single
// admissible grounding have pi = 1 tautologically and floored forwards all
// clamp to the same epsilon, so the likelihood ties across very different
// models; the unclamped margin still grades how hard each model contradicts
// the evidence it was fit to.
double rejection_margin(const RuleModel& model, const Buffer& b_a) {
  TruthTables tt = build_tables(model.candidates, model.action, b_a);
  double mass = 0.0;
  for (std::size_t t = 0; t < b_a.size(); ++t) {
    double affine = model.neuron->affine(tt.rows[t][tt.taken[t]]);
    if (affine < 0.0) mass += b_a[t].g * -affine;
  }
  return mass;
}

}  // namespace

namespace {

bool state_mentions(const FactSet& state, const PredicateSig& p) {
  for (const auto& f : state)
    if (static_cast<int>(f.args.size()) == p.arity && f.predicate == p.name)
      return true;
  return false;
}

}  // namespace

RuleModel train_with_outlier_rejection(const ActionPredicate& action,
                                       const Buffer& b_a,
                                       const std::vector<PredicateSig>& P,
                                       const OutlierOptions& outlier,
                                       const TrainOptions& options) {
  if (outlier.k_percent <= 0.0 || outlier.k_percent > 100.0)
    throw InputError("outlier rejection: k_percent must lie in (0, 100]");
  if (outlier.min_support < 0.0 || outlier.min_support > 1.0)
    throw InputError("outlier rejection: min_support must lie in [0, 1]");
  if (b_a.empty()) {
    RuleModel m = make_rule_model(action, P, options);
    m.empty_buffer = true;
    return m;
  }

  RuleModel best;
  double best_loss = std::numeric_limits<double>::infinity();
  double best_rejected = std::numeric_limits<double>::infinity();
  bool have = false;
  for (const auto& p : P) {
    Buffer subset;
    for (const auto& tr : b_a)
      if (state_mentions(tr.state, p)) subset.push_back(tr);
    if (static_cast<double>(subset.size()) <
        outlier.min_support * static_cast<double>(b_a.size()))
      continue;
    std::stable_sort(subset.begin(), subset.end(),
                     [](const Transition& a, const Transition& b) {
                       return a.g > b.g;
                     });
    std::size_t keep = static_cast<std::size_t>(
        std::ceil(outlier.k_percent / 100.0 * static_cast<double>(subset.size())));
    keep = std::max<std::size_t>(1, std::min(keep, subset.size()));
    subset.resize(keep);

    RuleModel m = make_rule_model(action, P, options);
    train_rule(m, subset, options);
    double loss = evaluation_loss(m, b_a, options);
    double rejected = rejection_margin(m, b_a);
    if (!have || loss < best_loss ||
        (loss == best_loss && rejected < best_rejected)) {
      best = std::move(m);
      best_loss = loss;
      best_rejected = rejected;
      have = true;
    }
  }
  if (!have) {
    RuleModel m = make_rule_model(action, P, options);
    train_rule(m, b_a, options);
    m.fallback = true;
    return m;
  }
  return best;
}

HornRule extract_crisp_rule(const RuleModel& model, double tau) {
  HornRule rule;
  rule.head = model.action;
  rule.source = HornRule::Source::learned;
  if (!model.neuron) return rule;
  const auto& w = model.neuron->weights();
  for (std::size_t k = 0; k < model.candidates.size(); ++k) {
    if (w[k] < tau) continue;
    Literal lit = model.candidates[k];
    lit.weight = w[k];
    rule.body.push_back(std::move(lit));
  }
  rule.bias = model.neuron->beta();
  return rule;
}

HornRule weighted_rule(const RuleModel& model) {
  HornRule rule;
  rule.head = model.action;
  rule.source = HornRule::Source::learned;
  if (!model.neuron) return rule;
  const auto& w = model.neuron->weights();
  for (std::size_t k = 0; k < model.candidates.size(); ++k) {
    Literal lit = model.candidates[k];
    lit.weight = w[k];
    rule.body.push_back(std::move(lit));
  }
  rule.bias = model.neuron->beta();
  return rule;
}

EpisodePlay play_episode(const RulePolicy& policy, const GameSpec& spec,
                         std::size_t spec_index, const PlayOptions& options) {
  Game game(spec);
  Rng rng(options.seed);

  bool noisy = options.noise.p_drop > 0.0 || options.noise.p_swap > 0.0;
  std::optional<NoiseModel> noise;
  if (noisy) {
    std::vector<std::string> pool;
    for (const auto& e : spec.entities) pool.push_back(e.phrase);
    std::sort(pool.begin(), pool.end());
    NoiseConfig cfg = options.noise;
    cfg.seed = derive_seed(options.seed, 0x6e6f6973);  // per-episode stream
    noise.emplace(cfg, std::move(pool));
  }

  FactSet subgraph;
  if (options.graph)
    subgraph = options.graph->subgraph_for(spec, options.include_distractors);

  EpisodePlay out;
  out.record.spec_index = spec_index;
  out.record.max_reward = static_cast<double>(spec.goal_map.size());

  Observation obs = game.reset();
  std::vector<double> rewards;
  std::size_t step = 0;
  // Commands already issued per engine state; greedy collection treats
  // them as banned so deterministic loops degrade to the next-best action.
  std::map<std::string, std::set<std::string>> tried;
  while (!obs.done) {
    FactSet s = parse_observation(obs.text);
    s.insert(s.end(), subgraph.begin(), subgraph.end());
    canonicalize(s);
    if (noise) s = noise->apply(s);

    Transition tr;
    tr.state = s;
    tr.admissible = obs.admissible;
    if (policy.config().act_greedy) {
      const auto& pc = policy.config();
      std::string key = game.state_key();
      if (pc.explore > 0.0 && rng.uniform() < pc.explore) {
        std::vector<const ActionCommand*> pool;
        for (const auto& a : obs.admissible)
          if (!pc.allowed || pc.allowed->count(a.predicate()) > 0)
            pool.push_back(&a);
        if (pool.empty())
          for (const auto& a : obs.admissible) pool.push_back(&a);
        tr.action = *pool[rng.bounded(pool.size())];
      } else {
        tr.action = policy.greedy(obs.admissible, s, &tried[key]);
      }
      tried[key].insert(render_command(tr.action));
    } else {
      tr.action = policy.sample(obs.admissible, s, rng);
    }
    tr.step = step++;
    out.record.actions.push_back(tr.action);

    obs = game.step(tr.action);
    tr.reward = obs.reward;
    rewards.push_back(obs.reward);
    out.transitions.push_back(std::move(tr));
  }
  auto g = compute_returns(rewards, options.gamma);
  for (std::size_t i = 0; i < g.size(); ++i) out.transitions[i].g = g[i];
  out.record.total_reward = game.total_reward();
  return out;
}

CollectResult collect(const RulePolicy& policy,
                      const std::vector<GameSpec>& specs, std::size_t episodes,
                      const PlayOptions& options) {
  if (specs.empty()) throw InputError("collect: no game specs");
  if (episodes == 0) throw InputError("collect: episodes must be positive");
  CollectResult out;
  for (std::size_t e = 0; e < episodes; ++e) {
    PlayOptions po = options;
    po.seed = derive_seed(options.seed, e);
    auto ep = play_episode(policy, specs[e % specs.size()], e % specs.size(), po);
    for (auto& tr : ep.transitions) {
      tr.episode = e;
      out.buffer.push_back(std::move(tr));
    }
    out.episodes.push_back(std::move(ep.record));
  }
  return out;
}

}  // namespace ruleplay
