#include "ruleplay/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ruleplay/entities.hpp"
#include "ruleplay/parser.hpp"
#include "ruleplay/policy.hpp"
#include "ruleplay/rng.hpp"
#include "ruleplay/rules_io.hpp"

namespace ruleplay {

namespace {

constexpr std::uint64_t kGenStream = 0x67616d65;   // "game"
constexpr std::uint64_t kEvalStream = 0x6576616c;  // "eval"

bool has_container_goal(const GameSpec& spec) {
  for (const auto& [object, holder] : spec.goal_map)
    for (const auto& e : spec.entities)
      if (e.phrase == holder && e.kind == EntityKind::container) return true;
  return false;
}

bool has_supporter_goal(const GameSpec& spec) {
  for (const auto& [object, holder] : spec.goal_map)
    for (const auto& e : spec.entities)
      if (e.phrase == holder && e.kind == EntityKind::supporter) return true;
  return false;
}

bool set_exercises_both_holder_kinds(const std::vector<GameSpec>& specs) {
  bool container = false, supporter = false;
  for (const auto& spec : specs) {
    container = container || has_container_goal(spec);
    supporter = supporter || has_supporter_goal(spec);
  }
  return container && supporter;
}

// Round-robin collection visits each game once per cycle; alternating the
// goal kinds guarantees both put and insert see reward chances before the
// prune milestone.
std::vector<GameSpec> interleave_goal_kinds(std::vector<GameSpec> specs) {
  std::vector<GameSpec> with, without, out;
  for (auto& s : specs)
    (has_container_goal(s) ? with : without).push_back(std::move(s));
  std::size_t i = 0, j = 0;
  while (i < with.size() || j < without.size()) {
    if (i < with.size()) out.push_back(std::move(with[i++]));
    if (j < without.size()) out.push_back(std::move(without[j++]));
  }
  return out;
}

FactSet merged_state(const std::string& text, const FactSet& subgraph) {
  FactSet s = parse_observation(text);
  s.insert(s.end(), subgraph.begin(), subgraph.end());
  canonicalize(s);
  return s;
}

}  // namespace

std::vector<GameSpec> training_games(const HarnessConfig& config,
                                     std::uint64_t run_seed,
                                     const EntityVocabulary& vocab) {
  if (config.games == 0) throw InputError("train: games must be positive");
  GenOptions opt;
  opt.difficulty = config.difficulty;
  opt.split = Split::train;
  opt.count = static_cast<int>(config.games);
  opt.vocab = &vocab;
  opt.max_steps = config.max_steps;
  // A set whose goals never touch one holder kind would teach nothing
  // about put or insert; retry deterministically until both appear.
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    opt.seed = derive_seed(derive_seed(run_seed, kGenStream), attempt);
    auto specs = generate_games(opt);
    if (set_exercises_both_holder_kinds(specs))
      return interleave_goal_kinds(std::move(specs));
  }
  throw InputError("train: could not draw games covering both holder kinds");
}

std::vector<GameSpec> evaluation_games(const HarnessConfig& config,
                                       Split split, std::uint64_t run_seed,
                                       const EntityVocabulary& vocab) {
  if (config.eval_games == 0) throw InputError("eval: games must be positive");
  GenOptions opt;
  opt.difficulty = config.difficulty;
  opt.split = split;
  opt.count = static_cast<int>(config.eval_games);
  opt.vocab = &vocab;
  opt.max_steps = config.max_steps;
  opt.seed = derive_seed(derive_seed(run_seed, kEvalStream),
                         static_cast<std::uint64_t>(split));
  return generate_games(opt);
}

TrainResult train_run(const HarnessConfig& config, std::uint64_t run_seed,
                      const std::vector<GameSpec>& specs,
                      const CommonsenseGraph& graph) {
  if (config.episodes == 0) throw InputError("train: episodes must be positive");
  if (specs.empty()) throw InputError("train: no training games");
  if (config.tau < 0.0 || config.tau > 1.0)
    throw InputError("train: tau must lie in [0, 1]");

  TrainOptions topt;
  topt.epochs = config.epochs;
  topt.lr = config.lr;
  topt.alpha = config.alpha;
  topt.include_negated = config.include_negated;

  PlayOptions popt;
  popt.gamma = config.gamma;
  popt.graph = &graph;
  popt.include_distractors = config.include_distractors;
  popt.noise = config.noise;

  Buffer buffer;
  TrainResult out;
  std::optional<std::set<ActionPredicate>> allowed;
  RuleSet weighted;
  RuleSet live_crisp;

  for (std::size_t e = 0; e < config.episodes; ++e) {
    PolicyConfig pc;
    // Exploration phase: sample the mixed weighted distribution, which
    // tries every predicate and feeds the prune decision honest coverage.
    // Exploitation phase (after the prune freeze): collect epsilon-greedy
    // under the thresholded rules, the same policy class the run is judged
    // as. Driving the argmax with the weighted model instead lets sub-tau
    // weights steer collection; a stray atlocation weight on take prefers
    // re-taking already-solved objects (their literal is true, so nothing
    // is subtracted), and those loops feed the very data that sustains the
    // weight.
    bool exploit = allowed.has_value() ||
                   (!config.use_prune && e >= config.milestone);
    pc.act_greedy = exploit;
    pc.weighted = !exploit;
    pc.explore = weighted.empty() ? 1.0 : config.explore;
    pc.allowed = allowed;
    RulePolicy policy(exploit ? live_crisp : weighted, pc);

    PlayOptions po = popt;
    po.seed = derive_seed(run_seed, e);
    std::size_t gi = e % specs.size();
    auto ep = play_episode(policy, specs[gi], gi, po);
    for (auto& tr : ep.transitions) {
      tr.episode = e;
      buffer.push_back(std::move(tr));
    }
    out.episodes.push_back(std::move(ep.record));

    // Pruning freezes A_pruned from the milestone on, deferred while the
    // buffer has no reward signal (everything would compare equal at 0).
    if (config.use_prune && !allowed && e + 1 >= config.milestone &&
        config.milestone > 0) {
      double total = 0.0;
      for (const auto& r : out.episodes) total += r.total_reward;
      if (total > 0.0) {
        Templates t = extract_templates(buffer);
        out.prune_report =
            prune(specs, out.episodes, t.action_predicates, /*tolerance=*/0.0);
        auto kept = out.prune_report->a_pruned();
        allowed.emplace(kept.begin(), kept.end());
      }
    }

    // Refit every surviving predicate from scratch. With outlier rejection
    // on, each refit trains on the cleanest quarter of its sub-buffer (top
    // returns first, the same g-sorted cut the rejection method uses): junk
    // actions that merely inherit discounted credit sort below the real
    // placements, so the driving rules stay sharp and greedy collection
    // keeps feeding clean data instead of spiralling on its own noise. A
    // quarter, not a half: with two rooms most placements land off-goal, and
    // at half the inherited credit of those misses outweighs the rewarded
    // placements and holds the goal literal under the extraction threshold.
    // Small buffers keep at least eight transitions, but never more than
    // half, which would re-admit the junk the cut exists to drop. Without
    // outlier rejection the refits see the full sub-buffer, noise and all;
    // that is the ablation the rejection method is measured against.
    Templates t = extract_templates(buffer);
    std::vector<HornRule> refit;
    std::vector<HornRule> refit_crisp;
    for (const auto& a : t.action_predicates) {
      if (allowed && allowed->count(a) == 0) continue;
      Buffer b_a = sub_buffer(buffer, a);
      if (b_a.empty()) continue;
      if (config.use_or) {
        std::stable_sort(b_a.begin(), b_a.end(),
                         [](const Transition& l, const Transition& r) {
                           return l.g > r.g;
                         });
        std::size_t keep = (b_a.size() + 3) / 4;
        if (keep < 8) keep = 8;
        std::size_t half = (b_a.size() + 1) / 2;
        if (keep > half) keep = half;
        b_a.resize(keep);
      }
      RuleModel m = make_rule_model(a, t.state_predicates, topt);
      train_rule(m, b_a, topt);
      if (m.trained) {
        refit.push_back(weighted_rule(m));
        refit_crisp.push_back(extract_crisp_rule(m, config.tau));
      }
    }
    weighted = RuleSet(std::move(refit));
    live_crisp = RuleSet(std::move(refit_crisp));
  }

  Templates t = extract_templates(buffer);
  std::vector<HornRule> crisp;
  for (const auto& a : t.action_predicates) {
    if (allowed && allowed->count(a) == 0) continue;
    Buffer b_a = sub_buffer(buffer, a);
    if (b_a.empty()) continue;
    RuleModel m;
    if (config.use_or) {
      m = train_with_outlier_rejection(a, b_a, t.state_predicates,
                                       config.outlier, topt);
    } else {
      m = make_rule_model(a, t.state_predicates, topt);
      train_rule(m, b_a, topt);
    }
    if (!m.trained) continue;
    crisp.push_back(extract_crisp_rule(m, config.tau));
    out.trained_predicates.push_back(a);
  }
  out.rules = RuleSet(std::move(crisp));
  return out;
}

EvalRun eval_rules(const RuleSet& rules, const std::vector<GameSpec>& specs,
                   const CommonsenseGraph& graph, bool include_distractors) {
  if (specs.empty()) throw InputError("eval: empty game set");
  EvalRun run;
  RulePolicy policy(rules, PolicyConfig{});
  for (std::size_t i = 0; i < specs.size(); ++i) {
    FactSet subgraph = graph.subgraph_for(specs[i], include_distractors);
    Game game(specs[i]);
    Observation obs = game.reset();
    std::size_t steps = 0;
    std::map<std::string, std::set<std::string>> tried;
    while (!obs.done) {
      auto& banned = tried[game.state_key()];
      auto a = policy.greedy(obs.admissible, merged_state(obs.text, subgraph),
                             &banned);
      banned.insert(render_command(a));
      obs = game.step(a);
      ++steps;
    }
    EvalGameRow row;
    row.game = i;
    row.total_reward = game.total_reward();
    row.max_reward = static_cast<double>(specs[i].goal_map.size());
    row.score = row.max_reward > 0.0 ? row.total_reward / row.max_reward : 0.0;
    row.steps = steps;
    run.games.push_back(row);
    run.mean_score += row.score;
    run.mean_steps += static_cast<double>(steps);
  }
  run.mean_score /= static_cast<double>(specs.size());
  run.mean_steps /= static_cast<double>(specs.size());
  return run;
}

EvalResult aggregate_eval(std::vector<EvalRun> runs) {
  if (runs.empty()) throw InputError("eval: no runs to aggregate");
  EvalResult out;
  double n = static_cast<double>(runs.size());
  for (const auto& r : runs) {
    out.score_mean += r.mean_score;
    out.steps_mean += r.mean_steps;
  }
  out.score_mean /= n;
  out.steps_mean /= n;
  double sv = 0.0, tv = 0.0;
  for (const auto& r : runs) {
    sv += (r.mean_score - out.score_mean) * (r.mean_score - out.score_mean);
    tv += (r.mean_steps - out.steps_mean) * (r.mean_steps - out.steps_mean);
  }
  out.score_std = std::sqrt(sv / n);
  out.steps_std = std::sqrt(tv / n);
  out.runs = std::move(runs);
  return out;
}

double greedy_discounted_return(const RuleSet& rules, const GameSpec& spec,
                                double gamma, const CommonsenseGraph& graph,
                                bool include_distractors) {
  FactSet subgraph = graph.subgraph_for(spec, include_distractors);
  RulePolicy policy(rules, PolicyConfig{});
  Game game(spec);
  Observation obs = game.reset();
  double total = 0.0, disc = 1.0;
  std::map<std::string, std::set<std::string>> tried;
  while (!obs.done) {
    auto& banned = tried[game.state_key()];
    auto a = policy.greedy(obs.admissible, merged_state(obs.text, subgraph),
                           &banned);
    banned.insert(render_command(a));
    obs = game.step(a);
    total += disc * obs.reward;
    disc *= gamma;
  }
  return total;
}

namespace {

bool inert_verb(const std::string& v) {
  return v == verb::look || v == verb::inventory || v == verb::examine;
}

double best_return_from(const Game& game, const Observation& obs,
                        double gamma) {
  if (obs.done) return 0.0;
  double best = 0.0;  // rewards are nonnegative, so stalling is never better
  for (const auto& a : obs.admissible) {
    if (inert_verb(a.verb)) continue;  // never changes state or reward
    Game branch = game;
    Observation next = branch.step(a);
    double value = next.reward + gamma * best_return_from(branch, next, gamma);
    if (value > best) best = value;
  }
  return best;
}

}  // namespace

double optimal_discounted_return(const GameSpec& spec, double gamma) {
  Game game(spec);
  Observation obs = game.reset();
  return best_return_from(game, obs, gamma);
}

std::string eval_result_to_json(const EvalResult& result,
                                const HarnessConfig& config) {
  nlohmann::json doc;
  doc["score_mean"] = result.score_mean;
  doc["score_std"] = result.score_std;
  doc["steps_mean"] = result.steps_mean;
  doc["steps_std"] = result.steps_std;
  doc["runs"] = nlohmann::json::array();
  for (const auto& r : result.runs) {
    nlohmann::json run;
    run["mean_score"] = r.mean_score;
    run["mean_steps"] = r.mean_steps;
    run["games"] = nlohmann::json::array();
    for (const auto& g : r.games) {
      nlohmann::json row;
      row["game"] = g.game;
      row["total_reward"] = g.total_reward;
      row["max_reward"] = g.max_reward;
      row["score"] = g.score;
      row["steps"] = g.steps;
      run["games"].push_back(std::move(row));
    }
    doc["runs"].push_back(std::move(run));
  }
  nlohmann::json cfg;
  cfg["difficulty"] = to_string(config.difficulty);
  cfg["games"] = config.games;
  cfg["eval_games"] = config.eval_games;
  cfg["episodes"] = config.episodes;
  cfg["seeds"] = config.seeds;
  cfg["seed"] = config.seed;
  cfg["gamma"] = config.gamma;
  cfg["alpha"] = config.alpha;
  cfg["tau"] = config.tau;
  cfg["epochs"] = config.epochs;
  cfg["lr"] = config.lr;
  cfg["explore"] = config.explore;
  cfg["noise_drop"] = config.noise.p_drop;
  cfg["noise_swap"] = config.noise.p_swap;
  cfg["use_or"] = config.use_or;
  cfg["use_prune"] = config.use_prune;
  cfg["milestone"] = config.milestone;
  cfg["k_percent"] = config.outlier.k_percent;
  cfg["min_support"] = config.outlier.min_support;
  cfg["include_distractors"] = config.include_distractors;
  cfg["include_negated"] = config.include_negated;
  cfg["max_steps"] = config.max_steps;
  doc["config"] = std::move(cfg);
  return doc.dump(2) + "\n";
}

std::string eval_result_to_csv(const EvalResult& result) {
  std::ostringstream out;
  out << "run,game,total_reward,max_reward,score,steps\n";
  for (std::size_t r = 0; r < result.runs.size(); ++r)
    for (const auto& g : result.runs[r].games)
      out << r << ',' << g.game << ',' << format_real(g.total_reward) << ','
          << format_real(g.max_reward) << ',' << format_real(g.score) << ','
          << g.steps << '\n';
  return out.str();
}

std::string episodes_to_csv(const std::vector<EpisodeRecord>& episodes) {
  std::ostringstream out;
  out << "episode,game,steps,total_reward,max_reward\n";
  for (std::size_t e = 0; e < episodes.size(); ++e)
    out << e << ',' << episodes[e].spec_index << ','
        << episodes[e].actions.size() << ','
        << format_real(episodes[e].total_reward) << ','
        << format_real(episodes[e].max_reward) << '\n';
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open for writing: " + path);
  f << content;
  if (!f) throw InputError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

namespace {

double parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InputError("config: bad numeric value for '" + key + "': " + value);
  }
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  double v = parse_number(key, value);
  if (v < 0.0 || v != std::floor(v))
    throw InputError("config: '" + key + "' must be a nonnegative integer");
  return static_cast<std::size_t>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw InputError("config: bad boolean value for '" + key + "': " + value);
}

}  // namespace

void set_config_value(HarnessConfig& config, const std::string& key,
                      const std::string& value) {
  if (key == "difficulty") config.difficulty = difficulty_from_string(value);
  else if (key == "games") config.games = parse_count(key, value);
  else if (key == "eval_games") config.eval_games = parse_count(key, value);
  else if (key == "episodes") config.episodes = parse_count(key, value);
  else if (key == "seeds") config.seeds = parse_count(key, value);
  else if (key == "seed") config.seed = parse_count(key, value);
  else if (key == "gamma") config.gamma = parse_number(key, value);
  else if (key == "alpha") config.alpha = parse_number(key, value);
  else if (key == "tau") config.tau = parse_number(key, value);
  else if (key == "epochs") config.epochs = parse_count(key, value);
  else if (key == "lr") config.lr = parse_number(key, value);
  else if (key == "explore") config.explore = parse_number(key, value);
  else if (key == "noise_drop") config.noise.p_drop = parse_number(key, value);
  else if (key == "noise_swap") config.noise.p_swap = parse_number(key, value);
  else if (key == "use_or") config.use_or = parse_bool(key, value);
  else if (key == "use_prune") config.use_prune = parse_bool(key, value);
  else if (key == "milestone") config.milestone = parse_count(key, value);
  else if (key == "k_percent") config.outlier.k_percent = parse_number(key, value);
  else if (key == "min_support") config.outlier.min_support = parse_number(key, value);
  else if (key == "include_distractors")
    config.include_distractors = parse_bool(key, value);
  else if (key == "include_negated")
    config.include_negated = parse_bool(key, value);
  else if (key == "max_steps")
    config.max_steps = static_cast<int>(parse_count(key, value));
  else
    throw InputError("config: unknown key '" + key + "'");
}

namespace {

std::filesystem::path ensure_dir(const std::string& out_dir) {
  if (out_dir.empty()) throw InputError("output directory not set");
  std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create directory: " + out_dir);
  return dir;
}

std::string seed_tag(std::size_t s) { return "seed" + std::to_string(s); }

nlohmann::json eval_brief(const EvalResult& r) {
  nlohmann::json j;
  j["score_mean"] = r.score_mean;
  j["score_std"] = r.score_std;
  j["steps_mean"] = r.steps_mean;
  j["steps_std"] = r.steps_std;
  return j;
}

}  // namespace

std::string cmd_train(const HarnessConfig& config, const std::string& out_dir) {
  if (config.seeds == 0) throw InputError("train: seeds must be positive");
  auto dir = ensure_dir(out_dir);
  EntityVocabulary vocab = builtin_vocabulary();
  CommonsenseGraph graph = graph_from_vocabulary(vocab);
  auto in_set = evaluation_games(config, Split::in_dist, config.seed, vocab);
  auto out_set = evaluation_games(config, Split::out_dist, config.seed, vocab);

  nlohmann::json summary;
  summary["rule_files"] = nlohmann::json::array();
  std::vector<EvalRun> in_runs, out_runs;
  for (std::size_t s = 0; s < config.seeds; ++s) {
    std::uint64_t run_seed = derive_seed(config.seed, s);
    auto specs = training_games(config, run_seed, vocab);
    TrainResult result = train_run(config, run_seed, specs, graph);

    std::string rules_name = "rules_" + seed_tag(s) + ".lp";
    write_text_file((dir / rules_name).string(),
                    serialize_rules(result.rules));
    summary["rule_files"].push_back(rules_name);
    if (result.prune_report)
      write_text_file((dir / ("prune_" + seed_tag(s) + ".json")).string(),
                      prune_report_to_json(*result.prune_report));
    write_text_file((dir / ("train_log_" + seed_tag(s) + ".csv")).string(),
                    episodes_to_csv(result.episodes));

    in_runs.push_back(eval_rules(result.rules, in_set, graph,
                                 config.include_distractors));
    out_runs.push_back(eval_rules(result.rules, out_set, graph,
                                  config.include_distractors));
  }
  EvalResult in_res = aggregate_eval(std::move(in_runs));
  EvalResult out_res = aggregate_eval(std::move(out_runs));
  write_text_file((dir / "eval_in_dist.json").string(),
                  eval_result_to_json(in_res, config));
  write_text_file((dir / "eval_out_dist.json").string(),
                  eval_result_to_json(out_res, config));
  write_text_file((dir / "eval_in_dist.csv").string(),
                  eval_result_to_csv(in_res));
  write_text_file((dir / "eval_out_dist.csv").string(),
                  eval_result_to_csv(out_res));

  summary["in_dist"] = eval_brief(in_res);
  summary["out_dist"] = eval_brief(out_res);
  std::string text = summary.dump(2) + "\n";
  write_text_file((dir / "summary.json").string(), text);
  return text;
}

std::string cmd_prune(const HarnessConfig& config, const std::string& out_dir) {
  auto dir = ensure_dir(out_dir);
  EntityVocabulary vocab = builtin_vocabulary();
  CommonsenseGraph graph = graph_from_vocabulary(vocab);
  std::uint64_t run_seed = derive_seed(config.seed, 0);
  auto specs = training_games(config, run_seed, vocab);

  RulePolicy uniform{RuleSet{}, PolicyConfig{}};
  PlayOptions popt;
  popt.gamma = config.gamma;
  popt.graph = &graph;
  popt.include_distractors = config.include_distractors;
  popt.noise = config.noise;
  std::size_t episodes = std::max<std::size_t>(config.milestone, 1);

  Buffer buffer;
  std::vector<EpisodeRecord> records;
  for (std::size_t e = 0; e < episodes; ++e) {
    PlayOptions po = popt;
    po.seed = derive_seed(run_seed, e);
    auto ep = play_episode(uniform, specs[e % specs.size()], e % specs.size(), po);
    for (auto& tr : ep.transitions) {
      tr.episode = e;
      buffer.push_back(std::move(tr));
    }
    records.push_back(std::move(ep.record));
  }
  Templates t = extract_templates(buffer);
  PruneReport report = prune(specs, records, t.action_predicates, 0.0);
  std::string text = prune_report_to_json(report);
  write_text_file((dir / "prune.json").string(), text);
  return text;
}

std::string cmd_eval(const HarnessConfig& config,
                     const std::vector<std::string>& rule_files, Split split,
                     const std::string& out_dir) {
  if (rule_files.empty()) throw InputError("eval: no rule files");
  auto dir = ensure_dir(out_dir);
  EntityVocabulary vocab = builtin_vocabulary();
  CommonsenseGraph graph = graph_from_vocabulary(vocab);
  auto games = evaluation_games(config, split, config.seed, vocab);

  std::vector<EvalRun> runs;
  for (const auto& path : rule_files) {
    RuleSet rules = load_rules(path, HornRule::Source::learned);
    runs.push_back(eval_rules(rules, games, graph, config.include_distractors));
  }
  EvalResult result = aggregate_eval(std::move(runs));
  std::string text = eval_result_to_json(result, config);
  write_text_file((dir / ("eval_" + to_string(split) + ".json")).string(), text);
  write_text_file((dir / ("eval_" + to_string(split) + ".csv")).string(),
                  eval_result_to_csv(result));
  return text;
}

std::string cmd_curve(const HarnessConfig& config,
                      const std::vector<std::size_t>& budgets,
                      const std::string& out_dir) {
  if (budgets.empty()) throw InputError("curve: no budgets");
  for (std::size_t i = 1; i < budgets.size(); ++i)
    if (budgets[i] <= budgets[i - 1])
      throw InputError("curve: budgets must be strictly ascending");
  auto dir = ensure_dir(out_dir);
  EntityVocabulary vocab = builtin_vocabulary();
  CommonsenseGraph graph = graph_from_vocabulary(vocab);
  auto in_set = evaluation_games(config, Split::in_dist, config.seed, vocab);
  auto out_set = evaluation_games(config, Split::out_dist, config.seed, vocab);

  std::ostringstream csv;
  csv << "budget,in_score_mean,in_score_std,out_score_mean,out_score_std\n";
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t budget : budgets) {
    if (budget == 0) {
      nlohmann::json row;
      row["budget"] = 0;
      row["skipped"] = true;
      rows.push_back(std::move(row));
      continue;
    }
    HarnessConfig hc = config;
    hc.episodes = budget;
    std::vector<EvalRun> in_runs, out_runs;
    for (std::size_t s = 0; s < std::max<std::size_t>(config.seeds, 1); ++s) {
      std::uint64_t run_seed = derive_seed(config.seed, s);
      auto specs = training_games(hc, run_seed, vocab);
      TrainResult result = train_run(hc, run_seed, specs, graph);
      in_runs.push_back(eval_rules(result.rules, in_set, graph,
                                   config.include_distractors));
      out_runs.push_back(eval_rules(result.rules, out_set, graph,
                                    config.include_distractors));
    }
    EvalResult in_res = aggregate_eval(std::move(in_runs));
    EvalResult out_res = aggregate_eval(std::move(out_runs));
    csv << budget << ',' << format_real(in_res.score_mean) << ','
        << format_real(in_res.score_std) << ','
        << format_real(out_res.score_mean) << ','
        << format_real(out_res.score_std) << '\n';
    nlohmann::json row;
    row["budget"] = budget;
    row["in_dist"] = eval_brief(in_res);
    row["out_dist"] = eval_brief(out_res);
    rows.push_back(std::move(row));
  }
  nlohmann::json doc;
  doc["budgets"] = rows;
  std::string text = doc.dump(2) + "\n";
  write_text_file((dir / "curve.json").string(), text);
  write_text_file((dir / "curve.csv").string(), csv.str());
  return text;
}

}  // namespace ruleplay
