#include "ruleplay.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "ruleplay/entities.hpp"
#include "ruleplay/gen.hpp"
#include "ruleplay/harness.hpp"
#include "ruleplay/json_io.hpp"
#include "ruleplay/rules_io.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into error codes + thread-local message.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return RP_OK;
  } catch (const ruleplay::ParseError& e) {
    g_last_error = e.what();
    return RP_EPARSE;
  } catch (const ruleplay::InputError& e) {
    g_last_error = e.what();
    return RP_EINVAL;
  } catch (const std::ios_base::failure& e) {
    g_last_error = e.what();
    return RP_EIO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RP_EINTERNAL;
  }
}

int require(bool ok, const char* message) {
  if (ok) return RP_OK;
  g_last_error = message;
  return RP_EINVAL;
}

ruleplay::HornRule::Source source_from(const char* source) {
  std::string s = source ? source : "learned";
  if (s == "learned") return ruleplay::HornRule::Source::learned;
  if (s == "human") return ruleplay::HornRule::Source::human;
  throw ruleplay::InputError("unknown rule source: " + s);
}

ruleplay::Split split_from(const char* split) {
  return ruleplay::split_from_string(split ? split : "");
}

}  // namespace

struct rp_games {
  std::vector<ruleplay::GameSpec> specs;
};

struct rp_rules {
  ruleplay::RuleSet set;
};

struct rp_config {
  ruleplay::HarnessConfig config;
};

extern "C" {

const char* rp_version(void) { return "1.0.0"; }

const char* rp_last_error(void) { return g_last_error.c_str(); }

void rp_string_free(char* s) { std::free(s); }

int rp_games_generate(const char* difficulty, const char* split, int count,
                      uint64_t seed, int max_steps, rp_games** out) {
  if (int rc = require(out && difficulty && split, "null argument")) return rc;
  return guarded([&] {
    ruleplay::GenOptions opt;
    opt.difficulty = ruleplay::difficulty_from_string(difficulty);
    opt.split = ruleplay::split_from_string(split);
    opt.count = count;
    opt.seed = seed;
    opt.max_steps = max_steps;
    *out = new rp_games{ruleplay::generate_games(opt)};
  });
}

int rp_games_load(const char* dir, rp_games** out) {
  if (int rc = require(out && dir, "null argument")) return rc;
  return guarded([&] { *out = new rp_games{ruleplay::load_games(dir)}; });
}

int rp_games_save(const rp_games* games, const char* dir) {
  if (int rc = require(games && dir, "null argument")) return rc;
  return guarded([&] { ruleplay::save_games(games->specs, dir); });
}

int rp_games_count(const rp_games* games, size_t* out) {
  if (int rc = require(games && out, "null argument")) return rc;
  *out = games->specs.size();
  return RP_OK;
}

int rp_games_to_json(const rp_games* games, size_t index, char** out) {
  if (int rc = require(games && out, "null argument")) return rc;
  if (int rc = require(index < games->specs.size(), "game index out of range"))
    return rc;
  return guarded([&] {
    *out = dup_string(ruleplay::spec_to_json(games->specs[index]));
  });
}

void rp_games_free(rp_games* games) { delete games; }

int rp_rules_parse(const char* text, const char* source, rp_rules** out) {
  if (int rc = require(text && out, "null argument")) return rc;
  return guarded([&] {
    *out = new rp_rules{ruleplay::parse_rules(text, source_from(source))};
  });
}

int rp_rules_load(const char* path, const char* source, rp_rules** out) {
  if (int rc = require(path && out, "null argument")) return rc;
  return guarded([&] {
    *out = new rp_rules{ruleplay::load_rules(path, source_from(source))};
  });
}

int rp_rules_serialize(const rp_rules* rules, char** out) {
  if (int rc = require(rules && out, "null argument")) return rc;
  return guarded(
      [&] { *out = dup_string(ruleplay::serialize_rules(rules->set)); });
}

int rp_rules_apply_edit(const rp_rules* learned, const rp_rules* edits,
                        rp_rules** out) {
  if (int rc = require(learned && edits && out, "null argument")) return rc;
  return guarded([&] {
    *out = new rp_rules{ruleplay::apply_edit(learned->set, edits->set)};
  });
}

void rp_rules_free(rp_rules* rules) { delete rules; }

int rp_config_new(rp_config** out) {
  if (int rc = require(out != nullptr, "null argument")) return rc;
  *out = new rp_config{};
  return RP_OK;
}

int rp_config_set(rp_config* config, const char* key, const char* value) {
  if (int rc = require(config && key && value, "null argument")) return rc;
  return guarded(
      [&] { ruleplay::set_config_value(config->config, key, value); });
}

int rp_config_load(rp_config* config, const char* path) {
  if (int rc = require(config && path, "null argument")) return rc;
  return guarded([&] {
    std::istringstream in(ruleplay::read_text_file(path));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::string text = ruleplay::trim(line);
      if (text.empty()) continue;
      auto eq = text.find('=');
      if (eq == std::string::npos)
        throw ruleplay::InputError("config:" + std::to_string(line_no) +
                                   ": expected key = value");
      ruleplay::set_config_value(config->config,
                                 ruleplay::trim(text.substr(0, eq)),
                                 ruleplay::trim(text.substr(eq + 1)));
    }
  });
}

void rp_config_free(rp_config* config) { delete config; }

int rp_train(const rp_config* config, const char* out_dir,
             char** summary_json) {
  if (int rc = require(config && out_dir, "null argument")) return rc;
  return guarded([&] {
    std::string summary = ruleplay::cmd_train(config->config, out_dir);
    if (summary_json) *summary_json = dup_string(summary);
  });
}

int rp_prune(const rp_config* config, const char* out_dir,
             char** summary_json) {
  if (int rc = require(config && out_dir, "null argument")) return rc;
  return guarded([&] {
    std::string summary = ruleplay::cmd_prune(config->config, out_dir);
    if (summary_json) *summary_json = dup_string(summary);
  });
}

int rp_eval(const rp_config* config, const char* const* rule_files,
            size_t n_rule_files, const char* split, const char* out_dir,
            char** summary_json) {
  if (int rc = require(config && rule_files && out_dir, "null argument"))
    return rc;
  return guarded([&] {
    std::vector<std::string> files;
    for (size_t i = 0; i < n_rule_files; ++i) {
      if (!rule_files[i]) throw ruleplay::InputError("null rule file path");
      files.emplace_back(rule_files[i]);
    }
    std::string summary =
        ruleplay::cmd_eval(config->config, files, split_from(split), out_dir);
    if (summary_json) *summary_json = dup_string(summary);
  });
}

int rp_curve(const rp_config* config, const size_t* budgets, size_t n_budgets,
             const char* out_dir, char** summary_json) {
  if (int rc = require(config && budgets && out_dir, "null argument"))
    return rc;
  return guarded([&] {
    std::vector<std::size_t> b(budgets, budgets + n_budgets);
    std::string summary = ruleplay::cmd_curve(config->config, b, out_dir);
    if (summary_json) *summary_json = dup_string(summary);
  });
}

}  // extern "C"
