#ifndef RULEPLAY_H
#define RULEPLAY_H

/* C interface to the ruleplay engine: deterministic cleanup-game
 * simulation, rule learning, pruning, and evaluation. Every function
 * returns RP_OK or an error code; rp_last_error() describes the most
 * recent failure on the calling thread. Strings returned through char**
 * are heap-allocated and must be released with rp_string_free(). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  RP_OK = 0,
  RP_EINVAL = 1,   /* invalid argument or domain error */
  RP_EPARSE = 2,   /* malformed rules, games, or observations */
  RP_EIO = 3,      /* filesystem failure */
  RP_EINTERNAL = 4 /* unexpected internal failure */
};

typedef struct rp_games rp_games;   /* immutable game-spec collection */
typedef struct rp_rules rp_rules;   /* horn rule set */
typedef struct rp_config rp_config; /* pipeline configuration */

const char* rp_version(void);

/* Message for the last failure on this thread; empty string if none. */
const char* rp_last_error(void);

void rp_string_free(char* s);

/* ---- games ---- */

/* difficulty: "easy" | "medium" | "hard"; split: "train" | "in_dist" |
 * "out_dist". */
int rp_games_generate(const char* difficulty, const char* split, int count,
                      uint64_t seed, int max_steps, rp_games** out);
int rp_games_load(const char* dir, rp_games** out);
int rp_games_save(const rp_games* games, const char* dir);
int rp_games_count(const rp_games* games, size_t* out);
int rp_games_to_json(const rp_games* games, size_t index, char** out);
void rp_games_free(rp_games* games);

/* ---- rules ---- */

/* source: "learned" | "human". */
int rp_rules_parse(const char* text, const char* source, rp_rules** out);
int rp_rules_load(const char* path, const char* source, rp_rules** out);
int rp_rules_serialize(const rp_rules* rules, char** out);
int rp_rules_apply_edit(const rp_rules* learned, const rp_rules* edits,
                        rp_rules** out);
void rp_rules_free(rp_rules* rules);

/* ---- configuration ---- */

int rp_config_new(rp_config** out);
/* Keys: difficulty, games, eval_games, episodes, seeds, seed, gamma,
 * alpha, tau, epochs, lr, explore, noise_drop, noise_swap, use_or,
 * use_prune, milestone, k_percent, min_support, include_distractors,
 * max_steps. Values are parsed from their string form. */
int rp_config_set(rp_config* config, const char* key, const char* value);
/* Applies every `key = value` line of a config file; '#' starts a
 * comment. */
int rp_config_load(rp_config* config, const char* path);
void rp_config_free(rp_config* config);

/* ---- pipelines ----
 * Each command writes its artifacts under out_dir (created if missing)
 * and, when summary_json is non-NULL, returns the summary document. All
 * artifacts are deterministic in (config, inputs). */

int rp_train(const rp_config* config, const char* out_dir,
             char** summary_json);
int rp_prune(const rp_config* config, const char* out_dir,
             char** summary_json);
/* split: "in_dist" | "out_dist"; one rule file per independent run. */
int rp_eval(const rp_config* config, const char* const* rule_files,
            size_t n_rule_files, const char* split, const char* out_dir,
            char** summary_json);
int rp_curve(const rp_config* config, const size_t* budgets,
             size_t n_budgets, const char* out_dir, char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* RULEPLAY_H */
