#include "ruleplay/pruner.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "ruleplay/entities.hpp"

namespace ruleplay {

std::vector<ActionPredicate> PruneReport::a_pruned() const {
  std::vector<ActionPredicate> out;
  for (const auto& e : entries)
    if (!e.pruned) out.push_back(e.predicate);
  return out;
}

bool PruneReport::keeps(const ActionPredicate& p) const {
  for (const auto& e : entries)
    if (e.predicate == p) return !e.pruned;
  return false;
}

PruneReport prune(const std::vector<GameSpec>& specs,
                  const std::vector<EpisodeRecord>& episodes,
                  const std::vector<ActionPredicate>& actions,
                  double tolerance) {
  if (episodes.empty()) throw InputError("prune: empty episode set");
  if (tolerance < 0.0) throw InputError("prune: negative tolerance");
  for (const auto& ep : episodes)
    if (ep.spec_index >= specs.size())
      throw InputError("prune: episode references missing game spec");

  std::vector<ActionPredicate> order = actions;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  double mean_with = 0.0;
  for (const auto& ep : episodes) mean_with += ep.total_reward;
  mean_with /= static_cast<double>(episodes.size());

  PruneReport report;
  report.tolerance = tolerance;
  for (const auto& pred : order) {
    double total = 0.0;
    for (const auto& ep : episodes) {
      std::vector<ActionCommand> kept;
      for (const auto& a : ep.actions)
        if (a.predicate() != pred) kept.push_back(a);
      Game game(specs[ep.spec_index]);
      total += game.replay(kept);
    }
    PruneEntry entry;
    entry.predicate = pred;
    entry.mean_with = mean_with;
    entry.mean_without = total / static_cast<double>(episodes.size());
    entry.pruned = std::abs(entry.mean_with - entry.mean_without) <= tolerance;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string prune_report_to_json(const PruneReport& report) {
  nlohmann::json doc;
  doc["tolerance"] = report.tolerance;
  doc["entries"] = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json row;
    row["predicate"] = to_string(e.predicate);
    row["mean_with"] = e.mean_with;
    row["mean_without"] = e.mean_without;
    row["verdict"] = e.pruned ? "pruned" : "retained";
    doc["entries"].push_back(std::move(row));
  }
  auto kept = report.a_pruned();
  doc["a_pruned"] = nlohmann::json::array();
  for (const auto& p : kept) doc["a_pruned"].push_back(to_string(p));
  return doc.dump(2) + "\n";
}

}  // namespace ruleplay
