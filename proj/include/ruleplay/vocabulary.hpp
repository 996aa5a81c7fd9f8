#pragma once

#include <string>
#include <vector>

namespace ruleplay {

enum class HolderKind { container, supporter };

// One (object, canonical holder) pair. Objects are unique; holders repeat.
// held_out entries are reserved for out-of-distribution games.
struct VocabEntry {
  std::string object;
  std::string holder;
  HolderKind kind = HolderKind::container;
  bool held_out = false;
};

class EntityVocabulary {
 public:
  explicit EntityVocabulary(std::vector<VocabEntry> entries);

  const std::vector<VocabEntry>& entries() const { return entries_; }
  std::vector<const VocabEntry*> train_entries() const;
  std::vector<const VocabEntry*> held_out_entries() const;

  bool is_holder(const std::string& phrase) const;
  HolderKind holder_kind(const std::string& phrase) const;

  // Every distinct phrase: objects first, then holders, in entry order.
  std::vector<std::string> all_phrases() const;

 private:
  std::vector<VocabEntry> entries_;
};

// The shipped household vocabulary (~60 pairs, last quarter held out).
const EntityVocabulary& builtin_vocabulary();

// Loads "object<TAB>atlocation<TAB>holder[<TAB>container|supporter]" lines.
// '#' lines and blank lines are skipped. A missing kind column defaults to
// container. held_out is assigned to the trailing quarter of entries.
EntityVocabulary load_vocabulary(const std::string& path);

}  // namespace ruleplay
