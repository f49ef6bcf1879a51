#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "thkg/core/fact.hpp"

namespace thkg {

// Dense, contiguous index spaces for entities and relations, plus the fixed
// conjunction indexing and the per-relation numeric flags. A relation is
// numeric-flagged iff every occurrence of its value slot carries a number;
// mixed usage is rejected when the vocabulary is built.
class Vocabulary {
 public:
  int add_entity(const std::string& id);    // idempotent, returns index
  int add_relation(const std::string& id);  // idempotent, returns index

  std::optional<int> entity_index(const std::string& id) const;
  std::optional<int> relation_index(const std::string& id) const;
  const std::string& entity_id(int idx) const { return entities_.at(idx); }
  const std::string& relation_id(int idx) const { return relations_.at(idx); }

  int entity_count() const { return static_cast<int>(entities_.size()); }
  int relation_count() const { return static_cast<int>(relations_.size()); }

  void set_numeric(int relation_idx, bool numeric);
  bool is_numeric_relation(int relation_idx) const;
  // Relation indices flagged numeric, ascending.
  std::vector<int> numeric_relations() const;

  // Canonical serialization used for both persistence and content hashing.
  std::string to_json_string() const;
  static Vocabulary from_json_string(const std::string& text);
  std::uint64_t content_hash() const;

  bool operator==(const Vocabulary& other) const;

 private:
  std::vector<std::string> entities_;
  std::vector<std::string> relations_;
  std::unordered_map<std::string, int> entity_to_idx_;
  std::unordered_map<std::string, int> relation_to_idx_;
  std::vector<bool> numeric_;  // indexed by relation index
};

// Checks that every identifier in `f` resolves in `vocab` and that every
// value's modality matches its relation's numeric flag.
// Throws UnknownIdentifier or ModalityMismatch.
void validate_fact(const Fact& f, const Vocabulary& vocab);

}  // namespace thkg
