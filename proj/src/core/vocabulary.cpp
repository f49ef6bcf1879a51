#include "thkg/core/vocabulary.hpp"

#include <nlohmann/json.hpp>

#include "thkg/errors.hpp"
#include "thkg/util/hash.hpp"

namespace thkg {

using nlohmann::ordered_json;

int Vocabulary::add_entity(const std::string& id) {
  auto it = entity_to_idx_.find(id);
  if (it != entity_to_idx_.end()) return it->second;
  int idx = static_cast<int>(entities_.size());
  entities_.push_back(id);
  entity_to_idx_.emplace(id, idx);
  return idx;
}

int Vocabulary::add_relation(const std::string& id) {
  auto it = relation_to_idx_.find(id);
  if (it != relation_to_idx_.end()) return it->second;
  int idx = static_cast<int>(relations_.size());
  relations_.push_back(id);
  relation_to_idx_.emplace(id, idx);
  numeric_.push_back(false);
  return idx;
}

std::optional<int> Vocabulary::entity_index(const std::string& id) const {
  auto it = entity_to_idx_.find(id);
  if (it == entity_to_idx_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Vocabulary::relation_index(const std::string& id) const {
  auto it = relation_to_idx_.find(id);
  if (it == relation_to_idx_.end()) return std::nullopt;
  return it->second;
}

void Vocabulary::set_numeric(int relation_idx, bool numeric) {
  numeric_.at(relation_idx) = numeric;
}

bool Vocabulary::is_numeric_relation(int relation_idx) const {
  return numeric_.at(relation_idx);
}

std::vector<int> Vocabulary::numeric_relations() const {
  std::vector<int> out;
  for (int i = 0; i < relation_count(); ++i)
    if (numeric_[i]) out.push_back(i);
  return out;
}

std::string Vocabulary::to_json_string() const {
  ordered_json j;
  j["entities"] = entities_;
  j["relations"] = relations_;
  j["numeric_relations"] = numeric_relations();
  j["conjunctions"] = {"Since", "Until", "Period", "Invariant"};
  return j.dump();
}

Vocabulary Vocabulary::from_json_string(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Vocabulary v;
  for (const auto& e : j.at("entities")) v.add_entity(e.get<std::string>());
  for (const auto& r : j.at("relations")) v.add_relation(r.get<std::string>());
  for (const auto& idx : j.at("numeric_relations"))
    v.set_numeric(idx.get<int>(), true);
  return v;
}

std::uint64_t Vocabulary::content_hash() const {
  return fnv1a64(to_json_string());
}

bool Vocabulary::operator==(const Vocabulary& other) const {
  return entities_ == other.entities_ && relations_ == other.relations_ &&
         numeric_ == other.numeric_;
}

namespace {

void check_value(const Value& v, int relation_idx, const std::string& rel_id,
                 const Vocabulary& vocab) {
  bool numeric = vocab.is_numeric_relation(relation_idx);
  if (v.is_number() && !numeric)
    throw ModalityMismatch("numeric value under entity-flagged relation '" +
                           rel_id + "'");
  if (v.is_entity()) {
    if (numeric)
      throw ModalityMismatch("entity value under numeric-flagged relation '" +
                             rel_id + "'");
    if (!vocab.entity_index(v.entity_id()))
      throw UnknownIdentifier("unknown entity '" + v.entity_id() + "'");
  }
}

}  // namespace

void validate_fact(const Fact& f, const Vocabulary& vocab) {
  if (!vocab.entity_index(f.s))
    throw UnknownIdentifier("unknown entity '" + f.s + "'");
  auto r_idx = vocab.relation_index(f.r);
  if (!r_idx) throw UnknownIdentifier("unknown relation '" + f.r + "'");
  check_value(f.o, *r_idx, f.r, vocab);
  for (const auto& q : f.qualifiers) {
    auto k_idx = vocab.relation_index(q.k);
    if (!k_idx) throw UnknownIdentifier("unknown relation '" + q.k + "'");
    check_value(q.v, *k_idx, q.k, vocab);
  }
}

}  // namespace thkg
