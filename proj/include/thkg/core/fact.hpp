#pragma once
#include <string>
#include <variant>
#include <vector>

#include "thkg/core/time_triplet.hpp"

namespace thkg {

// A slot value: an entity identifier or a numeric literal (units are
// relation-specific).
class Value {
 public:
  Value() : v_(std::string{}) {}
  static Value entity(std::string id) { return Value(std::move(id)); }
  static Value number(double x) { return Value(x); }

  bool is_entity() const { return std::holds_alternative<std::string>(v_); }
  bool is_number() const { return !is_entity(); }
  const std::string& entity_id() const { return std::get<std::string>(v_); }
  double number_value() const { return std::get<double>(v_); }

  bool operator==(const Value&) const = default;

 private:
  explicit Value(std::string id) : v_(std::move(id)) {}
  explicit Value(double x) : v_(x) {}
  std::variant<std::string, double> v_;
};

struct Qualifier {
  std::string k;
  Value v;
  bool operator==(const Qualifier&) const = default;
};

// A temporal hyper-relational fact: base triplet, time triplet, qualifiers.
// The subject is always an entity; qualifier order is preserved from the
// source file.
struct Fact {
  std::string s;
  std::string r;
  Value o;
  VersatileTimeTriplet time;
  std::vector<Qualifier> qualifiers;

  bool operator==(const Fact&) const = default;
};

// Stable key identifying a fact's base triplet plus qualifier multiset
// (qualifier order is ignored). Used for grouping during merges.
std::string triplet_key(const Fact& f);

}  // namespace thkg
