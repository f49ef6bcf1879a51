#include "thkg/core/time_triplet.hpp"

namespace thkg {

const char* to_string(Conjunction c) {
  switch (c) {
    case Conjunction::Since: return "Since";
    case Conjunction::Until: return "Until";
    case Conjunction::Period: return "Period";
    case Conjunction::Invariant: return "Invariant";
  }
  return "?";
}

Conjunction conjunction_from_string(const std::string& name) {
  if (name == "Since") return Conjunction::Since;
  if (name == "Until") return Conjunction::Until;
  if (name == "Period") return Conjunction::Period;
  if (name == "Invariant") return Conjunction::Invariant;
  throw InvalidTimeTriplet("unknown conjunction: " + name);
}

int conjunction_index(Conjunction c) { return static_cast<int>(c); }

Conjunction conjunction_from_index(int idx) {
  if (idx < 0 || idx >= kConjunctionCount)
    throw InvalidTimeTriplet("conjunction index out of range: " +
                             std::to_string(idx));
  return static_cast<Conjunction>(idx);
}

namespace {

double require_finite(Conjunction c, const char* side,
                      const std::optional<double>& t) {
  if (!t.has_value())
    throw InvalidTimeTriplet(std::string(to_string(c)) +
                             " requires a finite " + side);
  return *t;
}

void require_absent(Conjunction c, const char* side,
                    const std::optional<double>& t) {
  if (t.has_value())
    throw InvalidTimeTriplet(std::string(to_string(c)) + " has an infinite " +
                             side + "; a finite value was supplied");
}

}  // namespace

VersatileTimeTriplet make_time_triplet(Conjunction c, std::optional<double> t1,
                                       std::optional<double> t2) {
  switch (c) {
    case Conjunction::Since: {
      double a = require_finite(c, "t1", t1);
      require_absent(c, "t2", t2);
      return {c, TimeEndpoint::finite(a), TimeEndpoint::pos_infinity()};
    }
    case Conjunction::Until: {
      require_absent(c, "t1", t1);
      double b = require_finite(c, "t2", t2);
      return {c, TimeEndpoint::neg_infinity(), TimeEndpoint::finite(b)};
    }
    case Conjunction::Period: {
      double a = require_finite(c, "t1", t1);
      double b = require_finite(c, "t2", t2);
      if (a > b)
        throw InvalidTimeTriplet("Period with t1 > t2: " + std::to_string(a) +
                                 " > " + std::to_string(b));
      return {c, TimeEndpoint::finite(a), TimeEndpoint::finite(b)};
    }
    case Conjunction::Invariant:
      require_absent(c, "t1", t1);
      require_absent(c, "t2", t2);
      return {c, TimeEndpoint::neg_infinity(), TimeEndpoint::pos_infinity()};
  }
  throw InvalidTimeTriplet("unreachable conjunction");
}

bool timespan_contains(const VersatileTimeTriplet& tt, double t) {
  bool above_start = !tt.t1.is_finite() || t >= tt.t1.value;
  bool below_end = !tt.t2.is_finite() || t <= tt.t2.value;
  return above_start && below_end;
}

}  // namespace thkg
