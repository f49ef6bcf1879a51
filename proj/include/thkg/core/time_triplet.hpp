#pragma once
#include <optional>
#include <string>

#include "thkg/errors.hpp"

namespace thkg {

// One end of a validity span: a finite time value or an infinity token.
struct TimeEndpoint {
  enum class Kind { Finite, NegInfinity, PosInfinity };

  Kind kind = Kind::Finite;
  double value = 0.0;  // meaningful only when kind == Finite

  static TimeEndpoint finite(double t) { return {Kind::Finite, t}; }
  static TimeEndpoint neg_infinity() { return {Kind::NegInfinity, 0.0}; }
  static TimeEndpoint pos_infinity() { return {Kind::PosInfinity, 0.0}; }

  bool is_finite() const { return kind == Kind::Finite; }

  bool operator==(const TimeEndpoint& other) const {
    if (kind != other.kind) return false;
    return kind != Kind::Finite || value == other.value;
  }
};

// The four kinds of temporal validity a fact can carry.
enum class Conjunction { Since, Until, Period, Invariant };

inline constexpr int kConjunctionCount = 4;

const char* to_string(Conjunction c);
Conjunction conjunction_from_string(const std::string& name);
int conjunction_index(Conjunction c);
Conjunction conjunction_from_index(int idx);

// (c, t1, t2): a validated time triplet. Endpoint structure is tied to the
// conjunction:
//   Since     -> (finite, +inf)
//   Until     -> (-inf, finite)
//   Period    -> (finite, finite), t1 <= t2
//   Invariant -> (-inf, +inf)
struct VersatileTimeTriplet {
  Conjunction c = Conjunction::Invariant;
  TimeEndpoint t1 = TimeEndpoint::neg_infinity();
  TimeEndpoint t2 = TimeEndpoint::pos_infinity();

  bool operator==(const VersatileTimeTriplet&) const = default;
};

// Builds a triplet from a conjunction and the finite endpoints it expects.
// An absent optional stands for the infinity side implied by the
// conjunction. Throws InvalidTimeTriplet on any inconsistency.
VersatileTimeTriplet make_time_triplet(Conjunction c, std::optional<double> t1,
                                       std::optional<double> t2);

// Closed-interval membership: infinities are unbounded, finite endpoints are
// themselves valid instants.
bool timespan_contains(const VersatileTimeTriplet& tt, double t);

}  // namespace thkg
