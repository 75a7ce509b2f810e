#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace smd {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input data: dangling references, malformed files, broken invariants.
struct ValidationError : Error {
  using Error::Error;
};

// Internal solver failure. Deliberately distinct from an infeasible model,
// which is a valid clearing outcome.
struct SolverError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Integer model period, 1-based. Period 1 is the first period of the
// calendar year start_year. All horizons (bid horizon, cap horizon) are
// period indices; calendar years exist only at the I/O boundary.
using Period = int;

struct Calendar {
  double start_year = 2020.0;
  int periods_per_year = 1;

  Period year_to_period(double year) const {
    return static_cast<Period>(
               std::lround((year - start_year) * periods_per_year)) +
           1;
  }
  double period_to_year(Period p) const {
    return start_year + static_cast<double>(p - 1) / periods_per_year;
  }
};

enum class ActivityKind { emission, sequestration };

inline const char* to_string(ActivityKind k) {
  return k == ActivityKind::emission ? "emission" : "sequestration";
}

// A tradable contract class: a pollutant emitted or a sequestration type.
// `unit` is the quantity unit of one contract (e.g. "Mt CO2", "kha");
// `kernel_id` names the warming kernel expressed in milli-C per `unit`.
struct Activity {
  std::string id;
  std::string name;
  ActivityKind kind = ActivityKind::emission;
  std::string unit;
  std::string kernel_id;
};

// One (price, max quantity) offer by an agent for one activity in one
// period. Negative price = sequestration offer (the manager pays).
struct Bid {
  std::string agent;
  std::string activity;
  Period period = 1;
  double price = 0.0;    // money per unit
  double max_qty = 0.0;  // units, >= 0
};

// Allowed warming per period, milli-C above baseline. Periods before
// first_constrained are uncapped; entries may be +inf (uncapped) or
// negative (the manager buys net cooling).
struct CapSchedule {
  Period first_constrained = 1;  // Y
  Period last_constrained = 1;   // T
  std::vector<double> caps_milliC;

  double cap(Period t) const {
    if (t < first_constrained || t > last_constrained) return kInf;
    return caps_milliC.at(static_cast<size_t>(t - first_constrained));
  }
  int scheduled_periods() const {
    return last_constrained - first_constrained + 1;
  }
  void validate() const {
    if (first_constrained > last_constrained)
      throw ValidationError("cap schedule: first constrained period " +
                            std::to_string(first_constrained) +
                            " is after last constrained period " +
                            std::to_string(last_constrained));
    if (static_cast<int>(caps_milliC.size()) != scheduled_periods())
      throw ValidationError(
          "cap schedule: " + std::to_string(caps_milliC.size()) +
          " cap values for " + std::to_string(scheduled_periods()) +
          " scheduled periods");
  }

  static CapSchedule uniform(Period first, Period last, double cap) {
    CapSchedule s;
    s.first_constrained = first;
    s.last_constrained = last;
    s.caps_milliC.assign(static_cast<size_t>(last - first + 1), cap);
    return s;
  }
};

struct AuctionConfig {
  Calendar calendar;
  Period last_bid_period = 1;  // T_B; all bid periods lie in [1, T_B]
  CapSchedule cap_schedule;
  std::map<std::string, double> initial_burdens;  // activity id -> units

  Period last_constrained_period() const {
    return cap_schedule.last_constrained;
  }
};

}  // namespace smd
