#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fencetile/bignat.hpp"

namespace fencetile {

using Point = std::vector<std::int64_t>;

struct ParamRange {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// One executable identity. Both sides are evaluated at every point of the
// cartesian product of the ranges that satisfies `valid`. The two sides are
// written against different computation paths (recurrence vs closed form,
// enumeration vs algebra, and so on).
struct IdentityCheck {
  std::string id;
  std::string statement;
  std::vector<std::string> params;
  // Default ranges for a given size scale; always non-degenerate.
  std::function<std::vector<ParamRange>(std::int64_t max_n)> ranges;
  std::function<bool(const Point&)> valid;
  std::function<BigNat(const Point&)> lhs;
  std::function<BigNat(const Point&)> rhs;
};

struct Evaluation {
  Point params;
  BigNat lhs;
  BigNat rhs;
  bool ok = false;
};

struct IdentityReport {
  std::string id;
  std::string statement;
  std::vector<std::string> params;
  std::vector<ParamRange> ranges;
  std::vector<Evaluation> evaluations;
  std::vector<Evaluation> failures;

  bool passed() const { return failures.empty(); }
};

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Per-parameter [lo, hi] replacements, keyed by parameter name.
using RangeOverride = std::map<std::string, std::pair<std::int64_t, std::int64_t>>;

inline constexpr std::int64_t kDefaultMaxN = 60;

// Registered checks, ordered by id.
const std::vector<IdentityCheck>& identity_registry();
const IdentityCheck* find_identity(std::string_view id);

// Throws UnknownIdentity, or EmptyRange when no point survives the
// validity filter.
IdentityReport verify_identity(std::string_view id, const std::optional<RangeOverride>& range = std::nullopt,
                               std::int64_t max_n = kDefaultMaxN);

// Every registered identity at the given scale, in id order. Checks may run
// concurrently; the result order does not depend on scheduling.
std::vector<IdentityReport> verify_all(std::int64_t max_n, bool parallel = true);

std::string format_point(const std::vector<std::string>& names, const Point& p);
// Human-readable summary, one block per report.
std::string format_reports_text(const std::vector<IdentityReport>& reports);
// One line per evaluated point: "id=... n=3 k=2 lhs=... rhs=... ok=1".
std::string format_reports_kv(const std::vector<IdentityReport>& reports);

}  // namespace fencetile
