#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace bln {

// Subsets of the ground set are encoded as bitmasks: bit i = membership of
// element i. Enumeration order over subsets is numeric ascending, which is
// also the canonical (lexicographically least representative) order.
using Mask = std::uint64_t;

// Widest universe a Mask can hold. Kcube checks shift masks left by x+1,
// so the effective ground window must stay below this.
inline constexpr int kMaxWidth = 48;

int popcount(Mask m);
std::vector<int> mask_to_elems(Mask m);
Mask elems_to_mask(const std::vector<int>& elems, int width);
std::string mask_to_string(Mask m);

inline Mask symdiff(Mask a, Mask b) { return a ^ b; }

struct GroundSet {
  enum class Kind { Finite, Naturals };
  Kind kind = Kind::Finite;
  // Finite: number of elements (elements are 0..size-1).
  // Naturals: horizon bounding all enumerations.
  int size = 1;

  static GroundSet finite(int n);
  static GroundSet naturals(int horizon);

  bool is_finite() const { return kind == Kind::Finite; }
  int window() const { return size; }
  Mask full_window_mask() const {
    return window() >= 64 ? ~Mask{0} : ((Mask{1} << window()) - 1);
  }
  bool operator==(const GroundSet&) const = default;
};

// Three-valued check result. `value` is the truth value; `to_horizon` marks
// verdicts obtained on a horizon-truncated countable model (evidence, not
// proof). The spec statuses map as:
//   Holds              = value && !to_horizon
//   FailsWithWitness   = !value && !to_horizon (witness attached)
//   VerifiedToHorizon  = to_horizon (either polarity, `value` carried)
struct Verdict {
  bool value = true;
  bool to_horizon = false;
  int horizon = 0;
  nlohmann::json witness;  // null when no witness

  static Verdict holds() { return {true, false, 0, nullptr}; }
  static Verdict fails(nlohmann::json w) { return {false, false, 0, std::move(w)}; }
  static Verdict at_horizon(bool v, int h, nlohmann::json w = nullptr) {
    return {v, true, h, std::move(w)};
  }

  bool proved() const { return !to_horizon; }
  std::string status() const;
  nlohmann::json to_json() const;
};

// Thrown on contract violations (radius not in the ideal, empty set passed
// to a flavor that isolates it, improper satellite, ...).
class BalleanError : public std::runtime_error {
 public:
  BalleanError(std::string code, std::string msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// A set of points of a possibly-infinite support. `window` lists the members
// below the model window; `tail`, when set, decides membership of points at
// or beyond the window (used for pattern sets like "all evens" on the
// naturals). A set without a tail is finite.
struct PointSet {
  std::vector<std::uint64_t> window;
  std::function<bool(std::uint64_t)> tail;  // null => no points beyond window

  bool has_tail() const { return static_cast<bool>(tail); }
  bool contains(std::uint64_t p, std::uint64_t window_bound) const;
  static PointSet finite(std::vector<std::uint64_t> pts);
  static PointSet from_mask(Mask m);
  static PointSet pattern(std::function<bool(std::uint64_t)> pred,
                          std::uint64_t window_bound);
};

}  // namespace bln
