#pragma once

#include "ballean/maps.hpp"

namespace bln {

struct SuiteCheck {
  std::string label;
  Verdict verdict;
  // asserted checks drive the overall result; the rest is reported evidence
  bool asserted = true;
  nlohmann::json data;

  nlohmann::json to_json() const;
};

struct SuiteReport {
  std::string suite;
  nlohmann::json model;
  std::vector<SuiteCheck> checks;

  bool ok() const;               // no asserted check with a false value
  std::string overall() const;   // holds | verifiedToHorizon | mixedWithWitnesses
  nlohmann::json to_json() const;
};

// ---- parameterized checks (reused by the fault-detection tests) --------------

// Closed-form hyper balls against the comprehension oracle over the base,
// plus the Cartesian per-coordinate oracle and its 2^|K| cardinality.
Verdict check_closed_forms_against_oracle(const Ideal& ideal, const Ballean& exp_pi,
                                          const Ballean& exp_iary, const Ballean& cart);

using CloseFn = std::function<bool(Mask, Mask)>;
// Component count of the closeness graph over P(X), by exhaustive union-find.
long dsc_via_relation(const Ideal& ideal, const CloseFn& close);
// That count must reproduce the 2^iota closed form.
Verdict check_quotient_against_crt(const Ideal& ideal, const CloseFn& close);

// ---- suites -------------------------------------------------------------------

SuiteReport suite_thin(std::shared_ptr<const IdealBallean> b);
SuiteReport suite_dsc(const Ideal& ideal);
SuiteReport suite_maps(const Ideal& ideal, int x);
SuiteReport suite_kcubes(int horizon, int x, int window);

}  // namespace bln
