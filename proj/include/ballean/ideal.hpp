#pragma once

#include <vector>

#include "ballean/sets.hpp"

namespace bln {

// An ideal on the ground set: a downward-closed, union-closed, proper family
// of subsets, given by one of five descriptions. Membership of any finite
// subset is decidable from the description alone.
struct Ideal {
  enum class Desc { Principal, SizeBelow, GeneratedBy, Explicit, Frechet };

  GroundSet ground;
  Desc desc = Desc::Principal;
  Mask principal = 0;            // Desc::Principal
  int size_below = 1;            // Desc::SizeBelow
  std::vector<Mask> family;      // Desc::GeneratedBy basis / Desc::Explicit family

  static Ideal make_principal(GroundSet g, Mask s);
  static Ideal make_size_below(GroundSet g, int lambda);
  static Ideal make_generated_by(GroundSet g, std::vector<Mask> basis);
  static Ideal make_explicit(GroundSet g, std::vector<Mask> fam);
  static Ideal make_frechet(int horizon);

  bool contains(Mask a) const;
  // Union of all members, within the ground window.
  Mask union_all() const;
  // All members, materialized. Finite grounds only for Principal/GeneratedBy;
  // Frechet materializes every subset of the horizon window.
  std::vector<Mask> members() const;

  std::string desc_name() const;
};

// Downward closure, union closure, and properness, with a replayable witness
// on failure. Structured descriptions on a finite ground are materialized and
// checked the same way as Explicit ones.
Verdict ideal_validate(const Ideal& ideal);

// Finite normal form Principal(union of I). Rejects invalid descriptions.
class IdealValidationError : public BalleanError {
 public:
  explicit IdealValidationError(Verdict v)
      : BalleanError("InvalidIdeal", v.witness.dump()), verdict(std::move(v)) {}
  Verdict verdict;
};
Ideal ideal_normalize(const Ideal& ideal);

// {x in X : {x} not in I} = X \ union(I); the fixed points of the dual filter.
Mask ideal_hat(const Ideal& ideal);

// Least number of maximal ideals whose intersection is I; on a finite ground
// this is |ideal_hat(I)|.
int iota(const Ideal& ideal);

struct QuotientRing {
  Ideal ideal;
  std::vector<Mask> cosets;  // numerically least representative per class
};

// Classes of the relation Y ~ Z iff symdiff(Y,Z) in I, over all of P(X).
// Finite ground only.
QuotientRing quotient_cosets(const Ideal& ideal);

}  // namespace bln
