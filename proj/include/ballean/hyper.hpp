#pragma once

#include "ballean/ballean.hpp"

namespace bln {

// A ball of a hyperballean in closed form: a subset-lattice interval
// [lo, hi], optionally excluding its bottom and/or the empty set. Every
// shipped hyper flavor produces balls of this shape.
struct HyperBall {
  Mask lo = 0;
  Mask hi = 0;
  bool drop_lo = false;     // members strictly above lo
  bool drop_empty = false;  // the empty set is not a member

  bool contains(Mask z) const;
  // every member of *this lies in `outer`
  bool subset_of(const HyperBall& outer) const;
  std::vector<Mask> members() const;  // ascending
};

HyperBall hyper_ball_point_ideal(Mask a, Mask k);
HyperBall hyper_ball_iary(Mask a, Mask k);
HyperBall hyper_ball_cartesian(Mask a, Mask k);

// ---- spec operations on masks ---------------------------------------------

// Exact comprehension over P(X) of the base support; the oracle for the
// closed forms. `payload` must be a chain/ideal radius of the base.
std::vector<Mask> exp_ball_generic(const Ballean& base, Mask a, Mask payload);
std::vector<Mask> exp_ball_point_ideal(const Ideal& ideal, Mask a, Mask k);
std::vector<Mask> exp_ball_iary(const Ideal& ideal, Mask a, Mask k);
std::vector<Mask> cartesian_ball(const Ideal& ideal, Mask a, Mask k);

enum class HyperFlavor {
  ExpGeneric,
  ExpPointIdeal,
  ExpIAry,
  ExpStar,
  Flat,
  Cartesian,
  Macrocube
};
std::string hyper_flavor_name(HyperFlavor f);

// symdiff(Y,Z) in I, with flavor-specific handling of the empty set: the
// Cartesian ballean keeps it (close to Z iff Z in I), the exp flavors
// isolate it and reject it here.
bool are_close(const Ideal& ideal, Mask y, Mask z, HyperFlavor flavor);

// Hyperballean with closed-form balls (ExpPointIdeal / ExpIAry / Cartesian).
// Points are subset masks of the ground window.
class ClosedHyperBallean : public Ballean {
 public:
  // An explicit radius chain (monotone, cofinal members of the ideal) may be
  // supplied; by default the prefixes of union(I) are used.
  ClosedHyperBallean(Ideal ideal, HyperFlavor flavor, std::vector<Mask> chain = {});

  std::string name() const override { return hyper_flavor_name(flavor_); }
  bool finite_model() const override { return ideal_.ground.is_finite(); }
  const std::vector<Point>& window_points() const override { return window_; }
  Point window_bound() const override { return (Point{1} << ideal_.ground.window()); }
  bool in_support(Point p) const override { return p < window_bound(); }
  int chain_size() const override { return static_cast<int>(chain_.size()); }
  nlohmann::json radius_label(int r) const override;
  std::vector<Point> ball(Point center, int r) const override;
  bool in_ball(Point center, int r, Point p) const override;
  bool ball_within(Point y, int rb, Point x, int rg) const override;
  std::optional<std::vector<Point>> ball_payload(Point x, Mask a) const override;

  const Ideal& ideal() const { return ideal_; }
  HyperFlavor flavor() const { return flavor_; }
  // Overridden by the documented fault mutations in tests.
  virtual HyperBall closed_ball(Mask a, Mask k) const;

 private:
  Ideal ideal_;
  HyperFlavor flavor_;
  std::vector<Mask> chain_;
  std::vector<Point> window_;
};

// Generic hyperballean of a small finite-model base, by comprehension.
class ExpGenericBallean : public Ballean {
 public:
  explicit ExpGenericBallean(BalleanPtr base);

  std::string name() const override { return "exp(" + base_->name() + ")"; }
  bool finite_model() const override { return true; }
  const std::vector<Point>& window_points() const override { return window_; }
  Point window_bound() const override { return Point{1} << base_width_; }
  bool in_support(Point p) const override { return p < window_bound(); }
  int chain_size() const override { return base_->chain_size(); }
  nlohmann::json radius_label(int r) const override { return base_->radius_label(r); }
  std::vector<Point> ball(Point center, int r) const override;
  bool in_ball(Point center, int r, Point p) const override;

  const Ballean& base() const { return *base_; }
  Mask ball_set_mask(Mask pts, int r) const;  // B(A, r) over the base, as a mask

 private:
  BalleanPtr base_;
  int base_width_;
  std::vector<Point> window_;
};

BalleanPtr make_exp_point_ideal(Ideal ideal, std::vector<Mask> chain = {});
BalleanPtr make_exp_iary(Ideal ideal, std::vector<Mask> chain = {});
BalleanPtr make_cartesian(Ideal ideal, std::vector<Mask> chain = {});
BalleanPtr make_exp_generic(BalleanPtr base);
// exp minus the empty set
BalleanPtr make_exp_star(BalleanPtr hyper);
// non-empty bounded subsets of the base, as a subballean of `hyper`
BalleanPtr make_flat(const Ballean& base, BalleanPtr hyper);
// subballean of the Cartesian ballean supported on the ideal itself
BalleanPtr make_macrocube(Ideal ideal);

// Connected components of a finite-window hyperballean, each sorted,
// ordered by least member.
std::vector<std::vector<Point>> components_of(const Ballean& b);

enum class DscMethod { Components, Quotient, CRT };

// Number of connected components. Finite grounds only; a countable model has
// no enumerable component count here and reports MethodUnavailable.
long dsc(const Ideal& ideal, HyperFlavor flavor, DscMethod method);

}  // namespace bln
