#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ballean/ideal.hpp"
#include "ballean/sets.hpp"

namespace bln {

// A point of a ballean support. Base balleans use element ids; hyperballeans
// use subset masks.
using Point = std::uint64_t;

// A ballean presented through its declared cofinal chain of radii. The chain
// is monotone (each radius dominates the earlier ones), so quantifications
// over the chain are sound in both directions for every predicate below.
//
// Countable models expose a finite quantification window plus a few probe
// points beyond it; verdicts obtained that way carry the to_horizon flag.
class Ballean {
 public:
  virtual ~Ballean() = default;

  virtual std::string name() const = 0;
  virtual bool finite_model() const = 0;
  // Support points below window_bound(), ascending.
  virtual const std::vector<Point>& window_points() const = 0;
  virtual Point window_bound() const = 0;
  // Sample points at/beyond the window of a countable model; empty otherwise.
  virtual std::vector<Point> probe_points() const { return {}; }
  virtual bool in_support(Point p) const = 0;

  virtual int chain_size() const = 0;
  virtual nlohmann::json radius_label(int r) const = 0;

  virtual std::vector<Point> ball(Point center, int r) const = 0;
  virtual bool in_ball(Point center, int r, Point p) const;
  // B(y, rb) subseteq B(x, rg)?
  virtual bool ball_within(Point y, int rb, Point x, int rg) const;
  // Ball with an arbitrary radius payload, for balleans whose radii are
  // ideal members. nullopt when the ballean has no payload radii.
  virtual std::optional<std::vector<Point>> ball_payload(Point, Mask) const {
    return std::nullopt;
  }

  std::vector<Point> quantified_points() const;  // window + probes
};

using BalleanPtr = std::shared_ptr<const Ballean>;

// ---- spec ball formulas on raw masks -------------------------------------

// {x} if x not in A, else A.
Mask ball_point_ideal(const Ideal& ideal, int x, Mask a);
// {x} union A.
Mask ball_iary(const Ideal& ideal, int x, Mask a);

// Balleans whose radii are the members of an ideal, enumerated through the
// monotone chain of prefixes of union(I).
class IdealBallean : public Ballean {
 public:
  enum class Flavor { PointIdeal, IAry };
  IdealBallean(Ideal ideal, Flavor flavor);

  std::string name() const override;
  bool finite_model() const override { return ideal_.ground.is_finite(); }
  const std::vector<Point>& window_points() const override { return window_; }
  Point window_bound() const override { return ideal_.ground.window(); }
  std::vector<Point> probe_points() const override;
  bool in_support(Point p) const override;
  int chain_size() const override { return static_cast<int>(chain_.size()); }
  nlohmann::json radius_label(int r) const override;
  std::vector<Point> ball(Point center, int r) const override;
  bool in_ball(Point center, int r, Point p) const override;
  std::optional<std::vector<Point>> ball_payload(Point x, Mask a) const override;

  Mask chain_mask(int r) const { return chain_.at(r); }
  const Ideal& ideal() const { return ideal_; }
  Flavor flavor() const { return flavor_; }
  // Overridden by the documented fault mutations in tests.
  virtual Mask ball_mask(Point x, Mask payload) const;

 private:
  Ideal ideal_;
  Flavor flavor_;
  std::vector<Mask> chain_;
  std::vector<Point> window_;
};

BalleanPtr make_point_ideal_ballean(Ideal ideal);
BalleanPtr make_iary_ballean(Ideal ideal);

// Subballean on a subset of the support; balls intersected with it.
class SubBallean : public Ballean {
 public:
  SubBallean(BalleanPtr base, std::vector<Point> support, std::string label);

  std::string name() const override { return label_; }
  bool finite_model() const override { return base_->finite_model(); }
  const std::vector<Point>& window_points() const override { return window_; }
  Point window_bound() const override { return base_->window_bound(); }
  std::vector<Point> probe_points() const override;
  bool in_support(Point p) const override;
  int chain_size() const override { return base_->chain_size(); }
  nlohmann::json radius_label(int r) const override { return base_->radius_label(r); }
  std::vector<Point> ball(Point center, int r) const override;
  bool in_ball(Point center, int r, Point p) const override;
  std::optional<std::vector<Point>> ball_payload(Point x, Mask a) const override;

  const Ballean& base() const { return *base_; }

 private:
  BalleanPtr base_;
  std::vector<Point> window_;
  std::string label_;
};

BalleanPtr make_subballean(BalleanPtr base, std::vector<Point> support,
                           std::string label = "sub");

// ---- predicates -----------------------------------------------------------

// Containment, symmetry, and upper multiplicativity over the chain.
Verdict verify_axioms(const Ballean& b);
// Each chain radius is dominated by its successors.
Verdict verify_chain_monotone(const Ballean& b);

// alpha <= beta in the ball preorder, swept pointwise.
bool radii_leq(const Ballean& b, Mask alpha, Mask beta);

// Union of balls over the chain (= ball at the top chain radius).
std::vector<Point> component(const Ballean& b, Point x);

// B(A, r) for a set of points, within the quantified range.
std::vector<Point> ball_of_set(const Ballean& b, const std::vector<Point>& a, int r);

Verdict is_bounded(const Ballean& b, const PointSet& a);
Verdict is_large(const Ballean& b, const PointSet& a);
Verdict is_thick(const Ballean& b, const PointSet& a);
Verdict is_small(const Ballean& b, const PointSet& a);
Verdict is_thin(const Ballean& b, const PointSet& a);
Verdict is_slowly_oscillating(const Ballean& b, const std::function<int(Point)>& f);

// Point ideal ballean over the ideal of bounded sets. Finite models only;
// throws ImproperSatellite when every subset is bounded.
BalleanPtr make_satellite(const Ballean& b);
// The computed ideal of bounded sets of a finite-model base ballean.
Ideal bounded_sets_ideal(const Ballean& b);

}  // namespace bln
