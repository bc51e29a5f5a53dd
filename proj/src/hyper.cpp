#include "ballean/hyper.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace bln {
namespace {

nlohmann::json mask_json(Mask m) { return nlohmann::json(mask_to_elems(m)); }

void require_radius(const Ideal& ideal, Mask k) {
  if (!ideal.contains(k))
    throw BalleanError("RadiusNotInIdeal",
                       "radius " + mask_to_string(k) + " is not a member of the ideal");
}

std::vector<Point> all_mask_points(int width) {
  if (width > 20)
    throw BalleanError("WindowTooLarge",
                       "hyperballean window 2^" + std::to_string(width) + " too large");
  std::vector<Point> w;
  w.reserve(std::size_t{1} << width);
  for (Mask m = 0; m < (Mask{1} << width); ++m) w.push_back(m);
  return w;
}

}  // namespace

// ---- HyperBall -------------------------------------------------------------

bool HyperBall::contains(Mask z) const {
  if (lo & ~z) return false;
  if (z & ~hi) return false;
  if (drop_lo && z == lo) return false;
  if (drop_empty && z == 0) return false;
  return true;
}

bool HyperBall::subset_of(const HyperBall& outer) const {
  const Mask free = hi & ~lo;
  if (drop_lo && free == 0) return true;  // empty ball (not produced by the flavors)
  // the top member hi is always attained
  if (hi & ~outer.hi) return false;
  Mask need = outer.lo & ~lo;
  if (need) {
    const bool bottom_attained = !drop_lo && !(drop_empty && lo == 0);
    if (bottom_attained) return false;  // the member lo misses `need`
    // members are lo | S with S a non-empty subset of `free`
    if (free & ~need) return false;        // S avoiding `need` exists
    if (popcount(need) >= 2) return false;  // a single-bit S misses the rest
    if ((free & need) != need) return false;  // no member ever reaches `need`
    // free == need == one bit: every member contains it
  }
  if (outer.drop_lo && contains(outer.lo)) return false;
  if (outer.drop_empty && contains(0)) return false;
  return true;
}

std::vector<Mask> HyperBall::members() const {
  std::vector<Mask> out;
  const Mask free = hi & ~lo;
  Mask s = free;
  for (;;) {
    Mask z = lo | s;
    if (!(drop_lo && z == lo) && !(drop_empty && z == 0)) out.push_back(z);
    if (s == 0) break;
    s = (s - 1) & free;
  }
  std::sort(out.begin(), out.end());
  return out;
}

HyperBall hyper_ball_point_ideal(Mask a, Mask k) {
  if ((a & k) == 0) return {a, a, false, false};
  return {a & ~k, a | k, true, false};
}

HyperBall hyper_ball_iary(Mask a, Mask k) {
  if (a == 0) return {0, 0, false, false};
  return {a & ~k, a | k, false, true};
}

HyperBall hyper_ball_cartesian(Mask a, Mask k) { return {a & ~k, a | k, false, false}; }

// ---- spec operations -------------------------------------------------------

std::vector<Mask> exp_ball_generic(const Ballean& base, Mask a, Mask payload) {
  if (!base.finite_model() || base.window_bound() > 20)
    throw BalleanError("WindowTooLarge", "generic hyperball needs a small finite base");
  const int w = static_cast<int>(base.window_bound());
  auto set_ball = [&](Mask pts) {
    Mask out = 0;
    for (int e : mask_to_elems(pts)) {
      auto bp = base.ball_payload(static_cast<Point>(e), payload);
      if (!bp) throw BalleanError("NoPayloadRadii", "base ballean has no payload radii");
      for (Point q : *bp) out |= Mask{1} << q;
    }
    return out;
  };
  const Mask ball_of_a = set_ball(a);
  std::vector<Mask> out;
  for (Mask c = 0; c < (Mask{1} << w); ++c) {
    if ((c & ~ball_of_a) == 0 && (a & ~set_ball(c)) == 0) out.push_back(c);
  }
  return out;
}

std::vector<Mask> exp_ball_point_ideal(const Ideal& ideal, Mask a, Mask k) {
  require_radius(ideal, k);
  return hyper_ball_point_ideal(a, k).members();
}

std::vector<Mask> exp_ball_iary(const Ideal& ideal, Mask a, Mask k) {
  require_radius(ideal, k);
  return hyper_ball_iary(a, k).members();
}

std::vector<Mask> cartesian_ball(const Ideal& ideal, Mask a, Mask k) {
  require_radius(ideal, k);
  return hyper_ball_cartesian(a, k).members();
}

std::string hyper_flavor_name(HyperFlavor f) {
  switch (f) {
    case HyperFlavor::ExpGeneric: return "expGeneric";
    case HyperFlavor::ExpPointIdeal: return "expPointIdeal";
    case HyperFlavor::ExpIAry: return "expIAry";
    case HyperFlavor::ExpStar: return "expStar";
    case HyperFlavor::Flat: return "flat";
    case HyperFlavor::Cartesian: return "cartesian";
    case HyperFlavor::Macrocube: return "macrocube";
  }
  return "?";
}

bool are_close(const Ideal& ideal, Mask y, Mask z, HyperFlavor flavor) {
  const bool isolates_empty =
      flavor == HyperFlavor::ExpPointIdeal || flavor == HyperFlavor::ExpIAry ||
      flavor == HyperFlavor::ExpStar;
  if (isolates_empty && (y == 0 || z == 0))
    throw BalleanError("EmptySetFlavorMismatch",
                       "the empty set is isolated in the exp flavors");
  return ideal.contains(symdiff(y, z));
}

// ---- ClosedHyperBallean ----------------------------------------------------

ClosedHyperBallean::ClosedHyperBallean(Ideal ideal, HyperFlavor flavor,
                                       std::vector<Mask> chain)
    : ideal_(std::move(ideal)), flavor_(flavor), chain_(std::move(chain)) {
  Verdict v = ideal_validate(ideal_);
  if (!v.value) throw IdealValidationError(std::move(v));
  if (chain_.empty()) {
    Mask u = ideal_.union_all();
    chain_.push_back(0);
    Mask acc = 0;
    for (int e : mask_to_elems(u)) {
      acc |= Mask{1} << e;
      chain_.push_back(acc);
    }
  } else {
    Mask prev = chain_.front();
    for (Mask k : chain_) {
      require_radius(ideal_, k);
      if (prev & ~k)
        throw BalleanError("ChainNotMonotone", "radius chain must be increasing");
      prev = k;
    }
    if (chain_.back() != ideal_.union_all())
      throw BalleanError("ChainNotCofinal", "radius chain must exhaust union(I)");
  }
  window_ = all_mask_points(ideal_.ground.window());
}

nlohmann::json ClosedHyperBallean::radius_label(int r) const {
  return mask_json(chain_.at(r));
}

HyperBall ClosedHyperBallean::closed_ball(Mask a, Mask k) const {
  switch (flavor_) {
    case HyperFlavor::ExpPointIdeal: return hyper_ball_point_ideal(a, k);
    case HyperFlavor::ExpIAry: return hyper_ball_iary(a, k);
    case HyperFlavor::Cartesian: return hyper_ball_cartesian(a, k);
    default:
      throw BalleanError("BadFlavor", "no closed ball form for " + name());
  }
}

std::vector<Point> ClosedHyperBallean::ball(Point center, int r) const {
  return closed_ball(center, chain_.at(r)).members();
}

bool ClosedHyperBallean::in_ball(Point center, int r, Point p) const {
  return closed_ball(center, chain_.at(r)).contains(p);
}

bool ClosedHyperBallean::ball_within(Point y, int rb, Point x, int rg) const {
  return closed_ball(y, chain_.at(rb)).subset_of(closed_ball(x, chain_.at(rg)));
}

std::optional<std::vector<Point>> ClosedHyperBallean::ball_payload(Point x, Mask a) const {
  require_radius(ideal_, a);
  return closed_ball(x, a).members();
}

// ---- ExpGenericBallean -----------------------------------------------------

ExpGenericBallean::ExpGenericBallean(BalleanPtr base)
    : base_(std::move(base)), base_width_(static_cast<int>(base_->window_bound())) {
  if (!base_->finite_model())
    throw BalleanError("FiniteOnly", "generic hyperballean needs a finite base");
  window_ = all_mask_points(base_width_);
}

Mask ExpGenericBallean::ball_set_mask(Mask pts, int r) const {
  Mask out = 0;
  for (int e : mask_to_elems(pts))
    for (Point q : base_->ball(static_cast<Point>(e), r)) out |= Mask{1} << q;
  return out;
}

std::vector<Point> ExpGenericBallean::ball(Point center, int r) const {
  std::vector<Point> out;
  const Mask ball_of_a = ball_set_mask(center, r);
  for (Mask c = 0; c < window_bound(); ++c)
    if ((c & ~ball_of_a) == 0 && (center & ~ball_set_mask(c, r)) == 0) out.push_back(c);
  return out;
}

bool ExpGenericBallean::in_ball(Point center, int r, Point p) const {
  return (p & ~ball_set_mask(center, r)) == 0 &&
         (center & ~ball_set_mask(p, r)) == 0;
}

// ---- factories -------------------------------------------------------------

BalleanPtr make_exp_point_ideal(Ideal ideal, std::vector<Mask> chain) {
  return std::make_shared<ClosedHyperBallean>(std::move(ideal), HyperFlavor::ExpPointIdeal,
                                              std::move(chain));
}

BalleanPtr make_exp_iary(Ideal ideal, std::vector<Mask> chain) {
  return std::make_shared<ClosedHyperBallean>(std::move(ideal), HyperFlavor::ExpIAry,
                                              std::move(chain));
}

BalleanPtr make_cartesian(Ideal ideal, std::vector<Mask> chain) {
  return std::make_shared<ClosedHyperBallean>(std::move(ideal), HyperFlavor::Cartesian,
                                              std::move(chain));
}

BalleanPtr make_exp_generic(BalleanPtr base) {
  return std::make_shared<ExpGenericBallean>(std::move(base));
}

BalleanPtr make_exp_star(BalleanPtr hyper) {
  std::vector<Point> support;
  for (Point p : hyper->window_points())
    if (p != 0) support.push_back(p);
  return make_subballean(std::move(hyper), std::move(support), "expStar");
}

BalleanPtr make_flat(const Ballean& base, BalleanPtr hyper) {
  std::vector<Point> support;
  for (Point p : hyper->window_points())
    if (p != 0 && is_bounded(base, PointSet::from_mask(p)).value) support.push_back(p);
  return make_subballean(std::move(hyper), std::move(support), "flat");
}

BalleanPtr make_macrocube(Ideal ideal) {
  auto cart = make_cartesian(ideal);
  std::vector<Point> support;
  for (Point p : cart->window_points())
    if (ideal.contains(p)) support.push_back(p);
  return make_subballean(std::move(cart), std::move(support), "macrocube");
}

// ---- components and dsc ----------------------------------------------------

std::vector<std::vector<Point>> components_of(const Ballean& b) {
  const auto& pts = b.window_points();
  std::vector<Point> parent(pts.begin(), pts.end());
  std::unordered_map<Point, std::size_t> idx;
  idx.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != pts[i]) {
      std::size_t j = idx.at(parent[i]);
      parent[i] = parent[j];
      i = idx.at(parent[i]);
    }
    return i;
  };
  auto unite = [&](std::size_t i, std::size_t j) {
    i = find(i);
    j = find(j);
    if (i == j) return;
    if (i > j) std::swap(i, j);
    parent[j] = pts[i];
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int r = 0; r < b.chain_size(); ++r)
      for (Point q : b.ball(pts[i], r)) {
        auto it = idx.find(q);
        if (it != idx.end()) unite(i, it->second);
      }
  std::vector<std::vector<Point>> comps;
  std::unordered_map<std::size_t, std::size_t> root_to_comp;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::size_t r = find(i);
    auto it = root_to_comp.find(r);
    if (it == root_to_comp.end()) {
      root_to_comp[r] = comps.size();
      comps.push_back({pts[i]});
    } else {
      comps[it->second].push_back(pts[i]);
    }
  }
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

long dsc(const Ideal& ideal, HyperFlavor flavor, DscMethod method) {
  if (!ideal.ground.is_finite())
    throw BalleanError("MethodUnavailable",
                       "component counts over a countable ground are not enumerable here");
  const bool is_exp =
      flavor == HyperFlavor::ExpPointIdeal || flavor == HyperFlavor::ExpIAry ||
      flavor == HyperFlavor::ExpGeneric;
  switch (method) {
    case DscMethod::Components: {
      BalleanPtr h;
      switch (flavor) {
        case HyperFlavor::Cartesian: h = make_cartesian(ideal); break;
        // The exp flavors share one closeness relation, realized by the
        // I-ary balls; the point-ideal balls are one-step finer whenever the
        // ideal misses a singleton, so counting walks over them would split
        // classes the closeness relation keeps together.
        case HyperFlavor::ExpPointIdeal:
        case HyperFlavor::ExpIAry: h = make_exp_iary(ideal); break;
        case HyperFlavor::ExpGeneric:
          h = make_exp_generic(make_iary_ballean(ideal));
          break;
        default:
          throw BalleanError("BadFlavor", "dsc supports exp and Cartesian flavors");
      }
      return static_cast<long>(components_of(*h).size());
    }
    // In exp the empty set is isolated; it adds a class on top of the coset
    // count unless its coset is already the singleton {emptyset}.
    case DscMethod::Quotient: {
      long base = static_cast<long>(quotient_cosets(ideal).cosets.size());
      return is_exp && ideal.union_all() != 0 ? base + 1 : base;
    }
    case DscMethod::CRT: {
      long base = 1L << iota(ideal);
      return is_exp && ideal.union_all() != 0 ? base + 1 : base;
    }
  }
  throw BalleanError("BadMethod", "unknown dsc method");
}

}  // namespace bln
