#include <doctest.h>

#include "ballean/ballean.hpp"

using namespace bln;

namespace {

Ideal p01(int n) { return Ideal::make_principal(GroundSet::finite(n), 0b0011); }

std::vector<Mask> proper_principal_masks(int n) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n) - 1; ++s) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("ball formulas on masks") {
  Ideal ideal = p01(4);
  CHECK(ball_point_ideal(ideal, 2, 0b0011) == 0b0100);  // x outside A: {x}
  CHECK(ball_point_ideal(ideal, 1, 0b0011) == 0b0011);  // x inside A: A
  CHECK(ball_iary(ideal, 2, 0b0011) == 0b0111);
  CHECK(ball_iary(ideal, 1, 0b0011) == 0b0011);
  CHECK_THROWS_AS(ball_point_ideal(ideal, 0, 0b0100), BalleanError);
  CHECK_THROWS_AS(ball_iary(ideal, 0, 0b1100), BalleanError);
}

TEST_CASE("axioms hold for base balleans on all small ideals") {
  for (int n = 1; n <= 4; ++n) {
    for (Mask s : proper_principal_masks(n)) {
      Ideal ideal = Ideal::make_principal(GroundSet::finite(n), s);
      CHECK(verify_axioms(*make_point_ideal_ballean(ideal)).value);
      CHECK(verify_axioms(*make_iary_ballean(ideal)).value);
      CHECK(verify_chain_monotone(*make_point_ideal_ballean(ideal)).value);
    }
  }
  Ideal fre = Ideal::make_frechet(12);
  auto v = verify_axioms(*make_point_ideal_ballean(fre));
  CHECK(v.value);
  CHECK(v.to_horizon);
  CHECK(verify_axioms(*make_iary_ballean(fre)).value);
}

TEST_CASE("radius preorder refines payload inclusion") {
  Ideal ideal = Ideal::make_principal(GroundSet::finite(4), 0b0111);
  // payload inclusion always implies ball inclusion; the converse holds for
  // the I-ary balls but not for point-ideal ones (centers off the payload
  // never see it, so incomparable payloads can still nest ball-wise)
  for (auto mk : {make_point_ideal_ballean, make_iary_ballean}) {
    auto b = mk(ideal);
    for (Mask a : ideal.members())
      for (Mask bm : ideal.members())
        if ((a & ~bm) == 0) CHECK(radii_leq(*b, a, bm));
  }
  auto ary = make_iary_ballean(ideal);
  for (Mask a : ideal.members())
    for (Mask bm : ideal.members())
      CHECK(radii_leq(*ary, a, bm) == ((a & ~bm) == 0));
  CHECK(radii_leq(*make_point_ideal_ballean(ideal), 0b001, 0b110));
}

TEST_CASE("components of base balleans") {
  Ideal ideal = p01(4);
  auto b_pi = make_point_ideal_ballean(ideal);
  auto b_ary = make_iary_ballean(ideal);
  // {x} union union(I) when x meets the ideal, {x} isolated otherwise
  CHECK(component(*b_pi, 0) == std::vector<Point>{0, 1});
  CHECK(component(*b_pi, 2) == std::vector<Point>{2});
  CHECK(component(*b_ary, 2) == std::vector<Point>{0, 1, 2});
  CHECK(component(*b_ary, 0) == std::vector<Point>{0, 1});
}

TEST_CASE("boundedness and size predicates on a finite model") {
  Ideal ideal = p01(4);
  auto b = make_point_ideal_ballean(ideal);
  CHECK(is_bounded(*b, PointSet::from_mask(0b0011)).value);
  CHECK(is_bounded(*b, PointSet::from_mask(0b0100)).value);   // singleton
  CHECK_FALSE(is_bounded(*b, PointSet::from_mask(0b0101)).value);
  CHECK(is_large(*b, PointSet::from_mask(0b1111)).value);
  CHECK_FALSE(is_large(*b, PointSet::from_mask(0b0011)).value);  // misses {2},{3}
  CHECK(is_large(*b, PointSet::from_mask(0b1101)).value);  // one point per component
  CHECK(is_thick(*b, PointSet::from_mask(0b0100)).value);  // B(2,r)={2} always
  CHECK_FALSE(is_thick(*b, PointSet::from_mask(0b0001)).value);
  CHECK(is_thin(*b, PointSet::from_mask(0b1111)).value);   // V = payload absorbs non-singleton balls
}

TEST_CASE("thin and slowly oscillating on the Frechet models") {
  Ideal fre = Ideal::make_frechet(10);
  auto b_pi = make_point_ideal_ballean(fre);
  auto b_ary = make_iary_ballean(fre);
  PointSet all = PointSet::pattern([](Point) { return true; }, 10);

  auto thin_pi = is_thin(*b_pi, all);
  CHECK(thin_pi.value);
  CHECK(thin_pi.to_horizon);

  auto thin_ary = is_thin(*b_ary, all);
  CHECK_FALSE(thin_ary.value);
  CHECK_FALSE(thin_ary.to_horizon);  // definitive: the bad set is tail-uniform
  CHECK(thin_ary.witness["x"] == 1);
  CHECK(thin_ary.witness["radius"] == nlohmann::json::array({0}));

  auto parity = [](Point p) { return static_cast<int>(p & 1); };
  auto so_pi = is_slowly_oscillating(*b_pi, parity);
  CHECK(so_pi.value);
  auto so_ary = is_slowly_oscillating(*b_ary, parity);
  CHECK_FALSE(so_ary.value);
  CHECK_FALSE(so_ary.to_horizon);
  CHECK(so_ary.witness["x"] == 1);
  CHECK(so_ary.witness["radius"] == nlohmann::json::array({0}));
}

TEST_CASE("subballean restricts balls") {
  Ideal ideal = p01(4);
  auto sub = make_subballean(make_iary_ballean(ideal), {0, 2, 3}, "sub");
  CHECK(sub->ball(2, sub->chain_size() - 1) == std::vector<Point>{0, 2});
  CHECK(verify_axioms(*sub).value);
}

TEST_CASE("satellite rebuilds the bounded-set ideal") {
  Ideal ideal = p01(4);
  auto b = make_iary_ballean(ideal);
  Ideal bounded = bounded_sets_ideal(*b);
  // bounded in X_ary: the ideal members plus isolated singletons
  CHECK(bounded.contains(0b0011));
  CHECK(bounded.contains(0b0100));
  CHECK_FALSE(bounded.contains(0b0111));
  CHECK_FALSE(bounded.contains(0b1100));
  auto sat = make_satellite(*b);
  CHECK(verify_axioms(*sat).value);
  // the union-closed core is the original ideal: satellite = point-ideal again
  CHECK(sat->ball(0, sat->chain_size() - 1) == std::vector<Point>{0, 1});
  CHECK(sat->ball(2, sat->chain_size() - 1) == std::vector<Point>{2});
  // a bounded ballean has an improper satellite
  Ideal small = Ideal::make_principal(GroundSet::finite(2), 0b01);
  auto sub = make_subballean(make_iary_ballean(small), {0});
  CHECK_THROWS_AS(make_satellite(*sub), BalleanError);
}
