#include <doctest.h>

#include "ballean/maps.hpp"

using namespace bln;

namespace {

Ideal p01(int n) { return Ideal::make_principal(GroundSet::finite(n), 0b0011); }

}  // namespace

TEST_CASE("identity X_I to X_ary is coarse but not effectively proper") {
  for (int n = 3; n <= 4; ++n) {
    for (Mask s = 1; s < (Mask{1} << n) - 1; ++s) {
      Ideal ideal = Ideal::make_principal(GroundSet::finite(n), s);
      BalleanMap m = map_identity(make_point_ideal_ballean(ideal),
                                  make_iary_ballean(ideal));
      CHECK(is_coarse(m).value);
      auto ep = is_effectively_proper(m);
      CHECK_FALSE(ep.value);
      CHECK_FALSE(ep.witness.is_null());
      CHECK_FALSE(is_coarse_embedding(m).value);
      CHECK_FALSE(is_asymorphism(m).value);
    }
  }
  // naturals: same pattern, flagged as horizon evidence
  Ideal fre = Ideal::make_frechet(12);
  BalleanMap m = map_identity(make_point_ideal_ballean(fre), make_iary_ballean(fre));
  auto c = is_coarse(m);
  CHECK(c.value);
  CHECK(c.to_horizon);
  auto ep = is_effectively_proper(m);
  CHECK_FALSE(ep.value);
  CHECK(ep.to_horizon);
}

TEST_CASE("degenerate ideals make the identity an asymorphism") {
  Ideal empty_ideal = Ideal::make_principal(GroundSet::finite(1), 0);
  BalleanMap m = map_identity(make_point_ideal_ballean(empty_ideal),
                              make_iary_ballean(empty_ideal));
  CHECK(is_asymorphism(m).value);
  CHECK(is_coarse_equivalence(m).value);
}

TEST_CASE("ball-image criterion certifies and rejects") {
  Ideal ideal = p01(3);
  // the identity on the same ballean trivially satisfies the criterion
  auto b = make_point_ideal_ballean(ideal);
  BalleanMap same = map_identity(b, b);
  std::vector<int> psi(b->chain_size());
  for (int i = 0; i < b->chain_size(); ++i) psi[i] = i;
  CHECK(check_ball_image_criterion(same, psi).value);
  // X_I -> X_ary fails it: the image ball picks up the whole payload
  BalleanMap id = map_identity(b, make_iary_ballean(ideal));
  CHECK_FALSE(check_ball_image_criterion(id, psi).value);
  // non-injective maps are rejected outright
  BalleanMap collapse{b, b, [](Point) { return Point{0}; }, "const"};
  CHECK_THROWS_AS(check_ball_image_criterion(collapse, psi), BalleanError);
  CHECK_THROWS_AS(check_ball_image_criterion(same, {0}), BalleanError);
}

TEST_CASE("hyper lifts of the identity") {
  Ideal ideal = p01(3);
  BalleanMap id = map_identity(make_point_ideal_ballean(ideal),
                               make_iary_ballean(ideal));
  BalleanMap lifted = map_exp(id);
  CHECK(is_coarse(lifted).value);
  CHECK_FALSE(is_asymorphism(lifted).value);  // properness failure transfers
  BalleanMap flat = map_flat(id);
  CHECK(is_coarse(flat).value);
}

TEST_CASE("complement maps") {
  Ideal ideal = p01(3);
  auto b_pi = make_point_ideal_ballean(ideal);
  // X_I is thin, so x -> X \ {x} embeds asymorphically into exp
  CHECK(is_asymorphic_embedding(map_C(b_pi)).value);
  BalleanMap cb = map_CB(b_pi);
  CHECK(is_injective(cb).value);
  // flat domain: the non-empty bounded sets
  CHECK(cb.domain->window_points() ==
        std::vector<Point>{0b001, 0b010, 0b011, 0b100});
}

TEST_CASE("j_x restriction is an asymorphism with large image") {
  for (int n = 3; n <= 4; ++n) {
    for (Mask s = 1; s < (Mask{1} << n) - 1; ++s) {
      Ideal ideal = Ideal::make_principal(GroundSet::finite(n), s);
      for (int x : mask_to_elems(s)) {
        JxMaps jm = map_jx(ideal, x);
        std::vector<int> psi(jm.chain_len);
        for (int i = 0; i < jm.chain_len; ++i) psi[i] = i;
        CHECK(check_ball_image_criterion(jm.j_ux, psi).value);
        CHECK(is_asymorphism(jm.j_ux).value);
        CHECK(is_large(*jm.cartesian, PointSet::finite(jm.ux_support)).value);
        CHECK(check_ball_image_criterion(jm.j_ix, psi).value);
        CHECK(is_asymorphism(jm.j_ix).value);
      }
    }
  }
  CHECK_THROWS_AS(map_jx(p01(4), 2), BalleanError);
}

TEST_CASE("macrocube embedding formulas") {
  CHECK(kcube_phi(0b101) == 0b100010);
  CHECK(kcube_apply(0b1) == 0b11);  // f({0}) = {0,1}
  CHECK(kcube_apply(0) == 0);
  // f({2,5}) = {4} union {5,11}
  CHECK(kcube_apply((Mask{1} << 2) | (Mask{1} << 5)) ==
        ((Mask{1} << 4) | (Mask{1} << 5) | (Mask{1} << 11)));
  CHECK(kcube_image_shape_ok(kcube_apply(0b1101)));
  CHECK_FALSE(kcube_image_shape_ok(0b101));   // two even bits
  CHECK_FALSE(kcube_image_shape_ok(0b1010));  // no even bit
}

TEST_CASE("macrocube window checks hold") {
  CHECK(check_kcube_min_segment_eq(16).value);
  auto v = check_kcube_image_ball_eq(8);
  CHECK(v.value);
  CHECK(v.to_horizon);
  CHECK(check_kcube_image_shape(12).value);
  CHECK(check_kcube_i_identity(0, 6).value);
  CHECK(check_kcube_i_identity(2, 5).value);
  CHECK(check_kcube_i_cofinality(0, 6).value);
  CHECK(check_kcube_copies_close(0, 1, 5).value);
  CHECK(check_kcube_partition(10).value);
  CHECK(check_kcube_flat_restriction(0, 5).value);
  CHECK_THROWS_AS(check_kcube_image_ball_eq(0), BalleanError);
  CHECK_THROWS_AS(check_kcube_i_identity(0, 25), BalleanError);
  CHECK_THROWS_AS(check_kcube_copies_close(2, 2, 5), BalleanError);
}
