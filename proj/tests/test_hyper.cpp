#include <doctest.h>

#include <algorithm>

#include "ballean/hyper.hpp"

using namespace bln;

namespace {

Ideal p12_3() { return Ideal::make_principal(GroundSet::finite(3), 0b110); }
Ideal p01(int n) { return Ideal::make_principal(GroundSet::finite(n), 0b0011); }

std::vector<Mask> as_masks(const std::vector<Point>& v) {
  return std::vector<Mask>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("hyper ball interval algebra") {
  HyperBall hb{0b001, 0b111, true, false};
  CHECK(hb.contains(0b011));
  CHECK_FALSE(hb.contains(0b001));  // dropped bottom
  CHECK_FALSE(hb.contains(0b010));  // misses lo
  CHECK(hb.members() == std::vector<Mask>{0b011, 0b101, 0b111});

  HyperBall degenerate{0b010, 0b010, false, false};
  CHECK(degenerate.members() == std::vector<Mask>{0b010});

  HyperBall iary{0, 0b011, false, true};
  CHECK(iary.members() == std::vector<Mask>{0b001, 0b010, 0b011});
}

TEST_CASE("subset_of agrees with the member-by-member oracle") {
  // every ball the three flavors can produce over a 3-bit window
  std::vector<HyperBall> balls;
  for (Mask a = 0; a < 8; ++a)
    for (Mask k = 0; k < 8; ++k) {
      balls.push_back(hyper_ball_point_ideal(a, k));
      balls.push_back(hyper_ball_iary(a, k));
      balls.push_back(hyper_ball_cartesian(a, k));
    }
  for (const auto& inner : balls) {
    for (const auto& outer : balls) {
      bool oracle = true;
      for (Mask z : inner.members())
        if (!outer.contains(z)) { oracle = false; break; }
      CHECK(inner.subset_of(outer) == oracle);
    }
  }
}

TEST_CASE("closed forms match the frozen example") {
  Ideal ideal = p12_3();
  CHECK(exp_ball_point_ideal(ideal, 0b011, 0b110) ==
        std::vector<Mask>{0b011, 0b101, 0b111});
  CHECK(exp_ball_iary(ideal, 0b011, 0b110) ==
        std::vector<Mask>{0b001, 0b011, 0b101, 0b111});
  CHECK(cartesian_ball(ideal, 0b011, 0b110) ==
        std::vector<Mask>{0b001, 0b011, 0b101, 0b111});
  // a center disjoint from the radius: the point-ideal ball degenerates
  CHECK(exp_ball_point_ideal(ideal, 0b001, 0b110) == std::vector<Mask>{0b001});
  CHECK_THROWS_AS(exp_ball_point_ideal(ideal, 0b001, 0b001), BalleanError);
}

TEST_CASE("closed forms match the generic comprehension") {
  for (Mask s : {Mask{0b110}, Mask{0b001}, Mask{0b011}}) {
    Ideal ideal = Ideal::make_principal(GroundSet::finite(3), s);
    auto base_pi = make_point_ideal_ballean(ideal);
    auto base_ary = make_iary_ballean(ideal);
    for (Mask k : ideal.members()) {
      for (Mask a = 0; a < 8; ++a) {
        CHECK(exp_ball_point_ideal(ideal, a, k) == exp_ball_generic(*base_pi, a, k));
        CHECK(exp_ball_iary(ideal, a, k) == exp_ball_generic(*base_ary, a, k));
        CHECK(cartesian_ball(ideal, a, k).size() ==
              (std::size_t{1} << popcount(k)));
      }
    }
  }
}

TEST_CASE("closeness is symmetric difference in the ideal") {
  Ideal ideal = p01(4);
  CHECK(are_close(ideal, 0b0101, 0b0110, HyperFlavor::Cartesian));
  CHECK_FALSE(are_close(ideal, 0b0101, 0b1100, HyperFlavor::Cartesian));
  CHECK(are_close(ideal, 0, 0b0011, HyperFlavor::Cartesian));
  CHECK(are_close(ideal, 0b0101, 0b0110, HyperFlavor::ExpIAry));
  CHECK_THROWS_AS(are_close(ideal, 0, 0b0011, HyperFlavor::ExpIAry), BalleanError);
  CHECK_THROWS_AS(are_close(ideal, 0b0011, 0, HyperFlavor::ExpPointIdeal), BalleanError);
}

TEST_CASE("hyperballean balls and axioms") {
  Ideal ideal = p01(4);
  auto exp_pi = make_exp_point_ideal(ideal);
  auto exp_ary = make_exp_iary(ideal);
  auto cart = make_cartesian(ideal);
  for (const auto& h : {exp_pi, exp_ary, cart}) {
    CHECK(verify_axioms(*h).value);
    CHECK(verify_chain_monotone(*h).value);
  }
  // empty set isolated in exp, absorbed in the Cartesian ballean
  CHECK(exp_ary->ball(0, exp_ary->chain_size() - 1) == std::vector<Point>{0});
  CHECK(cart->ball(0, cart->chain_size() - 1) ==
        std::vector<Point>{0b0000, 0b0001, 0b0010, 0b0011});
  // ball_within goes through the interval algebra; cross-check on members
  for (Mask a = 0; a < 16; ++a)
    for (int rb = 0; rb < exp_ary->chain_size(); ++rb)
      for (int rg = 0; rg < exp_ary->chain_size(); ++rg) {
        bool oracle = true;
        auto outer = exp_ary->ball(a, rg);
        for (Point z : exp_ary->ball(a, rb))
          if (!std::binary_search(outer.begin(), outer.end(), z)) { oracle = false; break; }
        CHECK(exp_ary->ball_within(a, rb, a, rg) == oracle);
      }
}

TEST_CASE("explicit radius chains are validated") {
  Ideal ideal = p01(4);
  CHECK_NOTHROW(make_exp_point_ideal(ideal, {0b0001, 0b0011}));
  CHECK_THROWS_AS(make_exp_point_ideal(ideal, {0b0010, 0b0001}), BalleanError);
  CHECK_THROWS_AS(make_exp_point_ideal(ideal, {0b0000, 0b0001}), BalleanError);
  CHECK_THROWS_AS(make_exp_point_ideal(ideal, {0b0100, 0b0111}), BalleanError);
}

TEST_CASE("derived hyper variants") {
  Ideal ideal = p01(4);
  auto base = make_point_ideal_ballean(ideal);
  auto exp_gen = make_exp_generic(base);
  CHECK(exp_gen->window_points().size() == 16);
  // generic comprehension agrees with the closed-form hyperballean
  auto exp_pi = make_exp_point_ideal(ideal);
  for (Mask a = 0; a < 16; ++a)
    for (int r = 0; r < exp_pi->chain_size(); ++r)
      CHECK(exp_gen->ball(a, r) == exp_pi->ball(a, r));

  auto star = make_exp_star(make_exp_iary(ideal));
  CHECK_FALSE(star->in_support(0));
  CHECK(star->window_points().size() == 15);

  auto flat = make_flat(*base, make_exp_point_ideal(ideal));
  CHECK(as_masks(flat->window_points()) ==
        std::vector<Mask>{0b0001, 0b0010, 0b0011, 0b0100, 0b1000});

  auto cube = make_macrocube(ideal);
  CHECK(as_masks(cube->window_points()) ==
        std::vector<Mask>{0b0000, 0b0001, 0b0010, 0b0011});
  CHECK(verify_axioms(*cube).value);
}

TEST_CASE("components and the three counting methods") {
  Ideal ideal = p01(4);
  auto comps_cart = components_of(*make_cartesian(ideal));
  CHECK(comps_cart.size() == 4);
  CHECK(comps_cart[0] == std::vector<Point>{0b0000, 0b0001, 0b0010, 0b0011});
  auto comps_exp = components_of(*make_exp_iary(ideal));
  CHECK(comps_exp.size() == 5);
  CHECK(comps_exp[0] == std::vector<Point>{0});  // the isolated empty set

  for (int n = 1; n <= 4; ++n) {
    for (Mask s = 0; s < (Mask{1} << n) - 1; ++s) {
      Ideal i = Ideal::make_principal(GroundSet::finite(n), s);
      const long expected = 1L << (n - popcount(s));
      // the isolated empty set adds a class unless its coset is {emptyset}
      const long expected_exp = s ? expected + 1 : expected;
      for (auto m : {DscMethod::Components, DscMethod::Quotient, DscMethod::CRT}) {
        CHECK(dsc(i, HyperFlavor::Cartesian, m) == expected);
        CHECK(dsc(i, HyperFlavor::ExpPointIdeal, m) == expected_exp);
        CHECK(dsc(i, HyperFlavor::ExpIAry, m) == expected_exp);
      }
      CHECK(dsc(i, HyperFlavor::ExpGeneric, DscMethod::Components) == expected_exp);
    }
  }
  CHECK_THROWS_AS(dsc(Ideal::make_frechet(8), HyperFlavor::Cartesian, DscMethod::CRT),
                  BalleanError);
}
