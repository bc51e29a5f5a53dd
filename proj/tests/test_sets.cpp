#include <doctest.h>

#include "ballean/sets.hpp"

using namespace bln;

TEST_CASE("mask element round trip") {
  CHECK(mask_to_elems(0b1011) == std::vector<int>{0, 1, 3});
  CHECK(elems_to_mask({0, 1, 3}, 4) == 0b1011);
  CHECK(elems_to_mask({}, 4) == 0);
  CHECK(popcount(0b1011) == 3);
  CHECK(mask_to_string(0b101) == "{0,2}");
  CHECK_THROWS_AS(elems_to_mask({4}, 4), BalleanError);
  CHECK_THROWS_AS(elems_to_mask({-1}, 4), BalleanError);
}

TEST_CASE("symmetric difference is xor") {
  CHECK(symdiff(0b1100, 0b1010) == 0b0110);
  CHECK(symdiff(0b1111, 0b1111) == 0);
}

TEST_CASE("ground set bounds") {
  CHECK(GroundSet::finite(4).window() == 4);
  CHECK(GroundSet::finite(3).full_window_mask() == 0b111);
  CHECK_FALSE(GroundSet::naturals(10).is_finite());
  CHECK_THROWS_AS(GroundSet::finite(0), BalleanError);
  CHECK_THROWS_AS(GroundSet::finite(kMaxWidth + 1), BalleanError);
  CHECK_THROWS_AS(GroundSet::naturals(0), BalleanError);
}

TEST_CASE("verdict statuses") {
  CHECK(Verdict::holds().status() == "holds");
  CHECK(Verdict::fails({{"x", 1}}).status() == "failsWithWitness");
  CHECK(Verdict::at_horizon(true, 10).status() == "verifiedToHorizon");
  CHECK(Verdict::at_horizon(false, 10).status() == "verifiedToHorizon");
  auto j = Verdict::at_horizon(true, 10).to_json();
  CHECK(j["horizon"] == 10);
  CHECK(j["value"] == true);
}

TEST_CASE("point sets with tails") {
  PointSet evens = PointSet::pattern([](std::uint64_t p) { return p % 2 == 0; }, 6);
  CHECK(evens.window == std::vector<std::uint64_t>{0, 2, 4});
  CHECK(evens.contains(4, 6));
  CHECK_FALSE(evens.contains(5, 6));
  CHECK(evens.contains(100, 6));   // beyond the window the tail answers
  CHECK_FALSE(evens.contains(101, 6));
  PointSet fin = PointSet::finite({3, 1, 3});
  CHECK(fin.window == std::vector<std::uint64_t>{1, 3});
  CHECK_FALSE(fin.contains(100, 6));
}
