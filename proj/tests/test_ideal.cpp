#include <doctest.h>

#include "ballean/ideal.hpp"

using namespace bln;

namespace {

// all-pairs closeness components, independent of the library's union-find
long coset_oracle(const Ideal& ideal) {
  const int n = ideal.ground.window();
  std::vector<int> comp(std::size_t{1} << n, -1);
  long count = 0;
  for (Mask rep = 0; rep < (Mask{1} << n); ++rep) {
    if (comp[rep] >= 0) continue;
    ++count;
    for (Mask z = rep; z < (Mask{1} << n); ++z)
      if (comp[z] < 0 && ideal.contains(rep ^ z)) comp[z] = static_cast<int>(count);
  }
  return count;
}

}  // namespace

TEST_CASE("ideal membership per description") {
  auto g = GroundSet::finite(4);
  Ideal p = Ideal::make_principal(g, 0b0011);
  CHECK(p.contains(0));
  CHECK(p.contains(0b0011));
  CHECK_FALSE(p.contains(0b0100));

  Ideal sb = Ideal::make_size_below(g, 2);  // subsets with fewer than 2 elements
  CHECK(sb.contains(0b0100));
  CHECK_FALSE(sb.contains(0b0101));

  Ideal gen = Ideal::make_generated_by(g, {0b0001, 0b0110});
  CHECK(gen.contains(0b0111));
  CHECK_FALSE(gen.contains(0b1000));

  Ideal fre = Ideal::make_frechet(8);
  CHECK(fre.contains(0b10110));
  CHECK_FALSE(fre.ground.is_finite());
}

TEST_CASE("validation catches each failure mode") {
  auto g = GroundSet::finite(3);
  // not union closed: {0} and {1} present, {0,1} missing
  Ideal bad_union = Ideal::make_explicit(g, {0b000, 0b001, 0b010});
  CHECK_FALSE(ideal_validate(bad_union).value);
  // not downward closed: {0,1} present, {1} missing
  Ideal bad_down = Ideal::make_explicit(g, {0b000, 0b001, 0b011});
  CHECK_FALSE(ideal_validate(bad_down).value);
  // improper: full ground present
  Ideal bad_proper = Ideal::make_principal(g, 0b111);
  CHECK_FALSE(ideal_validate(bad_proper).value);
  // empty family is not an ideal
  Ideal bad_empty = Ideal::make_explicit(g, {});
  CHECK_FALSE(ideal_validate(bad_empty).value);

  Ideal ok = Ideal::make_explicit(g, {0b000, 0b001, 0b010, 0b011});
  CHECK(ideal_validate(ok).value);
  CHECK(ideal_validate(Ideal::make_frechet(10)).value);
  // SizeBelow on the naturals is not union closed once lambda >= 2
  CHECK_FALSE(ideal_validate(Ideal::make_size_below(GroundSet::naturals(8), 3)).value);
}

TEST_CASE("normal form is principal over the union") {
  auto g = GroundSet::finite(4);
  Ideal e = Ideal::make_explicit(g, {0b0000, 0b0001, 0b0100, 0b0101});
  Ideal n = ideal_normalize(e);
  CHECK(n.desc == Ideal::Desc::Principal);
  CHECK(n.principal == 0b0101);
  CHECK_THROWS_AS(ideal_normalize(Ideal::make_explicit(g, {0b0001})),
                  IdealValidationError);
}

TEST_CASE("hat and iota") {
  auto g = GroundSet::finite(4);
  Ideal p = Ideal::make_principal(g, 0b0011);
  CHECK(ideal_hat(p) == 0b1100);
  CHECK(iota(p) == 2);
  Ideal empty_ideal = Ideal::make_principal(g, 0);
  CHECK(ideal_hat(empty_ideal) == 0b1111);
  CHECK(iota(empty_ideal) == 4);
}

TEST_CASE("quotient cosets against the all-pairs oracle") {
  auto g = GroundSet::finite(4);
  Ideal p = Ideal::make_principal(g, 0b0011);
  auto ring = quotient_cosets(p);
  CHECK(ring.cosets.size() == 4);
  CHECK(ring.cosets == std::vector<Mask>{0b0000, 0b0100, 0b1000, 0b1100});
  for (int n = 1; n <= 4; ++n) {
    for (Mask s = 0; s < (Mask{1} << n) - 1; ++s) {
      Ideal ideal = Ideal::make_principal(GroundSet::finite(n), s);
      CHECK(static_cast<long>(quotient_cosets(ideal).cosets.size()) ==
            coset_oracle(ideal));
      CHECK(quotient_cosets(ideal).cosets.size() == (std::size_t{1} << iota(ideal)));
    }
  }
}

TEST_CASE("members materialization") {
  Ideal p = Ideal::make_principal(GroundSet::finite(3), 0b011);
  auto ms = p.members();
  CHECK(ms == std::vector<Mask>{0b000, 0b001, 0b010, 0b011});
}
