#include <doctest.h>

#include <set>

#include "ballean/faults.hpp"
#include "ballean/suites.hpp"

using namespace bln;

namespace {

Ideal p01(int n) { return Ideal::make_principal(GroundSet::finite(n), 0b0011); }

std::shared_ptr<const IdealBallean> frechet_model(IdealBallean::Flavor f, int h) {
  return std::make_shared<IdealBallean>(Ideal::make_frechet(h), f);
}

const SuiteCheck& find_check(const SuiteReport& rep, const std::string& label) {
  for (const auto& c : rep.checks)
    if (c.label == label) return c;
  throw std::runtime_error("missing check " + label);
}

}  // namespace

TEST_CASE("thin suite: the point ideal model passes all one-theorem items") {
  auto rep = suite_thin(frechet_model(IdealBallean::Flavor::PointIdeal, 10));
  CHECK(rep.ok());
  CHECK(rep.overall() == "verifiedToHorizon");
  for (const char* label : {"thin", "nonThickImpliesBounded", "complementEmbedding",
                            "allSlowlyOscillating"}) {
    const auto& c = find_check(rep, label);
    CHECK(c.verdict.value);
    CHECK(c.verdict.to_horizon);
  }
  CHECK(find_check(rep, "equivalenceConsistent").verdict.value);
}

TEST_CASE("thin suite: the I-ary model fails them together, same witness") {
  auto rep = suite_thin(frechet_model(IdealBallean::Flavor::IAry, 10));
  CHECK(rep.ok());  // the equivalence itself still holds
  const auto& thin = find_check(rep, "thin");
  const auto& so = find_check(rep, "allSlowlyOscillating");
  CHECK_FALSE(thin.verdict.value);
  CHECK_FALSE(so.verdict.value);
  // a common witness: the first non-trivial radius disturbs x = 1 either way
  CHECK(thin.verdict.witness["radius"] == nlohmann::json::array({0}));
  CHECK(thin.verdict.witness["x"] == 1);
  CHECK(so.verdict.witness["inner"]["witness"]["radius"] == nlohmann::json::array({0}));
  CHECK(so.verdict.witness["inner"]["witness"]["x"] == 1);
  CHECK_FALSE(find_check(rep, "complementEmbedding").verdict.value);
  CHECK_FALSE(find_check(rep, "nonThickImpliesBounded").verdict.value);
  CHECK(find_check(rep, "equivalenceConsistent").verdict.value);
}

TEST_CASE("thin suite on finite models asserts the boundedness lemma") {
  for (Mask s : {Mask{0b0011}, Mask{0b0001}, Mask{0b0111}}) {
    Ideal ideal = Ideal::make_principal(GroundSet::finite(4), s);
    for (auto f : {IdealBallean::Flavor::PointIdeal, IdealBallean::Flavor::IAry}) {
      auto rep = suite_thin(std::make_shared<IdealBallean>(ideal, f));
      CHECK(rep.ok());
      CHECK(find_check(rep, "complementBoundedIffDoubling").verdict.value);
    }
  }
}

TEST_CASE("dsc suite holds over the small-ideal sweep") {
  for (int n = 1; n <= 3; ++n) {
    for (Mask s = 0; s < (Mask{1} << n) - 1; ++s) {
      auto rep = suite_dsc(Ideal::make_principal(GroundSet::finite(n), s));
      CHECK(rep.ok());
      CHECK(rep.overall() == "holds");
    }
  }
  auto rep = suite_dsc(p01(4));
  CHECK(rep.ok());
  CHECK_THROWS_AS(suite_dsc(Ideal::make_frechet(8)), BalleanError);
}

TEST_CASE("maps suite holds over the small-ideal sweep") {
  for (int n = 2; n <= 3; ++n) {
    for (Mask s = 0; s < (Mask{1} << n) - 1; ++s) {
      const int x = s ? mask_to_elems(s).front() : 0;
      auto rep = suite_maps(Ideal::make_principal(GroundSet::finite(n), s), x);
      CHECK(rep.ok());
    }
  }
  auto rep = suite_maps(p01(4), 1);
  CHECK(rep.ok());
  CHECK_THROWS_AS(suite_maps(p01(4), 3), BalleanError);  // x outside union(I)
}

TEST_CASE("kcube suite holds") {
  auto rep = suite_kcubes(8, 0, 5);
  CHECK(rep.ok());
  CHECK(rep.overall() == "verifiedToHorizon");
  CHECK(rep.checks.size() == 8);
}

TEST_CASE("every documented fault is detected by a suite check") {
  const Ideal ideal = p01(4);
  const auto close_honest = [&](Mask y, Mask z) { return ideal.contains(symdiff(y, z)); };
  std::set<std::string> names;
  for (Fault f : {Fault::ExpPointIdealKeepsBottom, Fault::ExpIAryAllowsEmpty,
                  Fault::PointIdealDropsCenter, Fault::IAryAsymmetricBall,
                  Fault::CartesianDropsEmpty, Fault::ClosenessViaUnion,
                  Fault::KcubeMinShiftedByOne}) {
    names.insert(fault_name(f));
    switch (f) {
      case Fault::ExpPointIdealKeepsBottom: {
        auto v = check_closed_forms_against_oracle(ideal, *make_faulty_hyper(ideal, f),
                                                   *make_exp_iary(ideal),
                                                   *make_cartesian(ideal));
        CHECK_FALSE(v.value);
        CHECK(v.witness["flavor"] == "expPointIdeal");
        break;
      }
      case Fault::ExpIAryAllowsEmpty: {
        auto v = check_closed_forms_against_oracle(ideal, *make_exp_point_ideal(ideal),
                                                   *make_faulty_hyper(ideal, f),
                                                   *make_cartesian(ideal));
        CHECK_FALSE(v.value);
        CHECK(v.witness["flavor"] == "expIAry");
        break;
      }
      case Fault::CartesianDropsEmpty: {
        auto v = check_closed_forms_against_oracle(ideal, *make_exp_point_ideal(ideal),
                                                   *make_exp_iary(ideal),
                                                   *make_faulty_hyper(ideal, f));
        CHECK_FALSE(v.value);
        CHECK(v.witness["flavor"] == "cartesian");
        break;
      }
      case Fault::PointIdealDropsCenter: {
        auto v = verify_axioms(*make_faulty_base(ideal, f));
        CHECK_FALSE(v.value);
        CHECK(v.witness["axiom"] == "containment");
        break;
      }
      case Fault::IAryAsymmetricBall: {
        auto v = verify_axioms(*make_faulty_base(ideal, f));
        CHECK_FALSE(v.value);
        CHECK(v.witness["axiom"] == "symmetry");
        break;
      }
      case Fault::ClosenessViaUnion: {
        auto v = check_quotient_against_crt(
            ideal, [&](Mask y, Mask z) { return faulty_close_union(ideal, y, z); });
        CHECK_FALSE(v.value);
        break;
      }
      case Fault::KcubeMinShiftedByOne: {
        CHECK_FALSE(check_kcube_image_shape_with(8, kcube_apply_shifted).value);
        CHECK_FALSE(check_kcube_image_ball_eq_with(6, kcube_apply_shifted).value);
        break;
      }
    }
  }
  CHECK(names.size() == 7);
  // the honest formulas pass the very same checks
  CHECK(check_closed_forms_against_oracle(ideal, *make_exp_point_ideal(ideal),
                                          *make_exp_iary(ideal), *make_cartesian(ideal))
            .value);
  CHECK(check_quotient_against_crt(ideal, close_honest).value);
  CHECK(check_kcube_image_shape(8).value);
}

TEST_CASE("relation-based component counts reproduce the closed form") {
  for (int n = 1; n <= 4; ++n) {
    for (Mask s = 0; s < (Mask{1} << n) - 1; ++s) {
      Ideal ideal = Ideal::make_principal(GroundSet::finite(n), s);
      CHECK(dsc_via_relation(ideal, [&](Mask y, Mask z) {
              return ideal.contains(symdiff(y, z));
            }) == (1L << iota(ideal)));
    }
  }
}

TEST_CASE("suite reports serialize with one entry per check") {
  auto rep = suite_dsc(p01(3));
  auto j = rep.to_json();
  CHECK(j["suite"] == "dsc");
  CHECK(j["overall"] == "holds");
  CHECK(j["checks"].size() == rep.checks.size());
  CHECK(j["checks"][0].contains("label"));
  CHECK(j["checks"][0].contains("verdict"));
}
