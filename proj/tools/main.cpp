#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ballean/json_io.hpp"
#include "ballean/suites.hpp"

namespace {

using namespace bln;
using nlohmann::json;

json parse_json_arg(const std::string& s, const char* what) {
  json j = json::parse(s, nullptr, false);
  if (j.is_discarded())
    throw BalleanError("BadInput", std::string("malformed JSON for ") + what);
  return j;
}

GroundSet ground_from_flags(int ground, int horizon) {
  if (ground > 0 && horizon > 0)
    throw BalleanError("BadInput", "--ground and --horizon are mutually exclusive");
  if (ground > 0) return GroundSet::finite(ground);
  if (horizon > 0) return GroundSet::naturals(horizon);
  throw BalleanError("BadInput", "one of --ground or --horizon is required");
}

Ideal ideal_from_flags(const std::string& ideal_json, const std::string& model_json,
                       int ground, int horizon) {
  if (!model_json.empty()) return parse_ideal_model(parse_json_arg(model_json, "--model"));
  if (ideal_json.empty())
    throw BalleanError("BadInput", "an ideal is required (--ideal or --model)");
  return parse_ideal_fragment(parse_json_arg(ideal_json, "--ideal"),
                              ground_from_flags(ground, horizon));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int emit_error(const BalleanError& e) {
  emit({{"error", {{"code", e.code()}, {"message", e.what()}}}});
  return 2;
}

HyperFlavor hyper_flavor_from(const std::string& s) {
  if (s == "pointIdeal" || s == "expPointIdeal" || s == "exp")
    return HyperFlavor::ExpPointIdeal;
  if (s == "iary" || s == "expIAry") return HyperFlavor::ExpIAry;
  if (s == "cartesian") return HyperFlavor::Cartesian;
  if (s == "generic" || s == "expGeneric") return HyperFlavor::ExpGeneric;
  throw BalleanError("BadInput", "unknown flavor \"" + s + "\"");
}

bool is_hyper_points(const Ballean& b) {
  if (auto* sub = dynamic_cast<const SubBallean*>(&b)) return is_hyper_points(sub->base());
  return dynamic_cast<const ClosedHyperBallean*>(&b) != nullptr ||
         dynamic_cast<const ExpGenericBallean*>(&b) != nullptr;
}

json points_json(const std::vector<Point>& pts, bool as_masks) {
  json arr = json::array();
  for (Point p : pts) {
    if (as_masks)
      arr.push_back(mask_to_elems(static_cast<Mask>(p)));
    else
      arr.push_back(p);
  }
  return arr;
}

std::vector<Mask> principal_ideals(int n) {
  std::vector<Mask> out;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask s = 0; s < full; ++s) out.push_back(s);  // proper: s != full
  return out;
}

int default_x(const Ideal& ideal) {
  const Mask u = ideal.union_all();
  return u ? mask_to_elems(u).front() : -1;
}

int suite_exit(const SuiteReport& rep) { return rep.ok() ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ballean models, hyperballeans, and theorem suites"};
  app.require_subcommand(1);

  std::string model_json, ideal_json, flavor = "pointIdeal", method = "quotient";
  std::string center_json, radius_json, map_name, props = "coarse,proper,asym,equiv";
  std::string suite_name;
  int ground = 0, horizon = 0, x = -1, point = -1, bulk = 0, window = 5;

  auto* c_validate = app.add_subcommand("validate", "validate an ideal description");
  c_validate->add_option("--model", model_json)->required();

  auto* c_ball = app.add_subcommand("ball", "ball of a point ideal / I-ary ballean");
  c_ball->add_option("--flavor", flavor);
  c_ball->add_option("--ideal", ideal_json);
  c_ball->add_option("--model", model_json);
  c_ball->add_option("--ground", ground);
  c_ball->add_option("--horizon", horizon);
  c_ball->add_option("--x", point)->required();
  c_ball->add_option("--radius", radius_json)->required();

  auto* c_expball = app.add_subcommand("expball", "closed-form or generic hyperball");
  c_expball->add_option("--flavor", flavor);
  c_expball->add_option("--ideal", ideal_json);
  c_expball->add_option("--model", model_json);
  c_expball->add_option("--ground", ground);
  c_expball->add_option("--horizon", horizon);
  c_expball->add_option("--center", center_json)->required();
  c_expball->add_option("--radius", radius_json)->required();

  auto* c_comp = app.add_subcommand("components", "connected components of a ballean");
  c_comp->add_option("--model", model_json)->required();

  auto* c_dsc = app.add_subcommand("dsc", "number of connected components");
  c_dsc->add_option("--flavor", flavor);
  c_dsc->add_option("--ideal", ideal_json);
  c_dsc->add_option("--model", model_json);
  c_dsc->add_option("--ground", ground);
  c_dsc->add_option("--horizon", horizon);
  c_dsc->add_option("--method", method);

  auto* c_map = app.add_subcommand("checkmap", "verify properties of a named map");
  c_map->add_option("--map", map_name)->required();
  c_map->add_option("--ideal", ideal_json);
  c_map->add_option("--model", model_json);
  c_map->add_option("--ground", ground);
  c_map->add_option("--horizon", horizon);
  c_map->add_option("--x", x);
  c_map->add_option("--window", window);
  c_map->add_option("--props", props);

  auto* c_suite = app.add_subcommand("suite", "run a theorem suite");
  c_suite->add_option("--name", suite_name)->required();
  c_suite->add_option("--model", model_json);
  c_suite->add_option("--horizon", horizon);
  c_suite->add_option("--x", x);
  c_suite->add_option("--window", window);
  c_suite->add_option("--bulk", bulk);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_validate->parsed()) {
      Ideal ideal = parse_ideal_model(parse_json_arg(model_json, "--model"));
      Verdict v = ideal_validate(ideal);
      json out{{"valid", v.value}, {"verdict", v.to_json()}};
      if (v.value && ideal.ground.is_finite())
        out["normalized"] = ideal_to_json(ideal_normalize(ideal));
      emit(out);
      return v.value ? 0 : 1;
    }

    if (c_ball->parsed()) {
      Ideal ideal = ideal_from_flags(ideal_json, model_json, ground, horizon);
      auto b = flavor == "iary" ? make_iary_ballean(ideal) : make_point_ideal_ballean(ideal);
      Mask r = elems_to_mask(parse_elems(parse_json_arg(radius_json, "--radius")), 64);
      auto members = b->ball_payload(static_cast<Point>(point), r);
      emit({{"members", points_json(*members, false)}});
      return 0;
    }

    if (c_expball->parsed()) {
      Ideal ideal = ideal_from_flags(ideal_json, model_json, ground, horizon);
      Mask a = elems_to_mask(parse_elems(parse_json_arg(center_json, "--center")),
                             ideal.ground.window());
      Mask r = elems_to_mask(parse_elems(parse_json_arg(radius_json, "--radius")), 64);
      std::vector<Mask> members;
      switch (hyper_flavor_from(flavor)) {
        case HyperFlavor::ExpPointIdeal: members = exp_ball_point_ideal(ideal, a, r); break;
        case HyperFlavor::ExpIAry: members = exp_ball_iary(ideal, a, r); break;
        case HyperFlavor::Cartesian: members = cartesian_ball(ideal, a, r); break;
        case HyperFlavor::ExpGeneric:
          members = exp_ball_generic(*make_point_ideal_ballean(ideal), a, r);
          break;
        default: throw BalleanError("BadInput", "unsupported expball flavor");
      }
      emit({{"members", masks_to_json(members)}});
      return 0;
    }

    if (c_comp->parsed()) {
      json spec = parse_json_arg(model_json, "--model");
      auto b = parse_ballean(spec);
      auto comps = components_of(*b);
      const bool as_masks = is_hyper_points(*b);
      json arr = json::array();
      for (const auto& c : comps) arr.push_back(points_json(c, as_masks));
      emit({{"count", comps.size()},
            {"encoding", as_masks ? "subset" : "element"},
            {"components", arr}});
      return 0;
    }

    if (c_dsc->parsed()) {
      Ideal ideal = ideal_from_flags(ideal_json, model_json, ground, horizon);
      DscMethod m = method == "components" ? DscMethod::Components
                    : method == "crt"      ? DscMethod::CRT
                    : method == "quotient" ? DscMethod::Quotient
                                           : throw BalleanError("BadInput",
                                                                "unknown dsc method");
      emit({{"count", dsc(ideal, hyper_flavor_from(flavor), m)}});
      return 0;
    }

    if (c_map->parsed()) {
      json verdicts = json::object();
      bool all_true = true;
      auto add = [&](const std::string& label, const Verdict& v) {
        verdicts[label] = v.to_json();
        all_true = all_true && v.value;
      };
      if (map_name == "kcubeOmega") {
        const int h = horizon > 0 ? horizon : 12;
        add("imageEmbedding", check_kcube_image_ball_eq(h));
        add("minimumDetectsBottom", check_kcube_min_segment_eq(h));
        add("imageShape", check_kcube_image_shape(h));
      } else if (map_name == "kcubeI") {
        const int xx = x >= 0 ? x : 1;
        add("copyIdentity", check_kcube_i_identity(xx, window));
        add("copyChainCofinal", check_kcube_i_cofinality(xx, window));
        add("copiesClose", check_kcube_copies_close(xx, xx + 1, window));
        add("minimumPartition", check_kcube_partition(window));
      } else {
        Ideal ideal = ideal_from_flags(ideal_json, model_json, ground, horizon);
        auto b_pi = make_point_ideal_ballean(ideal);
        auto b_ary = make_iary_ballean(ideal);
        BalleanMap m = [&]() -> BalleanMap {
          if (map_name == "id") return map_identity(b_pi, b_ary, "id");
          if (map_name == "expId") return map_exp(map_identity(b_pi, b_ary, "id"));
          if (map_name == "flatId") return map_flat(map_identity(b_pi, b_ary, "id"));
          if (map_name == "C")
            return map_C(flavor == "iary" ? b_ary : b_pi);
          if (map_name == "CB")
            return map_CB(flavor == "iary" ? b_ary : b_pi);
          if (map_name == "jx") {
            const int xx = x >= 0 ? x : default_x(ideal);
            if (xx < 0) throw BalleanError("BadBasePoint", "the ideal has empty union");
            return map_jx(ideal, xx).j_ux;
          }
          throw BalleanError("BadInput", "unknown map \"" + map_name + "\"");
        }();
        std::stringstream ss(props);
        std::string prop;
        while (std::getline(ss, prop, ',')) {
          if (prop == "coarse") add("coarse", is_coarse(m));
          else if (prop == "proper") add("effectivelyProper", is_effectively_proper(m));
          else if (prop == "asym") add("asymorphism", is_asymorphism(m));
          else if (prop == "embed") add("asymorphicEmbedding", is_asymorphic_embedding(m));
          else if (prop == "equiv") add("coarseEquivalence", is_coarse_equivalence(m));
          else throw BalleanError("BadInput", "unknown property \"" + prop + "\"");
        }
        emit({{"map", m.name}, {"verdicts", verdicts}});
        return all_true ? 0 : 1;
      }
      emit({{"map", map_name}, {"verdicts", verdicts}});
      return all_true ? 0 : 1;
    }

    if (c_suite->parsed()) {
      if (suite_name == "kcubes") {
        const int h = horizon > 0 ? horizon : 12;
        SuiteReport rep = suite_kcubes(h, x >= 0 ? x : 1, window);
        emit(rep.to_json());
        return suite_exit(rep);
      }
      if (bulk > 0) {
        json reports = json::array();
        int status = 0;
        for (int n = 1; n <= bulk; ++n) {
          for (Mask s : principal_ideals(n)) {
            Ideal ideal = Ideal::make_principal(GroundSet::finite(n), s);
            if (suite_name == "dsc") {
              SuiteReport rep = suite_dsc(ideal);
              status = std::max(status, suite_exit(rep));
              reports.push_back(rep.to_json());
            } else if (suite_name == "maps") {
              SuiteReport rep = suite_maps(ideal, default_x(ideal));
              status = std::max(status, suite_exit(rep));
              reports.push_back(rep.to_json());
            } else if (suite_name == "thin") {
              for (auto mk : {make_point_ideal_ballean, make_iary_ballean}) {
                auto b = std::dynamic_pointer_cast<const IdealBallean>(mk(ideal));
                SuiteReport rep = suite_thin(b);
                status = std::max(status, suite_exit(rep));
                reports.push_back(rep.to_json());
              }
            } else {
              throw BalleanError("BadInput", "unknown suite \"" + suite_name + "\"");
            }
          }
        }
        emit({{"reports", reports}});
        return status;
      }
      if (suite_name == "thin") {
        auto b = std::dynamic_pointer_cast<const IdealBallean>(
            parse_ballean(parse_json_arg(model_json, "--model")));
        if (!b)
          throw BalleanError("BadInput",
                             "the thin suite runs on point ideal / I-ary balleans");
        SuiteReport rep = suite_thin(b);
        emit(rep.to_json());
        return suite_exit(rep);
      }
      Ideal ideal = parse_ideal_model(parse_json_arg(model_json, "--model"));
      SuiteReport rep = suite_name == "dsc"
                            ? suite_dsc(ideal)
                            : suite_name == "maps"
                                  ? suite_maps(ideal, x >= 0 ? x : default_x(ideal))
                                  : throw BalleanError("BadInput",
                                                       "unknown suite \"" + suite_name + "\"");
      emit(rep.to_json());
      return suite_exit(rep);
    }
  } catch (const BalleanError& e) {
    return emit_error(e);
  } catch (const nlohmann::json::exception& e) {
    emit({{"error", {{"code", "BadInput"}, {"message", e.what()}}}});
    return 2;
  }
  return 2;
}
