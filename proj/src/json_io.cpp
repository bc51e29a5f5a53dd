#include "ballean/json_io.hpp"

#include <algorithm>

namespace bln {
namespace {

[[noreturn]] void bad(const std::string& msg) { throw BalleanError("BadInput", msg); }

Mask elems_from_json(const nlohmann::json& j, int width) {
  if (!j.is_array()) bad("expected an array of elements");
  std::vector<int> elems;
  for (const auto& e : j) {
    if (!e.is_number_integer()) bad("elements must be integers");
    elems.push_back(e.get<int>());
  }
  return elems_to_mask(elems, width);
}

}  // namespace

std::vector<int> parse_elems(const nlohmann::json& j) {
  if (!j.is_array()) bad("expected an array of elements");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<int>() < 0) bad("elements must be naturals");
    out.push_back(e.get<int>());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json masks_to_json(const std::vector<Mask>& ms) {
  nlohmann::json arr = nlohmann::json::array();
  for (Mask m : ms) arr.push_back(mask_to_elems(m));
  return arr;
}

GroundSet parse_ground(const nlohmann::json& j) {
  if (!j.is_object()) bad("ground must be an object");
  if (j.contains("finite")) return GroundSet::finite(j.at("finite").get<int>());
  if (j.contains("naturals")) {
    const auto& n = j.at("naturals");
    if (!n.is_object() || !n.contains("horizon")) bad("naturals ground needs a horizon");
    return GroundSet::naturals(n.at("horizon").get<int>());
  }
  bad("ground must be {\"finite\": n} or {\"naturals\": {\"horizon\": h}}");
}

nlohmann::json ground_to_json(const GroundSet& g) {
  if (g.is_finite()) return {{"finite", g.window()}};
  return {{"naturals", {{"horizon", g.window()}}}};
}

Ideal parse_ideal_fragment(const nlohmann::json& j, GroundSet ground) {
  if (!j.is_object()) bad("ideal must be an object");
  const int w = ground.window();
  if (j.contains("principal"))
    return Ideal::make_principal(ground, elems_from_json(j.at("principal"), w));
  if (j.contains("sizeBelow"))
    return Ideal::make_size_below(ground, j.at("sizeBelow").get<int>());
  if (j.contains("generatedBy")) {
    std::vector<Mask> basis;
    for (const auto& s : j.at("generatedBy")) basis.push_back(elems_from_json(s, w));
    return Ideal::make_generated_by(ground, std::move(basis));
  }
  if (j.contains("explicit")) {
    std::vector<Mask> fam;
    for (const auto& s : j.at("explicit")) fam.push_back(elems_from_json(s, w));
    return Ideal::make_explicit(ground, std::move(fam));
  }
  if (j.contains("frechet")) {
    if (ground.is_finite()) bad("the Frechet ideal lives on the naturals");
    return Ideal::make_frechet(ground.window());
  }
  bad("unknown ideal description");
}

Ideal parse_ideal_model(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("ideal"))
    bad("model must carry \"ground\" and \"ideal\"");
  return parse_ideal_fragment(j.at("ideal"), parse_ground(j.at("ground")));
}

nlohmann::json ideal_to_json(const Ideal& ideal) {
  nlohmann::json desc;
  switch (ideal.desc) {
    case Ideal::Desc::Principal: desc = {{"principal", mask_to_elems(ideal.principal)}}; break;
    case Ideal::Desc::SizeBelow: desc = {{"sizeBelow", ideal.size_below}}; break;
    case Ideal::Desc::GeneratedBy: {
      nlohmann::json arr = nlohmann::json::array();
      for (Mask m : ideal.family) arr.push_back(mask_to_elems(m));
      desc = {{"generatedBy", arr}};
      break;
    }
    case Ideal::Desc::Explicit: {
      nlohmann::json arr = nlohmann::json::array();
      for (Mask m : ideal.family) arr.push_back(mask_to_elems(m));
      desc = {{"explicit", arr}};
      break;
    }
    case Ideal::Desc::Frechet: desc = {{"frechet", true}}; break;
  }
  return {{"ground", ground_to_json(ideal.ground)}, {"ideal", desc}};
}

BalleanPtr parse_ballean(const nlohmann::json& j) {
  nlohmann::json spec = j;
  if (spec.is_object() && spec.contains("ballean")) spec = spec.at("ballean");
  if (!spec.is_object() || spec.size() != 1) bad("ballean must be a one-key object");
  const std::string kind = spec.begin().key();
  const nlohmann::json& inner = spec.begin().value();
  if (kind == "pointIdeal") return make_point_ideal_ballean(parse_ideal_model(inner));
  if (kind == "iary") return make_iary_ballean(parse_ideal_model(inner));
  if (kind == "cartesian") return make_cartesian(parse_ideal_model(inner));
  if (kind == "macrocube") return make_macrocube(parse_ideal_model(inner));
  if (kind == "sub") {
    if (!inner.is_object() || !inner.contains("of") || !inner.contains("support"))
      bad("sub needs \"of\" and \"support\"");
    auto base = parse_ballean(inner.at("of"));
    std::vector<Point> support;
    for (int e : parse_elems(inner.at("support"))) support.push_back(e);
    return make_subballean(std::move(base), std::move(support));
  }
  if (kind == "exp" || kind == "expStar" || kind == "flat") {
    // closed forms for the ideal balleans, comprehension otherwise
    nlohmann::json base_spec = inner;
    if (base_spec.is_object() && base_spec.contains("ballean"))
      base_spec = base_spec.at("ballean");
    BalleanPtr hyper;
    BalleanPtr base = parse_ballean(inner);
    if (base_spec.is_object() && base_spec.size() == 1 &&
        base_spec.begin().key() == "pointIdeal")
      hyper = make_exp_point_ideal(parse_ideal_model(base_spec.begin().value()));
    else if (base_spec.is_object() && base_spec.size() == 1 &&
             base_spec.begin().key() == "iary")
      hyper = make_exp_iary(parse_ideal_model(base_spec.begin().value()));
    else
      hyper = make_exp_generic(base);
    if (kind == "exp") return hyper;
    if (kind == "expStar") return make_exp_star(std::move(hyper));
    return make_flat(*base, std::move(hyper));
  }
  bad("unknown ballean kind \"" + kind + "\"");
}

nlohmann::json ballean_to_json_echo(const nlohmann::json& j) {
  nlohmann::json spec = j;
  if (spec.is_object() && spec.contains("ballean")) spec = spec.at("ballean");
  const std::string kind = spec.begin().key();
  nlohmann::json inner = spec.begin().value();
  nlohmann::json canon;
  if (kind == "sub") {
    canon = {{"of", ballean_to_json_echo(inner.at("of"))},
             {"support", parse_elems(inner.at("support"))}};
  } else if (kind == "exp" || kind == "expStar" || kind == "flat") {
    canon = ballean_to_json_echo(inner);
  } else {
    canon = ideal_to_json(parse_ideal_model(inner));
  }
  return {{"ballean", {{kind, canon}}}};
}

}  // namespace bln
