#include "ballean/suites.hpp"

#include <algorithm>

namespace bln {
namespace {

nlohmann::json mask_json(Mask m) { return nlohmann::json(mask_to_elems(m)); }

Verdict expect_value(Verdict computed, bool expected) {
  nlohmann::json w{{"computed", computed.to_json()}, {"expected", expected}};
  bool match = computed.value == expected;
  if (computed.to_horizon) return Verdict::at_horizon(match, computed.horizon, std::move(w));
  return match ? Verdict{true, false, 0, std::move(w)} : Verdict::fails(std::move(w));
}

}  // namespace

// ---- report plumbing ---------------------------------------------------------

nlohmann::json SuiteCheck::to_json() const {
  nlohmann::json j;
  j["label"] = label;
  j["asserted"] = asserted;
  j["verdict"] = verdict.to_json();
  if (!data.is_null()) j["data"] = data;
  return j;
}

bool SuiteReport::ok() const {
  for (const auto& c : checks)
    if (c.asserted && !c.verdict.value) return false;
  return true;
}

std::string SuiteReport::overall() const {
  if (!ok()) return "mixedWithWitnesses";
  for (const auto& c : checks)
    if (c.asserted && c.verdict.to_horizon) return "verifiedToHorizon";
  return "holds";
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["model"] = model;
  j["overall"] = overall();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  return j;
}

// ---- parameterized checks ------------------------------------------------------

Verdict check_closed_forms_against_oracle(const Ideal& ideal, const Ballean& exp_pi,
                                          const Ballean& exp_iary, const Ballean& cart) {
  if (!ideal.ground.is_finite() || ideal.ground.window() > 4)
    throw BalleanError("WindowTooLarge", "the comprehension oracle needs |X| <= 4");
  const int n = ideal.ground.window();
  auto base_pi = make_point_ideal_ballean(ideal);
  auto base_ary = make_iary_ballean(ideal);
  auto as_masks = [](const std::vector<Point>& v) {
    return std::vector<Mask>(v.begin(), v.end());
  };
  for (Mask k : ideal.members()) {
    for (Mask a = 0; a < (Mask{1} << n); ++a) {
      auto got_pi = exp_pi.ball_payload(a, k);
      if (!got_pi || as_masks(*got_pi) != exp_ball_generic(*base_pi, a, k))
        return Verdict::fails(
            {{"flavor", "expPointIdeal"}, {"A", mask_json(a)}, {"K", mask_json(k)}});
      auto got_ary = exp_iary.ball_payload(a, k);
      if (!got_ary || as_masks(*got_ary) != exp_ball_generic(*base_ary, a, k))
        return Verdict::fails(
            {{"flavor", "expIAry"}, {"A", mask_json(a)}, {"K", mask_json(k)}});
      // Cartesian: per-coordinate agreement off K, and the 2^|K| count
      std::vector<Mask> oracle;
      for (Mask g = 0; g < (Mask{1} << n); ++g) {
        bool in = true;
        for (int e = 0; e < n && in; ++e)
          if ((((g ^ a) >> e) & 1) && !((k >> e) & 1)) in = false;
        if (in) oracle.push_back(g);
      }
      auto got_cart = cart.ball_payload(a, k);
      if (!got_cart || as_masks(*got_cart) != oracle ||
          oracle.size() != (std::size_t{1} << popcount(k)))
        return Verdict::fails(
            {{"flavor", "cartesian"}, {"A", mask_json(a)}, {"K", mask_json(k)}});
    }
  }
  return Verdict::holds();
}

long dsc_via_relation(const Ideal& ideal, const CloseFn& close) {
  if (!ideal.ground.is_finite() || ideal.ground.window() > 6)
    throw BalleanError("WindowTooLarge", "the all-pairs closeness sweep needs |X| <= 6");
  const std::size_t count = std::size_t{1} << ideal.ground.window();
  std::vector<std::size_t> parent(count);
  for (std::size_t i = 0; i < count; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (close(static_cast<Mask>(i), static_cast<Mask>(j))) {
        std::size_t a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  long roots = 0;
  for (std::size_t i = 0; i < count; ++i)
    if (find(i) == i) ++roots;
  return roots;
}

Verdict check_quotient_against_crt(const Ideal& ideal, const CloseFn& close) {
  const long got = dsc_via_relation(ideal, close);
  const long expected = 1L << iota(ideal);
  if (got != expected)
    return Verdict::fails({{"relationComponents", got}, {"closedForm", expected}});
  return Verdict::holds();
}

// ---- thin suite ------------------------------------------------------------------

namespace {

// Elements y with X\{y} inside the closed-form hyper ball around X\{x} of
// radius v, computed on complement masks (only finitely many bits differ
// from the full set, so the window never truncates anything).
std::vector<Point> cmap_ball_elems(IdealBallean::Flavor flavor, Point x, Mask v) {
  const Mask xm = Mask{1} << x;
  std::vector<Point> out;
  if (flavor == IdealBallean::Flavor::PointIdeal) {
    if ((v & ~xm) == 0) return {x};  // the ball degenerates to its center
    const Mask co_hi = xm & ~v;  // complement of the interval top
    const Mask co_lo = xm | v;   // complement of the interval bottom
    for (int y : mask_to_elems(co_lo)) {
      const Mask ym = Mask{1} << y;
      if ((co_hi & ~ym) == 0 && ym != co_lo) out.push_back(static_cast<Point>(y));
    }
  } else {
    const Mask co_hi = xm & ~v;
    const Mask co_lo = xm | v;
    for (int y : mask_to_elems(co_lo)) {
      const Mask ym = Mask{1} << y;
      if ((co_hi & ~ym) == 0) out.push_back(static_cast<Point>(y));
    }
  }
  return out;
}

// Countable-model complement-map check: the map carries balls onto hyper
// balls within its image iff it is an asymorphic embedding. A failure is
// made definitive through the bounded-complement route: once some radius
// doubles every ball, the image of the whole (unbounded) support is bounded.
Verdict cmap_horizon(const IdealBallean& b) {
  const int h = static_cast<int>(b.window_bound());
  const auto pts = b.quantified_points();
  for (int r = 0; r < b.chain_size(); ++r) {
    const Mask v = b.chain_mask(r);
    for (Point x : pts) {
      std::vector<Point> lhs;
      for (int e : mask_to_elems(b.ball_mask(x, v))) lhs.push_back(static_cast<Point>(e));
      std::vector<Point> rhs = cmap_ball_elems(b.flavor(), x, v);
      std::sort(rhs.begin(), rhs.end());
      if (lhs == rhs) continue;
      nlohmann::json at{{"x", x}, {"radius", mask_json(v)}};
      for (int r2 = 0; r2 < b.chain_size(); ++r2) {
        bool doubles = true;
        for (Point y : pts)
          if (popcount(b.ball_mask(y, b.chain_mask(r2))) < 2) { doubles = false; break; }
        if (doubles)
          return Verdict::fails({{"kind", "complementOfUnboundedSetBounded"},
                                 {"radius", mask_json(b.chain_mask(r2))},
                                 {"ballImageMismatchAt", at}});
      }
      return Verdict::at_horizon(false, h, {{"ballImageMismatchAt", at}});
    }
  }
  return Verdict::at_horizon(true, h);
}

struct NamedFn {
  std::string name;
  std::function<int(Point)> fn;
};

std::vector<NamedFn> so_function_family(const Ballean& b) {
  std::vector<NamedFn> fam;
  if (b.finite_model() && b.window_bound() <= 4) {
    const int n = static_cast<int>(b.window_bound());
    for (Mask t = 0; t < (Mask{1} << n); ++t)
      fam.push_back({"table" + mask_to_string(t),
                     [t](Point p) { return static_cast<int>((t >> p) & 1); }});
    return fam;
  }
  const Point half = b.window_bound() / 2;
  fam.push_back({"const0", [](Point) { return 0; }});
  fam.push_back({"const1", [](Point) { return 1; }});
  fam.push_back({"parity", [](Point p) { return static_cast<int>(p & 1); }});
  fam.push_back({"oddParity", [](Point p) { return static_cast<int>(~p & 1); }});
  fam.push_back({"below1", [](Point p) { return p < 1 ? 1 : 0; }});
  fam.push_back({"belowHalf", [half](Point p) { return p < half ? 1 : 0; }});
  return fam;
}

}  // namespace

SuiteReport suite_thin(std::shared_ptr<const IdealBallean> b) {
  SuiteReport rep;
  rep.suite = "thin";
  rep.model = {{"ballean", b->name()},
               {"ground", b->finite_model() ? "finite" : "naturals"},
               {"window", b->window_bound()},
               {"ideal", b->ideal().desc_name()}};
  const bool fin = b->finite_model();
  const int h = static_cast<int>(b->window_bound());
  PointSet support;
  support.window = b->window_points();
  if (!fin) support.tail = [](Point) { return true; };

  rep.checks.push_back({"axioms", verify_axioms(*b), true, nullptr});

  // hypothesis of the one-theorem equivalences: connected and unbounded
  auto comp0 = component(*b, b->window_points().front());
  const bool connected = comp0 == b->window_points();
  const bool unbounded = !is_bounded(*b, support).value;
  const bool hyp = connected && unbounded;
  {
    Verdict v = fin ? Verdict{hyp, false, 0, nullptr} : Verdict::at_horizon(hyp, h);
    rep.checks.push_back({"hypothesisConnectedUnbounded", v, false,
                          {{"connected", connected}, {"unbounded", unbounded}}});
  }

  Verdict thin = is_thin(*b, support);
  rep.checks.push_back({"thin", thin, false, nullptr});

  // every non-thick subset is bounded
  Verdict non_thick_bounded = [&] {
    const int bits = std::min(h, 10);
    std::vector<std::pair<nlohmann::json, PointSet>> sets;
    for (Mask m = 0; m < (Mask{1} << bits); ++m)
      sets.emplace_back(mask_json(m), PointSet::from_mask(m));
    if (!fin) {
      sets.emplace_back("evens", PointSet::pattern([](Point p) { return p % 2 == 0; },
                                                   b->window_bound()));
      sets.emplace_back("odds", PointSet::pattern([](Point p) { return p % 2 == 1; },
                                                  b->window_bound()));
      sets.emplace_back("all", PointSet::pattern([](Point) { return true; },
                                                 b->window_bound()));
    }
    for (auto& [label, a] : sets) {
      Verdict t = is_thick(*b, a);
      if (t.value) continue;
      Verdict bd = is_bounded(*b, a);
      if (bd.value) continue;
      nlohmann::json w{{"set", label}, {"thick", t.to_json()}, {"bounded", bd.to_json()}};
      if (t.proved() && bd.proved()) return Verdict::fails(std::move(w));
      return Verdict::at_horizon(false, h, std::move(w));
    }
    return fin ? Verdict::holds() : Verdict::at_horizon(true, h);
  }();
  rep.checks.push_back({"nonThickImpliesBounded", non_thick_bounded, false, nullptr});

  Verdict cmap = fin ? is_asymorphic_embedding(map_C(b)) : cmap_horizon(*b);
  rep.checks.push_back({"complementEmbedding", cmap, false, nullptr});

  Verdict so = [&] {
    for (const auto& nf : so_function_family(*b)) {
      Verdict v = is_slowly_oscillating(*b, nf.fn);
      if (v.value) continue;
      nlohmann::json w{{"function", nf.name}, {"inner", v.to_json()}};
      return v.proved() ? Verdict::fails(std::move(w))
                        : Verdict::at_horizon(false, h, std::move(w));
    }
    return fin ? Verdict::holds() : Verdict::at_horizon(true, h);
  }();
  rep.checks.push_back({"allSlowlyOscillating", so, false, nullptr});

  if (fin && h <= 5) {
    // complements of Y (|Y| >= 2; smaller sets are trivially bounded) form a
    // bounded set of the hyperballean iff some radius lets every point of Y
    // be seen from a ball centered elsewhere
    auto hyper = b->flavor() == IdealBallean::Flavor::PointIdeal
                     ? make_exp_point_ideal(b->ideal())
                     : make_exp_iary(b->ideal());
    const Mask full = b->ideal().ground.full_window_mask();
    Verdict lemma = [&] {
      for (Mask y = 0; y < (Mask{1} << h); ++y) {
        if (popcount(y) < 2) continue;
        std::vector<Point> cset;
        for (int e : mask_to_elems(y)) cset.push_back(full & ~(Mask{1} << e));
        const bool lhs = is_bounded(*hyper, PointSet::finite(std::move(cset))).value;
        bool rhs = false;
        for (int r = 0; r < b->chain_size() && !rhs; ++r) {
          bool all_seen = true;
          for (int e : mask_to_elems(y)) {
            bool seen = false;
            for (Point z : b->window_points()) {
              if (z == static_cast<Point>(e)) continue;
              if ((b->ball_mask(z, b->chain_mask(r)) >> e) & 1) { seen = true; break; }
            }
            if (!seen) { all_seen = false; break; }
          }
          rhs = all_seen;
        }
        if (lhs != rhs)
          return Verdict::fails({{"Y", mask_json(y)}, {"bounded", lhs}, {"seen", rhs}});
      }
      return Verdict::holds();
    }();
    rep.checks.push_back({"complementBoundedIffDoubling", lemma, true, nullptr});
  }

  // the four one-theorem items stand or fall together (under the hypothesis)
  {
    const bool v1 = thin.value, v3 = non_thick_bounded.value, v5 = cmap.value,
               v6 = so.value;
    const bool eq = v1 == v3 && v3 == v5 && v5 == v6;
    nlohmann::json w{{"thin", v1},
                     {"nonThickImpliesBounded", v3},
                     {"complementEmbedding", v5},
                     {"allSlowlyOscillating", v6}};
    Verdict v = fin ? Verdict{eq, false, 0, w} : Verdict::at_horizon(eq, h, w);
    if (!eq && fin) v = Verdict::fails(w);
    rep.checks.push_back({"equivalenceConsistent", v, hyp, nullptr});
  }
  return rep;
}

// ---- count suite ------------------------------------------------------------------

SuiteReport suite_dsc(const Ideal& ideal) {
  if (!ideal.ground.is_finite())
    throw BalleanError("FiniteOnly", "the component-count suite runs on finite grounds");
  const int n = ideal.ground.window();
  SuiteReport rep;
  rep.suite = "dsc";
  rep.model = {{"ground", n}, {"ideal", ideal.desc_name()},
               {"union", mask_json(ideal.union_all())}};

  const long crt_cart = dsc(ideal, HyperFlavor::Cartesian, DscMethod::CRT);
  const long quo_cart = dsc(ideal, HyperFlavor::Cartesian, DscMethod::Quotient);
  const long crt_exp = dsc(ideal, HyperFlavor::ExpPointIdeal, DscMethod::CRT);
  const long quo_exp = dsc(ideal, HyperFlavor::ExpPointIdeal, DscMethod::Quotient);

  if (n <= 4) {
    rep.checks.push_back({"closedFormsMatchOracle",
                          check_closed_forms_against_oracle(
                              ideal, *make_exp_point_ideal(ideal),
                              *make_exp_iary(ideal), *make_cartesian(ideal)),
                          true, nullptr});
  }

  {
    nlohmann::json data{{"cartesian", {{"crt", crt_cart}, {"quotient", quo_cart}}},
                        {"exp", {{"crt", crt_exp}, {"quotient", quo_exp}}}};
    const long want_exp = ideal.union_all() ? crt_cart + 1 : crt_cart;
    bool ok = crt_cart == quo_cart && crt_exp == quo_exp && crt_exp == want_exp;
    if (n <= 4) {
      const long cc = dsc(ideal, HyperFlavor::Cartesian, DscMethod::Components);
      const long ce_pi = dsc(ideal, HyperFlavor::ExpPointIdeal, DscMethod::Components);
      const long ce_ary = dsc(ideal, HyperFlavor::ExpIAry, DscMethod::Components);
      const long ce_gen = dsc(ideal, HyperFlavor::ExpGeneric, DscMethod::Components);
      data["cartesian"]["components"] = cc;
      data["exp"]["components"] = {{"pointIdeal", ce_pi}, {"iary", ce_ary}, {"generic", ce_gen}};
      ok = ok && cc == crt_cart && ce_pi == crt_exp && ce_ary == crt_exp && ce_gen == crt_exp;
    }
    rep.checks.push_back({"methodsAgree",
                          ok ? Verdict::holds() : Verdict::fails(data), true, data});
  }

  {
    const long expected = 1L << (n - popcount(ideal.union_all()));
    bool ok = crt_cart == expected &&
              quo_cart == static_cast<long>(quotient_cosets(ideal).cosets.size()) &&
              crt_cart <= (1L << n);
    nlohmann::json data{{"count", crt_cart}, {"closedForm", expected}};
    rep.checks.push_back({"countClosedForm",
                          ok ? Verdict::holds() : Verdict::fails(data), true, data});
  }

  if (n <= 4) {
    // the exp flavors share one closeness relation: the I-ary walk realizes
    // it exactly, and every point-ideal ball stays inside a closeness class
    Verdict exp_match = [&] {
      std::map<Mask, std::vector<Point>> by_rep;
      const auto members = ideal.members();
      for (Mask a = 1; a < (Mask{1} << n); ++a) {
        Mask rep_mask = a;
        for (Mask j : members) rep_mask = std::min(rep_mask, a ^ j);
        by_rep[rep_mask].push_back(a);
      }
      std::vector<std::vector<Point>> classes{{0}};
      for (auto& [rep_mask, klass] : by_rep) classes.push_back(std::move(klass));
      std::sort(classes.begin(), classes.end(),
                [](const auto& a, const auto& b) { return a.front() < b.front(); });
      if (components_of(*make_exp_iary(ideal)) != classes)
        return Verdict::fails({{"side", "iary"}});
      std::map<Point, std::size_t> klass_of;
      for (std::size_t i = 0; i < classes.size(); ++i)
        for (Point p : classes[i]) klass_of[p] = i;
      auto exp_pi = make_exp_point_ideal(ideal);
      for (Point a : exp_pi->window_points())
        for (int r = 0; r < exp_pi->chain_size(); ++r)
          for (Point m : exp_pi->ball(a, r))
            if (klass_of.at(m) != klass_of.at(a))
              return Verdict::fails({{"side", "pointIdeal"},
                                     {"A", mask_json(a)},
                                     {"member", mask_json(m)}});
      return Verdict::holds();
    }();
    rep.checks.push_back({"expComponentsMatch", exp_match, true, nullptr});

    // each Cartesian component is a coset rep + ideal translate set
    Verdict cosets_ok = [&] {
      auto comps = components_of(*make_cartesian(ideal));
      auto ring = quotient_cosets(ideal);
      if (comps.size() != ring.cosets.size())
        return Verdict::fails({{"components", comps.size()}, {"cosets", ring.cosets.size()}});
      auto members = ideal.members();
      std::sort(members.begin(), members.end());
      for (std::size_t i = 0; i < comps.size(); ++i) {
        std::vector<Point> klass;
        for (Mask j : members) klass.push_back(ring.cosets[i] ^ j);
        std::sort(klass.begin(), klass.end());
        if (klass != comps[i])
          return Verdict::fails({{"coset", mask_json(ring.cosets[i])}});
      }
      return Verdict::holds();
    }();
    rep.checks.push_back({"cartesianComponentsAreCosets", cosets_ok, true, nullptr});
  }

  if (n <= 6) {
    rep.checks.push_back(
        {"closenessMatchesClosedForm",
         check_quotient_against_crt(
             ideal, [&](Mask y, Mask z) { return ideal.contains(symdiff(y, z)); }),
         true, nullptr});
  }

  {
    const Mask hat = ideal_hat(ideal);
    Verdict v = [&] {
      for (Mask a = 0; a < (Mask{1} << std::min(n, 12)); ++a)
        if (ideal.contains(a) != ((a & hat) == 0))
          return Verdict::fails({{"A", mask_json(a)}});
      // minimality: no proper subfamily of the hat's maximal ideals cuts I
      for (int e : mask_to_elems(hat))
        if (ideal.contains(Mask{1} << e))
          return Verdict::fails({{"redundantHatElement", e}});
      return Verdict::holds();
    }();
    rep.checks.push_back({"hatMembershipFormula", v, true,
                          {{"hat", mask_json(hat)}, {"iota", iota(ideal)}}});
  }
  return rep;
}

// ---- morphism suite ----------------------------------------------------------------

SuiteReport suite_maps(const Ideal& ideal, int x) {
  if (!ideal.ground.is_finite())
    throw BalleanError("FiniteOnly", "the morphism suite runs on finite grounds");
  const int n = ideal.ground.window();
  if (n > 6) throw BalleanError("WindowTooLarge", "the morphism suite needs |X| <= 6");
  SuiteReport rep;
  rep.suite = "maps";
  rep.model = {{"ground", n}, {"ideal", ideal.desc_name()}, {"x", x}};

  auto b_pi = make_point_ideal_ballean(ideal);
  auto b_ary = make_iary_ballean(ideal);
  const Mask u = ideal.union_all();
  const Mask hat = ideal_hat(ideal);
  const bool id_proper_expected = hat == 0 || u == 0;

  BalleanMap m_id = map_identity(b_pi, b_ary, "id");
  rep.checks.push_back({"idCoarse", is_coarse(m_id), true, nullptr});
  rep.checks.push_back({"idProperIffDegenerate",
                        expect_value(is_effectively_proper(m_id), id_proper_expected),
                        true, nullptr});

  if (n <= 4) {
    BalleanMap m_exp = map_exp(m_id);
    rep.checks.push_back({"expIdCoarse", is_coarse(m_exp), true, nullptr});
    rep.checks.push_back({"expIdAsymorphismTransfers",
                          expect_value(is_asymorphism(m_exp), id_proper_expected), true,
                          nullptr});
    BalleanMap m_flat = map_flat(m_id);
    rep.checks.push_back({"flatIdCoarse", is_coarse(m_flat), true,
                          {{"effectivelyProper", is_effectively_proper(m_flat).to_json()}}});
  }

  auto exp_ary = make_exp_iary(ideal);
  auto cart = make_cartesian(ideal);
  if (n <= 4) {
    BalleanMap m_j = map_identity(exp_ary, cart, "j");
    rep.checks.push_back({"expAryIntoCartesianCoarse", is_coarse(m_j), true, nullptr});
  }
  {
    auto comp_empty_exp = component(*exp_ary, 0);
    auto comp_empty_cart = component(*cart, 0);
    std::vector<Point> members;
    for (Mask m : ideal.members()) members.push_back(m);
    std::sort(members.begin(), members.end());
    bool ok = comp_empty_exp == std::vector<Point>{0} && comp_empty_cart == members;
    rep.checks.push_back(
        {"emptySetIsolatedInExp",
         ok ? Verdict::holds()
            : Verdict::fails({{"expComponent", comp_empty_exp.size()},
                              {"cartesianComponent", comp_empty_cart.size()}}),
         true, nullptr});
  }

  if (u != 0) {
    if (x < 0 || !((u >> x) & 1))
      throw BalleanError("BadBasePoint",
                         "{" + std::to_string(x) + "} is not a member of the ideal");
    JxMaps jm = map_jx(ideal, x);
    std::vector<int> psi(jm.chain_len);
    for (int i = 0; i < jm.chain_len; ++i) psi[i] = i;
    rep.checks.push_back({"jxBallImageIdentity", check_ball_image_criterion(jm.j_ux, psi), true, nullptr});
    rep.checks.push_back({"jxAsymorphism", is_asymorphism(jm.j_ux), true, nullptr});
    rep.checks.push_back({"jxImageLarge",
                          is_large(*jm.cartesian, PointSet::finite(jm.ux_support)), true,
                          nullptr});
    rep.checks.push_back({"jxIdealCopyBallImageIdentity", check_ball_image_criterion(jm.j_ix, psi),
                          true, nullptr});
    rep.checks.push_back({"jxIdealCopyAsymorphism", is_asymorphism(jm.j_ix), true, nullptr});
  }

  // the ring operations are coarse on the Cartesian square
  auto ring_op_coarse = [&](const std::function<Mask(Mask, Mask)>& op) -> Verdict {
    for (int r = 0; r < cart->chain_size(); ++r) {
      bool found = false;
      for (int r2 = 0; r2 < cart->chain_size() && !found; ++r2) {
        bool ok = true;
        for (Mask a = 0; a < (Mask{1} << n) && ok; ++a)
          for (Mask bm = 0; bm < (Mask{1} << n) && ok; ++bm)
            for (Point ap : cart->ball(a, r))
              for (Point bp : cart->ball(bm, r)) {
                if (!cart->in_ball(op(a, bm), r2, op(ap, bp))) { ok = false; break; }
              }
        found = ok;
      }
      if (!found) return Verdict::fails({{"radius", cart->radius_label(r)}});
    }
    return Verdict::holds();
  };
  rep.checks.push_back(
      {"ringSymdiffCoarse", ring_op_coarse([](Mask a, Mask b) { return a ^ b; }), true,
       nullptr});
  rep.checks.push_back(
      {"ringIntersectCoarse", ring_op_coarse([](Mask a, Mask b) { return a & b; }), true,
       nullptr});

  // evidence: on exp the isolated empty set breaks the symmetric difference
  {
    nlohmann::json w = nullptr;
    const int top = exp_ary->chain_size() - 1;
    for (Mask a = 0; a < (Mask{1} << n) && w.is_null(); ++a)
      for (Mask bm = 0; bm < (Mask{1} << n) && w.is_null(); ++bm) {
        if ((a ^ bm) == 0) continue;
        for (Point ap : exp_ary->ball(a, top)) {
          if ((ap ^ a) == 0) continue;
          if (exp_ary->in_ball(bm, top, ap)) {
            // images a^ap = 0 vs a^bm != 0: the pair lands on the isolated point
            w = {{"A", mask_json(a)}, {"B", mask_json(bm)}, {"APrime", mask_json(ap)}};
            break;
          }
        }
      }
    rep.checks.push_back({"expSymdiffIsolationWitness",
                          Verdict{!w.is_null() || u == 0, false, 0, w}, false, nullptr});
  }
  return rep;
}

// ---- macrocube suite ---------------------------------------------------------------

SuiteReport suite_kcubes(int horizon, int x, int window) {
  SuiteReport rep;
  rep.suite = "kcubes";
  rep.model = {{"horizon", horizon}, {"x", x}, {"window", window}};
  rep.checks.push_back({"imageEmbedding", check_kcube_image_ball_eq(horizon), true, nullptr});
  rep.checks.push_back({"minimumDetectsBottom", check_kcube_min_segment_eq(horizon), true, nullptr});
  rep.checks.push_back({"imageShape", check_kcube_image_shape(horizon), true, nullptr});
  rep.checks.push_back({"copyIdentity", check_kcube_i_identity(x, window), true, nullptr});
  rep.checks.push_back({"copyChainCofinal", check_kcube_i_cofinality(x, window), true, nullptr});
  rep.checks.push_back(
      {"copiesClose", check_kcube_copies_close(x, x + 1, window), true, nullptr});
  rep.checks.push_back({"minimumPartition", check_kcube_partition(window), true, nullptr});
  rep.checks.push_back(
      {"macrocubeRestriction", check_kcube_flat_restriction(x, window), true, nullptr});
  return rep;
}

}  // namespace bln
