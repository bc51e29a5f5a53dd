#include "ballean/maps.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace bln {
namespace {

int horizon_of(const BalleanMap& m) {
  Point wb = std::max(m.domain->window_bound(), m.codomain->window_bound());
  return static_cast<int>(wb);
}

bool map_is_finite(const BalleanMap& m) {
  return m.domain->finite_model() && m.codomain->finite_model();
}

Verdict wrap(const BalleanMap& m, bool value, nlohmann::json w) {
  if (map_is_finite(m))
    return value ? Verdict{true, false, 0, std::move(w)} : Verdict::fails(std::move(w));
  return Verdict::at_horizon(value, horizon_of(m), std::move(w));
}

std::vector<Point> domain_points(const BalleanMap& m) {
  std::vector<Point> out;
  for (Point p : m.domain->quantified_points())
    if (m.domain->in_support(p)) out.push_back(p);
  return out;
}

std::unordered_set<Point> image_of(const BalleanMap& m) {
  std::unordered_set<Point> img;
  for (Point p : domain_points(m)) img.insert(m.fn(p));
  return img;
}

// All sub-verdicts with their labels, folded into one three-valued result.
Verdict combine(const std::vector<std::pair<std::string, Verdict>>& parts) {
  nlohmann::json w = nlohmann::json::object();
  for (const auto& [label, v] : parts) w[label] = v.to_json();
  for (const auto& [label, v] : parts)
    if (!v.value && !v.to_horizon) return Verdict::fails(std::move(w));
  bool value = true;
  bool horizon = false;
  int h = 0;
  for (const auto& [label, v] : parts) {
    value = value && v.value;
    if (v.to_horizon) { horizon = true; h = std::max(h, v.horizon); }
  }
  return horizon ? Verdict::at_horizon(value, h, std::move(w))
                 : Verdict{value, false, 0, std::move(w)};
}

}  // namespace

Verdict is_coarse(const BalleanMap& m) {
  const auto dpts = domain_points(m);
  const int dn = m.domain->chain_size();
  const int cn = m.codomain->chain_size();
  nlohmann::json table = nlohmann::json::array();
  for (int ra = 0; ra < dn; ++ra) {
    int found = -1;
    for (int rb = 0; rb < cn && found < 0; ++rb) {
      bool ok = true;
      for (Point x : dpts) {
        const Point fx = m.fn(x);
        for (Point p : m.domain->ball(x, ra)) {
          if (!m.codomain->in_ball(fx, rb, m.fn(p))) { ok = false; break; }
        }
        if (!ok) break;
      }
      if (ok) found = rb;
    }
    if (found < 0) {
      // replay the failure at the top codomain radius for a concrete witness
      for (Point x : dpts) {
        const Point fx = m.fn(x);
        for (Point p : m.domain->ball(x, ra)) {
          if (!m.codomain->in_ball(fx, cn - 1, m.fn(p))) {
            return wrap(m, false,
                        {{"alpha", m.domain->radius_label(ra)},
                         {"x", x},
                         {"p", p},
                         {"fx", fx},
                         {"fp", m.fn(p)}});
          }
        }
      }
      return wrap(m, false, {{"alpha", m.domain->radius_label(ra)}});
    }
    table.push_back({{"alpha", m.domain->radius_label(ra)},
                     {"beta", m.codomain->radius_label(found)}});
  }
  return wrap(m, true, {{"table", table}});
}

Verdict is_effectively_proper(const BalleanMap& m) {
  const auto dpts = domain_points(m);
  const int dn = m.domain->chain_size();
  const int cn = m.codomain->chain_size();
  nlohmann::json table = nlohmann::json::array();
  for (int ra = 0; ra < cn; ++ra) {
    int found = -1;
    for (int rb = 0; rb < dn && found < 0; ++rb) {
      bool ok = true;
      for (Point x : dpts) {
        const Point fx = m.fn(x);
        for (Point y : dpts) {
          if (m.codomain->in_ball(fx, ra, m.fn(y)) && !m.domain->in_ball(x, rb, y)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) found = rb;
    }
    if (found < 0) {
      for (Point x : dpts) {
        const Point fx = m.fn(x);
        for (Point y : dpts) {
          if (m.codomain->in_ball(fx, ra, m.fn(y)) &&
              !m.domain->in_ball(x, dn - 1, y)) {
            return wrap(m, false,
                        {{"alpha", m.codomain->radius_label(ra)},
                         {"x", x},
                         {"y", y},
                         {"fx", fx},
                         {"fy", m.fn(y)}});
          }
        }
      }
      return wrap(m, false, {{"alpha", m.codomain->radius_label(ra)}});
    }
    table.push_back({{"alpha", m.codomain->radius_label(ra)},
                     {"beta", m.domain->radius_label(found)}});
  }
  return wrap(m, true, {{"table", table}});
}

Verdict is_injective(const BalleanMap& m) {
  std::unordered_map<Point, Point> seen;
  for (Point p : domain_points(m)) {
    Point fp = m.fn(p);
    auto [it, fresh] = seen.emplace(fp, p);
    if (!fresh)
      return wrap(m, false, {{"x", it->second}, {"y", p}, {"value", fp}});
  }
  return wrap(m, true, nullptr);
}

Verdict is_coarse_embedding(const BalleanMap& m) {
  return combine({{"coarse", is_coarse(m)},
                  {"effectivelyProper", is_effectively_proper(m)}});
}

Verdict is_asymorphism(const BalleanMap& m) {
  // bijective coarse embedding
  Verdict inj = is_injective(m);
  std::unordered_set<Point> img = image_of(m);
  Verdict sur = [&] {
    for (Point q : m.codomain->quantified_points()) {
      if (!m.codomain->in_support(q)) continue;
      if (!img.count(q)) return wrap(m, false, {{"missed", q}});
    }
    return wrap(m, true, nullptr);
  }();
  return combine({{"injective", inj},
                  {"surjective", sur},
                  {"coarse", is_coarse(m)},
                  {"effectivelyProper", is_effectively_proper(m)}});
}

Verdict is_asymorphic_embedding(const BalleanMap& m) {
  return combine({{"injective", is_injective(m)},
                  {"coarse", is_coarse(m)},
                  {"effectivelyProper", is_effectively_proper(m)}});
}

Verdict is_coarse_equivalence(const BalleanMap& m) {
  std::vector<Point> img;
  for (Point p : image_of(m)) img.push_back(p);
  Verdict large = is_large(*m.codomain, PointSet::finite(std::move(img)));
  return combine({{"coarseEmbedding", is_coarse_embedding(m)},
                  {"imageLarge", large}});
}

Verdict check_ball_image_criterion(const BalleanMap& m, const std::vector<int>& psi) {
  Verdict inj = is_injective(m);
  if (!inj.value)
    throw BalleanError("NotInjective",
                       "the ball-image criterion applies to injective maps only");
  if (static_cast<int>(psi.size()) != m.domain->chain_size())
    throw BalleanError("BadChainMap", "psi must cover the domain chain");
  const auto img = image_of(m);
  for (Point x : domain_points(m)) {
    const Point fx = m.fn(x);
    for (int ra = 0; ra < m.domain->chain_size(); ++ra) {
      std::vector<Point> lhs;
      for (Point p : m.domain->ball(x, ra)) lhs.push_back(m.fn(p));
      std::sort(lhs.begin(), lhs.end());
      lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
      std::vector<Point> rhs;
      for (Point q : m.codomain->ball(fx, psi.at(ra)))
        if (img.count(q)) rhs.push_back(q);
      std::sort(rhs.begin(), rhs.end());
      if (lhs != rhs)
        return wrap(m, false,
                    {{"x", x},
                     {"alpha", m.domain->radius_label(ra)},
                     {"ballImage", lhs},
                     {"imageBall", rhs}});
    }
  }
  Verdict emb = is_coarse_embedding(m);
  Verdict ok = wrap(m, emb.value, {{"embeddingConfirmed", emb.value}});
  return ok;
}

// ---- constructions -----------------------------------------------------------

BalleanMap map_identity(BalleanPtr dom, BalleanPtr cod, std::string name) {
  return {std::move(dom), std::move(cod), [](Point p) { return p; }, std::move(name)};
}

BalleanMap map_exp(const BalleanMap& m) {
  if (!map_is_finite(m))
    throw BalleanError("FiniteOnly", "hyperballean lift needs finite models");
  auto fn = m.fn;
  auto lifted = [fn](Point a) {
    Mask out = 0;
    for (int e : mask_to_elems(a)) out |= Mask{1} << fn(static_cast<Point>(e));
    return static_cast<Point>(out);
  };
  return {make_exp_generic(m.domain), make_exp_generic(m.codomain), lifted,
          "exp(" + m.name + ")"};
}

BalleanMap map_flat(const BalleanMap& m) {
  if (!map_is_finite(m))
    throw BalleanError("FiniteOnly", "hyperballean lift needs finite models");
  auto dom_flat = make_flat(*m.domain, make_exp_generic(m.domain));
  auto cod_flat = make_flat(*m.codomain, make_exp_generic(m.codomain));
  auto fn = m.fn;
  auto lifted = [fn](Point a) {
    Mask out = 0;
    for (int e : mask_to_elems(a)) out |= Mask{1} << fn(static_cast<Point>(e));
    return static_cast<Point>(out);
  };
  for (Point a : dom_flat->window_points())
    if (!cod_flat->in_support(lifted(a)))
      throw BalleanError("UnboundedImage",
                         "bounded set " + mask_to_string(a) + " has an unbounded image");
  return {std::move(dom_flat), std::move(cod_flat), lifted, "flat(" + m.name + ")"};
}

BalleanMap map_C(BalleanPtr b) {
  if (!b->finite_model())
    throw BalleanError("FiniteOnly", "the complement map needs a finite model here");
  const Mask full = b->window_bound() >= 64 ? ~Mask{0} : (Mask{1} << b->window_bound()) - 1;
  auto cod = make_exp_generic(b);
  return {std::move(b), std::move(cod),
          [full](Point x) { return static_cast<Point>(full & ~(Mask{1} << x)); }, "C"};
}

BalleanMap map_CB(BalleanPtr b) {
  if (!b->finite_model())
    throw BalleanError("FiniteOnly", "the complement map needs a finite model here");
  const Mask full = b->window_bound() >= 64 ? ~Mask{0} : (Mask{1} << b->window_bound()) - 1;
  auto hyper = make_exp_generic(b);
  auto dom = make_flat(*b, hyper);
  return {std::move(dom), std::move(hyper),
          [full](Point a) { return static_cast<Point>(full & ~a); }, "CB"};
}

JxMaps map_jx(const Ideal& ideal, int x) {
  if (!ideal.ground.is_finite())
    throw BalleanError("FiniteOnly", "the j_x construction is run on finite models");
  const Mask u = ideal.union_all();
  const Mask xm = Mask{1} << x;
  if (!(u & xm))
    throw BalleanError("BadBasePoint",
                       "{" + std::to_string(x) + "} is not a member of the ideal");
  // rebased chain: every radius contains x, still monotone and cofinal
  std::vector<Mask> chain{xm};
  Mask acc = xm;
  for (int e : mask_to_elems(u)) {
    acc |= Mask{1} << e;
    if (acc != chain.back()) chain.push_back(acc);
  }
  const int width = ideal.ground.window();
  std::vector<Point> ux, ix;
  for (Mask m = 0; m < (Mask{1} << width); ++m) {
    if (m & xm) {
      ux.push_back(m);
      if (ideal.contains(m)) ix.push_back(m);
    }
  }
  auto dom_u = make_subballean(make_exp_point_ideal(ideal, chain), ux, "exp(X_I)|U_x");
  auto cod_u = make_subballean(make_exp_iary(ideal, chain), ux, "exp(X_ary)|U_x");
  auto dom_i = make_subballean(make_exp_point_ideal(ideal, chain), ix, "exp(X_I)|I_x");
  auto cod_i = make_subballean(make_exp_iary(ideal, chain), ix, "exp(X_ary)|I_x");
  JxMaps out;
  out.j_ux = map_identity(std::move(dom_u), std::move(cod_u), "j_Ux");
  out.j_ix = map_identity(std::move(dom_i), std::move(cod_i), "j_Ix");
  out.cartesian = make_cartesian(ideal, chain);
  out.ux_support = std::move(ux);
  out.chain_len = static_cast<int>(chain.size());
  return out;
}

// ---- macrocube embeddings over the naturals ----------------------------------

Mask kcube_phi(Mask f) {
  Mask out = 0;
  for (int n : mask_to_elems(f)) out |= Mask{1} << (2 * n + 1);
  return out;
}

Mask kcube_apply(Mask f) {
  if (f == 0) return 0;
  const int mn = std::countr_zero(f);
  return (Mask{1} << (2 * mn)) | kcube_phi(f);
}

bool kcube_image_shape_ok(Mask a) {
  if (a == 0) return true;  // image of the empty set
  constexpr Mask evens = Mask{0x5555555555555555};
  const Mask ev = a & evens;
  if (popcount(ev) != 1) return false;
  return std::countr_zero(a) == std::countr_zero(ev);
}

namespace {

void require_kcube_horizon(int horizon) {
  if (horizon < 1 || 2 * horizon >= kMaxWidth)
    throw BalleanError("BadHorizon", "macrocube horizon out of range");
}

}  // namespace

Verdict check_kcube_image_ball_eq(int horizon) {
  return check_kcube_image_ball_eq_with(horizon, kcube_apply);
}

Verdict check_kcube_image_ball_eq_with(int horizon, const KcubeApplyFn& apply) {
  require_kcube_horizon(horizon);
  for (Mask a = 0; a < (Mask{1} << horizon); ++a) {
    for (int al = 0; al < horizon; ++al) {
      const Mask k = (Mask{1} << (al + 1)) - 1;        // [0, alpha]
      const Mask kphi = (Mask{1} << (2 * al + 2)) - 1;  // [0, 2*alpha+1]
      std::vector<Mask> lhs;
      for (Mask z : hyper_ball_point_ideal(a, k).members()) lhs.push_back(apply(z));
      std::sort(lhs.begin(), lhs.end());
      lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
      // every image set within the ball comes from a subset of A union [0,alpha]
      const HyperBall rb = hyper_ball_iary(apply(a), kphi);
      std::vector<Mask> rhs;
      const Mask range = a | k;
      Mask w = range;
      for (;;) {
        Mask fw = apply(w);
        if (rb.contains(fw)) rhs.push_back(fw);
        if (w == 0) break;
        w = (w - 1) & range;
      }
      std::sort(rhs.begin(), rhs.end());
      rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
      if (lhs != rhs)
        return Verdict::fails({{"A", mask_to_elems(a)},
                               {"alpha", al},
                               {"lhsSize", lhs.size()},
                               {"rhsSize", rhs.size()}});
    }
  }
  return Verdict::at_horizon(true, horizon);
}

Verdict check_kcube_min_segment_eq(int horizon) {
  require_kcube_horizon(horizon);
  for (Mask a = 0; a < (Mask{1} << horizon); ++a) {
    for (int al = 0; al < horizon; ++al) {
      const Mask k = (Mask{1} << (al + 1)) - 1;
      const Mask lo = a & ~k;
      Mask s = k;  // Z = lo | s over the Cartesian interval
      for (;;) {
        const Mask z = lo | s;
        if (z != 0) {
          const bool differs = z != lo;
          const bool min_low = std::countr_zero(z) <= al;
          if (differs != min_low)
            return Verdict::fails({{"A", mask_to_elems(a)},
                                   {"alpha", al},
                                   {"Z", mask_to_elems(z)}});
        }
        if (s == 0) break;
        s = (s - 1) & k;
      }
    }
  }
  return Verdict::at_horizon(true, horizon);
}

Verdict check_kcube_image_shape(int horizon) {
  return check_kcube_image_shape_with(horizon, kcube_apply);
}

Verdict check_kcube_image_shape_with(int horizon, const KcubeApplyFn& apply) {
  require_kcube_horizon(horizon);
  for (Mask f = 0; f < (Mask{1} << horizon); ++f) {
    Mask a = apply(f);
    if (!kcube_image_shape_ok(a))
      return Verdict::fails({{"F", mask_to_elems(f)}, {"image", mask_to_elems(a)}});
    if ((f == 0) != (a == 0))
      return Verdict::fails({{"F", mask_to_elems(f)}, {"image", mask_to_elems(a)}});
  }
  return Verdict::at_horizon(true, horizon);
}

namespace {

void require_kcube_window(int x, int window) {
  if (x < 0 || window < 1 || x + 1 + window > 20)
    throw BalleanError("WindowTooSmall",
                       "the shifted universe does not fit the enumeration window");
}

// Members of the given hyper ball whose minimum element is x, ascending.
std::vector<Mask> members_with_min(const HyperBall& hb, int x) {
  std::vector<Mask> out;
  const Mask below = (Mask{1} << x) - 1;
  for (Mask z : hb.members())
    if (z != 0 && (z & below) == 0 && (z >> x) & 1) out.push_back(z);
  return out;
}

}  // namespace

Verdict check_kcube_i_identity(int x, int window) {
  require_kcube_window(x, window);
  const Mask xm = Mask{1} << x;
  auto g = [&](Mask m) { return m << (x + 1); };
  for (Mask xs = 0; xs < (Mask{1} << window); ++xs) {
    const Mask fx = xm | g(xs);
    for (Mask k = 0; k < (Mask{1} << window); ++k) {
      const Mask psik = xm | g(k);
      std::vector<Mask> lhs;
      for (Mask z : hyper_ball_cartesian(xs, k).members()) lhs.push_back(xm | g(z));
      std::sort(lhs.begin(), lhs.end());
      std::vector<Mask> rhs = members_with_min(hyper_ball_point_ideal(fx, psik), x);
      if (lhs != rhs)
        return Verdict::fails({{"x", x},
                               {"X", mask_to_elems(xs)},
                               {"K", mask_to_elems(k)},
                               {"lhsSize", lhs.size()},
                               {"rhsSize", rhs.size()}});
    }
  }
  return Verdict::at_horizon(true, window);
}

Verdict check_kcube_i_cofinality(int x, int window) {
  require_kcube_window(x, window);
  const int u = x + 1 + window;
  const Mask xm = Mask{1} << x;
  const int kw = std::min(u, 5);
  for (Mask c = 0; c < (Mask{1} << u); ++c) {
    if (!(c & xm)) continue;  // centers in U_x
    for (Mask k = 0; k < (Mask{1} << kw); ++k) {
      // radii enlarged by {x} stay a cofinal chain inside U_x: the bigger
      // radius dominates the original ball there
      const HyperBall big = hyper_ball_point_ideal(c, k | xm);
      for (Mask z : hyper_ball_point_ideal(c, k).members())
        if ((z & xm) && !big.contains(z))
          return Verdict::fails({{"x", x},
                                 {"C", mask_to_elems(c)},
                                 {"K", mask_to_elems(k)},
                                 {"Z", mask_to_elems(z)}});
    }
  }
  return Verdict::at_horizon(true, window);
}

Verdict check_kcube_copies_close(int x, int y, int window) {
  if (x == y || x < 0 || y < 0)
    throw BalleanError("BadBasePoint", "closeness needs two distinct minima");
  if (x > y) std::swap(x, y);
  require_kcube_window(y, window);
  const int u = y + 1 + window;
  const Mask between = ((Mask{1} << (y + 1)) - 1) & ~((Mask{1} << x) - 1);  // [x, y]
  auto min_is = [&](Mask m, int v) {
    return m != 0 && std::countr_zero(m) == v;
  };
  auto covered = [&](Mask a, int other_min) {
    for (Mask c = 0; c < (Mask{1} << u); ++c)
      if (min_is(c, other_min) && hyper_ball_point_ideal(c, between).contains(a))
        return true;
    return false;
  };
  for (Mask a = 0; a < (Mask{1} << u); ++a) {
    if (min_is(a, x) && !covered(a, y))
      return Verdict::fails({{"x", x}, {"y", y}, {"A", mask_to_elems(a)}});
    if (min_is(a, y) && !covered(a, x))
      return Verdict::fails({{"x", x}, {"y", y}, {"A", mask_to_elems(a)}});
  }
  return Verdict::at_horizon(true, window);
}

Verdict check_kcube_partition(int window) {
  if (window < 1 || window > 20)
    throw BalleanError("BadHorizon", "partition window out of range");
  for (Mask a = 1; a < (Mask{1} << window); ++a) {
    int classes = 0;
    for (int v = 0; v < window; ++v)
      if (std::countr_zero(a) == v) ++classes;
    if (classes != 1)
      return Verdict::fails({{"A", mask_to_elems(a)}, {"classes", classes}});
  }
  return Verdict::at_horizon(true, window);
}

Verdict check_kcube_flat_restriction(int x, int window) {
  require_kcube_window(x, window);
  const Mask xm = Mask{1} << x;
  auto g = [&](Mask m) { return m << (x + 1); };
  // centers range over the macrocube support (the finite sets in the window);
  // images must land in the non-empty copy with minimum x
  for (Mask xs = 0; xs < (Mask{1} << window); ++xs) {
    const Mask fx = xm | g(xs);
    if (std::countr_zero(fx) != x)
      return Verdict::fails({{"X", mask_to_elems(xs)}, {"image", mask_to_elems(fx)}});
    for (Mask k = 0; k < (Mask{1} << window); ++k) {
      const Mask psik = xm | g(k);
      std::vector<Mask> lhs;
      for (Mask z : hyper_ball_cartesian(xs, k).members()) lhs.push_back(xm | g(z));
      std::sort(lhs.begin(), lhs.end());
      std::vector<Mask> rhs;
      for (Mask z : members_with_min(hyper_ball_point_ideal(fx, psik), x))
        if (z != 0) rhs.push_back(z);
      if (lhs != rhs)
        return Verdict::fails({{"x", x},
                               {"X", mask_to_elems(xs)},
                               {"K", mask_to_elems(k)}});
    }
  }
  return Verdict::at_horizon(true, window);
}

}  // namespace bln
