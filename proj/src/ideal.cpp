#include "ballean/ideal.hpp"

#include <algorithm>

namespace bln {
namespace {

nlohmann::json mask_json(Mask m) { return nlohmann::json(mask_to_elems(m)); }

// Explicit-family closure checks shared by all materialized descriptions.
Verdict check_family(const std::vector<Mask>& fam, const GroundSet& g) {
  if (fam.empty())
    return Verdict::fails({{"kind", "emptyFamily"}});
  auto member = [&](Mask m) {
    return std::binary_search(fam.begin(), fam.end(), m);
  };
  if (g.is_finite() && member(g.full_window_mask()))
    return Verdict::fails(
        {{"kind", "properness"}, {"set", mask_json(g.full_window_mask())}});
  for (Mask a : fam) {
    // enumerate proper submasks of a
    for (Mask c = (a - 1) & a;; c = (c - 1) & a) {
      if (!member(c))
        return Verdict::fails({{"kind", "downwardClosure"},
                               {"set", mask_json(a)},
                               {"missingSubset", mask_json(c)}});
      if (c == 0) break;
    }
  }
  for (Mask a : fam)
    for (Mask b : fam)
      if (!member(a | b))
        return Verdict::fails({{"kind", "unionClosure"},
                               {"a", mask_json(a)},
                               {"b", mask_json(b)},
                               {"missingUnion", mask_json(a | b)}});
  return Verdict::holds();
}

std::vector<Mask> submasks_of(Mask u) {
  std::vector<Mask> out;
  Mask s = u;
  for (;;) {
    out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & u;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> all_masks(int width) {
  if (width > 20)
    throw BalleanError("WindowTooLarge",
                       "refusing to materialize 2^" + std::to_string(width) + " subsets");
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << width);
  for (Mask m = 0; m < (Mask{1} << width); ++m) out.push_back(m);
  return out;
}

}  // namespace

Ideal Ideal::make_principal(GroundSet g, Mask s) {
  if (s & ~g.full_window_mask())
    throw BalleanError("ElementOutOfRange", "generator exceeds ground window");
  return {g, Desc::Principal, s, 1, {}};
}

Ideal Ideal::make_size_below(GroundSet g, int lambda) {
  if (lambda < 1) throw BalleanError("BadIdeal", "sizeBelow bound must be >= 1");
  return {g, Desc::SizeBelow, 0, lambda, {}};
}

Ideal Ideal::make_generated_by(GroundSet g, std::vector<Mask> basis) {
  for (Mask b : basis)
    if (b & ~g.full_window_mask())
      throw BalleanError("ElementOutOfRange", "basis set exceeds ground window");
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return {g, Desc::GeneratedBy, 0, 1, std::move(basis)};
}

Ideal Ideal::make_explicit(GroundSet g, std::vector<Mask> fam) {
  for (Mask b : fam)
    if (b & ~g.full_window_mask())
      throw BalleanError("ElementOutOfRange", "family set exceeds ground window");
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return {g, Desc::Explicit, 0, 1, std::move(fam)};
}

Ideal Ideal::make_frechet(int horizon) {
  return {GroundSet::naturals(horizon), Desc::Frechet, 0, 1, {}};
}

bool Ideal::contains(Mask a) const {
  switch (desc) {
    case Desc::Principal:
      return (a & ~principal) == 0;
    case Desc::SizeBelow:
      return popcount(a) < size_below;
    case Desc::GeneratedBy: {
      // A belongs iff A is covered by the union of some finite sub-collection
      // of the basis; with a finite basis that is covering by the full union.
      return (a & ~union_all()) == 0;
    }
    case Desc::Explicit:
      return std::binary_search(family.begin(), family.end(), a);
    case Desc::Frechet:
      return true;  // every FinSet is finite
  }
  return false;
}

Mask Ideal::union_all() const {
  switch (desc) {
    case Desc::Principal:
      return principal;
    case Desc::SizeBelow:
      return size_below >= 2 ? ground.full_window_mask() : 0;
    case Desc::GeneratedBy:
    case Desc::Explicit: {
      Mask u = 0;
      for (Mask b : family) u |= b;
      return u;
    }
    case Desc::Frechet:
      return ground.full_window_mask();
  }
  return 0;
}

std::vector<Mask> Ideal::members() const {
  switch (desc) {
    case Desc::Principal:
      return submasks_of(principal);
    case Desc::GeneratedBy:
      return submasks_of(union_all());
    case Desc::Explicit:
      return family;
    case Desc::SizeBelow: {
      std::vector<Mask> out;
      for (Mask m : all_masks(ground.window()))
        if (popcount(m) < size_below) out.push_back(m);
      return out;
    }
    case Desc::Frechet:
      return all_masks(ground.window());
  }
  return {};
}

std::string Ideal::desc_name() const {
  switch (desc) {
    case Desc::Principal: return "principal";
    case Desc::SizeBelow: return "sizeBelow";
    case Desc::GeneratedBy: return "generatedBy";
    case Desc::Explicit: return "explicit";
    case Desc::Frechet: return "frechet";
  }
  return "?";
}

Verdict ideal_validate(const Ideal& ideal) {
  const GroundSet& g = ideal.ground;
  if (g.is_finite()) {
    switch (ideal.desc) {
      case Ideal::Desc::Principal:
      case Ideal::Desc::GeneratedBy:
        if (ideal.union_all() == g.full_window_mask())
          return Verdict::fails({{"kind", "properness"},
                                 {"set", nlohmann::json(mask_to_elems(g.full_window_mask()))}});
        return Verdict::holds();
      case Ideal::Desc::SizeBelow:
      case Ideal::Desc::Explicit:
        return check_family(ideal.members(), g);
      case Ideal::Desc::Frechet:
        return Verdict::fails({{"kind", "frechetNeedsNaturals"}});
    }
  }
  // Countable ground: properness is automatic for finitely described families.
  switch (ideal.desc) {
    case Ideal::Desc::Frechet:
    case Ideal::Desc::Principal:
    case Ideal::Desc::GeneratedBy:
      return Verdict::holds();
    case Ideal::Desc::SizeBelow: {
      if (ideal.size_below == 1) return Verdict::holds();
      // two sets of size lambda-1 whose union has size lambda
      int lam = ideal.size_below;
      Mask a = (Mask{1} << (lam - 1)) - 1;
      Mask b = a << 1;
      return Verdict::fails({{"kind", "unionClosure"},
                             {"a", nlohmann::json(mask_to_elems(a))},
                             {"b", nlohmann::json(mask_to_elems(b))},
                             {"missingUnion", nlohmann::json(mask_to_elems(a | b))}});
    }
    case Ideal::Desc::Explicit:
      return check_family(ideal.family, g);
  }
  return Verdict::holds();
}

Ideal ideal_normalize(const Ideal& ideal) {
  Verdict v = ideal_validate(ideal);
  if (!v.value) throw IdealValidationError(std::move(v));
  if (!ideal.ground.is_finite()) return ideal;  // countable models stay as-is
  return Ideal::make_principal(ideal.ground, ideal.union_all());
}

Mask ideal_hat(const Ideal& ideal) {
  if (!ideal.ground.is_finite())
    throw BalleanError("FiniteOnly", "ideal_hat is defined on finite grounds only");
  return ideal.ground.full_window_mask() & ~ideal.union_all();
}

int iota(const Ideal& ideal) { return popcount(ideal_hat(ideal)); }

QuotientRing quotient_cosets(const Ideal& ideal) {
  if (!ideal.ground.is_finite())
    throw BalleanError("FiniteOnly", "quotient_cosets needs a finite ground");
  Verdict v = ideal_validate(ideal);
  if (!v.value) throw IdealValidationError(std::move(v));

  int n = ideal.ground.window();
  std::size_t total = std::size_t{1} << n;
  std::vector<Mask> parent(total);
  for (std::size_t i = 0; i < total; ++i) parent[i] = i;
  std::function<Mask(Mask)> find = [&](Mask m) {
    while (parent[m] != m) {
      parent[m] = parent[parent[m]];
      m = parent[m];
    }
    return m;
  };
  auto unite = [&](Mask a, Mask b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep numerically least as root
    parent[b] = a;
  };
  // Y ~ Z iff Y ^ Z in I; single-element flips inside union(I) generate the
  // relation for every valid finite ideal.
  Mask u = ideal.union_all();
  for (Mask m = 0; m < total; ++m)
    for (int x : mask_to_elems(u)) unite(m, m ^ (Mask{1} << x));

  std::vector<Mask> reps;
  for (Mask m = 0; m < total; ++m)
    if (find(m) == m) reps.push_back(m);
  return {ideal, std::move(reps)};
}

}  // namespace bln
