#pragma once

#include "ballean/hyper.hpp"

namespace bln {

struct BalleanMap {
  BalleanPtr domain;
  BalleanPtr codomain;
  std::function<Point(Point)> fn;
  std::string name;
};

Verdict is_coarse(const BalleanMap& m);
Verdict is_effectively_proper(const BalleanMap& m);
Verdict is_injective(const BalleanMap& m);
Verdict is_coarse_embedding(const BalleanMap& m);
Verdict is_asymorphism(const BalleanMap& m);
Verdict is_asymorphic_embedding(const BalleanMap& m);
Verdict is_coarse_equivalence(const BalleanMap& m);

// Verifies f(B_X(x,a)) = B_Y(f(x), psi(a)) intersect f(X) over the chains;
// when it holds the map is re-checked to be a coarse embedding. `psi` maps
// domain chain indices to codomain chain indices, bijectively on the chains
// it uses. Throws on a non-injective map.
Verdict check_ball_image_criterion(const BalleanMap& m, const std::vector<int>& psi);

BalleanMap map_identity(BalleanPtr dom, BalleanPtr cod, std::string name = "id");
// Lift to the hyperballeans: exp f (A) = f(A). Finite small models.
BalleanMap map_exp(const BalleanMap& m);
// Restriction of exp f to the non-empty bounded subsets; throws
// UnboundedImage when some bounded set has an unbounded image.
BalleanMap map_flat(const BalleanMap& m);
// x -> X \ {x} into the generic hyperballean of b. Finite models.
BalleanMap map_C(BalleanPtr b);
// A -> X \ A on the non-empty bounded subsets. Finite models.
BalleanMap map_CB(BalleanPtr b);

// The identity-on-sets map between the hyperballeans of the point ideal and
// the I-ary ballean, restricted to the sets containing x, with the radius
// chain rebased to members containing x.
struct JxMaps {
  BalleanMap j_ux;               // exp(X_I)|U_x -> exp(X_I-ary)|U_x
  BalleanMap j_ix;               // restriction to the ideal members containing x
  BalleanPtr cartesian;          // for the largeness check
  std::vector<Point> ux_support;
  int chain_len = 0;
};
JxMaps map_jx(const Ideal& ideal, int x);

// ---- kappa = omega macrocube embeddings -------------------------------------

// f(F) = {2 min F} union {2n+1 : n in F}; f(empty) = empty.
Mask kcube_phi(Mask f);
Mask kcube_apply(Mask f);
bool kcube_image_shape_ok(Mask a);  // exactly one even bit and it is the minimum

using KcubeApplyFn = std::function<Mask(Mask)>;
Verdict check_kcube_image_ball_eq(int horizon);
Verdict check_kcube_image_ball_eq_with(int horizon, const KcubeApplyFn& apply);
Verdict check_kcube_min_segment_eq(int horizon);
Verdict check_kcube_image_shape(int horizon);
Verdict check_kcube_image_shape_with(int horizon, const KcubeApplyFn& apply);
// Theorem-level window checks for the copy of the Cartesian ballean inside
// exp at the sets with minimum x. `window` elements are shifted by x+1.
Verdict check_kcube_i_identity(int x, int window);
Verdict check_kcube_i_cofinality(int x, int window);
Verdict check_kcube_copies_close(int x, int y, int window);
Verdict check_kcube_partition(int window);
Verdict check_kcube_flat_restriction(int x, int window);

}  // namespace bln
