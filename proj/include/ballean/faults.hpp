#pragma once

#include "ballean/hyper.hpp"

namespace bln {

// Documented single-point mutations of the shipped formulas. Each one is a
// believable transcription slip; the property suites must flag every one of
// them with a concrete witness.
enum class Fault {
  ExpPointIdealKeepsBottom,  // ball keeps its bottom set instead of excluding it
  ExpIAryAllowsEmpty,        // ball stops isolating the empty set
  PointIdealDropsCenter,     // base ball loses its center when x is in A
  IAryAsymmetricBall,        // base ball only grows upward from x
  CartesianDropsEmpty,       // Cartesian ball silently excludes the zero function
  ClosenessViaUnion,         // union where the symmetric difference belongs
  KcubeMinShiftedByOne,      // the even marker lands next to where it should
};

std::string fault_name(Fault f);

// Hyperballean with the mutated closed ball form. Flavor must match the
// mutation's target.
BalleanPtr make_faulty_hyper(Ideal ideal, Fault f);
// Base ballean with the mutated ball formula.
BalleanPtr make_faulty_base(Ideal ideal, Fault f);
// The broken closeness relation of Fault::ClosenessViaUnion.
bool faulty_close_union(const Ideal& ideal, Mask y, Mask z);
// The broken macrocube embedding of Fault::KcubeMinShiftedByOne.
Mask kcube_apply_shifted(Mask f);

}  // namespace bln
