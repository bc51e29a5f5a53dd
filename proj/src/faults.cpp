#include "ballean/faults.hpp"

#include <bit>

#include "ballean/maps.hpp"

namespace bln {
namespace {

class FaultyHyper : public ClosedHyperBallean {
 public:
  FaultyHyper(Ideal ideal, HyperFlavor flavor, Fault fault)
      : ClosedHyperBallean(std::move(ideal), flavor), fault_(fault) {}

  HyperBall closed_ball(Mask a, Mask k) const override {
    HyperBall hb = ClosedHyperBallean::closed_ball(a, k);
    switch (fault_) {
      case Fault::ExpPointIdealKeepsBottom: hb.drop_lo = false; break;
      case Fault::ExpIAryAllowsEmpty: hb.drop_empty = false; break;
      case Fault::CartesianDropsEmpty: hb.drop_empty = true; break;
      default: break;
    }
    return hb;
  }

 private:
  Fault fault_;
};

class FaultyBase : public IdealBallean {
 public:
  FaultyBase(Ideal ideal, Flavor flavor, Fault fault)
      : IdealBallean(std::move(ideal), flavor), fault_(fault) {}

  Mask ball_mask(Point x, Mask payload) const override {
    const Mask xm = Mask{1} << x;
    switch (fault_) {
      case Fault::PointIdealDropsCenter: {
        Mask b = IdealBallean::ball_mask(x, payload);
        return (payload & xm) ? (b & ~xm) : b;
      }
      case Fault::IAryAsymmetricBall:
        // keeps only the payload elements above x
        return xm | (payload & ~(xm | (xm - 1)));
      default:
        return IdealBallean::ball_mask(x, payload);
    }
  }

 private:
  Fault fault_;
};

}  // namespace

std::string fault_name(Fault f) {
  switch (f) {
    case Fault::ExpPointIdealKeepsBottom: return "expPointIdealKeepsBottom";
    case Fault::ExpIAryAllowsEmpty: return "expIAryAllowsEmpty";
    case Fault::PointIdealDropsCenter: return "pointIdealDropsCenter";
    case Fault::IAryAsymmetricBall: return "iaryAsymmetricBall";
    case Fault::CartesianDropsEmpty: return "cartesianDropsEmpty";
    case Fault::ClosenessViaUnion: return "closenessViaUnion";
    case Fault::KcubeMinShiftedByOne: return "kcubeMinShiftedByOne";
  }
  return "?";
}

BalleanPtr make_faulty_hyper(Ideal ideal, Fault f) {
  HyperFlavor flavor;
  switch (f) {
    case Fault::ExpPointIdealKeepsBottom: flavor = HyperFlavor::ExpPointIdeal; break;
    case Fault::ExpIAryAllowsEmpty: flavor = HyperFlavor::ExpIAry; break;
    case Fault::CartesianDropsEmpty: flavor = HyperFlavor::Cartesian; break;
    default:
      throw BalleanError("BadFault", "not a hyperballean mutation");
  }
  return std::make_shared<FaultyHyper>(std::move(ideal), flavor, f);
}

BalleanPtr make_faulty_base(Ideal ideal, Fault f) {
  IdealBallean::Flavor flavor;
  switch (f) {
    case Fault::PointIdealDropsCenter: flavor = IdealBallean::Flavor::PointIdeal; break;
    case Fault::IAryAsymmetricBall: flavor = IdealBallean::Flavor::IAry; break;
    default:
      throw BalleanError("BadFault", "not a base ballean mutation");
  }
  return std::make_shared<FaultyBase>(std::move(ideal), flavor, f);
}

bool faulty_close_union(const Ideal& ideal, Mask y, Mask z) {
  return ideal.contains(y | z);
}

Mask kcube_apply_shifted(Mask f) {
  if (f == 0) return 0;
  const int mn = std::countr_zero(f);
  return (Mask{1} << (2 * mn + 2)) | kcube_phi(f);
}

}  // namespace bln
