#include "ballean/sets.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace bln {

int popcount(Mask m) { return std::popcount(m); }

std::vector<int> mask_to_elems(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

Mask elems_to_mask(const std::vector<int>& elems, int width) {
  Mask m = 0;
  for (int e : elems) {
    if (e < 0 || e >= width)
      throw BalleanError("ElementOutOfRange",
                         "element " + std::to_string(e) + " outside ground window " +
                             std::to_string(width));
    m |= Mask{1} << e;
  }
  return m;
}

std::string mask_to_string(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : mask_to_elems(m)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

GroundSet GroundSet::finite(int n) {
  if (n < 1 || n > kMaxWidth)
    throw BalleanError("BadGround", "finite ground size must be in [1," +
                                        std::to_string(kMaxWidth) + "]");
  return {Kind::Finite, n};
}

GroundSet GroundSet::naturals(int horizon) {
  if (horizon < 1 || horizon > kMaxWidth)
    throw BalleanError("BadGround", "horizon must be in [1," +
                                        std::to_string(kMaxWidth) + "]");
  return {Kind::Naturals, horizon};
}

std::string Verdict::status() const {
  if (to_horizon) return "verifiedToHorizon";
  return value ? "holds" : "failsWithWitness";
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["status"] = status();
  j["value"] = value;
  if (to_horizon) j["horizon"] = horizon;
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

bool PointSet::contains(std::uint64_t p, std::uint64_t window_bound) const {
  if (p < window_bound)
    return std::binary_search(window.begin(), window.end(), p);
  return tail ? tail(p) : false;
}

PointSet PointSet::finite(std::vector<std::uint64_t> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return {std::move(pts), nullptr};
}

PointSet PointSet::from_mask(Mask m) {
  std::vector<std::uint64_t> pts;
  for (int e : mask_to_elems(m)) pts.push_back(static_cast<std::uint64_t>(e));
  return {std::move(pts), nullptr};
}

PointSet PointSet::pattern(std::function<bool(std::uint64_t)> pred,
                           std::uint64_t window_bound) {
  std::vector<std::uint64_t> pts;
  for (std::uint64_t p = 0; p < window_bound; ++p)
    if (pred(p)) pts.push_back(p);
  return {std::move(pts), std::move(pred)};
}

}  // namespace bln
