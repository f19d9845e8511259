#include "strdiag/metric.hpp"

#include <tuple>

namespace strdiag {

bool less_than(const NbMetric& a, const NbMetric& b) {
  return std::tie(a.uPaths, a.mPaths, a.muCount, a.nuCount, a.lWeightSum) <
         std::tie(b.uPaths, b.mPaths, b.muCount, b.nuCount, b.lWeightSum);
}

std::string to_string(const NbMetric& m) {
  return "(" + std::to_string(m.uPaths) + ", " + std::to_string(m.mPaths) + ", " +
         std::to_string(m.muCount) + ", " + std::to_string(m.nuCount) + ", " +
         std::to_string(m.lWeightSum) + ")";
}

}  // namespace strdiag
