#pragma once

#include <cstddef>
#include <string>

namespace strdiag {

/// (U-paths, M-paths, #mu, #nu, sum of L-weights), compared lexicographically.
struct NbMetric {
  std::size_t uPaths = 0;
  std::size_t mPaths = 0;
  std::size_t muCount = 0;
  std::size_t nuCount = 0;
  std::size_t lWeightSum = 0;

  bool operator==(const NbMetric&) const = default;
};

/// Strict lexicographic order on the tuple.
bool less_than(const NbMetric& a, const NbMetric& b);

/// "(U, M, mu, nu, L)"
std::string to_string(const NbMetric& m);

}  // namespace strdiag
