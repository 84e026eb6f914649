#pragma once

#include "k72/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace k72::detail {

// Canonical rendering of intercept + slope * var, e.g. "62-8c2", "1-c",
// "-1-c", "2a", "12", "0". Used for both claimed and recomputed forms so
// that string comparison is comparison of the underlying pairs.
std::string affine_string(const Rat& intercept, const Rat& slope, const std::string& var);

struct AffineFit {
  Rat intercept;
  Rat slope;
  bool consistent = false;  // every sample lies on the fitted line
};

// Fits intercept + slope * x through the first two samples and verifies the
// rest. Needs at least two samples with distinct x.
AffineFit fit_affine(const std::vector<std::pair<Rat, Rat>>& samples);

// Evaluates value(x) for x in [lo, hi] and fits as above.
AffineFit probe_affine(long long lo, long long hi, const std::function<Rat(long long)>& value);

}  // namespace k72::detail
