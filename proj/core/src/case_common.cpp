#include "case_common.hpp"

#include <stdexcept>

namespace k72::detail {

std::string affine_string(const Rat& intercept, const Rat& slope, const std::string& var) {
  if (slope == 0) {
    return rat_to_string(intercept);
  }
  std::string out;
  if (intercept != 0) {
    out = rat_to_string(intercept);
  }
  if (!out.empty() && slope > 0) {
    out += "+";
  }
  if (slope == -1) {
    out += "-";
  } else if (slope != 1) {
    out += rat_to_string(slope);
  }
  out += var;
  return out;
}

AffineFit fit_affine(const std::vector<std::pair<Rat, Rat>>& samples) {
  if (samples.size() < 2 || samples[0].first == samples[1].first) {
    throw std::invalid_argument("fit_affine: need two samples with distinct abscissae");
  }
  AffineFit fit;
  fit.slope = (samples[1].second - samples[0].second) / (samples[1].first - samples[0].first);
  fit.intercept = samples[0].second - fit.slope * samples[0].first;
  fit.consistent = true;
  for (const auto& [x, y] : samples) {
    if (fit.intercept + fit.slope * x != y) {
      fit.consistent = false;
    }
  }
  return fit;
}

AffineFit probe_affine(long long lo, long long hi, const std::function<Rat(long long)>& value) {
  std::vector<std::pair<Rat, Rat>> samples;
  for (long long x = lo; x <= hi; ++x) {
    samples.emplace_back(Rat(x), value(x));
  }
  return fit_affine(samples);
}

}  // namespace k72::detail
