#include "k72/wps.hpp"

#include <numeric>
#include <stdexcept>

namespace k72 {

namespace {

void require_weights(const WpsModel& w, const char* who) {
  if (w.weights.empty()) {
    throw std::invalid_argument(std::string(who) + ": empty weight list");
  }
  for (long long wi : w.weights) {
    if (wi <= 0) {
      throw std::invalid_argument(std::string(who) + ": weights must be positive");
    }
  }
}

// Monomials of degree m in variables of the given weights, by recursion on
// the leading variable's exponent. Inputs here are tiny; no memoization.
long long count_monomials(const std::vector<long long>& weights, std::size_t from, long long m) {
  if (m < 0) {
    return 0;
  }
  if (from == weights.size()) {
    return m == 0 ? 1 : 0;
  }
  long long total = 0;
  for (long long rest = m; rest >= 0; rest -= weights[from]) {
    total += count_monomials(weights, from + 1, rest);
  }
  return total;
}

}  // namespace

long long WpsModel::weight_sum() const {
  long long sum = 0;
  for (long long wi : weights) {
    sum += wi;
  }
  return sum;
}

Int WpsModel::weight_product() const {
  Int prod = 1;
  for (long long wi : weights) {
    prod *= wi;
  }
  return prod;
}

bool is_normalized(const WpsModel& w) {
  require_weights(w, "is_normalized");
  for (std::size_t skip = 0; skip < w.weights.size(); ++skip) {
    long long g = 0;
    for (std::size_t i = 0; i < w.weights.size(); ++i) {
      if (i != skip) {
        g = std::gcd(g, w.weights[i]);
      }
    }
    if (g != 1) {
      return false;
    }
  }
  return true;
}

long long wps_h0(const WpsModel& w, long long m) {
  require_weights(w, "wps_h0");
  if (m < 0) {
    return 0;
  }
  return count_monomials(w.weights, 0, m);
}

Rat antican_self_degree(const WpsModel& w) {
  require_weights(w, "antican_self_degree");
  if (w.weights.size() != 4) {
    throw std::invalid_argument("antican_self_degree: need exactly 4 weights");
  }
  if (!is_normalized(w)) {
    throw std::invalid_argument("antican_self_degree: weights must be normalized");
  }
  const Int sum = w.weight_sum();
  return Rat(sum * sum * sum, w.weight_product());
}

Rat antican_degree_oracle(const WpsModel& w) {
  require_weights(w, "antican_degree_oracle");
  if (w.weights.size() != 4) {
    throw std::invalid_argument("antican_degree_oracle: need exactly 4 weights");
  }
  // Third finite difference of the section count of O(t * sum w) at t = 1..4;
  // equals 6 * (leading coefficient) whenever that count is cubic in t.
  const long long s = w.weight_sum();
  const Rat n1 = wps_h0(w, 1 * s);
  const Rat n2 = wps_h0(w, 2 * s);
  const Rat n3 = wps_h0(w, 3 * s);
  const Rat n4 = wps_h0(w, 4 * s);
  return n4 - 3 * n3 + 3 * n2 - n1;
}

long long hypersurface_antican_dim(const WpsModel& w, long long deg_x) {
  require_weights(w, "hypersurface_antican_dim");
  const long long s = w.weight_sum();
  if (s - deg_x <= 0) {
    throw std::invalid_argument("hypersurface_antican_dim: -K_P - X must have positive degree");
  }
  return wps_h0(w, s - deg_x) - wps_h0(w, s - 2 * deg_x) - 1;
}

}  // namespace k72
