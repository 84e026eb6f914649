#pragma once

#include "k72/rational.hpp"

#include <vector>

namespace k72 {

// Weighted projective space P(w0, ..., wn) described by its weight vector.
// The canonical class has degree -sum(w); all section counts are graded
// monomial counts in the weighted polynomial ring.
struct WpsModel {
  std::vector<long long> weights;

  long long weight_sum() const;
  Int weight_product() const;
};

// Normalization: dropping any single weight leaves a vector of gcd 1.
// Throws std::invalid_argument on an empty weight list.
bool is_normalized(const WpsModel& w);

// Number of monomials of degree m: exponent vectors e with sum(e_i w_i) = m.
// Negative m counts nothing.
long long wps_h0(const WpsModel& w, long long m);

// (-K)^3 = (sum w)^3 / (prod w) for a normalized length-4 weight vector.
// Throws std::invalid_argument on wrong length or non-normalized input.
Rat antican_self_degree(const WpsModel& w);

// Independent check of the self-degree: the third finite difference of
// t -> wps_h0(W, t * sum(w)) at t = 1..4, i.e. six times the leading cubic
// coefficient of that counting function. Length 4 required.
Rat antican_degree_oracle(const WpsModel& w);

// dim |-K_X| for a hypersurface X of degree deg_x in P(w):
// wps_h0(sum w - deg_x) - wps_h0(sum w - 2 deg_x) - 1.
// Throws std::invalid_argument unless sum(w) - deg_x > 0.
long long hypersurface_antican_dim(const WpsModel& w, long long deg_x);

}  // namespace k72
