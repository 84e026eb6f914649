#include "k72/chern.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace k72 {

namespace {

void require_rank(const ChernData& e, int rank, const char* who) {
  if (e.rank != rank) {
    throw std::invalid_argument(std::string(who) + ": needs rank " + std::to_string(rank) +
                                ", got " + std::to_string(e.rank));
  }
}

}  // namespace

SplitBundleP1::SplitBundleP1(std::initializer_list<long long> degrees)
    : SplitBundleP1(std::vector<long long>(degrees)) {}

SplitBundleP1::SplitBundleP1(std::vector<long long> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) {
    throw std::invalid_argument("SplitBundleP1: empty degree list");
  }
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

long long SplitBundleP1::total_degree() const {
  long long d = 0;
  for (long long di : degrees_) {
    d += di;
  }
  return d;
}

Rat rr_chi_rank2_surface(const SurfaceLattice& z, const ChernData& e) {
  require_rank(e, 2, "rr_chi_rank2_surface");
  const DivClass k = canonical_class(z);
  const Rat c1sq = self_intersection(z, e.c1);
  const Rat kc1 = intersect(z, k, e.c1);
  return (c1sq - 2 * e.c2 - kc1) / 2 + 2;
}

ChernData twist_rank2(const SurfaceLattice& z, const ChernData& e, const DivClass& d) {
  require_rank(e, 2, "twist_rank2");
  ChernData out;
  out.rank = 2;
  out.c1 = e.c1 + Rat(2) * d;
  out.c2 = e.c2 + intersect(z, e.c1, d) + self_intersection(z, d);
  return out;
}

Rat rr_chi_rank2_fe_closed(long long e, long long a, long long b, const Rat& c) {
  return Rat(-e) * a * (a + 1) / 2 + Rat(a) * b + a + b - c + 2;
}

long long h0_split_p1(const SplitBundleP1& e, long long t) {
  long long total = 0;
  for (long long di : e.degrees()) {
    total += std::max<long long>(0, di + t + 1);
  }
  return total;
}

long long h0_sym3_split_p1(long long d1, long long d2, long long shift) {
  // S^3(O(d1)+O(d2)+O) splits into the ten summands O(i d1 + j d2), i+j+k = 3.
  long long total = 0;
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; i + j <= 3; ++j) {
      total += std::max<long long>(0, i * d1 + j * d2 + shift + 1);
    }
  }
  return total;
}

Rat conic_bundle_k3(const SurfaceLattice& z, const ChernData& e) {
  require_rank(e, 3, "conic_bundle_k3");
  const DivClass minus_k = -canonical_class(z);
  return intersect(z, e.c1, minus_k + e.c1) - 2 * e.c2;
}

DivClass discriminant_class(const SurfaceLattice& z, const ChernData& e) {
  require_rank(e, 3, "discriminant_class");
  return Rat(-3) * canonical_class(z) - e.c1;
}

Rat antican_cube_p1bundle_surface(const SurfaceLattice& z, const ChernData& e) {
  require_rank(e, 2, "antican_cube_p1bundle_surface");
  const Rat ksq = self_intersection(z, canonical_class(z));
  const Rat c1sq = self_intersection(z, e.c1);
  return 6 * ksq + 2 * c1sq - 8 * e.c2;
}

}  // namespace k72
