#pragma once

#include "k72/surface.hpp"

#include <initializer_list>
#include <vector>

namespace k72 {

// Chern data of a vector bundle on a surface base: rank, c1 as a divisor
// class, c2 as an exact rational. (Over a curve base only c1 survives; split
// bundles over P1 are handled by SplitBundleP1 below.)
struct ChernData {
  int rank = 2;
  DivClass c1;
  Rat c2 = 0;
};

// Direct sum of line bundles O(d1) + ... + O(dr) on P1. Degrees are kept
// sorted descending; d denotes the total degree.
class SplitBundleP1 {
 public:
  SplitBundleP1(std::initializer_list<long long> degrees);
  explicit SplitBundleP1(std::vector<long long> degrees);

  const std::vector<long long>& degrees() const { return degrees_; }
  int rank() const { return static_cast<int>(degrees_.size()); }
  long long total_degree() const;  // d

  friend bool operator==(const SplitBundleP1&, const SplitBundleP1&) = default;

 private:
  std::vector<long long> degrees_;
};

// chi(E) = (c1^2 - 2 c2 - K.c1)/2 + 2 for rank-2 E on a rational surface.
// Throws std::invalid_argument unless rank = 2.
Rat rr_chi_rank2_surface(const SurfaceLattice& z, const ChernData& e);

// E -> E(D) on Chern data: c1 -> c1 + 2D, c2 -> c2 + c1.D + D^2.
// Throws std::invalid_argument unless rank = 2.
ChernData twist_rank2(const SurfaceLattice& z, const ChernData& e, const DivClass& d);

// Closed form of rr_chi_rank2_surface on F_e with c1 = a Sigma + b l, c2 = c:
// -e a (a+1)/2 + a b + a + b - c + 2.
Rat rr_chi_rank2_fe_closed(long long e, long long a, long long b, const Rat& c);

// h^0(P1, E(t)) for split E: sum of max(0, d_i + t + 1).
long long h0_split_p1(const SplitBundleP1& e, long long t);

// h^0(P1, S^3(O(d1)+O(d2)+O) (shift)): sum over i+j+k = 3 of
// max(0, i d1 + j d2 + shift + 1).
long long h0_sym3_split_p1(long long d1, long long d2, long long shift);

// For a conic bundle W in P(E) with rank-3 E on Z:
// -K_W^3 = c1.(-K_Z + c1) - 2 c2. Throws unless rank = 3.
Rat conic_bundle_k3(const SurfaceLattice& z, const ChernData& e);

// Discriminant curve class of that conic bundle: -3K_Z - c1.
// Throws unless rank = 3.
DivClass discriminant_class(const SurfaceLattice& z, const ChernData& e);

// For W = P(E) -> Z with rank-2 E: -K_W^3 = 6 K_Z^2 + 2 c1^2 - 8 c2.
// Throws unless rank = 2.
Rat antican_cube_p1bundle_surface(const SurfaceLattice& z, const ChernData& e);

}  // namespace k72
