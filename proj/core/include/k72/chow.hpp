#pragma once

#include "k72/chern.hpp"
#include "k72/surface.hpp"

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace k72 {

// Polynomial with exact rational coefficients in two commuting formal
// generators. Instantiated as (M, F) on projectivized bundles over P1 and as
// (G, Q) on quadric bundles; the degree maps live in the model types below.
class Poly2 {
 public:
  using Key = std::pair<int, int>;  // exponents of (first, second) generator

  Poly2() = default;
  static Poly2 constant(Rat c);
  static Poly2 first();   // the generator (1,0)
  static Poly2 second();  // the generator (0,1)
  static Poly2 monomial(Rat c, int i, int j);

  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly2 pow(int n) const;  // n >= 0

  friend Poly2 operator+(const Poly2& lhs, const Poly2& rhs);
  friend Poly2 operator-(const Poly2& lhs, const Poly2& rhs);
  friend Poly2 operator-(const Poly2& value);
  friend Poly2 operator*(const Poly2& lhs, const Poly2& rhs);
  friend Poly2 operator*(const Rat& scale, const Poly2& value);
  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  void add_term(const Key& key, const Rat& coeff);

  std::map<Key, Rat> terms_;  // zero coefficients are never stored
};

// Rendering with generator names, e.g. "3M-6F" or "2G+3Q"; "0" when empty.
std::string poly_to_string(const Poly2& p, const std::string& g1, const std::string& g2);

// P(E) over P1 for split E of rank 3 or 4, dim = rank. In the Chow ring the
// tautological class M and fiber class F satisfy
//   F^2 = 0,  M^rank = d M^(rank-1) F,  M^(rank-1) F = 1  (degree map)
// with d the total degree of E.
class PBundleOverCurve {
 public:
  explicit PBundleOverCurve(SplitBundleP1 degrees);

  const SplitBundleP1& degrees() const { return degrees_; }
  int rank() const { return degrees_.rank(); }
  long long d() const { return degrees_.total_degree(); }

  static Poly2 M() { return Poly2::first(); }
  static Poly2 F() { return Poly2::second(); }

 private:
  SplitBundleP1 degrees_;
};

// Degree map of a single monomial M^m F^f. Requires m + f = rank.
Rat triple_product_curvebase(const PBundleOverCurve& p, int m_exp, int f_exp);

// Full reduction of a homogeneous polynomial of total degree rank, applying
// one rewrite site at a time. With an RNG the site among all reducible terms
// is chosen uniformly at random; the result is order-independent, which the
// test suite exercises over many random orders.
Rat curvebase_reduce(const PBundleOverCurve& p, const Poly2& expr, std::mt19937* rng = nullptr);

// Anticanonical data of P(E) over P1 for rank-3 E normalized to d3 = 0:
// -K = 3M + (2-d)F and dim |-K| = h^0(S^3 E(2-d)) - 1.
struct AnticanP2BundleData {
  Poly2 antican;
  long long dim = 0;
};
AnticanP2BundleData antican_p2bundle_p1(const SplitBundleP1& e);

class PBundleOverSurface;
class ChowSurfExpr;
Rat mixed_product_surfacebase(const PBundleOverSurface& p, const ChowSurfExpr& expr,
                              std::mt19937* rng);

// Element of the Chow ring of W = P(E) over a surface Z (rank-2 E), written
// as a sum over L-exponents of L^i f^*(z_i) with z_i a graded class on Z:
// a rational multiple of [Z], a divisor class, and a multiple of [pt].
class ChowSurfExpr {
 public:
  struct Graded {
    Rat on_unit = 0;   // coefficient of [Z]
    DivClass on_div;   // divisor part (empty vector means zero)
    Rat on_point = 0;  // coefficient of [pt]

    bool is_zero() const;
  };

  explicit ChowSurfExpr(SurfaceLattice base);

  const SurfaceLattice& base() const { return base_; }
  const std::map<int, Graded>& buckets() const { return buckets_; }
  bool is_zero() const;

  ChowSurfExpr pow(int n) const;

  friend ChowSurfExpr operator+(const ChowSurfExpr& lhs, const ChowSurfExpr& rhs);
  friend ChowSurfExpr operator-(const ChowSurfExpr& lhs, const ChowSurfExpr& rhs);
  friend ChowSurfExpr operator-(const ChowSurfExpr& value);
  friend ChowSurfExpr operator*(const ChowSurfExpr& lhs, const ChowSurfExpr& rhs);
  friend ChowSurfExpr operator*(const Rat& scale, const ChowSurfExpr& value);

 private:
  friend class PBundleOverSurface;
  friend Rat mixed_product_surfacebase(const PBundleOverSurface& p, const ChowSurfExpr& expr,
                                       std::mt19937* rng);

  void add(int l_exp, const Graded& value);
  Graded multiply_graded(const Graded& lhs, const Graded& rhs) const;

  SurfaceLattice base_;
  std::map<int, Graded> buckets_;
};

// W = P(E) over the surface Z for rank-2 E with Chern data (c1, c2). The
// tautological class L satisfies L^2 = L f^*c1 - f^*c2 and the degree map is
// L f^*[pt] = 1, L f^*D1 f^*D2 = D1.D2, f^*(anything) alone = 0.
class PBundleOverSurface {
 public:
  PBundleOverSurface(SurfaceLattice base, ChernData e);  // requires rank 2

  const SurfaceLattice& base() const { return base_; }
  const ChernData& bundle() const { return e_; }

  ChowSurfExpr unit(Rat c) const;             // c f^*[Z]
  ChowSurfExpr L() const;                     // tautological class
  ChowSurfExpr pull(const DivClass& d) const; // f^*D
  ChowSurfExpr pull_point(Rat c) const;       // c f^*[pt]
  ChowSurfExpr antican() const;               // 2L + f^*(-K_Z - c1)

 private:
  SurfaceLattice base_;
  ChernData e_;
};

// Degree map of the monomial L^l_exp f^*D1 ... f^*Dk; requires l_exp + k = 3.
Rat mixed_product_surfacebase(const PBundleOverSurface& p, int l_exp,
                              const std::vector<DivClass>& pulls);

// Full reduction of a homogeneous degree-3 expression; randomized rewrite
// site selection as in curvebase_reduce.
Rat mixed_product_surfacebase(const PBundleOverSurface& p, const ChowSurfExpr& expr,
                              std::mt19937* rng = nullptr);

// Quadric bundle X ~ 2M + rF inside P(E) over P1, E split of rank 4. With
// G = M|_X and Q = F|_X the degree map is
//   G^3 = 2d + r,  G^2 Q = 2,  G Q^2 = 0,  Q^3 = 0,
// obtained by multiplying the ambient relations with [X] = 2M + rF.
class QuadricBundleModel {
 public:
  QuadricBundleModel(SplitBundleP1 degrees, long long r);  // requires rank 4

  const SplitBundleP1& degrees() const { return degrees_; }
  long long d() const { return degrees_.total_degree(); }
  long long r() const { return r_; }

  static Poly2 G() { return Poly2::first(); }
  static Poly2 Q() { return Poly2::second(); }

  Poly2 antican() const;          // 2G + (2-d-r)Q
  Poly2 H(long long alpha) const; // G + alpha Q
  Poly2 B(long long alpha) const; // G - (d+r+alpha-2) Q

 private:
  SplitBundleP1 degrees_;
  long long r_;
};

// Degree map of a single monomial G^g Q^q; requires g + q = 3.
Rat quadric_triple(const QuadricBundleModel& qm, int g_exp, int q_exp);

// Degree map of a homogeneous degree-3 polynomial in (G, Q).
Rat quadric_triple(const QuadricBundleModel& qm, const Poly2& expr);

}  // namespace k72
