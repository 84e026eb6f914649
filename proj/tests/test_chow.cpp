#include "k72/chow.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

namespace {

using k72::ChernData;
using k72::ChowSurfExpr;
using k72::DivClass;
using k72::PBundleOverCurve;
using k72::PBundleOverSurface;
using k72::Poly2;
using k72::QuadricBundleModel;
using k72::Rat;
using k72::SplitBundleP1;
using k72::SurfaceLattice;

TEST_CASE("two-variable polynomial arithmetic") {
  const Poly2 m = Poly2::first();
  const Poly2 f = Poly2::second();
  const Poly2 sum = m + f;
  CHECK(sum.pow(2) == m * m + Rat(2) * (m * f) + f * f);
  CHECK(sum.pow(0) == Poly2::constant(Rat(1)));
  CHECK((m - m).is_zero());
  CHECK(poly_to_string(Rat(3) * m - Rat(6) * f, "M", "F") == "3M-6F");
  CHECK(poly_to_string(Poly2{}, "M", "F") == "0");
  CHECK(poly_to_string(Rat(2) * m + Rat(3) * f, "G", "Q") == "2G+3Q");
  CHECK(poly_to_string(-m, "M", "F") == "-M");
}

TEST_CASE("degree map over a curve base, rank 3") {
  const PBundleOverCurve p(SplitBundleP1{6, 2, 0});
  CHECK(p.d() == 8);
  CHECK(triple_product_curvebase(p, 3, 0) == 8);  // M^3 = d
  CHECK(triple_product_curvebase(p, 2, 1) == 1);  // M^2 F = 1
  CHECK(triple_product_curvebase(p, 1, 2) == 0);
  CHECK(triple_product_curvebase(p, 0, 3) == 0);
}

TEST_CASE("degree map over a curve base, rank 4") {
  const PBundleOverCurve p(SplitBundleP1{3, 1, 0, 0});
  CHECK(triple_product_curvebase(p, 4, 0) == 4);
  CHECK(triple_product_curvebase(p, 3, 1) == 1);
  CHECK(triple_product_curvebase(p, 2, 2) == 0);
}

TEST_CASE("anticanonical data of P(E) over P1 for rank-3 split E") {
  // -K = 3M + (2-d)F; its cube reduces to 54 independently of d.
  for (long long d1 = 0; d1 <= 6; ++d1)
    for (long long d2 = 0; d2 <= d1; ++d2) {
      const SplitBundleP1 e{d1, d2, 0};
      const auto data = k72::antican_p2bundle_p1(e);
      const Poly2 expect = Rat(3) * Poly2::first() +
                           Rat(2 - e.total_degree()) * Poly2::second();
      CHECK(data.antican == expect);
      const PBundleOverCurve model(e);
      CHECK(curvebase_reduce(model, data.antican.pow(3)) == 54);
    }
  // the (6,2) flagship dimension
  CHECK(k72::antican_p2bundle_p1(SplitBundleP1{6, 2, 0}).dim == 38);
}

TEST_CASE("surface-base degree map: monomials") {
  const SurfaceLattice f2 = SurfaceLattice::hirzebruch(2);
  const ChernData e{2, DivClass{Rat(1), Rat(-1)}, Rat(3)};
  const PBundleOverSurface p(f2, e);
  const DivClass sigma{Rat(1), Rat(0)};
  const DivClass fiber{Rat(0), Rat(1)};

  // L f*D1 f*D2 = D1.D2
  CHECK(mixed_product_surfacebase(p, 1, {sigma, fiber}) == 1);
  CHECK(mixed_product_surfacebase(p, 1, {sigma, sigma}) == -2);
  CHECK(mixed_product_surfacebase(p, 1, {fiber, fiber}) == 0);
  // f*D1 f*D2 f*D3 = 0
  CHECK(mixed_product_surfacebase(p, 0, {sigma, fiber, fiber}) == 0);
  // L^2 f*D = (L f*c1 - f*c2) f*D = c1.D
  CHECK(mixed_product_surfacebase(p, 2, {fiber}) == 1);   // c1.l = 1
  CHECK(mixed_product_surfacebase(p, 2, {sigma}) == -3);  // c1.S = -2-1
  // L^3 = c1^2 - c2
  CHECK(mixed_product_surfacebase(p, 3, {}) ==
        k72::self_intersection(f2, e.c1) - e.c2);
}

TEST_CASE("surface-base L^3 equals c1^2 - c2 across a grid") {
  for (int base_e : {0, 2, 4}) {
    const SurfaceLattice z = SurfaceLattice::hirzebruch(base_e);
    for (long long a = -2; a <= 4; ++a)
      for (long long b = -2; b <= 4; ++b)
        for (long long c = -3; c <= 3; ++c) {
          const ChernData e{2, DivClass{Rat(a), Rat(b)}, Rat(c)};
          const PBundleOverSurface p(z, e);
          CHECK(mixed_product_surfacebase(p, p.L().pow(3), nullptr) ==
                k72::self_intersection(z, e.c1) - e.c2);
        }
  }
}

TEST_CASE("anticanonical cube: Chow reduction against the closed form") {
  // Dual route: the expanded (2L + f*(-K_Z - c1))^3 must reduce to
  // 6 K^2 + 2 c1^2 - 8 c2 for every Chern datum on every base.
  std::vector<SurfaceLattice> bases = {SurfaceLattice::proj_plane(),
                                       SurfaceLattice::hirzebruch(0),
                                       SurfaceLattice::hirzebruch(2)};
  for (const SurfaceLattice& z : bases) {
    for (long long a = -3; a <= 3; ++a)
      for (long long b = -3; b <= 3; ++b)
        for (long long c = -4; c <= 4; ++c) {
          if (z.is_proj_plane() && b != 0) continue;
          const DivClass c1 = z.is_proj_plane() ? DivClass{Rat(a)}
                                                : DivClass{Rat(a), Rat(b)};
          const ChernData e{2, c1, Rat(c)};
          const PBundleOverSurface p(z, e);
          CHECK(mixed_product_surfacebase(p, p.antican().pow(3), nullptr) ==
                k72::antican_cube_p1bundle_surface(z, e));
        }
  }
}

TEST_CASE("reduction is order-independent over a curve base") {
  std::mt19937 rng(20260822);
  std::uniform_int_distribution<long long> coeff(-9, 9);
  std::uniform_int_distribution<long long> deg(0, 6);
  int trials_done = 0;
  while (trials_done < 600) {
    const SplitBundleP1 e{deg(rng), deg(rng), 0};
    const PBundleOverCurve model(e);
    Poly2 expr;
    for (int m_exp = 0; m_exp <= 3; ++m_exp) {
      expr = expr + Poly2::monomial(Rat(coeff(rng)), m_exp, 3 - m_exp);
    }
    const Rat deterministic = curvebase_reduce(model, expr);
    CHECK(curvebase_reduce(model, expr, &rng) == deterministic);
    ++trials_done;
  }
}

TEST_CASE("reduction is order-independent over a surface base") {
  std::mt19937 rng(727272);
  std::uniform_int_distribution<long long> coeff(-5, 5);
  std::uniform_int_distribution<int> base_pick(0, 2);
  int trials_done = 0;
  while (trials_done < 600) {
    const SurfaceLattice z = base_pick(rng) == 0
                                 ? SurfaceLattice::proj_plane()
                                 : SurfaceLattice::hirzebruch(base_pick(rng));
    const DivClass c1 = z.is_proj_plane()
                            ? DivClass{Rat(coeff(rng))}
                            : DivClass{Rat(coeff(rng)), Rat(coeff(rng))};
    const ChernData e{2, c1, Rat(coeff(rng))};
    const PBundleOverSurface p(z, e);
    const DivClass d1 = z.is_proj_plane()
                            ? DivClass{Rat(coeff(rng))}
                            : DivClass{Rat(coeff(rng)), Rat(coeff(rng))};
    const DivClass d2 = z.is_proj_plane()
                            ? DivClass{Rat(coeff(rng))}
                            : DivClass{Rat(coeff(rng)), Rat(coeff(rng))};
    const ChowSurfExpr expr = (p.L() + p.pull(d1)) *
                              (Rat(2) * p.L() - p.pull(c1)) *
                              (p.L() + p.pull(d2));
    const Rat deterministic = mixed_product_surfacebase(p, expr, nullptr);
    CHECK(mixed_product_surfacebase(p, expr, &rng) == deterministic);
    ++trials_done;
  }
}

TEST_CASE("quadric bundle degree map and distinguished classes") {
  const QuadricBundleModel qm(SplitBundleP1{3, 1, 0, 0}, -2);
  CHECK(qm.d() == 4);
  CHECK(quadric_triple(qm, 3, 0) == 2 * 4 + (-2));  // G^3 = 2d + r
  CHECK(quadric_triple(qm, 2, 1) == 2);
  CHECK(quadric_triple(qm, 1, 2) == 0);
  CHECK(quadric_triple(qm, 0, 3) == 0);

  const Poly2 g = QuadricBundleModel::G();
  const Poly2 q = QuadricBundleModel::Q();
  CHECK(qm.antican() == Rat(2) * g + Rat(2 - 4 - (-2)) * q);
  CHECK(qm.H(3) == g + Rat(3) * q);
  CHECK(qm.B(3) == g - Rat(4 + (-2) + 3 - 2) * q);
}

TEST_CASE("quadric product (-K).B.H is independent of alpha") {
  for (long long r = -2; r <= 3; ++r) {
    const QuadricBundleModel qm(SplitBundleP1{2, 1, 1, 0}, r);
    const long long d = 4;
    const Rat expect(2 * (6 - d - 2 * r));
    for (long long alpha = -5; alpha <= 5; ++alpha) {
      const Poly2 product = qm.antican() * qm.B(alpha) * qm.H(alpha);
      CHECK(quadric_triple(qm, product) == expect);
    }
  }
}

TEST_CASE("rank preconditions throw") {
  CHECK_THROWS_AS(PBundleOverCurve(SplitBundleP1{1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(QuadricBundleModel(SplitBundleP1{1, 0, 0}, 0),
                  std::invalid_argument);
  const SurfaceLattice p2 = SurfaceLattice::proj_plane();
  CHECK_THROWS_AS(PBundleOverSurface(p2, ChernData{3, DivClass{Rat(1)}, Rat(0)}),
                  std::invalid_argument);
}

}  // namespace
