#include "k72/cases.hpp"
#include "k72/chow.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace k72 {

namespace {

std::string pair_string(long long d1, long long d2) {
  std::ostringstream out;
  out << "(" << d1 << "," << d2 << ")";
  return out.str();
}

std::string quadric_label(const SplitBundleP1& degrees, long long r) {
  std::ostringstream out;
  out << "(";
  const auto& ds = degrees.degrees();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    out << (i ? "," : "") << ds[i];
  }
  out << ");r=" << r;
  return out.str();
}

}  // namespace

CaseReport p2bundle_enumeration() {
  CaseBuilder cb("p2bundle.enum",
                 "P2-bundles on P1: nine candidates, max dim |-K| = 38 only at (6,2)");

  // Candidate split types O(d1)+O(d2)+O, normalized d1 >= d2 >= 0, with
  // d2 >= 1 and the slope constraints 2 d2 + 2 - d1 >= 0, d2 <= 2.
  struct Candidate {
    long long d1 = 0;
    long long d2 = 0;
    long long dim = 0;
  };
  std::vector<Candidate> candidates;
  for (long long d1 = 0; d1 <= 20; ++d1) {
    for (long long d2 = 1; d2 <= d1; ++d2) {
      if (2 * d2 + 2 - d1 < 0 || d2 > 2) continue;
      const auto data = antican_p2bundle_p1(SplitBundleP1{d1, d2, 0});
      candidates.push_back({d1, d2, data.dim});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return std::pair(x.d1, x.d2) < std::pair(y.d1, y.d2);
  });

  cb.item("number of candidates with d2 >= 1", 9,
          static_cast<long long>(candidates.size()));
  std::string listed;
  for (const Candidate& c : candidates) {
    if (!listed.empty()) listed += ",";
    listed += pair_string(c.d1, c.d2);
  }
  cb.item("candidate list", "(1,1),(2,1),(2,2),(3,1),(3,2),(4,1),(4,2),(5,2),(6,2)", listed);

  const std::vector<std::pair<std::pair<long long, long long>, long long>> dims = {
      {{1, 1}, 29}, {{2, 1}, 29}, {{2, 2}, 30}, {{3, 1}, 30}, {{3, 2}, 31},
      {{4, 1}, 32}, {{4, 2}, 33}, {{5, 2}, 35}, {{6, 2}, 38}};
  for (const auto& [pair, dim] : dims) {
    const auto data = antican_p2bundle_p1(SplitBundleP1{pair.first, pair.second, 0});
    cb.item("dim |-K| at " + pair_string(pair.first, pair.second), dim, data.dim);
  }

  long long max_dim = 0;
  std::vector<std::string> argmax;
  for (const Candidate& c : candidates) {
    if (c.dim > max_dim) {
      max_dim = c.dim;
      argmax.clear();
    }
    if (c.dim == max_dim) argmax.push_back(pair_string(c.d1, c.d2));
  }
  cb.item("maximum dim |-K|", 38, max_dim);
  cb.item("number of maximizers", 1, static_cast<long long>(argmax.size()));
  cb.item("maximizer", "(6,2)", argmax.empty() ? "none" : argmax.front());

  // Degenerate branch d2 = 0: d1 runs over {0, 1, 2} and every dimension
  // collapses to 29.
  std::string degenerate;
  for (long long d1 = 0; d1 <= 2; ++d1) {
    if (!degenerate.empty()) degenerate += ",";
    degenerate += std::to_string(antican_p2bundle_p1(SplitBundleP1{d1, 0, 0}).dim);
  }
  cb.item("d2 = 0 branch dims over d1 in {0,1,2}", "29,29,29", degenerate);

  // The extremal bundle O(6)+O(2)+O: -K = 3M - 6F and (-K)^3 = 54.
  const auto top = antican_p2bundle_p1(SplitBundleP1{6, 2, 0});
  cb.item("-K at (6,2)", "3M-6F", poly_to_string(top.antican, "M", "F"));
  const PBundleOverCurve model(SplitBundleP1{6, 2, 0});
  cb.item("(-K)^3 at (6,2)", 54, curvebase_reduce(model, top.antican.pow(3)));

  cb.witness("dim 38 at (6,2) matches dim = g+1 at g = 37, degree 72");
  cb.assume("candidate domain: normalized split type d1 >= d2 >= d3 = 0 with"
            " 2d2+2-d1 >= 0 and d2 <= 2, taken as input");
  return cb.finish();
}

CaseReport quadric_bundle_case(const SplitBundleP1& degrees, long long r,
                               std::pair<long long, long long> alpha_range) {
  const QuadricBundleModel qm(degrees, r);
  const long long d = qm.d();
  CaseBuilder cb("quadric.bundle:" + quadric_label(degrees, r),
                 "(-K).B.H = 2(6-d-2r) independent of alpha");

  cb.item("G^3", Rat(2 * d + r), quadric_triple(qm, 3, 0));
  cb.item("G^2.Q", 2, quadric_triple(qm, 2, 1));
  const Poly2 expected_antican =
      Rat(2) * Poly2::first() + Rat(2 - d - r) * Poly2::second();
  cb.item_bool("-K = 2G + (2-d-r)Q", true, qm.antican() == expected_antican);

  const Rat claimed_product = 2 * (6 - d - 2 * r);
  bool alpha_independent = true;
  Rat common = quadric_triple(qm, qm.antican() * qm.B(alpha_range.first) * qm.H(alpha_range.first));
  for (long long alpha = alpha_range.first; alpha <= alpha_range.second; ++alpha) {
    const Rat value = quadric_triple(qm, qm.antican() * qm.B(alpha) * qm.H(alpha));
    alpha_independent = alpha_independent && value == common;
  }
  cb.item_bool("product independent of alpha on the given range", true, alpha_independent);
  cb.item("(-K).B.H", claimed_product, common);
  return cb.finish();
}

CaseReport quadric_bundle_suite() {
  CaseBuilder cb("quadric.bundle",
                 "(-K).B.H = 2(6-d-2r); r >= 0 ceilings 10 and 24 < 35");

  struct PanelEntry {
    SplitBundleP1 degrees;
    long long r;
    long long product;  // 2(6-d-2r)
  };
  const std::vector<PanelEntry> panel = {
      {SplitBundleP1{0, 0, 0, 0}, 0, 12},  {SplitBundleP1{0, 0, 0, 0}, 3, 0},
      {SplitBundleP1{1, 0, 0, 0}, 1, 6},   {SplitBundleP1{1, 1, 0, 0}, 2, 0},
      {SplitBundleP1{2, 1, 0, 0}, 0, 6},   {SplitBundleP1{2, 2, 1, 0}, 1, -2},
      {SplitBundleP1{3, 1, 0, 0}, -2, 12}, {SplitBundleP1{3, 2, 1, 0}, 0, 0},
      {SplitBundleP1{4, 2, 0, 0}, -1, 4},  {SplitBundleP1{6, 4, 2, 0}, -3, 0}};

  bool all_pass = true;
  for (const PanelEntry& entry : panel) {
    const CaseReport sub = quadric_bundle_case(entry.degrees, entry.r, {-5, 5});
    all_pass = all_pass && sub.status == CaseStatus::Pass;
    const QuadricBundleModel qm(entry.degrees, entry.r);
    cb.item("(-K).B.H at " + quadric_label(entry.degrees, entry.r), Rat(entry.product),
            quadric_triple(qm, qm.antican() * qm.B(0) * qm.H(0)));
  }
  cb.item_bool("all panel instances pass", true, all_pass);

  // The r >= 0 contradiction domain: d1 >= d2 >= d3 >= d4 = 0, r >= 0,
  // d + r >= 3, d + 2r <= 6 with d = d1+d2+d3. Two section-count ceilings:
  // max(d+4) = 10, and with alpha_max = 2+d1-d-r the substitution
  // d+4+4 alpha_max = 12+4d1-3d-4r stays below the printed 24; both < 35.
  long long max_fiberwise = 0;
  long long max_substituted = 0;
  bool substitution_identity = true;
  for (long long d1 = 0; d1 <= 6; ++d1) {
    for (long long d2 = 0; d2 <= d1; ++d2) {
      for (long long d3 = 0; d3 <= d2; ++d3) {
        const long long d = d1 + d2 + d3;
        for (long long r = 0; d + 2 * r <= 6; ++r) {
          if (d + r < 3) continue;
          const long long alpha_max = 2 + d1 - d - r;
          const long long substituted = d + 4 + 4 * alpha_max;
          substitution_identity =
              substitution_identity && substituted == 12 + 4 * d1 - 3 * d - 4 * r;
          max_fiberwise = std::max(max_fiberwise, d + 4);
          max_substituted = std::max(max_substituted, substituted);
        }
      }
    }
  }
  cb.item("max of d+4 on the r >= 0 domain", 10, max_fiberwise);
  cb.item_bool("d+4+4(2+d1-d-r) = 12+4d1-3d-4r on the domain", true, substitution_identity);
  cb.item("max of 12+4d1-3d-4r on the domain", 18, max_substituted);
  cb.item_bool("that maximum stays within the printed ceiling 24", true, max_substituted <= 24);
  cb.item_bool("both ceilings stay below 35", true, max_fiberwise < 35 && 24 < 35);

  cb.witness("extremal panel value 12 at d = 0, r = 0");
  cb.assume("effectivity ceiling alpha <= 2+d1-d-r for B taken as input");
  cb.assume("surviving numerical domain r >= 0, d+r >= 3, d+2r <= 6 taken as input");
  return cb.finish();
}

CaseReport surface_base_p2_cases() {
  const SurfaceLattice z = SurfaceLattice::proj_plane();
  CaseBuilder cb("p2base.cases",
                 "rank-2 on P2, chi >= 37: unique O(3)+O(6); twisted c2 < 0 otherwise");

  // Decomposable E = O(d) + O(d+m): c1 = 2d+m, c2 = d(d+m), and
  // chi = (2d^2+2dm+m^2+6d+3m)/2 + 2. Scan 0 <= c1 <= 9.
  bool chi_parameterization = true;
  long long solutions = 0;
  std::string solution = "none";
  Rat solution_chi = 0;
  for (long long d = 0; d <= 4; ++d) {
    for (long long m = 0; m <= 3; ++m) {
      const long long c1 = 2 * d + m;
      if (c1 > 9) continue;
      ChernData e;
      e.rank = 2;
      e.c1 = DivClass(Rat(c1));
      e.c2 = d * (d + m);
      const Rat chi = rr_chi_rank2_surface(z, e);
      const Rat closed = Rat(2 * d * d + 2 * d * m + m * m + 6 * d + 3 * m, 2) + 2;
      chi_parameterization = chi_parameterization && chi == closed;
      if (chi >= 37) {
        ++solutions;
        solution = "O(" + std::to_string(d) + ")+O(" + std::to_string(d + m) + ")";
        solution_chi = chi;
      }
    }
  }
  cb.item_bool("chi(O(d)+O(d+m)) = (2d^2+2dm+m^2+6d+3m)/2 + 2", true, chi_parameterization);
  cb.item("decomposable solutions of chi >= 37 with c1 <= 9", 1, solutions);
  cb.item("the unique solution", "O(3)+O(6)", solution);
  cb.item("chi(O(3)+O(6))", 38, solution_chi);

  // chi >= 37 pins c2 under the ceiling 2 c2 <= c1^2 + 3 c1 - 70.
  bool ceiling_ok = true;
  for (long long c1 = 0; c1 <= 9; ++c1) {
    for (long long c2 = -40; c2 <= 40; ++c2) {
      ChernData e;
      e.rank = 2;
      e.c1 = DivClass(Rat(c1));
      e.c2 = c2;
      const bool chi_ok = rr_chi_rank2_surface(z, e) >= 37;
      const bool bound_ok = 2 * c2 <= c1 * c1 + 3 * c1 - 70;
      ceiling_ok = ceiling_ok && chi_ok == bound_ok;
    }
  }
  cb.item_bool("chi >= 37 iff 2c2 <= c1^2+3c1-70", true, ceiling_ok);

  // Indecomposable chains at the extremal c2. Odd c1 = 2m-3 normalizes by
  // E(-m) to c1' = -3h with c2' = m^2 - 35; even c1 = 2m-2 normalizes to
  // c1' = -2h with c2' = m^2 + m - 36. All strictly negative on the ranges.
  const auto twisted_extremal = [&](long long c1, long long m) {
    ChernData e;
    e.rank = 2;
    e.c1 = DivClass(Rat(c1));
    e.c2 = Rat(c1 * c1 + 3 * c1 - 70, 2);  // integral: c1(c1+3) is always even
    return twist_rank2(z, e, DivClass(Rat(-m)));
  };

  bool odd_form = true;
  bool odd_negative = true;
  std::string odd_values;
  for (long long m = 2; m <= 5; ++m) {
    const long long c1 = 2 * m - 3;
    const ChernData tw = twisted_extremal(c1, m);
    odd_form = odd_form && tw.c1 == DivClass(Rat(-3)) && tw.c2 == m * m - 35;
    odd_negative = odd_negative && tw.c2 < 0;
    if (!odd_values.empty()) odd_values += ",";
    odd_values += rat_to_string(tw.c2);
  }
  cb.item_bool("odd c1 = 2m-3: twist by -m gives c1' = -3h, c2' = m^2-35", true, odd_form);
  cb.item("odd-branch extremal c2' over m in [2,5]", "-31,-26,-19,-10", odd_values);
  cb.item_bool("odd-branch extremal c2' all negative", true, odd_negative);

  bool even_form = true;
  bool even_negative = true;
  std::string even_values;
  for (long long m = 1; m <= 5; ++m) {
    const long long c1 = 2 * m - 2;
    const ChernData tw = twisted_extremal(c1, m);
    even_form = even_form && tw.c1 == DivClass(Rat(-2)) && tw.c2 == m * m + m - 36;
    even_negative = even_negative && tw.c2 < 0;
    if (!even_values.empty()) even_values += ",";
    even_values += rat_to_string(tw.c2);
  }
  cb.item_bool("even c1 = 2m-2: twist by -m gives c1' = -2h, c2' = m^2+m-36", true, even_form);
  cb.item("even-branch extremal c2' over m in [1,5]", "-34,-30,-24,-16,-6", even_values);
  cb.item_bool("even-branch extremal c2' all negative", true, even_negative);

  // In normalized form chi is determined by c2' alone.
  bool chi_neg3 = true;
  bool chi_neg2 = true;
  for (long long c2p = -40; c2p <= 10; ++c2p) {
    ChernData n3;
    n3.rank = 2;
    n3.c1 = DivClass(Rat(-3));
    n3.c2 = c2p;
    chi_neg3 = chi_neg3 && rr_chi_rank2_surface(z, n3) == -c2p + 2;
    ChernData n2;
    n2.rank = 2;
    n2.c1 = DivClass(Rat(-2));
    n2.c2 = c2p;
    chi_neg2 = chi_neg2 && rr_chi_rank2_surface(z, n2) == -c2p + 1;
  }
  cb.item_bool("c1' = -3h: chi = -c2'+2", true, chi_neg3);
  cb.item_bool("c1' = -2h: chi = -c2'+1", true, chi_neg2);

  // Restriction obstruction: a section of a normalized bundle vanishing to
  // order k on a degree-r curve needs 2k + r <= 3, so k = 0 for r in {2,3}.
  const auto k_max = [](long long r) {
    long long best = -1;
    for (long long k = 0; 2 * k + r <= 3; ++k) best = k;
    return best;
  };
  cb.item("largest k with 2k+2 <= 3", 0, k_max(2));
  cb.item("largest k with 2k+3 <= 3", 0, k_max(3));

  cb.witness("extremal decomposable point (d,m) = (3,3), c1 = 9, c2 = 18");
  cb.assume("h^0 >= 37 for the bundle under test, so chi >= 37 after the"
            " vanishing of higher cohomology cited as input");
  cb.assume("split-type gap bound |d1-d2| <= 2+Gamma^2 with Gamma^2 = 1 cited as input");
  return cb.finish();
}

CaseReport surface_base_fe_claims(int chi_floor) {
  if (chi_floor != 36 && chi_floor != 37) {
    throw std::invalid_argument("surface_base_fe_claims: chi_floor must be 36 or 37");
  }

  struct GridPoint {
    long long e, a, b;
    Rat c_max;       // largest c2 allowed by chi >= chi_floor
    long long p, q;  // twist D = -p Sigma - q l
    long long ap, bp;
    Rat c2x;  // c2 of the twisted bundle at the extremal c2
    Rat chi_twisted;
  };

  const std::vector<long long> es = {0, 2, 3, 4};
  std::vector<GridPoint> grid;
  bool inversion_ok = true;       // chi at the extremal c2 is exactly the floor
  bool closed_form_ok = true;     // closed form c2' agrees with the twist map
  bool normalized_ok = true;      // a', b' both in {-2, -1}
  bool slope_ok = true;           // c2' moves one-for-one with c2
  for (long long e : es) {
    const SurfaceLattice fe = SurfaceLattice::hirzebruch(static_cast<int>(e));
    for (long long a = 0; a <= 6; ++a) {
      // The floor-37 claims quantify over nef c1 (b >= ea); the floor-36
      // exception list is stated without the nef lower bound, and one of its
      // four tuples (e,a,b) = (4,5,18) indeed has b < ea.
      const long long b_lo = chi_floor == 37 ? std::max<long long>(0, e * a) : 0;
      for (long long b = b_lo; b <= 3 * (e + 2); ++b) {
        GridPoint gp;
        gp.e = e;
        gp.a = a;
        gp.b = b;
        gp.c_max = Rat(-e * a * (a + 1), 2) + a * b + a + b + 2 - chi_floor;
        gp.p = a / 2 + 1;
        gp.q = b / 2 + 1;
        gp.ap = a - 2 * gp.p;
        gp.bp = b - 2 * gp.q;
        gp.c2x = gp.c_max + e * a * gp.p - a * gp.q - b * gp.p - e * gp.p * gp.p +
                 2 * gp.p * gp.q;
        gp.chi_twisted = rr_chi_rank2_fe_closed(e, gp.ap, gp.bp, gp.c2x);

        inversion_ok =
            inversion_ok && rr_chi_rank2_fe_closed(e, a, b, gp.c_max) == chi_floor;
        ChernData data;
        data.rank = 2;
        data.c1 = DivClass(Rat(a), Rat(b));
        data.c2 = gp.c_max;
        const DivClass twist(Rat(-gp.p), Rat(-gp.q));
        const ChernData twisted = twist_rank2(fe, data, twist);
        closed_form_ok = closed_form_ok && twisted.c2 == gp.c2x &&
                         twisted.c1 == DivClass(Rat(gp.ap), Rat(gp.bp));
        normalized_ok = normalized_ok && (gp.ap == -2 || gp.ap == -1) &&
                        (gp.bp == -2 || gp.bp == -1);
        ChernData lower = data;
        lower.c2 = gp.c_max - 5;
        slope_ok = slope_ok && twist_rank2(fe, lower, twist).c2 == gp.c2x - 5;
        grid.push_back(gp);
      }
    }
  }

  const std::string id = chi_floor == 36 ? "fe.claims.chi36" : "fe.claims.chi37";
  const std::string anchor =
      chi_floor == 36
          ? "F_e grid, chi >= 36: c2' <= -4 up to four exceptions; survivor (4,4,18)"
          : "F_e grid, chi >= 37: c2' <= -2, boundary forces a'=-1 / b'=-2, chi' > 0";
  CaseBuilder cb(id, anchor);
  cb.item_bool("chi at the extremal c2 equals the floor", true, inversion_ok);
  cb.item_bool("c2' = c2 + eap - aq - bp - ep^2 + 2pq matches the twist map", true,
               closed_form_ok);
  cb.item_bool("twisted type lands in {-2,-1} x {-2,-1}", true, normalized_ok);
  cb.item_bool("c2' moves one-for-one with c2, so the extremal c2 is the worst case", true,
               slope_ok);

  if (chi_floor == 37) {
    Rat max_c2x = grid.front().c2x;
    bool boundary_a = true;  // c2' = -2 only with a' = -1
    bool boundary_b = true;  // c2' >= -3 only with b' = -2
    bool chi_positive = true;
    std::vector<std::string> attained;
    for (const GridPoint& gp : grid) {
      max_c2x = std::max(max_c2x, gp.c2x);
      if (gp.c2x == -2) {
        boundary_a = boundary_a && gp.ap == -1;
        attained.push_back("(" + std::to_string(gp.e) + "," + std::to_string(gp.a) + "," +
                           std::to_string(gp.b) + ")");
      }
      if (gp.c2x >= -3) boundary_b = boundary_b && gp.bp == -2;
      chi_positive = chi_positive && gp.chi_twisted > 0;
    }
    cb.item("maximum extremal c2' over the grid", -2, max_c2x);
    cb.item_bool("extremal c2' <= -2 everywhere", true, max_c2x <= -2);
    cb.item_bool("c2' = -2 forces a' = -1", true, boundary_a);
    cb.item_bool("c2' >= -3 forces b' = -2", true, boundary_b);
    cb.item_bool("chi of the twisted bundle is positive at the extremal c2", true,
                 chi_positive);
    for (const std::string& point : attained) {
      cb.witness("c2' = -2 attained at (e,a,b) = " + point);
    }
    cb.assume("grid e in {0,2,3,4}, 0 <= a <= 6, max(0,ea) <= b <= 3(e+2) (nef c1),"
              " taken as the surviving domain");
    return cb.finish();
  }

  // chi_floor = 36. The corner (a,b) = (6, 3(e+2)) is excluded from the
  // scan; on F_0 that corner would land at c2' = -2 and break the -4 bound.
  {
    const GridPoint* corner0 = nullptr;
    for (const GridPoint& gp : grid) {
      if (gp.e == 0 && gp.a == 6 && gp.b == 6) corner0 = &gp;
    }
    cb.item("extremal c2' at the excluded F0 corner (6,6)", -2,
            corner0 ? corner0->c2x : Rat(0));
  }

  std::vector<const GridPoint*> exceptions;
  for (const GridPoint& gp : grid) {
    if (gp.a == 6 && gp.b == 3 * (gp.e + 2)) continue;  // excluded corner
    if (gp.c2x > -4) {
      exceptions.push_back(&gp);
    }
  }
  std::string exception_list;
  for (const GridPoint* gp : exceptions) {
    if (!exception_list.empty()) exception_list += ",";
    exception_list += "(" + std::to_string(gp->e) + "," + std::to_string(gp->a) + "," +
                      std::to_string(gp->b) + ")";
  }
  cb.item("exceptions to c2' <= -4 off the corner", "(3,5,15),(4,3,18),(4,4,18),(4,5,18)",
          exception_list);

  // The printed per-exception ceilings.
  const std::vector<std::pair<std::vector<long long>, Rat>> printed = {
      {{3, 5, 15}, -3}, {{4, 3, 18}, -1}, {{4, 4, 18}, -2}, {{4, 5, 18}, -1}};
  bool ceilings_ok = true;
  for (const auto& [key, bound] : printed) {
    const GridPoint* found = nullptr;
    for (const GridPoint& gp : grid) {
      if (gp.e == key[0] && gp.a == key[1] && gp.b == key[2]) found = &gp;
    }
    const Rat value = found ? found->c2x : Rat(100);
    cb.item("extremal c2' at (" + std::to_string(key[0]) + "," + std::to_string(key[1]) +
                "," + std::to_string(key[2]) + ")",
            bound, value);
    ceilings_ok = ceilings_ok && value <= bound;
  }
  cb.item_bool("each exception respects its printed ceiling", true, ceilings_ok);

  // Survivor package at (e,a,b) = (4,4,18): E' of type (-2,-2) with
  // c2' = -2, coming from c2 = 20 and chi = 36; chi(E') = 0.
  const GridPoint* survivor = nullptr;
  for (const GridPoint& gp : grid) {
    if (gp.e == 4 && gp.a == 4 && gp.b == 18) survivor = &gp;
  }
  if (survivor == nullptr) throw std::logic_error("fe grid lost the survivor point");
  cb.item("survivor a'", -2, survivor->ap);
  cb.item("survivor b'", -2, survivor->bp);
  cb.item("survivor c2'", -2, survivor->c2x);
  cb.item("survivor c2", 20, survivor->c_max);
  cb.item("survivor chi", 36, rr_chi_rank2_fe_closed(4, 4, 18, survivor->c_max));
  cb.item("survivor chi after the twist", 0, survivor->chi_twisted);

  // At a' = -2 the closed form collapses to chi = -e - b' - c2'.
  bool collapse_ok = true;
  for (long long e : es) {
    for (long long bp = -2; bp <= -1; ++bp) {
      for (long long c2p = -5; c2p <= 5; ++c2p) {
        collapse_ok =
            collapse_ok && rr_chi_rank2_fe_closed(e, -2, bp, c2p) == -e - bp - c2p;
      }
    }
  }
  cb.item_bool("a' = -2 collapses chi to -e-b'-c2'", true, collapse_ok);

  // The survivor's tautological cube: H^3 = c1^2 - c2 on P(E) over F_4.
  {
    const SurfaceLattice f4 = SurfaceLattice::hirzebruch(4);
    ChernData e;
    e.rank = 2;
    e.c1 = DivClass(Rat(4), Rat(18));
    e.c2 = survivor->c_max;
    const PBundleOverSurface m(f4, e);
    const Rat h3 = mixed_product_surfacebase(m, m.L().pow(3));
    cb.flagged_item("survivor H^3 = c1^2 - c2", Rat(0), h3);
  }

  cb.witness("survivor (e,a,b) = (4,4,18)");
  cb.assume("grid e in {0,2,3,4}, 0 <= a <= 6, 0 <= b <= 3(e+2), with the corner"
            " (6,3(e+2)) excluded, taken as the surviving domain; the nef lower"
            " bound b >= ea is not imposed here, matching the stated exception"
            " (4,5,18) with ea = 20 > 18");
  return cb.finish();
}

}  // namespace k72
