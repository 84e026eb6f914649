#include "k72/cases.hpp"
#include "k72/chow.hpp"

#include "case_common.hpp"

#include <vector>

namespace k72 {

namespace {

using detail::affine_string;
using detail::probe_affine;

PBundleOverSurface model_at(const SurfaceLattice& z, const DivClass& c1, long long c2) {
  ChernData e;
  e.rank = 2;
  e.c1 = c1;
  e.c2 = c2;
  return PBundleOverSurface(z, e);
}

// Shared skeleton of every branch: the L^2 pairings, the -K class, the
// affine-in-c2 form of -K^3 (formula and engine), and the affine form of
// chi from Riemann-Roch.
struct BranchClaims {
  Rat l2_first;          // L^2.f*h on P2, L^2.f*S on F_e
  Rat l2_second = 0;     // L^2.f*l (F_e only)
  DivClass twist;        // claimed f^*-part of -K = 2L + f^*(...)
  Rat cube_intercept;    // claimed -K^3 = intercept - 8 c
  Rat chi_intercept;     // claimed chi = intercept - c
  std::string var;       // "c" or "c2"
};

void add_branch_items(CaseBuilder& cb, const SurfaceLattice& z, const DivClass& c1,
                      const BranchClaims& claims) {
  const PBundleOverSurface at0 = model_at(z, c1, 0);
  if (z.is_proj_plane()) {
    cb.item("L^2.f*h", claims.l2_first,
            mixed_product_surfacebase(at0, 2, {DivClass(Rat(1))}));
  } else {
    cb.item("L^2.f*S", claims.l2_first,
            mixed_product_surfacebase(at0, 2, {DivClass(Rat(1), Rat(0))}));
    cb.item("L^2.f*l", claims.l2_second,
            mixed_product_surfacebase(at0, 2, {DivClass(Rat(0), Rat(1))}));
  }

  const DivClass twist = -canonical_class(z) - c1;
  cb.item("-K = 2L + f*(.)", div_to_string(z, claims.twist), div_to_string(z, twist));

  // -K^3 over c in [-5, 5], via the closed formula and via full reduction
  // of (2L + f^*(-K_Z - c1))^3 in the Chow ring.
  const auto cube_formula = [&](long long c) {
    ChernData e;
    e.rank = 2;
    e.c1 = c1;
    e.c2 = c;
    return antican_cube_p1bundle_surface(z, e);
  };
  const auto cube_engine = [&](long long c) {
    const PBundleOverSurface m = model_at(z, c1, c);
    return mixed_product_surfacebase(m, m.antican().pow(3));
  };
  const auto formula_fit = probe_affine(-5, 5, cube_formula);
  cb.item("-K^3", affine_string(claims.cube_intercept, -8, claims.var),
          affine_string(formula_fit.intercept, formula_fit.slope, claims.var));
  bool engine_ok = formula_fit.consistent;
  for (long long c = -5; c <= 5; ++c) {
    engine_ok = engine_ok && cube_engine(c) == cube_formula(c);
  }
  cb.item_bool("Chow reduction of (-K)^3 matches the formula, c in [-5,5]", true, engine_ok);

  const auto chi_fit = probe_affine(-5, 5, [&](long long c) {
    ChernData e;
    e.rank = 2;
    e.c1 = c1;
    e.c2 = c;
    return rr_chi_rank2_surface(z, e);
  });
  cb.item("chi(E)", affine_string(claims.chi_intercept, -1, claims.var),
          affine_string(chi_fit.intercept, chi_fit.slope, claims.var));
  cb.assume("h0(E) + h0(E x det(E)* x omega_Z) >= chi(E): Riemann-Roch plus a Serre-duality"
            " transfer without separating h1, taken as input");
}

}  // namespace

CaseReport conic_p2_c1neg2h() {
  const SurfaceLattice z = SurfaceLattice::proj_plane();
  const DivClass c1(Rat(-2));
  CaseBuilder cb("conic.p2.c1neg2h", "P1-bundle on P2, c1 = -2h: -K^3 = 62-8c2");
  BranchClaims claims;
  claims.l2_first = -2;
  claims.twist = DivClass(Rat(5));
  claims.cube_intercept = 62;
  claims.chi_intercept = 1;
  claims.var = "c2";
  add_branch_items(cb, z, c1, claims);
  // The contradiction-driving sign: (2L+5G)(L-G)G = -1 with G = f*h.
  const PBundleOverSurface m = model_at(z, c1, 0);
  const DivClass h(Rat(1));
  const Rat sign = mixed_product_surfacebase(
      m, m.antican() * (m.L() - m.pull(h)) * m.pull(h));
  cb.item("(-K).(L-f*h).f*h", -1, sign);
  cb.item_bool("that product is negative", true, sign < 0);
  return cb.finish();
}

CaseReport conic_f0_c1neg3sigma() {
  const SurfaceLattice z = SurfaceLattice::hirzebruch(0);
  const DivClass c1(Rat(-3), Rat(0));
  CaseBuilder cb("conic.f0.c1neg3sigma", "P1-bundle on F0, c1 = -3S: -K^3 = 48-8c");
  BranchClaims claims;
  claims.l2_first = 0;
  claims.l2_second = -3;
  claims.twist = DivClass(Rat(5), Rat(2));
  claims.cube_intercept = 48;
  claims.chi_intercept = -1;
  claims.var = "c";
  add_branch_items(cb, z, c1, claims);
  const PBundleOverSurface m = model_at(z, c1, 0);
  const DivClass sig(Rat(1), Rat(0));
  const DivClass l(Rat(0), Rat(1));
  const Rat s1 = mixed_product_surfacebase(m, m.antican() * m.L() * m.pull(l));
  cb.item("(-K).L.f*l", -1, s1);
  const Rat s2 = mixed_product_surfacebase(
      m, m.antican() * (m.L() + m.pull(sig) - Rat(2) * m.pull(l)) * m.pull(sig));
  cb.item_bool("(-K).(L+f*S-2f*l).f*S < 0", true, s2 < 0);
  cb.witness("(-K).(L+f*S-2f*l).f*S = " + rat_to_string(s2));
  return cb.finish();
}

CaseReport conic_f0_c1negsigmal() {
  const SurfaceLattice z = SurfaceLattice::hirzebruch(0);
  const DivClass c1(Rat(-1), Rat(-1));
  CaseBuilder cb("conic.f0.c1negsigmal", "P1-bundle on F0, c1 = -S-l: -K^3 = 52-8c");
  BranchClaims claims;
  claims.l2_first = -1;
  claims.l2_second = -1;
  claims.twist = DivClass(Rat(3), Rat(3));
  claims.cube_intercept = 52;
  claims.chi_intercept = 1;
  claims.var = "c";
  add_branch_items(cb, z, c1, claims);
  // (L - f^*(aS+bl)).(-K).f*l = 1-2a and symmetrically 1-2b against f*S,
  // independent of the other parameter.
  const PBundleOverSurface m = model_at(z, c1, 0);
  const DivClass sig(Rat(1), Rat(0));
  const DivClass l(Rat(0), Rat(1));
  bool a_ok = true;
  bool b_ok = true;
  for (long long a = -3; a <= 3; ++a) {
    for (long long b = -3; b <= 3; ++b) {
      const ChowSurfExpr probe = m.L() - m.pull(DivClass(Rat(a), Rat(b)));
      a_ok = a_ok &&
             mixed_product_surfacebase(m, probe * m.antican() * m.pull(l)) == 1 - 2 * a;
      b_ok = b_ok &&
             mixed_product_surfacebase(m, probe * m.antican() * m.pull(sig)) == 1 - 2 * b;
    }
  }
  cb.item_bool("(L-f*(aS+bl)).(-K).f*l = 1-2a", true, a_ok);
  cb.item_bool("(L-f*(aS+bl)).(-K).f*S = 1-2b", true, b_ok);
  return cb.finish();
}

CaseReport conic_f2_c1negsigma() {
  const SurfaceLattice z = SurfaceLattice::hirzebruch(2);
  const DivClass c1(Rat(-1), Rat(0));
  CaseBuilder cb("conic.f2.c1negsigma", "P1-bundle on F2, c1 = -S: -K^3 = 44-8c2");
  BranchClaims claims;
  claims.l2_first = 2;
  claims.l2_second = -1;
  claims.twist = DivClass(Rat(3), Rat(4));
  claims.cube_intercept = 44;
  claims.chi_intercept = 1;
  claims.var = "c2";
  add_branch_items(cb, z, c1, claims);
  const PBundleOverSurface m = model_at(z, c1, 0);
  const DivClass sig(Rat(1), Rat(0));
  const DivClass l(Rat(0), Rat(1));
  cb.item("(-K).L.f*l", 1,
          mixed_product_surfacebase(m, m.antican() * m.L() * m.pull(l)));
  cb.item("(-K).f*S.f*l", 2,
          mixed_product_surfacebase(m, m.antican() * m.pull(sig) * m.pull(l)));
  bool alpha_ok = true;
  bool beta_ok = true;
  for (long long a = -3; a <= 3; ++a) {
    for (long long b = -3; b <= 3; ++b) {
      alpha_ok = alpha_ok &&
                 mixed_product_surfacebase(
                     m, m.antican() * m.pull(DivClass(Rat(a), Rat(b))) * m.pull(l)) == 2 * a;
      beta_ok = beta_ok &&
                mixed_product_surfacebase(
                    m, m.antican() * (m.L() - Rat(b) * m.pull(l)) * m.pull(sig)) == 2 - 2 * b;
    }
  }
  cb.item_bool("(-K).f*(aS+bl).f*l = 2a", true, alpha_ok);
  cb.item_bool("(-K).(L-b f*l).f*S = 2-2b", true, beta_ok);
  return cb.finish();
}

CaseReport conic_f2_c1negl() {
  const SurfaceLattice z = SurfaceLattice::hirzebruch(2);
  const DivClass c1(Rat(0), Rat(-1));
  CaseBuilder cb("conic.f2.c1negl", "P1-bundle on F2, c1 = -l: -K^3 = 48-8c2");
  BranchClaims claims;
  claims.l2_first = -1;
  claims.l2_second = 0;
  claims.twist = DivClass(Rat(2), Rat(5));
  claims.cube_intercept = 48;
  claims.chi_intercept = 1;
  claims.var = "c2";
  add_branch_items(cb, z, c1, claims);
  const PBundleOverSurface m = model_at(z, c1, 0);
  const DivClass sig(Rat(1), Rat(0));
  const DivClass l(Rat(0), Rat(1));
  cb.item("(-K).L.f*S", -1,
          mixed_product_surfacebase(m, m.antican() * m.L() * m.pull(sig)));
  cb.item("(-K).(L-f*S).f*l", 0,
          mixed_product_surfacebase(m, m.antican() * (m.L() - m.pull(sig)) * m.pull(l)));
  cb.assume("the anticanonical class here is 2L+f*(2S+5l); the affine form 48-8c2 is the"
            " cube of this class");
  return cb.finish();
}

CaseReport conic_f2_c1negsigmal() {
  const SurfaceLattice z = SurfaceLattice::hirzebruch(2);
  const DivClass c1(Rat(-1), Rat(-1));
  CaseBuilder cb("conic.f2.c1negsigmal", "P1-bundle on F2, c1 = -S-l: -K^3 = 48-8c2");
  BranchClaims claims;
  claims.l2_first = 1;
  claims.l2_second = -1;
  claims.twist = DivClass(Rat(3), Rat(5));
  claims.cube_intercept = 48;
  claims.chi_intercept = 1;
  claims.var = "c2";
  add_branch_items(cb, z, c1, claims);
  const PBundleOverSurface m = model_at(z, c1, 0);
  const DivClass sig(Rat(1), Rat(0));
  const DivClass l(Rat(0), Rat(1));
  cb.item("(-K).L.f*l", 1,
          mixed_product_surfacebase(m, m.antican() * m.L() * m.pull(l)));
  cb.item("(-K).f*S.f*l", 2,
          mixed_product_surfacebase(m, m.antican() * m.pull(sig) * m.pull(l)));
  bool alpha_ok = true;
  bool beta_ok = true;
  for (long long a = -3; a <= 3; ++a) {
    for (long long b = -3; b <= 3; ++b) {
      alpha_ok = alpha_ok &&
                 mixed_product_surfacebase(
                     m, m.pull(DivClass(Rat(a), Rat(b))) * m.antican() * m.pull(l)) == 2 * a;
      beta_ok = beta_ok &&
                mixed_product_surfacebase(
                    m, (m.L() - Rat(b) * m.pull(l)) * m.antican() * m.pull(sig)) == 1 - 2 * b;
    }
  }
  cb.item_bool("f*(aS+bl).(-K).f*l = 2a", true, alpha_ok);
  cb.item_bool("(L-b f*l).(-K).f*S = 1-2b", true, beta_ok);
  return cb.finish();
}

CaseReport conic_p2_oplus3() {
  const SurfaceLattice z = SurfaceLattice::proj_plane();
  CaseBuilder cb("conic.p2.oplus3", "P(O+O(3)) on P2: -K^3 = 72 = 8 L^3");
  ChernData e;
  e.rank = 2;
  e.c1 = DivClass(Rat(3));
  e.c2 = 0;
  const PBundleOverSurface m(z, e);
  // -K = 2L exactly (the f^*-part vanishes), so -K^3 = 8 L^3 = 8(c1^2-c2).
  cb.item("-K = 2L + f*(.)", "0", div_to_string(z, -canonical_class(z) - e.c1));
  const Rat cube_formula = antican_cube_p1bundle_surface(z, e);
  const Rat cube_engine = mixed_product_surfacebase(m, m.antican().pow(3));
  cb.item("-K^3 (formula)", 72, cube_formula);
  cb.item("-K^3 (Chow reduction)", 72, cube_engine);
  const Rat l3 = mixed_product_surfacebase(m, m.L().pow(3));
  cb.item("L^3 = c1^2 - c2", 9, l3);
  cb.item("8 L^3", 72, 8 * l3);
  cb.witness("genus bookkeeping: g = 37, dim |-K| = 38 at degree 72");
  return cb.finish();
}

std::vector<CaseReport> conic_p1bundle_cases() {
  return {conic_p2_c1neg2h(),     conic_f0_c1neg3sigma(), conic_f0_c1negsigmal(),
          conic_f2_c1negsigma(),  conic_f2_c1negl(),      conic_f2_c1negsigmal(),
          conic_p2_oplus3()};
}

}  // namespace k72
