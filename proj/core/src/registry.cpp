#include "k72/cases.hpp"

namespace k72 {

// One stable row per case, sorted by id. The anchors here are the same
// strings the runners put into their reports; the table is what --list
// prints and what documentation is generated from.
const std::vector<CaseDef>& case_registry() {
  static const std::vector<CaseDef> registry = {
      {"bounds.constants",
       "threshold ledger 40/46/54/64/72; min(54, 4K^2.S) = 36 at K^2.S = 9",
       &upper_bound_constants},
      {"conic.boundchain",
       "(-3K-D)(-4K-D) = 12K^2+7K.D+D^2; composite bound <= 54",
       &conic_discriminant_bound_chain},
      {"conic.f0.c1neg3sigma", "P1-bundle on F0, c1 = -3S: -K^3 = 48-8c",
       &conic_f0_c1neg3sigma},
      {"conic.f0.c1negsigmal", "P1-bundle on F0, c1 = -S-l: -K^3 = 52-8c",
       &conic_f0_c1negsigmal},
      {"conic.f2.c1negl", "P1-bundle on F2, c1 = -l: -K^3 = 48-8c2", &conic_f2_c1negl},
      {"conic.f2.c1negsigma", "P1-bundle on F2, c1 = -S: -K^3 = 44-8c2",
       &conic_f2_c1negsigma},
      {"conic.f2.c1negsigmal", "P1-bundle on F2, c1 = -S-l: -K^3 = 48-8c2",
       &conic_f2_c1negsigmal},
      {"conic.p2.c1neg2h", "P1-bundle on P2, c1 = -2h: -K^3 = 62-8c2", &conic_p2_c1neg2h},
      {"conic.p2.oplus3", "P(O+O(3)) on P2: -K^3 = 72 = 8 L^3", &conic_p2_oplus3},
      {"extremal.table",
       "scroll contraction rows: K'.C = 2-n, deg N = n-4, delta(-K^3) = 2n-2",
       &extremal_table_case},
      {"fe.claims.chi36",
       "F_e grid, chi >= 36: c2' <= -4 up to four exceptions; survivor (4,4,18)",
       +[] { return surface_base_fe_claims(36); }},
      {"fe.claims.chi37",
       "F_e grid, chi >= 37: c2' <= -2, boundary forces a'=-1 / b'=-2, chi' > 0",
       +[] { return surface_base_fe_claims(37); }},
      {"genus.identities", "-K^3 = 2g-2 and dim |-K| = g+1", &genus_identities_case},
      {"index.table",
       "index > 1 table: dims <= 34, hypersurface max 30, P(1,1,1,2) gives 33",
       &fano_index_table},
      {"p2base.cases",
       "rank-2 on P2, chi >= 37: unique O(3)+O(6); twisted c2 < 0 otherwise",
       &surface_base_p2_cases},
      {"p2bundle.enum",
       "P2-bundles on P1: nine candidates, max dim |-K| = 38 only at (6,2)",
       &p2bundle_enumeration},
      {"quadric.bundle", "(-K).B.H = 2(6-d-2r); r >= 0 ceilings 10 and 24 < 35",
       &quadric_bundle_suite},
      {"sublemma54.f0", "max 12K^2+7K.D+D^2 = 48 on F0, argmax (2,2)",
       +[] { return sublemma54(SurfaceLattice::hirzebruch(0)); }},
      {"sublemma54.f2", "max 12K^2+7K.D+D^2 = 48 on F2, argmax (2,4)",
       +[] { return sublemma54(SurfaceLattice::hirzebruch(2)); }},
      {"sublemma54.nefform",
       "-3K-D on F_n: claimed Sigma-coefficient 3-a vs 6-a; a <= 6 either way",
       &sublemma54_nefform},
      {"sublemma54.p2", "max(108-21d+d^2) = 54 on P2 over 3 <= d <= 9",
       +[] { return sublemma54(SurfaceLattice::proj_plane()); }},
      {"wps.anchors", "P(3,1,1,1), P(6,4,1,1): -K^3 = 72, 39 sections, g = 37",
       &wps_anchor_case},
  };
  return registry;
}

}  // namespace k72
