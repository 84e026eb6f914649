#pragma once

#include "k72/chern.hpp"
#include "k72/report.hpp"
#include "k72/surface.hpp"

#include <utility>
#include <vector>

namespace k72 {

// Genus bookkeeping for a Fano threefold of degree -K^3 = k3:
// k3 = 2g - 2 and dim |-K| = g + 1. Requires even k3.
struct GenusData {
  long long k3 = 0;
  long long g = 0;
  long long dim_antican = 0;

  friend bool operator==(const GenusData&, const GenusData&) = default;
};
GenusData genus_identities(long long k3);

// Numerical row for the contraction of an exceptional scroll S = F_n
// (n in {0,1}) along its ruling C:
//   K_{W'}.C = 2 - n,  deg N_{C/W'} = n - 4,  (-K_{W'}^3) - (-K_W^3) = 2n - 2.
struct ExtremalRayCase {
  int n = 0;
  std::string surface;        // "P1xP1" or "F1"
  std::string normal_bundle;  // split type of N_{C/W'}
  long long k_prime_dot_c = 0;
  long long deg_normal = 0;
  long long k3_delta = 0;

  friend bool operator==(const ExtremalRayCase&, const ExtremalRayCase&) = default;
};
ExtremalRayCase extremal_table(int n);

// Exhaustive maximization of 12K^2 + 7K.D + D^2 over nonzero effective
// integral classes D with p_a(D) >= 1 and -3K - D nef; the bound audited is
// max <= 54. Supported bases: P2, F0, F2.
CaseReport sublemma54(const SurfaceLattice& z);

// The claimed-but-nonstandard nef-coefficient form in the F_n branch of the
// same maximization; a documented discrepancy case (FLAG).
CaseReport sublemma54_nefform();

// P1-bundle branch ledger over P2, F0, F2: one report per normalized c1,
// plus the -K^3 = 72 case of O + O(3) on P2.
CaseReport conic_p2_c1neg2h();
CaseReport conic_f0_c1neg3sigma();
CaseReport conic_f0_c1negsigmal();
CaseReport conic_f2_c1negsigma();
CaseReport conic_f2_c1negl();
CaseReport conic_f2_c1negsigmal();
CaseReport conic_p2_oplus3();
std::vector<CaseReport> conic_p1bundle_cases();

// (-3K - D)(-4K - D) = 12K^2 + 7K.D + D^2 expansion check plus chaining
// with the sublemma maxima to the composite bound <= 54.
CaseReport conic_discriminant_bound_chain();

// P2-bundles over P1: candidate (d1, d2) enumeration, anticanonical
// dimensions, maximum 38 uniquely at (6,2), and the d2 = 0 branch.
CaseReport p2bundle_enumeration();

// Quadric bundle X ~ 2M + rF in P(E) over P1 (rank 4, d4 = 0): the
// alpha-independent product (-K).B.H = 2(6-d-2r) over the given alpha range.
CaseReport quadric_bundle_case(const SplitBundleP1& degrees, long long r,
                               std::pair<long long, long long> alpha_range);

// Fixed 10-tuple panel of quadric_bundle_case instances plus the section
// ceilings (d+4 <= 10, middle bound <= 24) of the r >= 0 contradiction.
CaseReport quadric_bundle_suite();

// Index > 1 families: anticanonical dimensions of the listed weighted
// hypersurfaces and of P(1,1,1,2), all <= 34, maximum hypersurface value 30.
CaseReport fano_index_table();

// Degree-72 weighted projective anchors P(3,1,1,1) and P(6,4,1,1).
CaseReport wps_anchor_case();

// Genus identity spot values and the contraction table as runnable cases.
CaseReport genus_identities_case();
CaseReport extremal_table_case();

// Rank-2 bundles on P2 with chi >= 37: decomposable uniqueness (O(3)+O(6)),
// both indecomposable-parity negativity chains, restriction obstruction.
CaseReport surface_base_p2_cases();

// Rank-2 bundles on F_e: the Claim package at the extremal c2 for
// chi_floor in {36, 37}; 36 carries the four exceptions and the flagged
// H^3 recomputation.
CaseReport surface_base_fe_claims(int chi_floor);

// Ledger of the threshold constants 40/46/54/64/72 and the arithmetic
// relations chaining them.
CaseReport upper_bound_constants();

// Stable registry: id -> (anchor, nullary runner), sorted by id.
struct CaseDef {
  std::string id;
  std::string anchor;
  CaseReport (*run)();
};
const std::vector<CaseDef>& case_registry();

}  // namespace k72
