#include "k72/cases.hpp"
#include "k72/chern.hpp"

#include <stdexcept>
#include <vector>

namespace k72 {

namespace {

// The quantity maximized in the discriminant bound: 12K^2 + 7K.D + D^2.
Rat sublemma_objective(const SurfaceLattice& z, const DivClass& d) {
  const DivClass k = canonical_class(z);
  return 12 * self_intersection(z, k) + 7 * intersect(z, k, d) + self_intersection(z, d);
}

// Feasible set: integral effective nonzero D with p_a(D) >= 1 and -3K - D
// nef. (The zero class satisfies the relaxed constraints vacuously but is
// not the class of a curve, so it is excluded.)
bool sublemma_feasible(const SurfaceLattice& z, const DivClass& d) {
  if (d.is_zero() || !is_effective_class(z, d)) {
    return false;
  }
  if (arithmetic_genus(z, d) < 1) {
    return false;
  }
  const DivClass probe = Rat(-3) * canonical_class(z) - d;
  return is_nef(z, probe);
}

struct SublemmaScan {
  Rat max = 0;
  bool any = false;
  std::vector<DivClass> argmax;
  std::vector<DivClass> domain;
};

// Exhaustive scan; the nef constraint bounds coefficients by those of -3K,
// so scanning the coordinate box of -3K covers the whole feasible set.
SublemmaScan sublemma_scan(const SurfaceLattice& z) {
  SublemmaScan scan;
  const DivClass cap = Rat(-3) * canonical_class(z);
  auto consider = [&](const DivClass& d) {
    if (!sublemma_feasible(z, d)) {
      return;
    }
    scan.domain.push_back(d);
    const Rat value = sublemma_objective(z, d);
    if (!scan.any || value > scan.max) {
      scan.max = value;
      scan.argmax.clear();
      scan.any = true;
    }
    if (value == scan.max) {
      scan.argmax.push_back(d);
    }
  };
  if (z.is_proj_plane()) {
    for (long long a = 0; a <= numerator(cap.coeff[0]); ++a) {
      consider(DivClass(Rat(a)));
    }
  } else {
    // On F_e nef of (x, y) demands x >= 0 and y >= e x; for -3K - D this
    // caps a by 6 and b by the l-coefficient of -3K.
    for (long long a = 0; a <= numerator(cap.coeff[0]); ++a) {
      for (long long b = 0; b <= numerator(cap.coeff[1]); ++b) {
        consider(DivClass(Rat(a), Rat(b)));
      }
    }
  }
  return scan;
}

std::string div_witness(const SurfaceLattice& z, const DivClass& d) {
  return div_to_string(z, d);
}

}  // namespace

CaseReport sublemma54(const SurfaceLattice& z) {
  const bool supported =
      z.is_proj_plane() || (!z.is_proj_plane() && (z.e() == 0 || z.e() == 2));
  if (!supported) {
    throw std::invalid_argument("sublemma54: base must be P2, F0 or F2");
  }

  const std::string id = z.is_proj_plane() ? "sublemma54.p2"
                         : (z.e() == 0)    ? "sublemma54.f0"
                                           : "sublemma54.f2";
  const std::string anchor =
      z.is_proj_plane() ? "max(108-21d+d^2) = 54 on P2 over 3 <= d <= 9"
      : (z.e() == 0)    ? "max 12K^2+7K.D+D^2 = 48 on F0, argmax (2,2)"
                        : "max 12K^2+7K.D+D^2 = 48 on F2, argmax (2,4)";
  CaseBuilder cb(id, anchor);

  const SublemmaScan scan = sublemma_scan(z);
  const Rat claimed_max = z.is_proj_plane() ? 54 : 48;
  cb.item("max of 12K^2+7K.D+D^2", claimed_max, scan.max);
  cb.item_bool("max <= 54", true, scan.any && scan.max <= 54);
  cb.item("argmax count", 1, static_cast<long long>(scan.argmax.size()));
  const std::string claimed_argmax = z.is_proj_plane() ? "3h" : (z.e() == 0 ? "2S+2l" : "2S+4l");
  cb.item("argmax", claimed_argmax,
          scan.argmax.empty() ? "none" : div_witness(z, scan.argmax.front()));

  if (z.is_proj_plane()) {
    // Domain is 3 <= d <= 9 and the objective specializes to 108-21d+d^2.
    bool domain_ok = scan.domain.size() == 7;
    bool form_ok = true;
    for (const DivClass& d : scan.domain) {
      const Rat deg = d.coeff[0];
      domain_ok = domain_ok && deg >= 3 && deg <= 9;
      form_ok = form_ok && sublemma_objective(z, d) == 108 - 21 * deg + deg * deg;
    }
    cb.item_bool("domain is exactly 3 <= d <= 9", true, domain_ok);
    cb.item_bool("objective = 108-21d+d^2 on the domain", true, form_ok);
  } else {
    const long long e = z.e();
    // Printed genus identity (K+D).D = (a-1)(-ea+2b-2)-2 and the factored
    // objective (7-a)(ea-2b+14)-2, both checked pointwise.
    bool genus_form_ok = true;
    bool objective_form_ok = true;
    bool swap_ok = true;
    for (const DivClass& d : scan.domain) {
      const Rat a = d.coeff[0];
      const Rat b = d.coeff[1];
      const DivClass k = canonical_class(z);
      genus_form_ok = genus_form_ok &&
                      intersect(z, k + d, d) == (a - 1) * (-Rat(e) * a + 2 * b - 2) - 2;
      objective_form_ok = objective_form_ok &&
                          sublemma_objective(z, d) == (7 - a) * (Rat(e) * a - 2 * b + 14) - 2;
      if (e == 0) {
        swap_ok = swap_ok &&
                  sublemma_objective(z, swap_rulings_f0(z, d)) == sublemma_objective(z, d);
      }
    }
    cb.item_bool("(K+D).D = (a-1)(-ea+2b-2)-2 on the domain", true, genus_form_ok);
    cb.item_bool("objective = (7-a)(ea-2b+14)-2 on the domain", true, objective_form_ok);
    if (e == 0) {
      cb.item_bool("objective invariant under the F0 ruling swap", true, swap_ok);
    }
  }

  for (const DivClass& d : scan.argmax) {
    cb.witness("argmax D = " + div_witness(z, d));
  }
  cb.witness("feasible classes scanned: " + std::to_string(scan.domain.size()));
  cb.assume("reduced-curve hypothesis relaxed to class-level constraints (effective class,"
            " p_a >= 1, -3K-D nef); the feasible set only grows, so max <= 54 is a fortiori");
  cb.assume("D = 0 excluded: a curve has nonzero class (the zero class would satisfy the"
            " relaxed constraints with objective 12K^2)");
  return cb.finish();
}

CaseReport sublemma54_nefform() {
  CaseBuilder cb("sublemma54.nefform",
                 "-3K-D on F_n: claimed Sigma-coefficient 3-a vs 6-a; a <= 6 either way");
  // With -3K = 6S + (3n+6)l on F_n, subtracting D = aS + bl gives Sigma
  // coefficient 6-a; the claimed form has 3-a there. The l-coefficient
  // 3n+6-b is the same on both sides.
  cb.flagged_item("Sigma-coefficient of -3K-D", "3-a", "6-a");
  cb.item("l-coefficient of -3K-D", "3n+6-b", "3n+6-b");

  bool alpha_bound_ok = true;
  bool chain_ok = true;
  bool chain_cap_ok = true;
  Rat overall_max = 0;
  bool any = false;
  for (long long e : {0LL, 2LL}) {
    const SurfaceLattice z = SurfaceLattice::hirzebruch(static_cast<int>(e));
    const DivClass k = canonical_class(z);
    const DivClass cap = Rat(-3) * k;
    for (long long a = 0; a <= numerator(cap.coeff[0]); ++a) {
      for (long long b = 0; b <= numerator(cap.coeff[1]); ++b) {
        const DivClass d{Rat(a), Rat(b)};
        if (d.is_zero() || !is_effective_class(z, d) || arithmetic_genus(z, d) < 1 ||
            !is_nef(z, cap - d)) {
          continue;
        }
        any = true;
        // Nefness of the correctly-formed -3K-D yields a <= 6 directly.
        alpha_bound_ok = alpha_bound_ok && a <= 6;
        const Rat objective =
            12 * self_intersection(z, k) + 7 * intersect(z, k, d) + self_intersection(z, d);
        // The printed chain: objective = (7-a)(ea-2b+14)-2 <= 11(7-a)-2 <= 53
        // for a >= 2 (the genus constraint forces a >= 2 on these bases).
        chain_ok = chain_ok && a >= 2 && objective <= 11 * (7 - a) - 2;
        chain_cap_ok = chain_cap_ok && 11 * (7 - a) - 2 <= 53;
        if (objective > overall_max) {
          overall_max = objective;
        }
      }
    }
  }
  cb.item_bool("a <= 6 on the feasible set (from the 6-a form)", true, any && alpha_bound_ok);
  cb.item_bool("objective <= 11(7-a)-2 on the feasible set", true, any && chain_ok);
  cb.item_bool("11(7-a)-2 <= 53 for feasible a", true, any && chain_cap_ok);
  cb.item_bool("feasible max <= 53", true, any && overall_max <= 53);
  cb.witness("feasible max over F0 and F2: " + rat_to_string(overall_max));
  cb.assume("the claimed 3-a coefficient is recorded as stated and recomputed as 6-a;"
            " the downstream conclusion a <= 6 survives under the recomputed form");
  cb.assume("bases restricted to F0 and F2 (no (-1)-curves on the base)");
  return cb.finish();
}

CaseReport conic_discriminant_bound_chain() {
  CaseBuilder cb("conic.boundchain",
                 "(-3K-D)(-4K-D) = 12K^2+7K.D+D^2; composite bound <= 54");
  const std::vector<SurfaceLattice> bases = {SurfaceLattice::proj_plane(),
                                             SurfaceLattice::hirzebruch(0),
                                             SurfaceLattice::hirzebruch(2)};
  bool expansion_ok = true;
  for (const SurfaceLattice& z : bases) {
    const DivClass k = canonical_class(z);
    auto check = [&](const DivClass& d) {
      const Rat lhs = intersect(z, Rat(-3) * k - d, Rat(-4) * k - d);
      const Rat rhs =
          12 * self_intersection(z, k) + 7 * intersect(z, k, d) + self_intersection(z, d);
      expansion_ok = expansion_ok && lhs == rhs;
    };
    if (z.is_proj_plane()) {
      for (long long a = -3; a <= 9; ++a) {
        check(DivClass(Rat(a)));
      }
    } else {
      for (long long a = -3; a <= 6; ++a) {
        for (long long b = -3; b <= 12; ++b) {
          check(DivClass(Rat(a), Rat(b)));
        }
      }
    }
  }
  cb.item_bool("(-3K-D)(-4K-D) = 12K^2+7K.D+D^2 on all bases", true, expansion_ok);

  // Boundary D = -3K, i.e. a rank-3 bundle with c1 = 0: the bound value and
  // conic_bundle_k3 both vanish.
  bool boundary_ok = true;
  for (const SurfaceLattice& z : bases) {
    const DivClass k = canonical_class(z);
    ChernData e;
    e.rank = 3;
    e.c1 = DivClass::zero(z);
    e.c2 = 0;
    const DivClass delta = discriminant_class(z, e);
    const Rat bound = intersect(z, Rat(-3) * k - delta, Rat(-4) * k - delta);
    boundary_ok = boundary_ok && bound == 0 && conic_bundle_k3(z, e) == 0 &&
                  delta == Rat(-3) * k;
  }
  cb.item_bool("boundary c1 = 0: bound value and conic -K^3 both 0", true, boundary_ok);

  // Spot values at the sublemma argmaxes.
  const SurfaceLattice p2 = SurfaceLattice::proj_plane();
  const SurfaceLattice f0 = SurfaceLattice::hirzebruch(0);
  const SurfaceLattice f2 = SurfaceLattice::hirzebruch(2);
  cb.item("P2, D = 3h", 54,
          intersect(p2, Rat(-3) * canonical_class(p2) - DivClass(Rat(3)),
                    Rat(-4) * canonical_class(p2) - DivClass(Rat(3))));
  cb.item("F0, D = 2S+2l", 48,
          intersect(f0, Rat(-3) * canonical_class(f0) - DivClass(Rat(2), Rat(2)),
                    Rat(-4) * canonical_class(f0) - DivClass(Rat(2), Rat(2))));
  cb.item("F2, D = 2S+4l", 48,
          intersect(f2, Rat(-3) * canonical_class(f2) - DivClass(Rat(2), Rat(4)),
                    Rat(-4) * canonical_class(f2) - DivClass(Rat(2), Rat(4))));

  // Chain with the sublemma maxima, recomputed directly.
  Rat overall = 0;
  bool per_base_ok = true;
  for (const SurfaceLattice& z : bases) {
    const SublemmaScan scan = sublemma_scan(z);
    per_base_ok = per_base_ok && scan.any && scan.max <= 54;
    if (scan.max > overall) {
      overall = scan.max;
    }
  }
  cb.item_bool("sublemma maxima give composite bound <= 54 on every base", true, per_base_ok);
  cb.item("overall maximum of the bound", 54, overall);
  cb.assume("-K_W^3 <= (-3K-D)(-4K-D) uses nefness of the relevant classes and c2 >= 0:"
            " taken as input");
  cb.assume("p_a(D) >= 1 for the discriminant of a conic bundle here: taken as input");
  return cb.finish();
}

}  // namespace k72
