// Acceptance gate: ten checks, one printed line each, exit 0 only if all
// pass. Wherever a check is about mathematics it recomputes independently of
// the case implementations; wherever it is about the case suite itself it
// inspects the produced reports; the command-line contract is exercised
// against the real binary named by the K72_CLI environment variable.

#include "k72/cases.hpp"
#include "k72/chern.hpp"
#include "k72/chow.hpp"
#include "k72/runner.hpp"
#include "k72/surface.hpp"
#include "k72/wps.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using k72::CaseReport;
using k72::CaseStatus;
using k72::ChernData;
using k72::DivClass;
using k72::Rat;
using k72::SplitBundleP1;
using k72::SurfaceLattice;
using k72::WpsModel;

struct Item {
  std::string claimed;
  std::string computed;
  bool found = false;
};

Item find_item(const CaseReport& report, const std::string& label) {
  for (std::size_t i = 0; i < report.claimed.size(); ++i) {
    if (report.claimed[i].label == label) {
      return {report.claimed[i].value, report.computed[i].value, true};
    }
  }
  return {};
}

bool item_is(const CaseReport& report, const std::string& label, const std::string& value) {
  const Item item = find_item(report, label);
  return item.found && item.claimed == value && item.computed == value;
}

// ---- criterion 1: degree-72 anchors ----------------------------------------

bool check_anchors() {
  const WpsModel w3{{3, 1, 1, 1}};
  const WpsModel w64{{6, 4, 1, 1}};
  bool ok = true;
  for (const WpsModel& w : {w3, w64}) {
    ok = ok && k72::antican_self_degree(w) == 72;
    ok = ok && k72::antican_degree_oracle(w) == 72;
    ok = ok && k72::wps_h0(w, w.weight_sum()) == 39;
  }
  const k72::GenusData top = k72::genus_identities(72);
  ok = ok && top.g == 37 && top.dim_antican == 38 && top.dim_antican == top.g + 1;
  ok = ok && 39 - 1 == top.dim_antican;
  return ok;
}

// ---- criterion 2: bundle enumeration over the line -------------------------

bool check_p2bundle_enumeration() {
  const std::map<std::pair<long long, long long>, long long> expected = {
      {{1, 1}, 29}, {{2, 1}, 29}, {{2, 2}, 30}, {{3, 1}, 30}, {{3, 2}, 31},
      {{4, 1}, 32}, {{4, 2}, 33}, {{5, 2}, 35}, {{6, 2}, 38}};

  std::vector<std::pair<long long, long long>> found;
  for (long long d1 = 0; d1 <= 24; ++d1) {
    for (long long d2 = 1; d2 <= d1; ++d2) {
      if (d2 <= 2 && d1 <= 2 * d2 + 2) found.push_back({d1, d2});
    }
  }
  if (found.size() != expected.size()) return false;

  long long max_dim = 0;
  std::vector<std::pair<long long, long long>> argmax;
  for (const auto& pair : found) {
    const auto it = expected.find(pair);
    if (it == expected.end()) return false;
    const long long dim =
        k72::antican_p2bundle_p1(SplitBundleP1{pair.first, pair.second, 0}).dim;
    if (dim != it->second) return false;
    if (dim > max_dim) {
      max_dim = dim;
      argmax.clear();
    }
    if (dim == max_dim) argmax.push_back(pair);
  }
  bool ok = max_dim == 38 && argmax.size() == 1 &&
            argmax.front() == std::pair<long long, long long>{6, 2};
  for (long long d1 = 0; d1 <= 2; ++d1) {
    ok = ok && k72::antican_p2bundle_p1(SplitBundleP1{d1, 0, 0}).dim == 29;
  }
  return ok;
}

// ---- criterion 3: index table ----------------------------------------------

bool check_index_table() {
  struct Row {
    WpsModel ambient;
    long long deg_x;
    long long dim;
  };
  const std::vector<Row> hypersurfaces = {
      {{{1, 1, 2, 3, 2}}, 6, 8},  {{{1, 1, 2, 3, 3}}, 6, 12},
      {{{1, 1, 2, 3, 4}}, 6, 17}, {{{1, 1, 2, 3, 5}}, 6, 23},
      {{{1, 1, 2, 3, 6}}, 6, 30}, {{{1, 1, 1, 2, 2}}, 4, 15},
      {{{1, 1, 1, 2, 3}}, 4, 23}, {{{1, 1, 1, 1, 2}}, 3, 22},
  };
  bool ok = true;
  long long max_hypersurface = 0;
  for (const Row& row : hypersurfaces) {
    const long long dim = k72::hypersurface_antican_dim(row.ambient, row.deg_x);
    ok = ok && dim == row.dim && dim <= 34;
    if (dim > max_hypersurface) max_hypersurface = dim;
  }
  ok = ok && max_hypersurface == 30;
  ok = ok &&
       k72::hypersurface_antican_dim(WpsModel{{1, 1, 2, 3, 6}}, 6) == 30;
  const long long p1112 = k72::wps_h0(WpsModel{{1, 1, 1, 2}}, 5) - 1;
  ok = ok && p1112 == 33 && p1112 <= 34;
  return ok;
}

// ---- criterion 4: sublemma maxima ------------------------------------------

// Independent exhaustive scan of 12K^2 + 7K.D + D^2 over nonzero effective
// integral D with p_a(D) >= 1 and -3K - D nef, using only the lattice
// primitives.
Rat scan_bound_max(const SurfaceLattice& z) {
  const DivClass k = k72::canonical_class(z);
  const Rat k2 = k72::self_intersection(z, k);
  bool any = false;
  Rat best = 0;
  auto consider = [&](const DivClass& d) {
    if (d.is_zero()) return;
    if (!k72::is_effective_class(z, d)) return;
    if (k72::arithmetic_genus(z, d) < 1) return;
    if (!is_nef(z, Rat(-3) * k - d)) return;
    const Rat value =
        Rat(12) * k2 + Rat(7) * intersect(z, k, d) + k72::self_intersection(z, d);
    if (!any || value > best) best = value;
    any = true;
  };
  if (z.is_proj_plane()) {
    for (long long d = 1; d <= 14; ++d) consider(DivClass{Rat(d)});
  } else {
    for (long long a = 0; a <= 14; ++a)
      for (long long b = 0; b <= 14; ++b) consider(DivClass{Rat(a), Rat(b)});
  }
  return any ? best : Rat(-1);
}

bool check_sublemma_maxima() {
  bool ok = scan_bound_max(SurfaceLattice::proj_plane()) == 54;
  ok = ok && scan_bound_max(SurfaceLattice::hirzebruch(0)) == 48;
  ok = ok && scan_bound_max(SurfaceLattice::hirzebruch(2)) == 48;

  for (const char* id : {"sublemma54.p2", "sublemma54.f0", "sublemma54.f2"}) {
    const k72::SuiteReport suite = k72::run(id);
    if (suite.cases.size() != 1) return false;
    const CaseReport& report = suite.cases.front();
    ok = ok && report.status == CaseStatus::Pass && !report.witnesses.empty();
  }
  return ok;
}

// ---- criterion 5: conic branch ledger --------------------------------------

bool check_conic_ledger() {
  struct Branch {
    SurfaceLattice base;
    DivClass c1;
    long long intercept;
  };
  const std::vector<Branch> branches = {
      {SurfaceLattice::proj_plane(), DivClass{Rat(-2)}, 62},
      {SurfaceLattice::hirzebruch(0), DivClass{Rat(-3), Rat(0)}, 48},
      {SurfaceLattice::hirzebruch(0), DivClass{Rat(-1), Rat(-1)}, 52},
      {SurfaceLattice::hirzebruch(2), DivClass{Rat(-1), Rat(0)}, 44},
      {SurfaceLattice::hirzebruch(2), DivClass{Rat(0), Rat(-1)}, 48},
      {SurfaceLattice::hirzebruch(2), DivClass{Rat(-1), Rat(-1)}, 48},
  };
  bool ok = true;
  for (const Branch& branch : branches) {
    for (long long c = -5; c <= 5; ++c) {
      const ChernData e{2, branch.c1, Rat(c)};
      ok = ok && k72::antican_cube_p1bundle_surface(branch.base, e) ==
                     branch.intercept - 8 * c;
    }
  }
  ok = ok && k72::antican_cube_p1bundle_surface(
                 SurfaceLattice::proj_plane(),
                 ChernData{2, DivClass{Rat(3)}, Rat(0)}) == 72;

  for (const CaseReport& report : k72::conic_p1bundle_cases()) {
    ok = ok && report.status == CaseStatus::Pass;
  }
  return ok;
}

// ---- criterion 6: quadric bundle products ----------------------------------

bool check_quadric_products() {
  struct Panel {
    SplitBundleP1 degrees;
    long long r;
  };
  const std::vector<Panel> panel = {
      {{0, 0, 0, 0}, 0},  {{0, 0, 0, 0}, 3}, {{1, 0, 0, 0}, 1},
      {{1, 1, 0, 0}, 2},  {{2, 1, 0, 0}, 0}, {{2, 2, 1, 0}, 1},
      {{3, 1, 0, 0}, -2}, {{3, 2, 1, 0}, 0}, {{4, 2, 0, 0}, -1},
      {{6, 4, 2, 0}, -3},
  };
  bool ok = panel.size() == 10;
  for (const Panel& entry : panel) {
    const k72::QuadricBundleModel qm(entry.degrees, entry.r);
    const Rat expect(2 * (6 - qm.d() - 2 * entry.r));
    for (long long alpha = -5; alpha <= 5; ++alpha) {
      const k72::Poly2 product = qm.antican() * qm.B(alpha) * qm.H(alpha);
      ok = ok && quadric_triple(qm, product) == expect;
    }
  }

  // section ceilings on the r >= 0 domain: d1 >= d2 >= d3 >= d4 = 0,
  // d + 2r <= 6, d + r >= 3
  long long max_fiberwise = 0;
  long long max_substituted = 0;
  for (long long d1 = 0; d1 <= 6; ++d1)
    for (long long d2 = 0; d2 <= d1; ++d2)
      for (long long d3 = 0; d3 <= d2; ++d3)
        for (long long r = 0; r <= 6; ++r) {
          const long long d = d1 + d2 + d3;
          if (d + 2 * r > 6 || d + r < 3) continue;
          if (d + 4 > max_fiberwise) max_fiberwise = d + 4;
          const long long substituted = 12 + 4 * d1 - 3 * d - 4 * r;
          if (d + 4 + 4 * (2 + d1 - d - r) != substituted) return false;
          if (substituted > max_substituted) max_substituted = substituted;
        }
  ok = ok && max_fiberwise == 10 && max_substituted <= 24;
  return ok;
}

// ---- criterion 7: extremal bundle endgame ----------------------------------

bool check_endgame_suite() {
  const CaseReport p2 = k72::surface_base_p2_cases();
  bool ok = p2.status == CaseStatus::Pass;
  ok = ok && item_is(p2, "decomposable solutions of chi >= 37 with c1 <= 9", "1");
  ok = ok && item_is(p2, "the unique solution", "O(3)+O(6)");
  ok = ok && item_is(p2, "chi(O(3)+O(6))", "38");
  ok = ok && item_is(p2, "odd-branch extremal c2' over m in [2,5]", "-31,-26,-19,-10");
  ok = ok && item_is(p2, "even-branch extremal c2' over m in [1,5]", "-34,-30,-24,-16,-6");
  ok = ok && item_is(p2, "odd-branch extremal c2' all negative", "true");
  ok = ok && item_is(p2, "even-branch extremal c2' all negative", "true");

  const CaseReport chi37 = k72::surface_base_fe_claims(37);
  ok = ok && chi37.status == CaseStatus::Pass;
  ok = ok && item_is(chi37, "extremal c2' <= -2 everywhere", "true");
  ok = ok && item_is(chi37, "chi of the twisted bundle is positive at the extremal c2", "true");

  const CaseReport chi36 = k72::surface_base_fe_claims(36);
  // documented discrepancy: FLAG exactly, never FAIL
  ok = ok && chi36.status == CaseStatus::Flag;
  ok = ok && item_is(chi36, "exceptions to c2' <= -4 off the corner",
                     "(3,5,15),(4,3,18),(4,4,18),(4,5,18)");
  ok = ok && item_is(chi36, "survivor c2'", "-2");
  ok = ok && item_is(chi36, "survivor c2", "20");
  ok = ok && item_is(chi36, "survivor chi after the twist", "0");
  const Item h3 = find_item(chi36, "survivor H^3 = c1^2 - c2");
  ok = ok && h3.found && h3.claimed == "0" && h3.computed != h3.claimed;
  return ok;
}

// ---- criterion 8: contraction table ----------------------------------------

bool check_contraction_table() {
  const k72::ExtremalRayCase r0 = k72::extremal_table(0);
  const k72::ExtremalRayCase r1 = k72::extremal_table(1);
  return r0.k_prime_dot_c == 2 && r0.deg_normal == -4 && r0.k3_delta == -2 &&
         r0.surface == "P1xP1" && r1.k_prime_dot_c == 1 &&
         r1.deg_normal == -3 && r1.k3_delta == 0 && r1.surface == "F1";
}

// ---- criterion 9: property grids -------------------------------------------

bool check_property_grids() {
  // closed-form Riemann-Roch against the general formula
  for (int e : {0, 1, 2, 3, 4}) {
    const SurfaceLattice fe = SurfaceLattice::hirzebruch(e);
    for (long long a = -6; a <= 6; ++a)
      for (long long b = -6; b <= 6; ++b)
        for (long long c = -5; c <= 5; ++c) {
          const ChernData data{2, DivClass{Rat(a), Rat(b)}, Rat(c)};
          if (rr_chi_rank2_surface(fe, data) !=
              k72::rr_chi_rank2_fe_closed(e, a, b, Rat(c))) {
            return false;
          }
        }
  }

  // twist round trips
  for (int e : {0, 2}) {
    const SurfaceLattice fe = SurfaceLattice::hirzebruch(e);
    for (long long a = -3; a <= 3; ++a)
      for (long long b = -3; b <= 3; ++b)
        for (long long p = -3; p <= 3; ++p)
          for (long long q = -3; q <= 3; ++q) {
            const ChernData data{2, DivClass{Rat(a), Rat(b)}, Rat(a - q)};
            const DivClass d{Rat(p), Rat(q)};
            const ChernData back = twist_rank2(fe, twist_rank2(fe, data, d), -d);
            if (!(back.c1 == data.c1) || back.c2 != data.c2) return false;
          }
  }

  // weighted monomial counts against the Hilbert series to degree 30
  const std::vector<WpsModel> panel = {
      WpsModel{{1, 1, 1, 1}}, WpsModel{{3, 1, 1, 1}}, WpsModel{{6, 4, 1, 1}},
      WpsModel{{1, 1, 1, 2}}, WpsModel{{1, 1, 2, 3, 6}}};
  for (const WpsModel& w : panel) {
    std::vector<long long> coeffs(31, 0);
    coeffs[0] = 1;
    for (long long weight : w.weights) {
      std::vector<long long> next(coeffs.size(), 0);
      for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m] == 0) continue;
        for (std::size_t n = m; n < coeffs.size(); n += static_cast<std::size_t>(weight)) {
          next[n] += coeffs[m];
        }
      }
      coeffs = next;
    }
    for (long long m = 0; m <= 30; ++m) {
      if (k72::wps_h0(w, m) != coeffs[static_cast<std::size_t>(m)]) return false;
    }
  }

  // reduction order independence, at least 1000 randomized trials
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long long> coeff(-9, 9);
  std::uniform_int_distribution<long long> deg(0, 6);
  std::uniform_int_distribution<int> base_pick(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    const SplitBundleP1 e{deg(rng), deg(rng), 0};
    const k72::PBundleOverCurve model(e);
    k72::Poly2 expr;
    for (int m_exp = 0; m_exp <= 3; ++m_exp) {
      expr = expr + k72::Poly2::monomial(Rat(coeff(rng)), m_exp, 3 - m_exp);
    }
    const Rat deterministic = curvebase_reduce(model, expr);
    if (curvebase_reduce(model, expr, &rng) != deterministic) return false;
  }
  for (int trial = 0; trial < 500; ++trial) {
    const SurfaceLattice z = base_pick(rng) == 0
                                 ? SurfaceLattice::proj_plane()
                                 : SurfaceLattice::hirzebruch(base_pick(rng));
    auto random_div = [&] {
      return z.is_proj_plane() ? DivClass{Rat(coeff(rng))}
                               : DivClass{Rat(coeff(rng)), Rat(coeff(rng))};
    };
    const ChernData e{2, random_div(), Rat(coeff(rng))};
    const k72::PBundleOverSurface p(z, e);
    const k72::ChowSurfExpr expr = (p.L() + p.pull(random_div())) *
                                   (Rat(2) * p.L() - p.pull(random_div())) *
                                   (p.L() + p.pull(random_div()));
    const Rat deterministic = mixed_product_surfacebase(p, expr, nullptr);
    if (mixed_product_surfacebase(p, expr, &rng) != deterministic) return false;
  }
  return true;
}

// ---- criterion 10: command-line contract -----------------------------------

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& binary, const std::string& args) {
  const std::string command = "\"" + binary + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {};
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool check_cli_contract() {
  const char* binary = std::getenv("K72_CLI");
  if (binary == nullptr || std::string(binary).empty()) {
    std::cerr << "K72_CLI is not set; cannot drive the command-line binary\n";
    return false;
  }
  const std::string cli(binary);

  // two consecutive structured runs: same exit code, same content modulo runtime
  const CliResult first = run_cli(cli, "all --format json");
  const CliResult second = run_cli(cli, "all --format json");
  if (first.exit_code != 0 || second.exit_code != 0) return false;
  k72::SuiteReport parsed_first;
  k72::SuiteReport parsed_second;
  try {
    parsed_first = k72::parse_json_report(first.output);
    parsed_second = k72::parse_json_report(second.output);
  } catch (const k72::UsageError&) {
    return false;
  }
  bool ok = parsed_first.cases == parsed_second.cases &&
            parsed_first.summary == parsed_second.summary &&
            parsed_first.version == parsed_second.version;
  ok = ok && parsed_first.cases.size() == 22;
  ok = ok && parsed_first.summary.fail == 0;

  // round trip: re-emitting the parsed report reproduces the bytes
  ok = ok && k72::emit(parsed_first, k72::EmitFormat::Json) == first.output;

  // usage errors exit 64
  ok = ok && run_cli(cli, "nosuchcase").exit_code == 64;
  ok = ok && run_cli(cli, "--no-such-flag").exit_code == 64;

  // --list prints one id<TAB>anchor line per case, without running anything
  const CliResult listing = run_cli(cli, "--list");
  ok = ok && listing.exit_code == 0;
  ok = ok && listing.output == k72::list_cases_text();

  // prefix selection works and a flagged case keeps exit 0 without strictness
  const CliResult prefixed = run_cli(cli, "fe.claims --format json");
  ok = ok && prefixed.exit_code == 0;
  try {
    ok = ok && k72::parse_json_report(prefixed.output).cases.size() == 2;
  } catch (const k72::UsageError&) {
    return false;
  }

  // strict flag handling exits 2 on a flagged case, 0 on a clean one
  ok = ok && run_cli(cli, "fe.claims.chi36 --strict-flags").exit_code == 2;
  ok = ok && run_cli(cli, "wps.anchors --strict-flags").exit_code == 0;

  // exit code 1 is reserved for genuine failures; the shipped suite has
  // none, so that path is pinned at the library level
  k72::SuiteReport failing;
  failing.summary = {0, 0, 1};
  ok = ok && k72::exit_code_for(failing, false) == 1;
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* text;
    bool (*check)();
  };
  const std::vector<Criterion> criteria = {
      {1, "degree-72 anchors: self-degree, oracle, 39 sections, genus 37", check_anchors},
      {2, "bundle enumeration over the line: nine pairs, max 38 at (6,2)", check_p2bundle_enumeration},
      {3, "index table: dims <= 34, hypersurface max 30, P(1,1,1,2) = 33", check_index_table},
      {4, "sublemma maxima: 54 on P2, 48 on F0 and F2, with witnesses", check_sublemma_maxima},
      {5, "conic branch ledger: affine forms match the engine, 72 at O+O(3)", check_conic_ledger},
      {6, "quadric products: (-K).B.H = 2(6-d-2r), ceilings 10 and 24", check_quadric_products},
      {7, "endgame suite: unique O(3)+O(6), parity chains, flagged H^3", check_endgame_suite},
      {8, "contraction table: both rows exact", check_contraction_table},
      {9, "property grids: Riemann-Roch, twists, monomial counts, reduction order", check_property_grids},
      {10, "command-line contract: exit codes, round trip, determinism", check_cli_contract},
  };

  bool all_ok = true;
  for (const Criterion& criterion : criteria) {
    const bool ok = criterion.check();
    all_ok = all_ok && ok;
    std::printf("criterion %2d: %s  %s\n", criterion.number, ok ? "PASS" : "FAIL",
                criterion.text);
  }
  return all_ok ? 0 : 1;
}
