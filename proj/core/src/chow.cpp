#include "k72/chow.hpp"

#include <algorithm>
#include <stdexcept>

namespace k72 {

namespace {

int checked_degree(int i, int j) {
  if (i < 0 || j < 0) {
    throw std::invalid_argument("Poly2: negative exponent");
  }
  return i + j;
}

}  // namespace

Poly2 Poly2::constant(Rat c) { return monomial(std::move(c), 0, 0); }
Poly2 Poly2::first() { return monomial(1, 1, 0); }
Poly2 Poly2::second() { return monomial(1, 0, 1); }

Poly2 Poly2::monomial(Rat c, int i, int j) {
  checked_degree(i, j);
  Poly2 p;
  p.add_term({i, j}, c);
  return p;
}

void Poly2::add_term(const Key& key, const Rat& coeff) {
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Poly2 Poly2::pow(int n) const {
  if (n < 0) {
    throw std::invalid_argument("Poly2::pow: negative exponent");
  }
  Poly2 out = constant(1);
  for (int k = 0; k < n; ++k) {
    out = out * (*this);
  }
  return out;
}

Poly2 operator+(const Poly2& lhs, const Poly2& rhs) {
  Poly2 out = lhs;
  for (const auto& [key, coeff] : rhs.terms_) {
    out.add_term(key, coeff);
  }
  return out;
}

Poly2 operator-(const Poly2& lhs, const Poly2& rhs) { return lhs + (-rhs); }

Poly2 operator-(const Poly2& value) {
  Poly2 out;
  for (const auto& [key, coeff] : value.terms_) {
    out.terms_.emplace(key, -coeff);
  }
  return out;
}

Poly2 operator*(const Poly2& lhs, const Poly2& rhs) {
  Poly2 out;
  for (const auto& [ka, ca] : lhs.terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
  }
  return out;
}

Poly2 operator*(const Rat& scale, const Poly2& value) {
  Poly2 out;
  if (scale == 0) {
    return out;
  }
  for (const auto& [key, coeff] : value.terms_) {
    out.terms_.emplace(key, scale * coeff);
  }
  return out;
}

std::string poly_to_string(const Poly2& p, const std::string& g1, const std::string& g2) {
  if (p.is_zero()) {
    return "0";
  }
  // Render highest total degree first, then lexicographically in (i, j).
  std::vector<std::pair<Poly2::Key, Rat>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) {
      return da > db;
    }
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [key, coeff] : terms) {
    std::string body;
    auto append_power = [&body](const std::string& g, int n) {
      if (n == 0) {
        return;
      }
      body += g;
      if (n > 1) {
        body += "^" + std::to_string(n);
      }
    };
    append_power(g1, key.first);
    append_power(g2, key.second);
    if (!out.empty() && coeff > 0) {
      out += "+";
    }
    if (body.empty()) {
      out += rat_to_string(coeff);
    } else {
      if (coeff == -1) {
        out += "-";
      } else if (coeff != 1) {
        out += rat_to_string(coeff);
      }
      out += body;
    }
  }
  return out;
}

PBundleOverCurve::PBundleOverCurve(SplitBundleP1 degrees) : degrees_(std::move(degrees)) {
  if (rank() != 3 && rank() != 4) {
    throw std::invalid_argument("PBundleOverCurve: rank must be 3 or 4");
  }
}

Rat triple_product_curvebase(const PBundleOverCurve& p, int m_exp, int f_exp) {
  if (checked_degree(m_exp, f_exp) != p.rank()) {
    throw std::invalid_argument("triple_product_curvebase: monomial degree must equal rank");
  }
  return curvebase_reduce(p, Poly2::monomial(1, m_exp, f_exp));
}

Rat curvebase_reduce(const PBundleOverCurve& p, const Poly2& expr, std::mt19937* rng) {
  const int rank = p.rank();
  for (const auto& [key, coeff] : expr.terms()) {
    if (key.first + key.second != rank) {
      throw std::invalid_argument("curvebase_reduce: expression not homogeneous of degree " +
                                  std::to_string(rank));
    }
  }

  // One rewrite site per step: either kill an F^2 factor or trade one M for
  // d F via M^rank = d M^(rank-1) F. Site order must not affect the result.
  std::map<Poly2::Key, Rat> terms = expr.terms();
  for (;;) {
    std::vector<Poly2::Key> sites;
    for (const auto& [key, coeff] : terms) {
      if (key.second >= 2 || key.first >= rank) {
        sites.push_back(key);
      }
    }
    if (sites.empty()) {
      break;
    }
    Poly2::Key site = sites.front();
    if (rng != nullptr && sites.size() > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
      site = sites[pick(*rng)];
    }
    const Rat coeff = terms.at(site);
    terms.erase(site);
    if (site.second >= 2) {
      continue;  // F^2 = 0
    }
    const Poly2::Key target{site.first - 1, site.second + 1};
    Rat& slot = terms[target];
    slot += coeff * p.d();
    if (slot == 0) {
      terms.erase(target);
    }
  }

  // Homogeneity leaves only M^(rank-1) F, whose degree is 1.
  Rat total = 0;
  for (const auto& [key, coeff] : terms) {
    if (key.first == rank - 1 && key.second == 1) {
      total += coeff;
    } else {
      throw std::logic_error("curvebase_reduce: irreducible term survived");
    }
  }
  return total;
}

AnticanP2BundleData antican_p2bundle_p1(const SplitBundleP1& e) {
  if (e.rank() != 3) {
    throw std::invalid_argument("antican_p2bundle_p1: rank must be 3");
  }
  if (e.degrees().back() != 0) {
    throw std::invalid_argument("antican_p2bundle_p1: normalization d3 = 0 required");
  }
  const long long d = e.total_degree();
  AnticanP2BundleData out;
  out.antican = Rat(3) * Poly2::first() + Rat(2 - d) * Poly2::second();
  out.dim = h0_sym3_split_p1(e.degrees()[0], e.degrees()[1], 2 - d) - 1;
  return out;
}

bool ChowSurfExpr::Graded::is_zero() const {
  return on_unit == 0 && on_point == 0 && (on_div.coeff.empty() || on_div.is_zero());
}

ChowSurfExpr::ChowSurfExpr(SurfaceLattice base) : base_(std::move(base)) {}

bool ChowSurfExpr::is_zero() const { return buckets_.empty(); }

void ChowSurfExpr::add(int l_exp, const Graded& value) {
  if (value.is_zero()) {
    return;
  }
  auto [it, inserted] = buckets_.try_emplace(l_exp, value);
  if (inserted) {
    if (it->second.on_div.coeff.empty()) {
      it->second.on_div = DivClass::zero(base_);
    }
    return;
  }
  Graded& slot = it->second;
  slot.on_unit += value.on_unit;
  slot.on_point += value.on_point;
  if (slot.on_div.coeff.empty()) {
    slot.on_div = DivClass::zero(base_);
  }
  if (!value.on_div.coeff.empty()) {
    slot.on_div = slot.on_div + value.on_div;
  }
  if (slot.is_zero()) {
    buckets_.erase(it);
  }
}

ChowSurfExpr::Graded ChowSurfExpr::multiply_graded(const Graded& lhs, const Graded& rhs) const {
  // Graded product in A(Z); components of degree > 2 vanish on a surface.
  Graded out;
  out.on_unit = lhs.on_unit * rhs.on_unit;
  out.on_div = DivClass::zero(base_);
  if (!lhs.on_div.coeff.empty()) {
    out.on_div = out.on_div + rhs.on_unit * lhs.on_div;
  }
  if (!rhs.on_div.coeff.empty()) {
    out.on_div = out.on_div + lhs.on_unit * rhs.on_div;
  }
  out.on_point = lhs.on_unit * rhs.on_point + rhs.on_unit * lhs.on_point;
  if (!lhs.on_div.coeff.empty() && !rhs.on_div.coeff.empty()) {
    out.on_point += intersect(base_, lhs.on_div, rhs.on_div);
  }
  return out;
}

ChowSurfExpr ChowSurfExpr::pow(int n) const {
  if (n < 0) {
    throw std::invalid_argument("ChowSurfExpr::pow: negative exponent");
  }
  ChowSurfExpr out(base_);
  Graded one;
  one.on_unit = 1;
  out.add(0, one);
  for (int k = 0; k < n; ++k) {
    out = out * (*this);
  }
  return out;
}

ChowSurfExpr operator+(const ChowSurfExpr& lhs, const ChowSurfExpr& rhs) {
  if (!(lhs.base_ == rhs.base_)) {
    throw std::invalid_argument("ChowSurfExpr: mixing different base surfaces");
  }
  ChowSurfExpr out = lhs;
  for (const auto& [l_exp, value] : rhs.buckets_) {
    out.add(l_exp, value);
  }
  return out;
}

ChowSurfExpr operator-(const ChowSurfExpr& lhs, const ChowSurfExpr& rhs) { return lhs + (-rhs); }

ChowSurfExpr operator-(const ChowSurfExpr& value) { return Rat(-1) * value; }

ChowSurfExpr operator*(const ChowSurfExpr& lhs, const ChowSurfExpr& rhs) {
  if (!(lhs.base_ == rhs.base_)) {
    throw std::invalid_argument("ChowSurfExpr: mixing different base surfaces");
  }
  ChowSurfExpr out(lhs.base_);
  for (const auto& [ea, va] : lhs.buckets_) {
    for (const auto& [eb, vb] : rhs.buckets_) {
      out.add(ea + eb, out.multiply_graded(va, vb));
    }
  }
  return out;
}

ChowSurfExpr operator*(const Rat& scale, const ChowSurfExpr& value) {
  ChowSurfExpr out(value.base_);
  if (scale == 0) {
    return out;
  }
  for (const auto& [l_exp, graded] : value.buckets_) {
    ChowSurfExpr::Graded scaled;
    scaled.on_unit = scale * graded.on_unit;
    scaled.on_point = scale * graded.on_point;
    if (!graded.on_div.coeff.empty()) {
      scaled.on_div = scale * graded.on_div;
    }
    out.add(l_exp, scaled);
  }
  return out;
}

PBundleOverSurface::PBundleOverSurface(SurfaceLattice base, ChernData e)
    : base_(std::move(base)), e_(std::move(e)) {
  if (e_.rank != 2) {
    throw std::invalid_argument("PBundleOverSurface: rank must be 2");
  }
  if (static_cast<int>(e_.c1.coeff.size()) != base_.rank()) {
    throw std::invalid_argument("PBundleOverSurface: c1 does not live on the base");
  }
}

ChowSurfExpr PBundleOverSurface::unit(Rat c) const {
  ChowSurfExpr out(base_);
  ChowSurfExpr::Graded g;
  g.on_unit = std::move(c);
  out.add(0, g);
  return out;
}

ChowSurfExpr PBundleOverSurface::L() const {
  ChowSurfExpr out(base_);
  ChowSurfExpr::Graded g;
  g.on_unit = 1;
  out.add(1, g);
  return out;
}

ChowSurfExpr PBundleOverSurface::pull(const DivClass& d) const {
  ChowSurfExpr out(base_);
  ChowSurfExpr::Graded g;
  g.on_div = d;
  out.add(0, g);
  return out;
}

ChowSurfExpr PBundleOverSurface::pull_point(Rat c) const {
  ChowSurfExpr out(base_);
  ChowSurfExpr::Graded g;
  g.on_point = std::move(c);
  out.add(0, g);
  return out;
}

ChowSurfExpr PBundleOverSurface::antican() const {
  const DivClass twist = -canonical_class(base_) - e_.c1;
  return Rat(2) * L() + pull(twist);
}

Rat mixed_product_surfacebase(const PBundleOverSurface& p, int l_exp,
                              const std::vector<DivClass>& pulls) {
  if (l_exp < 0 || l_exp + static_cast<int>(pulls.size()) != 3) {
    throw std::invalid_argument("mixed_product_surfacebase: monomial degree must be 3");
  }
  ChowSurfExpr expr = p.unit(1);
  for (int k = 0; k < l_exp; ++k) {
    expr = expr * p.L();
  }
  for (const DivClass& d : pulls) {
    expr = expr * p.pull(d);
  }
  return mixed_product_surfacebase(p, expr);
}

Rat mixed_product_surfacebase(const PBundleOverSurface& p, const ChowSurfExpr& expr,
                              std::mt19937* rng) {
  if (!(expr.base() == p.base())) {
    throw std::invalid_argument("mixed_product_surfacebase: expression on a different base");
  }
  // Homogeneity in total degree (L-exponent plus base grade) must be 3.
  for (const auto& [l_exp, value] : expr.buckets()) {
    if ((value.on_unit != 0 && l_exp != 3) ||
        (!value.on_div.coeff.empty() && !value.on_div.is_zero() && l_exp != 2) ||
        (value.on_point != 0 && l_exp != 1)) {
      throw std::invalid_argument("mixed_product_surfacebase: expression not of pure degree 3");
    }
  }

  // Rewrite L^k z -> L^(k-1) f^*c1 z - L^(k-2) f^*c2 z, one bucket at a time.
  ChowSurfExpr work = expr;
  const PBundleOverSurface& model = p;
  auto reducible = [](const ChowSurfExpr& w) {
    std::vector<int> sites;
    for (const auto& [l_exp, value] : w.buckets()) {
      if (l_exp >= 2) {
        sites.push_back(l_exp);
      }
    }
    return sites;
  };
  for (;;) {
    const std::vector<int> sites = reducible(work);
    if (sites.empty()) {
      break;
    }
    int site = sites.front();
    if (rng != nullptr && sites.size() > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
      site = sites[pick(*rng)];
    }
    const ChowSurfExpr::Graded bucket = work.buckets().at(site);
    // Rebuild without the chosen bucket, then add its two replacements.
    ChowSurfExpr next(model.base());
    for (const auto& [l_exp, value] : work.buckets()) {
      if (l_exp != site) {
        next.add(l_exp, value);
      }
    }
    ChowSurfExpr factor(model.base());
    factor.add(site - 2, bucket);
    const ChowSurfExpr c1_part =
        factor * model.L() * model.pull(model.bundle().c1);
    const ChowSurfExpr c2_part = factor * model.pull_point(model.bundle().c2);
    work = next + c1_part - c2_part;
  }

  // Degree 3 with L-exponent <= 1 forces L f^*[pt]; everything else
  // integrates to zero.
  Rat total = 0;
  if (auto it = work.buckets().find(1); it != work.buckets().end()) {
    total = it->second.on_point;
  }
  return total;
}

QuadricBundleModel::QuadricBundleModel(SplitBundleP1 degrees, long long r)
    : degrees_(std::move(degrees)), r_(r) {
  if (degrees_.rank() != 4) {
    throw std::invalid_argument("QuadricBundleModel: rank must be 4");
  }
}

Poly2 QuadricBundleModel::antican() const {
  return Rat(2) * G() + Rat(2 - d() - r_) * Q();
}

Poly2 QuadricBundleModel::H(long long alpha) const { return G() + Rat(alpha) * Q(); }

Poly2 QuadricBundleModel::B(long long alpha) const {
  return G() - Rat(d() + r_ + alpha - 2) * Q();
}

Rat quadric_triple(const QuadricBundleModel& qm, int g_exp, int q_exp) {
  if (checked_degree(g_exp, q_exp) != 3) {
    throw std::invalid_argument("quadric_triple: monomial degree must be 3");
  }
  return quadric_triple(qm, Poly2::monomial(1, g_exp, q_exp));
}

Rat quadric_triple(const QuadricBundleModel& qm, const Poly2& expr) {
  Rat total = 0;
  for (const auto& [key, coeff] : expr.terms()) {
    if (key.first + key.second != 3) {
      throw std::invalid_argument("quadric_triple: expression not homogeneous of degree 3");
    }
    // Restriction of the ambient relations: G^3 = 2d+r, G^2 Q = 2, rest 0.
    if (key.first == 3) {
      total += coeff * Rat(2 * qm.d() + qm.r());
    } else if (key.first == 2) {
      total += coeff * 2;
    }
  }
  return total;
}

}  // namespace k72
