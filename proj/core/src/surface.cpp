#include "k72/surface.hpp"

#include <stdexcept>

namespace k72 {

namespace {

void require_rank(const SurfaceLattice& lattice, const DivClass& d, const char* who) {
  if (static_cast<int>(d.coeff.size()) != lattice.rank()) {
    throw std::invalid_argument(std::string(who) + ": class rank " +
                                std::to_string(d.coeff.size()) + " does not match " +
                                lattice.name());
  }
}

void require_integral(const DivClass& d, const char* who) {
  if (!d.is_integral()) {
    throw std::invalid_argument(std::string(who) + ": query requires integer coefficients");
  }
}

// Appends "c*label" to out with explicit sign handling; skips zero terms.
void append_term(std::string& out, const Rat& c, const std::string& label) {
  if (c == 0) {
    return;
  }
  if (!out.empty() && c > 0) {
    out += "+";
  }
  if (c == -1) {
    out += "-";
  } else if (c != 1) {
    out += rat_to_string(c);
  }
  out += label;
}

}  // namespace

SurfaceLattice SurfaceLattice::proj_plane() {
  return SurfaceLattice(SurfaceKind::ProjPlane, 0);
}

SurfaceLattice SurfaceLattice::hirzebruch(int e) {
  if (e < 0) {
    throw std::invalid_argument("SurfaceLattice::hirzebruch: e must be >= 0");
  }
  return SurfaceLattice(SurfaceKind::Hirzebruch, e);
}

int SurfaceLattice::e() const {
  if (is_proj_plane()) {
    throw std::logic_error("SurfaceLattice::e: P2 has no ruling invariant");
  }
  return e_;
}

std::string SurfaceLattice::name() const {
  return is_proj_plane() ? "P2" : "F" + std::to_string(e_);
}

std::vector<std::string> SurfaceLattice::basis_labels() const {
  if (is_proj_plane()) {
    return {"h"};
  }
  return {"S", "l"};
}

DivClass DivClass::zero(const SurfaceLattice& lattice) {
  DivClass d;
  d.coeff.assign(lattice.rank(), Rat(0));
  return d;
}

bool DivClass::is_zero() const {
  for (const Rat& c : coeff) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

bool DivClass::is_integral() const {
  for (const Rat& c : coeff) {
    if (!rat_is_integer(c)) {
      return false;
    }
  }
  return true;
}

DivClass operator+(const DivClass& lhs, const DivClass& rhs) {
  if (lhs.coeff.size() != rhs.coeff.size()) {
    throw std::invalid_argument("DivClass: adding classes of different rank");
  }
  DivClass out = lhs;
  for (std::size_t i = 0; i < out.coeff.size(); ++i) {
    out.coeff[i] += rhs.coeff[i];
  }
  return out;
}

DivClass operator-(const DivClass& lhs, const DivClass& rhs) { return lhs + (-rhs); }

DivClass operator-(const DivClass& value) {
  DivClass out = value;
  for (Rat& c : out.coeff) {
    c = -c;
  }
  return out;
}

DivClass operator*(const Rat& scale, const DivClass& value) {
  DivClass out = value;
  for (Rat& c : out.coeff) {
    c *= scale;
  }
  return out;
}

Rat intersect(const SurfaceLattice& lattice, const DivClass& d1, const DivClass& d2) {
  require_rank(lattice, d1, "intersect");
  require_rank(lattice, d2, "intersect");
  if (lattice.is_proj_plane()) {
    return d1.coeff[0] * d2.coeff[0];
  }
  // (a S + b l).(a' S + b' l) = -e a a' + a b' + a' b
  const Rat& a = d1.coeff[0];
  const Rat& b = d1.coeff[1];
  const Rat& ap = d2.coeff[0];
  const Rat& bp = d2.coeff[1];
  return -Rat(lattice.e()) * a * ap + a * bp + ap * b;
}

Rat self_intersection(const SurfaceLattice& lattice, const DivClass& d) {
  return intersect(lattice, d, d);
}

DivClass canonical_class(const SurfaceLattice& lattice) {
  if (lattice.is_proj_plane()) {
    return DivClass(Rat(-3));
  }
  return DivClass(Rat(-2), Rat(-(lattice.e() + 2)));
}

bool is_nef(const SurfaceLattice& lattice, const DivClass& d) {
  require_rank(lattice, d, "is_nef");
  require_integral(d, "is_nef");
  if (lattice.is_proj_plane()) {
    return d.coeff[0] >= 0;
  }
  // Pairing with the fiber l gives a >= 0; with the section Sigma, b - e a >= 0.
  return d.coeff[0] >= 0 && d.coeff[1] >= Rat(lattice.e()) * d.coeff[0];
}

bool is_effective_class(const SurfaceLattice& lattice, const DivClass& d) {
  require_rank(lattice, d, "is_effective_class");
  require_integral(d, "is_effective_class");
  for (const Rat& c : d.coeff) {
    if (c < 0) {
      return false;
    }
  }
  return true;
}

Rat arithmetic_genus(const SurfaceLattice& lattice, const DivClass& c) {
  const DivClass k = canonical_class(lattice);
  return 1 + intersect(lattice, k + c, c) / 2;
}

DivClass swap_rulings_f0(const SurfaceLattice& lattice, const DivClass& d) {
  if (lattice.is_proj_plane() || lattice.e() != 0) {
    throw std::invalid_argument("swap_rulings_f0: lattice is not F0");
  }
  require_rank(lattice, d, "swap_rulings_f0");
  return DivClass(d.coeff[1], d.coeff[0]);
}

std::string div_to_string(const SurfaceLattice& lattice, const DivClass& d) {
  require_rank(lattice, d, "div_to_string");
  const std::vector<std::string> labels = lattice.basis_labels();
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    append_term(out, d.coeff[i], labels[i]);
  }
  return out.empty() ? "0" : out;
}

}  // namespace k72
