#pragma once

#include "k72/rational.hpp"

#include <string>
#include <vector>

namespace k72 {

enum class SurfaceKind { ProjPlane, Hirzebruch };

// Picard lattice of a minimal rational surface.
//
//   P2:  rank 1, basis {h},        h.h = 1,            K = -3h
//   F_e: rank 2, basis {Sigma, l}, Sigma.Sigma = -e,   K = -2 Sigma - (e+2) l
//                                  Sigma.l = 1, l.l = 0
//
// Sigma is the section of minimal self-intersection, l a fiber. F_0 is
// P1 x P1 (Sigma and l are then the two rulings).
class SurfaceLattice {
 public:
  static SurfaceLattice proj_plane();
  static SurfaceLattice hirzebruch(int e);  // requires e >= 0

  SurfaceKind kind() const { return kind_; }
  bool is_proj_plane() const { return kind_ == SurfaceKind::ProjPlane; }
  int rank() const { return is_proj_plane() ? 1 : 2; }
  int e() const;  // throws std::logic_error on P2

  std::string name() const;  // "P2", "F0", "F1", ...
  std::vector<std::string> basis_labels() const;

  friend bool operator==(const SurfaceLattice&, const SurfaceLattice&) = default;

 private:
  SurfaceLattice(SurfaceKind kind, int e) : kind_(kind), e_(e) {}

  SurfaceKind kind_;
  int e_;
};

// Divisor class written in the basis of the owning lattice: {h} on P2,
// {Sigma, l} on F_e. Coefficients are exact rationals; the lattice queries
// that only make sense for honest divisors require integer coefficients.
struct DivClass {
  std::vector<Rat> coeff;

  DivClass() = default;
  explicit DivClass(Rat a) : coeff{std::move(a)} {}
  DivClass(Rat a, Rat b) : coeff{std::move(a), std::move(b)} {}

  static DivClass zero(const SurfaceLattice& lattice);

  bool is_zero() const;
  bool is_integral() const;

  friend bool operator==(const DivClass&, const DivClass&) = default;
};

DivClass operator+(const DivClass& lhs, const DivClass& rhs);
DivClass operator-(const DivClass& lhs, const DivClass& rhs);
DivClass operator-(const DivClass& value);
DivClass operator*(const Rat& scale, const DivClass& value);

// Intersection number D1.D2. Throws std::invalid_argument if either class
// does not match the lattice rank.
Rat intersect(const SurfaceLattice& lattice, const DivClass& d1, const DivClass& d2);

Rat self_intersection(const SurfaceLattice& lattice, const DivClass& d);

DivClass canonical_class(const SurfaceLattice& lattice);

// Nef cone membership for an integral class: on P2, a >= 0; on F_e,
// a >= 0 and b >= e a (pairing with l and Sigma is nonnegative).
bool is_nef(const SurfaceLattice& lattice, const DivClass& d);

// Class-level effectivity over-approximation used by the enumeration
// arguments: nonnegative coordinates (a >= 0 on P2; a >= 0 and b >= 0 on
// F_e). Every effective divisor class satisfies it.
bool is_effective_class(const SurfaceLattice& lattice, const DivClass& d);

// Arithmetic genus p_a(C) = 1 + (K + C).C / 2.
Rat arithmetic_genus(const SurfaceLattice& lattice, const DivClass& c);

// On F_0 = P1 x P1 the two rulings are exchangeable; swap coordinates.
// Throws std::invalid_argument unless the lattice is F_0.
DivClass swap_rulings_f0(const SurfaceLattice& lattice, const DivClass& d);

// Rendering in basis coordinates, e.g. "3h", "2S+5l", "-S", "0".
std::string div_to_string(const SurfaceLattice& lattice, const DivClass& d);

}  // namespace k72
