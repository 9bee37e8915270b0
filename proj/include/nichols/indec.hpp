#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nichols/rep.hpp"

namespace nichols {

// Point of QP^1 with rational coordinate, or infinity.
struct Eta {
  bool infinite = false;
  Rat value;

  static Eta inf() { return Eta{true, Rat()}; }
  static Eta finite(const Rat& v) { return Eta{false, v}; }
  static Eta parse(const std::string& s);  // "p/q" or "inf"
  std::string to_string() const;

  friend bool operator==(const Eta& a, const Eta& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const Eta& a, const Eta& b);
};

// The standard sample of QP^1 used by the sweeps.
std::vector<Eta> standard_etas();

struct Label {
  enum class Kind { Simple = 0, Proj = 1, SyzPos = 2, SyzNeg = 3, MType = 4, Steinberg = 5 };
  Kind kind = Kind::Simple;
  int n = 0;  // s for the syzygy types, n for MType, 0 otherwise
  int r = 0;
  Eta eta;

  static Label V(int r) { return {Kind::Simple, 0, r & 1, {}}; }
  static Label P(int r) { return {Kind::Proj, 0, r & 1, {}}; }
  static Label Omega(int k, int r);  // k > 0: SyzPos, k < 0: SyzNeg, k = 0: V(r)
  static Label M(int n, int r, const Eta& eta) { return {Kind::MType, n, r & 1, eta}; }
  static Label St(int r) { return {Kind::Steinberg, 0, r & 1, {}}; }

  int dim() const;
  bool is_projective() const { return kind == Kind::Proj || kind == Kind::Steinberg; }
  std::string to_string() const;
  static Label parse(const std::string& s);  // throws InvalidLabel

  friend bool operator==(const Label& a, const Label& b) = default;
  // Sort key (type tag, n/s, r, eta).
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);
};

// Label-level duality: V, P self-dual; O(+s,r) <-> O(-s,r); M(n,r,eta) -> M(n,r+1,eta);
// St(r) -> St(r+1).
Label dual_label(const Label& l);

// Throws InvalidLabel if the label does not exist over the algebra (Steinberg
// needs DK1; over K_m with m != 2 only V and P are classified).
void validate_label(const Label& l, const HopfAlgebra& alg);

// Canonical realization; identical matrices for identical labels.
Module realize(const Label& l, AlgebraPtr alg);

// Labels of the indecomposable summands, sorted. Throws Unclassified on a
// summand that matches no label.
std::vector<Label> identify(const Module& m);
// Label of a module known to be indecomposable.
Label identify_indecomposable(const Module& m);

struct Resolution {
  Module syzygy;
  // stage_multiplicities[j][p]: copies of PIM p at stage j of the minimal
  // projective (k > 0) or injective (k < 0) resolution of V(r).
  std::vector<std::vector<int>> stage_multiplicities;
};
// Omega^k V(r) over K2 by iterated kernels of projective covers (k > 0) or
// cokernels into injective hulls (k < 0). Throws OutOfRange unless 1 <= |k| <= 8.
Resolution resolution(int k, int r);
inline Module syzygy(int k, int r) { return resolution(k, r).syzygy; }

// Injective hull as dual(projective_cover(dual(M))) with the embedding M -> hull.
struct Hull {
  Module injective;
  RatMatrix map;  // M -> injective, injective
};
Hull injective_hull(const Module& m);

bool in_r0(const Module& m);               // DK1: rho(b) == rho(c)
Module restrict_pi(const Module& m);       // DK1 -> K2, throws NotInR0
Module inflate_pi(const Module& m);        // K2 -> DK1

}  // namespace nichols
