#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/green.hpp"

namespace nichols {

// Value of f: a positive integer or infinity.
struct Bound {
  bool infinite = false;
  int value = 1;

  static Bound inf() { return {true, 0}; }
  static Bound of(int v);  // throws OutOfRange unless v >= 1
  static Bound parse(const std::string& s);
  std::string to_string() const;
  // M_k lies below the bound iff bound > k.
  bool exceeds(int k) const { return infinite || value > k; }

  friend bool operator==(const Bound& a, const Bound& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b);
};

// A tensor ideal of Rep(K2) (or Rep(DK1) with the Steinberg projectives adjoined).
// Proper ideals are f: QP^1 -> Z_+ u {inf}, stored as a default plus a finite
// support where f differs from it.
struct IdealSpec {
  bool proper = true;
  Bound default_bound;
  std::map<Eta, Bound> support;

  static IdealSpec improper() { return {false, {}, {}}; }
  static IdealSpec projective() { return {}; }
  // Drops support entries equal to the default.
  static IdealSpec proper_from(Bound dflt, const std::map<Eta, Bound>& f);

  Bound f(const Eta& e) const;
  bool contains(const Label& l) const;
  friend bool operator==(const IdealSpec& a, const IdealSpec& b) = default;
  std::string to_string() const;
};

IdealSpec ideal_closure(const std::vector<Label>& generators);
// Throws NegativeCoefficient if x has a negative coefficient.
bool ideal_contains(const IdealSpec& spec, const GreenElement& x);
// Inclusion of ideals: every member of a is a member of b.
bool ideal_subset(const IdealSpec& a, const IdealSpec& b);

// A label in exactly one of a, b (nullopt if a == b).
std::optional<Label> distinguishing_label(const IdealSpec& a, const IdealSpec& b);
// For a Simple or Syz label l, a label w with V(0) a summand of l (x) w.
std::optional<Label> unit_witness(const Label& l);

// trace(rho(pivot) T). Throws NotEndomorphism unless T is an intertwiner M -> M.
Rat quantum_trace(const Module& m, const RatMatrix& t);
Rat qdim(const Module& m);
bool is_negligible(const Module& m);
// Every indecomposable summand is simple or negligible.
bool is_quasi_dominated(const Module& m);

}  // namespace nichols
