#pragma once

#include <map>
#include <string>
#include <vector>

#include "nichols/indec.hpp"

namespace nichols {

// Integer combination of indecomposable classes; zero coefficients are never stored.
class GreenElement {
 public:
  GreenElement() = default;
  explicit GreenElement(const Label& l, long long c = 1);
  static GreenElement from_labels(const std::vector<Label>& ls);

  const std::map<Label, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(const Label& l) const;
  void add(const Label& l, long long c);

  GreenElement& operator+=(const GreenElement& o);
  GreenElement& operator-=(const GreenElement& o);
  friend GreenElement operator+(GreenElement a, const GreenElement& b) { return a += b; }
  friend GreenElement operator-(GreenElement a, const GreenElement& b) { return a -= b; }
  friend GreenElement operator*(long long c, const GreenElement& a);
  friend bool operator==(const GreenElement& a, const GreenElement& b) = default;

  // "2*P(0) + 2*P(1) - V(0)", or "0".
  std::string to_string() const;

 private:
  std::map<Label, long long> terms_;
};

GreenElement dual(const GreenElement& x);
long long dimension_character(const GreenElement& x);

// Closed-form product of two indecomposable classes over alg (K2, DK1, or K_m for
// the V/P part).
GreenElement closed_form(const Label& a, const Label& b, const HopfAlgebra& alg);
// Bilinear extension of the closed form.
GreenElement green_mul(const GreenElement& a, const GreenElement& b, const HopfAlgebra& alg);
// realize -> tensor -> decompose -> identify; memoised per (algebra, pair).
GreenElement green_mul_oracle(const Label& a, const Label& b, AlgebraPtr alg);
GreenElement green_mul_oracle(const GreenElement& a, const GreenElement& b, AlgebraPtr alg);

// All labels with s <= max_s, n <= max_n and eta in etas (Steinberg included
// over DK1), sorted.
std::vector<Label> label_sweep(const HopfAlgebra& alg, int max_s, int max_n, const std::vector<Eta>& etas);

struct RelationCheck {
  std::string relation;  // polynomial with parameters substituted
  bool closed_form_zero = true;
  bool oracle_zero = true;
  std::string residue;   // nonzero value when a check fails
};
struct PresentationReport {
  std::string algebra;
  std::vector<RelationCheck> checks;
  bool pass() const;
};
// Evaluates every generator of J under g = [V(1)], x = [St(0)], y = [O(+1,0)],
// z = [O(-1,0)], X'_{n,eta} = [M(n,0,eta)]. Over K2 only relations in g, x^2,
// y, z, X' are used, with x^2 = [P(1)]. with_oracle also evaluates each relation
// with oracle products.
PresentationReport verify_presentation(AlgebraPtr alg, int max_param = 3,
                                       const std::vector<Eta>& etas = standard_etas(), bool with_oracle = true);

}  // namespace nichols
