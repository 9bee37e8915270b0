#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nichols/ratlin.hpp"

namespace nichols {

// Indecomposable projective of an algebra, given by a primitive idempotent e and
// an element s = s*e spanning the socle of A*e.
struct Pim {
  enum class Kind { Proj, Steinberg };
  Kind kind;
  int r;
  RatVec idempotent;
  RatVec socle;
};

struct PimCache;

// Finite-dimensional Hopf algebra by structure constants on a word basis. Each
// basis element is a product of generators in a fixed order ("spelling"), which
// lets modules be described by generator actions alone.
class HopfAlgebra {
 public:
  std::string name;
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::vector<int>> spelling;  // generator indices, left to right
  std::vector<std::string> gen_labels;
  std::vector<int> gen_basis;              // basis index of each generator
  std::vector<SparseRow> mult;             // mult[a*dim+b] = w_a w_b
  std::vector<SparseRow> comult;           // indices b*dim+c of w_b (x) w_c
  RatVec counit;
  RatMatrix antipode;                      // column a holds S(w_a)
  RatVec pivot;                            // group-like g with S^2 = Ad(g)
  std::vector<Pim> pims;

  int ngens() const { return static_cast<int>(gen_labels.size()); }
  int gen_index(const std::string& label) const;  // -1 if absent
  RatVec basis_vec(int a) const;
  RatVec one() const { return basis_vec(0); }
  RatVec generator(int g) const { return basis_vec(gen_basis[g]); }
  RatVec mul(const RatVec& x, const RatVec& y) const;
  RatVec apply_antipode(const RatVec& x) const { return antipode * x; }
  Rat apply_counit(const RatVec& x) const;
  // Matrix of left multiplication by x.
  RatMatrix left_mult(const RatVec& x) const;

  const PimCache& pim_cache() const;

 private:
  mutable std::once_flag cache_once_;
  mutable std::shared_ptr<const PimCache> cache_;
};

using AlgebraPtr = std::shared_ptr<const HopfAlgebra>;

RatVec add(const RatVec& x, const RatVec& y);
RatVec scale(const Rat& c, const RatVec& x);

// Generators K, xi1..xim; dim 2^(m+1). Throws OutOfRange outside 1 <= m <= 6.
AlgebraPtr build_Km(int m);
// Generators a, b, c, d; dim 16. With corrupt = true the relation ad+da = 1-bc is
// replaced by ad+da = 1 (used only to exercise the axiom checker).
AlgebraPtr build_DK1(bool corrupt = false);
// Group algebra of Z/2.
AlgebraPtr build_group_algebra_Z2();

// Shared instances (built once).
AlgebraPtr algebra_by_name(const std::string& name);

struct AxiomResult {
  std::string axiom;
  bool pass;
};
struct AxiomReport {
  std::vector<AxiomResult> items;
  bool pass() const;
};
AxiomReport check_hopf_axioms(const HopfAlgebra& a);

// Basis (as vectors) of the Jacobson radical via the trace form of the regular
// representation.
std::vector<RatVec> jacobson_radical(const HopfAlgebra& a);

}  // namespace nichols
