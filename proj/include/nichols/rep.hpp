#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/hopf.hpp"

namespace nichols {

// A module over a HopfAlgebra, given by one action matrix per generator.
struct Module {
  AlgebraPtr alg;
  int dim = 0;
  std::vector<RatMatrix> actions;  // indexed like alg->gen_labels

  const RatMatrix& action(int g) const { return actions[g]; }
  const RatMatrix& action(const std::string& gen) const;
};

Module zero_module(AlgebraPtr alg);
// Each generator acts by its counit value.
Module trivial_module(AlgebraPtr alg);

// Action of every basis word (product of generator actions along its spelling).
std::vector<RatMatrix> word_actions(const Module& m);
// Action of an arbitrary algebra element, given the word actions.
RatMatrix element_action(const std::vector<RatMatrix>& words, const RatVec& x);
RatMatrix element_action(const Module& m, const RatVec& x);

struct ModuleCheck {
  bool pass = true;
  std::string detail;
};
// Verifies rho(g) rho(w) = rho(g w) for every generator g and basis word w, which
// is equivalent to the algebra relations holding in the action matrices.
ModuleCheck check_module(const Module& m);

Module tensor(const Module& m, const Module& n);
Module dual(const Module& m);
Module direct_sum(AlgebraPtr alg, const std::vector<Module>& ms);

struct HomBasis {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<RatMatrix> basis;  // target_dim x source_dim intertwiners
};
HomBasis hom_basis(const Module& m, const Module& n);
bool is_intertwiner(const Module& m, const Module& n, const RatMatrix& t);

// Column bases of rad(M) = J(A) M and soc(M) = {v : J(A) v = 0}.
RatMatrix radical(const Module& m);
RatMatrix socle(const Module& m);

// Restriction to the submodule spanned by the columns of b (must be invariant).
Module submodule(const Module& m, const RatMatrix& b);
struct Quotient {
  Module module;
  RatMatrix projection;  // dim(M/U) x dim(M)
  RatMatrix section;     // dim(M) x dim(M/U), projection * section = I
};
Quotient quotient(const Module& m, const RatMatrix& u);

// Indecomposable projective A e_j (j indexes alg->pims), basis chosen among the
// products w e_j of basis words with e_j.
Module pim_module(AlgebraPtr alg, int j);

struct Cover {
  Module projective;
  RatMatrix map;          // projective -> M, surjective
  std::vector<int> pims;  // PIM index of each summand of `projective`, in order
};
Cover projective_cover(const Module& m);

struct Summand {
  Module module;
  int pim = -1;  // PIM index when the summand was split off as a projective
};
struct Decomposition {
  std::vector<Summand> summands;
  RatMatrix change_of_basis;  // columns: concatenated summand bases
};
// Splits off projective summands first (via the Frobenius structure of A), then
// splits the rest with endomorphism-ring idempotents. Throws NonSplitField if a
// residue algebra does not split over Q.
Decomposition decompose(const Module& m);

// Number of summands of each PIM type, read off the socle action.
std::vector<int> projective_multiplicities(const Module& m);

bool is_indecomposable(const Module& m);
bool is_simple(const Module& m);

std::optional<RatMatrix> find_isomorphism(const Module& m, const Module& n);
inline bool is_isomorphic(const Module& m, const Module& n) { return find_isomorphism(m, n).has_value(); }

struct PimCache {
  std::vector<RatVec> jacobson;
  std::vector<Module> pims;
  std::vector<std::vector<RatVec>> pim_basis;  // basis elements of A e_j
  // u[j][p] = sum_a (w_a e_j)_p w^a for a Frobenius dual basis {w^a}; the row i of
  // rho(u[j][p]) evaluates coordinate p of the retraction onto A e_j induced by the
  // i-th coordinate functional.
  std::vector<std::vector<RatVec>> retraction;
};
std::shared_ptr<const PimCache> build_pim_cache(const HopfAlgebra& alg);

}  // namespace nichols
