#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "nichols/rep.hpp"

namespace nichols {

// Indecomposable projectives of an algebra with their hom spaces and the
// structure constants of composition.
struct ProjSkeleton {
  AlgebraPtr alg;
  std::vector<Module> objects;                 // objects[j] = A e_j
  std::vector<std::string> names;              // "P(0)", "St(1)", ...
  std::vector<std::vector<HomBasis>> homs;     // homs[i][j]: P_i -> P_j
  // comp[{i,j,k}][a][b]: coordinates in homs[i][k] of homs[j][k][a] o homs[i][j][b]
  std::map<std::tuple<int, int, int>, std::vector<std::vector<RatVec>>> comp;

  int size() const { return static_cast<int>(objects.size()); }
  // Coordinates of an intertwiner P_i -> P_j in homs[i][j].
  RatVec coordinates(int i, int j, const RatMatrix& f) const;
  RatMatrix from_coordinates(int i, int j, const RatVec& c) const;
};

ProjSkeleton build_skeleton(AlgebraPtr alg);

struct AuslanderReport {
  int m = 0;
  int dim_A = 0;
  int dim_Km = 0;
  std::vector<std::vector<int>> hom_dims;              // hom_dims[r][s]
  std::vector<std::pair<std::string, bool>> checks;    // named checks, in order
  bool pass() const;
};
// Builds the basis maps iota_r, phi^i_r of End(P(0) + P(1)) over K_m, checks the
// relation table, and verifies that F(iota_r) = e_r, F(phi^i_r) = xi_i e_r
// extends to an algebra isomorphism onto K_m. Throws OutOfRange unless 1 <= m <= 3.
AuslanderReport verify_auslander_iso(int m);

// The map P_r -> P_s, a e_r -> a x, for x in e_r A e_s. Matrix in the bases of
// pim_module(alg, r) and pim_module(alg, s).
RatMatrix right_multiplication_map(const HopfAlgebra& alg, int r, int s, const RatVec& x);

// phi: objects[i] -> objects[k]. Both throw ZeroMap on phi = 0.
bool has_simple_image_direct(const ProjSkeleton& sk, int i, int k, const RatMatrix& phi);
// For every nonzero psi: P_l -> P_k (integer combinations of the hom basis with
// coefficients in {-1,0,1}) and every j: P_k -> P with j psi = 0, require j phi = 0.
// P ranges over each object and the sum of all objects.
bool has_simple_image_lemma(const ProjSkeleton& sk, int i, int k, const RatMatrix& phi);

// im(phi) as a submodule of the target.
Module object_from_map(const Module& target, const RatMatrix& phi);
// Projective cover of m composed with the embedding into its injective hull.
struct ProjectiveMap {
  Module source;
  Module target;
  RatMatrix map;
};
ProjectiveMap presenting_map(const Module& m);

}  // namespace nichols
