#pragma once

#include <json.hpp>

#include "nichols/green.hpp"
#include "nichols/ideal.hpp"
#include "nichols/projcat.hpp"

namespace nichols {

using json = nlohmann::ordered_json;

json to_json(const Rat& x);
Rat rat_from_json(const json& j);  // accepts "p/q" strings and integers

json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

json algebra_to_json(const HopfAlgebra& alg);

// { algebra, dim, actions: { gen: matrix } }
json module_to_json(const Module& m);
// Throws InvalidLabel on unknown algebra or generator, Error on malformed
// matrices or a failed module check.
Module module_from_json(const json& j);

json to_json(const GreenElement& g);  // [{label, coeff}]
GreenElement green_from_json(const json& j);

json to_json(const IdealSpec& s);     // { proper, default, support: [{eta, bound}] }
IdealSpec ideal_from_json(const json& j);

json skeleton_to_json(const ProjSkeleton& sk);

}  // namespace nichols
