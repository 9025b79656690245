#pragma once

#include <json.hpp>

#include "c2/euler.hpp"
#include "c2/grading.hpp"
#include "c2/laurent.hpp"
#include "c2/point_ring.hpp"
#include "c2/projective_ring.hpp"
#include "c2/schubert.hpp"

namespace c2 {

using json = nlohmann::ordered_json;

json to_json(const PiBDegree& d);  // [total, fixed0, fixed1]
PiBDegree degree_from_json(const json& j);
json to_json(const ROC2Degree& d);

// List of {symbol, params, coeff}.
json to_json(const PointClass& c);
json to_json(const LaurentClass& c);
// List of {monomial, exponents, coefficient, degree}.
json to_json(const ProjClass& c);
json to_json(const BasisSet& b, Ambient amb);
json to_json(const GroupStructure& g);

json to_json(const BundleInvariants& inv);
json to_json(const ClosedForm& f);

// {variant, indices}
json to_json(const GeometricTerm& t);
// List of {coeff_num, coeff_den, term}.
json to_json(const BezoutExpansion& e);

}  // namespace c2
