#pragma once

// JSON wire formats shared by every module: rationals as "p/q" strings,
// polynomials as {"exp": [...], "coef": "p/q"} term lists, algebra specs as
// {"dim", "unit", "table"}. Ordered maps keep output byte-stable.

#include "jck/cremona.hpp"
#include "jck/cubic.hpp"
#include "jck/jordan.hpp"
#include "jck/multipoly.hpp"
#include "jck/quad.hpp"
#include "jck/unipoly.hpp"
#include "jck/variety.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace jck {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Rational& r);
Rational scalar_from_json(const Json& j);

Json scalar_vec_to_json(const std::vector<Rational>& v);
std::vector<Rational> scalar_vec_from_json(const Json& j);

Json quad_to_json(const QuadScalar& q);
Json quad_vec_to_json(const std::vector<QuadScalar>& v);

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, int expected_vars = -1);

Json unipoly_to_json(const UniPoly& p);

Json map_to_json(const RationalMapT& m);
RationalMapT map_from_json(const Json& j);

Json algebra_spec_to_json(const AlgebraSpec& s);
AlgebraSpec algebra_spec_from_json(const Json& j);

Json jordan_certificate(const JordanAlgebra& alg, bool include_sigma);
Json involution_certificate_to_json(const InvolutionCertificate& c);
Json bidegree_report_to_json(const BidegreeReport& r);
Json curve_to_json(const CurveParam& c);
Json variety_to_json(const VarietyParam& v);
Json secant_to_json(const SecantSolution& s);

} // namespace jck
