#ifndef DRLAB_SERIALIZE_HPP
#define DRLAB_SERIALIZE_HPP

#include "drlab/bracket.hpp"
#include "drlab/independence.hpp"
#include "drlab/laurent.hpp"
#include "drlab/multi_poly.hpp"
#include "drlab/resultant.hpp"
#include "drlab/theorem_check.hpp"

#include <json.hpp>

namespace drlab {

using Json = nlohmann::ordered_json;

Json to_json(const Rational &q);
/// Accepts "p", "p/q" or a JSON integer; throws std::invalid_argument.
Rational rational_from_json(const Json &j);

/// [{coefficient, exponents: {var: e}}], variables in namespace order.
Json to_json(const MultiPoly &p);
MultiPoly multipoly_from_json(const Json &j);

Json to_json(const BinaryForm<Rational> &f);
Json to_json(const BinaryForm<MultiPoly> &f);
/// {degree, coefficients: ["p/q", ...]}; the degree must match the length.
BinaryForm<Rational> binary_form_from_json(const Json &j);

Json to_json(const DRSeries<Rational> &s);
Json to_json(const DRSeries<MultiPoly> &s);

Json to_json(const SymbolAssignment &a);
Json to_json(const BracketPolynomial &bp);
Json to_json(const LaurentPoly &p, const PolygonModel &model);
Json to_json(const LaurentMonomial &m, const PolygonModel &model);
Json to_json(const DegreeMatrix &P);
Json to_json(const VerificationReport &rep);
Json to_json(const IndependenceCertificate &cert);
Json to_json(const JacobianReport &rep);

}  // namespace drlab

#endif  // DRLAB_SERIALIZE_HPP
