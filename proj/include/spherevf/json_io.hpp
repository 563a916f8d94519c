#pragma once

#include <json.hpp>
#include <string>

#include "spherevf/extactic.hpp"
#include "spherevf/generators.hpp"
#include "spherevf/hamiltonian.hpp"
#include "spherevf/sphere_geometry.hpp"
#include "spherevf/stereographic.hpp"
#include "spherevf/vector_field.hpp"

namespace spherevf {

/// Plain nlohmann value: object keys serialize in sorted order, so equal
/// reports dump to identical bytes.
using Json = nlohmann::json;

/// All polynomial payloads are grammar strings (round-trippable through
/// Polynomial::parse); rationals are "p" or "p/q" strings.
Json to_json(const VectorField& vf);
VectorField vector_field_from_json(const Json& j);

Json to_json(const linalg::Vec& v);
Json to_json(const linalg::Matrix& m);
Json to_json(const SkewPolyMatrix& a);
Json to_json(const Hyperplane& h);  // { "a": [...], "b": "..." }
Json to_json(const TangencyCertificate& c);
Json to_json(const InvarianceCertificate& c);
Json to_json(const CanonicalForm& cf);
Json to_json(const HyperplaneFinding& f);
Json to_json(const HyperplaneSearchResult& r);
Json to_json(const GreatSphereKernel& k);
Json to_json(const HamiltonianReport& r);
Json to_json(const ObstructionReport& r);
Json to_json(const CubicKernelResult& r);
Json to_json(const ProjectedField& pf);  // components printed in u-variables
Json to_json(const IntegrabilityCertificate& c);
Json to_json(const GeneratedField& g);

/// Parameter bag for `generate` from its JSON form. Accepted keys: "n", "m",
/// "a", "c", "constants", "linearForms", "aPoly", "seed". Rationals may be
/// JSON integers or "p/q" strings; "seed" is a full square array of
/// polynomial strings whose skew identity is validated here. Malformed input
/// maps to BadParametersError.
FamilySpec family_spec_from_json(const std::string& family, const Json& params);

}  // namespace spherevf
