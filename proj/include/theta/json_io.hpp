#pragma once

#include "json.hpp"

#include "theta/brauer.hpp"
#include "theta/heisenberg.hpp"
#include "theta/matrix.hpp"

namespace theta {

using Json = nlohmann::json;

// Parse with errors reported as errc::parse_error.
Json parse_json(const std::string& text);

Json rational_to_json(const Rational& q);            // "p/q"
Rational rational_from_json(const Json& j);

Json root_to_json(const RootOfUnity& z);             // {"order": N, "exp": a}
RootOfUnity root_from_json(const Json& j);

Json cyclo_to_json(const Cyclotomic& c);             // {"order": N, "coeffs": [...]}
Cyclotomic cyclo_from_json(const Json& j);

Json matrix_to_json(const CycloMatrix& m);           // [[cyclo, ...], ...]
CycloMatrix matrix_from_json(const Json& j);

Json group_to_json(const FiniteAbelianGroup& g);     // {"factors": [...]}
FiniteAbelianGroup group_from_json(const Json& j);

Json element_to_json(const GroupElement& x);         // {"coords": [...]}
GroupElement element_from_json(const Json& j, const FiniteAbelianGroup& parent);

Json dual_to_json(const DualElement& chi);
DualElement dual_from_json(const Json& j, const FiniteAbelianGroup& parent);

Json hom_to_json(const GroupHom& f);                 // {"matrix": [[...]]}
GroupHom hom_from_json(const Json& j, const FiniteAbelianGroup& source,
                       const FiniteAbelianGroup& target);

Json pairing_to_json(const AlternatingPairing& e);   // {"group": {...}, "matrix": [[...]]}
AlternatingPairing pairing_from_json(const Json& j);

Json theta_element_to_json(const ThetaElement& t);   // {"scalar": {...}, "x": [...], "chi": [...]}
ThetaElement theta_element_from_json(const Json& j, const FiniteAbelianGroup& k);

// {"blocks": [{"n":..., "d":...}], "basis": [[...]], "radical": {...}}
Json normal_form_to_json(const NormalForm& nf);

Json model_to_json(const AbelianVarietyModel& m);    // {"g":..., "n":..., "ns": [[[...]]]}
AbelianVarietyModel model_from_json(const Json& j);

} // namespace theta
