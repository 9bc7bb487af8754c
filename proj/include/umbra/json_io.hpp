#ifndef UMBRA_JSON_IO_HPP
#define UMBRA_JSON_IO_HPP

#include <json.hpp>

#include "umbra/analysis.hpp"
#include "umbra/operators.hpp"
#include "umbra/poly.hpp"
#include "umbra/symfunc.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

using json = nlohmann::json;

// Canonical JSON forms. Rationals are "p/q" strings (or "p" for integers),
// Poly1 is the ascending coefficient array, Poly2 a list of
// {"i":..,"j":..,"c":".."} terms, operators carry their truncation.

json to_json(const Rational& r);
json to_json(const Poly1& p);
json to_json(const Poly2& p);
json to_json(const PolySeq& p);
json to_json(const EndoOp& op);
json to_json(const BivarOp& op);
json to_json(const ShefferData& data);
json to_json(const VerifyReport& report);
json to_json(const CauchyWitness& witness);
json to_json(const Partition& la);
json to_json(const SymF& f);

Rational rational_from_json(const json& j);
Poly1 poly1_from_json(const json& j);
Poly2 poly2_from_json(const json& j);
PolySeq polyseq_from_json(const json& j);
EndoOp endo_from_json(const json& j);
BivarOp bivar_from_json(const json& j);
Partition partition_from_json(const json& j);
SymF symf_from_json(const json& j, int trunc);

}  // namespace umbra

#endif
