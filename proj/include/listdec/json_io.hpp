#pragma once

#include <span>

#include <json.hpp>

#include "listdec/codec.hpp"
#include "listdec/decoder.hpp"
#include "listdec/gsmodule.hpp"
#include "listdec/polymat.hpp"
#include "listdec/rootfind.hpp"

namespace listdec {

/// JSON shapes used by the CLI and the serialization tests:
///   field element   decimal integer
///   polynomial      ascending coefficient array, zero -> []
///   word            symbol array
///   matrix          array of rows of coefficient arrays
///   transform log   [{target, pivot, scalar, shift}, ...]
///   bivariate poly  array of coefficient arrays, outer index = Y power
///   state           {s, ell, basis, det_degree}
///   candidate       {f, codeword, distance}
/// Object keys serialize alphabetically, so identical values always produce
/// identical bytes.

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const PrimeField& field, const nlohmann::json& j);

nlohmann::json word_to_json(std::span<const FieldElement> word);
Word word_from_json(const PrimeField& field, const nlohmann::json& j);

nlohmann::json matrix_to_json(const PolyMatrix& m);
nlohmann::json transforms_to_json(std::span<const SimpleTransform> log);

nlohmann::json bivar_to_json(const BivarPoly& q);

nlohmann::json state_to_json(const InterpolationState& state);

nlohmann::json candidate_to_json(const RootCandidate& c);

nlohmann::json decode_result_to_json(const DecodeResult& result);

nlohmann::json schedule_to_json(const Schedule& schedule, std::span<const ParamTriple> attempts);

/// Code spec {q, n, k, alphas?, ws?}.
GrsCode code_from_json(const nlohmann::json& j);
nlohmann::json code_to_json(const GrsCode& code);

}  // namespace listdec
