#ifndef CPCODES_SERIALIZE_HPP
#define CPCODES_SERIALIZE_HPP

#include <json.hpp>

#include "cpcodes/codebook.hpp"
#include "cpcodes/decode_list.hpp"
#include "cpcodes/decode_unique.hpp"

namespace cpcodes {

/// Field words serialize as integer lists, complex words as [re, im] pairs
/// (IEEE doubles, exact round trip).
nlohmann::json to_json(const FieldCodeword& w);
nlohmann::json to_json(const ComplexWord& w);

FieldCodeword field_word_from_json(const nlohmann::json& j, const Field& f);
ComplexWord complex_word_from_json(const nlohmann::json& j);

/// {"message_coeffs": [...], "corrected_errors": n, "status": "ok"}
nlohmann::json decode_result_json(const DecodeResult& r);

/// {"list": [[coeffs], ...], "s": s, "tau": tau, "t": t, "ell_bound": ell}
nlohmann::json list_result_json(const std::vector<Polynomial>& list, const GsParams& gp);

}  // namespace cpcodes

#endif
