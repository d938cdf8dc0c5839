#include "cpcodes/serialize.hpp"

namespace cpcodes {

nlohmann::json to_json(const FieldCodeword& w) {
    nlohmann::json j;
    j["type"] = "field_word";
    j["q"] = w.field->q();
    j["word"] = w.symbols;
    return j;
}

nlohmann::json to_json(const ComplexWord& w) {
    nlohmann::json j;
    j["type"] = "complex_word";
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& z : w.coords) arr.push_back({z.real(), z.imag()});
    j["word"] = std::move(arr);
    return j;
}

FieldCodeword field_word_from_json(const nlohmann::json& j, const Field& f) {
    const nlohmann::json& arr = j.contains("word") ? j.at("word") : j;
    FieldCodeword w;
    w.field = &f;
    for (const auto& v : arr) {
        std::uint32_t s = v.get<std::uint32_t>();
        if (s >= f.q()) throw std::invalid_argument("field_word_from_json: symbol out of range");
        w.symbols.push_back(s);
    }
    return w;
}

ComplexWord complex_word_from_json(const nlohmann::json& j) {
    const nlohmann::json& arr = j.contains("word") ? j.at("word") : j;
    ComplexWord w;
    for (const auto& v : arr) {
        if (!v.is_array() || v.size() != 2)
            throw std::invalid_argument("complex_word_from_json: expected [re, im] pairs");
        w.coords.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    return w;
}

nlohmann::json decode_result_json(const DecodeResult& r) {
    nlohmann::json j;
    j["message_coeffs"] = r.message.coeffs();
    j["corrected_errors"] = r.corrected_errors;
    j["status"] = "ok";
    return j;
}

nlohmann::json list_result_json(const std::vector<Polynomial>& list, const GsParams& gp) {
    nlohmann::json j;
    nlohmann::json arr = nlohmann::json::array();
    for (const Polynomial& f : list) arr.push_back(f.coeffs());
    j["list"] = std::move(arr);
    j["s"] = gp.s;
    j["tau"] = gp.tau;
    j["t"] = gp.t;
    j["ell_bound"] = gp.ell;
    return j;
}

}  // namespace cpcodes
