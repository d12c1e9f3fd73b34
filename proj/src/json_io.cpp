#include "listdec/json_io.hpp"

#include <stdexcept>

namespace listdec {

using nlohmann::json;

namespace {

// Parsed documents store nonnegative integers as unsigned, but values built
// in code from int literals arrive as signed; both spellings are valid input.
bool is_nonneg_int(const json& j) {
    if (j.is_number_unsigned()) return true;
    return j.is_number_integer() && j.get<std::int64_t>() >= 0;
}

}  // namespace

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (std::uint64_t c : p.residues()) out.push_back(c);
    return out;
}

Poly poly_from_json(const PrimeField& field, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<std::uint64_t> coeffs;
    coeffs.reserve(j.size());
    for (const json& c : j) {
        if (!is_nonneg_int(c)) {
            throw std::invalid_argument("polynomial coefficients must be nonnegative integers");
        }
        coeffs.push_back(c.get<std::uint64_t>());
    }
    return Poly(field, coeffs);
}

json word_to_json(std::span<const FieldElement> word) {
    json out = json::array();
    for (const FieldElement& s : word) out.push_back(s.value());
    return out;
}

Word word_from_json(const PrimeField& field, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("word JSON must be an array");
    Word out;
    out.reserve(j.size());
    for (const json& s : j) {
        if (!is_nonneg_int(s)) {
            throw std::invalid_argument("word symbols must be nonnegative integers");
        }
        out.push_back(field.element(s.get<std::uint64_t>()));
    }
    return out;
}

json matrix_to_json(const PolyMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json transforms_to_json(std::span<const SimpleTransform> log) {
    json out = json::array();
    for (const SimpleTransform& t : log) {
        out.push_back(json{{"target", t.target},
                           {"pivot", t.pivot},
                           {"scalar", t.scalar},
                           {"shift", t.shift}});
    }
    return out;
}

json bivar_to_json(const BivarPoly& q) {
    json out = json::array();
    for (std::size_t t = 0; t < q.y_count(); ++t) out.push_back(poly_to_json(q.y_coeff(t)));
    return out;
}

json state_to_json(const InterpolationState& state) {
    return json{{"s", state.s()},
                {"ell", state.ell()},
                {"basis", matrix_to_json(state.basis())},
                {"det_degree", state.det_degree()}};
}

json candidate_to_json(const RootCandidate& c) {
    return json{{"f", poly_to_json(c.f)},
                {"codeword", word_to_json(c.codeword)},
                {"distance", c.distance}};
}

json decode_result_to_json(const DecodeResult& result) {
    json candidates = json::array();
    for (const RootCandidate& c : result.candidates) candidates.push_back(candidate_to_json(c));
    json trace = json::array();
    for (const TraceEntry& e : result.trace) {
        json entry{{"step", e.step}, {"s", e.s}, {"ell", e.ell}};
        if (e.od_before) entry["od_before"] = *e.od_before;
        if (e.transforms) entry["transforms"] = *e.transforms;
        if (e.q_weighted_degree) entry["q_weighted_degree"] = *e.q_weighted_degree;
        if (e.tau) entry["tau"] = *e.tau;
        if (e.found) entry["found"] = *e.found;
        trace.push_back(std::move(entry));
    }
    return json{{"status", to_string(result.status)},
                {"stopped_at", json{{"s", result.s}, {"ell", result.ell}, {"tau", result.tau}}},
                {"candidates", std::move(candidates)},
                {"trace", std::move(trace)}};
}

json schedule_to_json(const Schedule& schedule, std::span<const ParamTriple> attempts) {
    json tokens = json::array();
    for (StepToken t : schedule.tokens()) tokens.push_back(to_string(t));
    json att = json::array();
    for (const ParamTriple& a : attempts) {
        att.push_back(json{{"s", a.s}, {"ell", a.ell}, {"tau", a.tau}});
    }
    return json{{"target", json{{"s", schedule.target_s()}, {"ell", schedule.target_ell()}}},
                {"tokens", std::move(tokens)},
                {"attempts", std::move(att)}};
}

GrsCode code_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("code spec must be a JSON object");
    for (const char* key : {"q", "n", "k"}) {
        if (!j.contains(key) || !is_nonneg_int(j[key])) {
            throw std::invalid_argument(std::string("code spec needs a nonnegative integer \"") +
                                        key + "\"");
        }
    }
    const PrimeField field(j["q"].get<std::uint64_t>());
    const int n = j["n"].get<int>(), k = j["k"].get<int>();
    if (!j.contains("alphas") && !j.contains("ws")) return GrsCode(field, n, k);

    std::vector<FieldElement> alphas, ws;
    if (j.contains("alphas")) {
        alphas = word_from_json(field, j["alphas"]);
    } else {
        for (int i = 1; i <= n; ++i) alphas.push_back(field.element(i));
    }
    if (j.contains("ws")) {
        ws = word_from_json(field, j["ws"]);
    } else {
        ws.assign(static_cast<std::size_t>(n), field.one());
    }
    return GrsCode(field, n, k, std::move(alphas), std::move(ws));
}

json code_to_json(const GrsCode& code) {
    return json{{"q", code.field().modulus()},
                {"n", code.length()},
                {"k", code.dimension()},
                {"alphas", word_to_json(code.alphas())},
                {"ws", word_to_json(code.ws())}};
}

}  // namespace listdec
