#ifndef WEYLCHAR_SERIALIZE_HPP
#define WEYLCHAR_SERIALIZE_HPP

// JSON forms of series, characters and reports. Coefficients that fit in
// int64 are written as numbers, larger ones as decimal strings.

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "characters.hpp"
#include "series.hpp"
#include "weight.hpp"

namespace weylchar {

using Json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Json bigint_to_json(const BigInt& v) {
    if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw SchemaError("expected an integer coefficient, got " + j.dump());
}

inline const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw SchemaError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

inline int int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) throw SchemaError(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

inline std::optional<int> trunc_field(const Json& j) {
    const Json& v = field(j, "trunc");
    if (v.is_null()) return std::nullopt;
    if (!v.is_number_integer()) throw SchemaError("field \"trunc\" must be an integer or null");
    return v.get<int>();
}

}  // namespace detail

inline Json to_json(const Series& s) {
    Json j;
    j["min_deg"] = s.is_zero() ? 0 : s.min_deg();
    j["coeffs"] = Json::array();
    for (const auto& c : s.coeffs()) j["coeffs"].push_back(detail::bigint_to_json(c));
    j["trunc"] = s.trunc() ? Json(*s.trunc()) : Json(nullptr);
    return j;
}

inline Series series_from_json(const Json& j) {
    const int min_deg = detail::int_field(j, "min_deg");
    const Json& cs = detail::field(j, "coeffs");
    if (!cs.is_array()) throw SchemaError("field \"coeffs\" must be an array");
    std::vector<BigInt> coeffs;
    for (const auto& c : cs) coeffs.push_back(detail::bigint_from_json(c));
    const std::optional<int> trunc = detail::trunc_field(j);
    return trunc ? Series::truncated(std::move(coeffs), min_deg, *trunc) : Series::exact(std::move(coeffs), min_deg);
}

inline Json to_json(const Weight& w) { return Json(w.coords()); }

inline Weight weight_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw SchemaError("a weight must be a non-empty integer array");
    std::vector<int> c;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw SchemaError("a weight must be a non-empty integer array");
        c.push_back(x.get<int>());
    }
    return Weight(std::move(c));
}

inline Json to_json(const GradedCharacter& g) {
    Json j;
    j["rank"] = g.rank();
    j["trunc"] = g.trunc() ? Json(*g.trunc()) : Json(nullptr);
    j["entries"] = Json::array();
    for (const auto& [w, s] : g.entries()) j["entries"].push_back(Json{{"weight", to_json(w)}, {"series", to_json(s)}});
    return j;
}

inline GradedCharacter character_from_json(const Json& j) {
    GradedCharacter g(detail::int_field(j, "rank"), detail::trunc_field(j));
    const Json& es = detail::field(j, "entries");
    if (!es.is_array()) throw SchemaError("field \"entries\" must be an array");
    for (const auto& e : es) {
        const Weight w = weight_from_json(detail::field(e, "weight"));
        if (w.rank() != g.rank()) throw SchemaError("entry weight " + w.str() + " does not match the declared rank");
        g.add(w, series_from_json(detail::field(e, "series")));
    }
    return g;
}

inline Json to_json(const MultiplicitySeries& m) {
    Json j;
    j["rank"] = m.rank;
    j["multiplicities"] = Json::array();
    for (const auto& [w, s] : m.entries) j["multiplicities"].push_back(Json{{"weight", to_json(w)}, {"series", to_json(s)}});
    return j;
}

inline Json to_json(const CharacterMismatch& mm) {
    return Json{{"weight", to_json(mm.weight)},
                {"degree", mm.degree},
                {"lhs", detail::bigint_to_json(mm.lhs)},
                {"rhs", detail::bigint_to_json(mm.rhs)}};
}

inline Json to_json(const VerificationReport& r) {
    Json j;
    j["identity"] = r.identity;
    j["statement"] = r.statement;
    j["label"] = r.label;
    j["truncation"] = r.truncation;
    j["pass"] = r.pass;
    j["first_mismatch"] = r.first_mismatch ? to_json(*r.first_mismatch) : Json(nullptr);
    j["cutoffs"] = Json::object();
    for (const auto& [name, v] : r.cutoffs) j["cutoffs"][name] = v;
    j["checks"] = Json::array();
    for (const auto& c : r.checks) j["checks"].push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["notes"] = r.notes;
    return j;
}

}  // namespace weylchar

#endif  // WEYLCHAR_SERIALIZE_HPP
