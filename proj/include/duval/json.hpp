#pragma once

// JSON wire formats. Field names here are a compatibility surface; see the
// README for the documented schemas.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "duval/cycles.hpp"
#include "duval/dynkin.hpp"
#include "duval/error.hpp"
#include "duval/lct.hpp"
#include "duval/rigidity.hpp"
#include "duval/surfaces.hpp"

namespace duval {

using json = nlohmann::json;

/// Inverse of to_fraction_string: "p/q" or "p".
inline Rational parse_fraction(std::string_view s) {
    auto is_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && t.front() == '-') t.remove_prefix(1);
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    const auto slash = s.find('/');
    const auto num_text = s.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_int(num_text, true) || !is_int(den_text, false)) {
        throw SchemaError("not a fraction: '" + std::string(s) + "'");
    }
    const Integer den(std::string{den_text});
    if (den == 0) throw SchemaError("zero denominator in '" + std::string(s) + "'");
    return Rational(Integer(std::string{num_text}), den);
}

namespace detail {

template <typename T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad field '") + key + "': " + e.what());
    }
}

inline Contact parse_contact(std::string_view s) {
    for (Contact c : {Contact::Standard, Contact::Transverse, Contact::Tangential, Contact::TwoPoints,
                      Contact::OnePoint})
        if (to_string(c) == s) return c;
    throw SchemaError("unknown contact variant '" + std::string(s) + "'");
}

inline SmoothContact parse_smooth_contact(std::string_view s) {
    for (SmoothContact c : {SmoothContact::Elliptic, SmoothContact::Nodal, SmoothContact::Cuspidal})
        if (to_string(c) == s) return c;
    throw SchemaError("unknown smooth-locus variant '" + std::string(s) + "'");
}

inline std::string incidence_kind_name(IncidenceKind k) {
    switch (k) {
        case IncidenceKind::Crossing: return "crossing";
        case IncidenceKind::SelfNode: return "node";
        case IncidenceKind::SelfCusp: return "cusp";
    }
    return "?";
}

inline IncidenceKind parse_incidence_kind(std::string_view s) {
    for (IncidenceKind k : {IncidenceKind::Crossing, IncidenceKind::SelfNode, IncidenceKind::SelfCusp})
        if (incidence_kind_name(k) == s) return k;
    throw SchemaError("unknown incidence kind '" + std::string(s) + "'");
}

}  // namespace detail

inline Contact parse_contact(std::string_view s) { return detail::parse_contact(s); }
inline SmoothContact parse_smooth_contact(std::string_view s) { return detail::parse_smooth_contact(s); }

// --- dynkin ---------------------------------------------------------------

inline json matrix_to_json(const DynkinType& t, const IntegerMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(m.row(i));
    return {{"type", t.label()}, {"matrix", rows}};
}

// --- cycles ----------------------------------------------------------------

inline void to_json(json& j, const FundamentalCycle& c) { j = {{"type", c.dynkin.label()}, {"coeffs", c.coeffs}}; }

inline FundamentalCycle cycle_from_json(const json& j) {
    return {parse_dynkin(detail::field<std::string>(j, "type")), detail::field<std::vector<int>>(j, "coeffs")};
}

inline void to_json(json& j, const AttachmentVector& a) { j = {{"type", a.dynkin.label()}, {"d", a.d}}; }

inline void to_json(json& j, const AnticanonicalConfiguration& c) {
    j = json::object();
    if (c.point) {
        j["type"] = c.point->dynkin.label();
        j["variant"] = to_string(c.point->contact);
    } else {
        j["type"] = nullptr;
        j["smooth"] = to_string(c.smooth);
    }
    json comps = json::array();
    for (const auto& comp : c.components) {
        comps.push_back({{"id", comp.id},
                         {"multiplicity", comp.multiplicity},
                         {"kind", comp.kind == ComponentKind::StrictTransform ? "strict" : "exceptional"}});
    }
    json inc = json::array();
    for (const auto& rec : c.incidence) {
        inc.push_back({{"kind", detail::incidence_kind_name(rec.kind)},
                       {"components", rec.components},
                       {"contact", rec.contact}});
    }
    j["components"] = std::move(comps);
    j["incidence"] = std::move(inc);
}

inline AnticanonicalConfiguration configuration_from_json(const json& j) {
    AnticanonicalConfiguration c;
    if (!j.is_object() || !j.contains("type")) throw SchemaError("missing field 'type'");
    if (j.at("type").is_null()) {
        c.smooth = detail::parse_smooth_contact(detail::field<std::string>(j, "smooth"));
    } else {
        c.point = PointContact{parse_dynkin(detail::field<std::string>(j, "type")),
                               detail::parse_contact(detail::field<std::string>(j, "variant"))};
    }
    for (const auto& comp : detail::field<json>(j, "components")) {
        const auto kind = detail::field<std::string>(comp, "kind");
        if (kind != "strict" && kind != "exceptional") throw SchemaError("unknown component kind '" + kind + "'");
        c.components.push_back({detail::field<int>(comp, "id"), detail::field<int>(comp, "multiplicity"),
                                kind == "strict" ? ComponentKind::StrictTransform : ComponentKind::Exceptional});
    }
    for (const auto& rec : detail::field<json>(j, "incidence")) {
        c.incidence.push_back({detail::parse_incidence_kind(detail::field<std::string>(rec, "kind")),
                               detail::field<std::vector<int>>(rec, "components"),
                               detail::field<int>(rec, "contact")});
    }
    return c;
}

// --- surfaces ----------------------------------------------------------------

inline void to_json(json& j, const SurfaceSpec& s) {
    std::vector<std::string> labels;
    for (const auto& t : s.singularities) labels.push_back(t.label());
    j = {{"singularities", labels}, {"cusp", to_string(s.cusp)}};
}

inline SurfaceSpec surface_from_json(const json& j) {
    std::vector<DynkinType> sings;
    for (const auto& label : detail::field<std::vector<std::string>>(j, "singularities"))
        sings.push_back(parse_dynkin(label));
    const CuspData cusp = j.contains("cusp") ? parse_cusp_data(detail::field<std::string>(j, "cusp")) : CuspData::None;
    return {std::move(sings), cusp};
}

inline void to_json(json& j, const TlctResult& r) { j = {{"tlct", r.value.str()}, {"kodaira", r.kodaira.str()}}; }

inline void to_json(json& j, const ValidationReport& r) {
    json v = json::array();
    for (const auto& viol : r.violations) v.push_back({{"clause", to_string(viol.clause)}, {"message", viol.message}});
    j = {{"valid", r.ok()}, {"violations", v}};
}

// --- rigidity ----------------------------------------------------------------

inline void to_json(json& j, const Assumptions& a) {
    j = {{"special_fiber_plt", a.special_fiber_plt},
         {"one_complement", a.one_complement},
         {"surjectivity", a.surjectivity}};
}

inline void to_json(json& j, const FibrationSpec& f) {
    to_json(j, f.fiber);
    j["assumptions"] = f.assumptions;
}

/// Surface spec JSON with an optional "assumptions" object; missing flags
/// default to true.
inline FibrationSpec fibration_from_json(const json& j) {
    FibrationSpec f{surface_from_json(j), {}};
    if (j.contains("assumptions")) {
        const json& a = j.at("assumptions");
        if (!a.is_object()) throw SchemaError("'assumptions' must be an object");
        auto flag = [&](const char* key, bool& out) {
            if (a.contains(key)) out = detail::field<bool>(a, key);
        };
        flag("special_fiber_plt", f.assumptions.special_fiber_plt);
        flag("one_complement", f.assumptions.one_complement);
        flag("surjectivity", f.assumptions.surjectivity);
        for (const auto& [key, value] : a.items()) {
            if (key != "special_fiber_plt" && key != "one_complement" && key != "surjectivity")
                throw SchemaError("unknown assumption '" + key + "'");
        }
    }
    return f;
}

inline FibrationSpec fibration_from_json_text(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    return fibration_from_json(j);
}

inline void to_json(json& j, const TargetClass& c) {
    j = {{"class", slug(c.kind)}, {"tlct", to_fraction_string(c.tlct_value)}, {"description", c.description}};
}

inline TargetClass target_from_json(const json& j) {
    const auto name = detail::field<std::string>(j, "class");
    for (const auto& c : target_classes()) {
        if (slug(c.kind) == name) {
            if (parse_fraction(detail::field<std::string>(j, "tlct")) != c.tlct_value)
                throw SchemaError("tlct does not match class '" + name + "'");
            return c;
        }
    }
    throw SchemaError("unknown target class '" + name + "'");
}

inline void to_json(json& j, const RigidityVerdict& v) {
    j = {{"outcome", to_string(v.outcome)},
         {"tlct_sum", to_fraction_string(v.tlct_sum)},
         {"deficit", to_fraction_string(v.deficit)},
         {"unasserted", v.unasserted},
         {"targets", v.targets}};
}

inline RigidityVerdict verdict_from_json(const json& j) {
    RigidityVerdict v;
    const auto outcome = detail::field<std::string>(j, "outcome");
    if (outcome == "rigid") v.outcome = Outcome::Rigid;
    else if (outcome == "inconclusive") v.outcome = Outcome::Inconclusive;
    else throw SchemaError("unknown outcome '" + outcome + "'");
    v.tlct_sum = parse_fraction(detail::field<std::string>(j, "tlct_sum"));
    v.deficit = j.contains("deficit") ? parse_fraction(detail::field<std::string>(j, "deficit")) : 1 - v.tlct_sum;
    if (j.contains("unasserted")) v.unasserted = detail::field<std::vector<std::string>>(j, "unasserted");
    if (j.contains("targets"))
        for (const auto& t : j.at("targets")) v.targets.push_back(target_from_json(t));
    return v;
}

}  // namespace duval
