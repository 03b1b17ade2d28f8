#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

#include "duval/cycles.hpp"
#include "duval/dynkin.hpp"
#include "duval/error.hpp"
#include "duval/lct.hpp"

namespace duval {

/// Worst cusp behaviour over the members of |-K_S|, ordered from mild to bad.
/// This is asserted by the caller; it depends on moduli we do not model.
enum class CuspData { None, SmoothPoint, AtA1, AtA2 };

inline std::string to_string(CuspData c) {
    switch (c) {
        case CuspData::None: return "none";
        case CuspData::SmoothPoint: return "smooth";
        case CuspData::AtA1: return "A1";
        case CuspData::AtA2: return "A2";
    }
    return "?";
}

inline CuspData parse_cusp_data(std::string_view s) {
    if (s == "none") return CuspData::None;
    if (s == "smooth") return CuspData::SmoothPoint;
    if (s == "A1" || s == "a1") return CuspData::AtA1;
    if (s == "A2" || s == "a2") return CuspData::AtA2;
    throw SchemaError("cusp must be one of none|smooth|A1|A2, got '" + std::string(s) + "'");
}

inline constexpr CuspData all_cusp_data[] = {CuspData::None, CuspData::SmoothPoint, CuspData::AtA1,
                                             CuspData::AtA2};

/// Degree-1 Gorenstein del Pezzo surface described by its singular points.
struct SurfaceSpec {
    std::vector<DynkinType> singularities;
    CuspData cusp = CuspData::None;

    SurfaceSpec() = default;
    SurfaceSpec(std::vector<DynkinType> sings, CuspData c) : singularities(std::move(sings)), cusp(c) {
        std::sort(singularities.begin(), singularities.end());
    }

    int total_rank() const {
        int r = 0;
        for (const auto& t : singularities) r += t.rank();
        return r;
    }

    bool has(DynkinKind kind, int rank) const {
        return std::any_of(singularities.begin(), singularities.end(),
                           [&](const DynkinType& t) { return t.is(kind, rank); });
    }
    bool has_kind(DynkinKind kind) const {
        return std::any_of(singularities.begin(), singularities.end(),
                           [&](const DynkinType& t) { return t.kind() == kind; });
    }
    bool only_type_a() const { return !has_kind(DynkinKind::D) && !has_kind(DynkinKind::E); }

    /// Largest rank among singularities of the given kind, 0 if none.
    int largest(DynkinKind kind) const {
        int best = 0;
        for (const auto& t : singularities)
            if (t.kind() == kind) best = std::max(best, t.rank());
        return best;
    }

    std::string label() const {
        std::string out = "{";
        for (std::size_t i = 0; i < singularities.size(); ++i) {
            if (i) out += ",";
            out += singularities[i].label();
        }
        return out + "} cusp=" + to_string(cusp);
    }

    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

inline std::vector<DynkinType> parse_singularity_list(std::string_view list) {
    std::vector<DynkinType> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const auto piece = list.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                              : comma - start);
        if (!piece.empty()) out.push_back(parse_dynkin(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class Clause {
    RankSum,          ///< (a) total rank at most 8
    UniqueMaximal,    ///< (b) A8, D8, E8 are the only singular point
    SevenCompanion,   ///< (c) beside A7, D7, E7 at most one A1
    E6Companion,      ///< (d) beside E6 at most one A1 or A2
    CuspLocation,     ///< asserted cusp at A1/A2 needs such a point
};

inline std::string to_string(Clause c) {
    switch (c) {
        case Clause::RankSum: return "a";
        case Clause::UniqueMaximal: return "b";
        case Clause::SevenCompanion: return "c";
        case Clause::E6Companion: return "d";
        case Clause::CuspLocation: return "cusp";
    }
    return "?";
}

struct Violation {
    Clause clause;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool violates(Clause c) const {
        return std::any_of(violations.begin(), violations.end(),
                           [c](const Violation& v) { return v.clause == c; });
    }
};

/// Checks the necessary conditions on the singularities of a degree-1 surface.
/// Passing does not prove that such a surface exists.
inline ValidationReport validate(const SurfaceSpec& s) {
    ValidationReport report;
    auto add = [&](Clause c, std::string msg) { report.violations.push_back({c, std::move(msg)}); };

    if (s.total_rank() > 8) {
        add(Clause::RankSum, "total rank " + std::to_string(s.total_rank()) +
                                 " exceeds 8 (at most eight (-2)-curves on the resolution)");
    }

    // Companion rule: every other singular point must be one of `allowed`, and
    // there may be at most `max_others` of them.
    auto companions = [&](const DynkinType& t, std::size_t max_others,
                          std::function<bool(const DynkinType&)> allowed, Clause clause,
                          const std::string& what) {
        std::size_t others = 0;
        bool skipped_self = false;
        bool bad_kind = false;
        for (const auto& u : s.singularities) {
            if (!skipped_self && u == t) {
                skipped_self = true;
                continue;
            }
            ++others;
            if (!allowed(u)) bad_kind = true;
        }
        if (others > max_others || bad_kind) add(clause, t.label() + ": " + what);
    };

    for (const auto& t : s.singularities) {
        if (t.rank() == 8) {
            companions(t, 0, [](const DynkinType&) { return false; }, Clause::UniqueMaximal,
                       "must be the unique singular point");
        } else if (t.rank() == 7) {
            companions(t, 1, [](const DynkinType& u) { return u.is(DynkinKind::A, 1); },
                       Clause::SevenCompanion, "allows at most one further point, of type A1");
        } else if (t.is(DynkinKind::E, 6)) {
            companions(t, 1,
                       [](const DynkinType& u) { return u.is(DynkinKind::A, 1) || u.is(DynkinKind::A, 2); },
                       Clause::E6Companion, "allows at most one further point, of type A1 or A2");
        }
    }

    if (s.cusp == CuspData::AtA1 && !s.has(DynkinKind::A, 1)) {
        add(Clause::CuspLocation, "cusp asserted at an A1 point but there is none");
    }
    if (s.cusp == CuspData::AtA2 && !s.has(DynkinKind::A, 2)) {
        add(Clause::CuspLocation, "cusp asserted at an A2 point but there is none");
    }

    // one violation per clause is enough for the report
    std::vector<Violation> unique;
    for (auto& v : report.violations)
        if (std::none_of(unique.begin(), unique.end(), [&](const Violation& u) { return u.clause == v.clause; }))
            unique.push_back(std::move(v));
    report.violations = std::move(unique);
    return report;
}

inline void require_valid(const SurfaceSpec& s) {
    const auto report = validate(s);
    if (report.ok()) return;
    std::string msg = "surface " + s.label() + " violates";
    for (const auto& v : report.violations) msg += " (" + to_string(v.clause) + ") " + v.message + ";";
    throw InvalidSurface(msg);
}

/// Every valid spec: all multisets of admissible types with total rank <= 8
/// that pass validate(), combined with every consistent cusp assertion.
inline std::vector<SurfaceSpec> all_valid_specs() {
    const auto types = all_dynkin_types();
    std::vector<SurfaceSpec> out;
    std::vector<DynkinType> current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
        for (CuspData c : all_cusp_data) {
            SurfaceSpec s(current, c);
            if (validate(s).ok()) out.push_back(std::move(s));
        }
        for (std::size_t i = from; i < types.size(); ++i) {
            if (types[i].rank() > budget) continue;
            current.push_back(types[i]);
            rec(i, budget - types[i].rank());
            current.pop_back();
        }
    };
    rec(0, 8);
    return out;
}

// ---------------------------------------------------------------------------
// Total log canonical threshold
// ---------------------------------------------------------------------------

struct TlctResult {
    Threshold value;
    KodairaLabel kodaira;
};

/// Decision table over the singularity types and the cusp assertion.
inline TlctResult tlct(const SurfaceSpec& s) {
    require_valid(s);
    using K = KodairaLabel;
    if (s.has(DynkinKind::E, 8)) return {Threshold(Rational(1, 6)), K::IIStar()};
    if (s.has(DynkinKind::E, 7)) return {Threshold(Rational(1, 4)), K::IIIStar()};
    if (s.has(DynkinKind::E, 6)) return {Threshold(Rational(1, 3)), K::IVStar()};
    if (s.has_kind(DynkinKind::D)) return {Threshold(Rational(1, 2)), K::IStar(s.largest(DynkinKind::D) - 4)};
    switch (s.cusp) {
        case CuspData::AtA2: return {Threshold(Rational(2, 3)), K::IV()};
        case CuspData::AtA1: return {Threshold(Rational(3, 4)), K::III()};
        case CuspData::SmoothPoint: return {Threshold(Rational(5, 6)), K::II()};
        case CuspData::None: break;
    }
    const int n = s.largest(DynkinKind::A);
    return {Threshold(Rational(1)), n > 0 ? K::I(n + 1) : K::I(0)};
}

/// Anticanonical configurations that the spec says occur on the surface: a
/// smooth and a nodal member away from the singular points, the non-cuspidal
/// member through each singular point, and the asserted cuspidal member.
inline std::vector<AnticanonicalConfiguration> realizable_configurations(const SurfaceSpec& s) {
    std::vector<AnticanonicalConfiguration> out;
    out.push_back(build_smooth_configuration(SmoothContact::Elliptic));
    out.push_back(build_smooth_configuration(SmoothContact::Nodal));
    std::vector<DynkinType> distinct = s.singularities;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& t : distinct) out.push_back(build_configuration(t, default_contact(t)));
    switch (s.cusp) {
        case CuspData::None: break;
        case CuspData::SmoothPoint: out.push_back(build_smooth_configuration(SmoothContact::Cuspidal)); break;
        case CuspData::AtA1: out.push_back(build_configuration(DynkinType(DynkinKind::A, 1), Contact::Tangential)); break;
        case CuspData::AtA2: out.push_back(build_configuration(DynkinType(DynkinKind::A, 2), Contact::OnePoint)); break;
    }
    return out;
}

/// The same threshold obtained the long way: minimum of lct_config over the
/// realizable configurations. Ties go to the configuration with the most
/// components (the largest fibre), then to the earliest listed.
inline TlctResult tlct_from_configurations(const SurfaceSpec& s) {
    require_valid(s);
    const auto configs = realizable_configurations(s);
    std::optional<TlctResult> best;
    std::size_t best_components = 0;
    for (const auto& c : configs) {
        const Threshold t = lct_config(c);
        const bool better = !best || t < best->value ||
                            (t == best->value && c.components.size() > best_components);
        if (better) {
            best = TlctResult{t, kodaira_type(c)};
            best_components = c.components.size();
        }
    }
    return *best;
}

}  // namespace duval
