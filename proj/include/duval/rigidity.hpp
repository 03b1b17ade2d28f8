#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "duval/error.hpp"
#include "duval/surfaces.hpp"

namespace duval {

/// The three conditions of the biregularity criterion that cannot be computed
/// from the fibre data. They hold in the setting studied, hence the defaults.
struct Assumptions {
    bool special_fiber_plt = true;
    bool one_complement = true;
    bool surjectivity = true;

    bool all() const noexcept { return special_fiber_plt && one_complement && surjectivity; }

    std::vector<std::string> missing() const {
        std::vector<std::string> out;
        if (!special_fiber_plt) out.emplace_back("special_fiber_plt");
        if (!one_complement) out.emplace_back("one_complement");
        if (!surjectivity) out.emplace_back("surjectivity");
        return out;
    }

    friend bool operator==(const Assumptions&, const Assumptions&) = default;
};

/// Degree-1 del Pezzo fibration over a DVR, seen through its special fibre.
struct FibrationSpec {
    SurfaceSpec fiber;
    Assumptions assumptions;

    friend bool operator==(const FibrationSpec&, const FibrationSpec&) = default;
};

/// Singularity classes of a special fibre, one per total lc threshold value.
enum class TargetKind {
    UniqueE8,          // 1/6
    E7WithA1,          // 1/4: E7, possibly one A1
    E6WithA1orA2,      // 1/3: E6, possibly one A1 or A2
    DType,             // 1/2: some D_n, no E
    OnlyA_CuspAtA2,    // 2/3
    OnlyA_CuspAtA1,    // 3/4
    OnlyA_CuspSmooth,  // 5/6
    OnlyA_NoCusp,      // 1
};

struct TargetClass {
    TargetKind kind;
    Rational tlct_value;
    std::string description;

    friend bool operator==(const TargetClass&, const TargetClass&) = default;
};

inline const std::vector<TargetClass>& target_classes() {
    static const std::vector<TargetClass> classes = {
        {TargetKind::UniqueE8, Rational(1, 6), "unique singular point, of type E8"},
        {TargetKind::E7WithA1, Rational(1, 4), "E7 present (no E8), at most one extra point, of type A1"},
        {TargetKind::E6WithA1orA2, Rational(1, 3),
         "E6 present (no E7, E8), at most one extra point, of type A1 or A2"},
        {TargetKind::DType, Rational(1, 2), "some D_n (4 <= n <= 8) and no exceptional type"},
        {TargetKind::OnlyA_CuspAtA2, Rational(2, 3), "only A_n types, a member of |-K| with a cusp at an A2 point"},
        {TargetKind::OnlyA_CuspAtA1, Rational(3, 4),
         "only A_n types, a member of |-K| with a cusp at an A1 point, none at an A2 point"},
        {TargetKind::OnlyA_CuspSmooth, Rational(5, 6),
         "only A_n types, a cuspidal member of |-K|, none with the cusp at a singular point"},
        {TargetKind::OnlyA_NoCusp, Rational(1), "only A_n types, no cuspidal member of |-K|"},
    };
    return classes;
}

inline std::string slug(TargetKind k) {
    switch (k) {
        case TargetKind::UniqueE8: return "unique-E8";
        case TargetKind::E7WithA1: return "E7";
        case TargetKind::E6WithA1orA2: return "E6";
        case TargetKind::DType: return "D";
        case TargetKind::OnlyA_CuspAtA2: return "A-cusp-A2";
        case TargetKind::OnlyA_CuspAtA1: return "A-cusp-A1";
        case TargetKind::OnlyA_CuspSmooth: return "A-cusp-smooth";
        case TargetKind::OnlyA_NoCusp: return "A-no-cusp";
    }
    return "?";
}

inline const TargetClass& target_class(TargetKind k) {
    for (const auto& c : target_classes())
        if (c.kind == k) return c;
    throw std::logic_error("unknown target kind");
}

/// Does a (valid) surface belong to the class?
inline bool in_class(const SurfaceSpec& s, TargetKind k) {
    const bool e8 = s.has(DynkinKind::E, 8), e7 = s.has(DynkinKind::E, 7), e6 = s.has(DynkinKind::E, 6);
    switch (k) {
        case TargetKind::UniqueE8: return e8 && s.singularities.size() == 1;
        case TargetKind::E7WithA1: {
            if (!e7 || e8) return false;
            return std::all_of(s.singularities.begin(), s.singularities.end(), [](const DynkinType& t) {
                       return t.is(DynkinKind::E, 7) || t.is(DynkinKind::A, 1);
                   }) && s.singularities.size() <= 2;
        }
        case TargetKind::E6WithA1orA2: {
            if (!e6 || e7 || e8) return false;
            return std::all_of(s.singularities.begin(), s.singularities.end(), [](const DynkinType& t) {
                       return t.is(DynkinKind::E, 6) || t.is(DynkinKind::A, 1) || t.is(DynkinKind::A, 2);
                   }) && s.singularities.size() <= 2;
        }
        case TargetKind::DType: return s.has_kind(DynkinKind::D) && !s.has_kind(DynkinKind::E);
        case TargetKind::OnlyA_CuspAtA2: return s.only_type_a() && s.cusp == CuspData::AtA2;
        case TargetKind::OnlyA_CuspAtA1: return s.only_type_a() && s.cusp == CuspData::AtA1;
        case TargetKind::OnlyA_CuspSmooth: return s.only_type_a() && s.cusp == CuspData::SmoothPoint;
        case TargetKind::OnlyA_NoCusp: return s.only_type_a() && s.cusp == CuspData::None;
    }
    return false;
}

/// A small valid surface in the class.
inline SurfaceSpec representative(TargetKind k) {
    using DK = DynkinKind;
    switch (k) {
        case TargetKind::UniqueE8: return {{DynkinType(DK::E, 8)}, CuspData::None};
        case TargetKind::E7WithA1: return {{DynkinType(DK::E, 7)}, CuspData::None};
        case TargetKind::E6WithA1orA2: return {{DynkinType(DK::E, 6)}, CuspData::None};
        case TargetKind::DType: return {{DynkinType(DK::D, 4)}, CuspData::None};
        case TargetKind::OnlyA_CuspAtA2: return {{DynkinType(DK::A, 2)}, CuspData::AtA2};
        case TargetKind::OnlyA_CuspAtA1: return {{DynkinType(DK::A, 1)}, CuspData::AtA1};
        case TargetKind::OnlyA_CuspSmooth: return {{}, CuspData::SmoothPoint};
        case TargetKind::OnlyA_NoCusp: return {{}, CuspData::None};
    }
    return {};
}

inline TargetKind classify_surface(const SurfaceSpec& s) {
    const Rational t = tlct(s).value.value();
    for (const auto& c : target_classes())
        if (c.tlct_value == t) return c.kind;
    throw std::logic_error("tlct value outside the class table");
}

enum class Outcome { Rigid, Inconclusive };

inline std::string to_string(Outcome o) { return o == Outcome::Rigid ? "rigid" : "inconclusive"; }

struct RigidityVerdict {
    Outcome outcome;
    Rational tlct_sum;
    Rational deficit;                      ///< 1 - tlct_sum
    std::vector<std::string> unasserted;   ///< assumption flags that were false
    std::vector<TargetClass> targets;      ///< inconclusive: classes a target of x may fall in
};

/// Classes a non-biregular target of `x` can fall into: every class whose
/// threshold is at most 1 - tlct(x), in increasing order.
inline std::vector<TargetClass> possible_targets(const FibrationSpec& x) {
    require_valid(x.fiber);
    if (!x.assumptions.all()) {
        std::string names;
        for (const auto& n : x.assumptions.missing()) names += " " + n;
        throw AssumptionNotAsserted("assumptions not asserted:" + names);
    }
    const Rational budget = 1 - tlct(x.fiber).value.value();
    std::vector<TargetClass> out;
    for (const auto& c : target_classes())
        if (c.tlct_value <= budget) out.push_back(c);
    return out;
}

/// The biregularity gate. Rigid iff every assumption holds on both sides and
/// tlct(S_X) + tlct(S_Y) > 1; otherwise the criterion simply does not apply.
inline RigidityVerdict rigidity_gate(const FibrationSpec& x, const FibrationSpec& y) {
    require_valid(x.fiber);
    require_valid(y.fiber);
    RigidityVerdict v;
    v.tlct_sum = tlct(x.fiber).value.value() + tlct(y.fiber).value.value();
    v.deficit = 1 - v.tlct_sum;
    for (const auto& n : x.assumptions.missing()) v.unasserted.push_back("x." + n);
    for (const auto& n : y.assumptions.missing()) v.unasserted.push_back("y." + n);
    v.outcome = (v.unasserted.empty() && v.tlct_sum > 1) ? Outcome::Rigid : Outcome::Inconclusive;
    if (v.outcome == Outcome::Inconclusive && x.assumptions.all()) v.targets = possible_targets(x);
    return v;
}

/// What a source with only A_n points must assert for a target of class
/// `target` to be possible: the cusp assertions whose threshold is at most
/// 1 - tlct(target).
struct CuspRequirement {
    std::vector<CuspData> allowed;

    bool admits(CuspData c) const { return std::find(allowed.begin(), allowed.end(), c) != allowed.end(); }
};

inline CuspRequirement source_constraints(const TargetClass& target) {
    if (target.kind != TargetKind::E6WithA1orA2 && target.kind != TargetKind::E7WithA1) {
        throw UnsupportedClass("source constraints are derived only for the E6 and E7 classes");
    }
    const Rational budget = 1 - target.tlct_value;
    CuspRequirement req;
    for (CuspData c : all_cusp_data) {
        const auto& cls = target_class(c == CuspData::None          ? TargetKind::OnlyA_NoCusp
                                       : c == CuspData::SmoothPoint ? TargetKind::OnlyA_CuspSmooth
                                       : c == CuspData::AtA1        ? TargetKind::OnlyA_CuspAtA1
                                                                    : TargetKind::OnlyA_CuspAtA2);
        if (cls.tlct_value <= budget) req.allowed.push_back(c);
    }
    return req;
}

}  // namespace duval
