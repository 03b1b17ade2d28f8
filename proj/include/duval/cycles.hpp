#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "duval/dynkin.hpp"
#include "duval/error.hpp"

namespace duval {

// ---------------------------------------------------------------------------
// Fundamental cycles
// ---------------------------------------------------------------------------

/// Minimal positive cycle Z = sum a_i E_i with Z.E_j <= 0 for all j, stored in
/// the node order of intersection_matrix().
struct FundamentalCycle {
    DynkinType dynkin;
    std::vector<int> coeffs;

    int max_coefficient() const { return *std::max_element(coeffs.begin(), coeffs.end()); }
    int self_intersection() const { return intersection_matrix(dynkin).form(coeffs, coeffs); }

    friend bool operator==(const FundamentalCycle&, const FundamentalCycle&) = default;
};

/// Nonnegative vector d_j = D~.E_j of the (-1)-curve closing up the cycle.
struct AttachmentVector {
    DynkinType dynkin;
    std::vector<int> d;

    friend bool operator==(const AttachmentVector&, const AttachmentVector&) = default;
};

inline constexpr int laufer_iteration_cap = 50;

/// Laufer's sequence on an arbitrary negative-definite form: start at E_start and
/// keep adding the lowest-index E_j with Z.E_j > 0.
inline std::vector<int> laufer_cycle(const IntegerMatrix& m, std::size_t start = 0) {
    const std::size_t n = m.size();
    std::vector<int> z(n, 0);
    z.at(start) = 1;
    for (int step = 0; step < laufer_iteration_cap; ++step) {
        const std::vector<int> dots = m.apply(z);
        auto it = std::find_if(dots.begin(), dots.end(), [](int v) { return v > 0; });
        if (it == dots.end()) return z;
        ++z[static_cast<std::size_t>(it - dots.begin())];
    }
    throw NonTermination("Laufer sequence exceeded " + std::to_string(laufer_iteration_cap) +
                         " steps");
}

inline FundamentalCycle fundamental_cycle(const DynkinType& t) {
    return {t, laufer_cycle(intersection_matrix(t), 0)};
}

inline AttachmentVector attachment_vector(const DynkinType& t) {
    const FundamentalCycle cycle = fundamental_cycle(t);
    std::vector<int> d = intersection_matrix(t).apply(cycle.coeffs);
    for (int& v : d) v = -v;
    return {t, std::move(d)};
}

// ---------------------------------------------------------------------------
// Anticanonical configurations pi^*(D) = D~ + Gamma
// ---------------------------------------------------------------------------

/// How the strict transform meets the cycle at an A1 or A2 point. Every other
/// type has the single contact pattern `Standard`.
enum class Contact { Standard, Transverse, Tangential, TwoPoints, OnePoint };

/// Shape of D when it misses the singular locus.
enum class SmoothContact { Elliptic, Nodal, Cuspidal };

inline std::string to_string(Contact c) {
    switch (c) {
        case Contact::Standard: return "standard";
        case Contact::Transverse: return "transverse";
        case Contact::Tangential: return "tangential";
        case Contact::TwoPoints: return "two-points";
        case Contact::OnePoint: return "one-point";
    }
    return "?";
}

inline std::string to_string(SmoothContact c) {
    switch (c) {
        case SmoothContact::Elliptic: return "elliptic";
        case SmoothContact::Nodal: return "nodal";
        case SmoothContact::Cuspidal: return "cuspidal";
    }
    return "?";
}

inline std::vector<Contact> admissible_contacts(const DynkinType& t) {
    if (t.is(DynkinKind::A, 1)) return {Contact::Transverse, Contact::Tangential};
    if (t.is(DynkinKind::A, 2)) return {Contact::TwoPoints, Contact::OnePoint};
    return {Contact::Standard};
}

inline Contact default_contact(const DynkinType& t) { return admissible_contacts(t).front(); }

struct PointContact {
    DynkinType dynkin;
    Contact contact;
};

enum class ComponentKind { StrictTransform, Exceptional };

struct Component {
    int id;
    int multiplicity;
    ComponentKind kind;

    friend bool operator==(const Component&, const Component&) = default;
};

enum class IncidenceKind {
    Crossing,  ///< distinct components through one point, pairwise contact `contact`
    SelfNode,  ///< one component with an ordinary node
    SelfCusp,  ///< one component with an ordinary cusp
};

struct Incidence {
    IncidenceKind kind;
    std::vector<int> components;
    int contact = 1;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Combinatorial model of the total transform: components with multiplicities
/// plus one record per meeting point. Coordinates are not kept.
struct AnticanonicalConfiguration {
    std::optional<PointContact> point;  ///< empty when D misses the singular locus
    SmoothContact smooth = SmoothContact::Elliptic;
    std::vector<Component> components;
    std::vector<Incidence> incidence;

    const Component& component(int id) const {
        for (const auto& c : components)
            if (c.id == id) return c;
        throw std::out_of_range("no component with id " + std::to_string(id));
    }

    int max_multiplicity() const {
        int m = 0;
        for (const auto& c : components) m = std::max(m, c.multiplicity);
        return m;
    }

    /// C_i.C_j for i != j, summing contact orders over shared points.
    int intersection_number(int a, int b) const {
        int total = 0;
        for (const auto& rec : incidence) {
            if (rec.kind != IncidenceKind::Crossing) continue;
            const bool has_a = std::find(rec.components.begin(), rec.components.end(), a) != rec.components.end();
            const bool has_b = std::find(rec.components.begin(), rec.components.end(), b) != rec.components.end();
            if (has_a && has_b) total += rec.contact;
        }
        return total;
    }

    bool is_snc() const {
        return std::all_of(incidence.begin(), incidence.end(), [](const Incidence& r) {
            return r.kind == IncidenceKind::Crossing && r.components.size() == 2 && r.contact == 1;
        });
    }
};

inline constexpr int strict_transform_id = 0;

inline AnticanonicalConfiguration build_configuration(std::span<const PointContact> points,
                                                      SmoothContact smooth = SmoothContact::Elliptic) {
    if (points.size() > 1) {
        throw TooManyPoints("an anticanonical curve passes through at most one singular point");
    }

    AnticanonicalConfiguration config;
    config.components.push_back({strict_transform_id, 1, ComponentKind::StrictTransform});

    if (points.empty()) {
        config.smooth = smooth;
        switch (smooth) {
            case SmoothContact::Elliptic: break;
            case SmoothContact::Nodal:
                config.incidence.push_back({IncidenceKind::SelfNode, {strict_transform_id}, 1});
                break;
            case SmoothContact::Cuspidal:
                config.incidence.push_back({IncidenceKind::SelfCusp, {strict_transform_id}, 2});
                break;
        }
        return config;
    }

    const PointContact& pc = points.front();
    const auto allowed = admissible_contacts(pc.dynkin);
    if (std::find(allowed.begin(), allowed.end(), pc.contact) == allowed.end()) {
        throw VariantMismatch("contact '" + to_string(pc.contact) + "' is not defined for " +
                              pc.dynkin.label());
    }
    config.point = pc;

    const FundamentalCycle cycle = fundamental_cycle(pc.dynkin);
    const AttachmentVector attach = attachment_vector(pc.dynkin);
    for (std::size_t i = 0; i < cycle.coeffs.size(); ++i) {
        config.components.push_back(
            {static_cast<int>(i) + 1, cycle.coeffs[i], ComponentKind::Exceptional});
    }

    if (pc.contact == Contact::Tangential) {
        config.incidence.push_back({IncidenceKind::Crossing, {strict_transform_id, 1}, attach.d[0]});
        return config;
    }
    if (pc.contact == Contact::OnePoint) {
        config.incidence.push_back({IncidenceKind::Crossing, {strict_transform_id, 1, 2}, 1});
        return config;
    }

    for (auto [i, j] : detail::dynkin_edges(pc.dynkin)) {
        config.incidence.push_back(
            {IncidenceKind::Crossing, {static_cast<int>(i) + 1, static_cast<int>(j) + 1}, 1});
    }
    for (std::size_t j = 0; j < attach.d.size(); ++j) {
        for (int k = 0; k < attach.d[j]; ++k) {
            config.incidence.push_back(
                {IncidenceKind::Crossing, {strict_transform_id, static_cast<int>(j) + 1}, 1});
        }
    }
    return config;
}

inline AnticanonicalConfiguration build_configuration(const DynkinType& t, Contact contact) {
    const PointContact pc{t, contact};
    return build_configuration(std::span<const PointContact>(&pc, 1));
}

inline AnticanonicalConfiguration build_configuration(const DynkinType& t) {
    return build_configuration(t, default_contact(t));
}

inline AnticanonicalConfiguration build_smooth_configuration(SmoothContact smooth) {
    return build_configuration(std::span<const PointContact>{}, smooth);
}

/// Every configuration the builder can produce: all contact variants of the 18
/// types plus the three smooth-locus shapes.
inline std::vector<AnticanonicalConfiguration> all_configurations() {
    std::vector<AnticanonicalConfiguration> out;
    for (SmoothContact s : {SmoothContact::Elliptic, SmoothContact::Nodal, SmoothContact::Cuspidal})
        out.push_back(build_smooth_configuration(s));
    for (const auto& t : all_dynkin_types())
        for (Contact c : admissible_contacts(t)) out.push_back(build_configuration(t, c));
    return out;
}

// ---------------------------------------------------------------------------
// Kodaira fibre types
// ---------------------------------------------------------------------------

struct KodairaLabel {
    enum class Kind { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

    Kind kind;
    int index = 0;  ///< n for I_n, m for I*_m

    static KodairaLabel I(int n) { return {Kind::I, n}; }
    static KodairaLabel IStar(int m) {
        if (m < 0 || m > 4) throw std::invalid_argument("I*_m needs 0 <= m <= 4");
        return {Kind::IStar, m};
    }
    static KodairaLabel II() { return {Kind::II, 0}; }
    static KodairaLabel III() { return {Kind::III, 0}; }
    static KodairaLabel IV() { return {Kind::IV, 0}; }
    static KodairaLabel IVStar() { return {Kind::IVStar, 0}; }
    static KodairaLabel IIIStar() { return {Kind::IIIStar, 0}; }
    static KodairaLabel IIStar() { return {Kind::IIStar, 0}; }

    /// Number of irreducible components of the fibre.
    int component_count() const {
        switch (kind) {
            case Kind::I: return std::max(index, 1);
            case Kind::II: return 1;
            case Kind::III: return 2;
            case Kind::IV: return 3;
            case Kind::IStar: return index + 5;
            case Kind::IVStar: return 7;
            case Kind::IIIStar: return 8;
            case Kind::IIStar: return 9;
        }
        return 0;
    }

    std::string str() const {
        switch (kind) {
            case Kind::I: return "I" + std::to_string(index);
            case Kind::II: return "II";
            case Kind::III: return "III";
            case Kind::IV: return "IV";
            case Kind::IStar: return "I" + std::to_string(index) + "*";
            case Kind::IVStar: return "IV*";
            case Kind::IIIStar: return "III*";
            case Kind::IIStar: return "II*";
        }
        return "?";
    }

    friend bool operator==(const KodairaLabel&, const KodairaLabel&) = default;
};

inline KodairaLabel parse_kodaira(std::string_view s) {
    using K = KodairaLabel;
    if (s == "II") return K::II();
    if (s == "III") return K::III();
    if (s == "IV") return K::IV();
    if (s == "IV*") return K::IVStar();
    if (s == "III*") return K::IIIStar();
    if (s == "II*") return K::IIStar();
    if (s.size() >= 2 && s.front() == 'I' && std::isdigit(static_cast<unsigned char>(s[1]))) {
        const bool star = s.back() == '*';
        const std::string digits(s.substr(1, s.size() - 1 - (star ? 1 : 0)));
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(),
                                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            const int v = std::stoi(digits);
            return star ? K::IStar(v) : K::I(v);
        }
    }
    throw Unrecognized("unknown Kodaira label '" + std::string(s) + "'");
}

namespace detail {

// Multiplicities must be a kernel vector of the fibre's intersection form when
// every component is viewed as a (-2)-curve of the elliptic fibre.
inline bool multiplicities_in_kernel(const AnticanonicalConfiguration& c) {
    for (const auto& ci : c.components) {
        long long acc = -2LL * ci.multiplicity;
        for (const auto& cj : c.components)
            if (cj.id != ci.id) acc += 1LL * cj.multiplicity * c.intersection_number(ci.id, cj.id);
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace detail

/// Matches the total transform to Kodaira's list by reading only the
/// configuration: shape of the dual graph, contact data and multiplicities.
inline KodairaLabel kodaira_type(const AnticanonicalConfiguration& c) {
    using K = KodairaLabel;
    const std::size_t n = c.components.size();
    auto fail = [] { return Unrecognized("configuration matches no Kodaira fibre"); };

    if (n == 1) {
        if (c.components[0].multiplicity != 1 || c.incidence.size() > 1) throw fail();
        if (c.incidence.empty()) return K::I(0);
        const auto& rec = c.incidence.front();
        if (rec.kind == IncidenceKind::SelfNode) return K::I(1);
        if (rec.kind == IncidenceKind::SelfCusp) return K::II();
        throw fail();
    }

    for (const auto& rec : c.incidence)
        if (rec.kind != IncidenceKind::Crossing) throw fail();

    if (!c.is_snc()) {
        if (c.incidence.size() != 1) throw fail();
        const auto& rec = c.incidence.front();
        for (const auto& comp : c.components)
            if (comp.multiplicity != 1) throw fail();
        if (n == 2 && rec.components.size() == 2 && rec.contact == 2) return K::III();
        if (n == 3 && rec.components.size() == 3 && rec.contact == 1) return K::IV();
        throw fail();
    }

    if (!detail::multiplicities_in_kernel(c)) throw fail();

    // Dual graph with edge multiplicities.
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[c.components[i].id] = i;
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& rec : c.incidence) {
        const auto a = index.at(rec.components[0]);
        const auto b = index.at(rec.components[1]);
        if (a == b) throw fail();
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
            if (!seen[w]) seen[w] = true, stack.push_back(w);
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw fail();

    const std::size_t edges = c.incidence.size();
    if (edges == n) {
        // connected with one cycle: a wheel iff every vertex has degree two
        for (const auto& a : adj)
            if (a.size() != 2) throw fail();
        return K::I(static_cast<int>(n));
    }
    if (edges != n - 1) throw fail();

    std::vector<std::size_t> branch;
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() > 4) throw fail();
        if (adj[v].size() >= 3) branch.push_back(v);
    }

    if (branch.size() == 1 && adj[branch[0]].size() == 4) {
        if (n == 5) return K::IStar(0);
        throw fail();
    }
    if (branch.size() == 2) return K::IStar(static_cast<int>(n) - 5);
    if (branch.size() != 1) throw fail();

    // star-shaped tree: arm lengths from the branch node
    std::vector<int> arms;
    const auto centre = branch[0];
    for (auto first : adj[centre]) {
        int len = 1;
        std::size_t prev = centre, cur = first;
        while (adj[cur].size() == 2) {
            const auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms == std::vector<int>{2, 2, 2}) return K::IVStar();
    if (arms == std::vector<int>{1, 3, 3}) return K::IIIStar();
    if (arms == std::vector<int>{1, 2, 5}) return K::IIStar();
    throw fail();
}

}  // namespace duval
