#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "duval/cycles.hpp"
#include "duval/error.hpp"
#include "duval/polynomial.hpp"
#include "duval/rational.hpp"

namespace duval {

/// A log canonical threshold: an exact rational in (0, 1].
class Threshold {
public:
    explicit Threshold(Rational v) : value_(std::move(v)) {
        if (value_ <= 0 || value_ > 1) {
            throw std::domain_error("threshold " + to_fraction_string(value_) + " outside (0, 1]");
        }
    }

    const Rational& value() const noexcept { return value_; }
    std::string str() const { return to_fraction_string(value_); }

    friend auto operator<=>(const Threshold& a, const Threshold& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Threshold& a, const Threshold& b) { return a.value_ == b.value_; }
    friend bool operator==(const Threshold& a, const Rational& b) { return a.value_ == b; }

private:
    Rational value_;
};

/// Plane curve germ at the origin of A^2.
class CurveGerm {
public:
    explicit CurveGerm(Poly poly) : poly_(std::move(poly)) {
        if (poly_.is_zero()) throw ZeroGerm("the zero polynomial does not define a curve germ");
        if (poly_.constant_term() != 0) {
            throw NotAtOrigin("germ " + poly_.str() + " does not pass through the origin");
        }
    }

    const Poly& poly() const noexcept { return poly_; }
    int multiplicity() const { return poly_.order(); }

private:
    Poly poly_;
};

/// A reduced curve entering a divisor with a positive integer weight.
struct WeightedCurve {
    Poly poly;
    int weight = 1;
};

/// Exceptional divisor of the embedded resolution. `discrepancy` is k_E in
/// K_Y = pi^*K_X + sum k_E E and `order` is ord_E of the pulled-back divisor.
struct BlowupNode {
    int discrepancy;
    int order;
    std::vector<BlowupNode> children;

    Rational log_ratio() const { return Rational(discrepancy + 1, order); }
};

struct LogResolution {
    std::vector<BlowupNode> roots;
    int depth = 0;
    int blowups = 0;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        std::vector<const BlowupNode*> stack;
        for (const auto& r : roots) stack.push_back(&r);
        while (!stack.empty()) {
            const BlowupNode* n = stack.back();
            stack.pop_back();
            fn(*n);
            for (const auto& c : n->children) stack.push_back(&c);
        }
    }
};

inline constexpr int blowup_depth_cap = 64;

namespace detail {

struct ExceptionalData {
    int discrepancy;
    int order;
};

// A point of some blowup, in local coordinates centred at it. Exceptional
// divisors through the point are always coordinate axes.
struct LocalPoint {
    std::vector<WeightedCurve> curves;      // only curves through the point
    std::optional<ExceptionalData> on_x0;   // exceptional divisor {x = 0}
    std::optional<ExceptionalData> on_y0;   // exceptional divisor {y = 0}
};

inline bool passes_origin(const Poly& p) { return p.constant_term() == 0; }

// (coefficient of x, coefficient of y) of the tangent line of a smooth germ.
inline std::pair<Rational, Rational> tangent(const Poly& p) {
    return {p.coeff(1, 0), p.coeff(0, 1)};
}

inline bool is_snc_at_origin(const LocalPoint& pt) {
    const std::size_t count = pt.curves.size() + (pt.on_x0 ? 1 : 0) + (pt.on_y0 ? 1 : 0);
    for (const auto& c : pt.curves)
        if (c.poly.order() != 1) return false;
    if (count <= 1) return true;
    if (count >= 3) return false;

    std::vector<std::pair<Rational, Rational>> lines;
    for (const auto& c : pt.curves) lines.push_back(tangent(c.poly));
    if (pt.on_x0) lines.emplace_back(Rational(1), Rational(0));
    if (pt.on_y0) lines.emplace_back(Rational(0), Rational(1));
    return lines[0].first * lines[1].second - lines[0].second * lines[1].first != 0;
}

class Resolver {
public:
    LogResolution run(const std::vector<WeightedCurve>& curves) {
        LocalPoint origin;
        for (const auto& c : curves)
            if (passes_origin(c.poly)) origin.curves.push_back(c);
        LogResolution out;
        if (auto node = resolve(origin, 1)) out.roots.push_back(std::move(*node));
        out.depth = max_depth_;
        out.blowups = blowups_;
        return out;
    }

private:
    std::optional<BlowupNode> resolve(const LocalPoint& pt, int depth) {
        if (is_snc_at_origin(pt)) return std::nullopt;
        if (depth > blowup_depth_cap) {
            throw DepthExceeded("blowup tree deeper than " + std::to_string(blowup_depth_cap));
        }
        max_depth_ = std::max(max_depth_, depth);
        ++blowups_;

        BlowupNode node{1, 0, {}};
        std::vector<int> orders;
        for (const auto& c : pt.curves) {
            orders.push_back(c.poly.order());
            node.order += c.weight * orders.back();
        }
        for (const auto* e : {&pt.on_x0, &pt.on_y0}) {
            if (*e) {
                node.discrepancy += (*e)->discrepancy;
                node.order += (*e)->order;
            }
        }
        const ExceptionalData fresh{node.discrepancy, node.order};

        // Chart x = u, y = uv covers every point of the new divisor except the
        // direction of the x = 0 axis.
        std::vector<WeightedCurve> chart_x;
        UPoly cone_product(Rational(1));
        std::vector<Rational> centres;
        for (std::size_t i = 0; i < pt.curves.size(); ++i) {
            WeightedCurve st{pt.curves[i].poly.blowup_chart_x(orders[i]), pt.curves[i].weight};
            const UPoly cone = st.poly.restrict_x0();
            cone_product = cone_product * cone;
            for (const auto& r : rational_roots(cone)) centres.push_back(r.value);
            chart_x.push_back(std::move(st));
        }
        check_irrational_part(cone_product);

        std::sort(centres.begin(), centres.end());
        centres.erase(std::unique(centres.begin(), centres.end()), centres.end());
        for (const auto& c : centres) {
            LocalPoint next;
            next.on_x0 = fresh;
            if (c == 0) next.on_y0 = pt.on_y0;
            for (const auto& st : chart_x) {
                Poly shifted = st.poly.shift_y(c);
                if (passes_origin(shifted)) next.curves.push_back({std::move(shifted), st.weight});
            }
            if (auto child = resolve(next, depth + 1)) node.children.push_back(std::move(*child));
        }

        // Chart x = uv, y = v: only its origin is new.
        LocalPoint at_infinity;
        at_infinity.on_y0 = fresh;
        at_infinity.on_x0 = pt.on_x0;
        for (std::size_t i = 0; i < pt.curves.size(); ++i) {
            Poly st = pt.curves[i].poly.blowup_chart_y(orders[i]);
            if (passes_origin(st)) at_infinity.curves.push_back({std::move(st), pt.curves[i].weight});
        }
        if (!at_infinity.curves.empty()) {
            if (auto child = resolve(at_infinity, depth + 1)) node.children.push_back(std::move(*child));
        }
        return node;
    }

    // Points of the new divisor with irrational coordinate are harmless when a
    // single smooth branch crosses there transversally (simple root of the
    // combined cone). Anything else would need an algebraic extension.
    static void check_irrational_part(UPoly p) {
        for (const auto& r : rational_roots(p)) {
            const UPoly lin(std::vector<Rational>{-r.value, 1});
            for (int k = 0; k < r.multiplicity; ++k) p = p / lin;
        }
        if (p.degree() <= 0) return;
        if (UPoly::gcd(p, p.derivative()).degree() > 0) {
            throw IrrationalCluster(
                "infinitely near point with irrational coordinates carries a non-simple contact");
        }
    }

    int max_depth_ = 0;
    int blowups_ = 0;
};

inline Poly product(std::span<const WeightedCurve> curves) {
    Poly p(1);
    for (const auto& c : curves) p *= c.poly;
    return p;
}

}  // namespace detail

/// Embedded log resolution of a weighted divisor sum w_i C_i at the origin,
/// grown until the total transform is simple normal crossing everywhere.
inline LogResolution log_resolution(std::span<const WeightedCurve> curves) {
    for (const auto& c : curves) {
        if (c.weight <= 0) throw std::invalid_argument("curve weights must be positive");
        if (c.poly.is_zero()) throw ZeroGerm("zero curve in divisor");
    }
    if (!is_squarefree(detail::product(curves))) {
        throw NonSquarefree("divisor has a repeated component; pass it once with a larger weight");
    }
    return detail::Resolver{}.run({curves.begin(), curves.end()});
}

/// lct of sum w_i C_i at the origin: min of 1/w_i and (k_E + 1)/ord_E over the
/// exceptional divisors of the log resolution.
inline Threshold lct_divisor(std::span<const WeightedCurve> curves) {
    bool any_through_origin = false;
    Rational best = 1;
    for (const auto& c : curves) {
        if (c.poly.constant_term() == 0) {
            any_through_origin = true;
            best = std::min(best, Rational(1, c.weight));
        }
    }
    if (!any_through_origin) throw NotAtOrigin("no component of the divisor passes through the origin");
    const LogResolution res = log_resolution(curves);
    res.for_each([&](const BlowupNode& n) { best = std::min(best, n.log_ratio()); });
    return Threshold(best);
}

inline Threshold lct_germ(const CurveGerm& g) {
    const WeightedCurve c{g.poly(), 1};
    return lct_divisor(std::span<const WeightedCurve>(&c, 1));
}

inline LogResolution log_resolution(const CurveGerm& g) {
    const WeightedCurve c{g.poly(), 1};
    return log_resolution(std::span<const WeightedCurve>(&c, 1));
}

// ---------------------------------------------------------------------------
// Quasi-homogeneous oracle
// ---------------------------------------------------------------------------

struct QuasiWeights {
    int wx;
    int wy;
    int degree;
};

/// Smallest positive integer weights making every monomial of g weighted
/// homogeneous of the same degree.
inline QuasiWeights quasihomogeneous_weights(const Poly& g) {
    const auto& terms = g.terms();
    if (terms.empty()) throw NotQuasihomogeneous("zero polynomial");
    const auto first = terms.begin()->first;
    if (terms.size() == 1) {
        return {1, 1, first.first + first.second};
    }
    std::optional<QuasiWeights> w;
    for (const auto& [e, c] : terms) {
        if (e == first) continue;
        const long long da = e.first - first.first;
        const long long db = e.second - first.second;
        // need da*wx + db*wy = 0 with wx, wy > 0
        if (da == 0 || db == 0 || (da > 0) == (db > 0)) {
            throw NotQuasihomogeneous("no positive weights make " + g.str() + " weighted homogeneous");
        }
        long long wx = db < 0 ? -db : db;
        long long wy = da < 0 ? -da : da;
        const long long gcd = std::gcd(wx, wy);
        wx /= gcd;
        wy /= gcd;
        if (!w) {
            w = QuasiWeights{static_cast<int>(wx), static_cast<int>(wy), 0};
        } else if (w->wx != wx || w->wy != wy) {
            throw NotQuasihomogeneous(g.str() + " is not weighted homogeneous");
        }
    }
    w->degree = first.first * w->wx + first.second * w->wy;
    return *w;
}

/// min(1, (w_x + w_y) / d) for a reduced quasi-homogeneous germ.
inline Threshold lct_quasihomogeneous(const CurveGerm& g) {
    if (!is_squarefree(g.poly())) throw NonSquarefree("germ " + g.poly().str() + " is not reduced");
    const QuasiWeights w = quasihomogeneous_weights(g.poly());
    return Threshold(std::min(Rational(1), Rational(w.wx + w.wy, w.degree)));
}

// ---------------------------------------------------------------------------
// Germ classification
// ---------------------------------------------------------------------------

enum class GermClass { Smooth, Node, Cusp, Other };

inline std::string to_string(GermClass c) {
    switch (c) {
        case GermClass::Smooth: return "smooth";
        case GermClass::Node: return "node";
        case GermClass::Cusp: return "cusp";
        case GermClass::Other: return "other";
    }
    return "?";
}

inline GermClass classify_germ(const CurveGerm& g) {
    const Poly& f = g.poly();
    if (!is_squarefree(f)) throw NonSquarefree("germ " + f.str() + " is not reduced");
    const int m = f.order();
    if (m == 1) return GermClass::Smooth;
    if (m != 2) return GermClass::Other;

    const Poly cone = f.initial_form();
    const Rational a = cone.coeff(2, 0), b = cone.coeff(1, 1), c = cone.coeff(0, 2);
    if (b * b - 4 * a * c != 0) return GermClass::Node;

    // One double tangent line. Blow up once and look at the strict transform
    // where it meets the exceptional curve.
    Poly strict;
    if (c == 0) {
        // tangent line x = 0: origin of the chart x = uv, y = v
        strict = f.blowup_chart_y(2);
    } else {
        const Rational slope = -b / (2 * c);
        strict = f.blowup_chart_x(2).shift_y(slope);
    }
    return strict.order() == 1 ? GermClass::Cusp : GermClass::Other;
}

// ---------------------------------------------------------------------------
// Thresholds of anticanonical configurations
// ---------------------------------------------------------------------------

/// Local equation of the divisor at one meeting point of the configuration,
/// as weighted curves in a chart centred there.
inline std::vector<WeightedCurve> local_model(const AnticanonicalConfiguration& c, const Incidence& rec) {
    auto weight_of = [&](int id) {
        try {
            return c.component(id).multiplicity;
        } catch (const std::out_of_range&) {
            throw Unrecognized("incidence record names unknown component " + std::to_string(id));
        }
    };
    std::vector<WeightedCurve> out;
    switch (rec.kind) {
        case IncidenceKind::Crossing: {
            if (rec.components.size() < 2 || rec.contact < 1) {
                throw Unrecognized("malformed crossing record");
            }
            // branches y = i * x^contact have pairwise contact order `contact`
            for (std::size_t i = 0; i < rec.components.size(); ++i) {
                const Poly branch =
                    Poly::y() - Poly::monomial(Rational(static_cast<long long>(i)), rec.contact, 0);
                out.push_back({branch, weight_of(rec.components[i])});
            }
            break;
        }
        case IncidenceKind::SelfNode:
            if (rec.components.size() != 1) throw Unrecognized("malformed node record");
            out.push_back({Poly::x() * Poly::y(), weight_of(rec.components[0])});
            break;
        case IncidenceKind::SelfCusp:
            if (rec.components.size() != 1) throw Unrecognized("malformed cusp record");
            out.push_back({Poly::y().pow(2) - Poly::x().pow(3), weight_of(rec.components[0])});
            break;
    }
    return out;
}

/// lct of K + c * (sum m_i C_i) on the resolved surface: the generic-point term
/// 1/m_i of each component and the germ-engine threshold at every meeting point.
inline Threshold lct_config(const AnticanonicalConfiguration& c) {
    if (c.components.empty()) throw Unrecognized("empty configuration");
    Rational best = 1;
    for (const auto& comp : c.components) {
        if (comp.multiplicity <= 0) throw Unrecognized("component with nonpositive multiplicity");
        best = std::min(best, Rational(1, comp.multiplicity));
    }
    for (const auto& rec : c.incidence) {
        const auto model = local_model(c, rec);
        best = std::min(best, lct_divisor(model).value());
    }
    return Threshold(best);
}

}  // namespace duval
