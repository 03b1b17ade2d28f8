#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duval/rational.hpp"

namespace duval {

// ---------------------------------------------------------------------------
// Univariate polynomials over Q
// ---------------------------------------------------------------------------

/// Dense univariate polynomial, coefficients from the constant term up.
/// The zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(const Rational& constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) c_.push_back(constant);
    }

    static UPoly monomial(const Rational& c, std::size_t degree) {
        std::vector<Rational> v(degree + 1, Rational(0));
        v[degree] = c;
        return UPoly(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree, with -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    Rational eval(const Rational& v) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    UPoly derivative() const {
        std::vector<Rational> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long long>(k)));
        return UPoly(std::move(d));
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        UPoly out = *this;
        const Rational l = lead();
        for (auto& v : out.c_) v /= l;
        return out;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a) {
        UPoly out = a;
        for (auto& v : out.c_) v = -v;
        return out;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(v));
    }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw std::domain_error("UPoly division by zero");
        if (a.degree() < b.degree()) return {UPoly{}, a};
        std::vector<Rational> r = a.c_;
        std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
        const std::size_t db = static_cast<std::size_t>(b.degree());
        for (std::size_t k = q.size(); k-- > 0;) {
            const Rational f = r[k + db] / b.lead();
            q[k] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.c_[j];
        }
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

    /// Monic gcd; gcd(0, 0) = 0.
    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Rational root with its multiplicity.
struct RationalRoot {
    Rational value;
    int multiplicity;
};

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace detail

/// All rational roots of a nonzero polynomial, with multiplicities, sorted by
/// value. Candidates come from the rational root theorem applied to the
/// primitive integer form of the squarefree part.
inline std::vector<RationalRoot> rational_roots(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
    std::vector<RationalRoot> roots;
    UPoly rest = p;

    int zero_mult = 0;
    while (!rest.is_zero() && rest.coeff(0) == 0) {
        rest = rest / UPoly(std::vector<Rational>{0, 1});
        ++zero_mult;
    }
    if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});
    if (rest.degree() <= 0) return roots;

    const UPoly sqfree = rest / UPoly::gcd(rest, rest.derivative());
    Integer den_lcm = 1;
    for (const auto& c : sqfree.coeffs()) den_lcm = integer_lcm(den_lcm, boost::multiprecision::denominator(c));
    const Integer a0 = boost::multiprecision::numerator(sqfree.coeffs().front() * den_lcm);
    const Integer an = boost::multiprecision::numerator(sqfree.lead() * den_lcm);

    const auto ps = detail::positive_divisors(a0);
    const auto qs = detail::positive_divisors(an);
    for (const auto& q : qs) {
        for (const auto& pp : ps) {
            if (integer_gcd(pp, q) != 1) continue;
            for (int sign : {1, -1}) {
                const Rational cand(Integer(sign) * pp, q);
                if (sqfree.eval(cand) != 0) continue;
                int mult = 0;
                const UPoly lin(std::vector<Rational>{-cand, 1});
                while (rest.eval(cand) == 0) {
                    rest = rest / lin;
                    ++mult;
                }
                roots.push_back({cand, mult});
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
    return roots;
}

// ---------------------------------------------------------------------------
// Bivariate polynomials over Q
// ---------------------------------------------------------------------------

/// Sparse polynomial in x and y; keys are (deg_x, deg_y). No zero terms stored.
class Poly {
public:
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, Rational>;

    Poly() = default;
    Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) t_[{0, 0}] = c;
    }
    Poly(long long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly x() { return monomial(1, 1, 0); }
    static Poly y() { return monomial(1, 0, 1); }
    static Poly monomial(const Rational& c, int a, int b) {
        Poly p;
        if (c != 0) p.t_[{a, b}] = c;
        return p;
    }

    const Terms& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }

    Rational coeff(int a, int b) const {
        auto it = t_.find({a, b});
        return it == t_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coeff(0, 0); }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
        return d;
    }
    int degree_x() const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.first);
        return d;
    }
    int degree_y() const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.second);
        return d;
    }

    /// Multiplicity at the origin: lowest total degree of a term.
    int order() const {
        if (t_.empty()) throw std::domain_error("order of the zero polynomial");
        int d = total_degree();
        for (const auto& [e, c] : t_) d = std::min(d, e.first + e.second);
        return d;
    }

    /// Lowest-degree homogeneous part (the tangent cone).
    Poly initial_form() const {
        const int m = order();
        Poly out;
        for (const auto& [e, c] : t_)
            if (e.first + e.second == m) out.t_[e] = c;
        return out;
    }

    Poly dx() const {
        Poly out;
        for (const auto& [e, c] : t_)
            if (e.first > 0) out.t_[{e.first - 1, e.second}] = c * Rational(e.first);
        return out;
    }
    Poly dy() const {
        Poly out;
        for (const auto& [e, c] : t_)
            if (e.second > 0) out.t_[{e.first, e.second - 1}] = c * Rational(e.second);
        return out;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [e, c] : b.t_) out.add_term(e, c);
        return out;
    }
    friend Poly operator-(const Poly& a) {
        Poly out = a;
        for (auto& [e, c] : out.t_) c = -c;
        return out;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return out;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned e) const {
        Poly result(1), base = *this;
        while (e) {
            if (e & 1U) result *= base;
            base *= base;
            e >>= 1U;
        }
        return result;
    }

    /// f(px, py).
    Poly substitute(const Poly& px, const Poly& py) const {
        std::map<int, Poly> xpow, ypow;
        auto power = [](std::map<int, Poly>& cache, const Poly& base, int e) -> const Poly& {
            auto it = cache.find(e);
            if (it == cache.end()) it = cache.emplace(e, base.pow(static_cast<unsigned>(e))).first;
            return it->second;
        };
        Poly out;
        for (const auto& [e, c] : t_) out += Poly(c) * power(xpow, px, e.first) * power(ypow, py, e.second);
        return out;
    }

    /// Chart x = u, y = u v of the blowup of the origin, divided by u^m.
    Poly blowup_chart_x(int m) const {
        Poly out;
        for (const auto& [e, c] : t_) {
            const int du = e.first + e.second - m;
            if (du < 0) throw std::domain_error("blowup: exponent below multiplicity");
            out.t_[{du, e.second}] = c;
        }
        return out;
    }

    /// Chart x = u v, y = v of the blowup of the origin, divided by v^m.
    Poly blowup_chart_y(int m) const {
        Poly out;
        for (const auto& [e, c] : t_) {
            const int dv = e.first + e.second - m;
            if (dv < 0) throw std::domain_error("blowup: exponent below multiplicity");
            out.t_[{e.first, dv}] = c;
        }
        return out;
    }

    /// f(x, y + c).
    Poly shift_y(const Rational& c) const {
        if (c == 0) return *this;
        return substitute(x(), y() + Poly(c));
    }

    /// f(0, y) as a univariate polynomial in y.
    UPoly restrict_x0() const {
        std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_y(), 0) + 1), Rational(0));
        for (const auto& [e, c] : t_)
            if (e.first == 0) v[static_cast<std::size_t>(e.second)] = c;
        return UPoly(std::move(v));
    }

    /// Swap the roles of x and y.
    Poly swapped() const {
        Poly out;
        for (const auto& [e, c] : t_) out.t_[{e.second, e.first}] = c;
        return out;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // descending total degree, then descending x degree
        std::vector<std::pair<Exponent, Rational>> ordered(t_.begin(), t_.end());
        std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
            const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
            if (da != db) return da > db;
            return a.first.first > b.first.first;
        });
        for (const auto& [e, c] : ordered) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            const bool unit = mag == 1;
            const bool has_var = e.first > 0 || e.second > 0;
            if (!unit || !has_var) os << to_fraction_string(mag);
            bool need_star = !unit && has_var;
            auto var = [&](char name, int p) {
                if (p == 0) return;
                if (need_star) os << "*";
                os << name;
                if (p > 1) os << "^" << p;
                need_star = true;
            };
            var('x', e.first);
            var('y', e.second);
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void add_term(const Exponent& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = t_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Terms t_;
};

// ---------------------------------------------------------------------------
// Bivariate gcd (recursive primitive remainder sequence over Q[x][y])
// ---------------------------------------------------------------------------

namespace detail {

using YPoly = std::vector<UPoly>;  // coefficient of y^k is an element of Q[x]

inline void trim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline YPoly to_recursive(const Poly& f) {
    YPoly out(static_cast<std::size_t>(std::max(f.degree_y(), 0) + 1));
    for (const auto& [e, c] : f.terms())
        out[static_cast<std::size_t>(e.second)] =
            out[static_cast<std::size_t>(e.second)] + UPoly::monomial(c, static_cast<std::size_t>(e.first));
    trim(out);
    return out;
}

inline Poly from_recursive(const YPoly& p) {
    Poly out;
    for (std::size_t k = 0; k < p.size(); ++k)
        for (std::size_t j = 0; j < p[k].coeffs().size(); ++j)
            out += Poly::monomial(p[k].coeffs()[j], static_cast<int>(j), static_cast<int>(k));
    return out;
}

inline UPoly content(const YPoly& p) {
    UPoly g;
    for (const auto& c : p) g = UPoly::gcd(g, c);
    return g;
}

inline YPoly divide_coeffs(const YPoly& p, const UPoly& d) {
    YPoly out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c / d);
    return out;
}

// pseudo-remainder of a by b in y
inline YPoly pseudo_remainder(YPoly a, const YPoly& b) {
    const std::size_t db = b.size() - 1;
    const UPoly& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const UPoly la = a.back();
        for (auto& c : a) c = c * lb;
        for (std::size_t j = 0; j <= db; ++j) a[j + shift] = a[j + shift] - la * b[j];
        trim(a);
    }
    return a;
}

}  // namespace detail

/// Greatest common divisor in Q[x, y], normalised to have leading coefficient 1
/// in y (then x). gcd(0, 0) = 0.
inline Poly gcd(const Poly& f, const Poly& g) {
    using namespace detail;
    YPoly a = to_recursive(f), b = to_recursive(g);
    if (a.empty()) std::swap(a, b);
    if (a.empty()) return {};
    if (b.empty()) return from_recursive(divide_coeffs(a, UPoly(a.back().lead())));

    const UPoly ca = content(a), cb = content(b);
    const UPoly c = UPoly::gcd(ca, cb);
    YPoly pa = divide_coeffs(a, ca), pb = divide_coeffs(b, cb);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (!pb.empty()) {
        YPoly r = pseudo_remainder(pa, pb);
        pa = std::move(pb);
        if (r.empty()) {
            pb.clear();
            break;
        }
        pb = divide_coeffs(r, content(r));
    }
    YPoly h = divide_coeffs(pa, content(pa));
    for (auto& coef : h) coef = coef * c;
    const Rational lead = h.back().lead();
    for (auto& coef : h) coef = coef * UPoly(Rational(1) / lead);
    return from_recursive(h);
}

inline bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    const Poly g = gcd(gcd(f, f.dx()), f.dy());
    return g.total_degree() <= 0;
}

}  // namespace duval
