#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "duval/error.hpp"
#include "duval/rational.hpp"

namespace duval {

enum class DynkinKind { A, D, E };

/// ADE label of a Du Val point. Ranks above 8 cannot occur on a del Pezzo
/// surface of degree 1, so they are rejected at construction.
class DynkinType {
public:
    DynkinType(DynkinKind kind, int rank) : kind_(kind), rank_(rank) {
        if (!admissible(kind, rank)) {
            throw OutOfRange("no Du Val type " + std::string(1, letter(kind)) +
                             std::to_string(rank) + " on a degree-1 del Pezzo surface");
        }
    }

    static constexpr bool admissible(DynkinKind kind, int rank) noexcept {
        switch (kind) {
            case DynkinKind::A: return rank >= 1 && rank <= 8;
            case DynkinKind::D: return rank >= 4 && rank <= 8;
            case DynkinKind::E: return rank >= 6 && rank <= 8;
        }
        return false;
    }

    static constexpr char letter(DynkinKind kind) noexcept {
        switch (kind) {
            case DynkinKind::A: return 'A';
            case DynkinKind::D: return 'D';
            case DynkinKind::E: return 'E';
        }
        return '?';
    }

    DynkinKind kind() const noexcept { return kind_; }
    int rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(rank_); }

    bool is(DynkinKind kind, int rank) const noexcept { return kind_ == kind && rank_ == rank; }
    bool is_exceptional() const noexcept { return kind_ == DynkinKind::E; }

    std::string label() const { return std::string(1, letter(kind_)) + std::to_string(rank_); }

    friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
    friend bool operator==(const DynkinType&, const DynkinType&) = default;

private:
    DynkinKind kind_;
    int rank_;
};

inline DynkinType parse_dynkin(std::string_view label) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    label = trim(label);
    if (label.size() < 2) throw MalformedLabel("malformed Dynkin label '" + std::string(label) + "'");

    DynkinKind kind;
    switch (std::toupper(static_cast<unsigned char>(label[0]))) {
        case 'A': kind = DynkinKind::A; break;
        case 'D': kind = DynkinKind::D; break;
        case 'E': kind = DynkinKind::E; break;
        default: throw MalformedLabel("malformed Dynkin label '" + std::string(label) + "'");
    }
    std::string_view digits = label.substr(1);
    if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c)) != 0;
        })) {
        throw MalformedLabel("malformed Dynkin label '" + std::string(label) + "'");
    }
    const int rank = std::stoi(std::string(digits));
    return DynkinType(kind, rank);
}

/// The 18 admissible types in label order A1..A8, D4..D8, E6..E8.
inline std::vector<DynkinType> all_dynkin_types() {
    std::vector<DynkinType> out;
    for (int n = 1; n <= 8; ++n) out.emplace_back(DynkinKind::A, n);
    for (int n = 4; n <= 8; ++n) out.emplace_back(DynkinKind::D, n);
    for (int n = 6; n <= 8; ++n) out.emplace_back(DynkinKind::E, n);
    return out;
}

/// Dense square integer matrix. Used for intersection forms E_i.E_j.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<int>> rows) {
        n_ = rows.size();
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw std::invalid_argument("IntegerMatrix: rows must be square");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t size() const noexcept { return n_; }
    int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    std::vector<int> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)};
    }

    /// M * v
    std::vector<int> apply(const std::vector<int>& v) const {
        std::vector<int> out(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    /// v^T M w
    int form(const std::vector<int>& v, const std::vector<int>& w) const {
        int acc = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) acc += v[i] * (*this)(i, j) * w[j];
        return acc;
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<int> data_;
};

namespace detail {

// Edges of the Dynkin diagram, 0-based, in the fixed node order:
//   A_n: chain 1-2-...-n
//   D_n: chain 1-...-(n-2), nodes n-1 and n on node n-2
//   E_n: chain 1-...-(n-1), node n on node 3 (E6), 4 (E7), 5 (E8)
inline std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges(const DynkinType& t) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const auto n = t.size();
    switch (t.kind()) {
        case DynkinKind::A:
            for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case DynkinKind::D:
            for (std::size_t i = 0; i + 3 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 3, n - 2);
            edges.emplace_back(n - 3, n - 1);
            break;
        case DynkinKind::E: {
            for (std::size_t i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
            const std::size_t branch = n - 4;  // 1-based node n-3: 3, 4, 5
            edges.emplace_back(branch, n - 1);
            break;
        }
    }
    return edges;
}

}  // namespace detail

/// Negative Cartan matrix (E_i . E_j) in the fixed node order.
inline IntegerMatrix intersection_matrix(const DynkinType& t) {
    IntegerMatrix m(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) m(i, i) = -2;
    for (auto [i, j] : detail::dynkin_edges(t)) {
        m(i, j) = 1;
        m(j, i) = 1;
    }
    return m;
}

/// Leading principal minors det_1..det_n, computed exactly by fraction-free
/// (Bareiss) elimination. Stops early (returning fewer minors) once a minor
/// vanishes, since elimination cannot continue past a zero pivot.
inline std::vector<Integer> leading_principal_minors(const IntegerMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

    std::vector<Integer> minors;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(a[k][k]);
        if (a[k][k] == 0) break;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return minors;
}

inline bool is_negative_definite(const IntegerMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric("intersection matrix is not symmetric");
    if (m.size() == 0) return false;
    const auto minors = leading_principal_minors(m);
    if (minors.size() != m.size()) return false;
    for (std::size_t k = 0; k < minors.size(); ++k) {
        const Integer signed_minor = (k % 2 == 0) ? Integer(-minors[k]) : minors[k];
        if (signed_minor <= 0) return false;
    }
    return true;
}

}  // namespace duval
