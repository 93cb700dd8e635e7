#pragma once

// Truncated formal power series in t, s (and u) with coefficients in R_g.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "confcoh/errors.hpp"
#include "confcoh/repr.hpp"

namespace confcoh::series {

using repr::VirtualRep;

/// Keeps terms whose u-exponent (last slot) is at most the truncation order.
struct UTruncation {
    template <std::size_t N>
    static bool admits(const std::array<int, N>& key, int order) {
        return key[N - 1] <= order;
    }
};

/// Keeps terms whose total degree is at most the truncation order.
struct TotalTruncation {
    template <std::size_t N>
    static bool admits(const std::array<int, N>& key, int order) {
        int total = 0;
        for (int e : key) total += e;
        return total <= order;
    }
};

template <std::size_t N, class Truncation>
class Series {
public:
    using Key = std::array<int, N>;
    using Coeffs = std::map<Key, VirtualRep>;

    explicit Series(int order) : order_(order) {
        if (order < 0) throw InvalidArgument("truncation order must be >= 0");
    }

    static Series monomial(int order, const Key& key, const VirtualRep& coeff = VirtualRep::scalar(1)) {
        Series s(order);
        s.add_term(key, coeff);
        return s;
    }

    int order() const { return order_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    bool admits(const Key& key) const {
        for (int e : key)
            if (e < 0) return false;
        return Truncation::admits(key, order_);
    }

    /// Terms beyond the truncation order are dropped silently.
    void add_term(const Key& key, const VirtualRep& coeff) {
        if (coeff.empty() || !admits(key)) return;
        auto [it, inserted] = coeffs_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.empty()) coeffs_.erase(it);
        }
    }

    VirtualRep coeff(const Key& key) const {
        auto it = coeffs_.find(key);
        return it == coeffs_.end() ? VirtualRep{} : it->second;
    }

    /// True when some coefficient has a non-trivial label.
    bool has_virtual_coefficients() const {
        return std::any_of(coeffs_.begin(), coeffs_.end(), [](const auto& t) { return !t.second.is_scalar(); });
    }

    Series truncated(int order) const {
        Series out(std::min(order, order_));
        for (const auto& [k, c] : coeffs_) out.add_term(k, c);
        return out;
    }

    Series& operator+=(const Series& other) {
        if (other.order_ < order_) *this = truncated(other.order_);
        for (const auto& [k, c] : other.coeffs_) add_term(k, c);
        return *this;
    }

    Series& operator*=(const Integer& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [k, v] : coeffs_) v *= c;
        return *this;
    }

    bool operator==(const Series&) const = default;

private:
    int order_;
    Coeffs coeffs_;
};

template <std::size_t N, class T>
Series<N, T> operator+(Series<N, T> a, const Series<N, T>& b) {
    return a += b;
}

template <std::size_t N, class T>
Series<N, T> operator-(Series<N, T> a) {
    return a *= -1;
}

template <std::size_t N, class T>
Series<N, T> operator-(Series<N, T> a, const Series<N, T>& b) {
    return a += -b;
}

template <std::size_t N, class T>
Series<N, T> operator*(const Integer& c, Series<N, T> a) {
    return a *= c;
}

/// Multiply every coefficient by a representation. Allowed only when the
/// series or the factor is scalar.
template <std::size_t N, class T>
Series<N, T> scalar_mul(const Series<N, T>& a, const VirtualRep& factor) {
    Series<N, T> out(a.order());
    if (factor.is_scalar()) {
        for (const auto& [k, c] : a.coeffs()) out.add_term(k, factor.scalar_value() * c);
        return out;
    }
    if (a.has_virtual_coefficients()) throw BothSidesVirtual("scalar_mul: both sides carry representation labels");
    for (const auto& [k, c] : a.coeffs()) out.add_term(k, c.scalar_value() * factor);
    return out;
}

/// Cauchy product truncated at the smaller order. At most one factor may carry
/// non-scalar coefficients.
template <std::size_t N, class T>
Series<N, T> mul(const Series<N, T>& a, const Series<N, T>& b) {
    const bool a_virtual = a.has_virtual_coefficients();
    const bool b_virtual = b.has_virtual_coefficients();
    if (a_virtual && b_virtual) throw BothSidesVirtual("series product with representation coefficients on both sides");
    Series<N, T> out(std::min(a.order(), b.order()));
    for (const auto& [ka, ca] : a.coeffs()) {
        for (const auto& [kb, cb] : b.coeffs()) {
            typename Series<N, T>::Key key;
            for (std::size_t d = 0; d < N; ++d) key[d] = ka[d] + kb[d];
            if (!out.admits(key)) continue;
            if (b_virtual)
                out.add_term(key, ca.scalar_value() * cb);
            else
                out.add_term(key, cb.scalar_value() * ca);
        }
    }
    return out;
}

template <std::size_t N, class T>
Series<N, T> operator*(const Series<N, T>& a, const Series<N, T>& b) {
    return mul(a, b);
}

/// Series in t, s, u truncated at u <= order. Keys are (t, s, u).
using TriSeries = Series<3, UTruncation>;
/// Series in t, s truncated at t + s <= order. Keys are (t, s).
using BiSeries = Series<2, TotalTruncation>;

/// 1 + t^a s^b u^c shorthand used throughout the formula code.
TriSeries one_plus(int order, int t, int s, int u);
BiSeries one_plus(int order, int t, int s);

/// sum_{n <= order} u^n
TriSeries geom_u(int order);

/// Coefficient of u^n as a map (t, s) -> rep.
std::map<std::array<int, 2>, VirtualRep> coeff_u(const TriSeries& series, int n);

/// P(t, s) -> P(t u, s u) as a series truncated at u <= order.
TriSeries substitute_tu_su(const BiSeries& p, int order);

}  // namespace confcoh::series
