#pragma once

// Test-side reference implementations, kept independent of the library code
// they check.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "confcoh/integer.hpp"
#include "confcoh/linalg.hpp"
#include "confcoh/repr.hpp"

namespace support {

using confcoh::Integer;
using confcoh::Rational;
using Weight = std::vector<int>;
using Char = std::map<Weight, Integer>;

// --- dense Bareiss rank ----------------------------------------------------

inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                a[r][k] = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
                mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<Integer>> to_dense(const confcoh::linalg::SparseIntMatrix& m) {
    std::vector<std::vector<Integer>> d(m.rows(), std::vector<Integer>(m.cols(), 0));
    for (const auto& e : m.entries()) d[e.row][e.col] = e.value;
    return d;
}

/// Random sparse matrix; with `rank_cap` > 0 it is a product of (rows x cap)
/// and (cap x cols) factors, so its rank is at most rank_cap.
inline confcoh::linalg::SparseIntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                      double density, int max_abs, std::size_t rank_cap = 0) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> value(-max_abs, max_abs);
    confcoh::linalg::SparseIntMatrix m(rows, cols);
    if (rank_cap == 0) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (coin(rng) < density) m.add(r, c, value(rng));
        return m;
    }
    std::vector<std::vector<int>> left(rows, std::vector<int>(rank_cap, 0));
    std::vector<std::vector<int>> right(rank_cap, std::vector<int>(cols, 0));
    for (auto& row : left)
        for (auto& x : row)
            if (coin(rng) < density) x = value(rng);
    for (auto& row : right)
        for (auto& x : row)
            if (coin(rng) < density) x = value(rng);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t k = 0; k < rank_cap; ++k)
            if (left[r][k] != 0)
                for (std::size_t c = 0; c < cols; ++c)
                    if (right[k][c] != 0) m.add(r, c, Integer(left[r][k]) * right[k][c]);
    return m;
}

// --- brute-force characters ------------------------------------------------

/// Weights of the standard representation: +e_k and -e_k.
inline std::vector<Weight> standard_weights(int g) {
    std::vector<Weight> out;
    for (int k = 0; k < g; ++k) {
        Weight plus(g, 0), minus(g, 0);
        plus[k] = 1;
        minus[k] = -1;
        out.push_back(plus);
        out.push_back(minus);
    }
    return out;
}

inline Weight add(Weight a, const Weight& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

inline void subsets(const std::vector<Weight>& w, std::size_t start, int left, Weight acc, Char& out) {
    if (left == 0) {
        out[acc] += 1;
        return;
    }
    for (std::size_t k = start; k < w.size(); ++k) subsets(w, k + 1, left - 1, add(acc, w[k]), out);
}

inline void multisets(const std::vector<Weight>& w, std::size_t start, int left, Weight acc, Char& out) {
    if (left == 0) {
        out[acc] += 1;
        return;
    }
    for (std::size_t k = start; k < w.size(); ++k) multisets(w, k, left - 1, add(acc, w[k]), out);
}

inline Char exterior_power(int g, int j) {
    Char out;
    if (j < 0 || j > 2 * g) return out;
    subsets(standard_weights(g), 0, j, Weight(g, 0), out);
    return out;
}

inline Char symmetric_power(int g, int i) {
    Char out;
    if (i < 0) return out;
    multisets(standard_weights(g), 0, i, Weight(g, 0), out);
    return out;
}

inline Char product(const Char& a, const Char& b) {
    Char out;
    for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) out[add(wa, wb)] += ma * mb;
    return out;
}

inline Char combine(Char a, const Char& b, const Integer& factor) {
    for (const auto& [w, m] : b) a[w] += factor * m;
    for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
    return a;
}

/// Restriction to sp(2g) of the gl(2g) hook module with i + j boxes, first row i + 1
/// and first column j, via the alternating sum of Lambda^{j+m} (x) S^{i-m}.
inline Char gl_hook(int g, int i, int j) {
    Char out;
    for (int m = 0; m <= i; ++m)
        out = combine(out, product(exterior_power(g, j + m), symmetric_power(g, i - m)), m % 2 == 0 ? 1 : -1);
    return out;
}

inline Char as_char(const confcoh::repr::Character& c) {
    Char out;
    for (const auto& [w, m] : c.multiplicities)
        if (m != 0) out[w] = m;
    return out;
}

inline Integer mass(const Char& c) {
    Integer total = 0;
    for (const auto& [w, m] : c) total += m;
    return total;
}

// --- Weyl dimension, written over the explicit list of positive roots ------

inline Integer weyl_dimension(const Weight& lambda) {
    const int g = static_cast<int>(lambda.size());
    std::vector<Weight> roots;
    for (int a = 0; a < g; ++a) {
        Weight two(g, 0);
        two[a] = 2;
        roots.push_back(two);
        for (int b = a + 1; b < g; ++b) {
            Weight minus(g, 0), plus(g, 0);
            minus[a] = 1;
            minus[b] = -1;
            plus[a] = 1;
            plus[b] = 1;
            roots.push_back(minus);
            roots.push_back(plus);
        }
    }
    Rational result = 1;
    for (const auto& alpha : roots) {
        long num = 0, den = 0;
        for (int k = 0; k < g; ++k) {
            num += static_cast<long>(lambda[k] + g - k) * alpha[k];
            den += static_cast<long>(g - k) * alpha[k];
        }
        result *= Rational(num, den);
    }
    result.canonicalize();
    if (result.get_den() != 1) throw std::logic_error("non-integral Weyl dimension");
    return result.get_num();
}

// --- truncated integer power series -----------------------------------------

using Poly = std::vector<Integer>;

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t order) {
    Poly out(order + 1, 0);
    for (std::size_t x = 0; x < a.size() && x <= order; ++x)
        for (std::size_t y = 0; y < b.size() && x + y <= order; ++y) out[x + y] += a[x] * b[y];
    return out;
}

inline Poly poly_pow(const Poly& a, int e, std::size_t order) {
    Poly out(order + 1, 0);
    out[0] = 1;
    for (int k = 0; k < e; ++k) out = poly_mul(out, a, order);
    return out;
}

/// 1 / (1 - t^step), truncated
inline Poly inverse_one_minus(int step, std::size_t order) {
    Poly out(order + 1, 0);
    for (std::size_t k = 0; k <= order; k += step) out[k] = 1;
    return out;
}

inline Integer partial_sum(const Poly& p, std::size_t n) {
    Integer total = 0;
    for (std::size_t k = 0; k <= n && k < p.size(); ++k) total += p[k];
    return total;
}

}  // namespace support
