#pragma once

// Exact rank of sparse integer matrices.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "confcoh/integer.hpp"

namespace confcoh::linalg {

struct Entry {
    std::size_t row;
    std::size_t col;
    Integer value;
};

/// Coordinate-form sparse integer matrix. Entries are kept unique and nonzero;
/// add() on an existing position accumulates.
class SparseIntMatrix {
public:
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const { return entries_.size(); }

    /// Adds `value` at (row, col); a sum of zero removes the entry.
    void add(std::size_t row, std::size_t col, const Integer& value);
    Integer at(std::size_t row, std::size_t col) const;

    /// Entries sorted by (row, col).
    std::vector<Entry> entries() const;
    SparseIntMatrix transpose() const;

    bool operator==(const SparseIntMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::map<std::pair<std::size_t, std::size_t>, Integer> entries_;
};

/// Exact rank over Q: sparse fraction-free elimination with Markowitz pivoting,
/// ties broken by lowest row then lowest column.
std::size_t rank(const SparseIntMatrix& m);

/// cols - rank
std::size_t kernel_dim(const SparseIntMatrix& m);

/// Rank over F_p for a word-size prime p; never exceeds the rational rank.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);

/// Matrix Market coordinate format ("%%MatrixMarket matrix coordinate integer general").
void write_matrix_market(std::ostream& out, const SparseIntMatrix& m);
SparseIntMatrix read_matrix_market(std::istream& in);

}  // namespace confcoh::linalg
