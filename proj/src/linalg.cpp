#include "confcoh/linalg.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "confcoh/errors.hpp"

namespace confcoh::linalg {

void SparseIntMatrix::add(std::size_t row, std::size_t col, const Integer& value) {
    if (row >= rows_ || col >= cols_) throw InvalidArgument("matrix index out of range");
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace({row, col}, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    }
}

Integer SparseIntMatrix::at(std::size_t row, std::size_t col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Integer(0) : it->second;
}

std::vector<Entry> SparseIntMatrix::entries() const {
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto& [pos, v] : entries_) out.push_back({pos.first, pos.second, v});
    return out;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
    SparseIntMatrix t(cols_, rows_);
    for (const auto& [pos, v] : entries_) t.entries_.emplace(std::make_pair(pos.second, pos.first), v);
    return t;
}

namespace {

template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

std::vector<SparseRow<Integer>> to_rows(const SparseIntMatrix& m) {
    std::vector<SparseRow<Integer>> rows(m.rows());
    for (const auto& e : m.entries()) rows[e.row].emplace_back(e.col, e.value);
    return rows;
}

template <class T>
const T* find_col(const SparseRow<T>& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& entry, std::size_t c) { return entry.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Generic sparse elimination. `combine(target, pivot_row, pivot_col)` replaces
// the target row by a combination that kills pivot_col.
template <class T, class Combine>
std::size_t eliminate(std::vector<SparseRow<T>> rows, std::size_t n_cols, Combine combine) {
    std::vector<std::size_t> col_count(n_cols, 0);
    std::vector<std::size_t> active;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) continue;
        active.push_back(r);
        for (const auto& e : rows[r]) ++col_count[e.first];
    }

    std::size_t rank = 0;
    while (!active.empty()) {
        // Markowitz pivot: minimise (row length - 1) * (column count - 1).
        std::size_t best_row = 0;
        std::size_t best_col = 0;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t r : active) {
            const std::size_t row_len = rows[r].size() - 1;
            for (const auto& e : rows[r]) {
                const std::size_t cost = row_len * (col_count[e.first] - 1);
                if (cost < best_cost ||
                    (cost == best_cost && (r < best_row || (r == best_row && e.first < best_col)))) {
                    best_cost = cost;
                    best_row = r;
                    best_col = e.first;
                }
            }
            // rows are visited in increasing order, so a zero cost cannot be beaten
            if (best_cost == 0) break;
        }

        const SparseRow<T> pivot = std::move(rows[best_row]);
        rows[best_row].clear();
        for (const auto& e : pivot) --col_count[e.first];

        std::vector<std::size_t> still_active;
        still_active.reserve(active.size());
        for (std::size_t r : active) {
            if (r == best_row) continue;
            if (find_col(rows[r], best_col) != nullptr) {
                for (const auto& e : rows[r]) --col_count[e.first];
                combine(rows[r], pivot, best_col);
                for (const auto& e : rows[r]) ++col_count[e.first];
            }
            if (!rows[r].empty()) still_active.push_back(r);
        }
        active.swap(still_active);
        ++rank;
    }
    return rank;
}

// target <- a * target - b * pivot with a = pivot[col], b = target[col] (divided by their gcd),
// then divided by the content of the result.
void combine_integer(SparseRow<Integer>& target, const SparseRow<Integer>& pivot, std::size_t col) {
    Integer a = *find_col(pivot, col);
    Integer b = *find_col(target, col);
    Integer g = gcd(a, b);
    a /= g;
    b /= g;

    SparseRow<Integer> out;
    out.reserve(target.size() + pivot.size());
    auto ti = target.begin();
    auto pi = pivot.begin();
    while (ti != target.end() || pi != pivot.end()) {
        if (pi == pivot.end() || (ti != target.end() && ti->first < pi->first)) {
            out.emplace_back(ti->first, a * ti->second);
            ++ti;
        } else if (ti == target.end() || pi->first < ti->first) {
            out.emplace_back(pi->first, -b * pi->second);
            ++pi;
        } else {
            Integer v = a * ti->second - b * pi->second;
            if (v != 0) out.emplace_back(ti->first, std::move(v));
            ++ti;
            ++pi;
        }
    }
    Integer content = 0;
    for (const auto& e : out) {
        content = gcd(content, e.second);
        if (content == 1) break;
    }
    if (content > 1)
        for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
    target.swap(out);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (exp) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

}  // namespace

std::size_t rank(const SparseIntMatrix& m) { return eliminate(to_rows(m), m.cols(), combine_integer); }

std::size_t kernel_dim(const SparseIntMatrix& m) { return m.cols() - rank(m); }

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
    if (p < 2) throw InvalidArgument("modulus must be a prime >= 2");
    std::vector<SparseRow<std::uint64_t>> rows(m.rows());
    for (const auto& e : m.entries()) {
        Integer r = e.value % p;
        if (r < 0) r += p;
        if (r != 0) rows[e.row].emplace_back(e.col, r.get_ui());
    }
    auto combine = [p](SparseRow<std::uint64_t>& target, const SparseRow<std::uint64_t>& pivot, std::size_t col) {
        const std::uint64_t factor = *find_col(target, col) * pow_mod(*find_col(pivot, col), p - 2, p) % p;
        SparseRow<std::uint64_t> out;
        auto ti = target.begin();
        auto pi = pivot.begin();
        while (ti != target.end() || pi != pivot.end()) {
            if (pi == pivot.end() || (ti != target.end() && ti->first < pi->first)) {
                out.push_back(*ti++);
            } else if (ti == target.end() || pi->first < ti->first) {
                out.emplace_back(pi->first, (p - factor * pi->second % p) % p);
                ++pi;
            } else {
                const std::uint64_t v = (ti->second + p - factor * pi->second % p) % p;
                if (v != 0) out.emplace_back(ti->first, v);
                ++ti;
                ++pi;
            }
        }
        target.swap(out);
    };
    return eliminate(std::move(rows), m.cols(), combine);
}

void write_matrix_market(std::ostream& out, const SparseIntMatrix& m) {
    out << "%%MatrixMarket matrix coordinate integer general\n";
    out << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
    for (const auto& e : m.entries()) out << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value.get_str() << '\n';
}

SparseIntMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0)
        throw ParseError("missing MatrixMarket banner");
    if (line.find("coordinate") == std::string::npos || line.find("integer") == std::string::npos)
        throw ParseError("only coordinate integer matrices are supported");
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '%') break;
    std::istringstream header(line);
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(header >> rows >> cols >> nnz)) throw ParseError("bad MatrixMarket size line");
    SparseIntMatrix m(rows, cols);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::size_t r = 0, c = 0;
        std::string value;
        if (!(in >> r >> c >> value) || r == 0 || c == 0) throw ParseError("bad MatrixMarket entry");
        m.add(r - 1, c - 1, Integer(value));
    }
    return m;
}

}  // namespace confcoh::linalg
