#pragma once

// Brute-force cohomology of the filtered DGA models B_g and A = B_g / (sp, p^2).
//
// Generators (deg1, deg2, deg3):
//   a_i, b_i  (1, 0, 1)  odd
//   p         (2, 0, 1)  even
//   s1        (0, 1, 2)  odd
//   sa_i, sb_i(1, 1, 2)  even
//   sp        (2, 1, 2)  odd, model B only
// d(s1) = p - sum a_i b_i, d(sa_i) = a_i p, d(sb_i) = b_i p, d(sp) = p^2.
// F_n is spanned by the monomials with deg3 <= n.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confcoh/integer.hpp"
#include "confcoh/linalg.hpp"
#include "confcoh/qformula.hpp"
#include "confcoh/repr.hpp"

namespace confcoh::dga {

enum class Model { A, B };

std::string to_string(Model model);

struct Generator {
    std::string name;
    int deg1;
    int deg2;
    int deg3;
    bool odd;
};

/// Generators in normal order a_1..a_g, b_1..b_g, s1, p, (sp,) sa_1..sa_g, sb_1..sb_g.
std::vector<Generator> generator_set(int genus, Model model);

struct Bidegree {
    int deg1 = 0;
    int deg2 = 0;
    auto operator<=>(const Bidegree&) const = default;
};

/// (k, h) = (deg1 + deg2, deg1 + 2 deg2)
std::pair<int, int> degree_weight(const Bidegree& b);

/// Normal-ordered monomial. ext_mask bit i is a_{i+1} for i < g and b_{i-g+1}
/// otherwise; sym holds the exponents of sa_1..sa_g, sb_1..sb_g.
struct Monomial {
    std::uint64_t ext_mask = 0;
    bool s1 = false;
    int p_exp = 0;
    bool sp = false;
    std::vector<int> sym;

    int ext_count() const;
    int sym_total() const;
    int deg1() const { return ext_count() + 2 * p_exp + 2 * static_cast<int>(sp) + sym_total(); }
    int deg2() const { return static_cast<int>(s1) + static_cast<int>(sp) + sym_total(); }
    int deg3() const { return ext_count() + p_exp + 2 * static_cast<int>(s1) + 2 * static_cast<int>(sp) + 2 * sym_total(); }
    int total_degree() const { return deg1() + deg2(); }
    Bidegree bidegree() const { return {deg1(), deg2()}; }
    repr::WeightVector weight(int genus) const;

    auto operator<=>(const Monomial&) const = default;
};

std::string to_string(const Monomial& m, int genus);

/// Graded-commutative product with Koszul sign; nullopt when it vanishes.
std::optional<std::pair<int, Monomial>> multiply(const Monomial& x, const Monomial& y, int genus, Model model);

/// d(m) as (coefficient, monomial) terms, merged and nonzero.
std::vector<std::pair<Integer, Monomial>> differential(const Monomial& m, int genus, Model model);

/// All monomials of F_n in lexicographic order.
std::vector<Monomial> enumerate_basis(int genus, int n, Model model);

/// Matrix of d : F_n^{(deg1, deg2)} -> F_n^{(deg1 + 2, deg2 - 1)}; columns are
/// source monomials, rows target monomials.
struct BlockMatrix {
    Bidegree source;
    Bidegree target;
    std::vector<Monomial> cols;
    std::vector<Monomial> rows;
    linalg::SparseIntMatrix matrix{0, 0};
};

BlockMatrix differential_block(int genus, int n, Model model, Bidegree block);

struct OracleOptions {
    /// 0 means: CONFCOH_THREADS if set, else hardware concurrency.
    unsigned threads = 0;
    /// Dump every bidegree block as Matrix Market into this directory.
    std::optional<std::filesystem::path> debug_dir;
    int character_budget = repr::kDefaultCharacterBudget;
};

/// Largest n the oracle accepts for a genus by default (g = 1: 10, g = 2: 8, g = 3: 5).
int default_budget(int genus);

/// dim H^{(deg1, deg2)}(F_n, d); zero entries omitted.
std::map<Bidegree, Integer> cohomology_dims(int genus, int n, Model model, const OracleOptions& options = {});

/// Torus-weight resolved cohomology of F_n A.
std::map<Bidegree, repr::Character> cohomology_weights(int genus, int n, const OracleOptions& options = {});

/// Cohomology of F_n A regraded to (k, h) and decomposed into irreducibles.
qformula::MixedTable cohomology_reps(int genus, int n, const OracleOptions& options = {});

/// Cohomology dims regraded to (k, h).
std::map<std::pair<int, int>, Integer> regraded_dims(const std::map<Bidegree, Integer>& dims);

/// b_k from regraded dims.
std::vector<Integer> betti_from_dims(const std::map<Bidegree, Integer>& dims);

}  // namespace confcoh::dga
