#pragma once

// Irreducible sp(2g)-representations of highest weight i*w1 + w_j, their
// dimensions and characters, and the decomposition rules used by the
// Hilbert-Poincare series.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "confcoh/integer.hpp"

namespace confcoh::repr {

/// Label of V_{i w1 + w_j}. j = 0 only for the trivial representation: the
/// weight i*w1 with i >= 1 is stored as (i-1, 1) so that every irreducible has
/// exactly one label.
class RepLabel {
public:
    /// Returns ZERO for non-dominant requests (i < 0, j < 0, j > g).
    static RepLabel make(int genus, int i, int j);
    static RepLabel trivial() { return RepLabel(0, 0); }
    static RepLabel zero() { return RepLabel(-1, -1); }

    /// Highest weight in e-coordinates; returns ZERO if the weight is not of hook
    /// shape (lambda_2..lambda_g in {0,1}) or not dominant.
    static RepLabel from_weight(const std::vector<int>& weight);

    int i() const { return i_; }
    int j() const { return j_; }
    bool is_zero() const { return i_ < 0; }
    bool is_trivial() const { return i_ == 0 && j_ == 0; }

    /// Highest weight as a length-g vector in e-coordinates.
    std::vector<int> highest_weight(int genus) const;

    auto operator<=>(const RepLabel&) const = default;

private:
    RepLabel(int i, int j) : i_(i), j_(j) {}
    int i_;
    int j_;
};

/// Finitely supported integer combination of labels (an element of R_g, used additively).
class VirtualRep {
public:
    using Terms = std::map<RepLabel, Integer>;

    VirtualRep() = default;
    explicit VirtualRep(RepLabel label, const Integer& mult = 1);
    static VirtualRep scalar(const Integer& c);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Multiplicity of a label (0 if absent).
    Integer operator[](const RepLabel& label) const;

    void add(const RepLabel& label, const Integer& mult);
    VirtualRep& operator+=(const VirtualRep& other);
    VirtualRep& operator-=(const VirtualRep& other);
    VirtualRep& operator*=(const Integer& c);

    /// True when every term is the trivial label (or the rep is zero).
    bool is_scalar() const;
    /// The coefficient of the trivial label; only meaningful when is_scalar().
    Integer scalar_value() const;

    bool is_nonnegative() const;
    Integer dim(int genus) const;

    bool operator==(const VirtualRep&) const = default;

private:
    Terms terms_;
};

VirtualRep operator+(VirtualRep a, const VirtualRep& b);
VirtualRep operator-(VirtualRep a, const VirtualRep& b);
VirtualRep operator-(VirtualRep a);
VirtualRep operator*(const Integer& c, VirtualRep a);

/// Text form "3·V(1,2) + V(0,0)"; the zero rep renders as "0".
std::string to_string(const VirtualRep& rep);
std::string to_string(const RepLabel& label);

/// Torus weight (e-coordinates). Length is the genus.
using WeightVector = std::vector<int>;

/// Weight multiplicities of an sp(2g)-representation.
struct Character {
    int genus = 0;
    std::map<WeightVector, Integer> multiplicities;

    Integer mass() const;
    void add(const WeightVector& w, const Integer& m);
    Character& operator+=(const Character& other);
    bool operator==(const Character&) const = default;
};

// --- dimensions ---------------------------------------------------------

/// Closed form for j >= 1; j = 0 labels go through weyl_dim.
Integer dim_irrep(int genus, const RepLabel& label);

/// Weyl dimension formula for a dominant weight (weakly decreasing, nonnegative).
Integer weyl_dim(int genus, const WeightVector& weight);

/// Dimension of the sl(2g)-module W_{i w1 + w_j}, 1 <= j <= 2g.
Integer sl_hook_dim(int genus, int i, int j);

// --- decompositions -----------------------------------------------------

/// Lambda^j V for 0 <= j <= 2g.
VirtualRep ext_power_decomp(int genus, int j);

/// V_{w_j} (x) S^i V for i >= 1, 1 <= j <= g.
VirtualRep tensor_std_sym_decomp(int genus, int i, int j);

/// Lambda^j V (x) S^i V for 0 <= j <= 2g, i >= 0 (built from the two rules above).
VirtualRep ext_sym_decomp(int genus, int j, int i);

/// Restriction of the sl(2g) hook module W_{i w1 + w_j} to sp(2g), 1 <= j <= 2g.
VirtualRep branching_hook(int genus, int i, int j);

// --- characters ---------------------------------------------------------

/// Largest genus for which full characters (all Weyl orbits) are expanded.
inline constexpr int kDefaultCharacterBudget = 3;

/// Multiplicities of the dominant weights of V_label (Freudenthal recursion).
/// Works for any genus; keys are dominant weights only.
std::map<WeightVector, Integer> dominant_multiplicities(int genus, const RepLabel& label);

/// Full character of V_label. Throws BudgetExceeded when genus > budget.
Character irreducible_character(int genus, const RepLabel& label,
                                int budget = kDefaultCharacterBudget);

/// Character of a VirtualRep with nonnegative coefficients.
Character character_of(int genus, const VirtualRep& rep, int budget = kDefaultCharacterBudget);

/// Decompose a genuine character into irreducibles by highest-weight peeling.
/// Throws NotACharacter on negative multiplicities or a non-Weyl-invariant
/// input, UnsupportedWeight if a non-hook highest weight appears.
VirtualRep peel_character(int genus, const Character& character);

/// Sorted absolute values, i.e. the dominant representative of a Weyl orbit.
WeightVector dominant_conjugate(const WeightVector& w);

/// All signed permutations of a weight, without repetition.
std::vector<WeightVector> weyl_orbit(const WeightVector& w);

}  // namespace confcoh::repr
