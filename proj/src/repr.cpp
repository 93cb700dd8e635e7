#include "confcoh/repr.hpp"

#include <algorithm>
#include <sstream>

#include "confcoh/errors.hpp"

namespace confcoh::repr {

namespace {

void require_genus(int genus) {
    if (genus < 1) throw InvalidArgument("genus must be >= 1, got " + std::to_string(genus));
}

// Sp(2g) label of the GL(2g) hook partition (first_row, 1^{length-1}), with
// King's modification rule for length > g. Returns the signed contribution.
VirtualRep symplectic_hook(int genus, int first_row, int length) {
    if (length == 0) return VirtualRep::scalar(1);
    if (length <= genus) return VirtualRep(RepLabel::make(genus, first_row - 1, length));
    if (length == genus + 1) return {};
    // Remove a strip of 2*length - 2g - 2 boxes from the foot of the first
    // column; it lies in one column, so the sign is -1.
    const int reduced = 2 * genus + 2 - length;
    return -VirtualRep(RepLabel::make(genus, first_row - 1, reduced));
}

}  // namespace

// --- RepLabel -----------------------------------------------------------

RepLabel RepLabel::make(int genus, int i, int j) {
    if (i < 0 || j < 0 || j > genus) return zero();
    if (j == 0 && i == 0) return trivial();
    if (j == 0) {
        if (genus < 1) return zero();
        return RepLabel(i - 1, 1);
    }
    return RepLabel(i, j);
}

RepLabel RepLabel::from_weight(const std::vector<int>& weight) {
    const int genus = static_cast<int>(weight.size());
    for (int k = 0; k < genus; ++k) {
        if (weight[k] < 0) return zero();
        if (k > 0 && weight[k] > weight[k - 1]) return zero();
    }
    if (genus == 0 || weight[0] == 0) return trivial();
    int j = 0;
    for (int k = 0; k < genus; ++k) {
        if (k > 0 && weight[k] > 1) return zero();
        if (weight[k] != 0) ++j;
    }
    return RepLabel(weight[0] - 1, j);
}

std::vector<int> RepLabel::highest_weight(int genus) const {
    if (is_zero()) throw InvalidArgument("ZERO label has no highest weight");
    std::vector<int> w(static_cast<std::size_t>(genus), 0);
    if (is_trivial()) return w;
    if (j_ > genus) throw InvalidArgument("label " + to_string(*this) + " does not exist for genus " +
                                          std::to_string(genus));
    w[0] = i_ + 1;
    for (int k = 1; k < j_; ++k) w[k] = 1;
    return w;
}

std::string to_string(const RepLabel& label) {
    if (label.is_zero()) return "ZERO";
    return "V(" + std::to_string(label.i()) + "," + std::to_string(label.j()) + ")";
}

// --- VirtualRep ---------------------------------------------------------

VirtualRep::VirtualRep(RepLabel label, const Integer& mult) { add(label, mult); }

VirtualRep VirtualRep::scalar(const Integer& c) { return VirtualRep(RepLabel::trivial(), c); }

Integer VirtualRep::operator[](const RepLabel& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Integer(0) : it->second;
}

void VirtualRep::add(const RepLabel& label, const Integer& mult) {
    if (label.is_zero() || mult == 0) return;
    auto [it, inserted] = terms_.try_emplace(label, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& other) {
    for (const auto& [label, c] : other.terms_) add(label, c);
    return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& other) {
    for (const auto& [label, c] : other.terms_) add(label, -c);
    return *this;
}

VirtualRep& VirtualRep::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [label, m] : terms_) m *= c;
    return *this;
}

bool VirtualRep::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_trivial());
}

Integer VirtualRep::scalar_value() const { return (*this)[RepLabel::trivial()]; }

bool VirtualRep::is_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

Integer VirtualRep::dim(int genus) const {
    Integer total = 0;
    for (const auto& [label, c] : terms_) total += c * dim_irrep(genus, label);
    return total;
}

VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
VirtualRep operator-(VirtualRep a) { return a *= -1; }
VirtualRep operator*(const Integer& c, VirtualRep a) { return a *= c; }

std::string to_string(const VirtualRep& rep) {
    if (rep.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [label, c] : rep.terms()) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) out << mag.get_str() << "·";
        out << to_string(label);
        first = false;
    }
    return out.str();
}

// --- dimensions ---------------------------------------------------------

Integer weyl_dim(int genus, const WeightVector& weight) {
    require_genus(genus);
    if (static_cast<int>(weight.size()) != genus)
        throw InvalidArgument("weight must have length " + std::to_string(genus));
    for (int k = 0; k < genus; ++k) {
        if (weight[k] < 0 || (k > 0 && weight[k] > weight[k - 1]))
            throw InvalidArgument("weight is not dominant");
    }
    // rho = sum (g+1-k) e_k; positive roots e_k - e_h, e_k + e_h (k<h), 2 e_k.
    Integer num = 1;
    Integer den = 1;
    std::vector<long> shifted(static_cast<std::size_t>(genus));
    std::vector<long> rho(static_cast<std::size_t>(genus));
    for (int k = 0; k < genus; ++k) {
        rho[k] = genus - k;
        shifted[k] = weight[k] + rho[k];
    }
    for (int k = 0; k < genus; ++k) {
        for (int h = k + 1; h < genus; ++h) {
            num *= (shifted[k] - shifted[h]) * (shifted[k] + shifted[h]);
            den *= (rho[k] - rho[h]) * (rho[k] + rho[h]);
        }
        num *= shifted[k];
        den *= rho[k];
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw Error("Weyl dimension formula gave a non-integer");
    return num / den;
}

Integer dim_irrep(int genus, const RepLabel& label) {
    require_genus(genus);
    if (label.is_zero()) throw InvalidArgument("dim_irrep of the ZERO label");
    const int i = label.i();
    const int j = label.j();
    if (j > genus) throw InvalidArgument(to_string(label) + " does not exist for genus " + std::to_string(genus));
    if (j == 0) return weyl_dim(genus, label.highest_weight(genus));

    const int g = genus;
    // (2g+i+1)! / (i! j! (2g+1-j)!) * (2g+2-2j)/(2g+2+i-j) * j/(i+j)
    Rational multinomial(factorial(2 * g + i + 1),
                         factorial(i) * factorial(j) * factorial(2 * g + 1 - j));
    Rational value = multinomial * Rational(2 * g + 2 - 2 * j, 2 * g + 2 + i - j) * Rational(j, i + j);
    value.canonicalize();
    if (value.get_den() != 1) throw Error("dimension formula gave a non-integer for " + to_string(label));
    return value.get_num();
}

Integer sl_hook_dim(int genus, int i, int j) {
    require_genus(genus);
    if (i < 0 || j < 1 || j > 2 * genus)
        throw InvalidArgument("sl_hook_dim needs i >= 0 and 1 <= j <= 2g");
    return binomial(i + j - 1, i) * binomial(i + 2 * genus, i + j);
}

// --- decompositions -----------------------------------------------------

VirtualRep ext_power_decomp(int genus, int j) {
    require_genus(genus);
    if (j < 0 || j > 2 * genus) throw InvalidArgument("ext_power_decomp needs 0 <= j <= 2g");
    const int jj = j <= genus ? j : 2 * genus - j;
    VirtualRep out;
    for (int k = 0; 2 * k <= jj; ++k) out.add(RepLabel::make(genus, 0, jj - 2 * k), 1);
    return out;
}

VirtualRep tensor_std_sym_decomp(int genus, int i, int j) {
    require_genus(genus);
    if (i < 1 || j < 1 || j > genus)
        throw InvalidArgument("tensor_std_sym_decomp needs i >= 1 and 1 <= j <= g");
    VirtualRep out;
    out.add(RepLabel::make(genus, i, j), 1);
    out.add(RepLabel::make(genus, i - 1, j + 1), 1);
    if (j >= 2) {
        out.add(RepLabel::make(genus, i - 1, j - 1), 1);
    } else if (i == 1) {
        // the w_0 term survives only as the trivial summand of V (x) V
        out.add(RepLabel::trivial(), 1);
    }
    out.add(RepLabel::make(genus, i - 2, j), 1);
    return out;
}

VirtualRep ext_sym_decomp(int genus, int j, int i) {
    require_genus(genus);
    if (i < 0 || j < 0 || j > 2 * genus) throw InvalidArgument("ext_sym_decomp needs i >= 0, 0 <= j <= 2g");
    VirtualRep out;
    const VirtualRep ext = ext_power_decomp(genus, j);
    for (const auto& [label, c] : ext.terms()) {
        // label is V_{w_k}: trivial or (0, k)
        const int k = label.j();
        if (i == 0) {
            out.add(label, c);
        } else if (k == 0) {
            out.add(RepLabel::make(genus, i, 0), c);
        } else {
            VirtualRep t = tensor_std_sym_decomp(genus, i, k);
            t *= c;
            out += t;
        }
    }
    return out;
}

VirtualRep branching_hook(int genus, int i, int j) {
    require_genus(genus);
    if (i < 0 || j < 1 || j > 2 * genus) throw InvalidArgument("branching_hook needs i >= 0 and 1 <= j <= 2g");
    // Littlewood: W_lambda restricts to sum over vertical strips of 2m boxes
    // removed from lambda = (i+1, 1^{j-1}).
    VirtualRep out;
    if (i == 0) {
        // single column of length j
        for (int m = 0; 2 * m <= j; ++m) out += symplectic_hook(genus, 1, j - 2 * m);
    } else {
        // strip inside the first column
        for (int m = 0; 2 * m <= j - 1; ++m) out += symplectic_hook(genus, i + 1, j - 2 * m);
        // strip through the end of the first row plus 2m-1 column boxes
        for (int m = 1; 2 * m <= j; ++m) out += symplectic_hook(genus, i, j - 2 * m + 1);
    }
    if (!out.is_nonnegative()) throw Error("branching produced negative multiplicities");
    return out;
}

}  // namespace confcoh::repr
