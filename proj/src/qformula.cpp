#include "confcoh/qformula.hpp"

#include <algorithm>

#include "confcoh/errors.hpp"

namespace confcoh::qformula {

using repr::RepLabel;
using series::one_plus;

namespace {

void require_positive_genus(int genus) {
    if (genus < 1) throw InvalidArgument("the closed-form series needs genus >= 1 (use genus0_betti for the sphere)");
}

BiSeries bi_monomial(int order, int t, int s, const VirtualRep& c = VirtualRep::scalar(1)) {
    return BiSeries::monomial(order, {t, s}, c);
}

// sum_{1<=j<=g, i>=0} [V(i,j)] t^{t_shift(j) + i} s^i, truncated.
template <class Shift>
BiSeries hook_sum(int genus, int order, Shift t_shift) {
    BiSeries out(order);
    for (int j = 1; j <= genus; ++j) {
        for (int i = 0; t_shift(j) + 2 * i <= order; ++i)
            out.add_term({t_shift(j) + i, i}, VirtualRep(RepLabel::make(genus, i, j)));
    }
    return out;
}

// sum_{k=0}^{m-1} t^{2k}, i.e. (t^{2m} - 1)/(t^2 - 1)
BiSeries even_geometric(int order, int m) {
    BiSeries out(order);
    for (int k = 0; k < m; ++k) out.add_term({2 * k, 0}, VirtualRep::scalar(1));
    return out;
}

}  // namespace

// --- MixedTable ---------------------------------------------------------

void MixedTable::add(int k, int h, const VirtualRep& rep) {
    if (rep.empty()) return;
    auto [it, inserted] = entries.try_emplace({k, h}, rep);
    if (!inserted) {
        it->second += rep;
        if (it->second.empty()) entries.erase(it);
    }
}

VirtualRep MixedTable::at(int k, int h) const {
    auto it = entries.find({k, h});
    return it == entries.end() ? VirtualRep{} : it->second;
}

std::map<std::pair<int, int>, Integer> MixedTable::dims() const {
    std::map<std::pair<int, int>, Integer> out;
    for (const auto& [kh, rep] : entries) {
        Integer d = genus == 0 ? rep.scalar_value() : rep.dim(genus);
        if (d != 0) out[kh] = d;
    }
    return out;
}

std::vector<Integer> MixedTable::betti() const {
    std::vector<Integer> b(1, 0);
    for (const auto& [kh, d] : dims()) {
        if (static_cast<int>(b.size()) <= kh.first) b.resize(kh.first + 1, 0);
        b[kh.first] += d;
    }
    return b;
}

Integer MixedTable::euler_characteristic() const {
    Integer chi = 0;
    const auto b = betti();
    for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0) ? b[k] : Integer(-b[k]);
    return chi;
}

std::vector<std::pair<int, int>> MixedTable::band_violations() const {
    std::vector<std::pair<int, int>> bad;
    for (const auto& [kh, rep] : entries) {
        const auto [k, h] = kh;
        const int spread = 3 * k - 2 * h;
        if (h < k || spread < 0 || spread > 2 * genus + 2) bad.push_back(kh);
    }
    return bad;
}

std::pair<int, int> degree_weight(int t_exp, int s_exp) { return {t_exp + s_exp, t_exp + 2 * s_exp}; }

std::pair<int, int> series_exponents(int k, int h) { return {2 * k - h, h - k}; }

int default_bi_order(int genus, int max_n) { return 2 * max_n + 2 * genus + 4; }

// --- Hilbert-Poincare series --------------------------------------------

BiSeries build_P_SV(int genus, int order) {
    require_positive_genus(genus);
    const int g = genus;
    BiSeries out = even_geometric(order, g + 1);
    out += bi_monomial(order, 2, 1) * even_geometric(order, g);
    const BiSeries prefactor = one_plus(order, 0, 1) * one_plus(order, 2, 1);
    for (int j = 1; j <= g; ++j) {
        BiSeries column(order);
        for (int i = 0; j + 2 * i <= order; ++i)
            column.add_term({j + i, i}, VirtualRep(RepLabel::make(g, i, j)));
        out += prefactor * even_geometric(order, g - j + 1) * column;
    }
    return out;
}

BiSeries build_P_ker_cap(int genus, int order) {
    require_positive_genus(genus);
    const int g = genus;
    BiSeries out = bi_monomial(order, 2 * g, 0);
    out += one_plus(order, 2, 1) * hook_sum(g, order, [g](int j) { return 2 * g - j; });
    return out;
}

BiSeries build_P_ker_mod(int genus, int order) {
    require_positive_genus(genus);
    BiSeries out = bi_monomial(order, 0, 0);
    out += one_plus(order, 2, 1) * hook_sum(genus, order, [](int j) { return j; });
    return out;
}

BiSeries build_P_quot(int genus, int order) {
    require_positive_genus(genus);
    BiSeries inner = bi_monomial(order, 0, 0);
    inner += bi_monomial(order, 0, 1) * hook_sum(genus, order, [](int j) { return j; });
    return one_plus(order, 2, 1) * inner;
}

BiSeries build_P_HA_assembled(int genus, int order) {
    const BiSeries kernel_cap = build_P_ker_cap(genus, order);
    BiSeries out = bi_monomial(order, 0, 1) * kernel_cap;
    out += bi_monomial(order, 2, 1);
    out += bi_monomial(order, 2, 2) * kernel_cap;
    out += build_P_ker_mod(genus, order);
    out += bi_monomial(order, 2, 0) * build_P_quot(genus, order);
    return out;
}

BiSeries build_P_HA(int genus, int order) {
    require_positive_genus(genus);
    const int g = genus;
    BiSeries leading = one_plus(order, 2, 0);
    leading.add_term({2 * g, 1}, VirtualRep::scalar(1));
    BiSeries out = one_plus(order, 2, 1) * leading;

    BiSeries tail(order);
    for (int j = 1; j <= g; ++j) {
        BiSeries column(order);
        for (int i = 0; j + 2 * i <= order; ++i)
            column.add_term({j + i, i}, VirtualRep(RepLabel::make(g, i, j)));
        tail += column * one_plus(order, 2 * (g - j), 1);
    }
    out += one_plus(order, 2, 1) * one_plus(order, 2, 1) * tail;

    if (out != build_P_HA_assembled(genus, order))
        throw Error("closed form of P_H(A) disagrees with its assembly from sub-quotients");
    return out;
}

// --- master series ------------------------------------------------------

TriSeries build_bracket(int genus, int max_n) {
    require_positive_genus(genus);
    if (max_n < 0) throw InvalidArgument("max_n must be >= 0");
    const int g = genus;
    const int N = max_n;

    TriSeries out = one_plus(N, 2, 1, 3) * one_plus(N, 2, 0, 1);
    out += one_plus(N, 2, 1, 2) * TriSeries::monomial(N, {2 * g, 1, 2 * (g + 1)});

    TriSeries hooks(N);
    for (int j = 1; j <= g; ++j) {
        TriSeries column(N);
        for (int i = 0; j + 2 * i <= N; ++i)
            column.add_term({j + i, i, j + 2 * i}, VirtualRep(RepLabel::make(g, i, j)));
        hooks += column * one_plus(N, 2 * (g - j), 1, 2 * (g - j + 1));
    }
    out += one_plus(N, 2, 1, 2) * one_plus(N, 2, 1, 3) * hooks;
    return out;
}

TriSeries build_Q(int genus, int max_n) { return series::geom_u(max_n) * build_bracket(genus, max_n); }

MixedTable table_from_slice(int genus, int n, const std::map<std::array<int, 2>, VirtualRep>& slice) {
    MixedTable table;
    table.genus = genus;
    table.n = n;
    for (const auto& [ts, rep] : slice) {
        if (!rep.is_nonnegative())
            throw Error("negative multiplicity in the cohomology table for n = " + std::to_string(n));
        const auto [k, h] = degree_weight(ts[0], ts[1]);
        table.add(k, h, rep);
    }
    return table;
}

std::vector<MixedTable> mixed_tables(int genus, int max_n) {
    const TriSeries q = build_Q(genus, max_n);
    std::vector<MixedTable> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) out.push_back(table_from_slice(genus, n, series::coeff_u(q, n)));
    return out;
}

MixedTable mixed_table(int genus, int n) { return mixed_tables(genus, n).back(); }

std::vector<Integer> genus0_betti(int n) {
    if (n < 0) throw InvalidArgument("n must be >= 0");
    if (n == 0) return {1};
    if (n == 1) return {1, 0, 1};
    // UConf_2(S^2) is rationally a point (it retracts onto RP^2).
    if (n == 2) return {1};
    return {1, 0, 0, 1};
}

std::vector<Integer> betti(int genus, int n) {
    if (genus < 0) throw InvalidArgument("genus must be >= 0");
    if (genus == 0) return genus0_betti(n);
    return mixed_table(genus, n).betti();
}

std::map<std::array<int, 2>, Integer> mixed_poincare(int genus, int n) {
    std::map<std::array<int, 2>, Integer> out;
    for (const auto& [kh, d] : mixed_table(genus, n).dims()) {
        const auto [t, s] = series_exponents(kh.first, kh.second);
        out[{t, s}] = d;
    }
    return out;
}

std::vector<Integer> euler_binomial(long chi, int max_n) {
    std::vector<Integer> out;
    for (int n = 0; n <= max_n; ++n) out.push_back(binomial(chi, n));
    return out;
}

std::vector<Integer> euler_series(int genus, int max_n) {
    if (genus < 0 || max_n < 0) throw InvalidArgument("genus and max_n must be >= 0");
    std::vector<Integer> out;
    if (genus == 0) {
        for (int n = 0; n <= max_n; ++n) {
            Integer chi = 0;
            const auto b = genus0_betti(n);
            for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0) ? b[k] : Integer(-b[k]);
            out.push_back(chi);
        }
        return out;
    }
    for (const auto& table : mixed_tables(genus, max_n)) out.push_back(table.euler_characteristic());
    return out;
}

int stabilization_bound(int genus, int k, int h) {
    require_positive_genus(genus);
    const auto [t, s] = series_exponents(k, h);
    if (t < 0 || s < 0) return 0;
    // every bracket term satisfies u <= t + s + 1
    const TriSeries bracket = build_bracket(genus, t + s + 2);
    int bound = 0;
    for (const auto& [key, c] : bracket.coeffs())
        if (key[0] == t && key[1] == s) bound = std::max(bound, key[2]);
    return bound;
}

}  // namespace confcoh::qformula
