#pragma once

// Closed-form Hilbert-Poincare series of the cohomology of unordered
// configuration spaces of a genus-g surface, and the per-n tables extracted
// from them.

#include <map>
#include <utility>
#include <vector>

#include "confcoh/repr.hpp"
#include "confcoh/series.hpp"

namespace confcoh::qformula {

using repr::VirtualRep;
using series::BiSeries;
using series::TriSeries;

/// Degree/weight table of gr^W H^*(UConf_n). Keys are (k, h) = (cohomological
/// degree, weight). Zero entries are never stored.
struct MixedTable {
    int genus = 0;
    int n = 0;
    std::map<std::pair<int, int>, VirtualRep> entries;

    void add(int k, int h, const VirtualRep& rep);
    VirtualRep at(int k, int h) const;

    std::map<std::pair<int, int>, Integer> dims() const;
    /// b_0, b_1, ..., up to the top nonzero degree (at least one entry).
    std::vector<Integer> betti() const;
    Integer euler_characteristic() const;

    /// Nonzero entries with h < k or 3k - 2h outside [0, 2g + 2].
    std::vector<std::pair<int, int>> band_violations() const;

    bool operator==(const MixedTable&) const = default;
};

/// Series key (t_exp, s_exp) -> (k, h) = (t + s, t + 2 s), and back.
std::pair<int, int> degree_weight(int t_exp, int s_exp);
std::pair<int, int> series_exponents(int k, int h);

/// Truncation order used for a BiSeries that feeds a TriSeries truncated at u <= max_n.
int default_bi_order(int genus, int max_n);

// Hilbert-Poincare series, truncated at total degree `order`.
BiSeries build_P_SV(int genus, int order);
BiSeries build_P_ker_cap(int genus, int order);
BiSeries build_P_ker_mod(int genus, int order);
BiSeries build_P_quot(int genus, int order);
/// Direct closed form of the series of H(A); cross-checked against
/// build_P_HA_assembled on every call.
BiSeries build_P_HA(int genus, int order);
/// s K + t^2 s + t^2 s^2 K + M + t^2 Q from the three sub-quotient series.
BiSeries build_P_HA_assembled(int genus, int order);

/// The bracket of the master series, i.e. (1 - u) Q_g, truncated at u <= max_n.
TriSeries build_bracket(int genus, int max_n);
/// Q_g truncated at u <= max_n.
TriSeries build_Q(int genus, int max_n);

MixedTable mixed_table(int genus, int n);
/// Tables for n = 0..max_n from a single expansion of Q_g.
std::vector<MixedTable> mixed_tables(int genus, int max_n);
MixedTable table_from_slice(int genus, int n, const std::map<std::array<int, 2>, VirtualRep>& slice);

/// Betti numbers; genus 0 goes through genus0_betti.
std::vector<Integer> betti(int genus, int n);
/// sum dim gr^W_{a+2b} H^{a+b} t^a s^b as a map (a, b) -> dim.
std::map<std::array<int, 2>, Integer> mixed_poincare(int genus, int n);

/// chi(UConf_n) for n = 0..max_n.
std::vector<Integer> euler_series(int genus, int max_n);
/// Coefficients of (1 + u)^chi up to u^max_n.
std::vector<Integer> euler_binomial(long chi, int max_n);

/// Betti numbers of UConf_n(S^2).
std::vector<Integer> genus0_betti(int n);

/// Least n0 such that the (k, h) entry of the table is constant for n >= n0.
int stabilization_bound(int genus, int k, int h);

}  // namespace confcoh::qformula
