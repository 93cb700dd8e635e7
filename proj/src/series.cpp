#include "confcoh/series.hpp"

namespace confcoh::series {

TriSeries one_plus(int order, int t, int s, int u) {
    TriSeries out = TriSeries::monomial(order, {0, 0, 0});
    out.add_term({t, s, u}, VirtualRep::scalar(1));
    return out;
}

BiSeries one_plus(int order, int t, int s) {
    BiSeries out = BiSeries::monomial(order, {0, 0});
    out.add_term({t, s}, VirtualRep::scalar(1));
    return out;
}

TriSeries geom_u(int order) {
    TriSeries out(order);
    for (int n = 0; n <= order; ++n) out.add_term({0, 0, n}, VirtualRep::scalar(1));
    return out;
}

std::map<std::array<int, 2>, VirtualRep> coeff_u(const TriSeries& series, int n) {
    if (n < 0 || n > series.order())
        throw OutOfTruncation("coefficient of u^" + std::to_string(n) + " requested from a series truncated at u^" +
                              std::to_string(series.order()));
    std::map<std::array<int, 2>, VirtualRep> slice;
    for (const auto& [key, c] : series.coeffs())
        if (key[2] == n) slice.emplace(std::array<int, 2>{key[0], key[1]}, c);
    return slice;
}

TriSeries substitute_tu_su(const BiSeries& p, int order) {
    TriSeries out(order);
    for (const auto& [key, c] : p.coeffs()) out.add_term({key[0], key[1], key[0] + key[1]}, c);
    return out;
}

}  // namespace confcoh::series
