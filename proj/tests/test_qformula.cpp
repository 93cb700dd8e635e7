#include <catch_amalgamated.hpp>

#include "confcoh/errors.hpp"
#include "confcoh/qformula.hpp"
#include "printers.hpp"

using namespace confcoh;
using namespace confcoh::qformula;
using repr::RepLabel;
using Slice = std::map<std::array<int, 2>, VirtualRep>;

namespace {

VirtualRep V(int g, int i, int j, long mult = 1) { return VirtualRep(RepLabel::make(g, i, j), mult); }
VirtualRep one() { return VirtualRep::scalar(1); }

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// entrywise a - b >= 0
bool dominates(const MixedTable& a, const MixedTable& b) {
    for (const auto& [kh, rep] : b.entries)
        if (!(a.at(kh.first, kh.second) - rep).is_nonnegative()) return false;
    return true;
}

}  // namespace

TEST_CASE("regrading", "[qformula]") {
    CHECK(degree_weight(1, 0) == std::pair{1, 1});
    CHECK(degree_weight(2, 0) == std::pair{2, 2});
    CHECK(degree_weight(2, 1) == std::pair{3, 4});
    for (int t = 0; t < 6; ++t)
        for (int s = 0; s < 6; ++s) {
            const auto [k, h] = degree_weight(t, s);
            CHECK(series_exponents(k, h) == std::pair{t, s});
        }
}

TEST_CASE("P_SV", "[qformula]") {
    CHECK(build_P_SV(1, 1).coeff({1, 0}) == V(1, 0, 1));
    CHECK(build_P_SV(1, 3).coeff({2, 1}) == V(1, 1, 1) + one());
    CHECK(build_P_SV(2, 2).coeff({2, 0}) == V(2, 0, 2) + one());
    CHECK_THROWS_AS(build_P_SV(0, 3), InvalidArgument);
}

TEST_CASE("P_SV is the series of Lambda V (x) S V", "[qformula][property]") {
    for (int g = 1; g <= 3; ++g) {
        const int D = 12;
        const BiSeries p = build_P_SV(g, D);
        for (int a = 0; a <= D; ++a)
            for (int b = 0; a + b <= D; ++b) {
                const int j = a - b;
                const VirtualRep expected = (j >= 0 && j <= 2 * g) ? repr::ext_sym_decomp(g, j, b) : VirtualRep{};
                INFO("g=" << g << " t^" << a << " s^" << b);
                REQUIRE(p.coeff({a, b}) == expected);
            }
    }
}

TEST_CASE("kernel and quotient series", "[qformula]") {
    CHECK(build_P_ker_cap(1, 2).coeff({2, 0}) == one());
    CHECK(build_P_ker_cap(1, 2).coeff({1, 0}) == V(1, 0, 1));
    CHECK(build_P_ker_cap(2, 1).coeff({1, 0}).empty());

    for (int g = 1; g <= 3; ++g) CHECK(build_P_ker_mod(g, 0) == BiSeries::monomial(0, {0, 0}));
    CHECK(build_P_ker_mod(1, 1).coeff({1, 0}) == V(1, 0, 1));
    CHECK(build_P_ker_mod(2, 2).coeff({2, 0}) == V(2, 0, 2));

    CHECK(build_P_quot(1, 4).coeff({0, 0}) == one());
    CHECK(build_P_quot(1, 4).coeff({2, 1}) == one());
    CHECK(build_P_quot(1, 4).coeff({1, 1}) == V(1, 0, 1));
    CHECK(build_P_quot(2, 4).coeff({2, 1}) == one() + V(2, 0, 2));
}

TEST_CASE("P_H(A)", "[qformula]") {
    CHECK(build_P_HA(1, 0) == BiSeries::monomial(0, {0, 0}));
    CHECK(build_P_HA(1, 1).coeff({1, 0}) == V(1, 0, 1));
    CHECK(build_P_HA(1, 2).coeff({2, 0}) == one());
    for (int g = 1; g <= 3; ++g)
        for (int D = 0; D <= 20; ++D) REQUIRE(build_P_HA(g, D) == build_P_HA_assembled(g, D));
}

TEST_CASE("master series low coefficients", "[qformula]") {
    for (int g = 1; g <= 3; ++g) {
        const TriSeries q = build_Q(g, 3);
        CHECK(series::coeff_u(q, 0) == Slice{{{0, 0}, one()}});
        CHECK(series::coeff_u(q, 1) == Slice{{{0, 0}, one()}, {{1, 0}, V(g, 0, 1)}, {{2, 0}, one()}});
    }
    const Slice u3 = series::coeff_u(build_Q(1, 3), 3);
    CHECK(u3 == Slice{{{0, 0}, one()},
                      {{1, 0}, V(1, 0, 1)},
                      {{2, 0}, one()},
                      {{2, 1}, one() + V(1, 1, 1)},
                      {{1, 1}, V(1, 0, 1)},
                      {{3, 1}, V(1, 0, 1)}});
    CHECK_THROWS_AS(build_Q(0, 3), InvalidArgument);
    CHECK_THROWS_AS(build_Q(1, -1), InvalidArgument);
}

TEST_CASE("bracket exponents", "[qformula][property]") {
    for (int g = 1; g <= 4; ++g) {
        const TriSeries bracket = build_bracket(g, 14);
        for (const auto& [key, rep] : bracket.coeffs()) {
            REQUIRE(key[2] <= key[0] + key[1] + 1);
            REQUIRE(key[0] <= key[2] + 2 * g + 2);
            REQUIRE(rep.is_nonnegative());
        }
        const TriSeries q = build_Q(g, 14);
        const TriSeries one_minus_u = TriSeries::monomial(14, {0, 0, 0}) - TriSeries::monomial(14, {0, 0, 1});
        REQUIRE(one_minus_u * q == bracket);
    }
}

TEST_CASE("mixed tables", "[qformula]") {
    MixedTable t1 = mixed_table(1, 1);
    CHECK(t1.entries == std::map<std::pair<int, int>, VirtualRep>{{{0, 0}, one()}, {{1, 1}, V(1, 0, 1)}, {{2, 2}, one()}});

    MixedTable t3 = mixed_table(1, 3);
    CHECK(t3.entries == std::map<std::pair<int, int>, VirtualRep>{{{0, 0}, one()},
                                                                    {{1, 1}, V(1, 0, 1)},
                                                                    {{2, 2}, one()},
                                                                    {{3, 4}, one() + V(1, 1, 1)},
                                                                    {{2, 3}, V(1, 0, 1)},
                                                                    {{4, 5}, V(1, 0, 1)}});
    CHECK(t3.betti() == ints({1, 2, 3, 4, 2}));
    CHECK(betti(1, 2) == ints({1, 2, 1}));
    for (int g = 1; g <= 3; ++g) CHECK(betti(g, 0) == ints({1}));

    CHECK(mixed_poincare(1, 3) == std::map<std::array<int, 2>, Integer>{
                                      {{0, 0}, 1}, {{1, 0}, 2}, {{2, 0}, 1}, {{2, 1}, 4}, {{1, 1}, 2}, {{3, 1}, 2}});

    Slice negative{{{0, 0}, VirtualRep::scalar(-1)}};
    CHECK_THROWS_AS(table_from_slice(1, 0, negative), Error);
}

TEST_CASE("Betti numbers from the DGA oracle", "[qformula][oracle]") {
    // frozen from independent runs of the DGA cohomology oracle
    CHECK(betti(1, 4) == ints({1, 2, 3, 5, 4, 1}));
    CHECK(betti(1, 10) == ints({1, 2, 3, 5, 7, 9, 11, 13, 15, 17, 13, 4}));
    CHECK(betti(2, 2) == ints({1, 4, 6}));
    CHECK(betti(2, 4) == ints({1, 4, 6, 16, 24, 6}));
    CHECK(betti(2, 8) == ints({1, 4, 6, 16, 28, 48, 75, 114, 126, 45}));
    CHECK(betti(3, 3) == ints({1, 6, 15, 36, 6}));
    CHECK(betti(3, 5) == ints({1, 6, 15, 36, 90, 155, 35}));
}

TEST_CASE("genus zero", "[qformula]") {
    CHECK(genus0_betti(0) == ints({1}));
    CHECK(genus0_betti(1) == ints({1, 0, 1}));
    // UConf_2(S^2) retracts onto RP^2
    CHECK(genus0_betti(2) == ints({1}));
    for (int n = 3; n <= 12; ++n) CHECK(genus0_betti(n) == ints({1, 0, 0, 1}));
    CHECK(betti(0, 5) == ints({1, 0, 0, 1}));
    CHECK_THROWS_AS(genus0_betti(-1), InvalidArgument);
}

TEST_CASE("Euler characteristics", "[qformula]") {
    CHECK(euler_series(1, 5) == ints({1, 0, 0, 0, 0, 0}));
    CHECK(euler_series(2, 3) == ints({1, -2, 3, -4}));
    CHECK(euler_series(0, 3) == ints({1, 2, 1, 0}));
    for (int g = 0; g <= 4; ++g) REQUIRE(euler_series(g, 12) == euler_binomial(2 - 2 * g, 12));
}

TEST_CASE("stabilization", "[qformula]") {
    CHECK(stabilization_bound(1, 0, 0) == 0);
    CHECK(stabilization_bound(1, 2, 2) == 1);
    CHECK(stabilization_bound(1, 2, 0) == 0);
    CHECK(stabilization_bound(1, 1, 3) == 0);

    for (int g = 1; g <= 3; ++g) {
        const int N = 12;
        const auto tables = mixed_tables(g, N);
        for (int n = 0; n < N; ++n) REQUIRE(dominates(tables[n + 1], tables[n]));
        for (const auto& [kh, rep] : tables[N].entries) {
            const int n0 = stabilization_bound(g, kh.first, kh.second);
            for (int n = n0; n <= N; ++n) REQUIRE(tables[n].at(kh.first, kh.second) == rep);
            INFO("g=" << g << " (k,h)=(" << kh.first << "," << kh.second << ") n0=" << n0);
            if (n0 > 0 && n0 <= N) REQUIRE(tables[n0 - 1].at(kh.first, kh.second) != rep);
        }
    }
}

TEST_CASE("weight band", "[qformula][property]") {
    for (int g = 1; g <= 4; ++g)
        for (const auto& t : mixed_tables(g, 12)) {
            INFO("g=" << g << " n=" << t.n);
            REQUIRE(t.band_violations().empty());
        }
    MixedTable bad;
    bad.genus = 1;
    bad.add(1, 0, VirtualRep::scalar(1));
    bad.add(4, 3, VirtualRep::scalar(1));
    CHECK(bad.band_violations().size() == 2);
}

TEST_CASE("genus one Betti numbers grow linearly", "[qformula][property]") {
    for (int n = 4; n <= 16; ++n) {
        const auto b = betti(1, n);
        for (int k = 4; k <= n - 1; ++k) REQUIRE(b[k] - 2 * b[k - 1] + b[k - 2] == 0);
    }
}
