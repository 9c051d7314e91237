#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fusionkit/qseries.hpp"
#include "oracles.hpp"

using namespace fusionkit;

TEST_CASE("partition numbers match the pentagonal recurrence") {
    const auto want = oracles::partition_numbers(300);
    const auto got = eta_quotient_series(1, 300);
    for (std::size_t j = 0; j <= 300; ++j) CHECK(got.coeff[j] == want[j]);
    CHECK(got.coeff[100] == mpz_class("190569292"));
}

TEST_CASE("partition numbers at depth 800 need big integers") {
    const auto s = eta_quotient_series(1, 800);
    CHECK(s.coeff[800].get_str().size() >= 28);
}

TEST_CASE("rank-d eta quotients") {
    const auto d2 = eta_quotient_series(2, 50);
    // a_n for d=2 counts pairs of partitions: a_2 = 5
    CHECK(d2.coeff[2] == 5);
    const auto p = oracles::partition_numbers(50);
    mpz_class conv = 0;
    for (std::size_t j = 0; j <= 50; ++j) conv += p[j] * p[50 - j];
    CHECK(d2.coeff[50] == conv);
    CHECK_THROWS_AS(eta_quotient_series(0, 10), OutOfRange);
}

TEST_CASE("c=1 character coefficients") {
    const auto p = oracles::partition_numbers(120);
    const auto s = virasoro_c1_character(3, 120);
    CHECK(s.leading_exponent == Rational(9, 4));
    for (std::size_t j = 0; j <= 120; ++j) {
        mpz_class want = p[j];
        if (j >= 4) want -= p[j - 4];
        CHECK(s.coeff[j] == want);
    }
    CHECK(virasoro_c1_character(0, 10).coeff[5] == p[5] - p[4]);
}

TEST_CASE("three limit routes recover 2m+1") {
    const std::size_t N = 800;
    const GradedSeries vac = virasoro_c1_character(0, N);
    for (long n = 1; n <= 6; ++n) {
        const GradedSeries num = virasoro_c1_character(n, N);
        const auto cr = limit_coefficient_ratio(num, vac);
        const auto ps = limit_partial_sum_ratio(num, vac);
        const auto ab = limit_abel(num, vac, default_abel_ys());
        const long double want = n + 1;
        CHECK(std::abs(cr.value - want) < 0.05L);
        CHECK(std::abs(ps.value - want) < 0.05L);
        CHECK(std::abs(ab.value - want) < 0.05L);
        CHECK(std::abs(cr.value - ps.value) < 0.1L);
        CHECK(std::abs(cr.value - ab.value) < 0.1L);
        CHECK(std::abs(ps.value - ab.value) < 0.1L);
        CHECK(cr.converged);
        CHECK(ps.converged);
        CHECK(ab.converged);
    }
}

TEST_CASE("heisenberg self-ratio is exactly one on the abel route") {
    const GradedSeries h = eta_quotient_series(1, 400);
    const auto ab = limit_abel(h, h, default_abel_ys());
    CHECK(ab.value == 1.0L);
    for (const auto& [y, v] : ab.trace) CHECK(v == 1.0L);
    // with a shifted leading exponent the log-ratio is exactly linear in y
    const GradedSeries shifted = eta_quotient_series(1, 400, Rational(1, 2));
    const auto ab2 = limit_abel(shifted, h, default_abel_ys());
    CHECK(std::abs(ab2.value - 1.0L) < 1e-12L);
}

TEST_CASE("generic weight over the vacuum diverges") {
    const std::size_t N = 800;
    const GradedSeries num = generic_c1_character(N, Rational(1, 3));
    const GradedSeries vac = virasoro_c1_character(0, N);
    CHECK_FALSE(limit_coefficient_ratio(num, vac).converged);
    CHECK_FALSE(limit_partial_sum_ratio(num, vac).converged);
    CHECK_FALSE(limit_abel(num, vac, default_abel_ys()).converged);
}

TEST_CASE("theta series of the rank-1 even lattice") {
    const IntMatrix gram = {{2}};
    const auto vac = lattice_theta_series(gram, {Rational(0)}, 100);
    CHECK(vac.grading_step == Rational(1, 4));
    CHECK(vac.coeff[0] == 1);
    CHECK(vac.coeff[4] == 2);   // alpha = +-1, half-norm 1, slot 4
    CHECK(vac.coeff[16] == 2);  // alpha = +-2
    CHECK(vac.coeff[1] == 0);
    const auto cos = lattice_theta_series(gram, {Rational(1, 2)}, 100);
    CHECK(cos.coeff[1] == 2);   // alpha = +-1/2, half-norm 1/4, slot 1
    CHECK(cos.coeff[9] == 2);   // alpha = +-3/2
    CHECK(cos.coeff[0] == 0);
}

TEST_CASE("theta partial-sum limit is one") {
    const IntMatrix gram = {{2}};
    const auto vac = lattice_theta_series(gram, {Rational(0)}, 2000);
    const auto cos = lattice_theta_series(gram, {Rational(1, 2)}, 2000);
    const auto ps = limit_partial_sum_ratio(cos, vac);
    CHECK(std::abs(ps.value - 1) < 0.05L);
}

TEST_CASE("limit route guards") {
    GradedSeries zero;
    zero.coeff.assign(50, 0);
    const GradedSeries h = eta_quotient_series(1, 49);
    CHECK_THROWS_AS(limit_coefficient_ratio(h, zero), AllZeroDenominator);
    CHECK_THROWS_AS(limit_partial_sum_ratio(h, zero), AllZeroDenominator);
    // a y far too small for the truncation fails the tail bound
    CHECK_THROWS_AS(limit_abel(h, h, {1e-6L}), NoAdmissiblePoints);
}

TEST_CASE("level-one fusion degree identity") {
    CHECK(l1_fusion_check(1, 1));
    CHECK(l1_fusion_check(3, 2));
    CHECK_THROWS_AS(l1_fusion_check(1, 2), OutOfRange);
}
