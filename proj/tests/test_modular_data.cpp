#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fusionkit/modular_data.hpp"

using namespace fusionkit;

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-3, 4).mod1() == Rational(1, 4));
    CHECK(Rational(7, 1).is_integer());
    CHECK(Rational(9, 4).mod1() == Rational(1, 4));
    CHECK((-Rational(1, 5)).str() == "-1/5");
    CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("lee-yang family (2,5)") {
    const ModularDatum md = build_minimal_model(2, 5);
    REQUIRE(md.size() == 2);
    CHECK(md.weights[0] == Rational(0));
    CHECK(md.weights[1] == Rational(-1, 5));
    CHECK(md.central_charge == Rational(-22, 5));
    CHECK(min_weight_label(md) == 1);
    CHECK(validate(md, 1e-9L).all_pass());
}

TEST_CASE("(3,5) family") {
    const ModularDatum md = build_minimal_model(3, 5);
    REQUIRE(md.size() == 4);
    CHECK(md.weights[0] == Rational(0));
    CHECK(md.central_charge == Rational(-3, 5));
    // Kac-table weight multiset: 0, -1/20, 1/5, 3/4
    std::vector<Rational> ws = md.weights;
    std::sort(ws.begin(), ws.end());
    CHECK(ws[0] == Rational(-1, 20));
    CHECK(ws[3] == Rational(3, 4));
    CHECK(validate(md, 1e-9L).all_pass());
}

TEST_CASE("(3,4) matches the c=1/2 fixture up to label order") {
    const ModularDatum mm = build_minimal_model(3, 4);
    const ModularDatum is = build_ising();
    REQUIRE(mm.size() == 3);
    CHECK(mm.central_charge == Rational(1, 2));
    std::vector<Rational> a = mm.weights, b = is.weights;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(validate(is, 1e-9L).all_pass());
    // exact entries of the 3x3 matrix
    CHECK(is.s.at(0, 0).real() == 0.5L);
    CHECK(std::abs(is.s.at(0, 2).real() - std::sqrt(2.0L) / 2) < 1e-18L);
    CHECK(is.s.at(2, 2) == Complex(0));
}

TEST_CASE("minimal model input guards") {
    CHECK_THROWS_AS(build_minimal_model(2, 4), NotCoprime);
    CHECK_THROWS_AS(build_minimal_model(3, 3), NotCoprime);
    CHECK_THROWS_AS(build_minimal_model(1, 5), OutOfRange);
}

TEST_CASE("kac table canonical labels") {
    const auto labs = kac_labels(2, 5);
    REQUIRE(labs.size() == 2);
    CHECK(labs[0].m == 1);
    CHECK(labs[0].n == 1);
    // identification (m,n) ~ (p-m, q-n) halves the grid
    CHECK(kac_labels(3, 4).size() == 3);
    CHECK(kac_labels(4, 5).size() == 6);
    CHECK(kac_labels(5, 12).size() == 22);
}

TEST_CASE("affine sl2 families validate") {
    for (long k : {1, 2, 3, 5, 10, 20}) {
        const ModularDatum md = build_affine_sl2(k);
        REQUIRE(md.size() == static_cast<std::size_t>(k) + 1);
        CHECK(md.central_charge == Rational(3 * k, k + 2));
        CHECK(md.weights[1] == Rational(3, 4 * (k + 2)));
        CHECK(min_weight_label(md) == 0);
        CHECK(validate(md, 1e-9L).all_pass());
    }
    CHECK_THROWS_AS(build_affine_sl2(0), OutOfRange);
}

TEST_CASE("validation flags a corrupted matrix") {
    ModularDatum md = build_ising();
    md.s.at(0, 1) += 1e-3L;
    const auto rep = validate(md, 1e-9L);
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.max_residual() > 1e-4L);
}

TEST_CASE("conjugation is recovered from S^2") {
    for (auto [p, q] : {std::pair<long, long>{2, 7}, {3, 5}, {4, 5}, {5, 12}}) {
        const ModularDatum md = build_minimal_model(p, q);
        const auto conj = conjugation_from_s(md.s, 1e-9L);
        CHECK(conj == md.conjugation);
    }
}

TEST_CASE("rank-1 lattice family") {
    const IntMatrix gram = {{2}};
    const auto cosets = lattice_dual_cosets(gram);
    REQUIRE(cosets.size() == 2);
    CHECK(cosets[0][0] == Rational(0));
    CHECK(cosets[1][0] == Rational(1, 2));
    const ModularDatum md = build_lattice(gram, cosets);
    CHECK(md.central_charge == Rational(1));
    CHECK(md.weights[0] == Rational(0));
    CHECK(md.weights[1] == Rational(1, 4));
    CHECK(validate(md, 1e-9L).all_pass());
    CHECK(min_weight_label(md) == 0);
}

TEST_CASE("rank-2 lattice families") {
    // A2 root lattice
    const IntMatrix a2 = {{2, -1}, {-1, 2}};
    const auto cosets = lattice_dual_cosets(a2);
    REQUIRE(cosets.size() == 3);
    const ModularDatum md = build_lattice(a2, cosets);
    CHECK(md.central_charge == Rational(2));
    CHECK(validate(md, 1e-9L).all_pass());
    for (std::size_t i = 1; i < 3; ++i) CHECK(md.weights[i] == Rational(1, 3));
    // conjugation swaps the two nontrivial cosets
    CHECK(md.conjugation[0] == 0);
    CHECK(md.conjugation[1] == 2);
    CHECK(md.conjugation[2] == 1);
}

TEST_CASE("lattice minimal norms are exact") {
    const IntMatrix gram = {{2, 0}, {0, 6}};
    CHECK(lattice_min_half_norm(gram, {Rational(0), Rational(0)}) == Rational(0));
    CHECK(lattice_min_half_norm(gram, {Rational(1, 2), Rational(0)}) == Rational(1, 4));
    CHECK(lattice_min_half_norm(gram, {Rational(0), Rational(5, 6)}) == Rational(1, 12));
    CHECK(lattice_min_half_norm(gram, {Rational(1, 2), Rational(1, 2)}) == Rational(1));
}

TEST_CASE("lattice guards") {
    CHECK_THROWS_AS(build_lattice({{3}}, {{Rational(0)}}), NotEvenLattice);
    CHECK_THROWS_AS(build_lattice({{-2}}, {}), NotPositiveDefinite);
    CHECK_THROWS_AS(build_lattice({{2, 3}, {2, 2}}, {}), NotEvenLattice);
    CHECK_THROWS_AS(build_lattice({{2}}, {{Rational(0)}}), WrongCosetCount);
    CHECK_THROWS_AS(build_lattice({{2}}, {{Rational(1, 3)}, {Rational(0)}}), WrongCosetCount);
    const IntMatrix big = {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
    CHECK_THROWS_AS(build_lattice(big, {}), RankUnsupported);
}

TEST_CASE("weight tie detection") {
    // the (1/2,1/2) coset of Z sqrt2 x Z sqrt6 has minimal half-norm 1,
    // which reduces to weight 0 mod 1 and ties with the vacuum
    const IntMatrix gram = {{2, 0}, {0, 6}};
    const ModularDatum md = build_lattice(gram, lattice_dual_cosets(gram));
    CHECK_THROWS_AS(min_weight_label(md), AmbiguousMinimalWeight);
    // the reduced weights still validate (first-argmin row is used)
    CHECK(validate(md, 1e-9L).all_pass());
}
