// End-to-end acceptance checks, one line of output per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <vector>

#include "fusionkit/fusionkit.hpp"
#include "oracles.hpp"

using namespace fusionkit;

namespace {

int failures = 0;

void report(int id, bool pass, const char* what) {
    std::printf("criterion %2d: %s  %s\n", id, pass ? "pass" : "FAIL", what);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Perron radius of a nonnegative square matrix (not necessarily symmetric)
/// by shifted power iteration.
long double perron_radius(const std::vector<std::vector<long>>& m) {
    const std::size_t n = m.size();
    std::vector<long double> v(n, 1.0L), w(n);
    long double prev = -1;
    for (int it = 0; it < 100000; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = v[i];
            for (std::size_t j = 0; j < n; ++j) w[i] += m[i][j] * v[j];
        }
        long double norm = 0, ray = 0, vv = 0;
        for (std::size_t i = 0; i < n; ++i) {
            norm += w[i] * w[i];
            ray += v[i] * w[i];
            vv += v[i] * v[i];
        }
        const long double est = ray / vv - 1;
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        if (it > 0 && std::abs(est - prev) < 1e-13L) return est;
        prev = est;
    }
    return prev;
}

std::vector<ModularDatum> builtins() {
    std::vector<ModularDatum> mds;
    mds.push_back(build_ising());
    for (auto [p, q] : {std::pair<long, long>{2, 5}, {3, 5}, {4, 5}, {2, 7}, {3, 4}})
        mds.push_back(build_minimal_model(p, q));
    for (long k = 1; k <= 6; ++k) mds.push_back(build_affine_sl2(k));
    for (long d : {2, 4, 6}) {
        const IntMatrix g = {{d}};
        mds.push_back(build_lattice(g, lattice_dual_cosets(g)));
    }
    const IntMatrix a2 = {{2, -1}, {-1, 2}};
    mds.push_back(build_lattice(a2, lattice_dual_cosets(a2)));
    return mds;
}

} // namespace

int main() {
    const long double sqrt2 = std::sqrt(2.0L);

    { // 1: the c=1/2 dimensions, plus the fusion-route recovery of sqrt(2)
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        try {
            const ModularDatum md = build_ising();
            const long double q0 = qdim_from_smatrix(md, 0).value;
            const long double q1 = qdim_from_smatrix(md, 1).value;
            const long double q2 = qdim_from_smatrix(md, 2).value;
            ok = std::abs(q0 - 1) < 1e-10L && std::abs(q1 - 1) < 1e-10L &&
                 std::abs(q2 - sqrt2) < 1e-10L;
            // sigma x sigma = vacuum + psi, so qdim(sigma) = sqrt(1 + 1)
            const FusionTensor ft = fusion_from_smatrix(md);
            long double sq = 0;
            for (std::size_t k = 0; k < 3; ++k)
                sq += ft.at(2, 2, k) * qdim_from_smatrix(md, k).value;
            ok = ok && std::abs(std::sqrt(sq) - q2) < 1e-10L;
        } catch (...) { ok = false; }
        report(1, ok && seconds_since(t0) < 1.0, "c=1/2 dimensions (1, 1, sqrt 2), fusion route");
    }

    { // 2: the four c=1/2 fusion rules as exact integers
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        try {
            const FusionTensor ft = fusion_from_smatrix(build_ising());
            const auto dec = [&](std::size_t i, std::size_t j) { return tensor_decompose(ft, i, j); };
            using V = std::vector<std::size_t>;
            ok = dec(1, 1) == V{0} && dec(1, 2) == V{2} && dec(2, 1) == V{2} &&
                 dec(2, 2) == V{0, 1};
        } catch (...) { ok = false; }
        report(2, ok && seconds_since(t0) < 1.0, "c=1/2 fusion rules exact");
    }

    { // 3: the (2,5) non-vacuum dimension
        bool ok = true;
        try {
            const ModularDatum md = build_minimal_model(2, 5);
            ok = min_weight_label(md) == 1 && md.weights[1] == Rational(-1, 5);
            const auto dv = qdim_from_smatrix(md, 1);
            ok = ok && std::abs(dv.value - 2 * std::cos(kPi / 5)) < 1e-9L &&
                 dv.tag == DimTag::TwoCosPiOver && dv.tag_param == 5;
        } catch (...) { ok = false; }
        report(3, ok, "(2,5) dimension 2cos(pi/5) via the minimal-weight row");
    }

    { // 4: the (3,5) dimension quadruple and its simple currents
        bool ok = true;
        try {
            const ModularDatum md = build_minimal_model(3, 5);
            const long double phi = 2 * std::cos(kPi / 5);
            int ones = 0, phis = 0;
            for (std::size_t i = 0; i < 4; ++i) {
                const long double v = qdim_from_smatrix(md, i).value;
                if (std::abs(v - 1) < 1e-9L) ++ones;
                else if (std::abs(v - phi) < 1e-9L) ++phis;
                const bool expect_current =
                    md.weights[i] == Rational(0) || md.weights[i] == Rational(3, 4);
                ok = ok && is_simple_current(md, i) == expect_current;
            }
            ok = ok && ones == 2 && phis == 2;
        } catch (...) { ok = false; }
        report(4, ok, "(3,5) dimensions (1, phi, phi, 1) with two simple currents");
    }

    { // 5: q-deformed Weyl product vs the closed form and the S-ratio
        bool ok = true;
        try {
            for (long k = 1; k <= 20 && ok; ++k) {
                const long double v = affine_qdim_weyl(1, k, {1}).value;
                ok = std::abs(v - 2 * std::cos(kPi / (k + 2))) < 1e-10L;
                const ModularDatum md = build_affine_sl2(k);
                ok = ok && std::abs(v - qdim_from_smatrix(md, 1).value) < 1e-9L;
            }
        } catch (...) { ok = false; }
        report(5, ok, "sl2 fundamental weight, k = 1..20");
    }

    { // 6: global dimension vs 1/S00^2 on the unitary families
        bool ok = true;
        try {
            const auto g = global_dimension(build_ising());
            ok = std::abs(g.value - 4) < 1e-10L && g.s00_residual < 1e-10L;
            for (const auto& md : builtins()) {
                const auto gd = global_dimension(md);
                if (gd.unitary) ok = ok && gd.s00_residual < 1e-8L;
            }
        } catch (...) { ok = false; }
        report(6, ok, "global dimension equals 1/S00^2 when unitary");
    }

    { // 7: multiplicativity of dimensions over fusion
        bool ok = true;
        try {
            std::vector<ModularDatum> mds = {build_ising()};
            for (long p = 2; p <= 7; ++p)
                for (long q = p + 1; p * q <= 60; ++q)
                    if (std::gcd(p, q) == 1) mds.push_back(build_minimal_model(p, q));
            for (long k = 1; k <= 10; ++k) mds.push_back(build_affine_sl2(k));
            for (const auto& md : mds)
                ok = ok && check_multiplicativity(md, fusion_from_smatrix(md)) < 1e-8L;
        } catch (...) { ok = false; }
        report(7, ok, "qdim(i x j) = qdim(i) qdim(j), pq <= 60 and k <= 10");
    }

    { // 8: spectral radius of N(i) and of its bipartite double vs the S-ratio
        bool ok = true;
        try {
            for (const auto& md : builtins()) {
                const FusionTensor ft = fusion_from_smatrix(md);
                for (std::size_t i = 0; i < md.size() && ok; ++i) {
                    const long double q = qdim_from_smatrix(md, i).value;
                    const long double rn = perron_radius(fusion_matrix(ft, i));
                    const long double rd = spectral_radius(bipartite_double(fusion_matrix(ft, i)));
                    ok = std::abs(rn - q) < 1e-8L && std::abs(rd - rn) < 1e-8L;
                }
            }
        } catch (...) { ok = false; }
        report(8, ok, "Perron radii agree with S-ratio dimensions");
    }

    { // 9: values below 2 are 2cos(pi/n) and their graphs are ADE
        bool ok = true;
        try {
            for (const auto& md : builtins()) {
                const FusionTensor ft = fusion_from_smatrix(md);
                for (std::size_t i = 0; i < md.size() && ok; ++i) {
                    const auto rep = verify_possible_values(md, ft, i);
                    if (rep.qdim < 2.0L - 1e-6L) {
                        // 1 = 2cos(pi/3); anything else below 2 must carry a tag
                        const bool in_family =
                            (rep.classified.tag == DimTag::Integer && rep.classified.tag_param == 1) ||
                            rep.classified.tag == DimTag::TwoCosPiOver;
                        ok = in_family && rep.ade.all_ade() && rep.ade_consistent && rep.rho_matches;
                    }
                }
            }
        } catch (...) { ok = false; }
        report(9, ok, "sub-2 dimensions sit in the 2cos(pi/n) family with ADE graphs");
    }

    { // 10: three-route character limits at truncation 800
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        try {
            const std::size_t N = 800;
            const GradedSeries vac = virasoro_c1_character(0, N);
            for (long n = 1; n <= 6 && ok; ++n) {
                const GradedSeries num = virasoro_c1_character(n, N);
                const long double cr = limit_coefficient_ratio(num, vac).value;
                const long double ps = limit_partial_sum_ratio(num, vac).value;
                const long double ab = limit_abel(num, vac, default_abel_ys()).value;
                const long double want = n + 1;
                ok = std::abs(cr - want) < 0.05L && std::abs(ps - want) < 0.05L &&
                     std::abs(ab - want) < 0.05L && std::abs(cr - ps) < 0.1L &&
                     std::abs(cr - ab) < 0.1L && std::abs(ps - ab) < 0.1L;
            }
            const GradedSeries h = eta_quotient_series(1, N);
            ok = ok && limit_abel(h, h, default_abel_ys()).value == 1.0L;
            const GradedSeries gen = generic_c1_character(N, Rational(1, 3));
            ok = ok && !limit_coefficient_ratio(gen, vac).converged &&
                 !limit_partial_sum_ratio(gen, vac).converged &&
                 !limit_abel(gen, vac, default_abel_ys()).converged;
        } catch (...) { ok = false; }
        report(10, ok && seconds_since(t0) < 30.0, "character limits n+1 within 0.05 at depth 800");
    }

    { // 11: lattice theta limits and lattice dimensions
        bool ok = true;
        try {
            const IntMatrix gram = {{2}};
            const auto vac = lattice_theta_series(gram, {Rational(0)}, 2000);
            const auto cos = lattice_theta_series(gram, {Rational(1, 2)}, 2000);
            ok = std::abs(limit_partial_sum_ratio(cos, vac).value - 1) < 0.05L;
            for (long d : {2, 4, 6}) {
                const IntMatrix g = {{d}};
                const ModularDatum md = build_lattice(g, lattice_dual_cosets(g));
                for (std::size_t i = 0; i < md.size(); ++i)
                    ok = ok && std::abs(qdim_from_smatrix(md, i).value - 1) < 1e-9L;
            }
            const IntMatrix a2 = {{2, -1}, {-1, 2}};
            const ModularDatum md = build_lattice(a2, lattice_dual_cosets(a2));
            for (std::size_t i = 0; i < md.size(); ++i)
                ok = ok && std::abs(qdim_from_smatrix(md, i).value - 1) < 1e-9L;
        } catch (...) { ok = false; }
        report(11, ok, "theta partial-sum limit 1; lattice dimensions all 1");
    }

    { // 12: subgroup/degree ledger across the built-in groups
        bool ok = true;
        try {
            std::vector<FiniteGroupTable> groups = {builtin_s3(), builtin_d4(), builtin_q8(),
                                                    builtin_a4()};
            for (std::size_t n = 1; n <= 12; ++n) groups.push_back(builtin_cyclic(n));
            for (const auto& g : groups) {
                const auto rep = galois_report(g);
                if (g.order <= 16) {
                    const auto want = oracles::subgroups_by_subsets(g);
                    ok = ok && rep.rows.size() == want.size();
                }
                for (const auto& r : rep.rows)
                    ok = ok && r.order * r.index == g.order && r.galois == r.normal;
            }
            ok = ok && character_degree_check(builtin_s3(), {1, 1, 2});
        } catch (...) { ok = false; }
        report(12, ok, "subgroup ledger matches the subset oracle; Galois = normal");
    }

    { // 13: axiom property suites and the eigenvalue oracle
        bool ok = true;
        try {
            for (const auto& md : builtins()) {
                ok = ok && validate(md, 1e-9L).all_pass();
                const FusionTensor ft = fusion_from_smatrix(md);
                ok = ok && fusion_identity_ok(ft, md.vacuum_index) && fusion_commutative_ok(ft) &&
                     fusion_transpose_conjugate_ok(ft, md.conjugation) && fusion_associative_ok(ft);
                for (std::size_t i = 0; i < md.size(); ++i) {
                    ok = ok && qdim_from_smatrix(md, i).value >= 1.0L - 1e-9L;
                    const auto g = bipartite_double(fusion_matrix(ft, i));
                    if (g.n <= 12) {
                        std::vector<std::vector<long double>> a(g.n, std::vector<long double>(g.n));
                        for (std::size_t r = 0; r < g.n; ++r)
                            for (std::size_t c = 0; c < g.n; ++c) a[r][c] = g.at(r, c);
                        ok = ok && std::abs(spectral_radius(g) -
                                            oracles::spectral_radius_oracle(a)) < 1e-9L;
                    }
                }
            }
            std::mt19937 rng(11u);
            std::uniform_int_distribution<std::size_t> size(2, 8);
            std::uniform_int_distribution<long> entry(0, 3);
            for (int t = 0; t < 200 && ok; ++t) {
                const std::size_t n = size(rng);
                SymmetricGraphMatrix g(n);
                std::vector<std::vector<long double>> a(n, std::vector<long double>(n));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i; j < n; ++j) {
                        g.at(i, j) = g.at(j, i) = entry(rng);
                        a[i][j] = a[j][i] = g.at(i, j);
                    }
                ok = std::abs(spectral_radius(g) - oracles::spectral_radius_oracle(a)) < 1e-9L;
            }
        } catch (...) { ok = false; }
        report(13, ok, "axiom suites and randomized eigenvalue cross-check");
    }

    { // 14: the full fixture replay
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        try {
            for (const auto& r : run_reference_fixtures()) ok = ok && r.pass;
        } catch (...) { ok = false; }
        report(14, ok && seconds_since(t0) < 60.0, "reference fixture replay");
    }

    return failures == 0 ? 0 : 1;
}
