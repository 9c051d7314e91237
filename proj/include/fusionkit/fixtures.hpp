#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fusionkit/galois.hpp"
#include "fusionkit/qdim.hpp"
#include "fusionkit/qseries.hpp"
#include "fusionkit/spectral.hpp"
#include "fusionkit/verlinde.hpp"

namespace fusionkit {

struct FixtureResult {
    std::string key;
    bool pass = false;
    std::string detail;
};

/// Canned worked examples with their expected closed-form values, used as an
/// end-to-end smoke test of the whole pipeline.
inline std::vector<FixtureResult> run_reference_fixtures() {
    std::vector<FixtureResult> out;
    auto record = [&](const std::string& key, bool pass, const std::string& detail) {
        out.push_back({key, pass, detail});
    };
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;

    try {
        const ModularDatum ising = build_ising();
        const FusionTensor ft = fusion_from_smatrix(ising);
        const auto g = global_dimension(ising);
        bool ok = std::abs(g.per_module[0].value - 1) < 1e-9L &&
                  std::abs(g.per_module[1].value - 1) < 1e-9L &&
                  std::abs(g.per_module[2].value - std::sqrt(2.0L)) < 1e-9L;
        record("ising-qdim", ok, "1, 1, sqrt(2)");
        record("ising-global", std::abs(g.value - 4) < 1e-9L, "sum of squares = 4");
        bool fus = ft.at(2, 2, 0) == 1 && ft.at(2, 2, 1) == 1 && ft.at(2, 2, 2) == 0 &&
                   ft.at(1, 1, 0) == 1 && ft.at(1, 2, 2) == 1;
        record("ising-fusion", fus, "sigma x sigma = vacuum + psi");
        const auto rep = verify_possible_values(ising, ft, 2);
        bool ade = rep.rho_matches && rep.ade_consistent && rep.ade.components.size() == 2 &&
                   rep.ade.components[0].name() == "A3" && rep.ade.components[1].name() == "A3";
        record("ising-sigma-graph", ade, "bipartite double = two A3 strands, norm sqrt(2)");
    } catch (const Error& e) {
        record("ising", false, e.what());
    }

    try {
        const ModularDatum ly = build_minimal_model(2, 5);
        const auto g = global_dimension(ly);
        bool ok = g.per_module.size() == 2 && std::abs(g.per_module[0].value - 1) < 1e-9L &&
                  std::abs(g.per_module[1].value - phi) < 1e-9L;
        record("lee-yang-qdim", ok, "1, golden ratio");
        const FusionTensor ft = fusion_from_smatrix(ly);
        const auto rep = verify_possible_values(ly, ft, 1);
        bool ade = rep.rho_matches && rep.ade_consistent && rep.ade.components.size() == 1 &&
                   rep.ade.components[0].name() == "A4";
        record("lee-yang-graph", ade, "double of N(1) is a single A4 strand");
    } catch (const Error& e) {
        record("lee-yang", false, e.what());
    }

    try {
        const ModularDatum mm = build_minimal_model(3, 5);
        const auto g = global_dimension(mm);
        const long double want[4] = {1.0L, 1.0L, phi, phi};
        std::vector<long double> got;
        for (const auto& dv : g.per_module) got.push_back(dv.value);
        std::sort(got.begin(), got.end());
        bool ok = got.size() == 4;
        for (std::size_t i = 0; ok && i < 4; ++i) ok = std::abs(got[i] - want[i]) < 1e-9L;
        // the weight-0 and weight-3/4 labels are the simple currents
        for (std::size_t i = 0; ok && i < 4; ++i) {
            const bool sc = is_simple_current(mm, i);
            const bool expect = mm.weights[i] == Rational(0) || mm.weights[i] == Rational(3, 4);
            ok = sc == expect;
        }
        record("three-five-qdim", ok, "1, 1, phi, phi with two simple currents");
    } catch (const Error& e) {
        record("three-five-qdim", false, e.what());
    }

    try {
        const auto dv = affine_qdim_weyl(1, 1, {1});
        record("sl2-level1-qdim", std::abs(dv.value - 1) < 1e-9L, "fundamental at level 1 has dim 1");
        const auto dv2 = affine_qdim_weyl(2, 1, {1, 0});
        record("a2-level1-qdim", std::abs(dv2.value - 1) < 1e-9L, "A2 level 1 fundamental has dim 1");
        const auto dvk = affine_qdim_weyl(1, 3, {1});
        bool ok = dvk.tag == DimTag::TwoCosPiOver && dvk.tag_param == 5;
        record("sl2-level3-qdim", ok, "fundamental at level 3 is 2cos(pi/5)");
    } catch (const Error& e) {
        record("affine-qdim", false, e.what());
    }

    try {
        record("l1-fusion-3-2", l1_fusion_check(3, 2), "L(1,9) x L(1,4) degree identity");
    } catch (const Error& e) {
        record("l1-fusion-3-2", false, e.what());
    }

    try {
        const auto rep = galois_report(builtin_s3());
        bool ok = rep.rows.size() == 6;
        std::size_t normal = 0;
        for (const auto& r : rep.rows) normal += r.normal ? 1 : 0;
        ok = ok && normal == 3; // {e}, A3, S3
        record("s3-subgroup-ledger", ok, "6 subgroups, 3 of them normal");
    } catch (const Error& e) {
        record("s3-subgroup-ledger", false, e.what());
    }

    return out;
}

} // namespace fusionkit
