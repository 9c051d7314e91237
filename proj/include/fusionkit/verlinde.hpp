#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fusionkit/errors.hpp"
#include "fusionkit/modular_data.hpp"

namespace fusionkit {

/// Nonnegative-integer fusion multiplicities N_{i,j}^k.
struct FusionTensor {
    std::size_t dim = 0;
    std::vector<long> entries; // flat (i*dim + j)*dim + k

    FusionTensor() = default;
    explicit FusionTensor(std::size_t d) : dim(d), entries(d * d * d, 0) {}

    long& at(std::size_t i, std::size_t j, std::size_t k) {
        return entries[(i * dim + j) * dim + k];
    }
    long at(std::size_t i, std::size_t j, std::size_t k) const {
        return entries[(i * dim + j) * dim + k];
    }
};

struct FusionDiagnostics {
    long double max_int_residual = 0.0L; // worst distance of a Verlinde sum to its integer
};

/// Verlinde formula: N_{i,j}^k = sum_s S_{j,s} S_{i,s} (S^-1)_{s,k} / S_{0,s},
/// with S^-1 realized through the conjugation permutation.
inline FusionTensor fusion_from_smatrix(const ModularDatum& md, long double tol = 1e-6L,
                                        FusionDiagnostics* diag = nullptr) {
    const std::size_t d = md.size();
    FusionTensor ft(d);
    FusionDiagnostics local;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Complex v = 0;
                for (std::size_t s = 0; s < d; ++s)
                    v += md.s.at(j, s) * md.s.at(i, s) *
                         md.s.at(s, md.conjugation[k]) / md.s.at(0, s);
                const long double re = v.real();
                const long n = static_cast<long>(std::llround(re));
                const long double res = std::max(std::abs(re - n), std::abs(v.imag()));
                local.max_int_residual = std::max(local.max_int_residual, res);
                if (res > tol)
                    throw NonIntegerFusion("N(" + std::to_string(i) + "," + std::to_string(j) +
                                           ")^" + std::to_string(k) + " = " +
                                           std::to_string(static_cast<double>(re)));
                if (n < 0)
                    throw NegativeFusion("negative fusion multiplicity at (" + std::to_string(i) +
                                         "," + std::to_string(j) + "," + std::to_string(k) + ")");
                ft.at(i, j, k) = n;
            }
    if (diag) *diag = local;
    return ft;
}

/// Fusion matrix N(i), rows j, columns k.
inline std::vector<std::vector<long>> fusion_matrix(const FusionTensor& ft, std::size_t i) {
    if (i >= ft.dim) throw OutOfRange("fusion_matrix label out of range");
    std::vector<std::vector<long>> m(ft.dim, std::vector<long>(ft.dim));
    for (std::size_t j = 0; j < ft.dim; ++j)
        for (std::size_t k = 0; k < ft.dim; ++k) m[j][k] = ft.at(i, j, k);
    return m;
}

/// Max residual of S^-1 N(i) S - diag(S_{i,s}/S_{0,s}).
inline long double verify_diagonalization(const ModularDatum& md, const FusionTensor& ft,
                                          std::size_t i) {
    const std::size_t d = md.size();
    // S^-1 via conjugation identity
    CMatrix sinv(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) sinv.at(a, b) = md.s.at(a, md.conjugation[b]);
    long double worst = 0.0L;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Complex v = 0;
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    v += sinv.at(a, j) * static_cast<long double>(ft.at(i, j, k)) * md.s.at(k, b);
            const Complex want = (a == b) ? md.s.at(i, a) / md.s.at(0, a) : Complex(0);
            worst = std::max(worst, std::abs(v - want));
        }
    return worst;
}

/// Decomposition of M^i x M^j as a multiset of labels (sorted, with repeats).
inline std::vector<std::size_t> tensor_decompose(const FusionTensor& ft, std::size_t i,
                                                 std::size_t j) {
    if (i >= ft.dim || j >= ft.dim) throw OutOfRange("tensor_decompose label out of range");
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < ft.dim; ++k)
        for (long c = 0; c < ft.at(i, j, k); ++c) out.push_back(k);
    if (out.empty())
        throw EmptyFusionProduct("fusion product of " + std::to_string(i) + " and " +
                                 std::to_string(j) + " is empty");
    return out;
}

// --- fusion-ring axiom checks ------------------------------------------------

inline bool fusion_identity_ok(const FusionTensor& ft, std::size_t vacuum = 0) {
    for (std::size_t j = 0; j < ft.dim; ++j)
        for (std::size_t k = 0; k < ft.dim; ++k)
            if (ft.at(vacuum, j, k) != (j == k ? 1 : 0)) return false;
    return true;
}

inline bool fusion_commutative_ok(const FusionTensor& ft) {
    for (std::size_t i = 0; i < ft.dim; ++i)
        for (std::size_t j = 0; j < ft.dim; ++j)
            for (std::size_t k = 0; k < ft.dim; ++k)
                if (ft.at(i, j, k) != ft.at(j, i, k)) return false;
    return true;
}

inline bool fusion_transpose_conjugate_ok(const FusionTensor& ft,
                                          const std::vector<std::size_t>& conjugation) {
    for (std::size_t i = 0; i < ft.dim; ++i)
        for (std::size_t j = 0; j < ft.dim; ++j)
            for (std::size_t k = 0; k < ft.dim; ++k)
                if (ft.at(i, j, k) != ft.at(conjugation[i], k, j)) return false;
    return true;
}

/// Exhaustive for dim <= 13, randomized quadruples above that.
inline bool fusion_associative_ok(const FusionTensor& ft, std::uint32_t seed = 1u) {
    const std::size_t d = ft.dim;
    auto check = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        long lhs = 0, rhs = 0;
        for (std::size_t s = 0; s < d; ++s) {
            lhs += ft.at(i, j, s) * ft.at(s, k, l);
            rhs += ft.at(j, k, s) * ft.at(i, s, l);
        }
        return lhs == rhs;
    };
    if (d <= 13) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t l = 0; l < d; ++l)
                        if (!check(i, j, k, l)) return false;
        return true;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    for (int t = 0; t < 20000; ++t)
        if (!check(pick(rng), pick(rng), pick(rng), pick(rng))) return false;
    return true;
}

} // namespace fusionkit
