#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "fusionkit/errors.hpp"
#include "fusionkit/modular_data.hpp"
#include "fusionkit/verlinde.hpp"

namespace fusionkit {

enum class DimTag { Integer, TwoCosPiOver, GenericAlgebraic };

/// A quantum dimension with its recognized exact form, if any.
struct DimensionValue {
    long double value = 0.0L;
    DimTag tag = DimTag::GenericAlgebraic;
    long tag_param = 0;          // m for Integer, n for TwoCosPiOver
    long double residual = 0.0L; // distance to the tagged exact value

    std::string tag_str() const {
        switch (tag) {
            case DimTag::Integer: return "Integer(" + std::to_string(tag_param) + ")";
            case DimTag::TwoCosPiOver: return "TwoCosPiOver(" + std::to_string(tag_param) + ")";
            default: return "GenericAlgebraic";
        }
    }
};

/// Recognize x as an integer >= 1, as 2cos(pi/n) with n >= 3, or leave it
/// generic. Values at or above 2 - tol are never tagged TwoCosPiOver.
inline DimensionValue classify_dimension(long double x, long double tol = 1e-6L) {
    if (x <= 0) throw NotPositive("dimension must be positive");
    if (x < 1 - tol) throw BelowOne("dimension below 1: " + std::to_string(static_cast<double>(x)));
    DimensionValue dv;
    dv.value = x;
    const long r = static_cast<long>(std::llround(x));
    if (r >= 1 && std::abs(x - r) < tol) {
        dv.tag = DimTag::Integer;
        dv.tag_param = r;
        dv.residual = std::abs(x - r);
        return dv;
    }
    if (x < 2 - tol) {
        const long double xc = std::min(x, 2.0L - 1e-18L);
        const long n = static_cast<long>(std::llround(kPi / std::acos(xc / 2)));
        if (n >= 3 && n <= 1000000) {
            const long double exact = 2 * std::cos(kPi / n);
            if (std::abs(x - exact) < tol) {
                dv.tag = DimTag::TwoCosPiOver;
                dv.tag_param = n;
                dv.residual = std::abs(x - exact);
                return dv;
            }
        }
    }
    dv.tag = DimTag::GenericAlgebraic;
    dv.residual = 0.0L;
    return dv;
}

/// S-ratio quantum dimension S_{i,k}/S_{0,k}, k the minimal-weight label.
inline DimensionValue qdim_from_smatrix(const ModularDatum& md, std::size_t i,
                                        long double classify_tol = 1e-6L) {
    const std::size_t k = min_weight_label(md);
    const Complex ratio = md.s.at(i, k) / md.s.at(md.vacuum_index, k);
    if (std::abs(ratio.imag()) >= 1e-9L)
        throw ComplexRatio("qdim ratio has imaginary part " +
                           std::to_string(static_cast<double>(ratio.imag())));
    return classify_dimension(ratio.real(), classify_tol);
}

struct GlobalDimension {
    long double value = 0.0L;
    std::vector<DimensionValue> per_module;
    bool unitary = false;          // all non-vacuum weights positive
    long double s00_residual = 0.0L; // |value - 1/S00^2| when unitary
};

inline GlobalDimension global_dimension(const ModularDatum& md) {
    GlobalDimension g;
    for (std::size_t i = 0; i < md.size(); ++i) {
        g.per_module.push_back(qdim_from_smatrix(md, i));
        g.value += g.per_module.back().value * g.per_module.back().value;
    }
    g.unitary = true;
    for (std::size_t i = 0; i < md.size(); ++i)
        if (i != md.vacuum_index && !(md.weights[i] > Rational(0))) g.unitary = false;
    if (g.unitary) {
        const long double s00 = md.s.at(md.vacuum_index, md.vacuum_index).real();
        g.s00_residual = std::abs(g.value - 1.0L / (s00 * s00));
    }
    return g;
}

inline bool is_simple_current(const ModularDatum& md, std::size_t i, long double tol = 1e-6L) {
    return std::abs(qdim_from_smatrix(md, i).value - 1.0L) < tol;
}

/// Max residual of qdim(i x j) = qdim(i) * qdim(j) over all pairs.
inline long double check_multiplicativity(const ModularDatum& md, const FusionTensor& ft) {
    const std::size_t d = md.size();
    std::vector<long double> q(d);
    for (std::size_t i = 0; i < d; ++i) q[i] = qdim_from_smatrix(md, i).value;
    long double worst = 0.0L;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            long double s = 0;
            for (std::size_t k = 0; k < d; ++k) s += ft.at(i, j, k) * q[k];
            worst = std::max(worst, std::abs(s - q[i] * q[j]));
        }
    return worst;
}

/// q-deformed Weyl dimension formula for type A_rank at level k.
/// lambda is given by its Dynkin labels (nonnegative integers).
inline DimensionValue affine_qdim_weyl(long rank, long k, const std::vector<long>& lambda,
                                       long double classify_tol = 1e-6L) {
    if (rank < 1 || rank > 8) throw RankUnsupported("type A rank must be in 1..8");
    if (static_cast<long>(lambda.size()) != rank)
        throw NotDominant("lambda needs one Dynkin label per node");
    long level = 0;
    for (long c : lambda) {
        if (c < 0) throw NotDominant("Dynkin labels must be nonnegative");
        level += c;
    }
    if (level > k) throw LevelExceeded("<lambda,theta> exceeds the level");

    const long h = rank + 1; // dual Coxeter number of A_rank
    const long double t = kPi / (k + h);
    auto qnum = [&](long n) { return std::sin(n * t); }; // sin(n t)/sin(t) ratios cancel below
    long double prod = 1.0L;
    // positive roots e_i - e_j, 1 <= i < j <= rank+1
    for (long i = 1; i <= rank; ++i)
        for (long j = i + 1; j <= rank + 1; ++j) {
            long num = 0;
            for (long s = i; s < j; ++s) num += lambda[s - 1] + 1;
            prod *= qnum(num) / qnum(j - i);
        }
    return classify_dimension(prod, classify_tol);
}

} // namespace fusionkit
