#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fusionkit/errors.hpp"
#include "fusionkit/modular_data.hpp"
#include "fusionkit/rational.hpp"

namespace fusionkit {

/// Truncated graded-dimension series: coefficient a_j sits at exponent
/// leading_exponent + j * grading_step.  The -c/24 prefactor is never stored;
/// ratios of series from the same family cancel it.
struct GradedSeries {
    Rational leading_exponent;
    Rational grading_step{1};
    std::vector<mpz_class> coeff;

    std::size_t truncation() const { return coeff.empty() ? 0 : coeff.size() - 1; }
};

/// Coefficients of prod_{n>=1} (1-q^n)^{-d} up to q^N (Heisenberg character).
inline GradedSeries eta_quotient_series(long d, std::size_t N, Rational leading = Rational(0)) {
    if (d < 1) throw OutOfRange("eta quotient needs d >= 1");
    GradedSeries s;
    s.leading_exponent = leading;
    s.coeff.assign(N + 1, 0);
    s.coeff[0] = 1;
    for (long rep = 0; rep < d; ++rep)
        for (std::size_t n = 1; n <= N; ++n)
            for (std::size_t j = n; j <= N; ++j) s.coeff[j] += s.coeff[j - n];
    return s;
}

/// Character of L(1, n^2/4): a_j = p(j) - p(j - n - 1).
inline GradedSeries virasoro_c1_character(long n, std::size_t N) {
    if (n < 0) throw OutOfRange("virasoro_c1_character needs n >= 0");
    const GradedSeries part = eta_quotient_series(1, N);
    GradedSeries s;
    s.leading_exponent = Rational(n * n, 4);
    s.coeff.assign(N + 1, 0);
    for (std::size_t j = 0; j <= N; ++j) {
        s.coeff[j] = part.coeff[j];
        if (j >= static_cast<std::size_t>(n) + 1) s.coeff[j] -= part.coeff[j - n - 1];
    }
    return s;
}

/// Character of L(1,h) for h not a quarter square: plain partition numbers.
inline GradedSeries generic_c1_character(std::size_t N, Rational h = Rational(0)) {
    return eta_quotient_series(1, N, h);
}

/// Theta series of the coset L+shift, counted on the 1/(2 det) exponent grid.
inline GradedSeries lattice_theta_series(const IntMatrix& gram, const RationalVector& shift,
                                         std::size_t N) {
    const std::size_t r = gram.size();
    if (r < 1 || r > 3) throw RankUnsupported("lattice rank must be in 1..3");
    for (std::size_t k = 1; k <= r; ++k) {
        IntMatrix sub(k, std::vector<long>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = gram[i][j];
        if (int_determinant(sub) <= 0) throw NotPositiveDefinite("gram matrix is not positive definite");
    }
    const mpz_class det = int_determinant(gram);
    const Rational step(1, 2 * static_cast<long>(det.get_si()));

    GradedSeries s;
    s.leading_exponent = Rational(0);
    s.grading_step = step;
    s.coeff.assign(N + 1, 0);

    const Rational max_half_norm = step * Rational(static_cast<long>(N));
    const long double lmin = sym_min_eigenvalue(gram);
    long double shiftmax = 0;
    for (const auto& c : shift) shiftmax = std::max(shiftmax, std::abs(c.to_ld()));
    const long C = static_cast<long>(
                       std::ceil(std::sqrt(std::max(0.0L, 2 * max_half_norm.to_ld() / lmin)))) +
                   static_cast<long>(std::ceil(shiftmax)) + 2;

    std::vector<long> x(r, -C);
    while (true) {
        RationalVector v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = shift[i] + Rational(x[i]);
        const Rational half_norm = lattice_inner(gram, v, v) / Rational(2);
        const Rational slot = half_norm / step;
        if (slot.is_integer() && slot <= Rational(static_cast<long>(N)))
            ++s.coeff[static_cast<std::size_t>(slot.num().get_si())];
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (x[i] < C) { ++x[i]; break; }
            x[i] = -C;
        }
        if (i == r) break;
    }
    return s;
}

// ---------------------------------------------------------------------------
// The three limit routes

enum class LimitRoute { CoefficientRatio, PartialSumRatio, AbelLimit };

struct LimitEstimate {
    LimitRoute route;
    long double value = 0.0L;
    std::vector<std::pair<long double, long double>> trace; // (parameter, estimate)
    bool converged = false;
    long double tolerance = 0.0L;
    std::vector<long double> skipped; // Abel route: y values failing the tail bound
};

namespace detail {

// Least-squares fit of y = a + b/sqrt(j) + c/j over the given points,
// returning the extrapolated constant term a.  The drift of partition-type
// coefficient ratios is O(j^{-1/2}) with an O(1/j) correction, so removing
// both terms is what makes truncation ~800 usable.
inline long double fit_extrapolate(const std::vector<std::pair<long double, long double>>& pts) {
    if (pts.empty()) throw AllZeroDenominator("no usable ratio points");
    if (pts.size() < 3) {
        long double s = 0;
        for (const auto& p : pts) s += p.second;
        return s / pts.size();
    }
    long double m[3][3] = {};
    long double rhs[3] = {};
    for (const auto& [j, y] : pts) {
        const long double b[3] = {1.0L, 1.0L / std::sqrt(j), 1.0L / j};
        for (int r = 0; r < 3; ++r) {
            rhs[r] += b[r] * y;
            for (int c = 0; c < 3; ++c) m[r][c] += b[r] * b[c];
        }
    }
    // 3x3 Gaussian elimination with partial pivoting
    int idx[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[idx[r]][col]) > std::abs(m[idx[piv]][col])) piv = r;
        std::swap(idx[col], idx[piv]);
        for (int r = col + 1; r < 3; ++r) {
            const long double f = m[idx[r]][col] / m[idx[col]][col];
            for (int c = col; c < 3; ++c) m[idx[r]][c] -= f * m[idx[col]][c];
            rhs[idx[r]] -= f * rhs[idx[col]];
        }
    }
    long double sol[3];
    for (int r = 2; r >= 0; --r) {
        long double v = rhs[idx[r]];
        for (int c = r + 1; c < 3; ++c) v -= m[idx[r]][c] * sol[c];
        sol[r] = v / m[idx[r]][r];
    }
    return sol[0];
}

inline long double coeff_ratio_estimate(const GradedSeries& A, const GradedSeries& B,
                                        std::size_t upto, std::size_t window) {
    std::vector<std::pair<long double, long double>> pts;
    for (std::size_t j = upto; j > 0 && pts.size() < window; --j) {
        if (B.coeff[j] == 0) continue;
        pts.push_back({static_cast<long double>(j),
                       static_cast<long double>(A.coeff[j].get_d() / B.coeff[j].get_d())});
    }
    return fit_extrapolate(pts);
}

} // namespace detail

/// Ratio-of-coefficients route: lim a_n / b_n, drift-corrected over a
/// trailing window.  Window 0 means max(20, N/8).
inline LimitEstimate limit_coefficient_ratio(const GradedSeries& A, const GradedSeries& B,
                                             std::size_t window = 0, long double tol = 0.1L) {
    const std::size_t N = std::min(A.truncation(), B.truncation());
    bool any = false;
    for (const auto& b : B.coeff)
        if (b != 0) any = true;
    if (!any) throw AllZeroDenominator("denominator series is identically zero");

    LimitEstimate est;
    est.route = LimitRoute::CoefficientRatio;
    est.tolerance = tol;
    for (std::size_t m : {N / 8, N / 4, N / 2, N}) {
        if (m < 8) continue;
        const std::size_t w = window ? window : std::max<std::size_t>(20, m / 8);
        est.trace.push_back({static_cast<long double>(m),
                             detail::coeff_ratio_estimate(A, B, m, w)});
    }
    est.value = est.trace.back().second;
    est.converged = est.trace.size() >= 2 &&
                    std::abs(est.trace.back().second - est.trace[est.trace.size() - 2].second) < tol;
    return est;
}

/// Cumulative-sum route: lim (sum a) / (sum b), with the same drift model
/// solved exactly through three geometric checkpoints.
inline LimitEstimate limit_partial_sum_ratio(const GradedSeries& A, const GradedSeries& B,
                                             long double tol = 0.1L) {
    const std::size_t N = std::min(A.truncation(), B.truncation());
    std::vector<long double> ca(N + 1), cb(N + 1);
    mpz_class sa = 0, sb = 0;
    for (std::size_t j = 0; j <= N; ++j) {
        sa += A.coeff[j];
        sb += B.coeff[j];
        ca[j] = static_cast<long double>(sa.get_d());
        cb[j] = static_cast<long double>(sb.get_d());
    }
    if (cb[N] == 0) throw AllZeroDenominator("denominator series is identically zero");

    auto raw = [&](std::size_t m) { return ca[m] / cb[m]; };
    LimitEstimate est;
    est.route = LimitRoute::PartialSumRatio;
    est.tolerance = tol;
    for (std::size_t m : {N / 8, N / 4, N / 2, N}) {
        if (m < 8 || cb[m] == 0) continue;
        long double e = raw(m);
        if (m >= 32 && cb[m / 4] > 0) {
            const long double r1 = raw(m / 4), r2 = raw(m / 2), r3 = raw(m);
            // Extrapolate only when the checkpoints drift monotonically
            // (smooth truncation bias); step-function noise, as with sparse
            // theta series, would be amplified by the fit.
            if ((r3 - r2) * (r2 - r1) > 0) {
                const long double fitted = detail::fit_extrapolate(
                    {{static_cast<long double>(m / 4), r1},
                     {static_cast<long double>(m / 2), r2},
                     {static_cast<long double>(m), r3}});
                if (std::abs(fitted - r3) <= 2 * std::abs(r3 - r1)) e = fitted;
            }
        }
        est.trace.push_back({static_cast<long double>(m), e});
    }
    est.value = est.trace.back().second;
    est.converged = est.trace.size() >= 2 &&
                    std::abs(est.trace.back().second - est.trace[est.trace.size() - 2].second) < tol;
    return est;
}

/// Abel route: evaluate the truncated character ratio at q = e^{-2 pi y} for
/// each admissible y (tail bound a_N q^N/(1-q) < 1e-9 * denominator) and
/// extrapolate log(ratio) to y = 0 through the last <= 3 admissible points.
/// The exact-cancellation structure (ratio = sum of exponentials in y) makes
/// the log-quadratic fit essentially exact at the y this bound admits.
inline LimitEstimate limit_abel(const GradedSeries& A, const GradedSeries& B,
                                const std::vector<long double>& y_sequence,
                                long double tol = 0.05L) {
    const std::size_t N = std::min(A.truncation(), B.truncation());
    const long double step = B.grading_step.to_ld();
    const long double dE = A.leading_exponent.to_ld() - B.leading_exponent.to_ld();
    std::vector<long double> acoef(N + 1), bcoef(N + 1);
    for (std::size_t j = 0; j <= N; ++j) {
        acoef[j] = static_cast<long double>(A.coeff[j].get_d());
        bcoef[j] = static_cast<long double>(B.coeff[j].get_d());
    }

    LimitEstimate est;
    est.route = LimitRoute::AbelLimit;
    est.tolerance = tol;
    std::vector<std::pair<long double, long double>> raw; // (y, ratio at y)
    for (long double y : y_sequence) {
        const long double qs = std::exp(-2 * kPi * y * step); // q^{grading_step}
        long double num = 0, den = 0, qn = 1;
        for (std::size_t j = 0; j <= N; ++j) {
            num += acoef[j] * qn;
            den += bcoef[j] * qn;
            qn *= qs;
        }
        const long double tail_scale = std::pow(qs, static_cast<long double>(N)) / (1 - qs);
        const bool admissible = den > 0 &&
                                acoef[N] * tail_scale < 1e-9L * den &&
                                bcoef[N] * tail_scale < 1e-9L * den;
        if (!admissible) {
            est.skipped.push_back(y);
            continue;
        }
        raw.push_back({y, std::exp(-2 * kPi * y * dE) * num / den});
        // progressive estimate: log-polynomial fit through the last <= 3 points
        const std::size_t n = std::min<std::size_t>(3, raw.size());
        std::vector<long double> ys, ls;
        for (std::size_t t = raw.size() - n; t < raw.size(); ++t) {
            ys.push_back(raw[t].first);
            ls.push_back(std::log(raw[t].second));
        }
        long double at0;
        if (n == 1) {
            at0 = ls[0];
        } else if (n == 2) {
            at0 = ls[0] + (ls[1] - ls[0]) * (0 - ys[0]) / (ys[1] - ys[0]);
        } else {
            // Lagrange quadratic at y = 0
            at0 = 0;
            for (int a = 0; a < 3; ++a) {
                long double term = ls[a];
                for (int b = 0; b < 3; ++b)
                    if (b != a) term *= (0 - ys[b]) / (ys[a] - ys[b]);
                at0 += term;
            }
        }
        est.trace.push_back({y, std::exp(at0)});
    }
    if (est.trace.empty()) throw NoAdmissiblePoints("every y failed the truncation tail bound");
    est.value = est.trace.back().second;
    est.converged = est.trace.size() >= 2 &&
                    std::abs(est.trace.back().second - est.trace[est.trace.size() - 2].second) < tol;
    return est;
}

/// Geometric y grid for the Abel route.
inline std::vector<long double> default_abel_ys(long double y0 = 0.08L, long double factor = 0.9L,
                                                int count = 40) {
    std::vector<long double> ys;
    long double y = y0;
    for (int i = 0; i < count; ++i, y *= factor) ys.push_back(y);
    return ys;
}

/// Checks sum_{k=m-n}^{m+n} (2k+1) = (2m+1)(2n+1) exactly, and that the
/// coefficient-ratio estimates of both sides of the L(1,m^2) fusion identity
/// agree within 0.1 at truncation 800.
inline bool l1_fusion_check(long m, long n, std::size_t N = 800) {
    if (m < n || n < 0) throw OutOfRange("l1_fusion_check needs m >= n >= 0");
    long lhs = 0;
    for (long k = m - n; k <= m + n; ++k) lhs += 2 * k + 1;
    if (lhs != (2 * m + 1) * (2 * n + 1)) return false;

    const GradedSeries vac = virasoro_c1_character(0, N);
    auto est = [&](long mm) {
        return limit_coefficient_ratio(virasoro_c1_character(2 * mm, N), vac).value;
    };
    long double sum_side = 0;
    for (long k = m - n; k <= m + n; ++k) sum_side += est(k);
    const long double prod_side = est(m) * est(n);
    return std::abs(sum_side - prod_side) < 0.1L;
}

} // namespace fusionkit
