#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "fusionkit/errors.hpp"
#include "fusionkit/rational.hpp"

namespace fusionkit {

using Complex = std::complex<long double>;

inline constexpr long double kPi = 3.14159265358979323846264338327950288L;

/// Square complex matrix, row-major.
struct CMatrix {
    std::size_t n = 0;
    std::vector<Complex> a;

    CMatrix() = default;
    explicit CMatrix(std::size_t size) : n(size), a(size * size) {}

    Complex& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Modular data of a rational VOA family: labels, conformal weights,
/// central charge, S-matrix and the charge-conjugation permutation.
struct ModularDatum {
    std::vector<std::string> labels;
    std::vector<Rational> weights;
    Rational central_charge;
    CMatrix s;
    std::vector<std::size_t> conjugation;
    std::size_t vacuum_index = 0;
    // Lattice family keeps the true minimal coset norms here; elsewhere this
    // mirrors `weights`.
    std::vector<Rational> true_weights;

    std::size_t size() const { return labels.size(); }
};

struct CheckResult {
    std::string name;
    bool pass = false;
    long double residual = 0.0L;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }
    long double max_residual() const {
        long double m = 0.0L;
        for (const auto& c : checks) m = std::max(m, c.residual);
        return m;
    }
};

/// Recover the conjugation permutation from S^2, which must be a 0/1
/// permutation matrix within tol.
inline std::vector<std::size_t> conjugation_from_s(const CMatrix& s, long double tol) {
    const std::size_t d = s.n;
    std::vector<std::size_t> conj(d);
    std::vector<bool> used(d, false);
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t hit = d;
        for (std::size_t j = 0; j < d; ++j) {
            Complex v = 0;
            for (std::size_t k = 0; k < d; ++k) v += s.at(i, k) * s.at(k, j);
            if (std::abs(v - Complex(1)) < tol) {
                if (hit != d) throw Error("conjugation_from_s: S^2 row has two unit entries");
                hit = j;
            } else if (std::abs(v) >= tol) {
                throw Error("conjugation_from_s: S^2 is not a permutation matrix");
            }
        }
        if (hit == d || used[hit])
            throw Error("conjugation_from_s: S^2 is not a permutation matrix");
        conj[i] = hit;
        used[hit] = true;
    }
    return conj;
}

/// Index of the unique label of minimal conformal weight (exact comparison).
inline std::size_t min_weight_label(const ModularDatum& md) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < md.size(); ++i)
        if (md.weights[i] < md.weights[k]) k = i;
    for (std::size_t i = 0; i < md.size(); ++i)
        if (i != k && md.weights[i] == md.weights[k])
            throw AmbiguousMinimalWeight("minimal weight attained by labels " +
                                         md.labels[k] + " and " + md.labels[i]);
    return k;
}

inline ValidationReport validate(const ModularDatum& md, long double tol) {
    const std::size_t d = md.size();
    ValidationReport rep;

    long double sym = 0.0L;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            sym = std::max(sym, std::abs(md.s.at(i, j) - md.s.at(j, i)));
    rep.checks.push_back({"s_symmetric", sym < tol, sym});

    // S^2 = C, the permutation matrix of the stored conjugation
    long double s2 = 0.0L;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Complex v = 0;
            for (std::size_t k = 0; k < d; ++k) v += md.s.at(i, k) * md.s.at(k, j);
            Complex want = (md.conjugation[i] == j) ? Complex(1) : Complex(0);
            s2 = std::max(s2, std::abs(v - want));
        }
    rep.checks.push_back({"s_squared_is_conjugation", s2 < tol, s2});

    // (S^-1)_{i,j} = S_{i,j'}:  S * (S pulled back through conjugation) = I
    long double inv = 0.0L;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Complex v = 0;
            for (std::size_t k = 0; k < d; ++k)
                v += md.s.at(i, k) * md.s.at(k, md.conjugation[j]);
            Complex want = (i == j) ? Complex(1) : Complex(0);
            inv = std::max(inv, std::abs(v - want));
        }
    rep.checks.push_back({"s_inverse_via_conjugation", inv < tol, inv});

    // Nonvanishing of the minimal-weight row (first argmin; ties allowed here,
    // min_weight_label is the strict accessor).
    std::size_t k = 0;
    for (std::size_t i = 1; i < d; ++i)
        if (md.weights[i] < md.weights[k]) k = i;
    long double minabs = std::numeric_limits<long double>::max();
    for (std::size_t j = 0; j < d; ++j) minabs = std::min(minabs, std::abs(md.s.at(k, j)));
    rep.checks.push_back({"min_weight_row_nonvanishing", minabs >= tol, minabs});

    return rep;
}

// ---------------------------------------------------------------------------
// Virasoro minimal models

struct MinimalModelLabel {
    long m = 0;
    long n = 0;
};

/// Canonical Kac-table labels of the (p,q) minimal model, vacuum (1,1) first.
/// Among (m,n) ~ (p-m,q-n) the representative minimizing m*q+n is kept.
inline std::vector<MinimalModelLabel> kac_labels(long p, long q) {
    std::vector<MinimalModelLabel> labs;
    for (long m = 1; m < p; ++m)
        for (long n = 1; n < q; ++n)
            if (m * q + n <= (p - m) * q + (q - n)) labs.push_back({m, n});
    std::sort(labs.begin(), labs.end(), [q](const MinimalModelLabel& a, const MinimalModelLabel& b) {
        return a.m * q + a.n < b.m * q + b.n;
    });
    return labs;
}

inline Rational minimal_model_weight(long p, long q, long m, long n) {
    const long t = n * p - m * q;
    return Rational(t * t - (p - q) * (p - q), 4 * p * q);
}

inline ModularDatum build_minimal_model(long p, long q) {
    if (p < 2 || q < 2) throw OutOfRange("minimal model needs p,q >= 2");
    if (p == q || std::gcd(p, q) != 1)
        throw NotCoprime("minimal model needs coprime p != q");

    const auto labs = kac_labels(p, q);
    const std::size_t d = labs.size();

    ModularDatum md;
    md.central_charge = Rational(1) - Rational(6 * (p - q) * (p - q), p * q);
    const long double pref = std::sqrt(8.0L / (static_cast<long double>(p) * q));
    md.s = CMatrix(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto [m, n] = labs[i];
        md.labels.push_back("(" + std::to_string(m) + "," + std::to_string(n) + ")");
        md.weights.push_back(minimal_model_weight(p, q, m, n));
        for (std::size_t j = 0; j < d; ++j) {
            const auto [mp, np] = labs[j];
            const long double sign = ((mp * n + np * m + 1) % 2 == 0) ? 1.0L : -1.0L;
            md.s.at(i, j) = pref * sign *
                            std::sin(kPi * m * mp * q / p) *
                            std::sin(kPi * n * np * p / q);
        }
    }
    md.true_weights = md.weights;
    md.conjugation = conjugation_from_s(md.s, 1e-9L);
    if (md.weights[0] != Rational(0)) throw Error("minimal model vacuum is not label 0");
    return md;
}

/// The c=1/2 three-module family with the S-matrix in its textbook form.
inline ModularDatum build_ising() {
    ModularDatum md;
    md.labels = {"0", "1/2", "1/16"};
    md.weights = {Rational(0), Rational(1, 2), Rational(1, 16)};
    md.true_weights = md.weights;
    md.central_charge = Rational(1, 2);
    const long double h = 0.5L;
    const long double r = std::sqrt(2.0L) / 2.0L;
    md.s = CMatrix(3);
    md.s.at(0, 0) = h;  md.s.at(0, 1) = h;  md.s.at(0, 2) = r;
    md.s.at(1, 0) = h;  md.s.at(1, 1) = h;  md.s.at(1, 2) = -r;
    md.s.at(2, 0) = r;  md.s.at(2, 1) = -r; md.s.at(2, 2) = 0;
    md.conjugation = {0, 1, 2};
    return md;
}

// ---------------------------------------------------------------------------
// Affine sl2 at level k

inline ModularDatum build_affine_sl2(long k) {
    if (k < 1) throw OutOfRange("affine sl2 needs level k >= 1");
    const std::size_t d = static_cast<std::size_t>(k) + 1;
    ModularDatum md;
    md.central_charge = Rational(3 * k, k + 2);
    const long double pref = std::sqrt(2.0L / (k + 2));
    md.s = CMatrix(d);
    for (std::size_t a = 0; a < d; ++a) {
        const long j = static_cast<long>(a);
        md.labels.push_back("j=" + std::to_string(j));
        md.weights.push_back(Rational(j * (j + 2), 4 * (k + 2)));
        for (std::size_t b = 0; b < d; ++b)
            md.s.at(a, b) = pref * std::sin((a + 1) * (b + 1) * kPi / (k + 2));
    }
    md.true_weights = md.weights;
    md.conjugation.resize(d);
    for (std::size_t a = 0; a < d; ++a) md.conjugation[a] = a;
    return md;
}

// ---------------------------------------------------------------------------
// Lattice families

using IntMatrix = std::vector<std::vector<long>>;
using RationalVector = std::vector<Rational>;

inline mpz_class int_determinant(const IntMatrix& g) {
    const std::size_t r = g.size();
    if (r == 1) return g[0][0];
    if (r == 2) return mpz_class(g[0][0]) * g[1][1] - mpz_class(g[0][1]) * g[1][0];
    if (r == 3)
        return mpz_class(g[0][0]) * (mpz_class(g[1][1]) * g[2][2] - mpz_class(g[1][2]) * g[2][1]) -
               mpz_class(g[0][1]) * (mpz_class(g[1][0]) * g[2][2] - mpz_class(g[1][2]) * g[2][0]) +
               mpz_class(g[0][2]) * (mpz_class(g[1][0]) * g[2][1] - mpz_class(g[1][1]) * g[2][0]);
    throw RankUnsupported("lattice rank must be <= 3");
}

/// Smallest eigenvalue of a small symmetric matrix, cyclic Jacobi.
inline long double sym_min_eigenvalue(const IntMatrix& g) {
    const std::size_t r = g.size();
    std::vector<std::vector<long double>> a(r, std::vector<long double>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a[i][j] = g[i][j];
    for (int sweep = 0; sweep < 60; ++sweep) {
        long double off = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-24L) break;
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t q = p + 1; q < r; ++q) {
                if (std::abs(a[p][q]) < 1e-30L) continue;
                const long double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const long double t = (theta >= 0 ? 1.0L : -1.0L) /
                                      (std::abs(theta) + std::sqrt(theta * theta + 1));
                const long double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < r; ++k) {
                    const long double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < r; ++k) {
                    const long double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    long double mn = a[0][0];
    for (std::size_t i = 1; i < r; ++i) mn = std::min(mn, a[i][i]);
    return mn;
}

inline Rational lattice_inner(const IntMatrix& g, const RationalVector& x, const RationalVector& y) {
    Rational s(0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            s = s + x[i] * Rational(g[i][j]) * y[j];
    return s;
}

/// Exact minimum of (alpha,alpha)/2 over the coset shift + Z^r.
inline Rational lattice_min_half_norm(const IntMatrix& g, const RationalVector& shift) {
    const std::size_t r = g.size();
    RationalVector mu(r);
    for (std::size_t i = 0; i < r; ++i) mu[i] = shift[i].mod1();
    Rational best = lattice_inner(g, mu, mu) / Rational(2);
    const long double lmin = sym_min_eigenvalue(g);
    const long C = static_cast<long>(std::ceil(std::sqrt(std::max(0.0L, 2 * best.to_ld() / lmin)))) + 2;
    std::vector<long> x(r, -C);
    while (true) {
        RationalVector v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = mu[i] + Rational(x[i]);
        const Rational h = lattice_inner(g, v, v) / Rational(2);
        if (h < best) best = h;
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (x[i] < C) { ++x[i]; break; }
            x[i] = -C;
        }
        if (i == r) break;
    }
    return best;
}

/// Full set of dual cosets L^o/L in lattice-basis coordinates, zero first.
inline std::vector<RationalVector> lattice_dual_cosets(const IntMatrix& gram) {
    const std::size_t r = gram.size();
    const mpz_class det = int_determinant(gram);
    const long D = static_cast<long>(det.get_si());
    std::vector<RationalVector> out;
    std::vector<long> m(r, 0);
    while (true) {
        // solve G x = m over rationals by Cramer (r <= 3)
        RationalVector x(r);
        for (std::size_t col = 0; col < r; ++col) {
            IntMatrix gm = gram;
            for (std::size_t row = 0; row < r; ++row) gm[row][col] = m[row];
            x[col] = Rational(int_determinant(gm), det);
        }
        for (auto& c : x) c = c.mod1();
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (m[i] < D - 1) { ++m[i]; break; }
            m[i] = 0;
        }
        if (i == r) break;
    }
    // zero coset first, rest in generation order
    auto zero = std::find(out.begin(), out.end(), RationalVector(r, Rational(0)));
    std::iter_swap(out.begin(), zero);
    return out;
}

inline ModularDatum build_lattice(const IntMatrix& gram, const std::vector<RationalVector>& cosets) {
    const std::size_t r = gram.size();
    if (r < 1 || r > 3) throw RankUnsupported("lattice rank must be in 1..3");
    for (std::size_t i = 0; i < r; ++i) {
        if (gram[i].size() != r) throw NotEvenLattice("gram matrix is not square");
        if (gram[i][i] % 2 != 0) throw NotEvenLattice("gram diagonal must be even");
        for (std::size_t j = 0; j < r; ++j)
            if (gram[i][j] != gram[j][i]) throw NotEvenLattice("gram matrix is not symmetric");
    }
    // positive definiteness via leading principal minors
    for (std::size_t k = 1; k <= r; ++k) {
        IntMatrix sub(k, std::vector<long>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = gram[i][j];
        if (int_determinant(sub) <= 0) throw NotPositiveDefinite("gram matrix is not positive definite");
    }
    const mpz_class det = int_determinant(gram);
    if (mpz_class(cosets.size()) != det)
        throw WrongCosetCount("expected " + det.get_str() + " cosets, got " +
                              std::to_string(cosets.size()));
    for (const auto& mu : cosets) {
        if (mu.size() != r) throw WrongCosetCount("coset vector has wrong rank");
        for (std::size_t i = 0; i < r; ++i) {
            Rational gi(0);
            for (std::size_t j = 0; j < r; ++j) gi = gi + Rational(gram[i][j]) * mu[j];
            if (!gi.is_integer()) throw WrongCosetCount("coset vector is not in the dual lattice");
        }
    }
    for (const auto& c : cosets[0])
        if (c != Rational(0)) throw WrongCosetCount("zero coset must come first");

    const std::size_t d = cosets.size();
    ModularDatum md;
    md.central_charge = Rational(static_cast<long>(r));
    md.s = CMatrix(d);
    const long double pref = 1.0L / std::sqrt(static_cast<long double>(det.get_d()));
    for (std::size_t i = 0; i < d; ++i) {
        std::string lab = "[";
        for (std::size_t c = 0; c < r; ++c) lab += (c ? "," : "") + cosets[i][c].mod1().str();
        md.labels.push_back(lab + "]");
        const Rational tw = lattice_min_half_norm(gram, cosets[i]);
        md.true_weights.push_back(tw);
        md.weights.push_back(tw.mod1());
        for (std::size_t j = 0; j < d; ++j) {
            const long double phase = -2.0L * kPi * lattice_inner(gram, cosets[i], cosets[j]).to_ld();
            md.s.at(i, j) = pref * Complex(std::cos(phase), std::sin(phase));
        }
    }
    md.conjugation = conjugation_from_s(md.s, 1e-9L);
    return md;
}

} // namespace fusionkit
