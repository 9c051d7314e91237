#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fusionkit/errors.hpp"
#include "fusionkit/qdim.hpp"
#include "fusionkit/verlinde.hpp"

namespace fusionkit {

/// Symmetric nonnegative-integer matrix viewed as an undirected multigraph
/// (loops allowed on the diagonal).
struct SymmetricGraphMatrix {
    std::size_t n = 0;
    std::vector<long> a; // row-major

    SymmetricGraphMatrix() = default;
    explicit SymmetricGraphMatrix(std::size_t size) : n(size), a(size * size, 0) {}

    long& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    long at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Bipartite double [[0, N], [N^T, 0]] of a (possibly non-symmetric) fusion
/// matrix.  Its spectral radius equals the largest singular value of N, which
/// for a symmetric N is the Perron-Frobenius eigenvalue.
inline SymmetricGraphMatrix bipartite_double(const std::vector<std::vector<long>>& m) {
    const std::size_t d = m.size();
    SymmetricGraphMatrix g(2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            g.at(i, d + k) = m[i][k];
            g.at(d + k, i) = m[i][k];
        }
    return g;
}

/// Spectral radius by power iteration on M + I from the all-ones vector.
/// The +I shift keeps the iteration from oscillating between the +rho and
/// -rho eigenspaces that bipartite graphs always carry.
inline long double spectral_radius(const SymmetricGraphMatrix& g, long double tol = 1e-12L,
                                   std::size_t max_iter = 100000) {
    const std::size_t n = g.n;
    if (n == 0) return 0.0L;
    std::vector<long double> v(n, 1.0L / std::sqrt(static_cast<long double>(n))), w(n);
    long double prev = -1.0L;
    for (std::size_t it = 0; it < max_iter; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            long double s = v[i]; // the +I shift
            for (std::size_t j = 0; j < n; ++j) s += g.at(i, j) * v[j];
            w[i] = s;
        }
        long double norm = 0, ray = 0;
        for (std::size_t i = 0; i < n; ++i) {
            norm += w[i] * w[i];
            ray += v[i] * w[i];
        }
        norm = std::sqrt(norm);
        if (norm == 0) return 0.0L; // zero matrix (shift keeps this from happening unless n=0)
        const long double est = ray - 1.0L; // Rayleigh quotient of M itself
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        if (it > 0 && std::abs(est - prev) < tol) return est;
        prev = est;
    }
    throw NoConvergence("power iteration did not settle within the iteration budget");
}

// ---------------------------------------------------------------------------
// ADE recognition

enum class AdeType { A, D, E6, E7, E8, NotADE };

struct AdeComponent {
    AdeType type = AdeType::NotADE;
    std::size_t vertices = 0;    // n of A(n)/D(n), 6/7/8 for E
    long coxeter_number = 0;     // h with norm 2cos(pi/h); 0 when NotADE
    std::vector<std::size_t> members;

    std::string name() const {
        switch (type) {
            case AdeType::A: return "A" + std::to_string(vertices);
            case AdeType::D: return "D" + std::to_string(vertices);
            case AdeType::E6: return "E6";
            case AdeType::E7: return "E7";
            case AdeType::E8: return "E8";
            default: return "NotADE";
        }
    }
};

struct AdeClassification {
    std::vector<AdeComponent> components;

    bool all_ade() const {
        return std::all_of(components.begin(), components.end(),
                           [](const AdeComponent& c) { return c.type != AdeType::NotADE; });
    }
    long max_coxeter_number() const {
        long h = 0;
        for (const auto& c : components) h = std::max(h, c.coxeter_number);
        return h;
    }
};

namespace detail {

inline AdeComponent classify_component(const SymmetricGraphMatrix& g,
                                       const std::vector<std::size_t>& members) {
    AdeComponent comp;
    comp.members = members;
    comp.vertices = members.size();

    // Any loop or multi-edge already forces norm >= 2.
    for (std::size_t u : members) {
        if (g.at(u, u) != 0) return comp;
        for (std::size_t v : members)
            if (g.at(u, v) >= 2) return comp;
    }
    // Tree check: a connected simple graph is a tree iff edges = vertices - 1.
    std::size_t edge_twice = 0;
    std::vector<std::size_t> deg;
    for (std::size_t u : members) {
        std::size_t du = 0;
        for (std::size_t v : members) du += static_cast<std::size_t>(g.at(u, v));
        deg.push_back(du);
        edge_twice += du;
    }
    if (edge_twice != 2 * (members.size() - 1)) return comp;

    const std::size_t deg3 = static_cast<std::size_t>(std::count(deg.begin(), deg.end(), 3));
    if (*std::max_element(deg.begin(), deg.end()) > 3 || deg3 > 1) return comp;

    const std::size_t n = members.size();
    if (deg3 == 0) { // path
        comp.type = AdeType::A;
        comp.coxeter_number = static_cast<long>(n) + 1;
        return comp;
    }
    // unique degree-3 vertex: measure the three arm lengths
    std::size_t branch = members.size();
    for (std::size_t t = 0; t < members.size(); ++t)
        if (deg[t] == 3) branch = members[t];
    std::vector<std::size_t> arms;
    for (std::size_t v : members) {
        if (v == branch || g.at(branch, v) == 0) continue;
        std::size_t len = 1, prev = branch, cur = v;
        while (true) {
            std::size_t next = g.n;
            for (std::size_t w : members)
                if (w != prev && g.at(cur, w) != 0) next = w;
            if (next == g.n) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) return comp; // unreachable for a tree, kept for safety
    if (arms[0] == 1 && arms[1] == 1) {
        comp.type = AdeType::D;
        comp.coxeter_number = 2 * static_cast<long>(n) - 2;
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) {
        comp.type = AdeType::E6;
        comp.coxeter_number = 12;
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) {
        comp.type = AdeType::E7;
        comp.coxeter_number = 18;
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) {
        comp.type = AdeType::E8;
        comp.coxeter_number = 30;
    }
    return comp;
}

} // namespace detail

/// Structural ADE recognition of each connected component (isolated vertices
/// count as A1).  No eigenvalue computation is involved.
inline AdeClassification ade_classify(const SymmetricGraphMatrix& g) {
    AdeClassification cls;
    std::vector<bool> seen(g.n, false);
    for (std::size_t start = 0; start < g.n; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> comp{start}, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < g.n; ++v)
                if (!seen[v] && g.at(u, v) != 0) {
                    seen[v] = true;
                    comp.push_back(v);
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        cls.components.push_back(detail::classify_component(g, comp));
    }
    return cls;
}

struct PossibleValueReport {
    std::size_t label = 0;
    long double qdim = 0.0L;
    long double rho = 0.0L;          // spectral radius of the bipartite double
    long double match_residual = 0.0L;
    DimensionValue classified;
    AdeClassification ade;
    bool rho_matches = false;        // |rho - qdim| < 1e-8
    bool ade_consistent = true;      // graph-side corroboration when qdim < 2
};

/// Cross-checks the S-ratio dimension of label i against the graph spectrum
/// of its fusion matrix: the spectral radius must reproduce the dimension,
/// and when the dimension sits below 2 the double must decompose into ADE
/// pieces whose largest Coxeter number matches the 2cos(pi/n) tag.
inline PossibleValueReport verify_possible_values(const ModularDatum& md, const FusionTensor& ft,
                                                  std::size_t i, long double tol = 1e-6L) {
    PossibleValueReport rep;
    rep.label = i;
    rep.classified = qdim_from_smatrix(md, i, tol);
    rep.qdim = rep.classified.value;
    const SymmetricGraphMatrix g = bipartite_double(fusion_matrix(ft, i));
    rep.rho = spectral_radius(g);
    rep.match_residual = std::abs(rep.rho - rep.qdim);
    rep.rho_matches = rep.match_residual < 1e-8L;
    rep.ade = ade_classify(g);
    if (rep.qdim < 2.0L - tol) {
        rep.ade_consistent = rep.ade.all_ade();
        if (rep.ade_consistent && rep.classified.tag == DimTag::TwoCosPiOver)
            rep.ade_consistent = rep.ade.max_coxeter_number() == rep.classified.tag_param;
        // Integer tags below 2 (dimension 1) need no Coxeter match: A1 pieces
        // have norm 2cos(pi/2) = 0 yet the double of a permutation matrix is
        // a disjoint union of single edges, norm 1 = 2cos(pi/3).
    }
    return rep;
}

/// Graphviz rendering of the bipartite double of a fusion matrix.
inline std::string fusion_graph_dot(const std::vector<std::vector<long>>& m,
                                    const std::string& name = "fusion") {
    const std::size_t d = m.size();
    std::string out = "graph " + name + " {\n";
    for (std::size_t i = 0; i < d; ++i)
        out += "  \"row:" + std::to_string(i) + "\";\n";
    for (std::size_t k = 0; k < d; ++k)
        out += "  \"col:" + std::to_string(k) + "\";\n";
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            for (long c = 0; c < m[i][k]; ++c)
                out += "  \"row:" + std::to_string(i) + "\" -- \"col:" + std::to_string(k) + "\";\n";
    out += "}\n";
    return out;
}

} // namespace fusionkit
