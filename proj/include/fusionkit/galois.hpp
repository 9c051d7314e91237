#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fusionkit/errors.hpp"

namespace fusionkit {

/// Finite group given by its full multiplication table (0-based element
/// indices, row i column j holding i*j).  Element 0 need not be the identity.
struct FiniteGroupTable {
    std::size_t order = 0;
    std::vector<std::size_t> table; // row-major
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;

    std::size_t mul(std::size_t a, std::size_t b) const { return table[a * order + b]; }
};

inline constexpr std::size_t kMaxGroupOrder = 64;

/// Validate a raw table: Latin square, two-sided identity, inverses,
/// associativity (full n^3 scan).
inline FiniteGroupTable make_group(std::size_t n, std::vector<std::size_t> table) {
    if (n == 0 || n > kMaxGroupOrder) throw OrderTooLarge("group order must be in 1..64");
    FiniteGroupTable g;
    g.order = n;
    g.table = std::move(table);
    if (g.table.size() != n * n) throw NotLatinSquare("table size does not match the order");
    for (std::size_t v : g.table)
        if (v >= n) throw NotLatinSquare("table entry out of range");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> row(n, false), col(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            if (row[g.mul(i, j)]) throw NotLatinSquare("repeated entry in row " + std::to_string(i));
            if (col[g.mul(j, i)]) throw NotLatinSquare("repeated entry in column " + std::to_string(i));
            row[g.mul(i, j)] = col[g.mul(j, i)] = true;
        }
    }
    std::size_t e = n;
    for (std::size_t c = 0; c < n; ++c) {
        bool ok = true;
        for (std::size_t x = 0; x < n; ++x)
            if (g.mul(c, x) != x || g.mul(x, c) != x) { ok = false; break; }
        if (ok) { e = c; break; }
    }
    if (e == n) throw NoIdentity("no two-sided identity element");
    g.identity = e;
    g.inverse.assign(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y)
            if (g.mul(x, y) == e && g.mul(y, x) == e) g.inverse[x] = y;
        if (g.inverse[x] == n) throw MissingInverse("element " + std::to_string(x) + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw NotAssociative("(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                         std::to_string(c) + " != a*(b*c)");
    return g;
}

/// Text format: first line the order n, then n lines of n 0-based indices.
inline FiniteGroupTable load_group(std::istream& in) {
    std::size_t n = 0;
    if (!(in >> n)) throw NotLatinSquare("missing group order");
    if (n == 0 || n > kMaxGroupOrder) throw OrderTooLarge("group order must be in 1..64");
    std::vector<std::size_t> t(n * n);
    for (auto& v : t)
        if (!(in >> v)) throw NotLatinSquare("truncated multiplication table");
    return make_group(n, std::move(t));
}

inline FiniteGroupTable load_group(const std::string& text) {
    std::istringstream in(text);
    return load_group(in);
}

// ---------------------------------------------------------------------------
// Subgroups

namespace detail {

inline std::vector<std::size_t> closure(const FiniteGroupTable& g, std::vector<std::size_t> seed) {
    std::set<std::size_t> s(seed.begin(), seed.end());
    s.insert(g.identity);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> cur(s.begin(), s.end());
        for (std::size_t a : cur)
            for (std::size_t b : cur) {
                if (s.insert(g.mul(a, b)).second) grew = true;
                if (s.insert(g.inverse[a]).second) grew = true;
            }
    }
    return {s.begin(), s.end()};
}

} // namespace detail

/// All subgroups, each as a sorted element list.  Found by the one-element
/// extension fixpoint: start from {e}, repeatedly close known subgroups
/// together with one extra element, until nothing new appears.  Every
/// subgroup is reached because it is built up one generator at a time.
inline std::vector<std::vector<std::size_t>> enumerate_subgroups(const FiniteGroupTable& g) {
    if (g.order > kMaxGroupOrder) throw OrderTooLarge("group order must be <= 64");
    std::set<std::vector<std::size_t>> found;
    found.insert({g.identity});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<std::size_t>> cur(found.begin(), found.end());
        for (const auto& h : cur)
            for (std::size_t x = 0; x < g.order; ++x) {
                if (std::binary_search(h.begin(), h.end(), x)) continue;
                auto ext = h;
                ext.push_back(x);
                if (found.insert(detail::closure(g, ext)).second) grew = true;
            }
    }
    std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

inline bool is_subgroup(const FiniteGroupTable& g, const std::vector<std::size_t>& h) {
    if (h.empty()) return false;
    std::set<std::size_t> s(h.begin(), h.end());
    if (s.size() != h.size()) return false;
    for (std::size_t a : s)
        for (std::size_t b : s)
            if (!s.count(g.mul(a, g.inverse[b]))) return false;
    return true;
}

inline bool is_normal(const FiniteGroupTable& g, const std::vector<std::size_t>& h) {
    std::set<std::size_t> s(h.begin(), h.end());
    for (std::size_t x = 0; x < g.order; ++x)
        for (std::size_t a : s)
            if (!s.count(g.mul(g.mul(x, a), g.inverse[x]))) return false;
    return true;
}

/// One row of the degree ledger: the fixed-point subalgebra attached to H
/// has index [G:H] as the count of H-cosets, and o(H) grades the extension.
struct SubgroupRecord {
    std::vector<std::size_t> elements;
    std::size_t order = 0;
    std::size_t index = 0;  // [G : H]
    bool normal = false;
    bool galois = false;    // the extension is Galois iff H is normal
};

inline SubgroupRecord degree_ledger_row(const FiniteGroupTable& g,
                                        const std::vector<std::size_t>& h) {
    if (!is_subgroup(g, h)) throw NotSubgroup("element set is not a subgroup");
    SubgroupRecord r;
    r.elements = h;
    std::sort(r.elements.begin(), r.elements.end());
    r.order = h.size();
    r.index = g.order / h.size();
    r.normal = is_normal(g, h);
    r.galois = r.normal;
    return r;
}

struct GaloisReport {
    std::size_t group_order = 0;
    std::vector<SubgroupRecord> rows;
};

inline GaloisReport galois_report(const FiniteGroupTable& g) {
    GaloisReport rep;
    rep.group_order = g.order;
    for (const auto& h : enumerate_subgroups(g)) rep.rows.push_back(degree_ledger_row(g, h));
    return rep;
}

// ---------------------------------------------------------------------------
// Conjugacy classes and the character-degree sanity check

inline std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroupTable& g) {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> seen(g.order, false);
    for (std::size_t a = 0; a < g.order; ++a) {
        if (seen[a]) continue;
        std::set<std::size_t> cls;
        for (std::size_t x = 0; x < g.order; ++x)
            cls.insert(g.mul(g.mul(x, a), g.inverse[x]));
        for (std::size_t c : cls) seen[c] = true;
        classes.push_back({cls.begin(), cls.end()});
    }
    return classes;
}

/// True iff the supplied irreducible character degrees are consistent with
/// the group table: sum of squares equals the order and the count equals the
/// number of conjugacy classes.
inline bool character_degree_check(const FiniteGroupTable& g,
                                   const std::vector<std::size_t>& degrees) {
    if (degrees.size() != conjugacy_classes(g).size()) return false;
    std::size_t sum = 0;
    for (std::size_t d : degrees) {
        if (d == 0) return false;
        sum += d * d;
    }
    return sum == g.order;
}

// ---------------------------------------------------------------------------
// Built-in tables

inline FiniteGroupTable builtin_cyclic(std::size_t n) {
    if (n == 0 || n > 12) throw OutOfRange("builtin cyclic groups cover orders 1..12");
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return make_group(n, std::move(t));
}

namespace detail {

/// Build a table from explicit permutation/matrix-free element words by
/// multiplying in some ambient faithful action.
template <typename Elem, typename Mul>
FiniteGroupTable table_from_elements(const std::vector<Elem>& elems, Mul mul) {
    const std::size_t n = elems.size();
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Elem p = mul(elems[a], elems[b]);
            const auto it = std::find(elems.begin(), elems.end(), p);
            if (it == elems.end()) throw NotLatinSquare("element list is not closed");
            t[a * n + b] = static_cast<std::size_t>(it - elems.begin());
        }
    return make_group(n, std::move(t));
}

inline std::vector<int> perm_mul(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline std::vector<std::vector<int>> perm_group(std::vector<std::vector<int>> gens,
                                                std::size_t dots) {
    std::vector<int> id(dots);
    for (std::size_t i = 0; i < dots; ++i) id[i] = static_cast<int>(i);
    std::vector<std::vector<int>> elems{id};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& gen : gens) {
            auto p = perm_mul(elems[i], gen);
            if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
        }
    return elems;
}

} // namespace detail

inline FiniteGroupTable builtin_s3() {
    auto elems = detail::perm_group({{1, 0, 2}, {1, 2, 0}}, 3);
    return detail::table_from_elements(elems, detail::perm_mul);
}

inline FiniteGroupTable builtin_a4() {
    auto elems = detail::perm_group({{1, 0, 3, 2}, {1, 2, 0, 3}}, 4);
    return detail::table_from_elements(elems, detail::perm_mul);
}

inline FiniteGroupTable builtin_d4() {
    // symmetries of a square on vertices 0..3: rotation + reflection
    auto elems = detail::perm_group({{1, 2, 3, 0}, {0, 3, 2, 1}}, 4);
    return detail::table_from_elements(elems, detail::perm_mul);
}

inline FiniteGroupTable builtin_q8() {
    // quaternions {1,-1,i,-i,j,-j,k,-k} as pairs (axis 0..3, sign)
    struct Q { int axis; int sign; bool operator==(const Q& o) const { return axis == o.axis && sign == o.sign; } };
    auto mul = [](const Q& a, const Q& b) {
        // axis 0 = scalar 1, 1..3 = i,j,k
        if (a.axis == 0) return Q{b.axis, a.sign * b.sign};
        if (b.axis == 0) return Q{a.axis, a.sign * b.sign};
        if (a.axis == b.axis) return Q{0, -a.sign * b.sign};
        const int c = 6 - a.axis - b.axis; // the remaining axis
        const int eps = ((a.axis % 3) + 1 == b.axis || (a.axis == 3 && b.axis == 1)) ? 1 : -1;
        return Q{c, eps * a.sign * b.sign};
    };
    std::vector<Q> elems;
    for (int axis = 0; axis < 4; ++axis)
        for (int sign : {1, -1}) elems.push_back({axis, sign});
    return detail::table_from_elements(elems, mul);
}

/// Lookup by name: "z1".."z12", "s3", "d4", "q8", "a4".
inline FiniteGroupTable builtin_group(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'z') return builtin_cyclic(std::stoul(name.substr(1)));
    if (name == "s3") return builtin_s3();
    if (name == "d4") return builtin_d4();
    if (name == "q8") return builtin_q8();
    if (name == "a4") return builtin_a4();
    throw OutOfRange("unknown builtin group: " + name);
}

} // namespace fusionkit
