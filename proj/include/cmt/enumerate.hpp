// Exhaustive and seeded-random instance generation at desk scale: all
// complexes (facet antichains) on a few labeled vertices, all graphs, all
// multiplicity vectors, plus deterministic random ideals. Enumeration order
// is fixed, so sweeps over these generators are reproducible bit for bit.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cmt/core.hpp"
#include "cmt/expansion.hpp"

namespace cmt {

inline std::vector<VertexLabel> standard_labels(int n, const std::string& stem = "x") {
    std::vector<VertexLabel> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out.emplace_back(stem + std::to_string(i));
    return out;
}

namespace detail {

// 256-bit set indexed by face masks; enough for antichains on up to 8 vertices.
struct MaskSet {
    std::array<std::uint64_t, 4> w{0, 0, 0, 0};

    void set(unsigned m) { w[m >> 6] |= std::uint64_t{1} << (m & 63); }
    bool test(unsigned m) const { return (w[m >> 6] >> (m & 63)) & 1; }

    MaskSet intersect(const MaskSet& o) const {
        MaskSet r;
        for (int i = 0; i < 4; ++i) r.w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] & o.w[static_cast<std::size_t>(i)];
        return r;
    }

    // visits members strictly greater than `floor`, ascending
    template <class F>
    void for_each_above(unsigned floor, F&& f) const {
        for (unsigned blk = floor >> 6; blk < 4; ++blk) {
            std::uint64_t bits = w[blk];
            if (blk == (floor >> 6)) {
                unsigned r = floor & 63;
                bits = (r == 63) ? 0 : (bits & (~std::uint64_t{0} << (r + 1)));
            }
            while (bits) {
                unsigned m = (blk << 6) + static_cast<unsigned>(std::countr_zero(bits));
                f(m);
                bits &= bits - 1;
            }
        }
    }
};

struct AntichainTables {
    int n;
    std::vector<MaskSet> incomparable;  // per mask: masks neither containing nor contained

    explicit AntichainTables(int n_) : n(n_) {
        const unsigned top = (1u << n) - 1;
        incomparable.resize(top + 1);
        for (unsigned a = 1; a <= top; ++a)
            for (unsigned b = 1; b <= top; ++b)
                if (a != b && (a & b) != a && (a & b) != b) incomparable[a].set(b);
    }
};

template <class F>
void antichain_rec(const AntichainTables& tables, std::vector<Face>& chosen, unsigned last,
                   const MaskSet& allowed, F&& f) {
    allowed.for_each_above(last, [&](unsigned m) {
        chosen.push_back(m);
        f(chosen);
        antichain_rec(tables, chosen, m, allowed.intersect(tables.incomparable[m]), f);
        chosen.pop_back();
    });
}

}  // namespace detail

// Visits every nonempty antichain of nonempty subsets of [n] whose smallest
// member (as a mask value) is `root`. Facets arrive in ascending mask order.
template <class F>
void for_each_antichain_rooted(int n, Face root, F&& f) {
    if (n < 1 || n > 8) throw Error("antichain enumeration supports 1..8 vertices");
    static thread_local std::array<std::unique_ptr<detail::AntichainTables>, 9> cache;
    if (!cache[static_cast<std::size_t>(n)])
        cache[static_cast<std::size_t>(n)] = std::make_unique<detail::AntichainTables>(n);
    const auto& tables = *cache[static_cast<std::size_t>(n)];
    std::vector<Face> chosen{root};
    f(static_cast<const std::vector<Face>&>(chosen));
    detail::antichain_rec(tables, chosen, static_cast<unsigned>(root),
                          tables.incomparable[static_cast<std::size_t>(root)], f);
}

template <class F>
void for_each_antichain(int n, F&& f) {
    const unsigned top = (1u << n) - 1;
    for (unsigned root = 1; root <= top; ++root) for_each_antichain_rooted(n, root, f);
}

inline bool covers_all(const std::vector<Face>& facets, int n) {
    Face u = 0;
    for (Face f : facets) u |= f;
    return u == (n == 64 ? ~Face{0} : (face_bit(n) - 1));
}

// Every complex on exactly n labeled vertices (covering antichains); n = 0
// yields the single complex {∅}.
template <class F>
void for_each_complex_on(int n, F&& f) {
    if (n == 0) {
        const std::vector<Face> empty_facet{0};
        f(empty_facet);
        return;
    }
    for_each_antichain(n, [&](const std::vector<Face>& facets) {
        if (covers_all(facets, n)) f(facets);
    });
}

// ---------------------------------------------------------------------------
// Canonicality under vertex relabeling

namespace detail {

inline const std::vector<std::vector<int>>& permutations_of(int n) {
    static thread_local std::array<std::vector<std::vector<int>>, 9> cache;
    auto& perms = cache[static_cast<std::size_t>(n)];
    if (perms.empty()) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    return perms;
}

inline Face permute_mask(Face f, const std::vector<int>& perm) {
    Face out = 0;
    while (f) {
        int v = std::countr_zero(f);
        out |= face_bit(perm[static_cast<std::size_t>(v)]);
        f &= f - 1;
    }
    return out;
}

}  // namespace detail

// True iff the (mask-sorted) facet vector is lexicographically minimal over
// all vertex relabelings. Used to sweep one representative per isomorphism
// class. A cheap necessary condition fronts the full scan: the minimal
// relabeling always packs a smallest-cardinality facet into the low bits.
inline bool is_canonical_labeling(const std::vector<Face>& facets, int n) {
    if (n <= 1) return true;
    std::vector<Face> base = facets;
    std::sort(base.begin(), base.end());
    int min_card = 64;
    for (Face f : base) min_card = std::min(min_card, face_card(f));
    if (base.front() != face_bit(min_card) - 1) return false;

    std::vector<Face> scratch(base.size());
    for (const auto& perm : detail::permutations_of(n)) {
        for (std::size_t i = 0; i < base.size(); ++i) scratch[i] = detail::permute_mask(base[i], perm);
        std::sort(scratch.begin(), scratch.end());
        if (scratch < base) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Graphs and multiplicity vectors

template <class F>
void for_each_graph_on(int n, F&& f) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) all_pairs.emplace_back(a, b);
    if (all_pairs.size() > 24) throw Error("graph enumeration supports at most 24 vertex pairs");
    const auto labels = standard_labels(n);
    const std::uint32_t total = 1u << all_pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < all_pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(all_pairs[i]);
        f(SimpleGraph(labels, std::move(edges)));
    }
}

// All vectors in {1..max_entry}^n, optionally bounded by sum_cap (0 = none),
// in odometer order.
template <class F>
void for_each_alpha(int n, int max_entry, int sum_cap, F&& f) {
    ExpansionVector alpha = ExpansionVector::ones(n);
    while (true) {
        if (sum_cap == 0 || alpha.sum() <= sum_cap) f(static_cast<const ExpansionVector&>(alpha));
        int i = n - 1;
        while (i >= 0 && alpha.k[static_cast<std::size_t>(i)] == max_entry) {
            alpha.k[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++alpha.k[static_cast<std::size_t>(i)];
    }
}

// ---------------------------------------------------------------------------
// Seeded randomness (mt19937_64 with modulo sampling keeps the stream
// identical across standard libraries)

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
};

inline MonomialIdeal random_ideal(Rng& rng, int max_vars, int max_exp, int max_gens) {
    const int nvars = 1 + rng.below(max_vars);
    const int ngens = 1 + rng.below(max_gens);
    std::vector<Monomial> gens;
    for (int g = 0; g < ngens; ++g) {
        std::vector<std::pair<int, int>> exps;
        for (int v = 0; v < nvars; ++v) {
            int e = rng.below(max_exp + 1);
            if (e > 0) exps.emplace_back(v, e);
        }
        if (!exps.empty()) gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(standard_labels(nvars), std::move(gens));
}

inline SimplicialComplex random_complex(Rng& rng, int max_vertices) {
    const int n = 1 + rng.below(max_vertices);
    while (true) {
        const int nfaces = 1 + rng.below(2 * n);
        std::vector<Face> faces;
        for (int i = 0; i < nfaces; ++i)
            faces.push_back(static_cast<Face>(1 + rng.below((1 << n) - 1)));
        if (!covers_all(faces, n)) continue;
        return SimplicialComplex(standard_labels(n), faces);
    }
}

inline ExpansionVector random_alpha(Rng& rng, int n, int max_entry) {
    std::vector<int> k(static_cast<std::size_t>(n));
    for (auto& v : k) v = 1 + rng.below(max_entry);
    return ExpansionVector(std::move(k));
}

}  // namespace cmt
