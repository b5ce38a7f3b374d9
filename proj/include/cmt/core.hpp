// Core combinatorial objects: labeled simplicial complexes (facet
// representation, faces as 64-bit vertex masks), simple graphs and
// monomial ideals, plus the face-level operations everything else uses.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmt {

// A face is a set of vertex indices into the owning object's vertex table.
using Face = std::uint64_t;

inline constexpr int kMaxVertices = 64;

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyInputError : Error { using Error::Error; };
struct BadIndexError : Error { using Error::Error; };
struct NotAFaceError : Error { using Error::Error; };
struct VertexClashError : Error { using Error::Error; };
struct GhostVertexError : Error { using Error::Error; };
struct EmptyComplexError : Error { using Error::Error; };
struct DaggerViolatedError : Error { using Error::Error; };
struct NotAGraphComplexError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Face helpers

inline int face_card(Face f) { return std::popcount(f); }

inline Face face_bit(int v) { return Face{1} << v; }

inline std::vector<int> face_indices(Face f) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(face_card(f)));
    while (f) {
        out.push_back(std::countr_zero(f));
        f &= f - 1;
    }
    return out;
}

inline Face face_of(std::initializer_list<int> vs) {
    Face f = 0;
    for (int v : vs) f |= face_bit(v);
    return f;
}

inline bool face_subset(Face a, Face b) { return (a & ~b) == 0; }

// Lexicographic order on the ascending index sequences of two faces,
// shorter prefixes first: {x1} < {x1,x2} < {x2}.
inline bool face_lex_less(Face a, Face b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// ---------------------------------------------------------------------------
// Vertex labels

// A vertex name, either plain ("x1") or a copy produced by expansion
// ("x1_2" = second copy of x1). The separator '_' may not occur in bases.
struct VertexLabel {
    std::string base;
    std::optional<int> copy;

    VertexLabel() = default;
    explicit VertexLabel(std::string b, std::optional<int> c = std::nullopt)
        : base(std::move(b)), copy(c) {
        validate();
    }

    void validate() const {
        if (base.empty()) throw Error("vertex label: empty base name");
        if (base.find('_') != std::string::npos)
            throw Error("vertex label: separator '_' not allowed in base name \"" + base + "\"");
        if (copy && *copy < 1) throw Error("vertex label: copy index must be >= 1");
    }

    std::string str() const {
        return copy ? base + "_" + std::to_string(*copy) : base;
    }

    // Parses "base" or "base_copy"; rejects anything with a malformed suffix.
    static VertexLabel parse(const std::string& s) {
        auto pos = s.find('_');
        if (pos == std::string::npos) return VertexLabel(s);
        if (s.find('_', pos + 1) != std::string::npos)
            throw ParseError("vertex label \"" + s + "\": more than one '_'");
        std::string base = s.substr(0, pos);
        std::string suffix = s.substr(pos + 1);
        if (base.empty() || suffix.empty())
            throw ParseError("vertex label \"" + s + "\": empty base or copy index");
        int copy = 0;
        for (char c : suffix) {
            if (c < '0' || c > '9')
                throw ParseError("vertex label \"" + s + "\": copy index is not a number");
            copy = copy * 10 + (c - '0');
            if (copy > 1'000'000) throw ParseError("vertex label \"" + s + "\": copy index too large");
        }
        if (copy < 1) throw ParseError("vertex label \"" + s + "\": copy index must be >= 1");
        return VertexLabel(std::move(base), copy);
    }

    friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
        return a.base == b.base && a.copy == b.copy;
    }
    friend bool operator<(const VertexLabel& a, const VertexLabel& b) {
        if (a.base != b.base) return a.base < b.base;
        return a.copy.value_or(0) < b.copy.value_or(0);
    }
};

inline void check_labels_distinct(const std::vector<VertexLabel>& labels) {
    if (labels.size() > static_cast<std::size_t>(kMaxVertices))
        throw Error("at most 64 vertices are supported");
    std::vector<std::string> names;
    names.reserve(labels.size());
    for (const auto& l : labels) {
        l.validate();
        names.push_back(l.str());
    }
    std::sort(names.begin(), names.end());
    auto dup = std::adjacent_find(names.begin(), names.end());
    if (dup != names.end()) throw VertexClashError("duplicate vertex label \"" + *dup + "\"");
}

// ---------------------------------------------------------------------------
// Simplicial complexes

// Facet-represented complex over an ordered vertex table. Facets always form
// a nonempty antichain; the minimal complex is {∅} (one empty facet). The
// void complex has no representation. Vertices outside every facet are
// rejected unless the caller explicitly allows ghosts (used by link(), whose
// result stays on the parent vertex table).
class SimplicialComplex {
public:
    enum class Ghosts { reject, allow };

    SimplicialComplex(std::vector<VertexLabel> vertices, const std::vector<Face>& faces,
                      Ghosts ghosts = Ghosts::reject)
        : vertices_(std::move(vertices)) {
        check_labels_distinct(vertices_);
        if (faces.empty()) throw EmptyInputError("a complex needs at least one face");
        const Face full = vertex_count() == 64 ? ~Face{0} : (face_bit(vertex_count()) - 1);
        for (Face f : faces)
            if ((f & ~full) != 0)
                throw BadIndexError("face uses a vertex index outside the vertex table");
        facets_ = faces;
        std::sort(facets_.begin(), facets_.end());
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
        // keep only inclusion-maximal members
        std::vector<Face> maximal;
        maximal.reserve(facets_.size());
        for (Face f : facets_) {
            bool contained = false;
            for (Face g : facets_)
                if (g != f && face_subset(f, g)) { contained = true; break; }
            if (!contained) maximal.push_back(f);
        }
        facets_ = std::move(maximal);
        std::sort(facets_.begin(), facets_.end(), face_lex_less);
        if (ghosts == Ghosts::reject && vertex_union() != full)
            throw GhostVertexError("vertex declared but contained in no facet");
    }

    const std::vector<VertexLabel>& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    Face vertex_union() const {
        Face u = 0;
        for (Face f : facets_) u |= f;
        return u;
    }

    bool contains(Face f) const {
        for (Face g : facets_)
            if (face_subset(f, g)) return true;
        return false;
    }

    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }

    // Every face, sorted by cardinality then lexicographically.
    std::vector<Face> all_faces() const {
        for (Face f : facets_)
            if (face_card(f) > 25) throw Error("face enumeration limit: facet with more than 25 vertices");
        std::vector<Face> out;
        for (Face f : facets_) {
            Face sub = f;
            while (true) {
                out.push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & f;
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        std::sort(out.begin(), out.end(), [](Face a, Face b) {
            int ca = face_card(a), cb = face_card(b);
            if (ca != cb) return ca < cb;
            return face_lex_less(a, b);
        });
        return out;
    }

    std::string str() const {
        std::string s = "<";
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (i) s += ", ";
            s += "{";
            auto idx = face_indices(facets_[i]);
            for (std::size_t j = 0; j < idx.size(); ++j) {
                if (j) s += ",";
                s += vertices_[static_cast<std::size_t>(idx[j])].str();
            }
            s += "}";
        }
        s += ">";
        return s;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
    }

private:
    std::vector<VertexLabel> vertices_;
    std::vector<Face> facets_;
};

inline SimplicialComplex normalize_complex(const std::vector<Face>& raw_faces,
                                           std::vector<VertexLabel> vertices,
                                           SimplicialComplex::Ghosts ghosts = SimplicialComplex::Ghosts::reject) {
    return SimplicialComplex(std::move(vertices), raw_faces, ghosts);
}

inline int dim(const SimplicialComplex& dx) {
    int d = -1;
    for (Face f : dx.facets()) d = std::max(d, face_card(f) - 1);
    return d;
}

inline bool is_pure(const SimplicialComplex& dx) {
    int c = face_card(dx.facets().front());
    for (Face f : dx.facets())
        if (face_card(f) != c) return false;
    return true;
}

// link(F) = {G : G∩F = ∅, G∪F ∈ Δ}, kept on the same vertex table.
// Vertices of F (and anything else no longer covered) become ghosts.
inline SimplicialComplex link(const SimplicialComplex& dx, Face f) {
    if (!dx.contains(f)) throw NotAFaceError("link: argument is not a face");
    std::vector<Face> facets;
    for (Face g : dx.facets())
        if (face_subset(f, g)) facets.push_back(g & ~f);
    return SimplicialComplex(dx.vertices(), facets, SimplicialComplex::Ghosts::allow);
}

// Join on disjoint (by label) vertex tables; facets are all pairwise unions.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<VertexLabel> table = a.vertices();
    table.insert(table.end(), b.vertices().begin(), b.vertices().end());
    check_labels_distinct(table);  // throws VertexClashError on collision
    const int shift = a.vertex_count();
    std::vector<Face> facets;
    facets.reserve(a.facets().size() * b.facets().size());
    for (Face fa : a.facets())
        for (Face fb : b.facets())
            facets.push_back(fa | (fb << shift));
    return SimplicialComplex(std::move(table), facets, SimplicialComplex::Ghosts::allow);
}

// Some vertex lying in every facet, if one exists.
inline std::optional<int> is_cone(const SimplicialComplex& dx) {
    Face common = dx.facets().front();
    for (Face f : dx.facets()) common &= f;
    if (common == 0) return std::nullopt;
    return std::countr_zero(common);
}

inline std::vector<Face> faces_of_card(const SimplicialComplex& dx, int c) {
    std::vector<Face> out;
    if (c < 0) return out;
    if (c == 0) return {Face{0}};
    for (Face f : dx.facets()) {
        if (face_card(f) < c) continue;
        // enumerate c-subsets of f
        auto idx = face_indices(f);
        const int n = static_cast<int>(idx.size());
        std::vector<int> pick(static_cast<std::size_t>(c));
        for (int i = 0; i < c; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            Face sub = 0;
            for (int i = 0; i < c; ++i) sub |= face_bit(idx[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
            out.push_back(sub);
            int i = c - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - c + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < c; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

// Inclusion-minimal subsets of the vertex table that are not faces.
// Candidates are faces grown by one vertex; N is a minimal non-face iff it is
// not a face and all of its one-smaller subsets are.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& dx) {
    std::vector<Face> out;
    const int n = dx.vertex_count();
    const auto faces = dx.all_faces();
    std::vector<Face> candidates;
    for (Face g : faces)
        for (int v = 0; v < n; ++v) {
            if (g & face_bit(v)) continue;
            candidates.push_back(g | face_bit(v));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (Face cand : candidates) {
        if (dx.contains(cand)) continue;
        bool minimal = true;
        Face rest = cand;
        while (rest) {
            Face sub = cand & ~(rest & (~rest + 1));
            rest &= rest - 1;
            if (!dx.contains(sub)) { minimal = false; break; }
        }
        if (minimal) out.push_back(cand);
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

// ---------------------------------------------------------------------------
// Simple graphs

class SimpleGraph {
public:
    SimpleGraph(std::vector<VertexLabel> vertices, std::vector<std::pair<int, int>> edges)
        : vertices_(std::move(vertices)) {
        check_labels_distinct(vertices_);
        const int n = vertex_count();
        for (auto& [a, b] : edges) {
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw BadIndexError("edge endpoint outside the vertex table");
            if (a == b) throw Error("loops are not allowed");
            if (a > b) std::swap(a, b);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        adjacency_.assign(static_cast<std::size_t>(n), 0);
        for (auto [a, b] : edges_) {
            adjacency_[static_cast<std::size_t>(a)] |= face_bit(b);
            adjacency_[static_cast<std::size_t>(b)] |= face_bit(a);
        }
    }

    const std::vector<VertexLabel>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    Face neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<VertexLabel> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Face> adjacency_;
};

namespace detail {

// Bron-Kerbosch with pivoting over the complement graph: maximal independent
// sets of the input graph.
inline void max_independent_sets_rec(const std::vector<Face>& nonadj, Face r, Face p, Face x,
                                     std::vector<Face>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    Face pux = p | x;
    int pivot = std::countr_zero(pux);
    int best = -1;
    for (Face t = pux; t; t &= t - 1) {
        int u = std::countr_zero(t);
        int deg = std::popcount(p & nonadj[static_cast<std::size_t>(u)]);
        if (deg > best) { best = deg; pivot = u; }
    }
    for (Face t = p & ~nonadj[static_cast<std::size_t>(pivot)]; t; t &= t - 1) {
        int v = std::countr_zero(t);
        Face vb = face_bit(v);
        max_independent_sets_rec(nonadj, r | vb, p & nonadj[static_cast<std::size_t>(v)],
                                 x & nonadj[static_cast<std::size_t>(v)], out);
        p &= ~vb;
        x |= vb;
    }
}

}  // namespace detail

inline std::vector<Face> maximal_independent_sets(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {Face{0}};
    const Face full = n == 64 ? ~Face{0} : (face_bit(n) - 1);
    std::vector<Face> nonadj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        nonadj[static_cast<std::size_t>(v)] = full & ~g.neighbors(v) & ~face_bit(v);
    std::vector<Face> out;
    detail::max_independent_sets_rec(nonadj, 0, full, 0, out);
    return out;
}

inline SimplicialComplex independence_complex(const SimpleGraph& g) {
    return SimplicialComplex(g.vertices(), maximal_independent_sets(g));
}

// ---------------------------------------------------------------------------
// Monomials and monomial ideals

// Sparse exponent vector; stored exponents are always >= 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> exps) {
        for (auto [v, e] : exps) {
            if (v < 0 || v >= kMaxVertices) throw BadIndexError("monomial: variable index out of range");
            if (e < 1) throw Error("monomial: exponents must be positive");
        }
        std::sort(exps.begin(), exps.end());
        for (std::size_t i = 1; i < exps.size(); ++i)
            if (exps[i].first == exps[i - 1].first)
                throw Error("monomial: duplicate variable");
        exps_ = std::move(exps);
    }

    static Monomial one() { return Monomial(); }

    const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    int exponent(int v) const {
        for (auto [w, e] : exps_)
            if (w == v) return e;
        return 0;
    }

    int degree() const {
        int d = 0;
        for (auto [v, e] : exps_) d += e;
        return d;
    }

    Face support() const {
        Face s = 0;
        for (auto [v, e] : exps_) s |= face_bit(v);
        return s;
    }

    bool is_squarefree() const {
        for (auto [v, e] : exps_)
            if (e != 1) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        std::size_t j = 0;
        for (auto [v, e] : exps_) {
            while (j < other.exps_.size() && other.exps_[j].first < v) ++j;
            if (j == other.exps_.size() || other.exps_[j].first != v || other.exps_[j].second < e)
                return false;
        }
        return true;
    }

    Monomial times(const Monomial& other) const {
        std::vector<std::pair<int, int>> out;
        std::size_t i = 0, j = 0;
        while (i < exps_.size() || j < other.exps_.size()) {
            if (j == other.exps_.size() || (i < exps_.size() && exps_[i].first < other.exps_[j].first))
                out.push_back(exps_[i++]);
            else if (i == exps_.size() || other.exps_[j].first < exps_[i].first)
                out.push_back(other.exps_[j++]);
            else {
                out.emplace_back(exps_[i].first, exps_[i].second + other.exps_[j].second);
                ++i;
                ++j;
            }
        }
        return Monomial(std::move(out));
    }

    static Monomial squarefree(Face support) {
        std::vector<std::pair<int, int>> exps;
        for (int v : face_indices(support)) exps.emplace_back(v, 1);
        return Monomial(std::move(exps));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

private:
    std::vector<std::pair<int, int>> exps_;
};

inline std::vector<Monomial> minimalize_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens)
            if (!(h == g) && h.divides(g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    return out;
}

class MonomialIdeal {
public:
    MonomialIdeal(std::vector<VertexLabel> ring_vertices, std::vector<Monomial> generators)
        : ring_(std::move(ring_vertices)) {
        check_labels_distinct(ring_);
        const int n = static_cast<int>(ring_.size());
        for (const auto& g : generators)
            for (auto [v, e] : g.exponents())
                if (v >= n) throw BadIndexError("generator uses a variable outside the ring");
        gens_ = minimalize_generators(std::move(generators));
    }

    static MonomialIdeal zero(std::vector<VertexLabel> ring_vertices) {
        return MonomialIdeal(std::move(ring_vertices), {});
    }

    const std::vector<VertexLabel>& ring_vertices() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    bool is_squarefree() const {
        for (const auto& g : gens_)
            if (!g.is_squarefree()) return false;
        return true;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_;
    }

private:
    std::vector<VertexLabel> ring_;
    std::vector<Monomial> gens_;
};

// Squarefree ideal generated by the minimal non-faces.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& dx) {
    std::vector<Monomial> gens;
    for (Face f : minimal_nonfaces(dx)) gens.push_back(Monomial::squarefree(f));
    return MonomialIdeal(dx.vertices(), std::move(gens));
}

namespace detail {

// Maximal subsets of `full` containing no member of `edges` (hypergraph
// independent sets), by branching on an uncovered edge.
inline void hypergraph_mis_rec(const std::vector<Face>& edges, Face candidate, Face full,
                               std::vector<Face>& out) {
    for (Face e : edges) {
        if (!face_subset(e, candidate)) continue;
        for (int v : face_indices(e)) hypergraph_mis_rec(edges, candidate & ~face_bit(v), full, out);
        return;
    }
    out.push_back(candidate);
}

}  // namespace detail

// The complex whose minimal non-faces generate I; squarefree ideals only.
// Variables that are themselves generators end up in no facet, so the result
// may carry ghost vertices.
inline SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw Error("complex_of_ideal: ideal must be squarefree");
    const int n = static_cast<int>(ideal.ring_vertices().size());
    const Face full = n == 0 ? 0 : (n == 64 ? ~Face{0} : (face_bit(n) - 1));
    std::vector<Face> edges;
    for (const auto& g : ideal.generators()) edges.push_back(g.support());
    std::vector<Face> facets;
    detail::hypergraph_mis_rec(edges, full, full, facets);
    return SimplicialComplex(ideal.ring_vertices(), facets, SimplicialComplex::Ghosts::allow);
}

inline MonomialIdeal edge_ideal(const SimpleGraph& g) {
    std::vector<Monomial> gens;
    for (auto [a, b] : g.edges()) gens.push_back(Monomial::squarefree(face_bit(a) | face_bit(b)));
    return MonomialIdeal(g.vertices(), std::move(gens));
}

}  // namespace cmt
