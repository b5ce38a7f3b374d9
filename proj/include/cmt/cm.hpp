// Cohen-Macaulay / Buchsbaum / CM_t classification through homological
// conditions on links. A face F has a Cohen-Macaulay link exactly when every
// face containing F has a link with vanishing reduced homology below its
// dimension (links of links are links of unions), so all checks reduce to a
// single per-face acyclicity table, memoized per complex.
#pragma once

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cmt/core.hpp"
#include "cmt/homology.hpp"

namespace cmt {

struct CmWitness {
    int t = 0;       // the CM_t level that failed
    Face face = 0;   // face whose link has homology below its dimension
    int degree = 0;  // offending homological degree
};

struct CmReport {
    bool pure = false;
    std::optional<int> minimal_t;  // present iff pure
    FieldSpec field;
    std::vector<CmWitness> witnesses;  // one per failed level, ascending t
};

// Per-complex memo of link homology, keyed by face bitmask. Thread-safe
// get-or-compute; values are identical regardless of interleaving.
class LinkHomologyCache {
public:
    LinkHomologyCache(const SimplicialComplex& dx, FieldSpec field)
        : faces_(dx.all_faces()), field_(field) {}

    const std::vector<Face>& faces() const { return faces_; }
    const FieldSpec& field() const { return field_; }

    HomologyProfile link_betti(Face f) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = profiles_.find(f);
            if (it != profiles_.end()) return it->second;
        }
        HomologyProfile profile = detail::reduced_betti_by_dim(link_faces(f), field_);
        std::lock_guard<std::mutex> lock(mu_);
        return profiles_.emplace(f, std::move(profile)).first->second;
    }

    // First degree below dim(link(f)) with nonzero reduced homology, if any.
    // Over Q the all-clear is usually settled by the GF(2) certificate.
    std::optional<int> link_defect(Face f) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = defects_.find(f);
            if (it != defects_.end()) return it->second;
        }
        std::optional<int> defect;
        detail::FacesByDim faces = link_faces(f);
        if (field_.kind == FieldSpec::Kind::rationals) {
            defect = detail::rational_defect_below(faces, faces.top_dim);
        } else {
            HomologyProfile profile = detail::reduced_betti_by_dim(faces, field_);
            for (int q = -1; q < profile.top_dim; ++q)
                if (profile.at(q) != 0) { defect = q; break; }
        }
        std::lock_guard<std::mutex> lock(mu_);
        return defects_.emplace(f, defect).first->second;
    }

private:
    detail::FacesByDim link_faces(Face f) const {
        std::vector<Face> out;
        for (Face m : faces_)
            if (face_subset(f, m)) out.push_back(m & ~f);
        return detail::FacesByDim(out);
    }

    std::vector<Face> faces_;
    FieldSpec field_;
    mutable std::mutex mu_;
    mutable std::unordered_map<Face, HomologyProfile> profiles_;
    mutable std::unordered_map<Face, std::optional<int>> defects_;
};

// Reisner's criterion, quantified over every face including the empty one.
// {∅} passes vacuously.
inline bool is_cohen_macaulay(const SimplicialComplex& dx, FieldSpec field) {
    LinkHomologyCache cache(dx, field);
    for (Face f : cache.faces())
        if (cache.link_defect(f)) return false;
    return true;
}

namespace detail {

inline bool is_cm_t_cached(const LinkHomologyCache& cache, bool pure, int t) {
    if (!pure) return false;
    for (Face f : cache.faces())
        if (face_card(f) >= t && cache.link_defect(f)) return false;
    return true;
}

}  // namespace detail

// Pure, and the link of every face with at least t vertices is Cohen-
// Macaulay. Negative t behaves like t = 0.
inline bool is_cm_t(const SimplicialComplex& dx, int t, FieldSpec field) {
    if (t < 0) t = 0;
    if (!is_pure(dx)) return false;
    LinkHomologyCache cache(dx, field);
    return detail::is_cm_t_cached(cache, true, t);
}

// Least t making the complex CM_t, searching upward from 0; at t = dim + 1
// every quantified link is {∅}, so the search always terminates for pure
// complexes. Non-pure complexes get no minimal_t.
inline CmReport min_cm_t(const SimplicialComplex& dx, FieldSpec field) {
    CmReport report;
    report.field = field;
    report.pure = is_pure(dx);
    if (!report.pure) return report;
    LinkHomologyCache cache(dx, field);
    const int ceiling = dim(dx) + 1;
    for (int t = 0; t <= ceiling; ++t) {
        bool ok = true;
        for (Face f : cache.faces()) {
            if (face_card(f) < t) continue;
            if (auto defect = cache.link_defect(f)) {
                report.witnesses.push_back(CmWitness{t, f, *defect});
                ok = false;
                break;
            }
        }
        if (ok) {
            report.minimal_t = t;
            return report;
        }
    }
    throw Error("min_cm_t: no level up to dim+1 succeeded (internal error)");
}

// CM_1, cross-checked against the direct statement: pure and every nonempty
// face has a link with vanishing reduced homology below its dimension.
inline bool is_buchsbaum(const SimplicialComplex& dx, FieldSpec field) {
    const bool via_cm_t = is_cm_t(dx, 1, field);
    bool direct = is_pure(dx);
    if (direct) {
        for (Face f : dx.all_faces()) {
            if (f == 0) continue;
            SimplicialComplex lk = link(dx, f);
            if (!is_k_acyclic_below(lk, dim(lk), field)) { direct = false; break; }
        }
    }
    if (via_cm_t != direct) throw Error("is_buchsbaum: cross-check mismatch (internal error)");
    return via_cm_t;
}

namespace detail {

inline bool cm_t_recursive_impl(const SimplicialComplex& dx, int t, FieldSpec field) {
    if (t <= 0) return is_cohen_macaulay(dx, field);
    if (dx.is_empty_complex()) return true;  // no faces with >= t >= 1 vertices
    if (!is_pure(dx)) return false;
    for (Face vs = dx.vertex_union(); vs; vs &= vs - 1) {
        Face v = vs & (~vs + 1);
        if (!cm_t_recursive_impl(link(dx, v), t - 1, field)) return false;
    }
    return true;
}

}  // namespace detail

// The vertex-link recursion: CM_t iff pure and link(v) is CM_{t-1} for every
// vertex, bottoming out at the direct Cohen-Macaulay check. Must agree with
// is_cm_t everywhere it is defined; {∅} with t >= 1 is outside the recursion.
inline bool cm_t_recursive(const SimplicialComplex& dx, int t, FieldSpec field) {
    if (t < 0) t = 0;
    if (dx.is_empty_complex() && t >= 1)
        throw EmptyComplexError("cm_t_recursive: recursion needs a nonempty complex");
    return detail::cm_t_recursive_impl(dx, t, field);
}

}  // namespace cmt
