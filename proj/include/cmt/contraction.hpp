// The contraction functor: quotient a complex by the equivalence that
// identifies vertices lying in exactly the same facets, recovering the
// multiplicity vector the complex expands back from.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cmt/cm.hpp"
#include "cmt/core.hpp"
#include "cmt/expansion.hpp"

namespace cmt {

struct ContractionResult {
    SimplicialComplex gamma;                // contracted complex, labels y1..ym
    ExpansionVector alpha;                  // class sizes, canonical class order
    std::vector<std::vector<int>> classes;  // original vertex indices per class

    ContractionResult(SimplicialComplex g, ExpansionVector a, std::vector<std::vector<int>> c)
        : gamma(std::move(g)), alpha(std::move(a)), classes(std::move(c)) {}
};

// Classes are grouped on facet-incidence signatures and ordered by their
// smallest original vertex. Ghost vertices would have empty signatures and
// collapse spuriously, so they are rejected up front.
inline ContractionResult contract_complex(const SimplicialComplex& dx) {
    const int n = dx.vertex_count();
    if (n < 1) throw EmptyComplexError("contract_complex: complex has no vertices");
    const Face full = n == 64 ? ~Face{0} : (face_bit(n) - 1);
    if (dx.vertex_union() != full)
        throw GhostVertexError("contract_complex: vertex contained in no facet");

    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < dx.facets().size(); ++t)
        for (int v : face_indices(dx.facets()[t]))
            signature[static_cast<std::size_t>(v)].push_back(static_cast<int>(t));

    std::map<std::vector<int>, int> class_of_signature;
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of_vertex(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {  // ascending v: class order = smallest member
        auto [it, inserted] =
            class_of_signature.try_emplace(signature[static_cast<std::size_t>(v)],
                                           static_cast<int>(classes.size()));
        if (inserted) classes.emplace_back();
        class_of_vertex[static_cast<std::size_t>(v)] = it->second;
        classes[static_cast<std::size_t>(it->second)].push_back(v);
    }

    const int m = static_cast<int>(classes.size());
    std::vector<int> sizes;
    sizes.reserve(static_cast<std::size_t>(m));
    std::vector<VertexLabel> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        sizes.push_back(static_cast<int>(classes[static_cast<std::size_t>(c)].size()));
        labels.emplace_back("y" + std::to_string(c + 1));
    }

    // G_t = {classes fully inside F_t}; vertices of a class share facets, so
    // membership of one member decides the whole class
    std::vector<Face> gamma_facets;
    gamma_facets.reserve(dx.facets().size());
    for (Face f : dx.facets()) {
        Face g = 0;
        for (int c = 0; c < m; ++c)
            if (f & face_bit(classes[static_cast<std::size_t>(c)].front()))
                g |= face_bit(c);
        gamma_facets.push_back(g);
    }
    SimplicialComplex gamma(std::move(labels), gamma_facets);
    return ContractionResult(std::move(gamma), ExpansionVector(std::move(sizes)), std::move(classes));
}

// Expands the contraction back and checks the explicit bijection
// y_{i,j} -> j-th smallest member of class i carries facets onto facets.
inline bool verify_round_trip(const SimplicialComplex& dx) {
    ContractionResult res = contract_complex(dx);
    SimplicialComplex rebuilt = expand_complex(res.gamma, res.alpha);
    std::vector<int> to_original;
    to_original.reserve(static_cast<std::size_t>(dx.vertex_count()));
    for (const auto& cls : res.classes)
        for (int v : cls) to_original.push_back(v);
    if (static_cast<int>(to_original.size()) != dx.vertex_count()) return false;

    std::vector<Face> mapped;
    mapped.reserve(rebuilt.facets().size());
    for (Face f : rebuilt.facets()) {
        Face image = 0;
        for (int v : face_indices(f)) image |= face_bit(to_original[static_cast<std::size_t>(v)]);
        mapped.push_back(image);
    }
    std::sort(mapped.begin(), mapped.end(), face_lex_less);
    return mapped == dx.facets();
}

// Condition (†): across any two facets, vertices private to one side all
// carry the same multiplicity as vertices private to the other.
inline bool check_dagger(const SimplicialComplex& dx, const ExpansionVector& alpha) {
    alpha.check_against(dx.vertices().size());
    const auto& facets = dx.facets();
    for (std::size_t a = 0; a < facets.size(); ++a)
        for (std::size_t b = a + 1; b < facets.size(); ++b) {
            Face only_a = facets[a] & ~facets[b];
            Face only_b = facets[b] & ~facets[a];
            if (!only_a || !only_b) continue;
            for (int i : face_indices(only_a))
                for (int j : face_indices(only_b))
                    if (alpha.at(i) != alpha.at(j)) return false;
        }
    return true;
}

// Under (†), purity of the complex and of its expansion coincide.
inline bool verify_purity_transfer(const SimplicialComplex& dx, const ExpansionVector& alpha) {
    if (!check_dagger(dx, alpha))
        throw DaggerViolatedError("verify_purity_transfer: condition (dagger) fails");
    return is_pure(dx) == is_pure(expand_complex(dx, alpha));
}

// ---------------------------------------------------------------------------
// Contraction theorem harness

struct ContractionTheoremOutcome {
    enum class Verdict { pass, fail, skip };
    Verdict verdict = Verdict::skip;
    std::string skip_reason;
    bool delta_pure = false;
    bool gamma_pure = false;
    bool alpha_ge_t = false;
    int t = -1;
    std::vector<int> alpha;
    bool gamma_buchsbaum = false;    // meaningful when the theorem applies
    bool corollary_checked = false;  // t == 0: contraction of CM must be CM
    bool corollary_holds = false;
};

// With t the least level of Δ: if every class size is >= t and the
// contraction is pure, the contraction must be Buchsbaum; at t = 0 the
// contraction must already be Cohen-Macaulay.
inline ContractionTheoremOutcome verify_contraction_theorem(const SimplicialComplex& dx,
                                                            FieldSpec field) {
    ContractionTheoremOutcome out;
    out.delta_pure = is_pure(dx);
    if (!out.delta_pure) {
        out.skip_reason = "complex is not pure";
        return out;
    }
    ContractionResult res = contract_complex(dx);
    out.alpha = res.alpha.k;
    out.t = *min_cm_t(dx, field).minimal_t;
    out.gamma_pure = is_pure(res.gamma);
    out.alpha_ge_t = true;
    for (int a : res.alpha.k)
        if (a < out.t) out.alpha_ge_t = false;

    bool any_check = false;
    bool all_hold = true;
    if (out.t == 0) {
        out.corollary_checked = true;
        out.corollary_holds = is_cohen_macaulay(res.gamma, field);
        any_check = true;
        all_hold = all_hold && out.corollary_holds;
    }
    if (out.alpha_ge_t && out.gamma_pure) {
        out.gamma_buchsbaum = is_buchsbaum(res.gamma, field);
        any_check = true;
        all_hold = all_hold && out.gamma_buchsbaum;
    }
    if (!any_check) {
        out.skip_reason = "hypotheses not met (class size below t or contraction not pure)";
        return out;
    }
    out.verdict = all_hold ? ContractionTheoremOutcome::Verdict::pass
                           : ContractionTheoremOutcome::Verdict::fail;
    return out;
}

// ---------------------------------------------------------------------------
// Graph contraction

// Contracts the independence complex; the result is again an independence
// complex, whose edges are the (necessarily 2-element) minimal non-faces.
inline std::pair<SimpleGraph, ExpansionVector> contract_graph(const SimpleGraph& g) {
    ContractionResult res = contract_complex(independence_complex(g));
    std::vector<std::pair<int, int>> edges;
    for (Face nonface : minimal_nonfaces(res.gamma)) {
        auto idx = face_indices(nonface);
        if (idx.size() != 2)
            throw NotAGraphComplexError(
                "contract_graph: contraction has a minimal non-face of size != 2");
        edges.emplace_back(idx[0], idx[1]);
    }
    return {SimpleGraph(res.gamma.vertices(), std::move(edges)), res.alpha};
}

}  // namespace cmt
