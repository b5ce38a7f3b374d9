// Sweep harness: runs the expansion/contraction theorem checks and the
// structural lemma checks over exhaustive or seeded-random instance domains,
// emitting one machine-readable record per instance in a canonical order
// that is independent of worker scheduling.
#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cmt/cm.hpp"
#include "cmt/contraction.hpp"
#include "cmt/core.hpp"
#include "cmt/enumerate.hpp"
#include "cmt/expansion.hpp"
#include "cmt/io.hpp"

namespace cmt {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CMT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

struct InstanceSweepConfig {
    int max_vertices = 5;
    int alpha_entry_max = 3;
    int expanded_vertex_cap = 12;  // instances whose expansion exceeds this are skipped
    enum class Mode { exhaustive, random_draws } mode = Mode::exhaustive;
    std::uint64_t seed = 0;
    int count = 0;  // draws in random mode
    std::vector<FieldSpec> fields{FieldSpec::rationals()};
    int threads = 0;             // 0 = CMT_THREADS env or hardware concurrency
    bool canonical_only = true;  // one representative per vertex relabeling orbit
    bool pure_only = false;      // restrict complex domains to pure complexes

    void validate() const {
        if (mode == Mode::exhaustive && max_vertices > 8)
            throw Error("exhaustive sweeps support at most 8 vertices");
        if (mode == Mode::random_draws && count < 1)
            throw Error("random sweeps need a positive draw count");
        if (fields.empty()) throw Error("sweep needs at least one field");
    }
};

struct TheoremReport {
    std::string instance;
    std::string check;
    std::string field;    // empty for field-independent checks
    std::string verdict;  // "pass" | "fail" | "skip"
    std::string detail;
    Json payload;  // reproduction data, present on fail

    Json record() const {
        Json j = Json::object();
        j["instance"] = instance;
        j["check"] = check;
        if (!field.empty()) j["field"] = field;
        j["verdict"] = verdict;
        if (!detail.empty()) j["detail"] = detail;
        if (!payload.is_null()) j["payload"] = payload;
        return j;
    }

    std::string jsonl() const { return record().dump(); }
};

struct SweepSummary {
    long long pass = 0;
    long long fail = 0;
    long long skip = 0;
    std::vector<TheoremReport> failures;

    long long total() const { return pass + fail + skip; }

    void merge(SweepSummary&& other) {
        pass += other.pass;
        fail += other.fail;
        skip += other.skip;
        for (auto& f : other.failures) failures.push_back(std::move(f));
    }
};

using ReportSink = std::function<void(const TheoremReport&)>;

namespace detail {

struct SweepCollector {
    SweepSummary summary;
    std::vector<TheoremReport>* records;  // null when no sink is attached

    void add(TheoremReport&& report) {
        if (report.verdict == "pass") ++summary.pass;
        else if (report.verdict == "fail") ++summary.fail;
        else ++summary.skip;
        if (report.verdict == "fail") summary.failures.push_back(report);
        if (records) records->push_back(std::move(report));
    }
};

// Runs fn(task, collector) over [0, task_count) on a worker pool; tasks are
// claimed dynamically but committed to the sink strictly in task order.
template <class Fn>
SweepSummary run_tasks_ordered(int task_count, int threads, const ReportSink& sink, Fn&& fn) {
    SweepSummary total;
    if (task_count <= 0) return total;
    threads = std::max(1, std::min(threads, task_count));

    struct Slot {
        SweepSummary summary;
        std::vector<TheoremReport> records;
        bool done = false;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(task_count));
    std::atomic<int> next{0};
    std::mutex mu;
    std::condition_variable cv;

    auto worker = [&]() {
        while (true) {
            int task = next.fetch_add(1);
            if (task >= task_count) break;
            SweepCollector collector;
            std::vector<TheoremReport> records;
            collector.records = sink ? &records : nullptr;
            try {
                fn(task, collector);
            } catch (const std::exception& e) {
                TheoremReport report;
                report.instance = "task=" + std::to_string(task);
                report.check = "harness";
                report.verdict = "fail";
                report.detail = std::string("exception: ") + e.what();
                collector.add(std::move(report));
            }
            {
                std::lock_guard<std::mutex> lock(mu);
                auto& slot = slots[static_cast<std::size_t>(task)];
                slot.summary = std::move(collector.summary);
                slot.records = std::move(records);
                slot.done = true;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (int task = 0; task < task_count; ++task) {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return slots[static_cast<std::size_t>(task)].done; });
        Slot slot = std::move(slots[static_cast<std::size_t>(task)]);
        lock.unlock();
        if (sink)
            for (const auto& r : slot.records) sink(r);
        total.merge(std::move(slot.summary));
    }
    for (auto& t : pool) t.join();
    return total;
}

// ----- instance ids ---------------------------------------------------------

inline std::string complex_id(int n, const std::vector<Face>& facets) {
    std::string id = "n=" + std::to_string(n) + ";f=";
    std::vector<Face> sorted = facets;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) id += ",";
        id += std::to_string(sorted[i]);
    }
    return id;
}

inline std::string graph_id(const SimpleGraph& g) {
    std::string id = "n=" + std::to_string(g.vertex_count()) + ";e=";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (i) id += ",";
        id += std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
    }
    return id;
}

// ----- complex domain tasks -------------------------------------------------

struct ComplexTask {
    int n;
    Face root;  // smallest facet mask; root 0 stands for the {∅} complex
};

inline std::vector<ComplexTask> complex_tasks(int min_n, int max_n) {
    std::vector<ComplexTask> tasks;
    if (min_n <= 0) tasks.push_back({0, 0});
    for (int n = std::max(1, min_n); n <= max_n; ++n)
        for (unsigned root = 1; root < (1u << n); ++root)
            tasks.push_back({n, static_cast<Face>(root)});
    return tasks;
}

template <class F>
void for_task_complexes(const ComplexTask& task, const InstanceSweepConfig& cfg, F&& f) {
    if (task.n == 0) {
        const std::vector<Face> empty_facet{0};
        f(empty_facet);  // {∅} is pure
        return;
    }
    for_each_antichain_rooted(task.n, task.root, [&](const std::vector<Face>& facets) {
        if (!covers_all(facets, task.n)) return;
        if (cfg.pure_only) {
            int c = face_card(facets.front());
            for (Face g : facets)
                if (face_card(g) != c) return;
        }
        if (cfg.canonical_only && !is_canonical_labeling(facets, task.n)) return;
        f(facets);
    });
}

inline Json instance_payload(const SimplicialComplex& dx) {
    Json j = Json::object();
    j["complex"] = to_json(dx);
    return j;
}

inline Json instance_payload(const SimplicialComplex& dx, const ExpansionVector& alpha) {
    Json j = Json::object();
    j["complex"] = to_json(dx);
    j["alpha"] = alpha.k;
    return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Expansion theorem sweep

namespace detail {

inline void expansion_reports(const SimplicialComplex& dx, const std::vector<Face>& facets,
                              int n, const InstanceSweepConfig& cfg, SweepCollector& out) {
    for_each_alpha(n, cfg.alpha_entry_max, cfg.expanded_vertex_cap, [&](const ExpansionVector& alpha) {
        for (const auto& field : cfg.fields) {
            TheoremReport report;
            report.instance = complex_id(n, facets) + ";a=" + alpha.str();
            report.check = "expansion-theorem";
            report.field = field.str();
            ExpansionTheoremOutcome outcome = verify_expansion_theorem(dx, alpha, field);
            switch (outcome.verdict) {
                case ExpansionTheoremOutcome::Verdict::pass: report.verdict = "pass"; break;
                case ExpansionTheoremOutcome::Verdict::fail: report.verdict = "fail"; break;
                case ExpansionTheoremOutcome::Verdict::skip: report.verdict = "skip"; break;
            }
            if (outcome.verdict == ExpansionTheoremOutcome::Verdict::skip) {
                report.detail = outcome.skip_reason;
            } else {
                report.detail = "t=" + std::to_string(outcome.t) + " e=" + std::to_string(outcome.e) +
                                " k=" + std::to_string(outcome.k) +
                                " t'=" + std::to_string(outcome.t_prime) + " expected=" +
                                std::to_string(outcome.t + outcome.e - outcome.k + 1);
            }
            if (outcome.verdict == ExpansionTheoremOutcome::Verdict::fail)
                report.payload = instance_payload(dx, alpha);
            out.add(std::move(report));
        }
    });
}

}  // namespace detail

// Exhaustively checks the predicted level shift min_cm_t(Δ^α) = t + e - k + 1
// on pure complexes; fails are collected with reproduction payloads.
inline SweepSummary run_expansion_sweep(InstanceSweepConfig cfg, const ReportSink& sink = {}) {
    cfg.pure_only = true;
    cfg.validate();
    const int threads = resolve_threads(cfg.threads);

    if (cfg.mode == InstanceSweepConfig::Mode::random_draws) {
        return detail::run_tasks_ordered(1, 1, sink, [&](int, detail::SweepCollector& out) {
            Rng rng(cfg.seed);
            for (int draw = 0; draw < cfg.count; ++draw) {
                SimplicialComplex dx = random_complex(rng, cfg.max_vertices);
                ExpansionVector alpha = random_alpha(rng, dx.vertex_count(), cfg.alpha_entry_max);
                if (alpha.sum() > cfg.expanded_vertex_cap) continue;
                detail::expansion_reports(dx, dx.facets(), dx.vertex_count(), cfg, out);
            }
        });
    }

    auto tasks = detail::complex_tasks(1, cfg.max_vertices);
    return detail::run_tasks_ordered(
        static_cast<int>(tasks.size()), threads, sink, [&](int t, detail::SweepCollector& out) {
            const auto& task = tasks[static_cast<std::size_t>(t)];
            const auto labels = standard_labels(task.n);
            detail::for_task_complexes(task, cfg, [&](const std::vector<Face>& facets) {
                SimplicialComplex dx(labels, facets);
                detail::expansion_reports(dx, facets, task.n, cfg, out);
            });
        });
}

// ---------------------------------------------------------------------------
// Contraction theorem sweep

inline SweepSummary run_contraction_sweep(InstanceSweepConfig cfg, const ReportSink& sink = {}) {
    cfg.validate();
    const int threads = resolve_threads(cfg.threads);
    auto tasks = detail::complex_tasks(1, cfg.max_vertices);
    return detail::run_tasks_ordered(
        static_cast<int>(tasks.size()), threads, sink, [&](int t, detail::SweepCollector& out) {
            const auto& task = tasks[static_cast<std::size_t>(t)];
            const auto labels = standard_labels(task.n);
            detail::for_task_complexes(task, cfg, [&](const std::vector<Face>& facets) {
                SimplicialComplex dx(labels, facets);
                for (const auto& field : cfg.fields) {
                    TheoremReport report;
                    report.instance = detail::complex_id(task.n, facets);
                    report.check = "contraction-theorem";
                    report.field = field.str();
                    ContractionTheoremOutcome outcome = verify_contraction_theorem(dx, field);
                    switch (outcome.verdict) {
                        case ContractionTheoremOutcome::Verdict::pass: report.verdict = "pass"; break;
                        case ContractionTheoremOutcome::Verdict::fail: report.verdict = "fail"; break;
                        case ContractionTheoremOutcome::Verdict::skip: report.verdict = "skip"; break;
                    }
                    if (outcome.verdict == ContractionTheoremOutcome::Verdict::skip) {
                        report.detail = outcome.skip_reason;
                    } else {
                        report.detail = "t=" + std::to_string(outcome.t) + " alpha=";
                        for (std::size_t i = 0; i < outcome.alpha.size(); ++i) {
                            if (i) report.detail += ",";
                            report.detail += std::to_string(outcome.alpha[static_cast<std::size_t>(i)]);
                        }
                        if (outcome.corollary_checked)
                            report.detail += outcome.corollary_holds ? " contraction_cm=true"
                                                                     : " contraction_cm=false";
                    }
                    if (outcome.verdict == ContractionTheoremOutcome::Verdict::fail)
                        report.payload = detail::instance_payload(dx);
                    out.add(std::move(report));
                }
            });
        });
}

// ---------------------------------------------------------------------------
// Lemma / structure families

enum class Family {
    sr_expand,             // expansion commutes with Stanley-Reisner ideals
    gens_expand,           // expansion of generators = generators of expansion
    graph_expand,          // expansion commutes with edge ideals / independence
    betti_epi,             // expansion can only grow reduced Betti numbers
    link_structure,        // links in an expansion: block case and cone case
    round_trip,            // contract then expand reproduces the complex
    purity_dagger,         // purity transfers under condition (dagger)
    cm_descent,            // Cohen-Macaulay expansion forces Cohen-Macaulay base
    cm_agreement,          // threshold CM_t = vertex-link recursion, monotone
    boundary_square,       // consecutive boundary maps compose to zero
    euler_characteristic,  // alternating face count = alternating Betti sum
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::sr_expand: return "lemma:sr-expand";
        case Family::gens_expand: return "lemma:gens-expand";
        case Family::graph_expand: return "lemma:graph-expand";
        case Family::betti_epi: return "prop:betti-epi";
        case Family::link_structure: return "prop:link-structure";
        case Family::round_trip: return "lemma:round-trip";
        case Family::purity_dagger: return "prop:purity-dagger";
        case Family::cm_descent: return "prop:cm-descent";
        case Family::cm_agreement: return "lemma:cm-agreement";
        case Family::boundary_square: return "kernel:boundary-square";
        case Family::euler_characteristic: return "kernel:euler";
    }
    return "?";
}

namespace detail {

// Second route for expand_ideal: the defining sum of products of block-prime
// powers, computed with plain ideal arithmetic.
inline std::vector<Monomial> ideal_product(const std::vector<Monomial>& a,
                                           const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x.times(y));
    return minimalize_generators(std::move(out));
}

inline MonomialIdeal expand_ideal_by_products(const MonomialIdeal& ideal,
                                              const ExpansionVector& alpha) {
    ExpandedTable table = expanded_vertex_table(ideal.ring_vertices(), alpha);
    std::vector<Monomial> gens;
    for (const auto& u : ideal.generators()) {
        std::vector<Monomial> term{Monomial::one()};
        for (auto [v, e] : u.exponents()) {
            std::vector<Monomial> block_prime;
            for (int j = 0; j < alpha.at(v); ++j)
                block_prime.push_back(Monomial({{table.offset[static_cast<std::size_t>(v)] + j, 1}}));
            for (int rep = 0; rep < e; ++rep) term = ideal_product(term, block_prime);
        }
        gens.insert(gens.end(), term.begin(), term.end());
    }
    return MonomialIdeal(std::move(table.labels), std::move(gens));
}

inline void add_bool_report(SweepCollector& out, std::string instance, Family family,
                            std::string field, bool ok, std::string detail_text, Json payload) {
    TheoremReport report;
    report.instance = std::move(instance);
    report.check = family_name(family);
    report.field = std::move(field);
    report.verdict = ok ? "pass" : "fail";
    report.detail = std::move(detail_text);
    if (!ok) report.payload = std::move(payload);
    out.add(std::move(report));
}

// ----- per-instance family checks -------------------------------------------

inline void check_sr_expand(const SimplicialComplex& dx, int n, const std::vector<Face>& facets,
                            const InstanceSweepConfig& cfg, SweepCollector& out) {
    MonomialIdeal sr = stanley_reisner_ideal(dx);
    for_each_alpha(n, cfg.alpha_entry_max, cfg.expanded_vertex_cap, [&](const ExpansionVector& alpha) {
        bool ok = expand_ideal(sr, alpha) == stanley_reisner_ideal(expand_complex(dx, alpha));
        add_bool_report(out, complex_id(n, facets) + ";a=" + alpha.str(), Family::sr_expand, "", ok,
                        "", instance_payload(dx, alpha));
    });
}

inline void check_betti_epi(const SimplicialComplex& dx, int n, const std::vector<Face>& facets,
                            const InstanceSweepConfig& cfg, SweepCollector& out) {
    const int d = dim(dx);
    std::vector<HomologyProfile> base;
    base.reserve(cfg.fields.size());
    for (const auto& field : cfg.fields) base.push_back(reduced_betti(dx, field));
    for_each_alpha(n, cfg.alpha_entry_max, cfg.expanded_vertex_cap, [&](const ExpansionVector& alpha) {
        SimplicialComplex expansion = expand_complex(dx, alpha);
        for (std::size_t fi = 0; fi < cfg.fields.size(); ++fi) {
            HomologyProfile expanded = reduced_betti(expansion, cfg.fields[fi]);
            bool ok = true;
            int bad_q = 0;
            for (int q = -1; q <= d; ++q)
                if (expanded.at(q) < base[fi].at(q)) { ok = false; bad_q = q; break; }
            add_bool_report(out, complex_id(n, facets) + ";a=" + alpha.str(), Family::betti_epi,
                            cfg.fields[fi].str(), ok, ok ? "" : "degree=" + std::to_string(bad_q),
                            instance_payload(dx, alpha));
        }
    });
}

inline void check_link_structure(const SimplicialComplex& dx, int n, const std::vector<Face>& facets,
                                 const InstanceSweepConfig& cfg, SweepCollector& out) {
    for_each_alpha(n, cfg.alpha_entry_max, cfg.expanded_vertex_cap, [&](const ExpansionVector& alpha) {
        SimplicialComplex expansion = expand_complex(dx, alpha);
        ExpandedTable blocks = expanded_vertex_table(dx.vertices(), alpha);
        const auto expansion_faces = expansion.all_faces();
        for (const auto& field : cfg.fields) {
            bool ok = true;
            std::string why;
            for (Face f : expansion_faces) {
                Face projected = project_face_mask(f, alpha, blocks.offset);
                Face full = expand_face_mask(projected, alpha, blocks.offset);
                // facets of the link of f within the expansion
                std::vector<Face> link_facets;
                for (Face m : expansion.facets())
                    if (face_subset(f, m)) link_facets.push_back(m & ~f);
                std::sort(link_facets.begin(), link_facets.end());
                if (f == full) {
                    // block-aligned: link equals the expanded link of the
                    // projected face
                    std::vector<Face> expected;
                    for (Face m : dx.facets())
                        if (face_subset(projected, m))
                            expected.push_back(expand_face_mask(m & ~projected, alpha, blocks.offset));
                    std::sort(expected.begin(), expected.end());
                    if (expected != link_facets) {
                        ok = false;
                        why = "block link mismatch at face " + std::to_string(f);
                        break;
                    }
                } else {
                    // partial block: the link must be a cone with every
                    // missing copy as an apex, and acyclic in all degrees
                    Face apex_pool = full & ~f;
                    Face common = ~Face{0};
                    for (Face m : link_facets) common &= m;
                    if ((common & apex_pool) != apex_pool) {
                        ok = false;
                        why = "missing copies are not apexes at face " + std::to_string(f);
                        break;
                    }
                    std::vector<Face> link_faces;
                    for (Face m : expansion_faces)
                        if (face_subset(f, m)) link_faces.push_back(m & ~f);
                    detail::FacesByDim split(link_faces);
                    std::optional<int> defect;
                    if (field.kind == FieldSpec::Kind::rationals) {
                        defect = rational_defect_below(split, split.top_dim + 1);
                    } else {
                        HomologyProfile profile = reduced_betti_by_dim(split, field);
                        for (int q = -1; q <= profile.top_dim; ++q)
                            if (profile.at(q) != 0) { defect = q; break; }
                    }
                    if (defect) {
                        ok = false;
                        why = "cone link has homology in degree " + std::to_string(*defect) +
                              " at face " + std::to_string(f);
                        break;
                    }
                }
            }
            add_bool_report(out, complex_id(n, facets) + ";a=" + alpha.str(),
                            Family::link_structure, field.str(), ok, why,
                            instance_payload(dx, alpha));
        }
    });
}

inline void check_round_trip(const SimplicialComplex& dx, int n, const std::vector<Face>& facets,
                             SweepCollector& out) {
    add_bool_report(out, complex_id(n, facets), Family::round_trip, "", verify_round_trip(dx), "",
                    instance_payload(dx));
}

inline void check_purity_dagger(const SimplicialComplex& dx, int n, const std::vector<Face>& facets,
                                const InstanceSweepConfig& cfg, SweepCollector& out) {
    for_each_alpha(n, cfg.alpha_entry_max, 0, [&](const ExpansionVector& alpha) {
        TheoremReport report;
        report.instance = complex_id(n, facets) + ";a=" + alpha.str();
        report.check = family_name(Family::purity_dagger);
        if (!check_dagger(dx, alpha)) {
            report.verdict = "skip";
            report.detail = "condition (dagger) does not hold";
        } else if (verify_purity_transfer(dx, alpha)) {
            report.verdict = "pass";
        } else {
            report.verdict = "fail";
            report.payload = instance_payload(dx, alpha);
        }
        out.add(std::move(report));
    });
}

inline void check_cm_descent(const SimplicialComplex& dx, int n, const std::vector<Face>& facets,
                             const InstanceSweepConfig& cfg, SweepCollector& out) {
    for (const auto& field : cfg.fields) {
        const bool base_cm = is_cohen_macaulay(dx, field);
        for_each_alpha(n, cfg.alpha_entry_max, cfg.expanded_vertex_cap,
                       [&](const ExpansionVector& alpha) {
                           bool expansion_cm = is_cohen_macaulay(expand_complex(dx, alpha), field);
                           bool ok = !expansion_cm || base_cm;
                           add_bool_report(out, complex_id(n, facets) + ";a=" + alpha.str(),
                                           Family::cm_descent, field.str(), ok,
                                           ok ? "" : "expansion CM but base is not",
                                           instance_payload(dx, alpha));
                       });
    }
}

inline void check_cm_agreement(const SimplicialComplex& dx, int n, const std::vector<Face>& facets,
                               const InstanceSweepConfig& cfg, SweepCollector& out) {
    for (const auto& field : cfg.fields) {
        const bool pure = is_pure(dx);
        const int ceiling = dim(dx) + 1;
        LinkHomologyCache cache(dx, field);
        bool ok = true;
        std::string why;
        bool previous = false;
        for (int t = 0; t <= ceiling && ok; ++t) {
            const bool threshold = is_cm_t_cached(cache, pure, t);
            const bool recursive =
                dx.is_empty_complex() && t >= 1 ? threshold  // recursion undefined on {∅}
                                                : cm_t_recursive(dx, t, field);
            if (threshold != recursive) {
                ok = false;
                why = "threshold and recursion disagree at t=" + std::to_string(t);
            }
            if (t > 0 && previous && !threshold) {
                ok = false;
                why = "monotonicity breaks at t=" + std::to_string(t);
            }
            previous = threshold;
        }
        if (ok && pure && !previous) {
            ok = false;
            why = "pure complex is not CM at t=dim+1";
        }
        if (ok) {
            const bool cm0 = is_cm_t(dx, 0, field);
            if (cm0 != is_cohen_macaulay(dx, field)) {
                ok = false;
                why = "CM_0 differs from the direct Cohen-Macaulay check";
            } else if (is_cm_t(dx, 1, field) != is_buchsbaum(dx, field)) {
                ok = false;
                why = "CM_1 differs from the Buchsbaum check";
            }
        }
        add_bool_report(out, complex_id(n, facets), Family::cm_agreement, field.str(), ok, why,
                        instance_payload(dx));
    }
}

inline void check_boundary_square(const SimplicialComplex& dx, int n,
                                  const std::vector<Face>& facets, SweepCollector& out) {
    const int d = dim(dx);
    bool ok = true;
    for (int q = 1; q <= d && ok; ++q) {
        BoundaryMatrix lower = boundary_matrix(dx, q - 1, FieldSpec::rationals());
        BoundaryMatrix upper = boundary_matrix(dx, q, FieldSpec::rationals());
        // integer product; zero over the integers is zero over every field
        for (std::size_t i = 0; i < lower.row_count() && ok; ++i)
            for (std::size_t j = 0; j < upper.col_count(); ++j) {
                std::int64_t sum = 0;
                for (std::size_t k = 0; k < lower.col_count(); ++k)
                    sum += static_cast<std::int64_t>(lower.at(i, k)) * upper.at(k, j);
                if (sum != 0) { ok = false; break; }
            }
    }
    add_bool_report(out, complex_id(n, facets), Family::boundary_square, "", ok, "",
                    instance_payload(dx));
}

inline void check_euler(const SimplicialComplex& dx, int n, const std::vector<Face>& facets,
                        const InstanceSweepConfig& cfg, SweepCollector& out) {
    detail::FacesByDim split(dx.all_faces());
    std::int64_t chi = 0;
    for (int q = -1; q <= split.top_dim; ++q)
        chi += (q % 2 == 0 ? 1 : -1) * split.count(q + 1);
    for (const auto& field : cfg.fields) {
        HomologyProfile profile = reduced_betti(dx, field);
        std::int64_t alt = 0;
        for (int q = -1; q <= profile.top_dim; ++q)
            alt += (q % 2 == 0 ? 1 : -1) * profile.at(q);
        add_bool_report(out, complex_id(n, facets), Family::euler_characteristic, field.str(),
                        chi == alt,
                        chi == alt ? ""
                                   : "chi=" + std::to_string(chi) + " alt=" + std::to_string(alt),
                        instance_payload(dx));
    }
}

}  // namespace detail

// One structural family over the configured domain.
inline SweepSummary run_family_sweep(Family family, InstanceSweepConfig cfg,
                                     const ReportSink& sink = {}) {
    cfg.validate();
    const int threads = resolve_threads(cfg.threads);

    if (family == Family::gens_expand) {
        // seeded random ideals; single ordered task keeps the draw stream stable
        return detail::run_tasks_ordered(1, 1, sink, [&](int, detail::SweepCollector& out) {
            Rng rng(cfg.seed);
            for (int draw = 0; draw < cfg.count; ++draw) {
                MonomialIdeal ideal = random_ideal(rng, 4, 2, 4);
                ExpansionVector alpha =
                    random_alpha(rng, static_cast<int>(ideal.ring_vertices().size()),
                                 cfg.alpha_entry_max);
                bool ok = expand_ideal(ideal, alpha) == detail::expand_ideal_by_products(ideal, alpha);
                Json payload = Json::object();
                payload["ideal"] = to_json(ideal);
                payload["alpha"] = alpha.k;
                detail::add_bool_report(out, "draw=" + std::to_string(draw), Family::gens_expand, "",
                                        ok, "", std::move(payload));
            }
        });
    }

    if (family == Family::graph_expand) {
        std::vector<int> sizes;
        for (int n = 0; n <= cfg.max_vertices; ++n) sizes.push_back(n);
        return detail::run_tasks_ordered(
            static_cast<int>(sizes.size()), threads, sink, [&](int t, detail::SweepCollector& out) {
                const int n = sizes[static_cast<std::size_t>(t)];
                for_each_graph_on(n, [&](const SimpleGraph& g) {
                    for_each_alpha(n, cfg.alpha_entry_max, 0, [&](const ExpansionVector& alpha) {
                        SimpleGraph expanded = expand_graph(g, alpha);
                        bool ideals_match = edge_ideal(expanded) == expand_ideal(edge_ideal(g), alpha);
                        bool complexes_match =
                            independence_complex(expanded) ==
                            expand_complex(independence_complex(g), alpha);
                        bool ok = ideals_match && complexes_match;
                        Json payload = Json::object();
                        payload["graph"] = to_json(g);
                        payload["alpha"] = alpha.k;
                        detail::add_bool_report(out, detail::graph_id(g) + ";a=" + alpha.str(),
                                                Family::graph_expand, "", ok,
                                                ok ? ""
                                                   : (ideals_match ? "independence complex mismatch"
                                                                   : "edge ideal mismatch"),
                                                std::move(payload));
                    });
                });
            });
    }

    // complex-domain families
    int min_n = 0;
    if (family == Family::sr_expand || family == Family::betti_epi ||
        family == Family::link_structure || family == Family::round_trip ||
        family == Family::purity_dagger || family == Family::cm_descent)
        min_n = 1;  // these need a vertex (or a multiplicity vector)
    auto tasks = detail::complex_tasks(min_n, cfg.max_vertices);
    return detail::run_tasks_ordered(
        static_cast<int>(tasks.size()), threads, sink, [&](int t, detail::SweepCollector& out) {
            const auto& task = tasks[static_cast<std::size_t>(t)];
            const auto labels = standard_labels(task.n);
            detail::for_task_complexes(task, cfg, [&](const std::vector<Face>& facets) {
                SimplicialComplex dx(labels, facets);
                switch (family) {
                    case Family::sr_expand:
                        detail::check_sr_expand(dx, task.n, facets, cfg, out);
                        break;
                    case Family::betti_epi:
                        detail::check_betti_epi(dx, task.n, facets, cfg, out);
                        break;
                    case Family::link_structure:
                        detail::check_link_structure(dx, task.n, facets, cfg, out);
                        break;
                    case Family::round_trip:
                        detail::check_round_trip(dx, task.n, facets, out);
                        break;
                    case Family::purity_dagger:
                        detail::check_purity_dagger(dx, task.n, facets, cfg, out);
                        break;
                    case Family::cm_descent:
                        detail::check_cm_descent(dx, task.n, facets, cfg, out);
                        break;
                    case Family::cm_agreement:
                        detail::check_cm_agreement(dx, task.n, facets, cfg, out);
                        break;
                    case Family::boundary_square:
                        detail::check_boundary_square(dx, task.n, facets, out);
                        break;
                    case Family::euler_characteristic:
                        detail::check_euler(dx, task.n, facets, cfg, out);
                        break;
                    default: break;
                }
            });
        });
}

// Every family at one configuration (the CLI surface for --theorem lemmas).
inline SweepSummary run_lemma_sweep(const InstanceSweepConfig& cfg, const ReportSink& sink = {}) {
    SweepSummary total;
    for (Family family :
         {Family::sr_expand, Family::gens_expand, Family::graph_expand, Family::betti_epi,
          Family::link_structure, Family::round_trip, Family::purity_dagger, Family::cm_descent,
          Family::cm_agreement, Family::boundary_square, Family::euler_characteristic}) {
        InstanceSweepConfig family_cfg = cfg;
        if (family == Family::gens_expand && family_cfg.count == 0) family_cfg.count = 200;
        total.merge(run_family_sweep(family, family_cfg, sink));
    }
    return total;
}

}  // namespace cmt
