// cmt: exact expansion/contraction calculator and theorem-sweep harness for
// simplicial complexes, simple graphs and monomial ideals.
//
// Exit codes: 0 success, 1 verification failure (some sweep instance failed),
// 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmt/cm.hpp"
#include "cmt/contraction.hpp"
#include "cmt/core.hpp"
#include "cmt/enumerate.hpp"
#include "cmt/expansion.hpp"
#include "cmt/homology.hpp"
#include "cmt/io.hpp"
#include "cmt/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cmt::Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

cmt::FieldSpec parse_field(const std::string& text) {
    if (text == "q" || text == "Q") return cmt::FieldSpec::rationals();
    if (text.rfind("gf:", 0) == 0) {
        try {
            return cmt::FieldSpec::gf(std::stoll(text.substr(3)));
        } catch (const std::invalid_argument&) {
            throw cmt::Error("bad field \"" + text + "\": expected q or gf:<prime>");
        } catch (const std::out_of_range&) {
            throw cmt::Error("bad field \"" + text + "\": characteristic out of range");
        }
    }
    throw cmt::Error("bad field \"" + text + "\": expected q or gf:<prime>");
}

cmt::ExpansionVector parse_alpha(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            entries.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw cmt::Error("bad --alpha entry \"" + item + "\"");
        }
    }
    if (entries.empty()) throw cmt::Error("--alpha must list at least one multiplicity");
    return cmt::ExpansionVector(std::move(entries));
}

std::string format_alpha(const std::vector<int>& alpha) {
    std::string s;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha[i]);
    }
    return s;
}

struct VerifyOptions {
    std::string theorem = "expansion";
    int max_vertices = 4;
    int alpha_max = 2;
    std::string mode = "exhaustive";
    std::optional<std::uint64_t> seed;
    int count = 100;
    std::vector<std::string> fields;
    std::string out_path;
};

int run_verify(const VerifyOptions& opt) {
    cmt::InstanceSweepConfig cfg;
    cfg.max_vertices = opt.max_vertices;
    cfg.alpha_entry_max = opt.alpha_max;
    if (opt.mode == "random") {
        if (!opt.seed) throw cmt::Error("--mode random requires --seed");
        cfg.mode = cmt::InstanceSweepConfig::Mode::random_draws;
        cfg.seed = *opt.seed;
        cfg.count = opt.count;
    } else if (opt.mode != "exhaustive") {
        throw cmt::Error("--mode must be exhaustive or random");
    } else if (opt.seed) {
        cfg.seed = *opt.seed;  // seeds the random-ideal family inside the lemma sweep
        cfg.count = opt.count;
    }
    cfg.fields.clear();
    for (const auto& f : opt.fields) cfg.fields.push_back(parse_field(f));
    if (cfg.fields.empty()) cfg.fields.push_back(cmt::FieldSpec::rationals());
    cfg.validate();

    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!opt.out_path.empty()) {
        out_file.open(opt.out_path, std::ios::binary);
        if (!out_file) throw cmt::Error("cannot open output file: " + opt.out_path);
        out = &out_file;
    }
    cmt::ReportSink sink = [&](const cmt::TheoremReport& r) { *out << r.jsonl() << "\n"; };

    cmt::SweepSummary summary;
    if (opt.theorem == "expansion") {
        summary = cmt::run_expansion_sweep(cfg, sink);
    } else if (opt.theorem == "contraction") {
        summary = cmt::run_contraction_sweep(cfg, sink);
    } else if (opt.theorem == "lemmas") {
        if (cfg.mode == cmt::InstanceSweepConfig::Mode::random_draws)
            throw cmt::Error("--theorem lemmas runs exhaustively; use --seed/--count for its random family");
        summary = cmt::run_lemma_sweep(cfg, sink);
    } else {
        throw cmt::Error("--theorem must be expansion, contraction or lemmas");
    }

    cmt::Json tail = cmt::Json::object();
    tail["summary"] = {{"pass", summary.pass}, {"fail", summary.fail}, {"skip", summary.skip}};
    *out << tail.dump() << "\n";
    if (out != &std::cout)
        std::cout << "pass=" << summary.pass << " fail=" << summary.fail
                  << " skip=" << summary.skip << "\n";
    return summary.fail > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact expansion/contraction toolkit for simplicial complexes"};
    app.require_subcommand(1);

    std::string file;
    std::string field_text = "q";
    std::string alpha_text;
    std::optional<int> t_query;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input JSON file")->required();
    };
    auto add_field = [&](CLI::App* cmd) {
        cmd->add_option("--field", field_text, "coefficient field: q or gf:<prime>");
    };
    auto add_alpha = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", alpha_text, "comma-separated multiplicities, one per vertex")
            ->required();
    };

    auto* info = app.add_subcommand("info", "summarize a complex, graph or ideal file");
    add_file(info);

    auto* homology = app.add_subcommand("homology", "reduced Betti numbers of a complex");
    add_file(homology);
    add_field(homology);

    auto* cm_cmd = app.add_subcommand("cm", "Cohen-Macaulay classification (least CM level)");
    add_file(cm_cmd);
    add_field(cm_cmd);
    cm_cmd->add_option("--t", t_query, "test one specific level instead of searching");

    auto* buchsbaum_cmd = app.add_subcommand("buchsbaum", "Buchsbaum test");
    add_file(buchsbaum_cmd);
    add_field(buchsbaum_cmd);

    auto* expand_cmd = app.add_subcommand("expand", "expand a complex by a multiplicity vector");
    add_file(expand_cmd);
    add_alpha(expand_cmd);

    auto* contract_cmd = app.add_subcommand("contract", "contract a complex");
    add_file(contract_cmd);

    auto* sr_cmd = app.add_subcommand("sr-ideal", "Stanley-Reisner ideal of a complex");
    add_file(sr_cmd);

    auto* edge_cmd = app.add_subcommand("edge-ideal", "edge ideal of a graph");
    add_file(edge_cmd);

    auto* indep_cmd = app.add_subcommand("indep-complex", "independence complex of a graph");
    add_file(indep_cmd);

    auto* expand_ideal_cmd = app.add_subcommand("expand-ideal", "expand a monomial ideal");
    add_file(expand_ideal_cmd);
    add_alpha(expand_ideal_cmd);

    auto* expand_graph_cmd = app.add_subcommand("expand-graph", "expand a graph");
    add_file(expand_graph_cmd);
    add_alpha(expand_graph_cmd);

    auto* contract_graph_cmd = app.add_subcommand("contract-graph", "contract a graph");
    add_file(contract_graph_cmd);

    VerifyOptions vopt;
    auto* verify_cmd = app.add_subcommand("verify", "run a theorem sweep, one JSON record per line");
    verify_cmd->add_option("--theorem", vopt.theorem, "expansion | contraction | lemmas");
    verify_cmd->add_option("--max-vertices", vopt.max_vertices, "largest vertex count in the domain");
    verify_cmd->add_option("--alpha-max", vopt.alpha_max, "largest multiplicity entry");
    verify_cmd->add_option("--mode", vopt.mode, "exhaustive | random");
    verify_cmd->add_option("--seed", vopt.seed, "seed for random draws");
    verify_cmd->add_option("--count", vopt.count, "number of random draws");
    verify_cmd->add_option("--field", vopt.fields, "coefficient field(s); repeatable");
    verify_cmd->add_option("--out", vopt.out_path, "write records to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cmt::FieldSpec field = parse_field(field_text);

        if (*info) {
            cmt::ParsedObject obj = cmt::parse_any(read_file(file));
            if (auto* dx = std::get_if<cmt::SimplicialComplex>(&obj)) {
                std::cout << "kind=complex vertices=" << dx->vertex_count()
                          << " facets=" << dx->facet_count() << " dim=" << cmt::dim(*dx)
                          << " pure=" << (cmt::is_pure(*dx) ? "true" : "false") << "\n";
            } else if (auto* g = std::get_if<cmt::SimpleGraph>(&obj)) {
                std::cout << "kind=graph vertices=" << g->vertex_count()
                          << " edges=" << g->edges().size() << "\n";
            } else {
                auto& ideal = std::get<cmt::MonomialIdeal>(obj);
                std::cout << "kind=ideal variables=" << ideal.ring_vertices().size()
                          << " generators=" << ideal.generators().size()
                          << " squarefree=" << (ideal.is_squarefree() ? "true" : "false") << "\n";
            }
        } else if (*homology) {
            auto dx = cmt::parse_complex(read_file(file));
            auto profile = cmt::reduced_betti(dx, field);
            std::cout << "dim=" << profile.top_dim << " field=" << field.str() << " betti[-1.."
                      << profile.top_dim << "]=";
            for (int q = -1; q <= profile.top_dim; ++q)
                std::cout << (q > -1 ? "," : "") << profile.at(q);
            std::cout << "\n";
        } else if (*cm_cmd) {
            auto dx = cmt::parse_complex(read_file(file));
            if (t_query) {
                bool res = cmt::is_cm_t(dx, *t_query, field);
                std::cout << "pure=" << (cmt::is_pure(dx) ? "true" : "false") << " cm_"
                          << *t_query << "=" << (res ? "true" : "false") << "\n";
            } else {
                auto report = cmt::min_cm_t(dx, field);
                std::cout << "pure=" << (report.pure ? "true" : "false");
                if (report.minimal_t) std::cout << " minimal_t=" << *report.minimal_t;
                std::cout << "\n";
                for (const auto& w : report.witnesses) {
                    std::cout << "witness t=" << w.t << " face=";
                    auto idx = cmt::face_indices(w.face);
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        std::cout << (i ? "," : "")
                                  << dx.vertices()[static_cast<std::size_t>(idx[i])].str();
                    if (idx.empty()) std::cout << "{}";
                    std::cout << " degree=" << w.degree << "\n";
                }
            }
        } else if (*buchsbaum_cmd) {
            auto dx = cmt::parse_complex(read_file(file));
            std::cout << "buchsbaum=" << (cmt::is_buchsbaum(dx, field) ? "true" : "false") << "\n";
        } else if (*expand_cmd) {
            auto dx = cmt::parse_complex(read_file(file));
            auto expanded = cmt::expand_complex(dx, parse_alpha(alpha_text));
            std::cout << cmt::serialize(expanded) << "\n";
            std::cout << "pure=" << (cmt::is_pure(expanded) ? "true" : "false") << "\n";
        } else if (*contract_cmd) {
            auto dx = cmt::parse_complex(read_file(file));
            auto res = cmt::contract_complex(dx);
            std::cout << cmt::serialize(res.gamma) << "\n";
            std::cout << "alpha=" << res.alpha.str() << "\n";
            std::cout << "classes=";
            for (const auto& cls : res.classes) {
                std::cout << "[";
                for (std::size_t i = 0; i < cls.size(); ++i)
                    std::cout << (i ? "," : "")
                              << dx.vertices()[static_cast<std::size_t>(cls[i])].str();
                std::cout << "]";
            }
            std::cout << "\n";
        } else if (*sr_cmd) {
            auto dx = cmt::parse_complex(read_file(file));
            std::cout << cmt::serialize(cmt::stanley_reisner_ideal(dx)) << "\n";
        } else if (*edge_cmd) {
            auto g = cmt::parse_graph(read_file(file));
            std::cout << cmt::serialize(cmt::edge_ideal(g)) << "\n";
        } else if (*indep_cmd) {
            auto g = cmt::parse_graph(read_file(file));
            std::cout << cmt::serialize(cmt::independence_complex(g)) << "\n";
        } else if (*expand_ideal_cmd) {
            auto ideal = cmt::parse_ideal(read_file(file));
            std::cout << cmt::serialize(cmt::expand_ideal(ideal, parse_alpha(alpha_text))) << "\n";
        } else if (*expand_graph_cmd) {
            auto g = cmt::parse_graph(read_file(file));
            std::cout << cmt::serialize(cmt::expand_graph(g, parse_alpha(alpha_text))) << "\n";
        } else if (*contract_graph_cmd) {
            auto g = cmt::parse_graph(read_file(file));
            auto [h, alpha] = cmt::contract_graph(g);
            std::cout << cmt::serialize(h) << "\n";
            std::cout << "alpha=" << format_alpha(alpha.k) << "\n";
        } else if (*verify_cmd) {
            return run_verify(vopt);
        }
    } catch (const cmt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
