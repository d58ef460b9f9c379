#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "splp/corpus.hpp"
#include "splp/gallai.hpp"
#include "splp/json_io.hpp"
#include "splp/oracle.hpp"
#include "splp/parallel.hpp"
#include "splp/prng.hpp"
#include "splp/trace.hpp"

using namespace splp;

namespace {

Graph load_graph(const std::string& input) {
    std::string text;
    if (input == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(input);
        if (!in) throw std::invalid_argument("cannot open input file: " + input);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return parse_edge_list(text);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_ints(const std::vector<int>& vs, const char* sep = " ") {
    std::ostringstream os;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << sep;
        os << vs[i];
    }
    return os.str();
}

std::string set_text(const VertexSet& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int v : s) {
        if (!first) os << ", ";
        os << v;
        first = false;
    }
    os << "}";
    return os.str();
}

int cmd_recognize(const std::string& input, const std::string& format) {
    const Graph g = load_graph(input);
    const RecognitionResult res = recognize_partial_two_tree(g);
    if (format == "json") {
        emit(recognition_json(res));
    } else if (res.accepted()) {
        std::cout << "series-parallel: yes\n";
        std::cout << "removal order: " << join_ints(*res.removal_order) << "\n";
    } else {
        std::cout << "series-parallel: no\n";
        for (const VertexSet& b : res.certificate->branch_sets)
            std::cout << "k4 branch set: " << set_text(b) << "\n";
    }
    return 0;
}

int cmd_embed(const std::string& input, const std::string& format) {
    const Graph g = load_graph(input);
    const TwoTreeEmbedding emb = complete_to_two_tree(g);
    if (format == "json") {
        emit(embedding_json(emb));
        return 0;
    }
    std::cout << "base edge: " << emb.base_edge.first << " " << emb.base_edge.second
              << "\n";
    std::cout << "elimination order: " << join_ints(emb.elimination_order) << "\n";
    const auto& edges = emb.host.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        std::cout << "host edge: " << edges[i].first << " " << edges[i].second
                  << (emb.real[i] ? " real" : " fill") << "\n";
    return 0;
}

int cmd_decompose(const std::string& input, const std::string& format) {
    const Graph g = load_graph(input);
    const TwoTreeEmbedding emb = complete_to_two_tree(g);
    const NiceTreeDecomposition ntd = make_nice(decomposition_from_embedding(emb));
    if (format == "json") {
        emit(nice_decomposition_json(ntd));
        return 0;
    }
    std::cout << "width: " << ntd.width() << "\n";
    std::cout << "nodes: " << ntd.nodes.size() << "\n";
    const json j = nice_decomposition_json(ntd);
    for (size_t i = 0; i < ntd.nodes.size(); ++i) {
        const json& node = j["nodes"][i];
        std::cout << i << ": " << node["kind"].get<std::string>() << " bag={"
                  << join_ints(node["bag"].get<std::vector<int>>(), ",") << "}";
        if (node.contains("vertex")) std::cout << " vertex=" << node["vertex"];
        std::cout << "\n";
    }
    return 0;
}

int cmd_lp(const std::string& input, const std::string& format, bool want_path,
           bool dump_tables) {
    const Graph g = load_graph(input);
    if (g.vertex_count() == 1) {
        if (format == "json") {
            json out = {{"L", 0}};
            if (want_path) out["path"] = std::vector<int>{0};
            emit(out);
        } else {
            std::cout << "L = 0\n";
            if (want_path) std::cout << "path: 0\n";
        }
        return 0;
    }
    const SpPipeline pipe = sp_pipeline(g);
    const int L = longest_path_length(pipe.dp);
    json out = {{"L", L}};
    std::vector<int> path_vertices;
    if (want_path) {
        if (L >= 1)
            path_vertices = extract_longest_path(pipe.dp, g).vertices;
        else
            path_vertices = {0};
        out["path"] = path_vertices;
    }
    if (dump_tables) out["tables"] = dp_tables_json(pipe.dp);
    if (format == "json") {
        emit(out);
        return 0;
    }
    std::cout << "L = " << L << "\n";
    if (want_path) std::cout << "path: " << join_ints(path_vertices) << "\n";
    if (dump_tables) std::cout << out["tables"].dump(2) << "\n";
    return 0;
}

int cmd_gallai(const std::string& input, const std::string& format,
               const std::string& algo, bool verify_theorem, int jobs, int cap) {
    const Graph g = load_graph(input);
    GallaiReport rep;
    if (algo == "naive")
        rep = gallai_naive(g, jobs);
    else if (algo == "fast")
        rep = gallai_fast(g);
    else
        rep = gallai_oracle(g, cap);
    if (format == "json")
        emit(report_json(rep));
    else
        std::cout << "n = " << rep.n << "\nm = " << rep.m << "\nL = " << rep.L
                  << "\ngallai = " << set_text(rep.gallai_vertices)
                  << "\nalgo = " << rep.algorithm << "\nmillis = " << rep.millis
                  << "\n";
    if (verify_theorem && rep.gallai_vertices.empty()) {
        std::cerr << "theorem check failed: no vertex lies on all longest paths\n";
        return 3;
    }
    return 0;
}

int cmd_trace(const std::string& input, const std::string& format, bool verify,
              int cap) {
    const Graph g = load_graph(input);
    const ProofTrace t = run_trace(g, cap);
    if (verify) verify_trace(g, t, cap);
    if (format == "json") {
        emit(trace_json(t));
        return 0;
    }
    for (const TraceStep& s : t.steps)
        std::cout << "[" << to_string(s.kind) << "] " << s.justification << "\n";
    std::cout << "final vertex: " << t.final_vertex << "\n";
    return 0;
}

int cmd_gen(const std::string& name, const std::string& family, int n,
            uint64_t seed, double density) {
    Graph g;
    if (!name.empty()) {
        g = named_graph(name);
    } else {
        GenSpec spec;
        spec.family = family_from_string(family);
        spec.n = n;
        spec.seed = seed;
        spec.density = density;
        g = generate(spec);
    }
    std::cout << serialize_edge_list(g);
    return 0;
}

// One generated instance checked from every side that applies at its size.
struct VerifyOutcome {
    bool ok = true;
    std::string detail;
};

VerifyOutcome verify_instance(const GenSpec& spec, int cap) {
    VerifyOutcome out;
    const Graph g = generate(spec);
    std::ostringstream why;
    try {
        const GallaiReport fast = gallai_fast(g);
        const GallaiReport naive = gallai_naive(g, 1);
        if (fast.L != naive.L || !(fast.gallai_vertices == naive.gallai_vertices)) {
            why << "naive/fast disagree: L " << naive.L << " vs " << fast.L
                << ", sets " << set_text(naive.gallai_vertices) << " vs "
                << set_text(fast.gallai_vertices) << "; ";
        } else if (fast.gallai_vertices.empty()) {
            why << "empty Gallai set; ";
        }
        if (g.vertex_count() <= cap) {
            const GallaiReport oracle = gallai_oracle(g, cap);
            if (oracle.L != fast.L)
                why << "oracle L " << oracle.L << " != dp L " << fast.L << "; ";
            if (!(oracle.gallai_vertices == fast.gallai_vertices))
                why << "oracle set " << set_text(oracle.gallai_vertices)
                    << " != fast set " << set_text(fast.gallai_vertices) << "; ";
            const ProofTrace t = run_trace(g, cap);
            verify_trace(g, t, cap);
            if (!oracle.gallai_vertices.contains(t.final_vertex))
                why << "trace final vertex " << t.final_vertex
                    << " not in oracle set; ";
        }
    } catch (const std::exception& e) {
        why << "exception: " << e.what() << "; ";
    }
    if (!why.str().empty()) {
        out.ok = false;
        out.detail = why.str();
    }
    return out;
}

int cmd_verify(int count, int max_n, uint64_t seed, const std::string& family,
               int jobs, int cap, const std::string& dump_file,
               const std::string& format) {
    const double densities[] = {0.1, 0.2, 0.3, 0.4, 0.5};
    std::vector<GenSpec> specs(count);
    for (int i = 0; i < count; ++i) {
        specs[i].family = family_from_string(family);
        specs[i].n = 1 + static_cast<int>((seed + i) % max_n);
        specs[i].seed = seed * 1000003 + static_cast<uint64_t>(i);
        specs[i].density = densities[i % 5];
    }
    std::vector<VerifyOutcome> outcomes(count);
    parallel_for(count, jobs,
                 [&](int i) { outcomes[i] = verify_instance(specs[i], cap); });

    int failures = 0;
    std::ostringstream dump;
    std::vector<int> per_n_total(max_n + 1, 0), per_n_pass(max_n + 1, 0);
    for (int i = 0; i < count; ++i) {
        ++per_n_total[specs[i].n];
        if (outcomes[i].ok) {
            ++per_n_pass[specs[i].n];
            continue;
        }
        ++failures;
        dump << "instance " << i << ": family=" << family_to_string(specs[i].family)
             << " n=" << specs[i].n << " seed=" << specs[i].seed
             << " density=" << specs[i].density << "\n";
        dump << "reason: " << outcomes[i].detail << "\n";
        dump << serialize_edge_list(generate(specs[i]));
        dump << "\n";
    }
    if (failures > 0) {
        std::ofstream df(dump_file);
        df << dump.str();
        std::cerr << failures << " instance(s) failed; reproducers written to "
                  << dump_file << "\n";
    }
    if (format == "json") {
        emit({{"count", count},
              {"family", family},
              {"failures", failures},
              {"ok", failures == 0}});
    } else {
        std::cout << "family " << family << ", " << count << " instances\n";
        std::cout << "  n  total  pass\n";
        for (int n = 1; n <= max_n; ++n)
            if (per_n_total[n] > 0)
                std::cout << "  " << n << "  " << per_n_total[n] << "  "
                          << per_n_pass[n] << "\n";
        std::cout << (failures == 0 ? "all checks passed\n"
                                    : "FAILURES: " + std::to_string(failures) + "\n");
    }
    return failures == 0 ? 0 : 3;
}

int cmd_bench(const std::string& sizes_arg, uint64_t seed, int naive_cap,
              int jobs) {
    std::vector<int> sizes;
    {
        std::stringstream ss(sizes_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            sizes.push_back(std::stoi(tok));
        }
    }
    if (sizes.empty()) throw std::invalid_argument("no sizes given");
    for (size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("sizes must be ascending");

    // Build the instances up front (parallel); timing itself runs
    // serialized so measurements never contend for cores.
    std::vector<Graph> graphs(sizes.size());
    parallel_for(static_cast<int>(sizes.size()), jobs, [&](int i) {
        GenSpec spec;
        spec.family = Family::series_parallel;
        spec.n = sizes[i];
        spec.seed = seed + static_cast<uint64_t>(i);
        spec.density = 0.3;
        graphs[i] = generate(spec);
    });

    gallai_fast(graphs[0]); // warms allocators and the shared tables

    std::vector<double> fast_ms(sizes.size(), -1.0), naive_ms(sizes.size(), -1.0);
    for (size_t i = 0; i < sizes.size(); ++i) {
        const int reps = sizes[i] <= 10000 ? 3 : 1;
        double best = -1.0;
        for (int r = 0; r < reps; ++r) {
            const double ms = gallai_fast(graphs[i]).millis;
            if (best < 0 || ms < best) best = ms;
        }
        fast_ms[i] = best;
        if (sizes[i] <= naive_cap) {
            best = -1.0;
            for (int r = 0; r < reps; ++r) {
                const double ms = gallai_naive(graphs[i], 1).millis;
                if (best < 0 || ms < best) best = ms;
            }
            naive_ms[i] = best;
        }
    }

    std::cout << "size,millis_naive,millis_fast\n";
    for (size_t i = 0; i < sizes.size(); ++i) {
        std::cout << sizes[i] << ",";
        if (naive_ms[i] >= 0) std::cout << naive_ms[i];
        std::cout << "," << fast_ms[i] << "\n";
    }

    // Near-linear growth gate, applied across exact decade steps.
    for (size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] != 10 * sizes[i - 1]) continue;
        const double lo = std::max(fast_ms[i - 1], 0.01);
        const double ratio = fast_ms[i] / lo;
        if (ratio > 15.0) {
            std::cerr << "fast growth ratio " << ratio << " over decade "
                      << sizes[i - 1] << " -> " << sizes[i] << " exceeds 15\n";
            return 3;
        }
    }
    return 0;
}

struct OracleArgs {
    std::string input = "-";
    int cap = 14;
    bool dump_paths = false;
    int u = 0, v = 0, w = 0, p = 2;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest paths and Gallai vertices of series-parallel graphs"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::function<int()> action;

    // recognize
    {
        auto* sub = app.add_subcommand("recognize",
                                       "test whether the input is series-parallel");
        auto input = std::make_shared<std::string>("-");
        sub->add_option("input", *input, "edge-list file, or - for stdin");
        sub->callback([&, input] {
            action = [&, input] { return cmd_recognize(*input, format); };
        });
    }
    // embed
    {
        auto* sub = app.add_subcommand("embed", "complete the input to a 2-tree");
        auto input = std::make_shared<std::string>("-");
        sub->add_option("input", *input, "edge-list file, or - for stdin");
        sub->callback([&, input] {
            action = [&, input] { return cmd_embed(*input, format); };
        });
    }
    // decompose
    {
        auto* sub = app.add_subcommand("decompose",
                                       "emit a nice width-2 tree decomposition");
        auto input = std::make_shared<std::string>("-");
        sub->add_option("input", *input, "edge-list file, or - for stdin");
        sub->callback([&, input] {
            action = [&, input] { return cmd_decompose(*input, format); };
        });
    }
    // lp
    {
        auto* sub = app.add_subcommand("lp", "longest-path length via the DP");
        auto input = std::make_shared<std::string>("-");
        auto want_path = std::make_shared<bool>(false);
        auto dump_tables = std::make_shared<bool>(false);
        sub->add_option("input", *input, "edge-list file, or - for stdin");
        sub->add_flag("--path", *want_path, "also print one longest path");
        sub->add_flag("--dump-tables", *dump_tables,
                      "emit per-node configuration counts");
        sub->callback([&, input, want_path, dump_tables] {
            action = [&, input, want_path, dump_tables] {
                return cmd_lp(*input, format, *want_path, *dump_tables);
            };
        });
    }
    // gallai
    {
        auto* sub = app.add_subcommand("gallai", "vertices on every longest path");
        auto input = std::make_shared<std::string>("-");
        auto algo = std::make_shared<std::string>("fast");
        auto verify_theorem = std::make_shared<bool>(false);
        auto jobs = std::make_shared<int>(0);
        auto cap = std::make_shared<int>(14);
        sub->add_option("input", *input, "edge-list file, or - for stdin");
        sub->add_option("--algo", *algo, "algorithm")
            ->check(CLI::IsMember({"naive", "fast", "oracle"}));
        sub->add_flag("--verify-theorem", *verify_theorem,
                      "exit 3 when no common vertex exists");
        sub->add_option("--jobs", *jobs, "worker threads for naive");
        sub->add_option("--cap", *cap, "oracle size cap");
        sub->callback([&, input, algo, verify_theorem, jobs, cap] {
            action = [&, input, algo, verify_theorem, jobs, cap] {
                return cmd_gallai(*input, format, *algo, *verify_theorem, *jobs,
                                  *cap);
            };
        });
    }
    // oracle
    {
        auto* sub = app.add_subcommand("oracle", "exhaustive reference queries");
        sub->require_subcommand(1);
        auto args = std::make_shared<OracleArgs>();

        auto* lp = sub->add_subcommand("longest-paths", "enumerate all longest paths");
        lp->add_option("input", args->input, "edge-list file, or - for stdin");
        lp->add_option("--cap", args->cap, "size cap");
        lp->add_flag("--dump-paths", args->dump_paths, "include the full path list");
        lp->callback([&, args] {
            action = [&, args] {
                const Graph g = load_graph(args->input);
                const LongestPathSet lps = enumerate_longest_paths(g, args->cap);
                if (format == "json") {
                    emit(longest_paths_json(lps, args->dump_paths));
                } else {
                    std::cout << "L = " << lps.length
                              << "\ncount = " << lps.paths.size() << "\n";
                    if (args->dump_paths)
                        for (const Path& p : lps.paths)
                            std::cout << "path: " << join_ints(p.vertices) << "\n";
                }
                return 0;
            };
        });

        auto* gal = sub->add_subcommand("gallai", "brute-force Gallai set");
        gal->add_option("input", args->input, "edge-list file, or - for stdin");
        gal->add_option("--cap", args->cap, "size cap");
        gal->callback([&, args] {
            action = [&, args] {
                return cmd_gallai(args->input, format, "oracle", false, 0,
                                  args->cap);
            };
        });

        auto* cls = sub->add_subcommand("classify",
                                        "membership patterns of three vertices");
        cls->add_option("input", args->input, "edge-list file, or - for stdin");
        cls->add_option("--cap", args->cap, "size cap");
        cls->add_option("--u", args->u, "first vertex")->required();
        cls->add_option("--v", args->v, "second vertex")->required();
        cls->add_option("--w", args->w, "third vertex")->required();
        cls->callback([&, args] {
            action = [&, args] {
                const Graph g = load_graph(args->input);
                const LongestPathSet lps = enumerate_longest_paths(g, args->cap);
                const LPClassification c =
                    classify_longest_paths(lps, args->u, args->v, args->w);
                const json out = {{"with_uv", c.with_uv},
                                  {"with_u_not_v", c.with_u_not_v},
                                  {"with_uvw", c.with_uvw},
                                  {"with_uv_not_w", c.with_uv_not_w},
                                  {"with_u_only", c.with_u_only},
                                  {"v_between_uw", c.v_between_uw}};
                if (format == "json") {
                    emit(out);
                } else {
                    for (const auto& [key, val] : out.items())
                        std::cout << key << ": " << val.size() << " paths\n";
                }
                return 0;
            };
        });

        auto* pw = sub->add_subcommand("pairwise",
                                       "do all longest-path pairs intersect?");
        pw->add_option("input", args->input, "edge-list file, or - for stdin");
        pw->add_option("--cap", args->cap, "size cap");
        pw->callback([&, args] {
            action = [&, args] {
                const Graph g = load_graph(args->input);
                const bool ok = pairwise_intersection_holds(g, args->cap);
                if (format == "json")
                    emit({{"pairwise_intersection", ok}});
                else
                    std::cout << "pairwise intersection: " << (ok ? "yes" : "no")
                              << "\n";
                return 0;
            };
        });

        auto* pwise = sub->add_subcommand("pwise",
                                          "do all p-tuples share a vertex?");
        pwise->add_option("input", args->input, "edge-list file, or - for stdin");
        pwise->add_option("--cap", args->cap, "size cap");
        pwise->add_option("--p", args->p, "tuple size")->required();
        pwise->callback([&, args] {
            action = [&, args] {
                const Graph g = load_graph(args->input);
                const bool ok = p_wise_common_vertex(g, args->p, args->cap);
                if (format == "json")
                    emit({{"p", args->p}, {"common_vertex", ok}});
                else
                    std::cout << args->p << "-wise common vertex: "
                              << (ok ? "yes" : "no") << "\n";
                return 0;
            };
        });

        auto* hc = sub->add_subcommand("ham-cycle", "Hamiltonian cycle test");
        hc->add_option("input", args->input, "edge-list file, or - for stdin");
        hc->callback([&, args] {
            action = [&, args] {
                const Graph g = load_graph(args->input);
                const bool ok = hamiltonian_cycle_exists(g);
                if (format == "json")
                    emit({{"hamiltonian_cycle", ok}});
                else
                    std::cout << "hamiltonian cycle: " << (ok ? "yes" : "no") << "\n";
                return 0;
            };
        });

        auto* hp = sub->add_subcommand("ham-path", "Hamiltonian path test");
        hp->add_option("input", args->input, "edge-list file, or - for stdin");
        hp->callback([&, args] {
            action = [&, args] {
                const Graph g = load_graph(args->input);
                const bool ok = hamiltonian_path_exists(g);
                if (format == "json")
                    emit({{"hamiltonian_path", ok}});
                else
                    std::cout << "hamiltonian path: " << (ok ? "yes" : "no") << "\n";
                return 0;
            };
        });

        auto* tw = sub->add_subcommand("treewidth", "exact treewidth (n <= 16)");
        tw->add_option("input", args->input, "edge-list file, or - for stdin");
        tw->callback([&, args] {
            action = [&, args] {
                const Graph g = load_graph(args->input);
                const int k = exact_treewidth(g);
                if (format == "json")
                    emit({{"treewidth", k}});
                else
                    std::cout << "treewidth: " << k << "\n";
                return 0;
            };
        });
    }
    // trace
    {
        auto* sub = app.add_subcommand("trace",
                                       "derive a common vertex with certificates");
        auto input = std::make_shared<std::string>("-");
        auto verify = std::make_shared<bool>(false);
        auto cap = std::make_shared<int>(14);
        sub->add_option("input", *input, "edge-list file, or - for stdin");
        sub->add_flag("--verify", *verify, "re-check every step");
        sub->add_option("--cap", *cap, "longest-path enumeration cap");
        sub->callback([&, input, verify, cap] {
            action = [&, input, verify, cap] {
                return cmd_trace(*input, format, *verify, *cap);
            };
        });
    }
    // gen
    {
        auto* sub = app.add_subcommand("gen", "emit a generated graph");
        auto name = std::make_shared<std::string>();
        auto family = std::make_shared<std::string>("series_parallel");
        auto n = std::make_shared<int>(1);
        auto seed = std::make_shared<uint64_t>(0);
        auto density = std::make_shared<double>(0.3);
        auto* name_opt = sub->add_option("--name", *name, "named graph tag");
        auto* family_opt = sub->add_option("--family", *family, "graph family");
        sub->add_option("--n", *n, "vertex count");
        sub->add_option("--seed", *seed, "generator seed");
        sub->add_option("--density", *density, "density knob");
        name_opt->excludes(family_opt);
        sub->callback([&, name, family, n, seed, density] {
            action = [&, name, family, n, seed, density] {
                return cmd_gen(*name, *family, *n, *seed, *density);
            };
        });
    }
    // verify
    {
        auto* sub = app.add_subcommand("verify",
                                       "batch-check the algorithms on random graphs");
        auto count = std::make_shared<int>(500);
        auto max_n = std::make_shared<int>(12);
        auto seed = std::make_shared<uint64_t>(1);
        auto family = std::make_shared<std::string>("series_parallel");
        auto jobs = std::make_shared<int>(0);
        auto cap = std::make_shared<int>(14);
        auto dump_file = std::make_shared<std::string>("verify_failures.txt");
        sub->add_option("--count", *count, "instances to generate");
        sub->add_option("--max-n", *max_n, "largest vertex count");
        sub->add_option("--seed", *seed, "base seed");
        sub->add_option("--family", *family, "graph family");
        sub->add_option("--jobs", *jobs, "worker threads");
        sub->add_option("--cap", *cap, "oracle size cap");
        sub->add_option("--dump-file", *dump_file, "reproducer output path");
        sub->callback([&, count, max_n, seed, family, jobs, cap, dump_file] {
            action = [&, count, max_n, seed, family, jobs, cap, dump_file] {
                return cmd_verify(*count, *max_n, *seed, *family, *jobs, *cap,
                                  *dump_file, format);
            };
        });
    }
    // bench
    {
        auto* sub = app.add_subcommand("bench", "time the two Gallai algorithms");
        auto sizes = std::make_shared<std::string>("1000,10000,100000");
        auto seed = std::make_shared<uint64_t>(1);
        auto naive_cap = std::make_shared<int>(1000);
        auto jobs = std::make_shared<int>(0);
        sub->add_option("--sizes", *sizes, "comma-separated ascending sizes");
        sub->add_option("--seed", *seed, "generator seed");
        sub->add_option("--naive-cap", *naive_cap,
                        "largest size the naive algorithm is timed at");
        sub->add_option("--jobs", *jobs, "threads for instance generation");
        sub->callback([&, sizes, seed, naive_cap, jobs] {
            action = [&, sizes, seed, naive_cap, jobs] {
                return cmd_bench(*sizes, *seed, *naive_cap, *jobs);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
