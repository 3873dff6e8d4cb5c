// Command-line front end: evaluate partition functions, recover polynomials,
// inspect decomposition trees, cross-check against the brute-force oracle,
// generate random instances, and benchmark scaling.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <sptutte/sptutte.hpp>

namespace {

using namespace sptutte;

// Exit codes (also listed in --help and the README):
//   0 success, 2 input/parse error, 3 not series-parallel, 4 singular point,
//   5 enumeration cap exceeded, 6 interpolation failure, 7 oracle mismatch,
//   8 disconnected input where a connected graph is required.
constexpr int kExitParse = 2;
constexpr int kExitNotSp = 3;
constexpr int kExitSingular = 4;
constexpr int kExitTooLarge = 5;
constexpr int kExitInterpolation = 6;
constexpr int kExitMismatch = 7;
constexpr int kExitDisconnected = 8;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WeightedMultigraph load_graph(const std::string& path) { return parse_graph(read_input(path)); }

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(Rational::from_string(item));
    }
    if (out.empty()) throw ParseError("empty list: \"" + text + "\"");
    return out;
}

std::vector<long long> parse_size_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const long long v = std::stoll(item, &used);
        if (used != item.size() || v < 1) throw ParseError("bad size: \"" + item + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty size list");
    return out;
}

double seconds_between(std::chrono::steady_clock::time_point a,
                       std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

struct EvalFlags {
    std::string graph_file;
    std::string q_text;
    std::string v_all;
    bool reduce_pendants = false;
    bool strict = false;
};

int cmd_eval(const EvalFlags& f) {
    EvalRequest req{load_graph(f.graph_file), Rational::from_string(f.q_text),
                    f.v_all.empty() ? std::optional<Rational>()
                                    : std::optional<Rational>(Rational::from_string(f.v_all)),
                    f.reduce_pendants};
    Rational z;
    try {
        z = evaluate(req);
    } catch (const SingularPoint& e) {
        if (f.strict) throw;
        // The polynomial in q is defined everywhere even though the reduction
        // has a pole here; recover the value through interpolation.
        std::cerr << "note: " << e.what() << "; value recovered by interpolation\n";
        z = partition_polynomial(req.graph, req.reduce_pendants, req.weight_override).at(req.q);
    }
    std::cout << z << "\n";
    return 0;
}

struct PolyFlags {
    std::string graph_file;
    bool chromatic = false;
    bool reduce_pendants = false;
    std::string v_all;
};

int cmd_poly(const PolyFlags& f) {
    const WeightedMultigraph g = load_graph(f.graph_file);
    std::optional<Rational> override_value;
    if (f.chromatic) {
        override_value = Rational(-1);
    } else if (!f.v_all.empty()) {
        override_value = Rational::from_string(f.v_all);
    }
    const PolyQ poly = partition_polynomial(g, f.reduce_pendants, override_value);
    std::cout << poly.pretty() << "\n";
    std::cout << "#data coefficients";
    for (int i = 0; i <= std::max(poly.degree(), 0); ++i) {
        std::cout << " " << poly.coefficient(static_cast<std::size_t>(i));
    }
    std::cout << "\n";
    return 0;
}

int cmd_tree(const std::string& graph_file) {
    const WeightedMultigraph g = load_graph(graph_file);
    const SpTree t = build_sp_tree(g);
    std::cout << tree_to_text(t);
    return 0;
}

int cmd_check(const std::string& graph_file, const std::string& q_list) {
    const WeightedMultigraph g = load_graph(graph_file);
    const std::vector<Rational> qs = parse_rational_list(q_list);
    const std::vector<Rational> sums = subset_weight_sums(g); // enforces the edge cap

    int mismatches = 0;
    for (const Rational& q : qs) {
        Rational oracle(0);
        Rational qk(1);
        for (std::size_t k = 1; k < sums.size(); ++k) {
            qk *= q;
            oracle += qk * sums[k];
        }
        try {
            const Rational z = evaluate(EvalRequest{g, q, std::nullopt, false});
            const bool ok = (z == oracle);
            std::cout << "q=" << q << " sp=" << z << " oracle=" << oracle
                      << (ok ? " MATCH" : " MISMATCH") << "\n";
            if (!ok) ++mismatches;
        } catch (const SingularPoint&) {
            std::cout << "q=" << q << " SKIP(singular)\n";
        }
    }
    return mismatches == 0 ? 0 : kExitMismatch;
}

struct GenFlags {
    int ops = 0;
    std::uint64_t seed = 0;
    std::string weight_min = "1/100000";
    std::string weight_max = "1/20";
    std::string series_bias = "1/2";
};

int cmd_gen(const GenFlags& f) {
    GeneratorSpec spec;
    spec.composition_ops = f.ops;
    spec.seed = f.seed;
    spec.weight_min = Rational::from_string(f.weight_min);
    spec.weight_max = Rational::from_string(f.weight_max);
    spec.series_bias = Rational::from_string(f.series_bias);
    std::cout << serialize_graph(random_sp_graph(spec));
    return 0;
}

struct BenchFlags {
    std::string sizes;
    std::string mode = "float";
    std::string q_text = "3";
    std::uint64_t seed = 1;
    std::string csv_path;
    int repeat = 1;
    bool direct = false;
    bool sweep_q = false;
};

struct BenchRow {
    long long edges;
    int vertices;
    std::string mode;
    std::string q;
    std::uint64_t seed;
    double seconds;
};

std::string seconds_text(double s) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(9);
    os << s;
    return os.str();
}

std::string csv_line(const BenchRow& r) {
    std::ostringstream os;
    os << r.edges << "," << r.vertices << "," << r.mode << "," << r.q << "," << r.seed << ","
       << seconds_text(r.seconds);
    return os.str();
}

int cmd_bench(const BenchFlags& f) {
    const std::vector<long long> sizes = parse_size_list(f.sizes);
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw ParseError("sizes must be ascending");
    }
    if (f.mode != "exact" && f.mode != "float") throw ParseError("mode must be exact or float");
    if (f.repeat < 1) throw ParseError("repeat must be >= 1");
    const bool exact = (f.mode == "exact");
    if (exact && sizes.back() > 10000) {
        throw ParseError("exact mode is limited to 10000 edges; use --mode float for larger sizes");
    }
    std::vector<std::pair<std::string, Rational>> q_points;
    if (f.sweep_q) {
        for (long long k = 1; k <= 40; ++k) q_points.emplace_back(std::to_string(k), Rational(k));
    } else {
        const Rational q = Rational::from_string(f.q_text);
        if (q.is_zero()) throw ParseError("benchmark q must be nonzero");
        q_points.emplace_back(f.q_text, q);
    }

    std::vector<BenchRow> rows;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const long long edges = sizes[i];
        GeneratorSpec spec;
        spec.composition_ops = static_cast<int>(edges - 1);
        spec.seed = f.seed + i; // one independent instance per size
        const WeightedMultigraph g = random_sp_graph(spec);

        std::vector<Rational> exact_weights;
        std::vector<ScaledDouble> float_weights;
        if (exact) {
            exact_weights.reserve(g.edge_count());
            for (const EdgeRecord& e : g.edges()) exact_weights.push_back(e.weight);
        } else {
            float_weights.reserve(g.edge_count());
            for (const EdgeRecord& e : g.edges()) float_weights.push_back(to_scaled(e.weight));
        }

        for (const auto& [q_text, q] : q_points) {
            std::vector<double> times;
            times.reserve(static_cast<std::size_t>(f.repeat));
            double direct_seconds = -1.0;

            if (exact) {
                for (int r = 0; r < f.repeat; ++r) {
                    const auto t0 = std::chrono::steady_clock::now();
                    const auto prep = PreparedEvaluation<Rational>::prepare(g, exact_weights, false);
                    volatile int sink = prep.at(q).sign();
                    (void)sink;
                    const auto t1 = std::chrono::steady_clock::now();
                    times.push_back(seconds_between(t0, t1));
                }
                if (f.direct && edges <= 20) {
                    const auto t0 = std::chrono::steady_clock::now();
                    volatile int sink = brute_force_z(g, q).sign();
                    (void)sink;
                    const auto t1 = std::chrono::steady_clock::now();
                    direct_seconds = seconds_between(t0, t1);
                }
            } else {
                const ScaledDouble qf = to_scaled(q);
                for (int r = 0; r < f.repeat; ++r) {
                    const auto t0 = std::chrono::steady_clock::now();
                    const auto prep =
                        PreparedEvaluation<ScaledDouble>::prepare(g, float_weights, false);
                    volatile double sink = prep.at(qf).mantissa();
                    (void)sink;
                    const auto t1 = std::chrono::steady_clock::now();
                    times.push_back(seconds_between(t0, t1));
                }
                if (f.direct && edges <= 20) {
                    const auto t0 = std::chrono::steady_clock::now();
                    volatile double sink =
                        brute_force_with<ScaledDouble>(g, float_weights, qf).mantissa();
                    (void)sink;
                    const auto t1 = std::chrono::steady_clock::now();
                    direct_seconds = seconds_between(t0, t1);
                }
            }

            const double sp_seconds = median(times);
            rows.push_back(BenchRow{edges, g.vertex_count(), f.mode, q_text, spec.seed, sp_seconds});
            std::cout << "edges=" << edges << " vertices=" << g.vertex_count() << " mode=" << f.mode
                      << " q=" << q_text << " wall_time_seconds=" << seconds_text(sp_seconds) << "\n";
            std::cout << "#data csv " << csv_line(rows.back()) << "\n";

            if (direct_seconds >= 0.0) {
                BenchRow direct_row{edges, g.vertex_count(), "direct", q_text, spec.seed,
                                    direct_seconds};
                rows.push_back(direct_row);
                std::cout << "#data csv " << csv_line(direct_row) << "\n";
                std::cout << "#data direct_ratio " << edges << " "
                          << (direct_seconds / sp_seconds) << "\n";
            } else if (f.direct && edges > 20) {
                std::cerr << "note: --direct skipped at " << edges << " edges (cap is 20)\n";
            }
        }
    }

    if (!f.csv_path.empty()) {
        std::ofstream out(f.csv_path);
        if (!out) throw ParseError("cannot open csv file: " + f.csv_path);
        out << "edges,vertices,mode,q,seed,wall_time_seconds\n";
        for (const BenchRow& r : rows) out << csv_line(r) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Potts partition function / multivariate Tutte polynomial "
                 "on series-parallel graphs"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok, 2 input error, 3 not series-parallel, 4 singular point,\n"
               "5 enumeration cap exceeded, 6 interpolation failure, 7 oracle mismatch,\n"
               "8 disconnected input. Graph files are JSON: "
               "{\"vertices\": n, \"edges\": [{\"u\":0,\"v\":1,\"w\":\"1/2\"}]}.\n"
               "Pass '-' as a graph file to read from stdin.");

    int rc = 0;

    EvalFlags ef;
    auto* eval = app.add_subcommand("eval", "Evaluate the partition function at one q");
    eval->add_option("graph", ef.graph_file, "graph document file")->required();
    eval->add_option("-q,--q", ef.q_text, "evaluation point (exact rational)")->required();
    eval->add_option("--v-all", ef.v_all, "override every edge weight (e.g. -1 for coloring)");
    eval->add_flag("--reduce-pendants", ef.reduce_pendants,
                   "strip degree-1 vertices, each contributing a factor (q + v)");
    eval->add_flag("--strict", ef.strict,
                   "fail at singular q instead of recovering through interpolation");
    eval->callback([&] { rc = cmd_eval(ef); });

    PolyFlags pf;
    auto* poly = app.add_subcommand("poly", "Recover the partition function as a polynomial in q");
    poly->add_option("graph", pf.graph_file, "graph document file")->required();
    poly->add_flag("--chromatic", pf.chromatic, "set all weights to -1 (chromatic polynomial)");
    poly->add_option("--v-all", pf.v_all, "override every edge weight");
    poly->add_flag("--reduce-pendants", pf.reduce_pendants, "strip degree-1 vertices");
    poly->callback([&] { rc = cmd_poly(pf); });

    PolyFlags cf;
    cf.chromatic = true;
    auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial (poly --chromatic)");
    chromatic->add_option("graph", cf.graph_file, "graph document file")->required();
    chromatic->add_flag("--reduce-pendants", cf.reduce_pendants, "strip degree-1 vertices");
    chromatic->callback([&] { rc = cmd_poly(cf); });

    std::string tree_file;
    auto* tree = app.add_subcommand("tree", "Print the decomposition tree");
    tree->add_option("graph", tree_file, "graph document file")->required();
    tree->callback([&] { rc = cmd_tree(tree_file); });

    std::string check_file;
    std::string check_qs;
    auto* check = app.add_subcommand("check", "Cross-check against the brute-force oracle");
    check->add_option("graph", check_file, "graph document file")->required();
    check->add_option("-q,--q", check_qs, "comma-separated q values")->required();
    check->callback([&] { rc = cmd_check(check_file, check_qs); });

    GenFlags gf;
    auto* gen = app.add_subcommand("gen", "Generate a seeded random series-parallel graph");
    gen->add_option("--ops", gf.ops, "number of series/parallel compositions (edges - 1)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", gf.seed, "generator seed (default 0)");
    gen->add_option("--weight-min", gf.weight_min, "minimum edge weight (default 1/100000)");
    gen->add_option("--weight-max", gf.weight_max, "maximum edge weight (default 1/20)");
    gen->add_option("--series-bias", gf.series_bias,
                    "probability a composition is series (default 1/2)");
    gen->callback([&] { rc = cmd_gen(gf); });

    BenchFlags bf;
    auto* bench = app.add_subcommand("bench", "Time evaluation across instance sizes");
    bench->add_option("--sizes", bf.sizes, "comma-separated ascending edge counts")->required();
    bench->add_option("--mode", bf.mode, "exact or float (default float)");
    bench->add_option("-q,--q", bf.q_text, "evaluation point (default 3)");
    bench->add_option("--seed", bf.seed, "base seed (default 1)");
    bench->add_option("--csv", bf.csv_path, "write records to this CSV file");
    bench->add_option("--repeat", bf.repeat, "repetitions per size, median reported (default 1)");
    bench->add_flag("--direct", bf.direct,
                    "also time the direct subset-sum computation at sizes <= 20 edges");
    bench->add_flag("--sweep-q", bf.sweep_q, "time every integer q in [1, 40] instead of -q");
    bench->callback([&] { rc = cmd_bench(bf); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotSeriesParallel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotSp;
    } catch (const SingularPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingular;
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const InterpolationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInterpolation;
    } catch (const Disconnected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisconnected;
    } catch (const InvalidQ& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ArithmeticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
