#include "cli.hpp"

#include "tww/boolean_width.hpp"
#include "tww/bridge.hpp"
#include "tww/builders.hpp"
#include "tww/coloring.hpp"
#include "tww/errors.hpp"
#include "tww/generators.hpp"
#include "tww/io.hpp"
#include "tww/matrix.hpp"
#include "tww/widths.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace tww::cli {

namespace {

template <typename T, typename Parse>
T load(const std::string& path, Parse parse)
{
    try {
        return parse(io::read_file(path));
    } catch (const ParseError& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

Graph load_graph(const std::string& path)
{
    return load<Graph>(path, [](const std::string& t) { return io::parse_graph(t); });
}

// Every sequence is replayed against its graph before anything else sees it.
ContractionSequence load_sequence(const std::string& path, const Graph& g)
{
    auto s = load<ContractionSequence>(path, [](const std::string& t) { return io::parse_sequence(t); });
    validate_sequence(g, s);
    return s;
}

BranchDecomposition load_decomposition(const std::string& path, const Graph& g)
{
    auto t = load<BranchDecomposition>(path, [](const std::string& x) { return io::parse_decomposition(x); });
    if (t.n() != g.n())
        throw InvalidInput(path + ": decomposition has " + std::to_string(t.n()) + " leaves, graph has " +
                           std::to_string(g.n()) + " vertices");
    return t;
}

Matrix load_matrix(const std::string& path)
{
    return load<Matrix>(path, [](const std::string& t) { return io::parse_matrix(t); });
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InvalidInput("cannot write '" + path + "'");
    f << text;
}

int component_width(const Graph& g, const ContractionSequence& s)
{
    return sequence_width(g, s, Measure::component);
}

// "1 2|3 4" -> {{0,1},{2,3}}; empty text gives singletons.
std::vector<std::vector<int>> parse_parts(const std::string& text, int size)
{
    std::vector<std::vector<int>> parts;
    if (text.empty()) {
        for (int i = 0; i < size; ++i)
            parts.push_back({i});
        return parts;
    }
    std::stringstream all(text);
    std::string chunk;
    while (std::getline(all, chunk, '|')) {
        std::replace(chunk.begin(), chunk.end(), ',', ' ');
        std::istringstream in(chunk);
        std::vector<int> part;
        std::string tok;
        while (in >> tok) {
            int v = 0;
            try {
                v = std::stoi(tok);
            } catch (const std::exception&) {
                throw InvalidInput("bad index '" + tok + "'");
            }
            part.push_back(v - 1);
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

// "a:b" (1-based, inclusive) -> half-open range; empty means everything.
Range parse_range(const std::string& text, int size)
{
    if (text.empty())
        return {0, size};
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidInput("range '" + text + "' must look like a:b");
    int a = 0, b = 0;
    try {
        a = std::stoi(text.substr(0, colon));
        b = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw InvalidInput("range '" + text + "' must look like a:b");
    }
    if (a < 1 || b < a || b > size)
        throw InvalidInput("range '" + text + "' is outside 1.." + std::to_string(size));
    return {a - 1, b};
}

std::vector<int> parse_cuts(const std::string& text)
{
    std::vector<int> cuts;
    for (const auto& part : parse_parts(text, 0))
        for (int c : part)
            cuts.push_back(c);
    return cuts;
}


} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Contraction sequences, twin-width measures and related widths"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "tww 1.0");

    std::string graph_path, seq_path, in_path, out_path, matrix_path;
    std::string measure_name = "degree";
    Measure measure = Measure::degree;
    int d = -1;
    std::function<int()> action;

    auto add_measure = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--measure,-m", measure_name, "oriented, degree, component or total")
                        ->check(CLI::IsMember({"oriented", "degree", "component", "total"}));
        if (required)
            opt->required();
    };
    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph,-g", graph_path, "graph file")->required()->check(CLI::ExistingFile);
    };
    auto add_seq = [&](CLI::App* sub) {
        sub->add_option("--seq,-s", seq_path, "sequence file")->required()->check(CLI::ExistingFile);
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out,-o", out_path, "write the result here instead of stdout"); };

    // width
    auto* width = app.add_subcommand("width", "print the width of a sequence");
    add_measure(width, true);
    add_graph(width);
    add_seq(width);
    width->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto s = load_sequence(seq_path, g);
            out << sequence_width(g, s, measure) << '\n';
            return success;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "check that a sequence stays within width d");
    add_measure(verify, true);
    add_graph(verify);
    add_seq(verify);
    verify->add_option("--d,-d", d, "width bound")->required()->check(CLI::NonNegativeNumber);
    verify->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto s = load_sequence(seq_path, g);
            auto r = verify_d_sequence(g, s, d, measure);
            if (r.ok()) {
                out << "ok " << to_string(measure) << " width " << sequence_width(g, s, measure) << " <= " << d << '\n';
                return success;
            }
            const auto& v = *r.violation;
            out << "violation at step " << v.step;
            if (v.step > 0)
                out << " (c " << s.step(v.step).u << ' ' << s.step(v.step).v << ')';
            out << ": " << to_string(measure) << " width " << v.value << " > " << d << "; parts";
            for (int p : v.parts)
                out << ' ' << p;
            out << '\n';
            return verification_failed;
        };
    });

    // exact
    std::int64_t budget = 50'000'000;
    auto* exact = app.add_subcommand("exact", "exhaustive minimum width of a small graph");
    add_measure(exact, true);
    add_graph(exact);
    add_out(exact);
    exact->add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);
    exact->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto r = exact_width(g, measure, budget);
            out << r.achieved_width << '\n';
            emit(io::serialize(r.sequence), out_path, out);
            if (!r.exact) {
                err << "budget exhausted after " << r.nodes_explored << " nodes: width is between " << r.lower_bound
                    << " and " << r.achieved_width << '\n';
                return cap_exceeded;
            }
            return success;
        };
    });

    // build
    std::string strategy, pair_rule = "twins-or-adjacent";
    int delta = -1;
    auto* build = app.add_subcommand("build", "construct a sequence heuristically");
    build->add_option("--strategy", strategy, "greedy, contractible or partial")
        ->required()
        ->check(CLI::IsMember({"greedy", "contractible", "partial"}));
    add_graph(build);
    add_measure(build, false);
    add_out(build);
    build->add_option("--d,-d", d, "degree bound (contractible, partial)")->check(CLI::NonNegativeNumber);
    build->add_option("--delta", delta, "target total degree (partial)")->check(CLI::NonNegativeNumber);
    build->add_option("--pairs", pair_rule, "admissible pairs for contractible")
        ->check(CLI::IsMember({"twins-or-adjacent", "any"}));
    build->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            BuildReport r;
            if (strategy == "greedy") {
                r = greedy_sequence(g, measure);
            } else {
                if (d < 0)
                    throw InvalidInput("--d is required for " + strategy);
                if (strategy == "contractible") {
                    r = contractible_sequence(g, d, pair_rule == "any" ? pairs::any_pair() : pairs::twins_or_adjacent());
                } else {
                    if (delta < 0)
                        throw InvalidInput("--delta is required for partial");
                    r = partial_sequence_to_degree(g, d, delta);
                }
            }
            std::ostringstream text;
            text << "# strategy " << strategy << '\n'
                 << "# outcome " << to_string(r.outcome) << '\n'
                 << "# " << to_string(r.measure) << " width " << r.achieved_width << '\n';
            if (r.outcome == BuildOutcome::stuck)
                text << "# stuck at step " << r.sequence.size() + 1 << ", smallest merged degree " << r.stuck_degree
                     << '\n';
            text << io::serialize(r.sequence);
            emit(text.str(), out_path, out);
            return r.outcome == BuildOutcome::stuck ? verification_failed : success;
        };
    });

    // convert
    std::string direction;
    auto* convert = app.add_subcommand("convert", "translate between decompositions and sequences");
    convert->add_option("direction", direction, "bd2seq, seq2bd, lbd2seq or seq2lbd")
        ->required()
        ->check(CLI::IsMember({"bd2seq", "seq2bd", "lbd2seq", "seq2lbd"}));
    add_graph(convert);
    convert->add_option("--in,-i", in_path, "decomposition or sequence file")->required()->check(CLI::ExistingFile);
    convert->add_option("--d,-d", d, "boolean-width bound for bd2seq/lbd2seq (default: smallest that holds)")
        ->check(CLI::NonNegativeNumber);
    add_out(convert);
    convert->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            if (direction == "seq2bd" || direction == "seq2lbd") {
                auto s = load_sequence(in_path, g);
                auto t = direction == "seq2bd" ? sequence_to_bd(g, s) : sequence_to_linear_bd(g, s);
                emit(io::serialize(t), out_path, out);
                return success;
            }
            auto t = load_decomposition(in_path, g);
            int bound = d;
            if (bound < 0) {
                bound = 0;
                while (!bd_boolean_width_at_most(g, t, bound))
                    ++bound;
            }
            auto s = direction == "bd2seq" ? bd_to_sequence(g, t, bound) : linear_bd_to_sequence(g, t, bound);
            emit(io::serialize(s), out_path, out);
            return success;
        };
    });

    // color
    int q = 0;
    bool extract = false;
    auto* color = app.add_subcommand("color", "decide q-colorability along a sequence");
    color->add_option("--q,-q", q, "number of colors")->required()->check(CLI::Range(0, max_colors));
    color->add_option("--d,-d", d, "component width of the sequence (default: measured)")
        ->check(CLI::NonNegativeNumber);
    add_graph(color);
    add_seq(color);
    color->add_flag("--extract", extract, "print a coloring as lines 'v <id> <color>'");
    color->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto s = load_sequence(seq_path, g);
            int bound = d < 0 ? component_width(g, s) : d;
            if (!extract) {
                out << (q_coloring(g, s, q, bound) ? "YES" : "NO") << '\n';
                return success;
            }
            auto c = q_coloring_extract(g, s, q, bound);
            out << (c ? "YES" : "NO") << '\n';
            if (c)
                for (int v = 1; v <= g.n(); ++v)
                    out << "v " << v << ' ' << (*c)[static_cast<std::size_t>(v)] << '\n';
            return success;
        };
    });

    // matrix
    std::string mode, rows_text, cols_text;
    int t = 0;
    bool symmetric = false;
    std::int64_t matrix_budget = 5'000'000;
    auto* matrix = app.add_subcommand("matrix", "partitions, mixed zones and width of a matrix");
    matrix->add_option("mode", mode, "error, mixed, minor or exact")
        ->required()
        ->check(CLI::IsMember({"error", "mixed", "minor", "exact"}));
    matrix->add_option("--matrix", matrix_path, "matrix file")->required()->check(CLI::ExistingFile);
    matrix->add_option("--rows", rows_text,
                       "error: row parts '1 2|3'; mixed: row range 'a:b'; minor: row cuts '3 5'");
    matrix->add_option("--cols", cols_text, "same as --rows for columns");
    matrix->add_option("--t,-t", t, "minor size")->check(CLI::PositiveNumber);
    matrix->add_option("--budget", matrix_budget, "exact search node budget")->check(CLI::PositiveNumber);
    matrix->add_flag("--symmetric", symmetric, "exact: merge rows and columns together");
    matrix->callback([&] {
        action = [&] {
            auto m = load_matrix(matrix_path);
            if (mode == "error") {
                MatrixPartition p(m.rows(), m.cols(), parse_parts(rows_text, m.rows()), parse_parts(cols_text, m.cols()));
                out << error_value(m, p) << '\n';
                return success;
            }
            if (mode == "mixed") {
                auto r = parse_range(rows_text, m.rows()), c = parse_range(cols_text, m.cols());
                bool v = is_vertical(m, r, c), h = is_horizontal(m, r, c);
                if (auto corner = find_corner(m, r, c))
                    out << "mixed\ncorner " << corner->first + 1 << ' ' << corner->second + 1 << '\n';
                else
                    out << (v && h ? "constant" : v ? "vertical" : "horizontal") << '\n';
                return success;
            }
            if (mode == "minor") {
                if (t <= 0)
                    throw InvalidInput("--t is required for minor");
                bool found = false;
                if (rows_text.empty() && cols_text.empty()) {
                    found = has_t_mixed_minor(m, t);
                } else {
                    found = check_t_mixed_minor(
                        m, MatrixPartition::division(m.rows(), m.cols(), parse_cuts(rows_text), parse_cuts(cols_text)), t);
                }
                out << (found ? "yes" : "no") << '\n';
                return success;
            }
            auto r = matrix_twin_width_exact(m, matrix_budget, symmetric);
            out << r.value << '\n';
            if (!r.exact) {
                err << "budget exhausted after " << r.nodes << " nodes: width is between " << r.lower << " and "
                    << r.value << '\n';
                return cap_exceeded;
            }
            return success;
        };
    });

    // gen
    std::string kind;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("gen", "write a generated graph");
    gen->add_option("--kind,-k", kind, "path, cycle, clique, biclique, grid, diagonal-grid, er, blowup, "
                                       "icosahedron, petersen, triangulation, cograph")
        ->required();
    gen->add_option("--params,-p", params, "numeric arguments of the kind");
    gen->add_option("--seed", seed, "random seed");
    add_out(gen);
    gen->callback([&] {
        action = [&] {
            emit(io::serialize(gen::generate(kind, params, seed)), out_path, out);
            return success;
        };
    });

    std::vector<std::string> argv_store{"tww"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? success : usage_error;
    }

    try {
        measure = parse_measure(measure_name);
        return action();
    } catch (const CapExceeded& e) {
        err << "tww: " << e.what() << '\n';
        return cap_exceeded;
    } catch (const WidthExceeded& e) {
        err << "tww: " << e.what() << '\n';
        return verification_failed;
    } catch (const DecompositionWidthExceeded& e) {
        err << "tww: " << e.what() << '\n';
        return verification_failed;
    } catch (const std::exception& e) {
        err << "tww: " << e.what() << '\n';
        return usage_error;
    }
}

} // namespace tww::cli
