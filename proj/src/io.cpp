#include "fillin/io.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fillin/chordal.hpp"
#include "fillin/dp.hpp"
#include "fillin/errors.hpp"
#include "fillin/oracles.hpp"
#include "fillin/pmc.hpp"
#include "fillin/reductions.hpp"
#include "fillin/sandwich.hpp"

namespace fillin {

namespace {

struct Line {
    int no;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text)
{
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.resize(hash);
        std::istringstream ls(raw);
        Line line{no, {}};
        std::string tok;
        while (ls >> tok)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

long long parse_number(const Line& line, const std::string& tok)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw parse_error(line.no, "expected a number, got '" + tok + "'");
    }
    if (used != tok.size())
        throw parse_error(line.no, "expected a number, got '" + tok + "'");
    return v;
}

int vertex_from(const Line& line, const std::string& tok, int n, bool dimacs)
{
    long long v = parse_number(line, tok);
    long long lo = dimacs ? 1 : 0;
    long long hi = dimacs ? n : n - 1;
    if (v < lo || v > hi)
        throw parse_error(line.no, "vertex id " + tok + " out of range");
    return static_cast<int>(dimacs ? v - 1 : v);
}

// adjacency rows are packed bit vectors, so memory grows with n^2
constexpr long long kMaxVertices = 20000;

int vertex_count_from(const Line& line, const std::string& tok)
{
    long long n = parse_number(line, tok);
    if (n < 0)
        throw parse_error(line.no, "negative vertex count");
    if (n > kMaxVertices)
        throw parse_error(line.no, "vertex count exceeds this build's limit of " +
                                       std::to_string(kMaxVertices));
    return static_cast<int>(n);
}

} // namespace

ParsedInput parse_input(const std::string& text)
{
    auto lines = tokenize(text);
    if (lines.empty())
        throw parse_error(1, "empty input");

    ParsedInput res;
    std::size_t i = 0;
    int n = 0;
    std::vector<EdgePair> edges;

    const std::string& first = lines[0].tokens[0];
    res.dimacs = (first == "p" || first == "c");

    if (res.dimacs) {
        while (i < lines.size() && lines[i].tokens[0] == "c")
            ++i;
        if (i == lines.size() || lines[i].tokens[0] != "p")
            throw parse_error(lines.back().no, "missing DIMACS problem line");
        const Line& p = lines[i];
        if (p.tokens.size() != 4)
            throw parse_error(p.no, "expected 'p edge <n> <m>'");
        n = vertex_count_from(p, p.tokens[2]);
        ++i;
        for (; i < lines.size(); ++i) {
            const Line& l = lines[i];
            if (l.tokens[0] == "---")
                break;
            if (l.tokens[0] == "c")
                continue;
            if (l.tokens[0] != "e" || l.tokens.size() != 3)
                throw parse_error(l.no, "expected 'e <u> <v>'");
            int u = vertex_from(l, l.tokens[1], n, true);
            int v = vertex_from(l, l.tokens[2], n, true);
            if (u == v)
                throw parse_error(l.no, "self-loop");
            edges.emplace_back(u, v);
        }
    } else {
        const Line& h = lines[0];
        if (h.tokens.size() != 2)
            throw parse_error(h.no, "expected header '<n> <m>'");
        n = vertex_count_from(h, h.tokens[0]);
        long long m = parse_number(h, h.tokens[1]);
        if (m < 0)
            throw parse_error(h.no, "negative header value");
        i = 1;
        for (long long got = 0; got < m; ++got, ++i) {
            if (i >= lines.size())
                throw parse_error(lines.back().no, "expected more edge lines");
            const Line& l = lines[i];
            if (l.tokens.size() != 2)
                throw parse_error(l.no, "expected edge '<u> <v>'");
            int u = vertex_from(l, l.tokens[0], n, false);
            int v = vertex_from(l, l.tokens[1], n, false);
            if (u == v)
                throw parse_error(l.no, "self-loop");
            edges.emplace_back(u, v);
        }
        if (i < lines.size() && lines[i].tokens[0] != "---")
            throw parse_error(lines[i].no, "unexpected trailing line");
    }

    res.graph = Graph(n, edges);
    if (res.dimacs) {
        std::vector<long long> labels(n);
        for (int v = 0; v < n; ++v)
            labels[v] = v + 1;
        res.graph.set_labels(std::move(labels));
    }

    if (i < lines.size() && lines[i].tokens[0] == "---") {
        res.has_section = true;
        ++i;
        for (; i < lines.size(); ++i) {
            const Line& l = lines[i];
            if (l.tokens[0] == "c" && l.tokens.size() == 3) {
                int v = vertex_from(l, l.tokens[1], n, res.dimacs);
                res.section_colors.emplace_back(v, parse_number(l, l.tokens[2]));
                continue;
            }
            std::size_t base = (l.tokens[0] == "e") ? 1 : 0;
            if (l.tokens.size() != base + 2)
                throw parse_error(l.no, "expected pair '<u> <v>' or 'c <v> <color>'");
            int u = vertex_from(l, l.tokens[base], n, res.dimacs);
            int v = vertex_from(l, l.tokens[base + 1], n, res.dimacs);
            if (u == v)
                throw parse_error(l.no, "self-loop");
            res.section_pairs.emplace_back(u, v);
        }
    }
    return res;
}

Graph parse_graph(const std::string& text)
{
    ParsedInput in = parse_input(text);
    if (in.has_section)
        throw parse_error(1, "unexpected '---' section");
    return in.graph;
}

std::string serialize_graph(const Graph& g)
{
    std::ostringstream out;
    auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (const auto& e : edges)
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string report_to_json(const RunReport& r)
{
    nlohmann::json j;
    j["answer"] = r.answer;
    j["k"] = r.k;
    auto fill = nlohmann::json::array();
    for (const auto& [u, v] : r.fill)
        fill.push_back({u, v});
    j["fill"] = fill;
    j["stats"] = nlohmann::json::object();
    for (const auto& [key, val] : r.stats)
        j["stats"][key] = val;
    return j.dump() + "\n";
}

std::string report_to_text(const RunReport& r)
{
    std::ostringstream out;
    out << "answer " << r.answer << '\n';
    out << "k " << r.k << '\n';
    for (const auto& [u, v] : r.fill)
        out << "fill " << u << ' ' << v << '\n';
    for (const auto& [key, val] : r.stats)
        out << "stat " << key << ' ' << val << '\n';
    return out.str();
}

namespace {

std::string read_input(const std::string& path)
{
    if (path == "-" || path == "stdin") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f)
        throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::vector<std::pair<long long, long long>> label_pairs(const Graph& g,
                                                         const std::vector<EdgePair>& fill)
{
    std::vector<std::pair<long long, long long>> out;
    out.reserve(fill.size());
    for (const auto& e : fill)
        out.emplace_back(g.label_of(e.u), g.label_of(e.v));
    return out;
}

// BFS 2-coloring; the side containing each component's smallest vertex goes
// left. Throws when an odd cycle shows up.
BipartiteGraph derive_bipartition(const Graph& g)
{
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    BipartiteGraph b;
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : g.neighbors(v)) {
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    throw std::invalid_argument("input graph is not bipartite");
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        (side[v] == 0 ? b.left : b.right).push_back(v);
    b.edges = g.edges();
    return b;
}

Coloring coloring_from_section(const Graph& g,
                               const std::vector<std::pair<int, long long>>& entries)
{
    std::map<long long, VertexSet> by_color;
    std::vector<char> colored(g.vertex_count(), 0);
    for (const auto& [v, c] : entries) {
        if (colored[v])
            throw std::invalid_argument("vertex colored twice");
        colored[v] = 1;
        by_color[c].push_back(v);
    }
    Coloring col;
    for (auto& [c, verts] : by_color) {
        std::sort(verts.begin(), verts.end());
        col.classes.push_back(verts);
    }
    // uncolored vertices are unconstrained: give each its own class
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!colored[v])
            col.classes.push_back({v});
    return col;
}

struct CommandContext {
    std::string input_path = "-";
    std::string emit = "text";
    int k = 0;
    std::string which = "mfi";
};

int emit_report(const RunReport& r, const std::string& emit, std::ostream& out,
                int code)
{
    out << (emit == "json" ? report_to_json(r) : report_to_text(r));
    return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact minimum fill-in and chordal sandwich solver"};
    app.require_subcommand(1);
    CommandContext ctx;

    auto add_common = [&](CLI::App* sub, bool with_k, bool k_required) {
        sub->add_option("--input", ctx.input_path, "input file, or - for stdin");
        sub->add_option("--emit", ctx.emit, "report format")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_k) {
            auto* opt = sub->add_option("--k", ctx.k, "fill edge budget");
            if (k_required)
                opt->required();
        }
    };

    CLI::App* c_solve = app.add_subcommand("solve", "minimum fill-in");
    add_common(c_solve, true, true);
    CLI::App* c_sandwich = app.add_subcommand("sandwich", "chordal graph sandwich");
    add_common(c_sandwich, true, true);
    CLI::App* c_chain = app.add_subcommand("chain", "minimum chain completion");
    add_common(c_chain, true, true);
    CLI::App* c_colored = app.add_subcommand("colored", "triangulating colored graph");
    add_common(c_colored, true, true);
    CLI::App* c_kernelize = app.add_subcommand("kernelize", "sandwich kernelization");
    add_common(c_kernelize, true, true);
    CLI::App* c_pmcs = app.add_subcommand("pmcs", "vital potential maximal cliques");
    add_common(c_pmcs, true, true);
    CLI::App* c_chordal = app.add_subcommand("check-chordal", "chordality test");
    add_common(c_chordal, false, false);
    CLI::App* c_tri = app.add_subcommand("triangulate", "minimal triangulation");
    add_common(c_tri, false, false);
    CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force references");
    add_common(c_oracle, true, false);
    c_oracle->add_option("--which", ctx.which, "oracle to run")
        ->check(CLI::IsMember({"mfi", "pmcs", "sandwich", "chain"}));

    std::vector<std::string> argv = args;
    argv.insert(argv.begin(), "fillin");
    std::vector<const char*> cargv;
    for (const auto& a : argv)
        cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        std::string text = read_input(ctx.input_path);

        if (app.got_subcommand(c_chordal)) {
            Graph g = parse_graph(text);
            bool ok = is_chordal(g);
            RunReport r{ok ? "YES" : "NO", 0, {}, {}};
            return emit_report(r, ctx.emit, out, ok ? 0 : 1);
        }

        if (app.got_subcommand(c_tri)) {
            Graph g = parse_graph(text);
            Triangulation t = minimal_triangulation(g);
            RunReport r{"YES", static_cast<int>(t.fill.size()),
                        label_pairs(g, t.fill), {}};
            return emit_report(r, ctx.emit, out, 0);
        }

        if (app.got_subcommand(c_pmcs)) {
            Graph g = parse_graph(text);
            PmcCatalog cat = enumerate_vital_pmcs(g, ctx.k);
            if (ctx.emit == "json") {
                nlohmann::json j;
                auto arr = nlohmann::json::array();
                for (const auto& [omega, pmc] : cat.entries()) {
                    auto one = nlohmann::json::array();
                    for (int v : omega)
                        one.push_back(g.label_of(v));
                    arr.push_back(one);
                }
                j["k"] = ctx.k;
                j["pmcs"] = arr;
                out << j.dump() << '\n';
            } else {
                for (const auto& [omega, pmc] : cat.entries()) {
                    for (std::size_t i = 0; i < omega.size(); ++i)
                        out << (i ? " " : "") << g.label_of(omega[i]);
                    out << '\n';
                }
            }
            return 0;
        }

        if (app.got_subcommand(c_kernelize)) {
            ParsedInput in = parse_input(text);
            KernelResult kr;
            if (in.has_section && !in.section_pairs.empty()) {
                std::set<EdgePair> allowed(in.section_pairs.begin(),
                                           in.section_pairs.end());
                kr = kernelize(SandwichInstance{in.graph, std::move(allowed), ctx.k});
            } else {
                kr = fillin_kernel(in.graph, ctx.k);
            }
            const char* status = kr.status == KernelStatus::No ? "NO"
                : kr.status == KernelStatus::TrivialYes       ? "TRIVIAL_YES"
                                                              : "REDUCED";
            if (ctx.emit == "json") {
                nlohmann::json j;
                j["status"] = status;
                j["k"] = kr.status == KernelStatus::Reduced ? kr.instance.k : ctx.k;
                auto forced = nlohmann::json::array();
                for (const auto& e : kr.forced_fill)
                    forced.push_back({in.graph.label_of(e.u), in.graph.label_of(e.v)});
                j["forced_fill"] = forced;
                if (kr.status == KernelStatus::Reduced) {
                    j["n"] = kr.instance.graph.vertex_count();
                    auto edges = nlohmann::json::array();
                    for (const auto& e : kr.instance.graph.edges())
                        edges.push_back({e.u, e.v});
                    j["edges"] = edges;
                    auto allowed = nlohmann::json::array();
                    for (const auto& e : kr.instance.allowed)
                        allowed.push_back({e.u, e.v});
                    j["allowed"] = allowed;
                    auto vmap = nlohmann::json::array();
                    for (int v : kr.vertex_map)
                        vmap.push_back(in.graph.label_of(v));
                    j["vertex_map"] = vmap;
                }
                out << j.dump() << '\n';
            } else {
                out << "# kernel status " << status << '\n';
                out << "# k "
                    << (kr.status == KernelStatus::Reduced ? kr.instance.k : ctx.k)
                    << '\n';
                for (const auto& e : kr.forced_fill)
                    out << "# forced " << in.graph.label_of(e.u) << ' '
                        << in.graph.label_of(e.v) << '\n';
                if (kr.status == KernelStatus::Reduced) {
                    for (std::size_t i = 0; i < kr.vertex_map.size(); ++i)
                        out << "# map " << i << ' '
                            << in.graph.label_of(kr.vertex_map[i]) << '\n';
                    out << serialize_graph(kr.instance.graph);
                    out << "---\n";
                    for (const auto& e : kr.instance.allowed)
                        out << e.u << ' ' << e.v << '\n';
                }
            }
            return kr.status == KernelStatus::No ? 1 : 0;
        }

        if (app.got_subcommand(c_oracle)) {
            ParsedInput in = parse_input(text);
            if (ctx.which == "mfi") {
                int v = oracle_mfi(in.graph);
                if (ctx.emit == "json")
                    out << nlohmann::json{{"mfi", v}}.dump() << '\n';
                else
                    out << "mfi " << v << '\n';
                return 0;
            }
            if (ctx.which == "pmcs") {
                auto pmcs = oracle_pmcs(in.graph);
                if (ctx.emit == "json") {
                    auto arr = nlohmann::json::array();
                    for (const auto& omega : pmcs) {
                        auto one = nlohmann::json::array();
                        for (int v : omega)
                            one.push_back(in.graph.label_of(v));
                        arr.push_back(one);
                    }
                    out << nlohmann::json{{"pmcs", arr}}.dump() << '\n';
                } else {
                    for (const auto& omega : pmcs) {
                        for (std::size_t i = 0; i < omega.size(); ++i)
                            out << (i ? " " : "") << in.graph.label_of(omega[i]);
                        out << '\n';
                    }
                }
                return 0;
            }
            if (ctx.which == "sandwich") {
                std::set<EdgePair> allowed(in.section_pairs.begin(),
                                           in.section_pairs.end());
                bool yes = oracle_sandwich(
                    SandwichInstance{in.graph, std::move(allowed), ctx.k});
                RunReport r{yes ? "YES" : "NO", ctx.k, {}, {}};
                return emit_report(r, ctx.emit, out, yes ? 0 : 1);
            }
            // chain
            int v = oracle_chain(derive_bipartition(in.graph));
            if (ctx.emit == "json")
                out << nlohmann::json{{"chain", v}}.dump() << '\n';
            else
                out << "chain " << v << '\n';
            return 0;
        }

        // the solving subcommands share the report shape
        auto t0 = std::chrono::steady_clock::now();
        PipelineStats stats;
        std::optional<FillSolution> sol;
        Graph g;

        if (app.got_subcommand(c_solve)) {
            g = parse_graph(text);
            sol = solve(g, ctx.k, &stats);
        } else if (app.got_subcommand(c_sandwich)) {
            ParsedInput in = parse_input(text);
            g = in.graph;
            std::set<EdgePair> allowed(in.section_pairs.begin(),
                                       in.section_pairs.end());
            sol = solve_sandwich(SandwichInstance{g, std::move(allowed), ctx.k},
                                 &stats);
        } else if (app.got_subcommand(c_colored)) {
            ParsedInput in = parse_input(text);
            g = in.graph;
            Coloring col = coloring_from_section(g, in.section_colors);
            sol = solve_sandwich(colored_to_sandwich(g, col, ctx.k), &stats);
        } else if (app.got_subcommand(c_chain)) {
            g = parse_graph(text);
            auto fill = solve_chain(derive_bipartition(g), ctx.k);
            if (fill)
                sol = FillSolution{*fill};
        }

        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();

        RunReport r;
        r.k = ctx.k;
        r.stats["branch_leaves"] = stats.branch_leaves;
        r.stats["catalog_entries"] = stats.catalog_entries;
        r.stats["elapsed_ms"] = elapsed;
        r.stats["kernel_vertices"] = stats.kernel_vertices;
        if (sol) {
            // never emit an unverified YES
            if (sol->size() > ctx.k || !is_chordal(g.with_edges(sol->fill)))
                throw internal_error("emitted solution failed re-verification");
            r.answer = "YES";
            r.fill = label_pairs(g, sol->fill);
            return emit_report(r, ctx.emit, out, 0);
        }
        r.answer = "NO";
        return emit_report(r, ctx.emit, out, 1);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace fillin
