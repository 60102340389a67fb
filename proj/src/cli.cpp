#include "ltc/cli.hpp"
#include "ltc/catalog.hpp"
#include "ltc/completion.hpp"
#include "ltc/gamma.hpp"
#include "ltc/interval.hpp"
#include "ltc/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ltc {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Input problems that map to exit_usage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError(path + ": cannot open file");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw UsageError(path + ": cannot write file");
}

PartialGraph load_pog(const std::string& path) {
    std::string text = read_file(path);
    try {
        return parse_pog(text);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::string text = read_file(path);
    try {
        return catalog_from_json(text);
    } catch (const std::runtime_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

json pair_json(OrderedPair p) { return json::array({p.tail, p.head}); }

json pairs_json(const std::vector<OrderedPair>& ps) {
    json out = json::array();
    for (auto p : ps)
        out.push_back(pair_json(p));
    return out;
}

std::string sequence_text(const std::vector<OrderedPair>& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i)
        s += (i ? "Γ" : "") + to_string(seq[i]);
    return s;
}

std::string pairs_text(const std::vector<OrderedPair>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i)
        s += (i ? " " : "") + to_string(ps[i]);
    return s;
}

std::string violation_text(const Violation& v) {
    return "vertex " + std::to_string(v.vertex) + " has non-adjacent " +
           (v.out_neighbours ? "out" : "in") + "-neighbours " + std::to_string(v.first) + "," +
           std::to_string(v.second);
}

json violation_json(const Violation& v) {
    return {{"vertex", v.vertex},
            {"neighbours", {v.first, v.second}},
            {"kind", v.out_neighbours ? "out" : "in"}};
}

std::string failure_text(const CompletionResult& r) {
    if (const auto* o = std::get_if<Opposing>(&r))
        return "opposing " + to_string(o->witness.first) + "," + to_string(o->witness.second) + "; sequence " +
               sequence_text(o->witness.sequence);
    const auto& bad = std::get<NotOrientable>(r);
    return "component " + std::to_string(bad.component) + " is not orientable; " + violation_text(bad.violation);
}

json result_json(const CompletionResult& r) {
    if (const auto* c = std::get_if<Completed>(&r))
        return {{"completable", true}, {"arcs", pairs_json(c->arcs)}};
    if (const auto* o = std::get_if<Opposing>(&r))
        return {{"completable", false},
                {"reason", "opposing"},
                {"first", pair_json(o->witness.first)},
                {"second", pair_json(o->witness.second)},
                {"sequence", pairs_json(o->witness.sequence)}};
    const auto& bad = std::get<NotOrientable>(r);
    return {{"completable", false},
            {"reason", "not_orientable"},
            {"component", bad.component},
            {"violation", violation_json(bad.violation)}};
}

int cmd_complete(const std::string& path, bool as_json, std::ostream& out) {
    auto r = complete(load_pog(path));
    if (as_json)
        out << result_json(r).dump() << "\n";
    else if (const auto* c = std::get_if<Completed>(&r))
        out << "COMPLETABLE: " << pairs_text(c->arcs) << "\n";
    else
        out << "NOT COMPLETABLE: " << failure_text(r) << "\n";
    return is_completed(r) ? exit_ok : exit_negative;
}

// Why x fails to be an obstruction; empty if it is one.
std::string obstruction_failure(const PartialGraph& x) {
    if (is_completed(complete(x)))
        return "completable";
    for (int v = 0; v < x.order(); ++v)
        if (!is_completed(complete(delete_vertex(x, v))))
            return "deleting vertex " + std::to_string(v) + " leaves it non-completable";
    for (auto a : x.arcs()) {
        PartialGraph relaxed = x;
        relaxed.relax_arc(a.tail, a.head);
        if (!is_completed(complete(relaxed)))
            return "relaxing arc " + to_string(a) + " leaves it non-completable";
    }
    return "";
}

int cmd_certify(const std::string& path, bool as_json, std::ostream& out) {
    PartialGraph x = load_pog(path);
    auto cert = certify_obstruction(x);
    if (!cert) {
        std::string why = obstruction_failure(x);
        if (as_json)
            out << json{{"obstruction", false}, {"reason", why}}.dump() << "\n";
        else
            out << "NOT AN OBSTRUCTION: " << why << "\n";
        return exit_negative;
    }
    if (as_json) {
        out << json{{"obstruction", true},
                    {"arc_count", cert->arc_count},
                    {"not_completable", result_json(cert->not_completable)},
                    {"vertex_deletions", cert->vertex_deletions.size()},
                    {"arc_relaxations", cert->arc_relaxations.size()},
                    {"all_vertices_in_sequence", cert->all_vertices_in_sequence}}
                   .dump()
            << "\n";
        return exit_ok;
    }
    out << "OBSTRUCTION\n";
    out << "arcs: " << cert->arc_count << "\n";
    out << "witness: " << failure_text(cert->not_completable) << "\n";
    out << "vertex deletions completable: " << cert->vertex_deletions.size() << "/" << x.order() << "\n";
    out << "arc relaxations completable: " << cert->arc_relaxations.size() << "/" << cert->arc_count << "\n";
    if (cert->arc_count > 0)
        out << "witness sequence covers all vertices: " << (cert->all_vertices_in_sequence ? "yes" : "no") << "\n";
    return exit_ok;
}

int cmd_extract(const std::string& path, const std::string& out_path, std::ostream& out) {
    auto x = extract_obstruction(load_pog(path));
    if (!x) {
        out << "COMPLETABLE: nothing to extract\n";
        return exit_negative;
    }
    if (out_path.empty())
        out << serialize_pog(*x);
    else
        write_file(out_path, serialize_pog(*x));
    return exit_ok;
}

int cmd_match(const std::string& path, const std::string& catalog_path, bool as_json, std::ostream& out) {
    PartialGraph x = load_pog(path);
    auto matches = match_catalog(x, load_catalog(catalog_path));
    if (as_json) {
        json list = json::array();
        for (const auto& m : matches)
            list.push_back(
                {{"family", m.family}, {"params", m.params}, {"figure_ref", m.figure_ref}, {"is_dual", m.is_dual}});
        out << list.dump() << "\n";
    } else if (matches.empty()) {
        out << "NO MATCH\n";
    } else {
        for (const auto& m : matches)
            out << to_string(m) << "\n";
    }
    return matches.empty() ? exit_negative : exit_ok;
}

std::string entry_file_stem(std::size_t index, const CatalogEntry& e) {
    std::ostringstream s;
    s << std::setw(4) << std::setfill('0') << index << "_" << e.family;
    for (int p : e.params)
        s << "_" << p;
    if (e.is_dual)
        s << "_dual";
    return s.str();
}

void make_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw UsageError(dir + ": " + ec.message());
}

int cmd_catalog(int max_n, const std::string& out_path, const std::string& dot_dir, int threads, std::ostream& out) {
    if (max_n < 3 || max_n > canonical_max_vertices)
        throw UsageError("--max-n must be in 3.." + std::to_string(canonical_max_vertices));
    auto catalog = enumerate_catalog(max_n, threads);
    std::string text = catalog_to_json(catalog);
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
    if (!dot_dir.empty()) {
        make_dir(dot_dir);
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            std::string stem = entry_file_stem(i, catalog[i]);
            write_file((fs::path(dot_dir) / (stem + ".dot")).string(), export_dot(catalog[i].pog, "X" + std::to_string(i)));
        }
    }
    if (!out_path.empty()) {
        std::size_t aliases = 0;
        for (const auto& e : catalog)
            aliases += e.aliases.size();
        out << catalog.size() << " entries (" << aliases << " aliased instances) written to " << out_path << "\n";
    }
    return exit_ok;
}

std::string one_line(const PartialGraph& h) {
    std::string s = "n=" + std::to_string(h.order()) + " edges";
    for (auto [u, v] : h.plain().edges())
        s += " " + std::to_string(u) + "-" + std::to_string(v);
    s += " arcs";
    for (auto a : h.arcs())
        s += " " + std::to_string(a.tail) + "->" + std::to_string(a.head);
    return s;
}

int cmd_enumerate(int n, bool two_arc, const std::string& catalog_path, const std::string& out_dir, int threads,
                  bool as_json, std::ostream& out) {
    auto catalog = load_catalog(catalog_path);
    EnumerationConfig cfg{n, two_arc ? std::optional<int>(2) : std::nullopt, false};
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto report = compare_with_catalog(n, catalog, two_arc, threads);
    if (!out_dir.empty()) {
        make_dir(out_dir);
        auto found = minimal_obstructions(n, two_arc, threads);
        for (std::size_t i = 0; i < found.size(); ++i) {
            std::string header = "# canonical " + canonical_form(found[i]).hex() + "\n";
            for (const auto& m : match_catalog(found[i], catalog))
                header += "# " + to_string(m) + "\n";
            std::ostringstream name;
            name << "obstruction_" << std::setw(4) << std::setfill('0') << i << ".pog";
            write_file((fs::path(out_dir) / name.str()).string(), header + serialize_pog(found[i]));
        }
    }
    if (as_json) {
        json missing = json::array(), extra = json::array();
        for (const auto& h : report.missing)
            missing.push_back({{"canonical", canonical_form(h).hex()}, {"pog", serialize_pog(h)}});
        for (const auto& e : report.extra)
            extra.push_back({{"canonical", e.canonical.hex()},
                             {"tag", to_string(CatalogMatch{e.family, e.params, e.figure_ref, e.is_dual})}});
        out << json{{"n", n}, {"two_arc", two_arc}, {"found", report.found}, {"missing", missing}, {"extra", extra}}
                   .dump()
            << "\n";
    } else {
        out << "n=" << n << (two_arc ? " (at most two arcs)" : "") << ": " << report.found
            << " obstructions found by search\n";
        for (const auto& h : report.missing)
            out << "missing " << canonical_form(h).hex() << " " << one_line(h) << "\n";
        for (const auto& e : report.extra)
            out << "extra " << e.canonical.hex() << " "
                << to_string(CatalogMatch{e.family, e.params, e.figure_ref, e.is_dual}) << "\n";
        out << (report.ok() ? "OK: " : "FAIL: ") << report.missing.size() << " missing / " << report.extra.size()
            << " extra\n";
    }
    return report.ok() ? exit_ok : exit_negative;
}

std::string vertices_text(const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i)
        s += (i ? " " : "") + std::to_string(vs[i]);
    return s;
}

int cmd_recognize(const std::string& path, bool as_json, std::ostream& out) {
    SimpleGraph g = load_pog(path).underlying();
    bool orientable = is_lt_orientable(g);
    std::optional<TuckerVerdict> verdict;
    if (g.order() <= tucker_max_vertices)
        verdict = tucker_oracle(g);
    auto order = straight_enumeration(g);
    if (as_json) {
        json j = {{"lt_orientable", orientable}, {"proper_interval", order.has_value()}};
        if (verdict) {
            j["pca"] = verdict->is_pca;
            if (verdict->witness)
                j["witness"] = {{"family", to_string(verdict->witness->family)},
                                {"k", verdict->witness->k},
                                {"vertices", verdict->witness->vertices}};
        }
        if (order)
            j["straight_enumeration"] = *order;
        out << j.dump() << "\n";
        return exit_ok;
    }
    out << "local tournament orientable: " << (orientable ? "yes" : "no") << "\n";
    if (!verdict)
        out << "PCA: not checked (more than " << tucker_max_vertices << " vertices)\n";
    else if (verdict->is_pca)
        out << "PCA: yes\n";
    else
        out << "PCA: no; contains " << to_string(verdict->witness->family) << " k=" << verdict->witness->k
            << " on vertices " << vertices_text(verdict->witness->vertices) << "\n";
    if (order)
        out << "proper interval: yes; straight enumeration " << vertices_text(*order) << "\n";
    else
        out << "proper interval: no\n";
    return exit_ok;
}

int cmd_gamma(const std::string& path, const std::vector<int>& from, const std::vector<int>& to, bool as_json,
              std::ostream& out) {
    SimpleGraph g = load_pog(path).underlying();
    if (from.empty() != to.empty())
        throw UsageError("--from and --to must be given together");
    if (!from.empty()) {
        OrderedPair p{from[0], from[1]}, q{to[0], to[1]};
        for (auto e : {p, q})
            if (e.tail < 0 || e.head < 0 || e.tail >= g.order() || e.head >= g.order() || !g.adjacent(e.tail, e.head))
                throw UsageError(to_string(e) + " is not an edge");
        auto seq = gamma_sequence(g, p, q);
        if (as_json)
            out << json{{"related", seq.has_value()}, {"sequence", seq ? pairs_json(*seq) : json::array()}}.dump()
                << "\n";
        else if (seq)
            out << "sequence " << sequence_text(*seq) << "\n";
        else
            out << "NOT RELATED: " << to_string(p) << " and " << to_string(q) << " lie in different classes\n";
        return seq ? exit_ok : exit_negative;
    }
    GammaPartition gp(g);
    if (as_json) {
        json classes = json::array(), implication = json::array();
        for (int c = 0; c < gp.class_count(); ++c)
            classes.push_back({{"pairs", pairs_json(gp.members(c))}, {"reverse", gp.reverse_class(c)}});
        for (int i = 0; i < gp.implication_class_count(); ++i) {
            json edges = json::array();
            for (auto [u, v] : gp.implication_members(i))
                edges.push_back({u, v});
            implication.push_back(edges);
        }
        out << json{{"classes", classes}, {"implication_classes", implication}}.dump() << "\n";
        return exit_ok;
    }
    for (int c = 0; c < gp.class_count(); ++c)
        out << "class " << c << " (reverse " << gp.reverse_class(c) << "): " << pairs_text(gp.members(c)) << "\n";
    for (int i = 0; i < gp.implication_class_count(); ++i) {
        out << "implication class " << i << ":";
        for (auto [u, v] : gp.implication_members(i))
            out << " " << u << "-" << v;
        out << (gp.implication_members(i).size() == 1 && is_balanced_edge(g, gp.implication_members(i)[0])
                    ? " (balanced)"
                    : "")
            << "\n";
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local tournament orientation completion toolkit", "ltc"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads for catalog/enumerate (0 = all cores)")
        ->envname("LTC_THREADS")
        ->check(CLI::NonNegativeNumber);

    std::string file, out_path, catalog_path, dir;
    bool as_json = false, two_arc = false;
    int max_n = 0, n = 0;
    std::vector<int> from, to;

    auto file_command = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "POG file")->required();
        return sub;
    };
    auto* complete_cmd = file_command("complete", "Complete to a local tournament or print an opposing witness");
    complete_cmd->add_flag("--json", as_json);
    auto* certify_cmd = file_command("certify", "Check the obstruction conditions");
    certify_cmd->add_flag("--json", as_json);
    auto* extract_cmd = file_command("extract", "Extract an obstruction by greedy deletion and relaxation");
    extract_cmd->add_option("--out", out_path, "Output POG file");
    auto* match_cmd = file_command("match", "List catalog entries isomorphic to the input");
    match_cmd->add_option("--catalog", catalog_path, "Catalog JSON")->required();
    match_cmd->add_flag("--json", as_json);
    auto* recognize_cmd = file_command("recognize", "PCA verdict and straight enumeration of the underlying graph");
    recognize_cmd->add_flag("--json", as_json);
    auto* gamma_cmd = file_command("gamma", "Gamma*-classes, or a shortest Gamma-sequence");
    gamma_cmd->add_option("--from", from, "Ordered pair u v")->expected(2);
    gamma_cmd->add_option("--to", to, "Ordered pair x y")->expected(2);
    gamma_cmd->add_flag("--json", as_json);
    auto* dot_cmd = file_command("dot", "Print DOT");

    auto* catalog_cmd = app.add_subcommand("catalog", "Generate and certify the obstruction catalog");
    catalog_cmd->add_option("--max-n", max_n, "Largest vertex count")->required();
    catalog_cmd->add_option("--out", out_path, "Output JSON (default: standard output)");
    catalog_cmd->add_option("--dot-dir", dir, "Directory for one DOT file per entry");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Compare exhaustive search with the catalog");
    enumerate_cmd->add_option("--n", n, "Vertex count")->required();
    enumerate_cmd->add_flag("--two-arc", two_arc, "Restrict candidates to at most two arcs");
    enumerate_cmd->add_option("--catalog", catalog_path, "Catalog JSON")->required();
    enumerate_cmd->add_option("--out-dir", dir, "Directory for one POG file per obstruction found");
    enumerate_cmd->add_flag("--json", as_json);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (complete_cmd->parsed())
            return cmd_complete(file, as_json, out);
        if (certify_cmd->parsed())
            return cmd_certify(file, as_json, out);
        if (extract_cmd->parsed())
            return cmd_extract(file, out_path, out);
        if (match_cmd->parsed())
            return cmd_match(file, catalog_path, as_json, out);
        if (recognize_cmd->parsed())
            return cmd_recognize(file, as_json, out);
        if (gamma_cmd->parsed())
            return cmd_gamma(file, from, to, as_json, out);
        if (dot_cmd->parsed()) {
            out << export_dot(load_pog(file));
            return exit_ok;
        }
        if (catalog_cmd->parsed())
            return cmd_catalog(max_n, out_path, dir, threads, out);
        if (enumerate_cmd->parsed())
            return cmd_enumerate(n, two_arc, catalog_path, dir, threads, as_json, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace ltc
