#include "ltc/catalog.hpp"
#include "ltc/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace ltc {

std::optional<ObstructionCertificate> certify_obstruction(const PartialGraph& x) {
    ObstructionCertificate cert;
    cert.not_completable = complete(x);
    if (is_completed(cert.not_completable))
        return std::nullopt;
    for (int v = 0; v < x.order(); ++v) {
        auto r = complete(delete_vertex(x, v));
        if (!is_completed(r))
            return std::nullopt;
        cert.vertex_deletions.push_back(std::get<Completed>(std::move(r)));
    }
    auto arcs = x.arcs();
    for (auto a : arcs) {
        PartialGraph relaxed = x;
        relaxed.relax_arc(a.tail, a.head);
        auto r = complete(relaxed);
        if (!is_completed(r))
            return std::nullopt;
        cert.arc_relaxations.push_back(std::get<Completed>(std::move(r)));
    }
    cert.arc_count = static_cast<int>(arcs.size());
    if (const auto* opp = std::get_if<Opposing>(&cert.not_completable)) {
        Mask seen = 0;
        for (auto p : opp->witness.sequence)
            seen |= bit(p.tail) | bit(p.head);
        cert.all_vertices_in_sequence = seen == bit(x.order()) - 1;
    }
    return cert;
}

std::string to_string(const CatalogMatch& m) {
    std::string s = m.is_dual ? "dual of " : "";
    s += m.family + "(";
    for (std::size_t i = 0; i < m.params.size(); ++i)
        s += (i ? "," : "") + std::to_string(m.params[i]);
    return s + ") [" + m.figure_ref + "]";
}

namespace {

struct Instance {
    CatalogMatch tag;
    PartialGraph pog;
    CanonicalForm canonical;
};

// Every (family, params, dual) instance in generation order.
std::vector<Instance> instances(int max_n, int threads) {
    std::vector<Instance> out;
    for (const auto& f : families())
        for (const auto& p : family_parameters(f.name, max_n)) {
            PartialGraph x = generate_family(f.name, p);
            out.push_back({{f.name, p, f.figure_ref, false}, x, {}});
            if (x.arc_count() > 0)
                out.push_back({{f.name, p, f.figure_ref, true}, dual(x), {}});
        }
    parallel_for(out.size(), threads, [&](std::size_t i) { out[i].canonical = canonical_form(out[i].pog); });
    return out;
}

} // namespace

std::vector<CatalogEntry> enumerate_catalog(int max_n, int threads) {
    if (max_n < 3)
        throw std::invalid_argument("max_n must be at least 3");
    if (max_n > canonical_max_vertices)
        throw std::invalid_argument("max_n must be at most " + std::to_string(canonical_max_vertices));
    auto all = instances(max_n, threads);
    std::vector<CatalogEntry> catalog;
    std::map<CanonicalForm, std::size_t> index;
    for (auto& inst : all) {
        auto [it, fresh] = index.try_emplace(inst.canonical, catalog.size());
        if (fresh)
            catalog.push_back({inst.tag.family, inst.tag.params, inst.tag.figure_ref, inst.tag.is_dual,
                               std::move(inst.pog), inst.canonical, {}});
        else
            catalog[it->second].aliases.push_back(inst.tag);
    }
    std::vector<char> ok(catalog.size());
    parallel_for(catalog.size(), threads,
                 [&](std::size_t i) { ok[i] = certify_obstruction(catalog[i].pog).has_value(); });
    for (std::size_t i = 0; i < catalog.size(); ++i)
        if (!ok[i]) {
            const auto& e = catalog[i];
            throw CertificationFailure(to_string(CatalogMatch{e.family, e.params, e.figure_ref, e.is_dual}) +
                                       " is not an obstruction:\n" + serialize_pog(e.pog));
        }
    return catalog;
}

std::optional<PartialGraph> extract_obstruction(const PartialGraph& h) {
    if (is_completed(complete(h)))
        return std::nullopt;
    std::vector<int> kept;
    for (int v = 0; v < h.order(); ++v)
        kept.push_back(v);
    for (int v = 0; v < h.order(); ++v) {
        std::vector<int> trial;
        for (int u : kept)
            if (u != v)
                trial.push_back(u);
        if (!is_completed(complete(induced_subgraph(h, trial))))
            kept = std::move(trial);
    }
    PartialGraph x = induced_subgraph(h, kept);
    for (auto a : x.arcs()) {
        PartialGraph trial = x;
        trial.relax_arc(a.tail, a.head);
        if (!is_completed(complete(trial)))
            x = std::move(trial);
    }
    return x;
}

std::vector<CatalogMatch> match_catalog(const PartialGraph& x, const std::vector<CatalogEntry>& catalog) {
    std::vector<CatalogMatch> out;
    if (x.order() > canonical_max_vertices)
        return out;
    CanonicalForm c = canonical_form(x);
    for (const auto& e : catalog)
        if (e.canonical == c) {
            out.push_back({e.family, e.params, e.figure_ref, e.is_dual});
            out.insert(out.end(), e.aliases.begin(), e.aliases.end());
        }
    return out;
}

std::vector<CatalogMatch> match_catalog(const PartialGraph& x, int max_n) {
    std::vector<CatalogMatch> out;
    if (x.order() > max_n || x.order() > canonical_max_vertices)
        return out;
    CanonicalForm c = canonical_form(x);
    // Only instances of the right order can match; skip certification and dedup.
    for (const auto& f : families())
        for (const auto& p : family_parameters(f.name, x.order())) {
            PartialGraph y = generate_family(f.name, p);
            if (y.order() != x.order() || y.arc_count() != x.arc_count() || y.plain().size() != x.plain().size())
                continue;
            if (canonical_form(y) == c)
                out.push_back({f.name, p, f.figure_ref, false});
            if (y.arc_count() > 0 && canonical_form(dual(y)) == c)
                out.push_back({f.name, p, f.figure_ref, true});
        }
    return out;
}

namespace {

using nlohmann::json;

json tag_json(const CatalogMatch& m) {
    return {{"family", m.family}, {"params", m.params}, {"figure_ref", m.figure_ref}, {"is_dual", m.is_dual}};
}

CatalogMatch tag_from_json(const json& j) {
    return {j.at("family").get<std::string>(), j.at("params").get<std::vector<int>>(),
            j.at("figure_ref").get<std::string>(), j.at("is_dual").get<bool>()};
}

json pog_json(const PartialGraph& h) {
    json edges = json::array(), arcs = json::array();
    for (auto [u, v] : h.plain().edges())
        edges.push_back({u, v});
    for (auto a : h.arcs())
        arcs.push_back({a.tail, a.head});
    return {{"n", h.order()}, {"edges", edges}, {"arcs", arcs}};
}

PartialGraph pog_from_json(const json& j) {
    int n = j.at("n").get<int>();
    if (n < 0 || n > SimpleGraph::max_vertices)
        throw std::runtime_error("vertex count out of range");
    std::vector<Edge> edges;
    std::vector<OrderedPair> arcs;
    for (const auto& e : j.at("edges"))
        edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
    for (const auto& a : j.at("arcs"))
        arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    return PartialGraph(n, edges, arcs);
}

} // namespace

std::string catalog_to_json(const std::vector<CatalogEntry>& catalog) {
    json out = json::array();
    for (const auto& e : catalog) {
        json j = tag_json({e.family, e.params, e.figure_ref, e.is_dual});
        j["pog"] = pog_json(e.pog);
        j["canonical"] = e.canonical.hex();
        json aliases = json::array();
        for (const auto& a : e.aliases)
            aliases.push_back(tag_json(a));
        j["aliases"] = aliases;
        out.push_back(j);
    }
    return out.dump(1) + "\n";
}

std::vector<CatalogEntry> catalog_from_json(const std::string& text) {
    std::vector<CatalogEntry> catalog;
    try {
        json doc = json::parse(text);
        if (!doc.is_array())
            throw std::runtime_error("catalog must be a JSON array");
        for (const auto& j : doc) {
            CatalogMatch tag = tag_from_json(j);
            CatalogEntry e{tag.family, tag.params, tag.figure_ref, tag.is_dual, pog_from_json(j.at("pog")), {}, {}};
            e.canonical = canonical_form(e.pog);
            if (e.canonical.hex() != j.at("canonical").get<std::string>())
                throw std::runtime_error("canonical form of " + to_string(tag) + " does not match its graph");
            if (j.contains("aliases"))
                for (const auto& a : j.at("aliases"))
                    e.aliases.push_back(tag_from_json(a));
            catalog.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error(std::string("malformed catalog: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(std::string("malformed catalog: ") + ex.what());
    }
    return catalog;
}

} // namespace ltc
