#include "ltc/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace ltc {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " out of range");
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void SimpleGraph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("vertex id out of range");
    if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

int SimpleGraph::size() const {
    int twice = 0;
    for (Mask m : adj_)
        twice += std::popcount(m);
    return twice / 2;
}

void SimpleGraph::add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void SimpleGraph::remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

int SimpleGraph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (Mask m = adj_[u] >> (u + 1); m; m &= m - 1)
            out.emplace_back(u, u + 1 + std::countr_zero(m));
    return out;
}

PartialGraph::PartialGraph(int n) : plain_(n), out_(static_cast<std::size_t>(n), 0) {}

PartialGraph::PartialGraph(SimpleGraph plain, const std::vector<OrderedPair>& arcs)
    : plain_(std::move(plain)), out_(static_cast<std::size_t>(plain_.order()), 0) {
    for (auto a : arcs)
        add_arc(a.tail, a.head);
}

PartialGraph::PartialGraph(int n, const std::vector<Edge>& edges, const std::vector<OrderedPair>& arcs)
    : PartialGraph(n) {
    for (auto [u, v] : edges)
        add_edge(u, v);
    for (auto a : arcs)
        add_arc(a.tail, a.head);
}

void PartialGraph::add_edge(int u, int v) {
    if (u != v && u >= 0 && v >= 0 && u < order() && v < order() && linked(u, v))
        throw std::invalid_argument("pair {" + std::to_string(u) + "," + std::to_string(v) + "} already present");
    plain_.add_edge(u, v);
}

void PartialGraph::add_arc(int tail, int head) {
    if (tail < 0 || head < 0 || tail >= order() || head >= order())
        throw std::invalid_argument("vertex id out of range");
    if (tail == head)
        throw std::invalid_argument("loop at vertex " + std::to_string(tail));
    if (linked(tail, head))
        throw std::invalid_argument("pair {" + std::to_string(tail) + "," + std::to_string(head) +
                                    "} already present");
    out_[tail] |= bit(head);
}

void PartialGraph::remove_arc(int tail, int head) {
    if (!has_arc(tail, head))
        throw std::invalid_argument("no arc " + to_string({tail, head}));
    out_[tail] &= ~bit(head);
}

void PartialGraph::relax_arc(int tail, int head) {
    remove_arc(tail, head);
    plain_.add_edge(tail, head);
}

Mask PartialGraph::in_arcs(int v) const {
    Mask m = 0;
    for (int u = 0; u < order(); ++u)
        if (has_arc(u, v))
            m |= bit(u);
    return m;
}

SimpleGraph PartialGraph::underlying() const {
    SimpleGraph g = plain_;
    for (auto a : arcs())
        g.add_edge(a.tail, a.head);
    return g;
}

std::vector<OrderedPair> PartialGraph::arcs() const {
    std::vector<OrderedPair> out;
    for (int u = 0; u < order(); ++u)
        for (Mask m = out_[u]; m; m &= m - 1)
            out.push_back({u, std::countr_zero(m)});
    return out;
}

int PartialGraph::arc_count() const {
    int c = 0;
    for (Mask m : out_)
        c += std::popcount(m);
    return c;
}

namespace {

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    for (std::string w; in >> w;)
        words.push_back(w);
    return words;
}

int parse_int(const std::string& word, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size() || value < 0)
        throw ParseError(line, "expected a non-negative integer, got '" + word + "'");
    return value;
}

} // namespace

PartialGraph parse_pog(std::string_view text) {
    std::optional<PartialGraph> h;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto words = split_words(line);
        if (words.empty() || words[0][0] == '#')
            continue;

        const std::string& kw = words[0];
        if (!h) {
            if (kw != "vertices" || words.size() != 2)
                throw ParseError(line_no, "expected 'vertices <n>' as first statement");
            int n = parse_int(words[1], line_no);
            if (n > SimpleGraph::max_vertices)
                throw ParseError(line_no, "at most " + std::to_string(SimpleGraph::max_vertices) +
                                              " vertices supported");
            h.emplace(n);
            continue;
        }
        if (kw != "edge" && kw != "arc")
            throw ParseError(line_no, "unknown statement '" + kw + "'");
        if (words.size() != 3)
            throw ParseError(line_no, "expected '" + kw + " <u> <v>'");
        int u = parse_int(words[1], line_no);
        int v = parse_int(words[2], line_no);
        if (u >= h->order() || v >= h->order())
            throw ParseError(line_no, "vertex id out of range (n = " + std::to_string(h->order()) + ")");
        if (u == v)
            throw ParseError(line_no, "loop at vertex " + std::to_string(u));
        if (h->linked(u, v))
            throw ParseError(line_no, "pair {" + std::to_string(u) + "," + std::to_string(v) +
                                          "} listed twice");
        if (kw == "edge")
            h->add_edge(u, v);
        else
            h->add_arc(u, v);
    }
    if (!h)
        throw ParseError(line_no, "missing 'vertices <n>'");
    return *h;
}

std::string serialize_pog(const PartialGraph& h) {
    std::ostringstream out;
    out << "vertices " << h.order() << '\n';
    for (auto [u, v] : h.plain().edges())
        out << "edge " << u << ' ' << v << '\n';
    for (auto a : h.arcs())
        out << "arc " << a.tail << ' ' << a.head << '\n';
    return out.str();
}

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

namespace {

int count_components(const SimpleGraph& g, Mask alive) {
    int count = 0;
    Mask left = alive;
    while (left) {
        Mask frontier = left & (~left + 1);
        Mask seen = frontier;
        while (frontier) {
            Mask next = 0;
            for (Mask m = frontier; m; m &= m - 1)
                next |= g.neighbors(std::countr_zero(m));
            next &= alive & ~seen;
            seen |= next;
            frontier = next;
        }
        left &= ~seen;
        ++count;
    }
    return count;
}

Mask all_vertices(int n) { return bit(n) - 1; }

} // namespace

std::vector<int> cut_vertices(const SimpleGraph& g) {
    Mask all = all_vertices(g.order());
    int base = count_components(g, all);
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (count_components(g, all & ~bit(v)) > base)
            out.push_back(v);
    return out;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    std::vector<std::vector<int>> out;
    Mask left = all_vertices(g.order());
    while (left) {
        Mask seen = left & (~left + 1);
        Mask frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (Mask m = frontier; m; m &= m - 1)
                next |= g.neighbors(std::countr_zero(m));
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        left &= ~seen;
        std::vector<int> comp;
        for (Mask m = seen; m; m &= m - 1)
            comp.push_back(std::countr_zero(m));
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const SimpleGraph& g) { return g.order() <= 1 || count_components(g, all_vertices(g.order())) == 1; }

Mask closed_neighborhood(const SimpleGraph& g, int v) { return g.neighbors(v) | bit(v); }

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vertices) {
    int k = static_cast<int>(vertices.size());
    SimpleGraph s(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                s.add_edge(i, j);
    return s;
}

PartialGraph induced_subgraph(const PartialGraph& h, const std::vector<int>& vertices) {
    int k = static_cast<int>(vertices.size());
    PartialGraph s(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int u = vertices[i], v = vertices[j];
            if (i < j && h.has_edge(u, v))
                s.add_edge(i, j);
            else if (i != j && h.has_arc(u, v))
                s.add_arc(i, j);
        }
    return s;
}

namespace {

std::vector<int> all_but(int n, int v) {
    std::vector<int> keep;
    for (int u = 0; u < n; ++u)
        if (u != v)
            keep.push_back(u);
    return keep;
}

} // namespace

SimpleGraph delete_vertex(const SimpleGraph& g, int v) { return induced_subgraph(g, all_but(g.order(), v)); }

PartialGraph delete_vertex(const PartialGraph& h, int v) { return induced_subgraph(h, all_but(h.order(), v)); }

PartialGraph relabel(const PartialGraph& h, const std::vector<int>& perm) {
    PartialGraph r(h.order());
    for (auto [u, v] : h.plain().edges())
        r.add_edge(perm[u], perm[v]);
    for (auto a : h.arcs())
        r.add_arc(perm[a.tail], perm[a.head]);
    return r;
}

PartialGraph dual(const PartialGraph& h) {
    PartialGraph d(h.order());
    for (auto [u, v] : h.plain().edges())
        d.add_edge(u, v);
    for (auto a : h.arcs())
        d.add_arc(a.head, a.tail);
    return d;
}

namespace {

struct Embedder {
    const PartialGraph& host;
    const PartialGraph& pattern;
    std::vector<int> order;  // pattern vertices in placement order
    std::vector<int> phi;
    Mask used = 0;

    bool compatible(int p, int x) const {
        for (int i = 0; i < static_cast<int>(order.size()); ++i) {
            int q = order[i];
            if (phi[q] < 0)
                continue;
            int y = phi[q];
            if (pattern.has_arc(p, q)) {
                if (!host.has_arc(x, y))
                    return false;
            } else if (pattern.has_arc(q, p)) {
                if (!host.has_arc(y, x))
                    return false;
            } else if (pattern.has_edge(p, q)) {
                if (!host.linked(x, y))
                    return false;
            } else if (host.linked(x, y)) {
                return false;
            }
        }
        return true;
    }

    bool place(std::size_t depth) {
        if (depth == order.size())
            return true;
        int p = order[depth];
        for (int x = 0; x < host.order(); ++x) {
            if ((used >> x) & 1U)
                continue;
            if (!compatible(p, x))
                continue;
            phi[p] = x;
            used |= bit(x);
            if (place(depth + 1))
                return true;
            used &= ~bit(x);
            phi[p] = -1;
        }
        return false;
    }
};

// BFS order so that each placed vertex is constrained by an earlier neighbour where possible.
std::vector<int> placement_order(const PartialGraph& pattern) {
    SimpleGraph u = pattern.underlying();
    std::vector<int> order;
    for (const auto& comp : connected_components(u)) {
        Mask seen = bit(comp.front());
        std::vector<int> queue{comp.front()};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            order.push_back(queue[i]);
            for (Mask m = u.neighbors(queue[i]) & ~seen; m; m &= m - 1) {
                int w = std::countr_zero(m);
                seen |= bit(w);
                queue.push_back(w);
            }
        }
    }
    return order;
}

} // namespace

std::optional<std::vector<int>> contains(const PartialGraph& host, const PartialGraph& pattern) {
    if (pattern.order() > host.order())
        return std::nullopt;
    Embedder e{host, pattern, placement_order(pattern), std::vector<int>(static_cast<std::size_t>(pattern.order()), -1)};
    if (!e.place(0))
        return std::nullopt;
    return e.phi;
}

std::optional<std::vector<int>> contains(const SimpleGraph& host, const SimpleGraph& pattern) {
    return contains(PartialGraph(host, {}), PartialGraph(pattern, {}));
}

std::string export_dot(const PartialGraph& h, std::string_view name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 0; v < h.order(); ++v)
        out << "  " << v << ";\n";
    for (auto [u, v] : h.plain().edges())
        out << "  " << u << " -> " << v << " [dir=none];\n";
    for (auto a : h.arcs())
        out << "  " << a.tail << " -> " << a.head << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_string(const OrderedPair& p) {
    return "(" + std::to_string(p.tail) + "," + std::to_string(p.head) + ")";
}

} // namespace ltc
