#include "ltc/graph.hpp"

#include <algorithm>
#include <map>

namespace ltc {

namespace {

// Relation of a to b: 0 none, 1 edge, 2 arc a->b, 3 arc b->a.
int relation(const PartialGraph& h, int a, int b) {
    if (h.has_edge(a, b))
        return 1;
    if (h.has_arc(a, b))
        return 2;
    if (h.has_arc(b, a))
        return 3;
    return 0;
}

// Iterated degree refinement; the resulting colour ranks are label-independent.
std::vector<int> refine_colours(const std::vector<std::vector<int>>& rel) {
    int n = static_cast<int>(rel.size());
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    int classes = n == 0 ? 0 : 1;
    for (;;) {
        std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> around;
            for (int w = 0; w < n; ++w)
                if (w != v && rel[v][w] != 0)
                    around.push_back(rel[v][w] * 1024 + colour[w]);
            std::sort(around.begin(), around.end());
            keys[v].push_back(colour[v]);
            keys[v].insert(keys[v].end(), around.begin(), around.end());
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& k : keys)
            rank.emplace(k, 0);
        int r = 0;
        for (auto& [k, value] : rank)
            value = r++;
        for (int v = 0; v < n; ++v)
            colour[v] = rank[keys[v]];
        if (r == classes)
            return colour;
        classes = r;
    }
}

struct Search {
    int n;
    const std::vector<std::vector<int>>& rel;
    std::vector<int> cell_of_pos;
    std::vector<int> colour;
    std::vector<int> twin_rep;  // smallest twin of each vertex
    std::vector<int> perm;
    std::vector<int> best;
    bool have_best = false;
    int version = 0;
    Mask used = 0;

    void run(int pos, bool below_best) {
        if (pos == n) {
            if (!have_best || below_best) {
                best = current_sequence();
                have_best = true;
                ++version;
            }
            return;
        }
        Mask tried_reps = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1U || colour[v] != cell_of_pos[pos])
                continue;
            if ((tried_reps >> twin_rep[v]) & 1U)
                continue;
            tried_reps |= bit(twin_rep[v]);

            perm[pos] = v;
            bool below = below_best;
            if (have_best && !below_best) {
                int cmp = compare_row(pos);
                if (cmp > 0)
                    continue;
                below = cmp < 0;
            }
            used |= bit(v);
            int version_before = version;
            run(pos + 1, below);
            used &= ~bit(v);
            // A new best below us shares our whole prefix.
            if (version != version_before)
                below_best = false;
        }
    }

    int row_start(int pos) const { return pos * (pos - 1) / 2; }

    int compare_row(int pos) const {
        int base = row_start(pos);
        for (int j = 0; j < pos; ++j) {
            int s = rel[perm[j]][perm[pos]];
            int b = best[base + j];
            if (s != b)
                return s < b ? -1 : 1;
        }
        return 0;
    }

    std::vector<int> current_sequence() const {
        std::vector<int> seq;
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j)
                seq.push_back(rel[perm[j]][perm[i]]);
        return seq;
    }
};

} // namespace

CanonicalForm canonical_form(const PartialGraph& h) {
    int n = h.order();
    if (n > canonical_max_vertices)
        throw std::length_error("canonical_form supports at most " + std::to_string(canonical_max_vertices) +
                                " vertices");
    std::vector<std::vector<int>> rel(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b)
                rel[a][b] = relation(h, a, b);

    Search s{n, rel, {}, refine_colours(rel), {}, std::vector<int>(static_cast<std::size_t>(n)), {}};
    std::vector<int> sorted = s.colour;
    std::sort(sorted.begin(), sorted.end());
    s.cell_of_pos = sorted;

    s.twin_rep.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        s.twin_rep[v] = v;
        for (int u = 0; u < v; ++u) {
            if (s.colour[u] != s.colour[v] || rel[u][v] >= 2)
                continue;
            bool twins = true;
            for (int w = 0; w < n && twins; ++w)
                if (w != u && w != v && rel[u][w] != rel[v][w])
                    twins = false;
            if (twins) {
                s.twin_rep[v] = s.twin_rep[u];
                break;
            }
        }
    }
    s.run(0, false);

    std::string sig;
    sig.push_back(static_cast<char>(n));
    unsigned char acc = 0;
    int filled = 0;
    for (int x : s.best) {
        acc = static_cast<unsigned char>(acc << 2 | x);
        if (++filled == 4) {
            sig.push_back(static_cast<char>(acc));
            acc = 0;
            filled = 0;
        }
    }
    if (filled)
        sig.push_back(static_cast<char>(acc << (2 * (4 - filled))));
    return {sig};
}

CanonicalForm canonical_form(const SimpleGraph& g) { return canonical_form(PartialGraph(g, {})); }

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : signature) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex) {
    if (hex.size() % 2)
        throw std::invalid_argument("odd-length hex string");
    auto nibble = [](char c) {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    CanonicalForm f;
    for (std::size_t i = 0; i < hex.size(); i += 2)
        f.signature.push_back(static_cast<char>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
    return f;
}

} // namespace ltc
