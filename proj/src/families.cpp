// Parametric generators for every obstruction family.

#include "ltc/catalog.hpp"
#include "ltc/interval.hpp"

#include <functional>
#include <map>

namespace ltc {

namespace {

struct Fixed {
    int n;
    std::vector<Edge> edges;
    std::vector<OrderedPair> arcs;
};

// Vertices numbered left to right as drawn, which is a straight enumeration of U(X).
const std::vector<Fixed> two_nondiv_graphs = {
    {5, {{0, 1}, {1, 3}, {3, 4}}, {{1, 2}, {3, 2}}},
    {6, {{0, 1}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {4, 5}}, {{1, 2}, {4, 3}}},
};

const std::vector<Fixed> one_nondiv_4_5_graphs = {
    {4, {{0, 1}, {2, 3}}, {{3, 1}, {1, 2}}},
    {5, {{0, 1}, {1, 3}, {2, 3}, {2, 4}}, {{1, 2}, {4, 3}}},
    {5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}, {{2, 4}, {4, 3}}},
};

const std::vector<Fixed> one_nondiv_6_graphs = {
    {6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}}, {{2, 3}, {5, 4}}},
    {6, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}}, {{2, 3}, {5, 4}}},
    {6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}, {{2, 4}, {5, 3}}},
    {6, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {4, 5}}, {{2, 4}, {5, 3}}},
    {6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}, {{2, 4}, {5, 3}}},
    {6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}}, {{1, 3}, {5, 4}}},
    {6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}}, {{3, 4}, {5, 4}}},
    {6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}, {{5, 4}, {3, 5}}},
    {6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}, {{1, 4}, {3, 2}}},
    {6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}, {4, 5}}, {{2, 3}, {4, 2}}},
    {6, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {3, 4}, {3, 5}, {4, 5}}, {{2, 3}, {4, 2}}},
};

const std::vector<Fixed> one_nondiv_7_graphs = {
    {7, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {3, 6}, {4, 6}, {5, 6}}, {{2, 3}, {5, 4}}},
    {7, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 5}, {4, 6}}, {{3, 4}, {6, 5}}},
    {7, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 6}, {4, 5}, {5, 6}}, {{3, 5}, {6, 4}}},
    {7, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}, {{2, 4}, {5, 3}}},
    {7, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}, {{2, 4}, {5, 3}}},
    {7, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}}, {{6, 5}, {2, 4}}},
    {7, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}}, {{2, 3}, {4, 3}}},
    {7, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {5, 6}}, {{2, 3}, {6, 4}}},
};

const std::vector<Fixed> one_nondiv_8_graphs = {
    {8,
     {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {4, 7}, {5, 7}, {6, 7}},
     {{3, 4}, {6, 5}}},
    {8,
     {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}},
     {{2, 4}, {5, 3}}},
};

// A graph drawn through its complement: co-edges and the arcs of X.
class Sketch {
public:
    int add() { return n_++; }
    std::vector<int> add_path(int len) {
        std::vector<int> p;
        for (int i = 0; i < len; ++i) {
            p.push_back(add());
            if (i > 0)
                co_edge(p[i - 1], p[i]);
        }
        return p;
    }
    int leaf(int at) {
        int v = add();
        co_edge(at, v);
        return v;
    }
    void co_edge(int a, int b) { co_.push_back(make_edge(a, b)); }
    void arc(int t, int h) { arcs_.push_back({t, h}); }

    // Complement distance between a and b.
    int distance(int a, int b) const {
        SimpleGraph co(n_, co_);
        std::vector<int> d(static_cast<std::size_t>(n_), -1);
        std::vector<int> q{a};
        d[a] = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (int w = 0; w < n_; ++w)
                if (co.adjacent(q[i], w) && d[w] < 0) {
                    d[w] = d[q[i]] + 1;
                    q.push_back(w);
                }
        return d[b];
    }

    PartialGraph build() const {
        SimpleGraph u = complement(SimpleGraph(n_, co_));
        for (auto a : arcs_) {
            if (!u.adjacent(a.tail, a.head))
                throw std::invalid_argument("arc " + to_string(a) + " joins complement-adjacent vertices");
            u.remove_edge(a.tail, a.head);
        }
        return PartialGraph(u, arcs_);
    }

private:
    int n_ = 0;
    std::vector<Edge> co_;
    std::vector<OrderedPair> arcs_;
};

[[noreturn]] void bad_params(const std::string& family, const std::string& why) {
    throw std::invalid_argument(family + ": " + why);
}

void expect_arity(const std::string& family, const std::vector<int>& p, std::size_t k) {
    if (p.size() != k)
        bad_params(family, "expected " + std::to_string(k) + " parameter(s)");
}

void require(bool ok, const std::string& family, const std::string& why) {
    if (!ok)
        bad_params(family, why);
}

PartialGraph from_fixed(const std::vector<Fixed>& table, const std::string& family, const std::vector<int>& p) {
    expect_arity(family, p, 1);
    require(p[0] >= 1 && p[0] <= static_cast<int>(table.size()), family, "index out of range");
    const Fixed& f = table[p[0] - 1];
    return PartialGraph(f.n, f.edges, f.arcs);
}

PartialGraph complement_of(const SimpleGraph& co) { return PartialGraph(complement(co), {}); }

// Path with an arc at each end pointing inwards; middle path has len edges.
PartialGraph dividing_i(int len) {
    int n = len + 3;
    PartialGraph x(n);
    for (int i = 1; i < len + 1; ++i)
        x.add_edge(i, i + 1);
    x.add_arc(0, 1);
    x.add_arc(n - 1, n - 2);
    return x;
}

PartialGraph dividing_ii(int len) {
    int end = 3 + len;
    PartialGraph x(len + 5);
    x.add_edge(0, 1);
    x.add_edge(2, 3);
    x.add_edge(1, 3);
    x.add_arc(1, 2);
    for (int i = 3; i < end; ++i)
        x.add_edge(i, i + 1);
    x.add_arc(end + 1, end);
    return x;
}

PartialGraph dividing_iii(int len) {
    int a = 3 + len, b = a + 1, c = a + 2, d = a + 3;
    PartialGraph x(len + 7);
    x.add_edge(0, 1);
    x.add_edge(2, 3);
    x.add_edge(1, 3);
    x.add_arc(1, 2);
    for (int i = 3; i < a; ++i)
        x.add_edge(i, i + 1);
    x.add_edge(a, b);
    x.add_edge(c, d);
    x.add_edge(a, c);
    x.add_arc(c, b);
    return x;
}

PartialGraph disconnected(int k, int l) {
    Sketch s;
    auto p = s.add_path(k);
    auto q = s.add_path(l);
    s.arc(p.front(), q.front());
    if ((k + l) % 2 == 0)
        s.arc(q.back(), p.back());
    else
        s.arc(p.back(), q.back());
    return s.build();
}

// Position kinds for the tree families.
enum { on_path = 0, new_leaf = 1, same_as_u = 2 };

PartialGraph tree_i(int k, int vkind) {
    Sketch s;
    auto p = s.add_path(k);
    int u = s.leaf(p[2]);
    int v = vkind == same_as_u ? u : s.leaf(p[k - 3]);
    s.arc(p[1], u);
    s.arc(p[k - 2], v);
    return s.build();
}

PartialGraph tree_ii(int k, int j, int vkind) {
    Sketch s;
    auto p = s.add_path(k);
    int u = s.leaf(p[2]);
    int v = vkind == on_path ? p[j - 1] : vkind == new_leaf ? s.leaf(p[j - 1]) : u;
    bool v_in_p = vkind == on_path;
    s.arc(p[1], u);
    if (((k + j) % 2 == 0 && !v_in_p) || ((k + j) % 2 == 1 && v_in_p))
        s.arc(v, p[k - 1]);
    else
        s.arc(p[k - 1], v);
    return s.build();
}

PartialGraph tree_iii(int k, int l, int vkind) {
    Sketch s;
    auto p = s.add_path(k);
    int u = s.leaf(p[l - 1]);
    int v = vkind == on_path ? p[l] : s.leaf(p[l]);
    bool v_in_p = vkind == on_path;
    s.arc(p[0], p[k - 1]);
    if ((k % 2 == 0 && !v_in_p) || (k % 2 == 1 && v_in_p))
        s.arc(v, u);
    else
        s.arc(u, v);
    return s.build();
}

PartialGraph tree_iv(int k, int l, int j, int ukind, int vkind) {
    Sketch s;
    auto p = s.add_path(k);
    int u = ukind == on_path ? p[l - 1] : s.leaf(p[l - 1]);
    int v = vkind == on_path ? p[j - 1] : vkind == new_leaf ? s.leaf(p[j - 1]) : u;
    int in_p = (ukind == on_path) + (vkind == on_path || (vkind == same_as_u && ukind == on_path));
    s.arc(p[0], u);
    // Second arc as forced by the complement-path parities; the opposite of the printed rule.
    bool even = (k + l + j) % 2 == 0;
    if ((even && in_p != 1) || (!even && in_p == 1))
        s.arc(v, p[k - 1]);
    else
        s.arc(p[k - 1], v);
    return s.build();
}

PartialGraph c3_only(int which) {
    Sketch s;
    int v1 = s.add(), v2 = s.add(), v3 = s.add();
    s.co_edge(v1, v2);
    s.co_edge(v2, v3);
    s.co_edge(v3, v1);
    int u = s.leaf(v1);
    if (which == 1) {
        int v = s.leaf(v2), w = s.leaf(v3);
        s.arc(u, v);
        s.arc(w, v1);
    } else {
        int z = s.leaf(v1), v = s.leaf(v2), w = s.leaf(v3);
        s.arc(u, v);
        s.arc(z, w);
    }
    return s.build();
}

// C4 v1 v2 v3 p2, p1 pendant at p2, path p2..pk.
PartialGraph one_c4_a(int k) {
    Sketch s;
    int v1 = s.add(), v2 = s.add(), v3 = s.add();
    auto p = s.add_path(k);
    s.co_edge(v1, v2);
    s.co_edge(v2, v3);
    s.co_edge(v3, p[1]);
    s.co_edge(p[1], v1);
    s.arc(p[0], v1);
    if (k % 2 == 0)
        s.arc(p[k - 1], v3);
    else
        s.arc(v3, p[k - 1]);
    return s.build();
}

// Path p1..pk with v1 adjacent to p_{i-1} and p_{i+1}.
PartialGraph one_c4_b(int k, int i) {
    Sketch s;
    int v1 = s.add();
    auto p = s.add_path(k);
    s.co_edge(v1, p[i - 2]);
    s.co_edge(v1, p[i]);
    s.arc(p[0], v1);
    if (k % 2 == 0)
        s.arc(p[i - 1], p[k - 1]);
    else
        s.arc(p[k - 1], p[i - 1]);
    return s.build();
}

// Path p1..pk with the C4 v1 v2 p_{i+1} p_i.
Sketch one_c4_ladder(int k, int i, int& v1, int& v2, std::vector<int>& p) {
    Sketch s;
    v1 = s.add();
    v2 = s.add();
    p = s.add_path(k);
    s.co_edge(v1, v2);
    s.co_edge(v2, p[i]);
    s.co_edge(p[i - 1], v1);
    return s;
}

PartialGraph one_c4_c(int k, int i) {
    int v1, v2;
    std::vector<int> p;
    Sketch s = one_c4_ladder(k, i, v1, v2, p);
    s.arc(p[0], v1);
    if (k % 2 == 0)
        s.arc(p[k - 1], v2);
    else
        s.arc(v2, p[k - 1]);
    return s.build();
}

PartialGraph one_c4_d(int k, int i) {
    int v1, v2;
    std::vector<int> p;
    Sketch s = one_c4_ladder(k, i, v1, v2, p);
    s.arc(p[0], v2);
    if (k % 2 == 0)
        s.arc(p[k - 1], v1);
    else
        s.arc(v1, p[k - 1]);
    return s.build();
}

// C4 v1 v2 p3 p2 on the path p1..pk.
Sketch one_c4_square(int k, int& v1, int& v2, std::vector<int>& p) {
    Sketch s;
    v1 = s.add();
    v2 = s.add();
    p = s.add_path(k);
    s.co_edge(v1, v2);
    s.co_edge(v2, p[2]);
    s.co_edge(p[1], v1);
    return s;
}

PartialGraph one_c4_e(int k) {
    int v1, v2;
    std::vector<int> p;
    Sketch s = one_c4_square(k, v1, v2, p);
    int x = s.leaf(p[k - 3]);
    s.arc(p[0], v1);
    s.arc(p[k - 2], x);
    return s.build();
}

PartialGraph one_c4_f() {
    int v1, v2;
    std::vector<int> p;
    Sketch s = one_c4_square(4, v1, v2, p);
    s.arc(p[0], v1);
    s.arc(p[2], v1);
    return s.build();
}

// x = 0 selects v1, otherwise p_x.
PartialGraph one_c4_g(int k, int xsel) {
    int v1, v2;
    std::vector<int> p;
    Sketch s = one_c4_square(k, v1, v2, p);
    int x = xsel == 0 ? v1 : p[xsel - 1];
    s.arc(p[0], v1);
    if ((k + s.distance(p[0], x)) % 2 == 0)
        s.arc(x, p[k - 1]);
    else
        s.arc(p[k - 1], x);
    return s.build();
}

PartialGraph two_c4_a(int k) {
    Sketch s;
    int v1 = s.add(), v2 = s.add(), v3 = s.add();
    auto p = s.add_path(k);
    int v4 = s.add(), v5 = s.add(), v6 = s.add();
    s.co_edge(v1, v2);
    s.co_edge(v2, v3);
    s.co_edge(v3, p.front());
    s.co_edge(p.front(), v1);
    int x = s.leaf(v3);
    s.co_edge(v4, p.back());
    s.co_edge(v4, v5);
    s.co_edge(v5, v6);
    s.co_edge(v6, p.back());
    int y = s.leaf(v6);
    s.arc(v2, x);
    s.arc(v5, y);
    return s.build();
}

// Two C4s v1 v2 v3 v4 and v3 v4 v5 v6 sharing the edge v3v4.
Sketch domino(std::vector<int>& v) {
    Sketch s;
    v.clear();
    for (int i = 0; i < 6; ++i)
        v.push_back(s.add());
    for (auto [a, b] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 2}})
        s.co_edge(v[a], v[b]);
    return s;
}

PartialGraph two_c4_b() {
    std::vector<int> v;
    Sketch s = domino(v);
    int x = s.leaf(v[0]);
    int y = s.leaf(v[5]);
    s.arc(x, v[1]);
    s.arc(y, v[4]);
    return s.build();
}

PartialGraph two_c4_c() {
    std::vector<int> v;
    Sketch s = domino(v);
    s.arc(v[0], v[2]);
    s.arc(v[3], v[1]);
    return s.build();
}

// K_{2,3} with parts {v2, v4} and {v1, v3, v5}, plus u4 pendant at v4.
Sketch k23(int& v1, int& v2, int& v3, int& v4, int& v5, int& u4) {
    Sketch s;
    v1 = s.add();
    v2 = s.add();
    v3 = s.add();
    v4 = s.add();
    v5 = s.add();
    for (int a : {v2, v4})
        for (int b : {v1, v3, v5})
            s.co_edge(a, b);
    u4 = s.leaf(v4);
    return s;
}

// v3 of the K_{2,3} is p1 of a path p1..pk.
PartialGraph two_c4_d(int k) {
    int v1, v2, v3, v4, v5, u4;
    Sketch s = k23(v1, v2, v3, v4, v5, u4);
    std::vector<int> p{v3};
    for (int i = 1; i < k; ++i)
        p.push_back(s.leaf(p.back()));
    s.arc(u4, v5);
    if (k % 2 == 0)
        s.arc(v1, p.back());
    else
        s.arc(p.back(), v1);
    return s.build();
}

PartialGraph two_c4_e() {
    int v1, v2, v3, v4, v5, u4;
    Sketch s = k23(v1, v2, v3, v4, v5, u4);
    int z = s.leaf(v3);
    s.co_edge(z, v1);
    int u3 = s.leaf(v3);
    s.arc(u4, v5);
    s.arc(u3, z);
    return s.build();
}

PartialGraph two_c4_f() {
    int v1, v2, v3, v4, v5, u4;
    Sketch s = k23(v1, v2, v3, v4, v5, u4);
    s.leaf(v3);
    s.arc(u4, v5);
    s.arc(v3, v1);
    return s.build();
}

// Triangle v1 v2 v3 and C4 v2 v3 v4 v5.
PartialGraph c3_c4(int which) {
    Sketch s;
    int v1 = s.add(), v2 = s.add(), v3 = s.add(), v4 = s.add(), v5 = s.add();
    for (auto [a, b] : std::vector<Edge>{{v1, v2}, {v1, v3}, {v2, v3}, {v3, v4}, {v4, v5}, {v5, v2}})
        s.co_edge(a, b);
    int y = s.leaf(v2);
    s.arc(v5, y);
    if (which == 1) {
        int z = s.leaf(v3);
        int x = s.leaf(v1);
        s.arc(x, z);
    } else if (which == 2) {
        int x = s.leaf(v1);
        s.arc(v3, x);
    } else {
        int z = s.leaf(v3);
        s.arc(z, v1);
    }
    return s.build();
}

PartialGraph c5(int which) {
    Sketch s;
    std::vector<int> v;
    for (int i = 0; i < 5; ++i)
        v.push_back(s.add());
    for (int i = 0; i < 5; ++i)
        s.co_edge(v[i], v[(i + 1) % 5]);
    // v[i] is v_{i+1}.
    switch (which) {
    case 1: {
        int w = s.leaf(v[3]), u = s.leaf(v[2]);
        s.arc(v[1], u);
        s.arc(v[4], w);
        break;
    }
    case 2: {
        int w = s.leaf(v[4]), u = s.leaf(v[2]);
        s.arc(w, v[3]);
        s.arc(v[1], u);
        break;
    }
    case 3: {
        int w = s.leaf(v[3]), u = s.leaf(v[2]), x = s.leaf(v[4]);
        s.arc(w, x);
        s.arc(v[1], u);
        break;
    }
    case 4: {
        int u = s.leaf(v[2]);
        s.arc(v[1], u);
        s.arc(v[3], u);
        break;
    }
    case 5: {
        int u = s.leaf(v[2]), w = s.leaf(v[2]);
        s.arc(v[1], u);
        s.arc(v[3], w);
        break;
    }
    default: {
        int w = s.leaf(v[0]), u = s.leaf(v[2]);
        s.arc(v[1], u);
        s.arc(w, v[4]);
        break;
    }
    }
    return s.build();
}

SimpleGraph cycle_graph(int len) {
    SimpleGraph g(len);
    for (int i = 0; i < len; ++i)
        g.add_edge(i, (i + 1) % len);
    return g;
}

struct Family {
    FamilyInfo info;
    // Legal parameter tuples with at most max_n vertices.
    std::function<std::vector<std::vector<int>>(int)> params;
    std::function<PartialGraph(const std::vector<int>&)> build;
    // Drawable parameters whose instance fails certification.
    std::function<bool(const std::vector<int>&)> excluded = [](const std::vector<int>&) { return false; };
};

std::vector<std::vector<int>> indices(int count, const std::vector<int>& sizes, int max_n) {
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= count; ++i)
        if (sizes[i - 1] <= max_n)
            out.push_back({i});
    return out;
}

std::vector<int> sizes_of(const std::vector<Fixed>& t) {
    std::vector<int> s;
    for (const auto& f : t)
        s.push_back(f.n);
    return s;
}

const std::vector<Family>& registry() {
    static const std::vector<Family> all = [] {
        std::vector<Family> f;
        auto fixed_family = [&](std::string name, std::string fig, const std::vector<Fixed>& table) {
            f.push_back({{name, fig, {"index"}},
                         [&table](int max_n) { return indices(static_cast<int>(table.size()), sizes_of(table), max_n); },
                         [&table, name](const std::vector<int>& p) { return from_fixed(table, name, p); }});
        };
        auto single = [&](std::string name, std::string fig, int n, std::function<PartialGraph()> make) {
            f.push_back({{name, fig, {}},
                         [n](int max_n) {
                             return n <= max_n ? std::vector<std::vector<int>>{{}} : std::vector<std::vector<int>>{};
                         },
                         [make, name](const std::vector<int>& p) {
                             expect_arity(name, p, 0);
                             return make();
                         }});
        };
        auto indexed = [&](std::string name, std::string fig, std::vector<int> sizes,
                           std::function<PartialGraph(int)> make) {
            f.push_back({{name, fig, {"index"}},
                         [sizes](int max_n) { return indices(static_cast<int>(sizes.size()), sizes, max_n); },
                         [make, name, count = static_cast<int>(sizes.size())](const std::vector<int>& p) {
                             expect_arity(name, p, 1);
                             require(p[0] >= 1 && p[0] <= count, name, "index out of range");
                             return make(p[0]);
                         }});
        };

        f.push_back({{"noarc_comp_even_cycle", "thm1.1:C2k", {"k"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 3; 2 * k <= max_n; ++k)
                             out.push_back({k});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("noarc_comp_even_cycle", p, 1);
                         require(p[0] >= 3, "noarc_comp_even_cycle", "k >= 3 required");
                         return complement_of(cycle_graph(2 * p[0]));
                     }});
        f.push_back({{"noarc_comp_odd_cycle_plus_k1", "thm1.1:C2k+1+K1", {"k"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 1; 2 * k + 2 <= max_n; ++k)
                             out.push_back({k});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("noarc_comp_odd_cycle_plus_k1", p, 1);
                         require(p[0] >= 1, "noarc_comp_odd_cycle_plus_k1", "k >= 1 required");
                         return complement_of(forbidden_family(ForbiddenKind::comp_odd_cycle_plus_k1, p[0]));
                     }});
        indexed("noarc_tucker_fig1", "fig1", {6, 7, 7, 7, 7},
                [](int i) { return complement_of(forbidden_family(ForbiddenKind::tucker_fig1, i)); });

        auto path_family = [&](std::string name, std::string fig, int base, std::function<PartialGraph(int)> make) {
            f.push_back({{name, fig, {"path_length"}},
                         [base](int max_n) {
                             std::vector<std::vector<int>> out;
                             for (int len = 0; len + base <= max_n; ++len)
                                 out.push_back({len});
                             return out;
                         },
                         [make, name](const std::vector<int>& p) {
                             expect_arity(name, p, 1);
                             require(p[0] >= 0, name, "path length >= 0 required");
                             return make(p[0]);
                         }});
        };
        path_family("div_i", "fig2(i)", 3, dividing_i);
        path_family("div_ii", "fig2(ii)", 5, dividing_ii);
        path_family("div_iii", "fig2(iii)", 7, dividing_iii);

        fixed_family("two_nondiv", "fig3", two_nondiv_graphs);
        fixed_family("one_nondiv_4_5", "fig4", one_nondiv_4_5_graphs);
        fixed_family("one_nondiv_6", "fig5", one_nondiv_6_graphs);
        fixed_family("one_nondiv_7", "fig6", one_nondiv_7_graphs);
        fixed_family("one_nondiv_8", "fig7", one_nondiv_8_graphs);

        f.push_back({{"disconnected", "fig8", {"k", "l"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 1; k < max_n; ++k)
                             for (int l = 1; k + l <= max_n; ++l)
                                 if (k + l >= 3)
                                     out.push_back({k, l});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("disconnected", p, 2);
                         require(p[0] >= 1 && p[1] >= 1 && p[0] + p[1] >= 3, "disconnected",
                                 "k, l >= 1 and k + l >= 3 required");
                         return disconnected(p[0], p[1]);
                     }});

        f.push_back({{"tree_i", "fig9(i)", {"k", "v_kind"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         if (max_n >= 6)
                             out.push_back({5, same_as_u});
                         for (int k = 5; k + 2 <= max_n; ++k)
                             out.push_back({k, new_leaf});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("tree_i", p, 2);
                         require(p[0] >= 5, "tree_i", "k >= 5 required");
                         require(p[1] == new_leaf || (p[1] == same_as_u && p[0] == 5), "tree_i",
                                 "v may coincide with u only when k = 5");
                         return tree_i(p[0], p[1]);
                     }});
        f.push_back({{"tree_ii", "fig9(ii)", {"k", "j", "v_kind"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 4; k + 1 <= max_n; ++k)
                             for (int j = 1; j <= k - 2; ++j)
                                 for (int vk : {on_path, new_leaf, same_as_u}) {
                                     if (vk == new_leaf && (j < 3 || k + 2 > max_n))
                                         continue;
                                     if (vk == same_as_u && j != 3)
                                         continue;
                                     out.push_back({k, j, vk});
                                 }
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("tree_ii", p, 3);
                         int k = p[0], j = p[1], vk = p[2];
                         require(k >= 4 && j >= 1 && j <= k - 2, "tree_ii", "k >= 4, 1 <= j <= k-2 required");
                         require(vk == on_path || (vk == new_leaf && j >= 3) || (vk == same_as_u && j == 3), "tree_ii",
                                 "illegal v placement");
                         return tree_ii(k, j, vk);
                     }});
        f.push_back({{"tree_iii", "fig9(iii)", {"k", "l", "v_kind"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 4; k + 1 <= max_n; ++k)
                             for (int l = 2; l <= k - 2; ++l)
                                 for (int vk : {on_path, new_leaf})
                                     if (k + 1 + vk <= max_n)
                                         out.push_back({k, l, vk});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("tree_iii", p, 3);
                         int k = p[0], l = p[1], vk = p[2];
                         require(k >= 4 && l >= 2 && l <= k - 2 && (vk == on_path || vk == new_leaf), "tree_iii",
                                 "k >= 4, 2 <= l <= k-2 required");
                         return tree_iii(k, l, vk);
                     }});
        f.push_back({{"tree_iv", "fig9(iv)", {"k", "l", "j", "u_kind", "v_kind"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 4; k <= max_n; ++k)
                             for (int l = 3; l <= k - 1; ++l)
                                 for (int j = l - 1; j <= k - 2; ++j)
                                     for (int uk : {on_path, new_leaf})
                                         for (int vk : {on_path, new_leaf, same_as_u}) {
                                             if (vk == same_as_u && (uk != new_leaf || j != l))
                                                 continue;
                                             int n = k + uk + (vk == new_leaf);
                                             if (n <= max_n)
                                                 out.push_back({k, l, j, uk, vk});
                                         }
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("tree_iv", p, 5);
                         int k = p[0], l = p[1], j = p[2], uk = p[3], vk = p[4];
                         require(l >= 3 && l <= k - 1 && j >= l - 1 && j <= k - 2, "tree_iv",
                                 "3 <= l <= k-1 and l-1 <= j <= k-2 required");
                         require((uk == on_path || uk == new_leaf) &&
                                     (vk == on_path || vk == new_leaf || (vk == same_as_u && uk == new_leaf && j == l)),
                                 "tree_iv", "illegal u/v placement");
                         return tree_iv(k, l, j, uk, vk);
                     }});

        indexed("c3_only", "fig10", {6, 7}, c3_only);

        f.push_back({{"one_c4_a", "fig11(i-ii)", {"k"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 3; k + 3 <= max_n; ++k)
                             out.push_back({k});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("one_c4_a", p, 1);
                         require(p[0] >= 3, "one_c4_a", "k >= 3 required");
                         return one_c4_a(p[0]);
                     }});
        f.push_back({{"one_c4_b", "fig11(iii-iv)", {"k", "i"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 5; k + 1 <= max_n; ++k)
                             for (int i = 3; i + 2 <= k; ++i)
                                 out.push_back({k, i});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("one_c4_b", p, 2);
                         require(p[1] >= 3 && p[0] >= p[1] + 2, "one_c4_b", "i >= 3 and k >= i+2 required");
                         return one_c4_b(p[0], p[1]);
                     }});
        f.push_back({{"one_c4_c", "fig11(v-vi)", {"k", "i"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 4; k + 2 <= max_n; ++k)
                             for (int i = 2; i + 2 <= k; ++i)
                                 out.push_back({k, i});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("one_c4_c", p, 2);
                         require(p[1] >= 2 && p[0] >= p[1] + 2, "one_c4_c", "i >= 2 and k >= i+2 required");
                         return one_c4_c(p[0], p[1]);
                     }});
        f.push_back({{"one_c4_d", "fig11(vii-viii)", {"k", "i"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 2; k + 2 <= max_n; ++k)
                             for (int i = 1; i + 1 <= k; ++i)
                                 out.push_back({k, i});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("one_c4_d", p, 2);
                         require(p[1] >= 1 && p[0] >= p[1] + 1, "one_c4_d", "i >= 1 and k >= i+1 required");
                         return one_c4_d(p[0], p[1]);
                     },
                     // The C4 would contain an endpoint of the path.
                     [](const std::vector<int>& p) { return p[1] == 1 || p[1] == p[0] - 1; }});
        f.push_back({{"one_c4_e", "fig11(ix)", {"k"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 5; k + 3 <= max_n; ++k)
                             out.push_back({k});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("one_c4_e", p, 1);
                         require(p[0] >= 5, "one_c4_e", "k >= 5 required");
                         return one_c4_e(p[0]);
                     }});
        single("one_c4_f", "fig11(x)", 6, one_c4_f);
        f.push_back({{"one_c4_g", "fig11(xi)", {"k", "x"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 3; k + 2 <= max_n; ++k) {
                             out.push_back({k, 0});
                             for (int x = 2; x <= k - 2; ++x)
                                 out.push_back({k, x});
                         }
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("one_c4_g", p, 2);
                         int k = p[0], x = p[1];
                         require(k >= 3 && (x == 0 || (x >= 2 && x <= k - 2)), "one_c4_g",
                                 "k >= 3 and x in {0} or 2..k-2 required");
                         return one_c4_g(k, x);
                     },
                     // x = v1 and p_k = v3 are twins, so the second arc sits on a balanced edge.
                     [](const std::vector<int>& p) { return p[0] == 3 && p[1] == 0; }});

        f.push_back({{"two_c4_a", "fig12(i)", {"k"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 1; k + 8 <= max_n; ++k)
                             out.push_back({k});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("two_c4_a", p, 1);
                         require(p[0] >= 1, "two_c4_a", "k >= 1 required");
                         return two_c4_a(p[0]);
                     }});
        single("two_c4_b", "fig12(ii)", 8, two_c4_b);
        single("two_c4_c", "fig12(iii)", 6, two_c4_c);
        f.push_back({{"two_c4_d", "fig12(iv-v)", {"k"}},
                     [](int max_n) {
                         std::vector<std::vector<int>> out;
                         for (int k = 2; k + 5 <= max_n; ++k)
                             out.push_back({k});
                         return out;
                     },
                     [](const std::vector<int>& p) {
                         expect_arity("two_c4_d", p, 1);
                         require(p[0] >= 2, "two_c4_d", "k >= 2 required");
                         return two_c4_d(p[0]);
                     }});
        single("two_c4_e", "fig12(vi)", 8, two_c4_e);
        single("two_c4_f", "fig12(vii)", 7, two_c4_f);

        indexed("c3_c4", "fig13", {8, 7, 7}, c3_c4);
        indexed("c5", "fig14", {7, 7, 8, 6, 7, 7}, c5);
        // Deleting v3 leaves the two arcs opposing.
        f.back().excluded = [](const std::vector<int>& p) { return p[0] == 4; };
        return f;
    }();
    return all;
}

const Family& find_family(const std::string& name) {
    for (const auto& f : registry())
        if (f.info.name == name)
            return f;
    throw std::invalid_argument("unknown family '" + name + "'");
}

} // namespace

const std::vector<FamilyInfo>& families() {
    static const std::vector<FamilyInfo> infos = [] {
        std::vector<FamilyInfo> out;
        for (const auto& f : registry())
            out.push_back(f.info);
        return out;
    }();
    return infos;
}

PartialGraph generate_candidate(const std::string& family, const std::vector<int>& params) {
    return find_family(family).build(params);
}

PartialGraph generate_family(const std::string& family, const std::vector<int>& params) {
    const Family& f = find_family(family);
    PartialGraph x = f.build(params);
    if (f.excluded(params))
        throw std::invalid_argument(family + ": degenerate parameters (the drawing is not an obstruction)");
    return x;
}

std::vector<std::vector<int>> family_parameters(const std::string& family, int max_n) {
    const Family& f = find_family(family);
    std::vector<std::vector<int>> out;
    for (auto& p : f.params(max_n))
        if (!f.excluded(p) && f.build(p).order() <= max_n)
            out.push_back(std::move(p));
    return out;
}

std::vector<std::vector<int>> excluded_parameters(const std::string& family, int max_n) {
    const Family& f = find_family(family);
    std::vector<std::vector<int>> out;
    for (auto& p : f.params(max_n))
        if (f.excluded(p) && f.build(p).order() <= max_n)
            out.push_back(std::move(p));
    return out;
}

} // namespace ltc
