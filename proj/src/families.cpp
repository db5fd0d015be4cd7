#include "powdom/families.hpp"

#include <stdexcept>

namespace powdom {

namespace {

std::invalid_argument bad_param(const std::string& msg) { return std::invalid_argument(msg); }

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

}  // namespace

FamilyInstance gen_complete(int n) {
    if (n < 2) throw bad_param("K_n needs n >= 2");
    FamilyInstance f;
    f.graph = complete_graph(n);
    f.family = "K";
    f.params = {{"n", n}};
    f.expected = {n, n - 1, n - 1, 1, 1, ""};
    return f;
}

FamilyInstance gen_complete_minus_matching(int n) {
    if (n < 4 || n % 2 != 0) throw bad_param("K_n - M needs even n >= 4");
    std::vector<Edge> matching;
    for (int i = 0; i < n; i += 2) matching.emplace_back(i, i + 1);
    FamilyInstance f;
    f.graph = complement_within(n, matching);
    f.family = "K-M";
    f.params = {{"n", n}};
    f.expected = {n, n - 2, n - 2, 1, 2, ""};
    return f;
}

FamilyInstance gen_G2(int k) {
    if (k < 3) throw bad_param("G(2,k) needs k >= 3");
    const int x = 0, y = 1, z = 2;
    auto u = [&](int i) { return 2 + i; };
    auto v = [&](int i) { return 2 + k + i; };

    std::vector<Edge> es = {{x, u(1)}, {x, v(1)}, {x, z}, {y, u(1)}, {y, v(1)}, {y, z}};
    for (int i = 1; i < k; ++i) {
        es.emplace_back(u(i), u(i + 1));
        es.emplace_back(v(i), v(i + 1));
    }
    for (int i = 2; i <= k; i += 2) {
        if (i + 1 <= k) es.emplace_back(u(i), v(i + 1));
        es.emplace_back(u(i), v(i - 1));
    }
    es.emplace_back(u(k), v(k));

    std::vector<std::string> labels = {"x", "y", "z"};
    for (int i = 1; i <= k; ++i) labels.push_back("u" + std::to_string(i));
    for (int i = 1; i <= k; ++i) labels.push_back("v" + std::to_string(i));

    FamilyInstance f;
    f.graph = Graph(2 * k + 3, es, labels);
    f.family = "G2";
    f.params = {{"k", k}};
    f.expected = {2 * k + 3, 2, std::nullopt, 1, 2 * k, ""};
    return f;
}

FamilyInstance gen_G3(int k) {
    if (k < 3) throw bad_param("G(3,k) needs k >= 3");
    const int x = 0, y = 1;
    auto p = [&](int i, int j) { return 2 + (i - 1) * 3 + (j - 1); };

    std::vector<Edge> es = {{x, y}};
    for (int j = 1; j <= 3; ++j) {
        es.emplace_back(x, p(1, j));
        es.emplace_back(y, p(1, j));
    }
    for (int i = 2; i <= k; ++i)
        for (int j1 = 1; j1 <= 3; ++j1)
            for (int j2 = j1 + 1; j2 <= 3; ++j2) es.emplace_back(p(i, j1), p(i, j2));
    for (int i = 1; i < k; ++i) {
        for (int j = 1; j <= 3; ++j) es.emplace_back(p(i, j), p(i + 1, j));
        for (int j = 2; j <= 3; ++j) es.emplace_back(p(i, j), p(i + 1, j - 1));
    }

    std::vector<std::string> labels = {"x", "y"};
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= 3; ++j)
            labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");

    FamilyInstance f;
    f.graph = Graph(3 * k + 2, es, labels);
    f.family = "G3";
    f.params = {{"k", k}};
    f.expected = {3 * k + 2, 3, std::nullopt, 1, 3 * (k - 1) + 1, ""};
    return f;
}

FamilyInstance gen_Gd(int delta, int k) {
    if (delta < 4) throw bad_param("G(delta,k) needs delta >= 4");
    if (k < 3) throw bad_param("G(delta,k) needs k >= 3");
    const int u = 0, v = 1, x = 2, y = 3;
    const int w = delta - 2;
    auto p = [&](int i, int j) { return 4 + (i - 1) * w + (j - 1); };

    std::vector<Edge> es = {{u, v}, {u, x}, {u, y}, {v, x}, {v, y}, {x, y}};
    for (int j = 1; j <= w; ++j) {
        es.emplace_back(u, p(1, j));
        es.emplace_back(v, p(1, j));
        es.emplace_back(x, p(k, j));
        es.emplace_back(y, p(k, j));
    }
    for (int i = 1; i <= k; ++i)
        for (int j1 = 1; j1 <= w; ++j1)
            for (int j2 = j1 + 1; j2 <= w; ++j2) es.emplace_back(p(i, j1), p(i, j2));
    for (int i = 1; i < k; ++i) {
        for (int j = 1; j <= w; ++j) es.emplace_back(p(i, j), p(i + 1, j));
        for (int j = 2; j <= w; ++j) es.emplace_back(p(i, j), p(i + 1, j - 1));
    }

    std::vector<std::string> labels = {"u", "v", "x", "y"};
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= w; ++j)
            labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");

    FamilyInstance f;
    f.graph = Graph(w * k + 4, es, labels);
    f.family = "Gd";
    f.params = {{"delta", delta}, {"k", k}};
    f.expected = {w * k + 4, delta, std::nullopt, 1, (k - 1) * w + 1, ""};
    return f;
}

FamilyInstance gen_regular(int delta) {
    if (delta < 2) throw bad_param("G(delta) circulant needs delta >= 2");
    const int n = delta + 3;
    std::vector<Edge> cycle;
    for (int i = 0; i < n; ++i) cycle.emplace_back(i, (i + 1) % n);
    FamilyInstance f;
    f.graph = complement_within(n, cycle);
    f.family = "Gdelta";
    f.params = {{"delta", delta}};
    f.expected = {n, delta, delta, 1, 2, ""};
    return f;
}

FamilyInstance gen_D(int k) {
    if (k < 1) throw bad_param("D(k) needs k >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    for (int i = 0; i < k; ++i) {
        const int a = k + 2 * i, b = k + 2 * i + 1;
        es.emplace_back(i, a);
        es.emplace_back(i, b);
        es.emplace_back(a, b);
    }
    FamilyInstance f;
    f.graph = Graph(3 * k, es);
    f.family = "D";
    f.params = {{"k", k}};
    f.expected = {3 * k, 2, std::nullopt, k, 1, k >= 2 ? "" : "extrapolated"};
    return f;
}

namespace {

Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

Graph k33() {
    std::vector<Edge> es;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) es.emplace_back(i, 3 + j);
    return Graph(6, es);
}

Graph f_graph(int delta) {
    switch (delta) {
        case 0: return Graph(3, {});
        case 1: return two_k2();
        case 3: return k33();
        case 6: return join(Graph(3, {}), k33());
        default: return join(two_k2(), f_graph(delta - 4));
    }
}

}  // namespace

FamilyInstance gen_F(int delta) {
    if (delta == 2) throw bad_param("no suitable candidate graph for F(2)");
    if (delta < 0) throw bad_param("F(delta) needs delta >= 0");
    FamilyInstance f;
    f.graph = f_graph(delta);
    f.family = "F";
    f.params = {{"delta", delta}};
    if (delta >= 3)
        f.expected = {delta + 3, delta, std::nullopt, 2, 1, ""};
    else
        f.expected = {delta + 3, delta, std::nullopt, std::nullopt, std::nullopt,
                      "base only - bound claims start at delta >= 3"};
    return f;
}

FamilyInstance gen_S(int p, int g) {
    if (p < 1 || g < 1) throw bad_param("S(p,g) needs p >= 1 and g >= 1");
    auto s = [&](int i) { return i - 1; };             // s_1..s_g
    auto t = [&](int i) { return g + i - 1; };         // t_1..t_{p-1}
    auto xx = [&](int i) { return g + p - 1 + i - 1; };
    auto yy = [&](int i) { return 2 * g + p - 1 + i - 1; };
    auto zz = [&](int i) { return 3 * g + p - 1 + i - 1; };

    const int clique_size = g + p - 1;
    std::vector<Edge> es;
    for (int a = 0; a < clique_size; ++a)
        for (int b = a + 1; b < clique_size; ++b) es.emplace_back(a, b);
    for (int i = 1; i <= g; ++i) {
        es.emplace_back(s(i), xx(i));
        es.emplace_back(s(i), yy(i));
    }
    for (int i = 1; i <= p - 1; ++i) es.emplace_back(t(i), zz(i));
    for (int i = 2; i <= p - 1; ++i) es.emplace_back(t(i - 1), zz(i));

    std::vector<std::string> labels;
    for (int i = 1; i <= g; ++i) labels.push_back("s" + std::to_string(i));
    for (int i = 1; i <= p - 1; ++i) labels.push_back("t" + std::to_string(i));
    for (int i = 1; i <= g; ++i) labels.push_back("x" + std::to_string(i));
    for (int i = 1; i <= g; ++i) labels.push_back("y" + std::to_string(i));
    for (int i = 1; i <= p - 1; ++i) labels.push_back("z" + std::to_string(i));

    FamilyInstance f;
    f.graph = Graph(3 * g + 2 * p - 2, es, labels);
    f.family = "S";
    f.params = {{"p", p}, {"g", g}};
    f.expected = {3 * g + 2 * p - 2, 1, std::nullopt, g, p, ""};
    return f;
}

FamilyInstance gen_H(int Delta, int gamma, int rad) {
    if (Delta < 3) throw bad_param("H(Delta,gamma,rad) needs Delta >= 3");
    if (gamma < 1 || rad < 1) throw bad_param("H(Delta,gamma,rad) needs gamma, rad >= 1");
    const int per = rad * Delta + 1;
    const int n = gamma * per;
    if (n > kMaxVertices) throw size_limit_error("H instance exceeds bitset width");

    auto hub = [&](int i) { return i * per; };
    auto leg = [&](int i, int l, int t) { return i * per + 1 + l * rad + t; };

    std::vector<Edge> es;
    for (int i = 0; i < gamma; ++i) {
        for (int l = 0; l < Delta; ++l) {
            es.emplace_back(hub(i), leg(i, l, 0));
            for (int t = 0; t + 1 < rad; ++t) es.emplace_back(leg(i, l, t), leg(i, l, t + 1));
        }
    }
    for (int i = 0; i + 1 < gamma; ++i)
        es.emplace_back(leg(i, 0, rad - 1), leg(i + 1, 0, rad - 1));

    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int i = 0; i < gamma; ++i) {
        labels[static_cast<size_t>(hub(i))] = "u" + std::to_string(i + 1);
        labels[static_cast<size_t>(leg(i, 0, rad - 1))] = "v" + std::to_string(i + 1);
    }
    for (int v = 0; v < n; ++v)
        if (labels[static_cast<size_t>(v)].empty()) labels[static_cast<size_t>(v)] = std::to_string(v);

    FamilyInstance f;
    f.graph = Graph(n, es, labels);
    f.family = "H";
    f.params = {{"Delta", Delta}, {"gamma", gamma}, {"rad", rad}};
    f.expected = {n, 1, Delta, gamma, rad, ""};
    return f;
}

FamilyInstance make_family(const std::string& name, const std::vector<int>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw bad_param("family " + name + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (name == "K") { need(1); return gen_complete(params[0]); }
    if (name == "K-M") { need(1); return gen_complete_minus_matching(params[0]); }
    if (name == "G2") { need(1); return gen_G2(params[0]); }
    if (name == "G3") { need(1); return gen_G3(params[0]); }
    if (name == "Gd") { need(2); return gen_Gd(params[0], params[1]); }
    if (name == "Gdelta") { need(1); return gen_regular(params[0]); }
    if (name == "D") { need(1); return gen_D(params[0]); }
    if (name == "F") { need(1); return gen_F(params[0]); }
    if (name == "S") { need(2); return gen_S(params[0], params[1]); }
    if (name == "H") { need(3); return gen_H(params[0], params[1], params[2]); }
    throw bad_param("unknown family '" + name + "'");
}

std::vector<std::pair<std::string, int>> family_catalog() {
    return {{"K", 1},  {"K-M", 1}, {"G2", 1}, {"G3", 1}, {"Gd", 2},
            {"Gdelta", 1}, {"D", 1},   {"F", 1},  {"S", 2},  {"H", 3}};
}

}  // namespace powdom
