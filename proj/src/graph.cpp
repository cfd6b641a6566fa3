#include "repdim/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <sstream>

#include "repdim/errors.hpp"

namespace repdim {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, false) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("self-loops not allowed");
    adj_[idx(u, v)] = true;
    adj_[idx(v, u)] = true;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (adj_[idx(v, u)]) ++d;
    return d;
}

int Graph::edge_count() const {
    int e = 0;
    for (int v = 0; v < n_; ++v) e += degree(v);
    return e / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Eigen::MatrixXd Graph::adjacency() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (adjacent(u, v)) a(u, v) = 1.0;
    return a;
}

// ---------------------------------------------------------------- graph6

namespace {

void check_g6_char(char c, size_t offset) {
    if (c < 63 || c > 126)
        throw ParseError("graph6: character out of range 63..126 at byte " +
                         std::to_string(offset));
}

} // namespace

Graph parse_graph6(std::string_view text) {
    // strip a trailing newline, common in .g6 files
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    size_t pos = 0;
    auto need = [&](size_t k) {
        if (text.size() - pos < k)
            throw ParseError("graph6: truncated input at byte " + std::to_string(text.size()));
    };

    for (size_t i = 0; i < text.size(); ++i) check_g6_char(text[i], i);

    long long n;
    if (text[pos] != '~') {
        n = text[pos] - 63;
        ++pos;
    } else {
        ++pos;
        need(1);
        if (text[pos] != '~') {
            need(3);
            n = 0;
            for (int i = 0; i < 3; ++i) n = (n << 6) | (text[pos + i] - 63);
            pos += 3;
        } else {
            ++pos;
            need(6);
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | (text[pos + i] - 63);
            pos += 6;
        }
    }
    if (n > 100000) throw ParseError("graph6: vertex count too large");

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() - pos != nbytes)
        throw ParseError("graph6: expected " + std::to_string(nbytes) +
                         " adjacency bytes, got " + std::to_string(text.size() - pos) +
                         " at byte " + std::to_string(pos));

    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            int byte = text[pos + bit / 6] - 63;
            int shift = 5 - static_cast<int>(bit % 6);
            if ((byte >> shift) & 1) g.add_edge(u, v);
            ++bit;
        }
    }
    // padding bits must be zero
    for (; bit < static_cast<long long>(nbytes) * 6; ++bit) {
        int byte = text[pos + bit / 6] - 63;
        int shift = 5 - static_cast<int>(bit % 6);
        if ((byte >> shift) & 1)
            throw ParseError("graph6: nonzero padding bit at byte " +
                             std::to_string(pos + bit / 6));
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    std::string out;
    long long n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int i = 2; i >= 0; --i)
            out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int i = 5; i >= 0; --i)
            out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

// ---------------------------------------------------------------- edge list

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    long long n = -1;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        std::istringstream ls(line.substr(b, e - b + 1));
        if (n < 0) {
            if (!(ls >> n) || n < 0 || !(ls >> std::ws).eof())
                throw ParseError("edge list: bad vertex count on line " + std::to_string(lineno));
            g = Graph(static_cast<int>(n));
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v) || !(ls >> std::ws).eof())
            throw ParseError("edge list: expected 'u v' on line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: vertex out of range on line " + std::to_string(lineno));
        if (u == v)
            throw ParseError("edge list: self-loop on line " + std::to_string(lineno));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("edge list: missing vertex count line");
    return g;
}

// ---------------------------------------------------------------- constructions

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n >= 1 required");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty_graph: n >= 1 required");
    return Graph(n);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n >= 1 required");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);         // outer pentagon
        g.add_edge(5 + v, 5 + (v + 2) % 5); // inner pentagram
        g.add_edge(v, 5 + v);               // spokes
    }
    return g;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.n();
    Graph g(n);
    int base = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(base + u, base + v);
        base += p.n();
    }
    return g;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    if (es.empty()) throw std::invalid_argument("line_graph: input has no edges");
    Graph lg(static_cast<int>(es.size()));
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                lg.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return lg;
}

// ---------------------------------------------------------------- classifiers

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u = 0; u < g.n(); ++u)
                if (g.adjacent(v, u) && !seen[u]) {
                    seen[u] = true;
                    q.push(u);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<CliqueUnionInfo> classify_clique_union(const Graph& g) {
    auto comps = connected_components(g);
    CliqueUnionInfo info;
    for (const auto& comp : comps) {
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (!g.adjacent(comp[i], comp[j])) return std::nullopt;
        info.component_sizes.push_back(static_cast<int>(comp.size()));
    }
    std::sort(info.component_sizes.begin(), info.component_sizes.end(), std::greater<>());
    if (info.component_sizes.empty()) return std::nullopt; // n = 0
    int mx = info.component_sizes.front();
    info.r = static_cast<int>(std::count(info.component_sizes.begin(),
                                         info.component_sizes.end(), mx));
    return info;
}

std::optional<int> regularity(const Graph& g) {
    if (g.n() == 0) return 0;
    int k = g.degree(0);
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

int bipartite_component_count(const Graph& g) {
    int count = 0;
    std::vector<int> color(g.n(), -1);
    for (const auto& comp : connected_components(g)) {
        bool bip = true;
        color[comp[0]] = 0;
        std::queue<int> q;
        q.push(comp[0]);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u = 0; u < g.n(); ++u) {
                if (!g.adjacent(v, u)) continue;
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    q.push(u);
                } else if (color[u] == color[v]) {
                    bip = false;
                }
            }
        }
        if (bip) ++count;
    }
    return count;
}

bool is_complete(const Graph& g) {
    return g.edge_count() == g.n() * (g.n() - 1) / 2;
}

bool is_empty(const Graph& g) { return g.edge_count() == 0; }

} // namespace repdim
