#include "adm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace adm {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adj_.resize(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge rejected");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge rejected");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == n;
}

bool is_regular(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return true;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (color[v] == -1) {
                color[v] = 1 - color[u];
                q.push(v);
            } else if (color[v] == color[u]) {
                return std::nullopt;
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

Graph path(int n) {
    if (n < 2) throw std::invalid_argument("path requires n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    Graph g(n, e);
    g.set_name("path:" + std::to_string(n));
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    Graph g(n, e);
    g.set_name("cycle:" + std::to_string(n));
    return g;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    Graph g(n, e);
    g.set_name("complete:" + std::to_string(n));
    return g;
}

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty requires n >= 1");
    Graph g(n, {});
    g.set_name("empty:" + std::to_string(n));
    return g;
}

Graph star(int n) {
    if (n < 2) throw std::invalid_argument("star requires n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    Graph g(n, e);
    g.set_name("star:" + std::to_string(n));
    return g;
}

Graph double_star(int n1, int n2) {
    if (n1 < 2 || n2 < 2) throw std::invalid_argument("double_star requires n1,n2 >= 2");
    // Centers 0 and 1; leaves 2..n1 hang off 0, the rest off 1.
    std::vector<std::pair<int, int>> e;
    e.emplace_back(0, 1);
    for (int i = 0; i < n1 - 1; ++i) e.emplace_back(0, 2 + i);
    for (int i = 0; i < n2 - 1; ++i) e.emplace_back(1, 1 + n1 + i);
    Graph g(n1 + n2, e);
    g.set_name("double_star:" + std::to_string(n1) + "," + std::to_string(n2));
    return g;
}

Graph hypercube(int k) {
    if (k < 1 || k > 6) throw std::invalid_argument("hypercube requires 1 <= k <= 6");
    const int n = 1 << k;
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < k; ++b) {
            int v = u ^ (1 << b);
            if (u < v) e.emplace_back(u, v);
        }
    Graph g(n, e);
    g.set_name("hypercube:" + std::to_string(k));
    return g;
}

Graph petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, i + 5);
    }
    Graph g(10, e);
    g.set_name("petersen");
    return g;
}

Graph frucht() {
    // Hamiltonian cycle 0..11 plus LCF chords.
    static const int lcf[12] = {-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2};
    std::set<std::pair<int, int>> chords;
    for (int i = 0; i < 12; ++i) {
        int j = ((i + lcf[i]) % 12 + 12) % 12;
        chords.insert(std::minmax(i, j));
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 12; ++i) e.emplace_back(i, (i + 1) % 12);
    for (auto& c : chords) e.push_back(c);
    Graph g(12, e);
    g.set_name("frucht");
    return g;
}

Graph hexagonal_prism() {
    // Two hexagonal rims (layer = 0, 1) joined by spokes.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 6; ++i) {
        int j = (i + 1) % 6;
        e.emplace_back(2 * i, 2 * j);
        e.emplace_back(2 * i + 1, 2 * j + 1);
        e.emplace_back(2 * i, 2 * i + 1);
    }
    Graph g(12, e);
    g.set_name("hexagonal_prism");
    return g;
}

namespace {

std::vector<int> parse_int_args(const std::string& args, const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad family parameter in '" + spec + "'");
        }
    }
    return out;
}

}  // namespace

Graph family(const std::string& spec) {
    std::string name = spec, args;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }
    auto ints = parse_int_args(args, spec);
    auto want = [&](size_t k) {
        if (ints.size() != k)
            throw std::invalid_argument("family '" + name + "' takes " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (name == "path") { want(1); return path(ints[0]); }
    if (name == "cycle") { want(1); return cycle(ints[0]); }
    if (name == "complete") { want(1); return complete(ints[0]); }
    if (name == "empty") { want(1); return empty_graph(ints[0]); }
    if (name == "star") { want(1); return star(ints[0]); }
    if (name == "double_star") { want(2); return double_star(ints[0], ints[1]); }
    if (name == "hypercube") { want(1); return hypercube(ints[0]); }
    if (name == "petersen") { want(0); return petersen(); }
    if (name == "frucht") { want(0); return frucht(); }
    if (name == "hexagonal_prism") { want(0); return hexagonal_prism(); }
    throw std::invalid_argument("unknown family '" + name + "'");
}

Graph read_edge_list(std::istream& in) {
    auto next_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) throw std::runtime_error("edge list: missing header line");
    std::istringstream hs(line);
    int n = 0, m = 0;
    if (!(hs >> n >> m)) throw std::runtime_error("edge list: bad header line");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!next_line(line)) throw std::runtime_error("edge list: fewer edges than declared");
        std::istringstream es(line);
        int u = 0, v = 0;
        if (!(es >> u >> v)) throw std::runtime_error("edge list: bad edge line '" + line + "'");
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    Graph g = read_edge_list(f);
    g.set_name(path);
    return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    if (!g.name().empty()) out << "# " << g.name() << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace adm
