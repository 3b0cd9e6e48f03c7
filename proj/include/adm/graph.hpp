#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adm {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Instances are immutable after construction.
class Graph {
public:
    Graph() = default;

    // Validates the edge list: rejects loops, out-of-range endpoints and
    // duplicate edges.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    const std::string& name() const { return name_; }
    void set_name(std::string s) { name_ = std::move(s); }

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
    std::string name_;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g);

// The two color classes of a connected bipartite graph (class containing
// vertex 0 first), or nullopt if the graph has an odd cycle.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

// --- named families (canonical labelings documented per generator) ---

Graph path(int n);               // vertices 0..n-1 in path order, n >= 2
Graph cycle(int n);              // i ~ (i+1) mod n, n >= 3
Graph complete(int n);           // n >= 1
Graph empty_graph(int n);        // n isolated vertices (join/lexicographic factor)
Graph star(int n);               // center 0, leaves 1..n-1, n >= 2
Graph double_star(int n1, int n2);  // centers 0 and 1, n1,n2 >= 2
Graph hypercube(int k);          // masks 0..2^k-1, 1 <= k <= 6
Graph petersen();
Graph frucht();
Graph hexagonal_prism();         // (ring position i, layer l) -> 2i + l

// Parses "cycle:6", "double_star:3,4", "frucht", ... into the family instance.
Graph family(const std::string& spec);

// --- edge-list file format: "n m" header, then one "u v" line per edge;
//     lines starting with '#' are ignored ---

Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace adm
