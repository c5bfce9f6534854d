#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "boxdom/vertex_set.hpp"

namespace boxdom {

// Factor graphs must fit in one adjacency word; products in 64 words.
inline constexpr int kMaxFactorVertices = 64;
inline constexpr int kMaxProductVertices = 4096;

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Built once via add_edge, then treated as immutable.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    int degree(int v) const { return adj_[check(v)].size(); }

    // Open neighborhood N(v).
    const VertexSet& neighbors(int v) const { return adj_[check(v)]; }

    // Closed neighborhood N[v] = N(v) + v.
    VertexSet closed_neighborhood(int v) const;

    // Edges as (u, v) pairs with u < v, in increasing order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

  private:
    std::size_t check(int v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

}  // namespace boxdom
