#include "boxdom/graph.hpp"

#include <string>

namespace boxdom {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw IndexOutOfRange("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

std::size_t Graph::check(int v) const {
    if (v < 0 || v >= n_)
        throw IndexOutOfRange("vertex " + std::to_string(v) + " outside graph of order " +
                              std::to_string(n_));
    return static_cast<std::size_t>(v);
}

void Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw InvariantViolation("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
    ++edge_count_;
}

bool Graph::adjacent(int u, int v) const {
    return adj_[check(u)].contains(v) && (check(v), true);
}

VertexSet Graph::closed_neighborhood(int v) const {
    VertexSet out = adj_[check(v)];
    out.insert(v);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

}  // namespace boxdom
