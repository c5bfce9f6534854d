#pragma once

#include "boxdom/graph.hpp"

namespace boxdom {

// Small parametric families used by tests and by sweep factor sources.

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw IndexOutOfRange("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Star on n vertices: center 0, leaves 1..n-1.
inline Graph star_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

}  // namespace boxdom
