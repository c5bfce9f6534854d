#pragma once

#include <utility>

#include "boxdom/graph.hpp"

namespace boxdom {

// Cartesian product G box H with the fixed vertex encoding
//
//     (g, h)  <->  g + h * n_G
//
// so each G-layer (fixed h) is a contiguous block of indices and each
// H-layer (fixed g) is a stride-n_G progression.  The factors are kept so
// layer and neighborhood queries never have to re-derive them.
class ProductGraph {
  public:
    ProductGraph(Graph g, Graph h, Graph product)
        : g_(std::move(g)), h_(std::move(h)), product_(std::move(product)) {}

    const Graph& g() const { return g_; }
    const Graph& h() const { return h_; }
    const Graph& graph() const { return product_; }

    int n_g() const { return g_.n(); }
    int n_h() const { return h_.n(); }
    int n() const { return product_.n(); }

    int encode(int gv, int hv) const;
    std::pair<int, int> decode(int v) const;
    int g_coord(int v) const { return decode(v).first; }
    int h_coord(int v) const { return decode(v).second; }

    // G-layer for a fixed h: all (g, h), g in V(G).
    VertexSet g_layer(int hv) const;

    // H-layer for a fixed g: all (g, h), h in V(H).
    VertexSet h_layer(int gv) const;

    // Projections of a product vertex set onto a factor.
    VertexSet project_g(const VertexSet& s) const;
    VertexSet project_h(const VertexSet& s) const;

  private:
    Graph g_;
    Graph h_;
    Graph product_;
};

// Builds G box H: (g,h) ~ (g',h') iff (g = g' and h ~ h') or (h = h' and
// g ~ g').  Throws Oversize when a factor exceeds kMaxFactorVertices or the
// product would exceed max_product vertices.
ProductGraph cartesian_product(const Graph& g, const Graph& h,
                               int max_product = kMaxProductVertices);

}  // namespace boxdom
