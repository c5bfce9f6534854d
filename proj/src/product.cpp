#include "boxdom/product.hpp"

#include <string>

#include "boxdom/errors.hpp"

namespace boxdom {

int ProductGraph::encode(int gv, int hv) const {
    if (gv < 0 || gv >= n_g() || hv < 0 || hv >= n_h())
        throw IndexOutOfRange("product coordinate (" + std::to_string(gv) + "," +
                              std::to_string(hv) + ") outside " + std::to_string(n_g()) + "x" +
                              std::to_string(n_h()));
    return gv + hv * n_g();
}

std::pair<int, int> ProductGraph::decode(int v) const {
    if (v < 0 || v >= n())
        throw IndexOutOfRange("product vertex " + std::to_string(v) + " outside order " +
                              std::to_string(n()));
    return {v % n_g(), v / n_g()};
}

VertexSet ProductGraph::g_layer(int hv) const {
    if (hv < 0 || hv >= n_h())
        throw IndexOutOfRange("h-coordinate " + std::to_string(hv) + " outside " +
                              std::to_string(n_h()));
    VertexSet out(n());
    for (int gv = 0; gv < n_g(); ++gv) out.insert(gv + hv * n_g());
    return out;
}

VertexSet ProductGraph::h_layer(int gv) const {
    if (gv < 0 || gv >= n_g())
        throw IndexOutOfRange("g-coordinate " + std::to_string(gv) + " outside " +
                              std::to_string(n_g()));
    VertexSet out(n());
    for (int hv = 0; hv < n_h(); ++hv) out.insert(gv + hv * n_g());
    return out;
}

VertexSet ProductGraph::project_g(const VertexSet& s) const {
    if (s.universe() != n()) throw UniverseMismatch("set is not over the product vertex set");
    VertexSet out(n_g());
    s.for_each([&](int v) { out.insert(v % n_g()); });
    return out;
}

VertexSet ProductGraph::project_h(const VertexSet& s) const {
    if (s.universe() != n()) throw UniverseMismatch("set is not over the product vertex set");
    VertexSet out(n_h());
    s.for_each([&](int v) { out.insert(v / n_g()); });
    return out;
}

ProductGraph cartesian_product(const Graph& g, const Graph& h, int max_product) {
    if (g.n() > kMaxFactorVertices || h.n() > kMaxFactorVertices)
        throw Oversize("factor exceeds " + std::to_string(kMaxFactorVertices) + " vertices");
    const long long order = static_cast<long long>(g.n()) * h.n();
    if (order > max_product)
        throw Oversize("product on " + std::to_string(order) + " vertices exceeds cap of " +
                       std::to_string(max_product));

    Graph p(static_cast<int>(order));
    const int ng = g.n();
    for (int hv = 0; hv < h.n(); ++hv) {
        for (int gv = 0; gv < ng; ++gv) {
            const int base = gv + hv * ng;
            g.neighbors(gv).for_each([&](int gu) {
                if (gu > gv) p.add_edge(base, gu + hv * ng);
            });
            h.neighbors(hv).for_each([&](int hu) {
                if (hu > hv) p.add_edge(base, gv + hu * ng);
            });
        }
    }
    return ProductGraph(g, h, std::move(p));
}

}  // namespace boxdom
