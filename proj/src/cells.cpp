#include "boxdom/cells.hpp"

#include <numeric>
#include <string>

#include "boxdom/domination.hpp"
#include "boxdom/errors.hpp"

namespace boxdom {

namespace {

void check_dominators(const Graph& g, const std::vector<int>& dominators) {
    VertexSet as_set(g.n());
    for (int v : dominators) as_set.insert(v);  // insert range-checks
    if (!is_dominating(g, as_set))
        throw NotDominating("dominator list does not dominate the graph");
    const int gamma = gamma_exact(g).gamma;
    if (static_cast<int>(dominators.size()) != gamma)
        throw NotMinimum("dominator list has " + std::to_string(dominators.size()) +
                         " entries, gamma is " + std::to_string(gamma));
}

}  // namespace

int CSCertificate::n_total() const { return std::accumulate(n_per_i.begin(), n_per_i.end(), 0); }
int CSCertificate::m_total() const { return std::accumulate(m_per_h.begin(), m_per_h.end(), 0); }

CellPartition build_cells(const Graph& g, const std::vector<int>& dominators) {
    check_dominators(g, dominators);
    CellPartition cells{dominators, {}};
    cells.parts.assign(dominators.size(), VertexSet(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        for (std::size_t i = 0; i < dominators.size(); ++i) {
            if (v == dominators[i] || g.adjacent(v, dominators[i])) {
                cells.parts[i].insert(v);
                break;
            }
        }
    }
    return cells;
}

CellPartition cells_from_parts(const Graph& g, std::vector<int> dominators,
                               std::vector<VertexSet> parts) {
    check_dominators(g, dominators);
    if (parts.size() != dominators.size())
        throw InvariantViolation("partition must have one part per dominator");
    VertexSet seen(g.n());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].subset_of(g.closed_neighborhood(dominators[i])))
            throw InvariantViolation("part " + std::to_string(i) +
                                     " leaves the closed neighborhood of its dominator");
        if (seen.intersects(parts[i]))
            throw InvariantViolation("parts overlap at part " + std::to_string(i));
        seen |= parts[i];
    }
    if (seen != VertexSet::full(g.n()))
        throw InvariantViolation("parts do not cover the vertex set");
    return CellPartition{std::move(dominators), std::move(parts)};
}

bool vertically_dominated(const ProductGraph& p, const VertexSet& d, int v) {
    if (d.universe() != p.n()) throw UniverseMismatch("set is not over the product vertex set");
    auto [gv, hv] = p.decode(v);
    if (d.contains(v)) return true;
    bool hit = false;
    p.h().neighbors(hv).for_each([&](int hu) {
        if (d.contains(p.encode(gv, hu))) hit = true;
    });
    return hit;
}

bool horizontally_dominated(const ProductGraph& p, const VertexSet& d, int v) {
    if (d.universe() != p.n()) throw UniverseMismatch("set is not over the product vertex set");
    auto [gv, hv] = p.decode(v);
    if (d.contains(v)) return true;
    bool hit = false;
    p.g().neighbors(gv).for_each([&](int gu) {
        if (d.contains(p.encode(gu, hv))) hit = true;
    });
    return hit;
}

CSCertificate undominated_cell_counts(const ProductGraph& p, const VertexSet& d,
                                      const CellPartition& cells) {
    if (!is_dominating(p.graph(), d))
        throw NotDominating("set does not dominate the product");
    CSCertificate cert;
    cert.dominators = cells.dominators;
    cert.d_size = d.size();
    cert.gamma_g = cells.k();
    cert.gamma_h = gamma_exact(p.h()).gamma;
    cert.n_per_i.assign(cells.parts.size(), 0);
    cert.m_per_h.assign(static_cast<std::size_t>(p.n_h()), 0);
    for (std::size_t i = 0; i < cells.parts.size(); ++i) {
        for (int hv = 0; hv < p.n_h(); ++hv) {
            bool any_vertical = false;
            cells.parts[i].for_each([&](int gv) {
                if (!any_vertical && vertically_dominated(p, d, p.encode(gv, hv)))
                    any_vertical = true;
            });
            if (!any_vertical) {
                ++cert.n_per_i[i];
                ++cert.m_per_h[static_cast<std::size_t>(hv)];
            }
        }
    }
    if (cert.n_total() != cert.m_total())
        throw InvariantViolation("cell count totals disagree: " +
                                 std::to_string(cert.n_total()) + " vs " +
                                 std::to_string(cert.m_total()));
    return cert;
}

CSOutcome verify_clark_suen(const ProductGraph& p, const VertexSet& d,
                            const CellPartition& cells) {
    CSOutcome out;
    out.cert = undominated_cell_counts(p, d, cells);
    const CSCertificate& cert = out.cert;
    const int gg = cert.gamma_g, gh = cert.gamma_h;

    // (a) Each slab parts[i] x V(H) carries at least gamma(H) of d once the
    // vertically undominated layers are added back.
    for (std::size_t i = 0; i < cells.parts.size(); ++i) {
        int in_slab = 0;
        cells.parts[i].for_each([&](int gv) {
            for (int hv = 0; hv < p.n_h(); ++hv)
                if (d.contains(p.encode(gv, hv))) ++in_slab;
        });
        if (in_slab + cert.n_per_i[i] < gh)
            throw InvariantViolation("slab " + std::to_string(i) + " carries " +
                                     std::to_string(in_slab) + " + " +
                                     std::to_string(cert.n_per_i[i]) + " < gamma(H)");
    }

    // (b) Each G-layer carries at least m_h of d.  Justification checked as
    // well: the layer projection plus the dominators of the vertically
    // dominated cells must dominate G, and tightness makes that set minimum.
    int d_total = 0;
    for (int hv = 0; hv < p.n_h(); ++hv) {
        VertexSet x_h(p.n_g());
        int in_layer = 0;
        for (int gv = 0; gv < p.n_g(); ++gv) {
            if (d.contains(p.encode(gv, hv))) {
                x_h.insert(gv);
                ++in_layer;
            }
        }
        d_total += in_layer;
        const int m_h = cert.m_per_h[static_cast<std::size_t>(hv)];
        if (in_layer < m_h)
            throw InvariantViolation("layer " + std::to_string(hv) + " carries " +
                                     std::to_string(in_layer) + " < m_h = " +
                                     std::to_string(m_h));
        VertexSet replacement = x_h;
        for (std::size_t i = 0; i < cells.parts.size(); ++i) {
            bool cell_undominated = true;
            cells.parts[i].for_each([&](int gv) {
                if (cell_undominated && vertically_dominated(p, d, p.encode(gv, hv)))
                    cell_undominated = false;
            });
            if (!cell_undominated) replacement.insert(cells.dominators[i]);
        }
        if (!is_dominating(p.g(), replacement))
            throw InvariantViolation("layer " + std::to_string(hv) +
                                     ": projection plus dominated-cell dominators fails to "
                                     "dominate G");
        if (in_layer == m_h && replacement.size() != gg)
            throw InvariantViolation("layer " + std::to_string(hv) +
                                     ": tight layer did not yield a minimum dominating set");
    }
    if (d_total != cert.d_size)
        throw InvariantViolation("G-layers do not partition d");

    out.eq1_slack = cert.d_size + cert.n_total() - gg * gh;
    out.eq2_slack = cert.d_size - cert.m_total();
    if (out.eq1_slack < 0)
        throw InvariantViolation("aggregate slab inequality failed");
    if (out.eq2_slack < 0)
        throw InvariantViolation("aggregate layer inequality failed");
    if (2 * cert.d_size < gg * gh)
        throw InvariantViolation("half bound failed: 2*" + std::to_string(cert.d_size) + " < " +
                                 std::to_string(gg) + "*" + std::to_string(gh));
    out.half_bound_tight = (2 * cert.d_size == gg * gh);
    if (out.half_bound_tight && (out.eq1_slack != 0 || out.eq2_slack != 0))
        throw InvariantViolation("half bound tight but slack nonzero");
    return out;
}

}  // namespace boxdom
