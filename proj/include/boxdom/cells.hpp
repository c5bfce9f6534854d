#pragma once

#include <vector>

#include "boxdom/product.hpp"

namespace boxdom {

// A partition of V(G) into cells guided by an ordered minimum dominating set
// {g_1, ..., g_k}: part i satisfies parts[i] subset-of N[g_i] and the parts
// partition V(G).  Construct via build_cells (canonical smallest-index
// assignment) or cells_from_parts (explicit partition, validated).
struct CellPartition {
    std::vector<int> dominators;
    std::vector<VertexSet> parts;

    int k() const { return static_cast<int>(dominators.size()); }
};

// Canonical partition: each vertex goes to the part of the first dominator
// (in list order) whose closed neighborhood contains it.  Throws
// NotDominating when the list does not dominate g and NotMinimum when it is
// larger than gamma(g).
CellPartition build_cells(const Graph& g, const std::vector<int>& dominators);

// Explicit partition for experiments, fully validated against the same
// invariants (dominators minimum dominating, parts[i] within N[g_i], parts
// partition V(G)).
CellPartition cells_from_parts(const Graph& g, std::vector<int> dominators,
                               std::vector<VertexSet> parts);

// A product vertex (g,h) is vertically dominated by d when d contains
// (g,h') for some h' in N_H[h], and horizontally dominated when d contains
// (g',h) for some g' in N_G[g].
bool vertically_dominated(const ProductGraph& p, const VertexSet& d, int v);
bool horizontally_dominated(const ProductGraph& p, const VertexSet& d, int v);

// The double-counting data for a dominating set d of the product and a cell
// partition of G: cell (i,h) = parts[i] x {h} is vertically undominated when
// it has no vertically dominated vertex; n_per_i counts such h per i,
// m_per_h counts such i per h.  The two totals agree by construction.
struct CSCertificate {
    std::vector<int> dominators;
    std::vector<int> n_per_i;
    std::vector<int> m_per_h;
    int d_size = 0;
    int gamma_g = 0;
    int gamma_h = 0;

    int n_total() const;
    int m_total() const;
};

// Computes the certificate.  Throws NotDominating when d does not dominate
// the product; InvariantViolation if the two count totals disagree.
CSCertificate undominated_cell_counts(const ProductGraph& p, const VertexSet& d,
                                      const CellPartition& cells);

struct CSOutcome {
    CSCertificate cert;
    // Slack of |d| + sum_i n_i >= gamma(G) gamma(H).
    int eq1_slack = 0;
    // Slack of |d| >= sum_h m_h.
    int eq2_slack = 0;
    bool half_bound_tight = false;  // 2|d| == gamma(G) gamma(H)
};

// Verifies the full double-counting argument on one instance:
//   (a) per part i:   |d .. parts[i] x V(H)| + n_i >= gamma(H)
//   (b) per layer h:  |d .. G-layer h| >= m_h, justified by checking that
//       X_h together with the dominators of the vertically dominated cells
//       dominates G (and is a minimum dominating set when (b) is tight)
//   (c) 2|d| >= gamma(G) gamma(H), with tightness forcing both slacks to 0.
// Any failed check throws InvariantViolation: these are consequences of the
// construction, so a failure means an implementation bug, not bad data.
CSOutcome verify_clark_suen(const ProductGraph& p, const VertexSet& d, const CellPartition& cells);

}  // namespace boxdom
