#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "boxdom/domination.hpp"
#include "boxdom/product.hpp"

namespace boxdom {

// The per-layer projections X_h = p_G(d .. G-layer h) of a product vertex
// set d.  The sizes of the X_h always sum to |d|.
struct LayerProjections {
    int g_universe = 0;
    std::vector<VertexSet> per_layer;

    int n_layers() const { return static_cast<int>(per_layer.size()); }
};

LayerProjections layer_projections(const ProductGraph& p, const VertexSet& d);

// Layers h for which s is a dominating set containing X_h that is minimal
// over X_h.  Returned as a set over {0, ..., n_layers-1}.  Throws
// NotDominating when s does not dominate g.
VertexSet layers_admissible_for(const Graph& g, const VertexSet& s, const LayerProjections& proj);

// Searches for k dominating sets S_1..S_k (repeats allowed) such that every
// layer is admissible for at least one S_i.  Candidates are the minimal
// dominating supersets of the X_h; candidate tuples are tried in
// lexicographic order, so the witness is deterministic.  Returns nullopt
// when no such family exists.
std::optional<std::vector<VertexSet>> find_k_cover(const Graph& g, const LayerProjections& proj,
                                                   int k);

// Same search with minimum dominating sets of g as candidates and plain
// containment X_h subset-of S_i in place of admissibility.
std::optional<std::vector<VertexSet>> find_minimum_cover(const Graph& g,
                                                         const LayerProjections& proj, int k);

struct HypothesisReport {
    int n_layers = 0;

    // One minimal-superset S admissible for every layer.
    bool single_cover = false;
    std::optional<VertexSet> single_witness;

    // Two sets covering the layers by admissibility.
    bool pair_cover = false;
    std::optional<std::pair<VertexSet, VertexSet>> pair_witness;

    // Two minimum dominating sets covering the layers by containment.
    bool min_pair_cover = false;
    std::optional<std::pair<VertexSet, VertexSet>> min_pair_witness;

    // Every layer projection extends to some minimum dominating set.
    bool per_layer_minimum = false;
    std::vector<VertexSet> per_layer_witnesses;

    // Exact minimum family sizes (data, no interpretation): smallest k with
    // an admissibility cover (always <= n_layers), and smallest k with a
    // minimum-set containment cover (absent when impossible).
    int min_cover_k = 0;
    std::optional<int> min_minimum_cover_k;

    // Witnesses per requested k, present for the ks that succeeded.
    std::vector<int> ks_tested;
    std::map<int, std::vector<VertexSet>> k_covers;
};

// Full classification of one dominating set of the product.  Throws
// NotDominating when d does not dominate.  The implications
// single_cover => pair_cover and min_pair_cover => pair_cover are asserted
// internally (their failure would be an implementation bug).
HypothesisReport classify(const ProductGraph& p, const VertexSet& d,
                          const std::vector<int>& ks = {1, 2, 3});

}  // namespace boxdom
