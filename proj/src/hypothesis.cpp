#include "boxdom/hypothesis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "boxdom/errors.hpp"

namespace boxdom {

namespace {

struct CandidatePool {
    std::vector<VertexSet> sets;          // sorted lexicographically, deduplicated
    std::vector<std::uint64_t> covers;    // covers[i] = layers satisfied by sets[i]
    std::uint64_t all_layers = 0;
};

void sort_dedupe(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), lex_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// First non-decreasing index tuple (i_1 <= ... <= i_k), in lexicographic
// order, whose candidate layer masks cover every layer.
std::optional<std::vector<int>> first_covering_tuple(const CandidatePool& pool, int k) {
    if (pool.all_layers == 0) return std::vector<int>{};
    if (k <= 0 || pool.sets.empty()) return std::nullopt;
    const int c = static_cast<int>(pool.sets.size());
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    while (true) {
        std::uint64_t covered = 0;
        for (int i : idx) covered |= pool.covers[static_cast<std::size_t>(i)];
        if (covered == pool.all_layers) return idx;
        int j = k - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == c - 1) --j;
        if (j < 0) return std::nullopt;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < k; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(j)];
    }
}

std::optional<std::vector<VertexSet>> materialize(const CandidatePool& pool,
                                                  const std::optional<std::vector<int>>& idx) {
    if (!idx) return std::nullopt;
    std::vector<VertexSet> out;
    out.reserve(idx->size());
    for (int i : *idx) out.push_back(pool.sets[static_cast<std::size_t>(i)]);
    return out;
}

// Exact smallest family size by breadth-first search over reachable layer
// unions.  Returns nullopt when some layer is covered by no candidate.
std::optional<int> min_cover_size(const CandidatePool& pool) {
    if (pool.all_layers == 0) return 0;
    std::unordered_set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> frontier{0};
    const int max_k = std::popcount(pool.all_layers);
    for (int k = 1; k <= max_k; ++k) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t got : frontier) {
            for (std::uint64_t add : pool.covers) {
                const std::uint64_t u = got | add;
                if (u == pool.all_layers) return k;
                if (seen.insert(u).second) next.push_back(u);
            }
        }
        if (next.empty()) return std::nullopt;
        frontier = std::move(next);
    }
    return std::nullopt;
}

// Candidates for admissibility covers: every minimal dominating superset of
// any layer projection, scored against all layers.
CandidatePool admissibility_pool(const Graph& g, const LayerProjections& proj) {
    CandidatePool pool;
    for (const VertexSet& x : proj.per_layer) {
        auto members = minimal_dominating_containing(g, x);
        pool.sets.insert(pool.sets.end(), members.begin(), members.end());
    }
    sort_dedupe(pool.sets);
    pool.covers.assign(pool.sets.size(), 0);
    for (std::size_t i = 0; i < pool.sets.size(); ++i)
        for (int h = 0; h < proj.n_layers(); ++h)
            if (is_minimal_dominating_containing(g, pool.sets[i],
                                                 proj.per_layer[static_cast<std::size_t>(h)]))
                pool.covers[i] |= 1ULL << h;
    if (proj.n_layers() > 0)
        pool.all_layers = proj.n_layers() == 64 ? ~0ULL : (1ULL << proj.n_layers()) - 1;
    return pool;
}

// Candidates for containment covers: the minimum dominating sets of g.
CandidatePool containment_pool(const Graph& g, const LayerProjections& proj) {
    CandidatePool pool;
    pool.sets = minimum_dominating_sets(g);
    pool.covers.assign(pool.sets.size(), 0);
    for (std::size_t i = 0; i < pool.sets.size(); ++i)
        for (int h = 0; h < proj.n_layers(); ++h)
            if (proj.per_layer[static_cast<std::size_t>(h)].subset_of(pool.sets[i]))
                pool.covers[i] |= 1ULL << h;
    if (proj.n_layers() > 0)
        pool.all_layers = proj.n_layers() == 64 ? ~0ULL : (1ULL << proj.n_layers()) - 1;
    return pool;
}

}  // namespace

LayerProjections layer_projections(const ProductGraph& p, const VertexSet& d) {
    if (d.universe() != p.n()) throw UniverseMismatch("set is not over the product vertex set");
    LayerProjections proj;
    proj.g_universe = p.n_g();
    proj.per_layer.reserve(static_cast<std::size_t>(p.n_h()));
    for (int hv = 0; hv < p.n_h(); ++hv) proj.per_layer.push_back(p.project_g(d & p.g_layer(hv)));
    return proj;
}

VertexSet layers_admissible_for(const Graph& g, const VertexSet& s,
                                const LayerProjections& proj) {
    if (!is_dominating(g, s)) throw NotDominating("set does not dominate the factor");
    VertexSet out(proj.n_layers());
    for (int h = 0; h < proj.n_layers(); ++h)
        if (is_minimal_dominating_containing(g, s, proj.per_layer[static_cast<std::size_t>(h)]))
            out.insert(h);
    return out;
}

std::optional<std::vector<VertexSet>> find_k_cover(const Graph& g, const LayerProjections& proj,
                                                   int k) {
    const CandidatePool pool = admissibility_pool(g, proj);
    return materialize(pool, first_covering_tuple(pool, k));
}

std::optional<std::vector<VertexSet>> find_minimum_cover(const Graph& g,
                                                         const LayerProjections& proj, int k) {
    const CandidatePool pool = containment_pool(g, proj);
    return materialize(pool, first_covering_tuple(pool, k));
}

HypothesisReport classify(const ProductGraph& p, const VertexSet& d, const std::vector<int>& ks) {
    if (!is_dominating(p.graph(), d)) throw NotDominating("set does not dominate the product");
    const LayerProjections proj = layer_projections(p, d);

    HypothesisReport rep;
    rep.n_layers = proj.n_layers();

    const CandidatePool adm = admissibility_pool(p.g(), proj);
    if (auto w = materialize(adm, first_covering_tuple(adm, 1))) {
        rep.single_cover = true;
        if (!w->empty()) rep.single_witness = (*w)[0];
    }
    if (auto w = materialize(adm, first_covering_tuple(adm, 2))) {
        rep.pair_cover = true;
        if (w->size() >= 2) rep.pair_witness = {(*w)[0], (*w)[1]};
    }
    rep.ks_tested = ks;
    std::sort(rep.ks_tested.begin(), rep.ks_tested.end());
    rep.ks_tested.erase(std::unique(rep.ks_tested.begin(), rep.ks_tested.end()),
                        rep.ks_tested.end());
    for (int k : rep.ks_tested)
        if (auto w = materialize(adm, first_covering_tuple(adm, k))) rep.k_covers[k] = *w;
    const std::optional<int> mk = min_cover_size(adm);
    if (!mk) throw InvariantViolation("a layer projection has no minimal dominating superset");
    rep.min_cover_k = *mk;

    const CandidatePool cont = containment_pool(p.g(), proj);
    if (auto w = materialize(cont, first_covering_tuple(cont, 2))) {
        rep.min_pair_cover = true;
        if (w->size() >= 2) rep.min_pair_witness = {(*w)[0], (*w)[1]};
    }
    rep.per_layer_minimum = true;
    for (int h = 0; h < proj.n_layers(); ++h) {
        const VertexSet& x = proj.per_layer[static_cast<std::size_t>(h)];
        bool found = false;
        for (const VertexSet& m : cont.sets) {
            if (x.subset_of(m)) {
                rep.per_layer_witnesses.push_back(m);
                found = true;
                break;
            }
        }
        if (!found) {
            rep.per_layer_minimum = false;
            rep.per_layer_witnesses.clear();
            break;
        }
    }
    rep.min_minimum_cover_k = min_cover_size(cont);

    if (rep.single_cover && !rep.pair_cover)
        throw InvariantViolation("single cover exists but pair cover search failed");
    if (rep.min_pair_cover && !rep.pair_cover)
        throw InvariantViolation("minimum pair cover exists but pair cover search failed");
    if (rep.per_layer_minimum != rep.min_minimum_cover_k.has_value())
        throw InvariantViolation("per-layer containment and containment cover disagree");
    return rep;
}

}  // namespace boxdom
