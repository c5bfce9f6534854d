#include "boxdom/domination.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "boxdom/errors.hpp"

namespace boxdom {

namespace {

// Closed neighborhoods as single words, for the n <= 64 solvers.
std::vector<std::uint64_t> closed_words(const Graph& g) {
    std::vector<std::uint64_t> closed(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) {
        std::uint64_t w = g.neighbors(v).word(0);
        closed[static_cast<std::size_t>(v)] = w | (1ULL << v);
    }
    return closed;
}

std::uint64_t full_word(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

VertexSet set_from_word(int n, std::uint64_t word) {
    VertexSet s(n);
    while (word) {
        s.insert(__builtin_ctzll(word));
        word &= word - 1;
    }
    return s;
}

// Enumerates size-k subsets of 0..n-1 in lexicographic order, calling
// fn(mask) for each; fn returns true to stop early.
template <typename Fn>
void for_each_combination(int n, int k, Fn fn) {
    if (k > n || k < 0) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= 1ULL << i;
        if (fn(mask)) return;
        // Advance to the next combination.
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

struct BranchState {
    const std::vector<std::uint64_t>& closed;
    std::uint64_t full;
    int n;
    std::uint64_t best;
    int best_size;
    std::uint64_t nodes;
};

void branch(BranchState& st, std::uint64_t chosen, int count, std::uint64_t dominated,
            std::uint64_t excluded) {
    ++st.nodes;
    if (dominated == st.full) {
        if (count < st.best_size) {
            st.best = chosen;
            st.best_size = count;
        }
        return;
    }
    const std::uint64_t undom = st.full & ~dominated;
    const int undom_count = std::popcount(undom);

    // Coverage-capacity lower bound: each further pick dominates at most
    // max_cover new vertices.  Also catch branches where some vertex can no
    // longer be dominated by any allowed pick.
    std::uint64_t coverable = 0;
    int max_cover = 0;
    std::uint64_t allowed = st.full & ~excluded;
    for (std::uint64_t m = allowed; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        std::uint64_t gain = st.closed[static_cast<std::size_t>(v)] & undom;
        coverable |= gain;
        max_cover = std::max(max_cover, std::popcount(gain));
    }
    if ((undom & ~coverable) != 0 || max_cover == 0) return;
    if (count + (undom_count + max_cover - 1) / max_cover >= st.best_size) return;

    const int u = __builtin_ctzll(undom);
    std::uint64_t cand = st.closed[static_cast<std::size_t>(u)] & allowed;
    std::uint64_t tried = 0;
    while (cand) {
        const int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        const std::uint64_t bit = 1ULL << v;
        branch(st, chosen | bit, count + 1, dominated | st.closed[static_cast<std::size_t>(v)],
               excluded | tried);
        tried |= bit;
    }
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw UniverseMismatch("set is not over the graph's vertex set");
    VertexSet covered(g.n());
    s.for_each([&](int v) {
        covered |= g.neighbors(v);
        covered.insert(v);
    });
    return covered == VertexSet::full(g.n());
}

int gamma_bruteforce(const Graph& g) {
    if (g.n() > kMaxBruteforceVertices)
        throw Oversize("brute-force domination capped at " +
                       std::to_string(kMaxBruteforceVertices) + " vertices");
    const int n = g.n();
    if (n == 0) return 0;
    const auto closed = closed_words(g);
    const std::uint64_t full = full_word(n);
    for (int size = 0; size <= n; ++size) {
        bool found = false;
        for_each_combination(n, size, [&](std::uint64_t mask) {
            std::uint64_t covered = 0;
            for (std::uint64_t m = mask; m;) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                covered |= closed[static_cast<std::size_t>(v)];
            }
            if (covered == full) {
                found = true;
                return true;
            }
            return false;
        });
        if (found) return size;
    }
    throw InvariantViolation("V(G) failed to dominate G");  // unreachable
}

DominationResult gamma_exact(const Graph& g) {
    if (g.n() > kMaxFactorVertices)
        throw Oversize("branch-and-bound domination capped at " +
                       std::to_string(kMaxFactorVertices) + " vertices");
    const int n = g.n();
    if (n == 0) return {0, VertexSet(0), 1};
    const auto closed = closed_words(g);
    const std::uint64_t full = full_word(n);

    // Greedy seed: repeatedly take the vertex covering the most undominated
    // vertices, lowest index on ties.
    std::uint64_t greedy = 0, undom = full;
    while (undom) {
        int pick = -1, pick_gain = -1;
        for (int v = 0; v < n; ++v) {
            int gain = std::popcount(closed[static_cast<std::size_t>(v)] & undom);
            if (gain > pick_gain) {
                pick_gain = gain;
                pick = v;
            }
        }
        greedy |= 1ULL << pick;
        undom &= ~closed[static_cast<std::size_t>(pick)];
    }

    BranchState st{closed, full, n, greedy, std::popcount(greedy), 0};
    branch(st, 0, 0, 0, 0);
    return {st.best_size, set_from_word(n, st.best), st.nodes};
}

VertexSet private_neighbors(const Graph& g, const VertexSet& s, int x) {
    if (s.universe() != g.n()) throw UniverseMismatch("set is not over the graph's vertex set");
    if (!s.contains(x)) throw NotInSet("vertex " + std::to_string(x) + " is not in the set");
    VertexSet out(g.n());
    (g.neighbors(x) - s).for_each([&](int y) {
        VertexSet inside = g.neighbors(y) & s;
        if (inside.size() == 1 && inside.contains(x)) out.insert(y);
    });
    return out;
}

bool is_minimal_dominating_containing(const Graph& g, const VertexSet& d, const VertexSet& x) {
    if (d.universe() != g.n() || x.universe() != g.n())
        throw UniverseMismatch("set is not over the graph's vertex set");
    if (!x.subset_of(d)) return false;
    if (!is_dominating(g, d)) return false;
    bool minimal = true;
    (d - x).for_each([&](int v) {
        if (!minimal) return;
        // d - v stays dominating iff v has no private neighbor and is itself
        // dominated by another member.
        if (private_neighbors(g, d, v).empty() && g.neighbors(v).intersects(d)) minimal = false;
    });
    return minimal;
}

std::vector<VertexSet> minimal_dominating_containing(const Graph& g, const VertexSet& x,
                                                     std::size_t limit) {
    if (g.n() > kMaxEnumerationVertices)
        throw Oversize("minimal-set enumeration capped at " +
                       std::to_string(kMaxEnumerationVertices) + " vertices");
    if (x.universe() != g.n()) throw UniverseMismatch("set is not over the graph's vertex set");
    std::vector<VertexSet> out;
    if (limit == 0) return out;
    std::vector<int> ground = x.complement().indices();
    VertexSet d = x;

    // DFS over extensions in lexicographic order.  Once d dominates, every
    // proper extension has a removable vertex, so the subtree is pruned.
    auto rec = [&](auto&& self, std::size_t next) -> bool {
        const bool dominating = is_dominating(g, d);
        if (dominating && is_minimal_dominating_containing(g, d, x)) {
            out.push_back(d);
            if (out.size() >= limit) return true;
        }
        if (dominating) return false;
        for (std::size_t i = next; i < ground.size(); ++i) {
            d.insert(ground[i]);
            if (self(self, i + 1)) return true;
            d.erase(ground[i]);
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

std::vector<VertexSet> minimum_dominating_sets(const Graph& g) {
    if (g.n() > kMaxSetEnumerationVertices)
        throw Oversize("minimum-set enumeration capped at " +
                       std::to_string(kMaxSetEnumerationVertices) + " vertices");
    const int gamma = gamma_exact(g).gamma;
    const auto closed = closed_words(g);
    const std::uint64_t full = full_word(g.n());
    std::vector<VertexSet> out;
    if (g.n() == 0) {
        out.push_back(VertexSet(0));
        return out;
    }
    for_each_combination(g.n(), gamma, [&](std::uint64_t mask) {
        std::uint64_t covered = 0;
        for (std::uint64_t m = mask; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            covered |= closed[static_cast<std::size_t>(v)];
        }
        if (covered == full) out.push_back(set_from_word(g.n(), mask));
        return false;
    });
    return out;
}

std::vector<VertexSet> dominating_sets_up_to(const Graph& g, int bound) {
    if (g.n() > kMaxSetEnumerationVertices)
        throw Oversize("dominating-set enumeration capped at " +
                       std::to_string(kMaxSetEnumerationVertices) + " vertices");
    const int gamma = gamma_exact(g).gamma;
    const auto closed = closed_words(g);
    const std::uint64_t full = full_word(g.n());
    std::vector<VertexSet> out;
    if (g.n() == 0) {
        out.push_back(VertexSet(0));
        return out;
    }
    for (int size = gamma; size <= std::min(bound, g.n()); ++size) {
        for_each_combination(g.n(), size, [&](std::uint64_t mask) {
            std::uint64_t covered = 0;
            for (std::uint64_t m = mask; m;) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                covered |= closed[static_cast<std::size_t>(v)];
            }
            if (covered == full) out.push_back(set_from_word(g.n(), mask));
            return false;
        });
    }
    return out;
}

}  // namespace boxdom
