#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "boxdom/graph.hpp"

namespace boxdom {

// Caps for the exhaustive-enumeration operations below.
inline constexpr int kMaxBruteforceVertices = 16;
inline constexpr int kMaxEnumerationVertices = 20;
inline constexpr int kMaxSetEnumerationVertices = 24;

// True iff every vertex of g lies in the closed neighborhood of some member
// of s.  s must be over g's vertex set.
bool is_dominating(const Graph& g, const VertexSet& s);

struct DominationResult {
    int gamma = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
};

// Domination number by exhaustive enumeration in size order (the oracle the
// branch-and-bound solver is tested against; n <= 16).
int gamma_bruteforce(const Graph& g);

// Domination number by branch and bound (n <= 64).  Branches on the
// lowest-index undominated vertex, trying dominators from its closed
// neighborhood in index order, with a greedy upper bound seeded first and a
// coverage-capacity lower bound for pruning.  The witness is deterministic
// for a given graph.
DominationResult gamma_exact(const Graph& g);

// Private neighbors of x with respect to s: vertices y outside s whose only
// neighbor inside s is x.  Throws NotInSet when x is not a member of s.
VertexSet private_neighbors(const Graph& g, const VertexSet& s, int x);

// True iff d is a dominating set containing x that is minimal over x: no
// proper subset of d that still contains x is dominating.  Equivalently
// (and this is how it is computed), every v in d - x is irremovable:
// removing v breaks domination because v has a private neighbor outside d
// or no neighbor inside d.  Returns false (not an error) when x is not a
// subset of d or d does not dominate.
bool is_minimal_dominating_containing(const Graph& g, const VertexSet& d, const VertexSet& x);

// All dominating sets containing x that are minimal over x, enumerated as
// extensions of x by subsets of V - x in lexicographic order, truncated
// after limit entries.  n <= 20.
std::vector<VertexSet> minimal_dominating_containing(
    const Graph& g, const VertexSet& x,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// Every dominating set of size gamma(g), in lexicographic order.  n <= 24.
std::vector<VertexSet> minimum_dominating_sets(const Graph& g);

// Every dominating set of size at most bound, in size order and then
// lexicographic order within a size.  n <= 24.
std::vector<VertexSet> dominating_sets_up_to(const Graph& g, int bound);

}  // namespace boxdom
