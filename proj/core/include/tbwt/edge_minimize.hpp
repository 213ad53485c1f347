#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tbwt/bitvector.hpp"
#include "tbwt/fm_index.hpp"
#include "tbwt/text.hpp"

namespace tbwt {

/// Outcome of the edge minimization: the smallest order k attaining the
/// minimum edge count over all edge-reduced de Bruijn graphs, with the
/// node-boundary bitvector of that level.
struct EdgeMinResult {
    uint32_t k_star = 1;
    uint64_t m_star = 0;
    /// Logical positions 1..n+1 (index 0 unused). boundaries[i] = 1 iff i
    /// starts a level-k_star node interval; positions 1 and n+1 always set.
    BitVector boundaries;
    /// Number of intervals produced by the Weiner-link enumeration during
    /// the level loop; bounded by 4 * m_star.
    uint64_t intervals_generated = 0;
    /// Node count of level k_star (= ones(boundaries) - 1).
    uint64_t node_count = 0;
};

/// Per-level state handed to an observer, for invariant checking.
struct LevelSnapshot {
    uint32_t k = 0;
    uint64_t nodes_at_level = 0;        // n_T before the level body
    uint64_t edges_after = 0;           // m_k after the level body
    std::vector<Interval> queue_before; // sibling-bearing nodes, lex order
};

struct MinimizeOptions {
    bool early_termination = true;
    /// Invoked after every completed level body. Not called for a level the
    /// traversal abandons via early termination.
    std::function<void(const LevelSnapshot&)> observer;
};

/// Level-wise FM-index traversal. O(m_star log sigma) with early
/// termination enabled. Smallest k wins ties (strict improvement test).
EdgeMinResult minimize_edges(const FMIndex& fm, const MinimizeOptions& options = {});

struct LevelEdgeCount {
    uint32_t k = 0;
    uint64_t edges = 0; // m_k
    uint64_t nodes = 0; // node count of level k
};

/// Exact m_k for k = 1..max_k from the same incremental loop with early
/// termination disabled.
std::vector<LevelEdgeCount> edge_count_per_level(const FMIndex& fm, uint32_t max_k);

/// Clears buffered positions from the boundary bitvector, restoring the
/// marks of the optimal level. Every buffered position must currently be
/// set; anything else signals a bookkeeping bug.
void replay_boundary_deletions(BitVector& boundaries, std::span<const uint64_t> external_buffer);

struct TrieMinimizeOptions {
    bool early_termination = true;
    /// Assert the three traversal invariants at every level: queue contents,
    /// incremental edge count, and node counter. Throws InternalError on any
    /// violation.
    bool check_invariants = false;
};

/// Reference implementation on the explicit rotation trie. Quadratic space;
/// inputs above the trie cap are rejected. Identical (k_star, m_star) to
/// minimize_edges.
EdgeMinResult trie_minimize(const Text& t, const TrieMinimizeOptions& options = {});

} // namespace tbwt
