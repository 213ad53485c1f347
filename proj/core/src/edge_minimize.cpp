#include "tbwt/edge_minimize.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tbwt/errors.hpp"
#include "tbwt/oracle.hpp"

namespace tbwt {

namespace {

EdgeMinResult degenerate_result() {
    // single-symbol text: one node with one self-loop at every order
    EdgeMinResult r;
    r.k_star = 1;
    r.m_star = 1;
    r.boundaries = BitVector(3);
    r.boundaries.set(1);
    r.boundaries.set(2);
    r.node_count = 1;
    return r;
}

/// Shared level loop behind minimize_edges and edge_count_per_level.
EdgeMinResult run_levels(const FMIndex& fm, uint32_t max_k, bool early_termination,
                         const std::function<void(const LevelSnapshot&)>& observer,
                         std::vector<LevelEdgeCount>* per_level) {
    const uint64_t n = fm.size();
    const uint32_t sigma = fm.sigma();

    BitVector B(n + 2); // logical 1..n+1
    B.set(1);
    B.set(n + 1);
    BitVector F(n + 1); // logical 1..n

    uint64_t m = n;
    uint64_t n_T = sigma;
    uint32_t k_star = 1;
    uint64_t m_star = n;
    uint64_t fusible = 0;
    uint64_t intervals_generated = 0;
    std::vector<uint64_t> external_buffer;

    std::vector<std::deque<Interval>> queues(sigma);
    fm.for_each_interval(1, n, [&](const SymbolInterval& si) {
        queues[si.symbol].push_back(si.range);
    });

    std::vector<SymbolInterval> links;
    bool early_exit = false;

    uint32_t k = 1;
    for (; k <= max_k && !early_exit; ++k) {
        const uint64_t nodes_at_level = n_T;
        LevelSnapshot snapshot;
        if (observer) {
            snapshot.k = k;
            snapshot.nodes_at_level = nodes_at_level;
            for (uint32_t c = 0; c < sigma; ++c)
                for (const Interval& iv : queues[c]) snapshot.queue_before.push_back(iv);
        }

        m -= fusible; // establish new inherited fusions
        fusible = 0;

        // reverse old fusions and mark the boundaries of this level.
        // Sibling groups are consecutive, so `last` tracks the parent's
        // left boundary from the group's first (leftmost) child.
        uint64_t last = 0; // 0 = unset
        for (uint32_t c = 0; c < sigma; ++c) {
            for (const Interval& iv : queues[c]) {
                if (!B.get(iv.rb + 1)) {
                    B.set(iv.rb + 1);
                    // level-1 marks are permanent: k_star is never below 1
                    if (k >= 2) external_buffer.push_back(iv.rb + 1);
                    if (last == 0) last = iv.lb;
                } else {
                    if (F.get(iv.rb)) {
                        m += iv.rb - last;
                        F.clear(iv.rb);
                    }
                    last = 0;
                }
            }
        }

        // snapshot queue sizes so nodes pushed for the next level are not
        // processed in this one
        std::vector<size_t> size_at_entry(sigma);
        for (uint32_t c = 0; c < sigma; ++c) size_at_entry[c] = queues[c].size();

        for (uint32_t c = 0; c < sigma && !early_exit; ++c) {
            for (size_t q = 0; q < size_at_entry[c] && !early_exit; ++q) {
                Interval node = queues[c].front();
                queues[c].pop_front();

                links.clear();
                fm.for_each_interval(node.lb, node.rb,
                                     [&](const SymbolInterval& si) { links.push_back(si); });
                intervals_generated += links.size();

                if (links.size() == 1) { // unique Weiner link: reclassify edges
                    const Interval& target = links[0].range;
                    if (B.get(target.lb) && B.get(target.rb + 1))
                        m -= node.rb - node.lb; // fusion in current order
                    else
                        fusible += node.rb - node.lb; // possible fusion in next order
                    F.set(node.rb);
                }

                for (const SymbolInterval& link : links) {
                    const Interval& target = link.range;
                    if (!B.get(target.lb) || !B.get(target.rb + 1)) { // has siblings
                        if (!B.get(target.rb + 1)) {                  // not rightmost
                            ++n_T;
                            if (early_termination && n_T >= m_star) {
                                early_exit = true;
                                break;
                            }
                        }
                        queues[link.symbol].push_back(target);
                    }
                }
            }
        }
        if (early_exit) break;

        if (m < m_star) {
            k_star = k;
            m_star = m;
            external_buffer.clear();
        }

        if (observer) {
            snapshot.edges_after = m;
            observer(snapshot);
        }
        if (per_level) per_level->push_back({k, m, nodes_at_level});

        // once no node of this level has siblings, deeper levels change
        // nothing; m and n_T stay fixed for all remaining orders
        if (fusible == 0 &&
            std::all_of(queues.begin(), queues.end(), [](const auto& q) { return q.empty(); })) {
            if (per_level)
                for (uint32_t pad = k + 1; pad <= max_k; ++pad)
                    per_level->push_back({pad, m, n_T});
            break;
        }
    }

    replay_boundary_deletions(B, external_buffer);

    EdgeMinResult result;
    result.k_star = k_star;
    result.m_star = m_star;
    result.boundaries = std::move(B);
    result.intervals_generated = intervals_generated;
    result.node_count = result.boundaries.count_ones() - 1;
    return result;
}

} // namespace

EdgeMinResult minimize_edges(const FMIndex& fm, const MinimizeOptions& options) {
    if (fm.size() == 1) return degenerate_result();
    return run_levels(fm, static_cast<uint32_t>(fm.size() - 1), options.early_termination,
                      options.observer, nullptr);
}

std::vector<LevelEdgeCount> edge_count_per_level(const FMIndex& fm, uint32_t max_k) {
    if (max_k < 1 || max_k > fm.size() - 1)
        throw ValidationError("edge_count_per_level: max_k out of range");
    std::vector<LevelEdgeCount> rows;
    rows.reserve(max_k);
    run_levels(fm, max_k, /*early_termination=*/false, nullptr, &rows);
    return rows;
}

void replay_boundary_deletions(BitVector& boundaries, std::span<const uint64_t> external_buffer) {
    const size_t n = boundaries.size() - 2; // logical positions 1..n+1
    for (uint64_t pos : external_buffer) {
        if (pos < 2 || pos > n)
            throw InternalError("buffered boundary position out of range");
        if (!boundaries.get(pos))
            throw InternalError("buffered boundary position is not set");
        boundaries.clear(pos);
    }
}

EdgeMinResult trie_minimize(const Text& t, const TrieMinimizeOptions& options) {
    const size_t n = t.size();
    if (n == 1) return degenerate_result();

    const oracle::RotationTrie trie = oracle::RotationTrie::build(t);

    std::deque<int32_t> queue;
    for (int32_t v = trie.node(0).first_child; v != -1; v = trie.node(v).next_sibling)
        queue.push_back(v);

    BitVector F(n + 1);
    uint64_t m = n;
    uint64_t n_T = t.sigma;
    uint32_t k_star = 1;
    uint64_t m_star = n;
    uint64_t fusible = 0;
    uint64_t intervals_generated = 0;
    bool early_exit = false;

    auto verify_queue = [&](uint32_t k) {
        std::multiset<int32_t> have(queue.begin(), queue.end());
        std::multiset<int32_t> want;
        for (int32_t v : trie.level(k))
            if (trie.has_siblings(v)) want.insert(v);
        if (have != want)
            throw InternalError("level " + std::to_string(k) +
                                ": queue does not hold exactly the sibling-bearing nodes");
        if (n_T != trie.level(k).size())
            throw InternalError("level " + std::to_string(k) + ": node counter mismatch");
    };

    for (uint32_t k = 1; k + 1 <= n && !early_exit; ++k) {
        if (options.check_invariants) verify_queue(k);

        m -= fusible;
        fusible = 0;

        for (int32_t v : queue) { // reverse old fusions
            if (F.get(trie.node(v).rb)) {
                int32_t parent = trie.node(v).parent;
                m += trie.width(parent) - 1;
                F.clear(trie.node(v).rb);
            }
        }

        size_t size_at_entry = queue.size();
        for (size_t q = 0; q < size_at_entry && !early_exit; ++q) {
            int32_t v = queue.front();
            queue.pop_front();

            auto links = trie.weiner_links(v);
            intervals_generated += links.size();

            if (links.size() == 1) {
                if (!trie.has_siblings(links[0].target))
                    m -= trie.width(v) - 1;
                else
                    fusible += trie.width(v) - 1;
                F.set(trie.node(v).rb);
            }

            for (const auto& link : links) {
                if (trie.has_siblings(link.target)) {
                    if (!trie.is_rightmost_sibling(link.target)) {
                        ++n_T;
                        if (options.early_termination && n_T >= m_star) {
                            early_exit = true;
                            break;
                        }
                    }
                    queue.push_back(link.target);
                }
            }
        }
        if (early_exit) break;

        if (m < m_star) {
            k_star = k;
            m_star = m;
        }
        if (options.check_invariants && m != oracle::weight_sum(trie, k))
            throw InternalError("level " + std::to_string(k) +
                                ": incremental edge count disagrees with the weight sum");

        if (fusible == 0 && queue.empty()) break;
    }

    EdgeMinResult result;
    result.k_star = k_star;
    result.m_star = m_star;
    result.boundaries = BitVector(n + 2);
    result.boundaries.set(1);
    result.boundaries.set(n + 1);
    for (int32_t v : trie.level(k_star)) result.boundaries.set(trie.node(v).lb);
    result.intervals_generated = intervals_generated;
    result.node_count = trie.level(k_star).size();
    return result;
}

} // namespace tbwt
