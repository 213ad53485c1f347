#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tbwt/edge_minimize.hpp"
#include "tbwt/errors.hpp"
#include "tbwt/oracle.hpp"

using namespace tbwt;

namespace {

// level edge counts straight from the definition, for cross-checking
std::vector<uint64_t> oracle_level_counts(const Text& t) {
    std::vector<uint64_t> out;
    for (uint32_t k = 1; k + 1 <= t.size(); ++k)
        out.push_back(oracle::reduce_edges(oracle::build_dbg(t, k)).second);
    return out;
}

std::pair<uint32_t, uint64_t> oracle_argmin(const std::vector<uint64_t>& counts) {
    uint32_t k_star = 1;
    uint64_t m_star = counts[0];
    for (uint32_t k = 2; k <= counts.size(); ++k) {
        if (counts[k - 1] < m_star) {
            m_star = counts[k - 1];
            k_star = k;
        }
    }
    return {k_star, m_star};
}

std::vector<uint64_t> boundary_positions(const BitVector& b) {
    std::vector<uint64_t> out;
    for (size_t i = 1; i < b.size(); ++i)
        if (b.get(i)) out.push_back(i);
    return out;
}

} // namespace

TEST_SUITE("edge_minimize") {
    TEST_CASE("running example: order 2 with 7 edges") {
        FMIndex fm = FMIndex::build(ingest(std::string("AGTGGTGG")));
        EdgeMinResult r = minimize_edges(fm);
        CHECK(r.k_star == 2);
        CHECK(r.m_star == 7);
        CHECK(r.node_count == 6);
        CHECK(r.intervals_generated <= 4 * r.m_star);
        // the six level-2 intervals have sizes 1,1,1,2,2,2
        CHECK(boundary_positions(r.boundaries) ==
              std::vector<uint64_t>{1, 2, 3, 4, 6, 8, 10});
    }

    TEST_CASE("per-level counts of the running example") {
        FMIndex fm = FMIndex::build(ingest(std::string("AGTGGTGG")));
        auto rows = edge_count_per_level(fm, 3);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].edges == 9);
        CHECK(rows[1].edges == 7);
        CHECK(rows[2].edges == 8);
        CHECK(rows[0].nodes == 4);
        CHECK(rows[1].nodes == 6);
        CHECK(rows[2].nodes == 7);

        auto again = edge_count_per_level(fm, 3);
        CHECK(rows.size() == again.size()); // pure function, reproducible
        for (size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].edges == again[i].edges);
            CHECK(rows[i].nodes == again[i].nodes);
        }
        CHECK_THROWS_AS(edge_count_per_level(fm, 0), ValidationError);
        CHECK_THROWS_AS(edge_count_per_level(fm, 9), ValidationError);
    }

    TEST_CASE("all-distinct symbols never fuse anything") {
        Text t = ingest(std::string("abcdefg"));
        FMIndex fm = FMIndex::build(t);
        EdgeMinResult r = minimize_edges(fm);
        CHECK(r.k_star == 1);
        CHECK(r.m_star == t.size());
        for (const auto& row : edge_count_per_level(fm, static_cast<uint32_t>(t.size() - 1)))
            CHECK(row.edges == t.size());
    }

    TEST_CASE("degenerate inputs") {
        EdgeMinResult one = minimize_edges(FMIndex::build(ingest(std::string(""))));
        CHECK(one.k_star == 1);
        CHECK(one.m_star == 1);
        CHECK(one.node_count == 1);

        // two symbols: both edges fuse to multiplicity one, m stays n,
        // and the boundaries must still describe level 1
        EdgeMinResult two = minimize_edges(FMIndex::build(ingest(std::string("x"))));
        CHECK(two.k_star == 1);
        CHECK(two.m_star == 2);
        CHECK(boundary_positions(two.boundaries) == std::vector<uint64_t>{1, 2, 3});

        // early termination fires while level 1 is still being processed
        EdgeMinResult aa = minimize_edges(FMIndex::build(ingest(std::string("aa"))));
        CHECK(aa.k_star == 1);
        CHECK(aa.m_star == 3);
        CHECK(boundary_positions(aa.boundaries) == std::vector<uint64_t>{1, 2, 4});
    }

    TEST_CASE("matches the oracle on random strings") {
        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 150; ++trial) {
            Text t = ingest(testutil::structured_text(rng, 100, 2 + rng() % 7));
            FMIndex fm = FMIndex::build(t);

            auto expected = oracle_level_counts(t);
            auto rows = edge_count_per_level(fm, static_cast<uint32_t>(t.size() - 1));
            REQUIRE(rows.size() == expected.size());
            for (size_t i = 0; i < rows.size(); ++i) REQUIRE(rows[i].edges == expected[i]);

            auto [k_exp, m_exp] = oracle_argmin(expected);
            EdgeMinResult r = minimize_edges(fm);
            REQUIRE(r.k_star == k_exp);
            REQUIRE(r.m_star == m_exp);
            REQUIRE(r.intervals_generated <= 4 * r.m_star);

            // boundaries describe exactly the level-k* intervals
            auto partition = testutil::kmer_partition(testutil::sorted_rotations(t), r.k_star);
            std::vector<uint64_t> expected_marks;
            for (const auto& iv : partition) expected_marks.push_back(iv.lb);
            expected_marks.push_back(t.size() + 1);
            REQUIRE(boundary_positions(r.boundaries) == expected_marks);
            REQUIRE(r.node_count == partition.size());
        }
    }

    TEST_CASE("early termination does not change the result") {
        std::mt19937_64 rng(72);
        for (int trial = 0; trial < 200; ++trial) {
            Text t = ingest(testutil::structured_text(rng, 120, 2 + rng() % 7));
            FMIndex fm = FMIndex::build(t);
            EdgeMinResult fast = minimize_edges(fm);
            MinimizeOptions full;
            full.early_termination = false;
            EdgeMinResult slow = minimize_edges(fm, full);
            REQUIRE(fast.k_star == slow.k_star);
            REQUIRE(fast.m_star == slow.m_star);
            REQUIRE(boundary_positions(fast.boundaries) == boundary_positions(slow.boundaries));
        }
    }

    TEST_CASE("traversal invariants hold level by level") {
        std::mt19937_64 rng(73);
        for (int trial = 0; trial < 60; ++trial) {
            Text t = ingest(testutil::structured_text(rng, 80, 2 + rng() % 4));
            FMIndex fm = FMIndex::build(t);
            oracle::RotationTrie trie = oracle::RotationTrie::build(t);

            MinimizeOptions options;
            options.early_termination = false;
            options.observer = [&](const LevelSnapshot& snap) {
                // queue: exactly the sibling-bearing level-k nodes, in
                // lexicographic order
                std::vector<Interval> expected;
                for (int32_t v : trie.level(snap.k))
                    if (trie.has_siblings(v))
                        expected.push_back({static_cast<uint64_t>(trie.node(v).lb),
                                            static_cast<uint64_t>(trie.node(v).rb)});
                REQUIRE(snap.queue_before == expected);
                // node counter
                REQUIRE(snap.nodes_at_level == trie.level(snap.k).size());
                // incremental count equals the weight sum
                REQUIRE(snap.edges_after == oracle::weight_sum(trie, snap.k));
            };
            minimize_edges(fm, options);
        }
    }

    TEST_CASE("node counts grow monotonically") {
        std::mt19937_64 rng(74);
        for (int trial = 0; trial < 50; ++trial) {
            Text t = ingest(testutil::structured_text(rng, 100, 2 + rng() % 7));
            FMIndex fm = FMIndex::build(t);
            auto rows = edge_count_per_level(fm, static_cast<uint32_t>(t.size() - 1));
            for (size_t i = 1; i < rows.size(); ++i) REQUIRE(rows[i].nodes >= rows[i - 1].nodes);
        }
    }

    TEST_CASE("replay clears exactly the buffered positions") {
        BitVector b(8);
        for (size_t i : {1, 3, 5, 7}) b.set(i);
        std::vector<uint64_t> buffer = {3, 5};
        replay_boundary_deletions(b, buffer);
        CHECK(b.get(1));
        CHECK(!b.get(3));
        CHECK(!b.get(5));
        CHECK(b.get(7));

        replay_boundary_deletions(b, {}); // empty buffer: no change
        CHECK(b.get(1));

        std::vector<uint64_t> bogus = {3}; // already cleared
        CHECK_THROWS_AS(replay_boundary_deletions(b, bogus), InternalError);
        std::vector<uint64_t> out_of_range = {7}; // beyond position n
        CHECK_THROWS_AS(replay_boundary_deletions(b, out_of_range), InternalError);
    }
}

TEST_SUITE("trie_minimize") {
    TEST_CASE("running example") {
        EdgeMinResult r = trie_minimize(ingest(std::string("AGTGGTGG")));
        CHECK(r.k_star == 2);
        CHECK(r.m_star == 7);
        CHECK(r.node_count == 6);
    }

    TEST_CASE("agrees with the FM traversal and the naive level sums") {
        std::mt19937_64 rng(75);
        for (int trial = 0; trial < 1000; ++trial) {
            Text t = ingest(testutil::structured_text(rng, 100, 2 + rng() % 7));
            EdgeMinResult via_trie = trie_minimize(t);
            EdgeMinResult via_fm = minimize_edges(FMIndex::build(t));
            REQUIRE(via_trie.k_star == via_fm.k_star);
            REQUIRE(via_trie.m_star == via_fm.m_star);
            REQUIRE(boundary_positions(via_trie.boundaries) ==
                    boundary_positions(via_fm.boundaries));

            if (trial % 5 == 0) { // the graph oracle is the slow part
                auto [k_exp, m_exp] = oracle_argmin(oracle_level_counts(t));
                REQUIRE(via_trie.k_star == k_exp);
                REQUIRE(via_trie.m_star == m_exp);
            }
        }
    }

    TEST_CASE("instrumented run keeps all three invariants") {
        std::mt19937_64 rng(76);
        TrieMinimizeOptions options;
        options.check_invariants = true;
        options.early_termination = false; // visit every level
        for (int trial = 0; trial < 60; ++trial) {
            Text t = ingest(testutil::structured_text(rng, 80, 2 + rng() % 7));
            CHECK_NOTHROW(trie_minimize(t, options));
        }
    }

    TEST_CASE("work bound holds with and without early termination") {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 100; ++trial) {
            Text t = ingest(testutil::structured_text(rng, 120, 2 + rng() % 7));
            EdgeMinResult r = trie_minimize(t);
            REQUIRE(r.intervals_generated <= 4 * r.m_star);
            TrieMinimizeOptions full;
            full.early_termination = false;
            EdgeMinResult slow = trie_minimize(t, full);
            REQUIRE(slow.k_star == r.k_star);
            REQUIRE(slow.m_star == r.m_star);
        }
    }

    TEST_CASE("rejects inputs beyond the trie cap") {
        std::string big(oracle::kMaxTrieInput + 10, 'x');
        CHECK_THROWS_AS(trie_minimize(ingest(big)), ValidationError);
    }
}
