#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tbwt/edge_minimize.hpp"
#include "tbwt/errors.hpp"
#include "tbwt/tunnel.hpp"

using namespace tbwt;

namespace {

std::string reduced_as_bytes(const TunneledBWT& t) {
    std::string out;
    for (uint8_t c : t.reduced_bwt) out.push_back(static_cast<char>(t.alphabet[c]));
    return out;
}

std::string bits_as_string(const RankSelectBitVector& v) {
    std::string out;
    for (size_t i = 1; i < v.size(); ++i) out.push_back(v.get(i) ? '1' : '0');
    return out;
}

TunneledBWT tunnel_text(const std::string& body) {
    Text t = ingest(body);
    FMIndex fm = FMIndex::build(t);
    EdgeMinResult r = minimize_edges(fm);
    return build_tunneled(fm, r.boundaries, r.k_star);
}

} // namespace

TEST_SUITE("tunnel") {
    TEST_CASE("running example collapses rows 5 and 9") {
        Text t = ingest(std::string("AGTGGTGG"));
        FMIndex fm = FMIndex::build(t);
        EdgeMinResult r = minimize_edges(fm);
        TunneledBWT tun = build_tunneled(fm, r.boundaries, r.k_star);

        CHECK(tun.p() == 7);
        CHECK(tun.p() == r.m_star);
        CHECK(reduced_as_bytes(tun) == std::string("G\0GTGAG", 7));
        CHECK(bits_as_string(tun.d_out) == "11111011");
        CHECK(bits_as_string(tun.d_in) == "11110111");
        CHECK(tun.k_used == 2);
        CHECK(tun.n_original == 9);
        CHECK(tun.has_tunnels());

        Text back = invert_tunneled(tun);
        CHECK(back.bytes == t.bytes);
    }

    TEST_CASE("running example tunnels exactly the one prefix interval") {
        Text t = ingest(std::string("AGTGGTGG"));
        FMIndex fm = FMIndex::build(t);
        EdgeMinResult r = minimize_edges(fm);
        PrefixIntervalSet set = validate_prefix_intervals(fm, r.boundaries, r.k_star);
        REQUIRE(set.intervals.size() == 1);
        CHECK(set.intervals[0].skip == 2);
        CHECK(set.intervals[0].rows == Interval{4, 5});
        CHECK(set.removed_rows() == t.size() - r.m_star);
    }

    TEST_CASE("no fusible paths leaves the transform untouched") {
        TunneledBWT tun = tunnel_text("abcdefg");
        CHECK(tun.p() == tun.n_original);
        CHECK(!tun.has_tunnels());
        CHECK(bits_as_string(tun.d_out) == std::string(tun.p() + 1, '1'));
        CHECK(bits_as_string(tun.d_in) == std::string(tun.p() + 1, '1'));
    }

    TEST_CASE("all-singleton boundaries reproduce the plain BWT") {
        Text t = ingest(std::string("AGTGGTGG"));
        FMIndex fm = FMIndex::build(t);
        BitVector singletons(t.size() + 2);
        for (size_t i = 1; i <= t.size() + 1; ++i) singletons.set(i);
        TunneledBWT tun = build_tunneled(fm, singletons, static_cast<uint32_t>(t.size()));

        CHECK(tun.p() == t.size());
        CHECK(reduced_as_bytes(tun) == testutil::brute_bwt(t));
        CHECK(!tun.has_tunnels());
        for (uint64_t i = 1; i <= tun.p(); ++i)
            REQUIRE(generalized_lf(tun, i) == lf_step(fm.bwt(), i));
    }

    TEST_CASE("generalized LF needs a valid position") {
        TunneledBWT tun = tunnel_text("AGTGGTGG");
        CHECK_THROWS_AS(generalized_lf(tun, 0), ValidationError);
        CHECK_THROWS_AS(generalized_lf(tun, tun.p() + 1), ValidationError);
    }

    TEST_CASE("tunneled length equals the minimum edge count") {
        std::mt19937_64 rng(81);
        for (int trial = 0; trial < 300; ++trial) {
            Text t = ingest(testutil::structured_text(rng, 200, 2 + rng() % 7));
            FMIndex fm = FMIndex::build(t);
            EdgeMinResult r = minimize_edges(fm);
            TunneledBWT tun = build_tunneled(fm, r.boundaries, r.k_star);
            REQUIRE(tun.p() == r.m_star);
            REQUIRE(tun.q() == tun.p());
        }
    }

    TEST_CASE("round trip over random and repetitive inputs") {
        std::mt19937_64 rng(82);
        for (int trial = 0; trial < 300; ++trial) {
            std::string body = testutil::structured_text(rng, 500, 2 + rng() % 7);
            Text t = ingest(body);
            TunneledBWT tun = tunnel_text(body);
            Text back = invert_tunneled(tun);
            REQUIRE(back.bytes == t.bytes);
        }
    }

    TEST_CASE("prefix intervals validate on random strings") {
        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 100; ++trial) {
            Text t = ingest(testutil::structured_text(rng, 120, 2 + rng() % 7));
            FMIndex fm = FMIndex::build(t);
            EdgeMinResult r = minimize_edges(fm);
            PrefixIntervalSet set;
            REQUIRE_NOTHROW(set = validate_prefix_intervals(fm, r.boundaries, r.k_star));
            REQUIRE(set.removed_rows() == t.size() - r.m_star);
        }
    }

    TEST_CASE("boundary vector is validated") {
        Text t = ingest(std::string("AGTGGTGG"));
        FMIndex fm = FMIndex::build(t);
        BitVector bogus(t.size() + 2); // missing the mandatory marks
        CHECK_THROWS_AS(build_tunneled(fm, bogus, 1), ValidationError);
        BitVector wrong_size(4);
        wrong_size.set(1);
        CHECK_THROWS_AS(build_tunneled(fm, wrong_size, 1), ValidationError);
    }

    TEST_CASE("assembly rejects malformed structures") {
        TunneledBWT good = tunnel_text("AGTGGTGG");
        auto rebuild = [&](auto mutate) {
            BitVector d_out = good.d_out.raw();
            BitVector d_in = good.d_in.raw();
            std::vector<uint8_t> reduced = good.reduced_bwt;
            mutate(reduced, d_out, d_in);
            return assemble_tunneled(std::move(reduced), std::move(d_out), std::move(d_in),
                                     good.sigma, good.alphabet, good.n_original, good.k_used);
        };

        CHECK_NOTHROW(rebuild([](auto&, auto&, auto&) {}));
        CHECK_THROWS_AS(rebuild([](auto&, auto& d_out, auto&) { d_out.clear(8); }),
                        CorruptFileError); // missing terminator
        CHECK_THROWS_AS(rebuild([](auto&, auto& d_out, auto&) { d_out.clear(5); }),
                        CorruptFileError); // popcount mismatch
        CHECK_THROWS_AS(rebuild([](auto& reduced, auto&, auto&) { reduced.pop_back(); }),
                        CorruptFileError); // length mismatch
        CHECK_THROWS_AS(rebuild([](auto& reduced, auto&, auto&) { reduced[0] = 200; }),
                        CorruptFileError); // symbol outside alphabet
    }

    TEST_CASE("navigation detects a broken run structure") {
        TunneledBWT good = tunnel_text("AGTGGTGG");
        // move the D_out zero from position 6 to position 4: the first walk
        // step now lands on an exit run without ever entering a tunnel
        BitVector d_out = good.d_out.raw();
        d_out.set(6);
        d_out.clear(4);
        TunneledBWT poisoned =
            assemble_tunneled(std::vector<uint8_t>(good.reduced_bwt), std::move(d_out),
                              good.d_in.raw(), good.sigma, good.alphabet, good.n_original,
                              good.k_used);
        CHECK_THROWS_AS(invert_tunneled(poisoned), CorruptFileError);
    }
}
