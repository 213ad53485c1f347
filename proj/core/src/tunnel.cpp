#include "tbwt/tunnel.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tbwt/errors.hpp"
#include "tbwt/oracle.hpp"

namespace tbwt {

uint64_t TunneledBWT::serialized_size_bytes() const {
    uint64_t bits = wt.serialized_bits() + (p() + 1) + (q() + 1);
    return (bits + 7) / 8;
}

TunneledBWT assemble_tunneled(std::vector<uint8_t> reduced_bwt, BitVector d_out, BitVector d_in,
                              uint32_t sigma, std::vector<uint8_t> alphabet, uint64_t n_original,
                              uint32_t k_used) {
    const uint64_t p = reduced_bwt.size();
    if (p == 0) throw CorruptFileError("tunneled BWT is empty");
    if (d_out.size() != p + 2)
        throw CorruptFileError("D_out length does not match the reduced BWT");
    if (d_in.size() != d_out.size())
        throw CorruptFileError("D_in length does not match D_out");
    if (!d_out.get(p + 1) || !d_in.get(p + 1))
        throw CorruptFileError("termination bits are not set");
    if (d_out.get(0) || d_in.get(0))
        throw CorruptFileError("bit below position 1 is set");
    if (d_out.count_ones() != d_in.count_ones())
        throw CorruptFileError("D_out and D_in disagree on the number of kept slots");
    if (sigma == 0 || sigma > 256 || alphabet.size() != sigma)
        throw CorruptFileError("alphabet map does not match sigma");
    if (!std::is_sorted(alphabet.begin(), alphabet.end()) ||
        std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end() ||
        alphabet[0] != kSentinelByte)
        throw CorruptFileError("alphabet map is not an ordered sentinel-first mapping");
    for (uint8_t c : reduced_bwt)
        if (c >= sigma) throw CorruptFileError("reduced BWT symbol outside the alphabet");
    if (n_original < p) throw CorruptFileError("original length below the reduced length");

    TunneledBWT t;
    t.reduced_bwt = std::move(reduced_bwt);
    t.C.assign(sigma + 1, 0);
    for (uint8_t c : t.reduced_bwt) t.C[c + 1]++;
    for (uint32_t c = 0; c < sigma; ++c) t.C[c + 1] += t.C[c];
    t.wt = WaveletTree(t.reduced_bwt, sigma);
    t.d_out = RankSelectBitVector(std::move(d_out));
    t.d_in = RankSelectBitVector(std::move(d_in));
    t.n_original = n_original;
    t.k_used = k_used;
    t.sigma = sigma;
    t.alphabet = std::move(alphabet);
    return t;
}

TunneledBWT build_tunneled(const FMIndex& fm, const BitVector& boundaries, uint32_t k_used) {
    const uint64_t n = fm.size();
    if (boundaries.size() != n + 2 || !boundaries.get(1) || !boundaries.get(n + 1) ||
        boundaries.get(0))
        throw ValidationError("boundaries is not a node partition of the BWT rows");

    BitVector d_out = boundaries;
    BitVector d_in = boundaries;

    std::vector<SymbolInterval> links;
    uint64_t i = 1;
    for (uint64_t j = 1; j <= n; ++j) {
        if (!d_in.get(j + 1)) continue; // still inside the k-mer interval
        links.clear();
        fm.for_each_interval(i, j, [&](const SymbolInterval& si) { links.push_back(si); });

        // a single preceding symbol whose interval sits exactly on node
        // boundaries marks a fusible edge: tunnel it
        bool tunneled = false;
        if (links.size() == 1) {
            const Interval& target = links[0].range;
            if (d_out.get(target.lb) && d_out.get(target.rb + 1)) {
                d_in.set(i);
                for (uint64_t x = i + 1; x <= j; ++x) d_in.clear(x);
                d_out.set(target.lb);
                for (uint64_t x = target.lb + 1; x <= target.rb; ++x) d_out.clear(x);
                tunneled = true;
            }
        }
        if (!tunneled) {
            for (uint64_t x = i; x <= j; ++x) d_in.set(x);
            for (const SymbolInterval& link : links)
                for (uint64_t x = link.range.lb; x <= link.range.rb; ++x) d_out.set(x);
        }
        i = j + 1;
    }

    // drop L and D_out entries of collapsed rows, D_in entries of collapsed
    // slots; the forward scan keeps the surviving order stable
    uint64_t p = 0, q = 0;
    for (uint64_t x = 1; x <= n; ++x) {
        p += d_in.get(x);
        q += d_out.get(x);
    }
    if (p != q) throw InternalError("tunneling removed unbalanced row and slot counts");

    const auto& last_column = fm.bwt().last_column;
    std::vector<uint8_t> reduced;
    reduced.reserve(p);
    BitVector d_out_packed(p + 2);
    BitVector d_in_packed(q + 2);
    uint64_t pi = 0, qi = 0;
    for (uint64_t x = 1; x <= n; ++x) {
        if (d_in.get(x)) {
            reduced.push_back(last_column[x - 1]);
            if (d_out.get(x)) d_out_packed.set(pi + 1);
            ++pi;
        }
        if (d_out.get(x)) {
            if (d_in.get(x)) d_in_packed.set(qi + 1);
            ++qi;
        }
    }
    d_out_packed.set(p + 1);
    d_in_packed.set(q + 1);

    return assemble_tunneled(std::move(reduced), std::move(d_out_packed), std::move(d_in_packed),
                             fm.sigma(), fm.alphabet(), n, k_used);
}

uint64_t generalized_lf(const TunneledBWT& t, uint64_t pos) {
    if (pos < 1 || pos > t.p()) throw ValidationError("generalized_lf: position out of range");
    uint8_t c = t.reduced_bwt[pos - 1];
    uint64_t u = t.C[c] + t.wt.rank(c, pos);
    uint64_t v = t.d_in.rank1(u + 1); // ones among logical positions 1..u
    return t.d_out.select1(v);
}

Text invert_tunneled(const TunneledBWT& t) {
    const uint64_t n = t.n_original;
    std::vector<uint8_t> bytes(n);
    bytes[n - 1] = kSentinelByte;

    // backward walk from the sentinel-first row (always slot 1, never inside
    // a tunnel). Entering a tunnel lane records the offset within the D_in
    // run; leaving through a D_out run adds it back.
    std::vector<uint64_t> offsets;
    uint64_t x = 1;
    try {
        for (uint64_t emitted = 1; emitted < n; ++emitted) {
            uint8_t c = t.reduced_bwt[x - 1];
            bytes[n - 1 - emitted] = t.alphabet[c];

            uint64_t u = t.C[c] + t.wt.rank(c, x);
            uint64_t v = t.d_in.rank1(u + 1);
            if (!t.d_in.get(u))
                offsets.push_back(u - t.d_in.select1(v));
            else if (!t.d_in.get(u + 1))
                offsets.push_back(0);

            x = t.d_out.select1(v);
            if (!t.d_out.get(x + 1)) {
                if (offsets.empty()) throw CorruptFileError("tunnel exit without a prior entry");
                uint64_t offset = offsets.back();
                offsets.pop_back();
                if (x + offset > t.p() || (offset > 0 && t.d_out.get(x + offset)))
                    throw CorruptFileError("tunnel exit offset leaves the run");
                x += offset;
            }
        }
    } catch (const CorruptFileError&) {
        throw;
    } catch (const Error& e) {
        throw CorruptFileError(std::string("tunneled BWT navigation failed: ") + e.what());
    }
    return ingest(std::span<const uint8_t>(bytes.data(), n - 1));
}

uint64_t PrefixIntervalSet::removed_rows() const {
    uint64_t total = 0;
    for (const PrefixInterval& pi : intervals) total += pi.skip * (pi.rows.width() - 1);
    return total;
}

PrefixIntervalSet validate_prefix_intervals(const FMIndex& fm, const BitVector& boundaries,
                                            uint32_t k) {
    const uint64_t n = fm.size();
    if (boundaries.size() != n + 2 || !boundaries.get(1) || !boundaries.get(n + 1))
        throw ValidationError("validate_prefix_intervals: bad boundary vector");
    if (k < 1 || k > n) throw ValidationError("validate_prefix_intervals: order out of range");

    // recover the text with a plain LF walk, then do everything by brute force
    std::vector<uint8_t> bytes(n);
    bytes[n - 1] = kSentinelByte;
    for (uint64_t x = 1, emitted = 1; emitted < n; ++emitted) {
        bytes[n - 1 - emitted] = fm.alphabet()[fm.bwt().last_column[x - 1]];
        x = fm.lf(x);
    }
    Text t = ingest(std::span<const uint8_t>(bytes.data(), n - 1));

    oracle::RotationTrie trie = oracle::RotationTrie::build(t);
    oracle::MultiDBG g = oracle::build_dbg(t, k);
    const auto num_nodes = static_cast<int32_t>(g.node_labels.size());

    std::vector<int32_t> next_node(num_nodes, -1), prev_node(num_nodes, -1);
    for (const auto& [edge, mult] : g.edges) {
        if (g.successors[edge.first].size() == 1 && g.predecessors[edge.second].size() == 1) {
            next_node[edge.first] = edge.second;
            prev_node[edge.second] = edge.first;
        }
    }

    std::vector<std::vector<int32_t>> paths;
    std::vector<char> used(num_nodes, 0);
    for (int32_t v = 0; v < num_nodes; ++v) {
        if (next_node[v] == -1 || prev_node[v] != -1) continue;
        std::vector<int32_t> path{v};
        used[v] = 1;
        for (int32_t u = next_node[v]; u != -1; u = next_node[u]) {
            path.push_back(u);
            used[u] = 1;
        }
        paths.push_back(std::move(path));
    }
    // a fusible cycle (possible only with all-singleton nodes) is broken at
    // its smallest node id
    for (int32_t v = 0; v < num_nodes; ++v) {
        if (used[v] || next_node[v] == -1) continue;
        std::vector<int32_t> path{v};
        used[v] = 1;
        for (int32_t u = next_node[v]; u != v; u = next_node[u]) {
            path.push_back(u);
            used[u] = 1;
        }
        paths.push_back(std::move(path));
    }

    // k-mer label -> row interval, straight from the trie level
    std::map<std::string, Interval> kmer_rows;
    for (int32_t v : trie.level(k))
        kmer_rows[trie.label(v)] =
            Interval{static_cast<uint64_t>(trie.node(v).lb), static_cast<uint64_t>(trie.node(v).rb)};

    std::vector<int32_t> lf_inv(n + 1);
    for (uint64_t r = 1; r <= n; ++r) lf_inv[trie.lf_row(static_cast<int32_t>(r))] = static_cast<int32_t>(r);
    auto last_char = [&](int32_t row) { return trie.rotation(row)[n - 1]; };

    std::vector<std::string> violations;
    std::vector<char> row_taken(n + 1, 0);
    PrefixIntervalSet result;

    for (const auto& path : paths) {
        if (path.size() < 2) continue;
        const uint64_t skip = path.size() - 1;

        for (int32_t v : path) {
            Interval rows = kmer_rows.at(g.node_labels[v]);
            if (!boundaries.get(rows.lb) || !boundaries.get(rows.rb + 1))
                violations.push_back("node " + g.node_labels[v] + " is not boundary-aligned");
        }

        Interval rows = kmer_rows.at(g.node_labels[path.back()]);
        const uint64_t height = rows.width();

        // column-wise equal letters for -1 <= x < skip
        std::vector<int32_t> column;
        for (uint64_t r = rows.lb; r <= rows.rb; ++r) column.push_back(static_cast<int32_t>(r));
        auto all_equal = [&](const std::vector<int32_t>& rows_now) {
            for (size_t idx = 1; idx < rows_now.size(); ++idx)
                if (last_char(rows_now[idx]) != last_char(rows_now[0])) return false;
            return true;
        };
        std::vector<int32_t> inverse_column;
        for (int32_t r : column) inverse_column.push_back(lf_inv[r]);
        bool definition_holds = all_equal(inverse_column);
        std::vector<int32_t> walk = column;
        for (uint64_t step = 0; step + 1 < path.size() && definition_holds; ++step) {
            definition_holds = all_equal(walk);
            for (int32_t& r : walk) r = trie.lf_row(r);
        }
        if (!definition_holds)
            violations.push_back("path ending at " + g.node_labels[path.back()] +
                                 " is not a prefix interval");

        // disjointness of the N sets (all path node rows)
        walk = column;
        for (uint64_t step = 0; step <= skip; ++step) {
            for (int32_t r : walk) {
                if (row_taken[r])
                    violations.push_back("row " + std::to_string(r) + " shared by two intervals");
                row_taken[r] = 1;
            }
            if (step < skip)
                for (int32_t& r : walk) r = trie.lf_row(r);
        }

        // the path carries skip * height edges
        uint64_t path_edges = 0;
        for (size_t idx = 0; idx + 1 < path.size(); ++idx)
            path_edges += g.edges.at({path[idx], path[idx + 1]});
        if (path_edges != skip * height)
            violations.push_back("path ending at " + g.node_labels[path.back()] + " carries " +
                                 std::to_string(path_edges) + " edges, expected " +
                                 std::to_string(skip * height));

        // single-row paths satisfy everything vacuously and tunnel nothing;
        // only intervals that actually collapse rows are reported
        if (height >= 2) result.intervals.push_back({skip, rows});
    }

    if (!violations.empty()) {
        std::string message = "prefix interval validation failed:";
        for (const auto& v : violations) message += "\n  " + v;
        throw InternalError(message);
    }

    std::sort(result.intervals.begin(), result.intervals.end(),
              [](const PrefixInterval& a, const PrefixInterval& b) { return a.rows.lb < b.rows.lb; });
    return result;
}

} // namespace tbwt
