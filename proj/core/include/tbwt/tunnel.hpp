#pragma once

#include <cstdint>
#include <vector>

#include "tbwt/bitvector.hpp"
#include "tbwt/fm_index.hpp"
#include "tbwt/text.hpp"
#include "tbwt/wavelet_tree.hpp"

namespace tbwt {

/// Tunneled BWT: the reduced last column plus the two navigation bitvectors.
///
/// d_out and d_in use logical positions 1..p+1 and 1..q+1 (bit 0 unused);
/// the last position of each is the termination bit. C counts symbols of
/// the *reduced* column: the generalized LF-mapping ranks within the
/// reduced matrix, so original-text counts would overshoot the bitvectors.
struct TunneledBWT {
    std::vector<uint8_t> reduced_bwt; // dense codes, length p
    RankSelectBitVector d_out;
    RankSelectBitVector d_in;
    std::vector<uint64_t> C;
    WaveletTree wt;
    uint64_t n_original = 0;
    uint32_t k_used = 0;
    uint32_t sigma = 0;
    std::vector<uint8_t> alphabet; // dense code -> original byte

    uint64_t p() const { return reduced_bwt.size(); }
    uint64_t q() const { return d_in.size() - 2; }

    bool has_tunnels() const { return d_in.ones() < d_in.size() - 1; }

    /// Serialized footprint (wavelet-tree payload + both bitvectors), bytes.
    uint64_t serialized_size_bytes() const;
};

/// Checks the structural invariants and builds the query scaffolding
/// (C-array, wavelet tree, rank/select). Bitvectors arrive with logical
/// layout 1..p+1 / 1..q+1. Throws CorruptFileError on any violation.
TunneledBWT assemble_tunneled(std::vector<uint8_t> reduced_bwt, BitVector d_out, BitVector d_in,
                              uint32_t sigma, std::vector<uint8_t> alphabet, uint64_t n_original,
                              uint32_t k_used);

/// Tunnels every k-mer interval whose unique Weiner target aligns with a
/// node boundary, then compacts the three arrays. The reduced length equals
/// the edge count of the order-k edge-reduced de Bruijn graph.
TunneledBWT build_tunneled(const FMIndex& fm, const BitVector& boundaries, uint32_t k_used);

/// select_1(D_out, rank_1(D_in, C[L[i]] + rank_{L[i]}(L, i))), 1-based.
/// Collapses tunnel lanes onto the uppermost row; invert_tunneled adds the
/// entry offsets back.
uint64_t generalized_lf(const TunneledBWT& t, uint64_t pos);

/// Recovers the original text by walking generalized_lf from the sentinel
/// row, with a LIFO store of tunnel entry offsets. Throws CorruptFileError
/// when the run structure of the bitvectors is inconsistent.
Text invert_tunneled(const TunneledBWT& t);

/// One maximal fusible path, as the prefix interval it tunnels to:
/// skip LF-steps over the row interval of the path's last node.
struct PrefixInterval {
    uint64_t skip = 0; // path length minus one
    Interval rows;
};

struct PrefixIntervalSet {
    std::vector<PrefixInterval> intervals;

    /// Rows removed by tunneling all intervals: sum of skip * height.
    uint64_t removed_rows() const;
};

/// Oracle-grade: extracts the maximal fusible paths of the order-k de Bruijn
/// graph by brute force and verifies that each maps to a prefix interval
/// (column-wise equal letters), that the intervals are pairwise disjoint and
/// boundary-aligned, and that each path carries skip * height edges.
/// Throws InternalError with a mismatch description on any violation.
PrefixIntervalSet validate_prefix_intervals(const FMIndex& fm, const BitVector& boundaries,
                                            uint32_t k);

} // namespace tbwt
