#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tbwt/fm_index.hpp"
#include "tbwt/text.hpp"

namespace testutil {

// uniform random string over sigma letters starting at 'a'
inline std::string random_text(std::mt19937_64& rng, size_t min_len, size_t max_len,
                               uint32_t sigma) {
    std::uniform_int_distribution<size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> sym(0, static_cast<int>(sigma) - 1);
    std::string s(len_dist(rng), 'a');
    for (char& c : s) c = static_cast<char>('a' + sym(rng));
    return s;
}

// mixes uniform, repeated-seed, run and two-phrase shapes; the repetitive
// modes are what actually produce tunnels
inline std::string structured_text(std::mt19937_64& rng, size_t max_len, uint32_t sigma) {
    std::uniform_int_distribution<int> mode(0, 3);
    switch (mode(rng)) {
        case 0:
            return random_text(rng, 1, max_len, sigma);
        case 1: {
            std::string seed = random_text(rng, 1, 8, sigma);
            std::string s;
            while (s.size() + seed.size() <= max_len && s.size() < max_len) s += seed;
            return s.empty() ? seed.substr(0, max_len) : s;
        }
        case 2: {
            std::string s;
            std::uniform_int_distribution<int> run_len(1, 9);
            std::uniform_int_distribution<int> sym(0, static_cast<int>(sigma) - 1);
            while (s.size() < max_len)
                s.append(static_cast<size_t>(run_len(rng)), static_cast<char>('a' + sym(rng)));
            s.resize(max_len);
            return s;
        }
        default: {
            std::string a = random_text(rng, 1, 5, sigma);
            std::string b = random_text(rng, 1, 5, sigma);
            std::string s;
            while (s.size() < max_len) s += (rng() & 1) ? a : b;
            s.resize(max_len);
            return s;
        }
    }
}

inline std::vector<std::string> sorted_rotations(const tbwt::Text& t) {
    std::string s(t.bytes.begin(), t.bytes.end());
    std::vector<std::string> rots;
    rots.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) rots.push_back(s.substr(i) + s.substr(0, i));
    std::sort(rots.begin(), rots.end());
    return rots;
}

// last column of the explicitly sorted rotation list, original byte values
inline std::string brute_bwt(const tbwt::Text& t) {
    std::string out;
    for (const auto& rot : sorted_rotations(t)) out.push_back(rot.back());
    return out;
}

// BWT of the FM-index as original byte values, for comparing with brute_bwt
inline std::string fm_bwt_bytes(const tbwt::FMIndex& fm) {
    std::string out;
    for (uint8_t c : fm.bwt().last_column) out.push_back(static_cast<char>(fm.alphabet()[c]));
    return out;
}

// naive getIntervals: distinct symbols of L[lb..rb] by scan, one backward
// step each (the per-symbol loop the wavelet traversal must match)
inline std::vector<tbwt::SymbolInterval> naive_get_intervals(const tbwt::FMIndex& fm, uint64_t lb,
                                                             uint64_t rb) {
    std::set<uint8_t> symbols;
    for (uint64_t r = lb; r <= rb; ++r) symbols.insert(fm.bwt().last_column[r - 1]);
    std::vector<tbwt::SymbolInterval> out;
    for (uint8_t c : symbols) out.push_back({c, fm.backward_step(c, lb, rb)});
    return out;
}

// row interval of every k-prefix run of the sorted rotations
inline std::vector<tbwt::Interval> kmer_partition(const std::vector<std::string>& rots,
                                                  uint32_t k) {
    std::vector<tbwt::Interval> out;
    uint64_t n = rots.size();
    uint64_t lb = 1;
    for (uint64_t r = 1; r <= n; ++r) {
        if (r == n || rots[r].compare(0, k, rots[r - 1], 0, k) != 0) {
            out.push_back({lb, r});
            lb = r + 1;
        }
    }
    return out;
}

} // namespace testutil
