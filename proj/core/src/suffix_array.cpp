#include "tbwt/suffix_array.hpp"

#include <algorithm>
#include <limits>

#include "tbwt/errors.hpp"

namespace tbwt {

namespace {

constexpr int32_t kEmpty = -1;

template <typename CharT>
void get_buckets(const CharT* s, int32_t* bkt, int32_t n, int32_t sigma, bool ends) {
    std::fill(bkt, bkt + sigma, 0);
    for (int32_t i = 0; i < n; ++i) bkt[s[i]]++;
    int32_t sum = 0;
    for (int32_t c = 0; c < sigma; ++c) {
        int32_t cnt = bkt[c];
        sum += cnt;
        bkt[c] = ends ? sum : sum - cnt;
    }
}

template <typename CharT>
void induce_l(const CharT* s, int32_t* sa, const std::vector<bool>& stype, int32_t* bkt,
              int32_t n, int32_t sigma) {
    get_buckets(s, bkt, n, sigma, false);
    for (int32_t i = 0; i < n; ++i) {
        int32_t j = sa[i] - 1;
        if (sa[i] > 0 && !stype[j]) sa[bkt[s[j]]++] = j;
    }
}

template <typename CharT>
void induce_s(const CharT* s, int32_t* sa, const std::vector<bool>& stype, int32_t* bkt,
              int32_t n, int32_t sigma) {
    get_buckets(s, bkt, n, sigma, true);
    for (int32_t i = n - 1; i >= 0; --i) {
        int32_t j = sa[i] - 1;
        if (sa[i] > 0 && stype[j]) sa[--bkt[s[j]]] = j;
    }
}

// s[n-1] must be the unique smallest symbol of s.
template <typename CharT>
void sais(const CharT* s, int32_t* sa, int32_t n, int32_t sigma) {
    if (n == 1) {
        sa[0] = 0;
        return;
    }

    std::vector<bool> stype(n);
    stype[n - 1] = true;
    for (int32_t i = n - 2; i >= 0; --i)
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    auto is_lms = [&](int32_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<int32_t> bkt(sigma);

    // stage 1: sort the LMS substrings by one induced pass
    std::fill(sa, sa + n, kEmpty);
    get_buckets(s, bkt.data(), n, sigma, true);
    for (int32_t i = 1; i < n; ++i)
        if (is_lms(i)) sa[--bkt[s[i]]] = i;
    induce_l(s, sa, stype, bkt.data(), n, sigma);
    induce_s(s, sa, stype, bkt.data(), n, sigma);

    int32_t n1 = 0;
    for (int32_t i = 0; i < n; ++i)
        if (is_lms(sa[i])) sa[n1++] = sa[i];

    // name the LMS substrings into sa[n1..n)
    std::fill(sa + n1, sa + n, kEmpty);
    int32_t name = 0, prev = -1;
    for (int32_t i = 0; i < n1; ++i) {
        int32_t pos = sa[i];
        bool diff = false;
        for (int32_t d = 0; d < n; ++d) {
            if (prev == -1 || s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
                diff = true;
                break;
            }
            if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
        }
        if (diff) {
            ++name;
            prev = pos;
        }
        sa[n1 + pos / 2] = name - 1;
    }
    for (int32_t i = n - 1, j = n - 1; i >= n1; --i)
        if (sa[i] != kEmpty) sa[j--] = sa[i];

    // stage 2: order the reduced string (recurse only if names repeat)
    int32_t* sa1 = sa;
    int32_t* s1 = sa + n - n1;
    if (name < n1) {
        sais(s1, sa1, n1, name);
    } else {
        for (int32_t i = 0; i < n1; ++i) sa1[s1[i]] = i;
    }

    // stage 3: induce the full order from the sorted LMS positions
    for (int32_t i = 1, j = 0; i < n; ++i)
        if (is_lms(i)) s1[j++] = i;
    for (int32_t i = 0; i < n1; ++i) sa1[i] = s1[sa1[i]];
    std::fill(sa + n1, sa + n, kEmpty);
    get_buckets(s, bkt.data(), n, sigma, true);
    for (int32_t i = n1 - 1; i >= 0; --i) {
        int32_t j = sa[i];
        sa[i] = kEmpty;
        sa[--bkt[s[j]]] = j;
    }
    induce_l(s, sa, stype, bkt.data(), n, sigma);
    induce_s(s, sa, stype, bkt.data(), n, sigma);
}

} // namespace

std::vector<int32_t> build_suffix_array(std::span<const uint8_t> text) {
    if (text.empty()) throw ValidationError("suffix array input must not be empty");
    if (text.size() > static_cast<size_t>(std::numeric_limits<int32_t>::max()))
        throw ValidationError("input too large for 32-bit suffix array");
    if (text.back() != 0) throw InternalError("dense text must end with code 0");
    int32_t n = static_cast<int32_t>(text.size());
    int32_t sigma = 1 + *std::max_element(text.begin(), text.end());
    std::vector<int32_t> sa(n);
    sais(text.data(), sa.data(), n, sigma);
    return sa;
}

} // namespace tbwt
