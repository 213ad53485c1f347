#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tbwt/text.hpp"

namespace tbwt::oracle {

/// Explicit-trie inputs are O(n^2); reject anything bigger than this.
constexpr size_t kMaxTrieInput = 1000;

/// Order-k de Bruijn multigraph of the cyclic extension Z_k(S) = S S[1..k].
/// Node ids index node_labels; edge multiplicities are keyed by (src, dst).
struct MultiDBG {
    uint32_t k = 0;
    std::vector<std::string> node_labels;
    std::map<std::pair<int32_t, int32_t>, uint64_t> edges;
    std::vector<std::vector<int32_t>> successors;   // distinct, ascending
    std::vector<std::vector<int32_t>> predecessors; // distinct, ascending

    uint64_t total_multiplicity() const;
};

MultiDBG build_dbg(const Text& t, uint32_t k);

/// Sets the multiplicity of every fusible edge to one. An edge (x,y) is
/// fusible when y is the only successor of x and x the only predecessor
/// of y. Returns the reduced graph and its total edge multiplicity m_k.
std::pair<MultiDBG, uint64_t> reduce_edges(const MultiDBG& g);

/// Trie over all n rotations of the text, siblings in lexicographic order.
/// Rows and leaf ranks are 1-based; node 0 is the root.
class RotationTrie {
  public:
    struct Node {
        int32_t parent = -1;
        int32_t first_child = -1;
        int32_t next_sibling = -1;
        int32_t lb = 0; // leftmost leaf rank
        int32_t rb = 0; // rightmost leaf rank
        uint32_t depth = 0;
        uint8_t edge_byte = 0;
    };

    struct WeinerLink {
        uint8_t byte;          // original byte value c
        int32_t target;        // node with label c l(phi) (cyclic wrap at depth n)
        uint64_t multiplicity; // leaves below phi whose label ends with c
    };

    static RotationTrie build(const Text& t);

    size_t text_length() const { return n_; }
    const Node& node(int32_t v) const { return nodes_[v]; }
    size_t node_count() const { return nodes_.size(); }
    const std::vector<int32_t>& level(uint32_t k) const;
    uint32_t depth() const { return static_cast<uint32_t>(n_); }

    int32_t width(int32_t v) const { return nodes_[v].rb - nodes_[v].lb + 1; }
    bool has_siblings(int32_t v) const;
    bool is_rightmost_sibling(int32_t v) const { return nodes_[v].next_sibling == -1; }
    std::string label(int32_t v) const;

    /// Sorted rotation r (1-based row) as a byte string.
    const std::string& rotation(int32_t row) const { return rotations_[row - 1]; }
    /// Row holding the left rotation of row (the brute-force LF-mapping).
    int32_t lf_row(int32_t row) const { return lf_[row - 1]; }

    std::vector<WeinerLink> weiner_links(int32_t v) const;
    bool unique_weiner_link(int32_t v) const;

  private:
    int32_t add_node(int32_t parent, uint32_t depth, int32_t lb, int32_t rb, uint8_t edge_byte);
    int32_t node_at(uint32_t level, int32_t lb, int32_t rb) const;

    std::vector<Node> nodes_;
    std::vector<std::vector<int32_t>> levels_; // levels_[k] = node ids at depth k, by lb
    std::vector<std::string> rotations_;       // sorted
    std::vector<int32_t> lf_;                  // 1-based rows
    size_t n_ = 0;
};

/// Naive m_k: sum of node weights over level k. Weight is 1 for a node with
/// a unique Weiner link whose target has no siblings, the node width
/// otherwise. Must equal reduce_edges(build_dbg(t, k)).second.
uint64_t weight_sum(const RotationTrie& trie, uint32_t k);

struct PathLemmaReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks, per root-to-leaf path, that exactly one node has a unique Weiner
/// link with all-unique subtree below and only multi-link ancestors above;
/// also checks both weight-inheritance cases on every single-child node.
PathLemmaReport check_path_lemma(const RotationTrie& trie);

} // namespace tbwt::oracle
