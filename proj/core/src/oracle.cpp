#include "tbwt/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "tbwt/errors.hpp"

namespace tbwt::oracle {

uint64_t MultiDBG::total_multiplicity() const {
    uint64_t total = 0;
    for (const auto& [edge, mult] : edges) total += mult;
    return total;
}

MultiDBG build_dbg(const Text& t, uint32_t k) {
    const size_t n = t.size();
    if (k < 1 || k > n) throw ValidationError("build_dbg: order out of range");

    std::string z(t.bytes.begin(), t.bytes.end());
    z.append(z.substr(0, k)); // Z_k(S) = S S[1..k]

    MultiDBG g;
    g.k = k;
    std::unordered_map<std::string, int32_t> ids;
    auto node_id = [&](const std::string& label) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<int32_t>(g.node_labels.size()));
        if (inserted) g.node_labels.push_back(label);
        return it->second;
    };
    for (size_t i = 0; i < n; ++i) {
        int32_t src = node_id(z.substr(i, k));
        int32_t dst = node_id(z.substr(i + 1, k));
        g.edges[{src, dst}]++;
    }

    g.successors.resize(g.node_labels.size());
    g.predecessors.resize(g.node_labels.size());
    for (const auto& [edge, mult] : g.edges) {
        g.successors[edge.first].push_back(edge.second);
        g.predecessors[edge.second].push_back(edge.first);
    }
    return g;
}

std::pair<MultiDBG, uint64_t> reduce_edges(const MultiDBG& g) {
    MultiDBG reduced = g;
    for (auto& [edge, mult] : reduced.edges) {
        const auto& [src, dst] = edge;
        if (reduced.successors[src].size() == 1 && reduced.predecessors[dst].size() == 1)
            mult = 1;
    }
    return {std::move(reduced), std::accumulate(reduced.edges.begin(), reduced.edges.end(),
                                                uint64_t{0},
                                                [](uint64_t acc, const auto& e) { return acc + e.second; })};
}

RotationTrie RotationTrie::build(const Text& t) {
    const size_t n = t.size();
    if (n > kMaxTrieInput)
        throw ValidationError("rotation trie capped at n <= " + std::to_string(kMaxTrieInput));

    RotationTrie trie;
    trie.n_ = n;
    std::string s(t.bytes.begin(), t.bytes.end());

    std::vector<int32_t> starts(n);
    std::iota(starts.begin(), starts.end(), 0);
    std::vector<std::string> rots(n);
    for (size_t i = 0; i < n; ++i) rots[i] = s.substr(i) + s.substr(0, i);
    std::sort(starts.begin(), starts.end(),
              [&](int32_t a, int32_t b) { return rots[a] < rots[b]; });

    trie.rotations_.resize(n);
    std::vector<int32_t> row_of_start(n);
    for (size_t r = 0; r < n; ++r) {
        trie.rotations_[r] = rots[starts[r]];
        row_of_start[starts[r]] = static_cast<int32_t>(r);
    }
    trie.lf_.resize(n);
    for (size_t r = 0; r < n; ++r)
        trie.lf_[r] = row_of_start[(starts[r] + n - 1) % n] + 1;

    trie.levels_.resize(n + 1);
    trie.nodes_.push_back(Node{-1, -1, -1, 1, static_cast<int32_t>(n), 0, 0});

    // partition rows level by level; children emerge in lexicographic order
    struct Frame {
        int32_t node;
        uint32_t depth;
    };
    std::vector<Frame> stack{{0, 0}};
    while (!stack.empty()) {
        auto [v, depth] = stack.back();
        stack.pop_back();
        if (depth == n) continue;
        int32_t lb = trie.nodes_[v].lb, rb = trie.nodes_[v].rb;
        int32_t prev_child = -1;
        int32_t run_start = lb;
        while (run_start <= rb) {
            uint8_t byte = static_cast<uint8_t>(trie.rotations_[run_start - 1][depth]);
            int32_t run_end = run_start;
            while (run_end < rb &&
                   static_cast<uint8_t>(trie.rotations_[run_end][depth]) == byte)
                ++run_end;
            int32_t child = trie.add_node(v, depth + 1, run_start, run_end, byte);
            if (prev_child == -1)
                trie.nodes_[v].first_child = child;
            else
                trie.nodes_[prev_child].next_sibling = child;
            prev_child = child;
            stack.push_back({child, depth + 1});
            run_start = run_end + 1;
        }
    }
    // depth-first stack visits levels out of order; fix per-level lb order
    for (auto& lvl : trie.levels_)
        std::sort(lvl.begin(), lvl.end(),
                  [&](int32_t a, int32_t b) { return trie.nodes_[a].lb < trie.nodes_[b].lb; });
    return trie;
}

int32_t RotationTrie::add_node(int32_t parent, uint32_t depth, int32_t lb, int32_t rb,
                               uint8_t edge_byte) {
    int32_t id = static_cast<int32_t>(nodes_.size());
    nodes_.push_back(Node{parent, -1, -1, lb, rb, depth, edge_byte});
    levels_[depth].push_back(id);
    return id;
}

const std::vector<int32_t>& RotationTrie::level(uint32_t k) const {
    if (k > n_) throw ValidationError("trie level out of range");
    return levels_[k];
}

bool RotationTrie::has_siblings(int32_t v) const {
    const Node& node = nodes_[v];
    if (node.parent < 0) return false;
    int32_t first = nodes_[node.parent].first_child;
    return nodes_[first].next_sibling != -1;
}

std::string RotationTrie::label(int32_t v) const {
    const Node& node = nodes_[v];
    return rotations_[node.lb - 1].substr(0, node.depth);
}

int32_t RotationTrie::node_at(uint32_t level, int32_t lb, int32_t rb) const {
    const auto& lvl = levels_[level];
    auto it = std::lower_bound(lvl.begin(), lvl.end(), lb, [&](int32_t v, int32_t key) {
        return nodes_[v].lb < key;
    });
    if (it == lvl.end() || nodes_[*it].lb != lb || nodes_[*it].rb != rb)
        throw InternalError("weiner target is not a trie node");
    return *it;
}

std::vector<RotationTrie::WeinerLink> RotationTrie::weiner_links(int32_t v) const {
    const Node& node = nodes_[v];
    if (node.depth == 0) throw ValidationError("weiner links undefined for the root");

    // group rows of the subtree by the last character of their rotation;
    // the target rows are their brute-force LF images
    struct Group {
        int32_t lo, hi;
        uint64_t count;
    };
    std::map<uint8_t, Group> groups;
    for (int32_t row = node.lb; row <= node.rb; ++row) {
        uint8_t last = static_cast<uint8_t>(rotations_[row - 1][n_ - 1]);
        int32_t target_row = lf_[row - 1];
        auto [it, inserted] = groups.try_emplace(last, Group{target_row, target_row, 1});
        if (!inserted) {
            it->second.lo = std::min(it->second.lo, target_row);
            it->second.hi = std::max(it->second.hi, target_row);
            it->second.count++;
        }
    }

    uint32_t target_level = node.depth == n_ ? static_cast<uint32_t>(n_) : node.depth + 1;
    std::vector<WeinerLink> links;
    for (const auto& [byte, grp] : groups) {
        if (grp.hi - grp.lo + 1 != static_cast<int32_t>(grp.count))
            throw InternalError("weiner target rows are not contiguous");
        links.push_back({byte, node_at(target_level, grp.lo, grp.hi), grp.count});
    }
    return links;
}

bool RotationTrie::unique_weiner_link(int32_t v) const {
    const Node& node = nodes_[v];
    uint8_t first = static_cast<uint8_t>(rotations_[node.lb - 1][n_ - 1]);
    for (int32_t row = node.lb + 1; row <= node.rb; ++row)
        if (static_cast<uint8_t>(rotations_[row - 1][n_ - 1]) != first) return false;
    return true;
}

namespace {

uint64_t node_weight(const RotationTrie& trie, int32_t v) {
    if (trie.unique_weiner_link(v)) {
        auto links = trie.weiner_links(v);
        if (!trie.has_siblings(links[0].target)) return 1;
    }
    return trie.width(v);
}

} // namespace

uint64_t weight_sum(const RotationTrie& trie, uint32_t k) {
    if (k < 1 || k > trie.text_length()) throw ValidationError("weight_sum: level out of range");
    uint64_t sum = 0;
    for (int32_t v : trie.level(k)) sum += node_weight(trie, v);
    return sum;
}

PathLemmaReport check_path_lemma(const RotationTrie& trie) {
    PathLemmaReport report;
    const size_t n = trie.text_length();

    // subtree_all_unique computed bottom-up over levels
    std::vector<char> all_unique(trie.node_count(), 1);
    for (uint32_t k = static_cast<uint32_t>(n); k >= 1; --k) {
        for (int32_t v : trie.level(k)) {
            bool unique = trie.unique_weiner_link(v);
            bool below = true;
            for (int32_t c = trie.node(v).first_child; c != -1; c = trie.node(c).next_sibling)
                below = below && all_unique[c];
            all_unique[v] = unique && below;
        }
    }

    // exactly one qualifying node per root-to-leaf path
    for (int32_t leaf : trie.level(static_cast<uint32_t>(n))) {
        std::vector<int32_t> path;
        for (int32_t v = leaf; v > 0; v = trie.node(v).parent) path.push_back(v);
        std::reverse(path.begin(), path.end());

        int qualifying = 0;
        bool ancestors_multi = true;
        for (int32_t v : path) {
            bool unique = trie.unique_weiner_link(v);
            if (unique && ancestors_multi && all_unique[v]) ++qualifying;
            ancestors_multi = ancestors_multi && !unique;
        }
        if (qualifying != 1)
            report.violations.push_back("path to leaf " + trie.label(leaf) + " has " +
                                        std::to_string(qualifying) + " qualifying nodes");
    }

    // weight inheritance at single-child nodes
    for (uint32_t k = 1; k < n; ++k) {
        for (int32_t v : trie.level(k)) {
            int32_t child = trie.node(v).first_child;
            if (child == -1 || trie.node(child).next_sibling != -1) continue;
            uint64_t expected = trie.unique_weiner_link(v) ? 1 : node_weight(trie, v);
            if (node_weight(trie, child) != expected)
                report.violations.push_back("weight inheritance broken at " + trie.label(child));
        }
    }
    return report;
}

} // namespace tbwt::oracle
