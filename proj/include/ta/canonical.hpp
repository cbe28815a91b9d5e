#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ta/arrays.hpp"
#include "ta/design.hpp"
#include "ta/perm_group.hpp"

namespace ta {

/// Simple undirected graph with an initial vertex coloring.
struct ColoredGraph {
    int n = 0;
    std::vector<int> color;
    std::vector<std::vector<int>> adj;

    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
};

struct GraphCanon {
    std::vector<int> labeling; // vertex -> canonical position
    std::vector<Perm> generators;
    unsigned long long aut_order = 1;
    std::string key; // only filled when requested
};

/// Canonical labeling by color refinement with individualization and
/// backtracking; automorphisms discovered against the first and best leaves
/// prune the tree and generate the full (color-preserving) automorphism
/// group. Reusable: keeps its workspace between calls.
class Canonicalizer {
public:
    const GraphCanon& run(const ColoredGraph& g, bool want_key = false);

    struct Stats {
        long long nodes = 0, evals = 0, refine_ops = 0, leaves = 0, splitters = 0, touched = 0;
    };
    Stats stats;

private:
    struct Frame;
    void refine(std::vector<int>& worklist);
    int first_nonsingleton_cell() const;
    void build_cert(std::vector<uint32_t>& cert) const;
    void save_state(Frame& f) const;
    void restore_state(const Frame& f);

    const ColoredGraph* g_ = nullptr;
    int n_ = 0;
    // CSR adjacency
    std::vector<int> adj_off_, adj_dat_;
    // partition
    std::vector<int> lab_, pos_, cell_start_, cell_len_;
    std::vector<int> cnt_;
    std::vector<char> in_work_, cell_touched_;
    std::vector<uint32_t> trace_;
    // reusable refinement scratch
    std::vector<int> touched_cells_, touched_verts_, worklist_;
    int nonsingleton_ = 0;
    // reference paths
    struct Leaf {
        std::vector<uint32_t> trace;
        std::vector<int> level_end;
        std::vector<uint32_t> cert;
        std::vector<int> labeling;
        bool set = false;
    };
    Leaf first_, best_;
    std::vector<Perm> gens_;
    std::vector<int> prefix_; // individualized vertices on current path
    GraphCanon result_;

    struct Frame {
        std::vector<int> lab, pos, cell_start, cell_len;
        int nonsingleton;
        int trace_len;
        int cmp_first; // 0 = EQ, 1 = DIFF, 2 = recording
        int cmp_best;  // 0 = EQ, 1 = GT, -1 = LT
        std::vector<std::pair<int, std::vector<uint32_t>>> evals; // candidate, segment
    };
    std::vector<Frame> stack_;

    void search(int depth, int cmp_first, int cmp_best);
    void individualize_refine(int v);
    int compare_segment(const Leaf& ref, int depth, const uint32_t* seg, int seg_len) const;
};

/// Convenience wrapper with a thread-local Canonicalizer.
GraphCanon canonicalize(const ColoredGraph& g, bool want_key = true);

// Colored-graph encodings realizing the paper's equivalence notions:
// isomorphism of designs / resolutions / unordered triple arrays, and
// isotopism of triple arrays.
ColoredGraph encode(const BlockDesign& d);
ColoredGraph encode(const Resolution& r);
ColoredGraph encode(const UnorderedTripleArray& u);
ColoredGraph encode(const TripleArray& t);

/// Canonical key plus automorphism-group data for a combinatorial object.
struct CanonicalForm {
    std::string key; // equal iff isomorphic / isotopic (kind-tagged)
    unsigned long long aut_order = 1;
    std::vector<Perm> generators; // on the encoded graph's vertices
};

CanonicalForm canonical_form(const BlockDesign& d);
CanonicalForm canonical_form(const Resolution& r);
CanonicalForm canonical_form(const UnorderedTripleArray& u);
CanonicalForm canonical_form(const TripleArray& t);

std::string canonical_key(const BlockDesign& d);
std::string canonical_key(const Resolution& r);
std::string canonical_key(const UnorderedTripleArray& u);
std::string canonical_key(const TripleArray& t);

template <typename T>
bool are_isomorphic(const T& a, const T& b) {
    return canonical_key(a) == canonical_key(b);
}

template <typename T>
unsigned long long aut_order(const T& x) {
    return canonical_form(x).aut_order;
}

std::string key_to_hex(const std::string& key);

/// Key for t under a canonical labeling of encode(t); shared by the
/// enumeration hot path, which reuses graph and canonicalizer buffers.
std::string ta_key_from_labeling(const TripleArray& t, const std::vector<int>& labeling);

} // namespace ta
