#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ta {

/// A block design: a multiset of blocks over points 0..v-1.
/// Blocks are stored as strictly increasing point lists; the block list
/// itself is order-preserving so that resolutions can address blocks by index.
struct BlockDesign {
    int v = 0;
    std::vector<std::vector<int>> blocks;

    int b() const { return static_cast<int>(blocks.size()); }
};

/// Parameters (v, b, r, k, lambda) of a 2-design.
struct TwoDesignParams {
    long long v = 0, b = 0, r = 0, k = 0, lambda = 0;
    bool operator==(const TwoDesignParams&) const = default;
};

/// A resolution: a partition of the block indices of a design into
/// parallel classes, each class partitioning the point set.
struct Resolution {
    BlockDesign design;
    std::vector<std::vector<int>> classes; // lists of block indices
};

/// Throws std::invalid_argument if d violates the structural invariants
/// (point range, strictly increasing blocks).
void check_structure(const BlockDesign& d);

/// Returns the parameter tuple iff d is a 2-design with k >= 2
/// (equal block sizes, every point pair in exactly lambda blocks).
std::optional<TwoDesignParams> verify_two_design(const BlockDesign& d);

/// True iff b = v and d verifies as a 2-design.
bool is_symmetric(const BlockDesign& d);

/// Converse direction of the symmetric-design characterization: v blocks of
/// size k on v points with every pair of distinct blocks meeting in lambda
/// points. Used as an independent cross-check on is_symmetric.
bool symmetric_by_block_intersections(const BlockDesign& d);

/// Points and blocks exchanged: point p becomes the block of indices of
/// blocks containing p.
BlockDesign dual(const BlockDesign& d);

/// Every block B replaced by P \ B.
BlockDesign complement(const BlockDesign& d);

/// Each block repeated m times (m >= 1).
BlockDesign multiple(const BlockDesign& d, int m);

/// True iff the classes partition the block indices and every class
/// partitions the point set.
bool verify_resolution(const Resolution& res);

} // namespace ta
