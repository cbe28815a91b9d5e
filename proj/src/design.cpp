#include "ta/design.hpp"

#include <algorithm>
#include <stdexcept>

#include "ta/bitvec.hpp"

namespace ta {

void check_structure(const BlockDesign& d) {
    if (d.v < 0) throw std::invalid_argument("negative point count");
    for (const auto& blk : d.blocks) {
        for (size_t i = 0; i < blk.size(); ++i) {
            if (blk[i] < 0 || blk[i] >= d.v) throw std::invalid_argument("point index out of range");
            if (i > 0 && blk[i] <= blk[i - 1])
                throw std::invalid_argument("block points must be strictly increasing");
        }
    }
}

std::optional<TwoDesignParams> verify_two_design(const BlockDesign& d) {
    if (d.v < 2 || d.blocks.empty()) return std::nullopt;
    size_t k = d.blocks.front().size();
    if (k < 2) return std::nullopt;
    for (const auto& blk : d.blocks)
        if (blk.size() != k) return std::nullopt;

    // Count occurrences of every unordered pair.
    std::vector<int> paircnt(static_cast<size_t>(d.v) * d.v, 0);
    for (const auto& blk : d.blocks)
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j) ++paircnt[static_cast<size_t>(blk[i]) * d.v + blk[j]];

    int lambda = paircnt[1]; // pair {0,1}
    for (int x = 0; x < d.v; ++x)
        for (int y = x + 1; y < d.v; ++y)
            if (paircnt[static_cast<size_t>(x) * d.v + y] != lambda) return std::nullopt;
    if (lambda <= 0) return std::nullopt;

    TwoDesignParams p;
    p.v = d.v;
    p.b = d.b();
    p.k = static_cast<long long>(k);
    p.lambda = lambda;
    // r = lambda (v-1) / (k-1), integral whenever the pair counts are constant
    p.r = static_cast<long long>(lambda) * (d.v - 1) / (static_cast<long long>(k) - 1);
    return p;
}

bool is_symmetric(const BlockDesign& d) {
    if (d.b() != d.v) return false;
    return verify_two_design(d).has_value();
}

bool symmetric_by_block_intersections(const BlockDesign& d) {
    if (d.b() != d.v || d.blocks.empty()) return false;
    size_t k = d.blocks.front().size();
    for (const auto& blk : d.blocks)
        if (blk.size() != k) return false;
    std::vector<BitVec> bits;
    bits.reserve(d.blocks.size());
    for (const auto& blk : d.blocks) bits.push_back(to_bitvec(d.v, blk));
    int lambda = -1;
    for (size_t i = 0; i < bits.size(); ++i)
        for (size_t j = i + 1; j < bits.size(); ++j) {
            int m = bits[i].intersect_count(bits[j]);
            if (lambda < 0) lambda = m;
            if (m != lambda) return false;
        }
    return true;
}

BlockDesign dual(const BlockDesign& d) {
    BlockDesign out;
    out.v = d.b();
    out.blocks.assign(d.v, {});
    for (int bi = 0; bi < d.b(); ++bi)
        for (int p : d.blocks[bi]) out.blocks[p].push_back(bi);
    return out;
}

BlockDesign complement(const BlockDesign& d) {
    BlockDesign out;
    out.v = d.v;
    out.blocks.reserve(d.blocks.size());
    for (const auto& blk : d.blocks) {
        std::vector<int> c;
        c.reserve(d.v - blk.size());
        size_t j = 0;
        for (int p = 0; p < d.v; ++p) {
            if (j < blk.size() && blk[j] == p) {
                ++j;
            } else {
                c.push_back(p);
            }
        }
        out.blocks.push_back(std::move(c));
    }
    return out;
}

BlockDesign multiple(const BlockDesign& d, int m) {
    if (m < 1) throw std::invalid_argument("multiple: m must be >= 1");
    BlockDesign out;
    out.v = d.v;
    out.blocks.reserve(d.blocks.size() * m);
    for (const auto& blk : d.blocks)
        for (int i = 0; i < m; ++i) out.blocks.push_back(blk);
    return out;
}

bool verify_resolution(const Resolution& res) {
    const BlockDesign& d = res.design;
    std::vector<char> used(d.blocks.size(), 0);
    for (const auto& cls : res.classes) {
        std::vector<char> covered(d.v, 0);
        for (int bi : cls) {
            if (bi < 0 || bi >= d.b() || used[bi]) return false;
            used[bi] = 1;
            for (int p : d.blocks[bi]) {
                if (covered[p]) return false;
                covered[p] = 1;
            }
        }
        if (std::count(covered.begin(), covered.end(), 1) != d.v) return false;
    }
    return std::count(used.begin(), used.end(), 1) == d.b();
}

} // namespace ta
