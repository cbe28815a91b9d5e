#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ta {

// Fixed-universe bitset used for set intersections on points/symbols.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    int size() const { return n_; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    int intersect_count(const BitVec& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    static int intersect3_count(const BitVec& a, const BitVec& b, const BitVec& c) {
        int n = 0;
        for (size_t i = 0; i < a.w_.size(); ++i) n += std::popcount(a.w_[i] & b.w_[i] & c.w_[i]);
        return n;
    }

    std::vector<int> to_list() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    bool operator==(const BitVec& o) const = default;
    auto operator<=>(const BitVec& o) const { return w_ <=> o.w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

inline BitVec to_bitvec(int universe, const std::vector<int>& xs) {
    BitVec b(universe);
    for (int x : xs) b.set(x);
    return b;
}

} // namespace ta
