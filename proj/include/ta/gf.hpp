#pragma once

#include <cstdint>
#include <vector>

namespace ta {

/// Arithmetic tables for GF(q), q = p^k <= 32. Elements are 0..q-1; a
/// non-prime q encodes polynomial coefficients over GF(p) as base-p digits,
/// reduced by a fixed irreducible polynomial.
class FiniteField {
public:
    /// Throws std::invalid_argument for non-prime-powers or q > 32.
    explicit FiniteField(int q);

    int q() const { return q_; }
    int p() const { return p_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const; // throws on a == 0
    int div(int a, int b) const { return mul(a, inv(b)); }

    bool is_square(int a) const { return a != 0 && square_[a]; }      // a in Q
    bool is_nonsquare(int a) const { return a != 0 && !square_[a]; }  // a in N
    bool in_Q0(int a) const { return a == 0 || square_[a]; }
    bool in_N0(int a) const { return a == 0 || !square_[a]; }

    const std::vector<int>& squares() const { return Q_; }     // Q
    const std::vector<int>& nonsquares() const { return N_; }  // N

    /// A fixed primitive element (smallest one in element order).
    int generator() const { return gen_; }

    /// Fixed enumeration of the field: 0 first, then powers of the generator.
    std::vector<int> enumeration() const;

private:
    int q_, p_;
    std::vector<int> add_, mul_, neg_, inv_;
    std::vector<char> square_;
    std::vector<int> Q_, N_;
    int gen_ = 0;
};

bool is_prime_power(int q, int* p_out = nullptr, int* k_out = nullptr);

} // namespace ta
