#include "ta/gf.hpp"

#include <stdexcept>

namespace ta {

bool is_prime_power(int q, int* p_out, int* k_out) {
    if (q < 2) return false;
    int n = q;
    int p = 0;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = n; // prime
    int k = 0;
    while (n > 1) {
        if (n % p != 0) return false;
        n /= p;
        ++k;
    }
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

namespace {

// Irreducible polynomials over GF(p) for the prime powers <= 32, given as the
// coefficient value of x^k (implicit leading 1): f(x) = x^k + poly.
// Encoded base p, low digit = constant term.
struct IrredEntry {
    int q, p, k, poly;
};

constexpr IrredEntry kIrreducibles[] = {
    {4, 2, 2, 0b11},      // x^2 + x + 1
    {8, 2, 3, 0b011},     // x^3 + x + 1
    {9, 3, 2, 1},         // x^2 + 1
    {16, 2, 4, 0b0011},   // x^4 + x + 1
    {25, 5, 2, 5 + 1},    // x^2 + x + 1  (digits: 1 + 1*5)
    {27, 3, 3, 2 * 3 + 1},// x^3 + 2x + 1 (digits: 1 + 2*3)
    {32, 2, 5, 0b00101},  // x^5 + x^2 + 1
};

} // namespace

FiniteField::FiniteField(int q) : q_(q) {
    int p, k;
    if (!is_prime_power(q, &p, &k) || q > 32)
        throw std::invalid_argument("FiniteField: q must be a prime power <= 32");
    p_ = p;

    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    square_.assign(q, 0);

    auto digits = [&](int a) {
        std::vector<int> d(k, 0);
        for (int i = 0; i < k; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    };
    auto value = [&](const std::vector<int>& d) {
        int a = 0;
        for (int i = k - 1; i >= 0; --i) a = a * p + d[i];
        return a;
    };

    int polyred = 0;
    if (k > 1) {
        for (const auto& e : kIrreducibles)
            if (e.q == q) polyred = e.poly;
    }
    std::vector<int> red = digits(polyred); // x^k ≡ -red

    for (int a = 0; a < q; ++a) {
        auto da = digits(a);
        std::vector<int> dn(k);
        for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
        neg_[a] = value(dn);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b);
            std::vector<int> ds(k);
            for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
            add_[a * q + b] = value(ds);

            // polynomial product reduced by x^k = -red
            std::vector<int> prod(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (int d = 2 * k - 2; d >= k; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < k; ++i)
                    prod[d - k + i] = (prod[d - k + i] + c * (p - red[i])) % p;
            }
            prod.resize(k);
            mul_[a * q + b] = value(prod);
        }
    }

    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) {
                inv_[a] = b;
                break;
            }
        square_[mul_[a * q + a]] = 1;
    }
    for (int a = 1; a < q; ++a) {
        if (square_[a])
            Q_.push_back(a);
        else
            N_.push_back(a);
    }

    for (int g = 1; g < q; ++g) {
        int x = g, ord = 1;
        while (x != 1) {
            x = mul_[x * q + g];
            ++ord;
        }
        if (ord == q - 1) {
            gen_ = g;
            break;
        }
    }
}

int FiniteField::inv(int a) const {
    if (a == 0) throw std::invalid_argument("FiniteField: division by zero");
    return inv_[a];
}

std::vector<int> FiniteField::enumeration() const {
    std::vector<int> w;
    w.reserve(q_);
    w.push_back(0);
    int x = 1;
    for (int i = 0; i < q_ - 1; ++i) {
        w.push_back(x);
        x = mul(x, gen_);
    }
    return w;
}

} // namespace ta
