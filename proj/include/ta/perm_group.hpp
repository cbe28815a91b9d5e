#pragma once

#include <cstdint>
#include <vector>

namespace ta {

using Perm = std::vector<int>; // images: p[i] = image of i

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b); // apply a first, then b
Perm inverse(const Perm& a);
bool is_identity(const Perm& a);

/// Order of the permutation group generated by gens on n points,
/// via a stabilizer chain (Schreier-Sims). Throws std::overflow_error
/// if the order does not fit in 64 bits.
unsigned long long group_order(int n, const std::vector<Perm>& gens);

/// Orbit partition of 0..n-1 under gens (union-find representatives).
std::vector<int> orbit_representatives(int n, const std::vector<Perm>& gens);

} // namespace ta
