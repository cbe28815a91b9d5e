#pragma once

#include "ta/arrays.hpp"
#include "ta/design.hpp"

namespace ta {

/// Splits a symmetric 2-(r+c, r, lambda_cc) design on a fixed point sigma:
/// column-sets are the blocks avoiding sigma, row-sets the complements of the
/// blocks containing it. Symbols are the points other than sigma, renumbered
/// 0..v-1 order-preservingly. Yields an extremal (r x c, r+c-1) UTA.
UnorderedTripleArray agrawal(const BlockDesign& s, int sigma);

/// Reverses the split: blocks C_1..C_c together with V \ R_i ∪ {sigma}
/// (sigma appended as point index v) form a symmetric 2-(r+c, r, lambda_cc)
/// design. Requires an extremal verified UTA.
BlockDesign agrawal_reverse(const UnorderedTripleArray& u);

/// Blocks B_xy of the resolution become symbols; R_i is the union of the
/// classes B_x with i in S_x, C_j collects the blocks through point j.
/// class_order[x] selects which parallel class plays the role of B_x.
/// Symbol ids are x*k + y (class slot x, block position y within the class).
UnorderedTripleArray ruta(const BlockDesign& s, const Resolution& res,
                          const std::vector<int>& class_order);

/// Resolvable ((q^n-1)/(q-1) x q^n)-UTA built from the trivial symmetric
/// design (n = 2) or the complement of PG_{n-2}(n-1, q), and the hyperplane
/// resolution of AG_{n-1}(n, q).
UnorderedTripleArray family_ag(int q, int n);

/// Resolvable ((4m-1) x 4m, 8m-2)-UTA from a symmetric 2-(4m-1, 2m-1, m-1)
/// design. The extra point gets index 4m-1.
UnorderedTripleArray family_hadamard(const BlockDesign& d);

/// Resolvable non-extremal UTA of the PG(3, q) family: S = PG(2, q) and a
/// resolution (packing) of the line design of PG(3, q). For q = 2 the packing
/// can be one of the bundled Kirkman parades.
UnorderedTripleArray family_pg3(int q, const Resolution& packing);

/// The trivial symmetric 2-(q+1, q, q-1) design: all q-subsets of q+1 points.
BlockDesign trivial_symmetric_design(int q);

/// The symmetric 2-(q, (q-1)/2, (q-3)/4) design with blocks Q + i over
/// GF(q), q ≡ 3 (mod 4): the translates of the nonzero squares.
BlockDesign quadratic_residue_design(int q);

struct PaleyInput {
    int q;    // prime power, q ≡ 3 (mod 4), q >= 7
    int a, b; // nonzero field elements
};

/// The q x (q+1) Paley array on 2q symbols (element x unprimed = x,
/// primed = q + x). Requires (a-1)(b+1) to be a nonzero square and,
/// when a-1 is a non-square, ab a square; when ab is also a square the
/// array is resolvable with groups {w_s, w_s'}.
TripleArray paley(const PaleyInput& in);

/// Both §6 conditions: (a-1)(b+1) in Q and ab in Q.
bool paley_resolvable_conditions(int q, int a, int b);

} // namespace ta
