#pragma once

#include <optional>
#include <vector>

#include "ta/design.hpp"
#include "ta/rational.hpp"

namespace ta {

/// The parameters of an (r x c, v) array, with the derived intersection
/// numbers as exact rationals, and the three admissibility flags.
/// e = rc/v, lambda_rc = e, lambda_rr = c(e-1)/(r-1), lambda_cc = r(e-1)/(c-1),
/// lambda_rrc = e(e-1)/(r-1), k = c/e.
struct ArrayParams {
    long long r = 0, c = 0, v = 0;
    Rational e, lambda_rc, lambda_rr, lambda_cc, lambda_rrc, k;
    bool ta_admissible = false;         // e, lambda_rr, lambda_cc integral
    bool quad_admissible = false;       // additionally lambda_rrc integral
    bool resolvable_admissible = false; // additionally k integral

    bool trivial() const { return v == r * c || v == std::max(r, c); }
    bool extremal() const { return v == r + c - 1; }
};

/// Derived parameters and admissibility flags for (r x c, v).
/// Requires r, c, v >= 1 and v | rc.
ArrayParams params_for(long long r, long long c, long long v);

/// An unordered triple array candidate: r row-sets of size c and c
/// column-sets of size r over symbols 0..v-1 (sets sorted).
struct UnorderedTripleArray {
    int v = 0;
    std::vector<std::vector<int>> row_sets;
    std::vector<std::vector<int>> col_sets;

    int r() const { return static_cast<int>(row_sets.size()); }
    int c() const { return static_cast<int>(col_sets.size()); }
};

/// An r x c grid of symbol indices.
struct TripleArray {
    int v = 0;
    int r = 0, c = 0;
    std::vector<int> cells; // row-major

    int& at(int i, int j) { return cells[i * c + j]; }
    int at(int i, int j) const { return cells[i * c + j]; }
};

/// Witness that a UTA is resolvable: symbols partitioned into r groups of
/// size k sharing identical row incidence, each column-set meeting each
/// group once. missing_row[g] is the one row-set avoiding group g.
struct ResolutionWitness {
    std::vector<std::vector<int>> groups;
    std::vector<int> missing_row;
};

/// All defining conditions of an unordered triple array.
bool verify_uta(const UnorderedTripleArray& u);

/// Binary + equireplicate + (RC)/(RR)/(CC) with the params_for values.
bool verify_ta(const TripleArray& t);

/// Row/column contents of t as a UTA. Requires t binary.
UnorderedTripleArray underlying(const TripleArray& t);

/// Row design (dual of the row-sets) and column design (dual of the
/// column-sets): 2-(r, v, c, e, lambda_rr) and 2-(c, v, r, e, lambda_cc).
std::pair<BlockDesign, BlockDesign> component_designs(const UnorderedTripleArray& u);

/// Witness present iff u is resolvable: groups symbols by identical
/// row-incidence vectors and checks group sizes and column coverage.
std::optional<ResolutionWitness> detect_resolution(const UnorderedTripleArray& u);

/// True iff |R_i ∩ R_s ∩ C_j| = lambda_rrc for all i != s and j.
bool is_quad(const UnorderedTripleArray& u);
bool is_quad(const TripleArray& t);

TripleArray transpose(const TripleArray& t);
UnorderedTripleArray transpose(const UnorderedTripleArray& u);

/// All non-trivial parameter sets with replication number e <= e_max that are
/// admissible for quad arrays in both orientations (expected empty).
/// Scans unordered pairs {r, c}, r < c.
std::vector<ArrayParams> scan_quad_transpose(long long e_max);

/// All non-trivial (r x c, v) with e <= e_max admissible for quad arrays
/// in the given orientation (r rows).
std::vector<ArrayParams> scan_quad_admissible(long long e_max);

} // namespace ta
