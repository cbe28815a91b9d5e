#pragma once

#include <optional>

#include "ta/arrays.hpp"
#include "ta/design.hpp"

namespace ta {

/// An affine plane of order q with its unique resolution into q+1 parallel
/// classes and the line-through table.
struct AffinePlaneContext {
    int q = 0;
    BlockDesign plane;                       // 2-(q^2, q, 1)
    std::vector<std::vector<int>> classes;   // q+1 classes of q line indices
    std::vector<int> class_of;               // line index -> class
    std::vector<std::vector<int>> line_of;   // [class][point] -> line index
};

/// Builds the context from any affine plane of order q (lines grouped into
/// parallel classes by disjointness). Throws if d is not a 2-(q^2, q, 1).
AffinePlaneContext affine_context(const BlockDesign& d);

/// Context for the Galois plane AG(2, q).
AffinePlaneContext affine_context(int q);

/// Validates the r = e+1 parameter collapse: a non-trivial admissible
/// (r x c, v) with r = e+1 forces c = e^2 and v = e(e+1) (and lambda_cc = 1).
/// Returns the forced (c, v); throws if the hypothesis fails.
std::pair<long long, long long> collapse_params(long long r, long long c, long long v);

/// The unique resolvable ((q+1) x q^2, q(q+1))-UTA of an affine plane:
/// symbols are lines, C_j the lines through point j, R_i all lines outside
/// class i.
UnorderedTripleArray uta_from_affine_plane(const AffinePlaneContext& ctx);

/// Resolvability witness via V_i = symbols missing from row i; always
/// succeeds for verified ((q+1) x q^2, q(q+1)) UTAs.
ResolutionWitness uta_is_resolvable_affine(const UnorderedTripleArray& u);

/// Per-point permutations of the parallel-class labels: each a derangement,
/// with collinear points disagreeing at the class of their common line.
struct DerangementAssignment {
    std::vector<std::vector<int>> sigma; // [point][class] -> row (0-based)
};

/// Backtracking search over points in the fixed plane order, derangements
/// tried lexicographically. Absence is meaningful (no solution exists).
std::optional<DerangementAssignment> solve_derangements(const AffinePlaneContext& ctx);
long long count_derangement_solutions(const AffinePlaneContext& ctx);

/// Checks both defining conditions of a derangement assignment.
bool check_derangement_assignment(const AffinePlaneContext& ctx, const DerangementAssignment& d);

/// Places line_of[i][j] in the cell (sigma_j(i), j); symbols are line ids.
TripleArray derangements_to_ta(const AffinePlaneContext& ctx, const DerangementAssignment& d);

/// Forward direction: reads the assignment back off a triple array whose
/// underlying UTA is uta_from_affine_plane(ctx) with matching labels.
DerangementAssignment ta_to_derangements(const AffinePlaneContext& ctx, const TripleArray& t);

/// The (q+1)-partite hypergraph reformulation: vertices v_ij and w_i, edges
/// e(p_j), e(l) and e_0.
struct PartitenessInstance {
    int q = 0;
    int n_vertices = 0;
    std::vector<std::vector<int>> edges;
};

PartitenessInstance build_partiteness_instance(const AffinePlaneContext& ctx);

/// Solves via the derangement reduction, then validates the partition
/// directly against the instance. Returns vertex -> part, or absence.
std::optional<std::vector<int>> solve_partiteness(const AffinePlaneContext& ctx,
                                                  const PartitenessInstance& inst);

/// Independent checker: every edge meets every part exactly once.
bool check_partition(const PartitenessInstance& inst, const std::vector<int>& part);

/// All derangements of 0..n-1 in lexicographic order.
std::vector<std::vector<int>> derangements(int n);

} // namespace ta
