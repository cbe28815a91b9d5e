#pragma once

#include <optional>

#include "ta/arrays.hpp"
#include "ta/exact_cover.hpp"

namespace ta {

/// The exact-cover instance of the ordering problem for a UTA: items
/// x_ij (cells), y_ia (row slots) and z_ja (column slots), with one
/// size-3 option {x_ij, y_ia, z_ja} per a in R_i ∩ C_j. back[k] = (i, j, a).
struct OrderingInstance {
    ExactCoverInstance ec;
    int r = 0, c = 0, v = 0;
    struct Placement {
        int i, j, a;
    };
    std::vector<Placement> back;
};

OrderingInstance build_ordering_instance(const UnorderedTripleArray& u);

/// Decodes an exact cover (option index list) into the grid it places.
TripleArray decode_ordering(const OrderingInstance& inst, const std::vector<int>& solution);

/// One ordering of u, or absence if u cannot be ordered.
std::optional<TripleArray> order_uta(const UnorderedTripleArray& u, uint64_t node_budget = 0,
                                     bool* exhausted = nullptr);

/// Streams every labeled ordering of u (deterministic order).
SolveStats enumerate_orderings(const UnorderedTripleArray& u,
                               const std::function<bool(const TripleArray&)>& visit,
                               uint64_t node_budget = 0);

} // namespace ta
