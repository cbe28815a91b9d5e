#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ta {

/// A generic exact-cover instance: universe 0..n_items-1 and a list of
/// options, each a sorted list of item indices.
struct ExactCoverInstance {
    int n_items = 0;
    std::vector<std::vector<int>> options;
};

std::string write_exact_cover(const ExactCoverInstance& inst);
ExactCoverInstance read_exact_cover(std::istream& in);
ExactCoverInstance read_exact_cover_file(const std::string& path);

struct SolveStats {
    uint64_t nodes = 0;
    uint64_t solutions = 0;
    bool exhausted_budget = false; // distinct from "search space exhausted"
};

/// Backtracking exact-cover search over sparse active-option sets.
/// Deterministic: always branches on the uncovered item with the fewest
/// remaining options (ties by lowest item index), trying options in
/// ascending option order. A node budget of 0 means unlimited.
class ExactCoverSolver {
public:
    explicit ExactCoverSolver(const ExactCoverInstance& inst);

    /// Visits every exact cover (as a sorted list of option indices) until
    /// the visitor returns false or the budget runs out.
    SolveStats solve(const std::function<bool(const std::vector<int>&)>& visit,
                     uint64_t node_budget = 0);

    SolveStats count_all(uint64_t node_budget = 0);
    std::pair<std::vector<int>, SolveStats> find_first(uint64_t node_budget = 0);

private:
    void cover(int opt);
    void uncover_to(size_t hide_mark, size_t cover_mark);
    void hide(int opt, int item);
    bool recurse();

    int n_items_;
    // options in CSR form; pos_[k] = position of option in item list
    std::vector<int> opt_off_, opt_items_, opt_pos_;
    std::vector<std::vector<int>> item_opts_;
    std::vector<int> alen_;      // active prefix length per item
    std::vector<char> covered_;
    std::vector<int> hide_trail_;   // item whose list shrank
    std::vector<int> cover_trail_;  // covered items
    std::vector<int> choice_;
    uint64_t nodes_ = 0, budget_ = 0, solutions_ = 0;
    bool stop_ = false, exhausted_ = false;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

} // namespace ta
