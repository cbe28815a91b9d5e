#include "ta/ordering.hpp"

#include <stdexcept>

#include "ta/bitvec.hpp"

namespace ta {

OrderingInstance build_ordering_instance(const UnorderedTripleArray& u) {
    OrderingInstance inst;
    inst.r = u.r();
    inst.c = u.c();
    inst.v = u.v;
    int r = inst.r, c = inst.c;
    inst.ec.n_items = 3 * r * c;

    // y_ia at rc + i*c + rank of a within R_i; z_ja at 2rc + j*r + rank in C_j
    std::vector<std::vector<int>> yrank(r, std::vector<int>(u.v, -1));
    std::vector<std::vector<int>> zrank(c, std::vector<int>(u.v, -1));
    for (int i = 0; i < r; ++i)
        for (size_t t = 0; t < u.row_sets[i].size(); ++t) yrank[i][u.row_sets[i][t]] = static_cast<int>(t);
    for (int j = 0; j < c; ++j)
        for (size_t t = 0; t < u.col_sets[j].size(); ++t) zrank[j][u.col_sets[j][t]] = static_cast<int>(t);

    std::vector<BitVec> colbits;
    for (const auto& s : u.col_sets) colbits.push_back(to_bitvec(u.v, s));
    for (int i = 0; i < r; ++i) {
        BitVec rowbits = to_bitvec(u.v, u.row_sets[i]);
        for (int j = 0; j < c; ++j) {
            for (int a : u.row_sets[i]) {
                if (!colbits[j].test(a)) continue;
                int x = i * c + j;
                int y = r * c + i * c + yrank[i][a];
                int z = 2 * r * c + j * r + zrank[j][a];
                inst.ec.options.push_back({x, y, z});
                inst.back.push_back({i, j, a});
            }
        }
    }
    return inst;
}

TripleArray decode_ordering(const OrderingInstance& inst, const std::vector<int>& solution) {
    TripleArray t;
    t.r = inst.r;
    t.c = inst.c;
    t.v = inst.v;
    t.cells.assign(static_cast<size_t>(t.r) * t.c, -1);
    for (int opt : solution) {
        const auto& pl = inst.back[opt];
        t.at(pl.i, pl.j) = pl.a;
    }
    for (int x : t.cells)
        if (x < 0) throw std::logic_error("decode_ordering: incomplete cover");
    return t;
}

std::optional<TripleArray> order_uta(const UnorderedTripleArray& u, uint64_t node_budget, bool* exhausted) {
    OrderingInstance inst = build_ordering_instance(u);
    ExactCoverSolver solver(inst.ec);
    auto [sol, st] = solver.find_first(node_budget);
    if (exhausted) *exhausted = st.exhausted_budget;
    if (sol.empty()) return std::nullopt;
    return decode_ordering(inst, sol);
}

SolveStats enumerate_orderings(const UnorderedTripleArray& u,
                               const std::function<bool(const TripleArray&)>& visit,
                               uint64_t node_budget) {
    OrderingInstance inst = build_ordering_instance(u);
    ExactCoverSolver solver(inst.ec);
    return solver.solve(
        [&](const std::vector<int>& sol) { return visit(decode_ordering(inst, sol)); }, node_budget);
}

} // namespace ta
