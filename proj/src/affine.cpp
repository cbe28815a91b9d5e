#include "ta/affine.hpp"

#include <algorithm>
#include <stdexcept>

#include "ta/bitvec.hpp"
#include "ta/geometry.hpp"

namespace ta {

AffinePlaneContext affine_context(const BlockDesign& d) {
    auto p = verify_two_design(d);
    if (!p || p->lambda != 1 || p->v != p->k * p->k)
        throw std::invalid_argument("affine_context: not a 2-(q^2, q, 1) design");
    AffinePlaneContext ctx;
    ctx.q = static_cast<int>(p->k);
    ctx.plane = d;
    int q = ctx.q;

    // parallel = disjoint; parallelism is an equivalence on the lines
    std::vector<BitVec> bits;
    for (const auto& blk : d.blocks) bits.push_back(to_bitvec(d.v, blk));
    ctx.class_of.assign(d.b(), -1);
    for (int l = 0; l < d.b(); ++l) {
        if (ctx.class_of[l] >= 0) continue;
        int ci = static_cast<int>(ctx.classes.size());
        ctx.classes.push_back({l});
        ctx.class_of[l] = ci;
        for (int m = l + 1; m < d.b(); ++m)
            if (ctx.class_of[m] < 0 && bits[l].intersect_count(bits[m]) == 0) {
                ctx.class_of[m] = ci;
                ctx.classes.back().push_back(m);
            }
    }
    if (static_cast<int>(ctx.classes.size()) != q + 1)
        throw std::invalid_argument("affine_context: line set does not resolve into q+1 classes");
    for (const auto& cls : ctx.classes)
        if (static_cast<int>(cls.size()) != q)
            throw std::invalid_argument("affine_context: parallel class of wrong size");

    ctx.line_of.assign(q + 1, std::vector<int>(d.v, -1));
    for (int l = 0; l < d.b(); ++l)
        for (int pt : d.blocks[l]) ctx.line_of[ctx.class_of[l]][pt] = l;
    return ctx;
}

AffinePlaneContext affine_context(int q) { return affine_context(ag_design(2, 1, q).design); }

std::pair<long long, long long> collapse_params(long long r, long long c, long long v) {
    ArrayParams p = params_for(r, c, v);
    if (!p.ta_admissible || p.trivial()) throw std::invalid_argument("collapse_params: need a non-trivial admissible set");
    long long e = p.e.as_int();
    if (r != e + 1) throw std::invalid_argument("collapse_params: hypothesis r = e+1 fails");
    return {e * e, e * (e + 1)};
}

UnorderedTripleArray uta_from_affine_plane(const AffinePlaneContext& ctx) {
    int q = ctx.q;
    UnorderedTripleArray u;
    u.v = ctx.plane.b(); // q(q+1) lines as symbols
    u.row_sets.assign(q + 1, {});
    for (int l = 0; l < ctx.plane.b(); ++l)
        for (int i = 0; i <= q; ++i)
            if (ctx.class_of[l] != i) u.row_sets[i].push_back(l);
    u.col_sets.assign(ctx.plane.v, {});
    for (int l = 0; l < ctx.plane.b(); ++l)
        for (int pt : ctx.plane.blocks[l]) u.col_sets[pt].push_back(l);
    for (auto& s : u.row_sets) std::sort(s.begin(), s.end());
    for (auto& s : u.col_sets) std::sort(s.begin(), s.end());
    return u;
}

ResolutionWitness uta_is_resolvable_affine(const UnorderedTripleArray& u) {
    long long r = u.r(), c = u.c();
    long long q = r - 1;
    if (c != q * q || u.v != q * (q + 1))
        throw std::invalid_argument("uta_is_resolvable_affine: wrong parameter shape");
    if (!verify_uta(u)) throw std::invalid_argument("uta_is_resolvable_affine: not a valid UTA");

    // V_i := symbols missing from row i
    ResolutionWitness w;
    std::vector<char> in_row(u.v, 0);
    for (int i = 0; i < u.r(); ++i) {
        std::fill(in_row.begin(), in_row.end(), 0);
        for (int a : u.row_sets[i]) in_row[a] = 1;
        std::vector<int> group;
        for (int a = 0; a < u.v; ++a)
            if (!in_row[a]) group.push_back(a);
        w.groups.push_back(std::move(group));
        w.missing_row.push_back(i);
    }
    return w;
}

std::vector<std::vector<int>> derangements(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if (p[i] == i) {
                ok = false;
                break;
            }
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

// Backtracking core shared by the first/count modes. used[l] is the bitmask
// of row values already taken at the class of line l by assigned points.
struct DerangementSearch {
    const AffinePlaneContext& ctx;
    std::vector<std::vector<int>> ders;
    std::vector<uint32_t> used; // per line
    std::vector<int> chosen;
    long long count = 0;
    bool first_only;
    std::optional<DerangementAssignment> found;

    explicit DerangementSearch(const AffinePlaneContext& c, bool first)
        : ctx(c), ders(derangements(c.q + 1)), used(c.plane.b(), 0), first_only(first) {}

    bool feasible(int point, const std::vector<int>& sigma) const {
        for (int i = 0; i <= ctx.q; ++i) {
            int line = ctx.line_of[i][point];
            if (used[line] & (1u << sigma[i])) return false;
        }
        return true;
    }

    bool run(int point) {
        if (point == ctx.plane.v) {
            ++count;
            if (first_only) {
                DerangementAssignment d;
                for (int idx : chosen) d.sigma.push_back(ders[idx]);
                found = std::move(d);
                return false;
            }
            return true;
        }
        for (size_t di = 0; di < ders.size(); ++di) {
            const auto& sigma = ders[di];
            if (!feasible(point, sigma)) continue;
            for (int i = 0; i <= ctx.q; ++i) used[ctx.line_of[i][point]] |= 1u << sigma[i];
            chosen.push_back(static_cast<int>(di));
            bool cont = run(point + 1);
            chosen.pop_back();
            for (int i = 0; i <= ctx.q; ++i) used[ctx.line_of[i][point]] &= ~(1u << sigma[i]);
            if (!cont) return false;
        }
        return true;
    }
};

} // namespace

std::optional<DerangementAssignment> solve_derangements(const AffinePlaneContext& ctx) {
    DerangementSearch s(ctx, true);
    s.run(0);
    return s.found;
}

long long count_derangement_solutions(const AffinePlaneContext& ctx) {
    DerangementSearch s(ctx, false);
    s.run(0);
    return s.count;
}

bool check_derangement_assignment(const AffinePlaneContext& ctx, const DerangementAssignment& d) {
    int q = ctx.q;
    if (static_cast<int>(d.sigma.size()) != ctx.plane.v) return false;
    for (const auto& sigma : d.sigma) {
        if (static_cast<int>(sigma.size()) != q + 1) return false;
        std::vector<char> seen(q + 1, 0);
        for (int i = 0; i <= q; ++i) {
            if (sigma[i] < 0 || sigma[i] > q || seen[sigma[i]]) return false;
            seen[sigma[i]] = 1;
            if (sigma[i] == i) return false; // not a derangement
        }
    }
    // collinear points must disagree at the class of their common line
    for (int i = 0; i <= q; ++i)
        for (int l : ctx.classes[i]) {
            std::vector<char> seen(q + 1, 0);
            for (int pt : ctx.plane.blocks[l]) {
                int val = d.sigma[pt][i];
                if (seen[val]) return false;
                seen[val] = 1;
            }
        }
    return true;
}

TripleArray derangements_to_ta(const AffinePlaneContext& ctx, const DerangementAssignment& d) {
    if (!check_derangement_assignment(ctx, d))
        throw std::invalid_argument("derangements_to_ta: assignment violates the defining conditions");
    int q = ctx.q;
    TripleArray t;
    t.r = q + 1;
    t.c = ctx.plane.v;
    t.v = ctx.plane.b();
    t.cells.assign(static_cast<size_t>(t.r) * t.c, -1);
    for (int j = 0; j < ctx.plane.v; ++j)
        for (int i = 0; i <= q; ++i) t.at(d.sigma[j][i], j) = ctx.line_of[i][j];
    return t;
}

DerangementAssignment ta_to_derangements(const AffinePlaneContext& ctx, const TripleArray& t) {
    int q = ctx.q;
    if (t.r != q + 1 || t.c != ctx.plane.v || t.v != ctx.plane.b())
        throw std::invalid_argument("ta_to_derangements: array shape mismatch");
    DerangementAssignment d;
    d.sigma.assign(t.c, std::vector<int>(q + 1, -1));
    for (int j = 0; j < t.c; ++j)
        for (int s = 0; s <= q; ++s) {
            int line = t.at(s, j);
            d.sigma[j][ctx.class_of[line]] = s;
        }
    return d;
}

PartitenessInstance build_partiteness_instance(const AffinePlaneContext& ctx) {
    int q = ctx.q;
    int q2 = ctx.plane.v;
    PartitenessInstance inst;
    inst.q = q;
    inst.n_vertices = (q + 1) * q2 + (q + 1);
    auto vij = [&](int i, int j) { return i * q2 + j; };
    auto wi = [&](int i) { return (q + 1) * q2 + i; };
    for (int j = 0; j < q2; ++j) {
        std::vector<int> e;
        for (int i = 0; i <= q; ++i) e.push_back(vij(i, j));
        inst.edges.push_back(std::move(e));
    }
    for (int i = 0; i <= q; ++i)
        for (int l : ctx.classes[i]) {
            std::vector<int> e;
            for (int pt : ctx.plane.blocks[l]) e.push_back(vij(i, pt));
            e.push_back(wi(i));
            std::sort(e.begin(), e.end());
            inst.edges.push_back(std::move(e));
        }
    std::vector<int> e0;
    for (int i = 0; i <= q; ++i) e0.push_back(wi(i));
    inst.edges.push_back(std::move(e0));
    return inst;
}

bool check_partition(const PartitenessInstance& inst, const std::vector<int>& part) {
    if (static_cast<int>(part.size()) != inst.n_vertices) return false;
    int k = inst.q + 1;
    for (int p : part)
        if (p < 0 || p >= k) return false;
    for (const auto& e : inst.edges) {
        std::vector<char> seen(k, 0);
        for (int v : e) {
            if (seen[part[v]]) return false;
            seen[part[v]] = 1;
        }
        if (static_cast<int>(e.size()) != k) return false;
    }
    return true;
}

std::optional<std::vector<int>> solve_partiteness(const AffinePlaneContext& ctx,
                                                  const PartitenessInstance& inst) {
    auto d = solve_derangements(ctx);
    if (!d) return std::nullopt;
    int q = ctx.q;
    int q2 = ctx.plane.v;
    std::vector<int> part(inst.n_vertices, -1);
    for (int j = 0; j < q2; ++j)
        for (int i = 0; i <= q; ++i) part[i * q2 + j] = d->sigma[j][i];
    for (int i = 0; i <= q; ++i) part[(q + 1) * q2 + i] = i;
    if (!check_partition(inst, part))
        throw std::logic_error("solve_partiteness: reduction produced an invalid partition");
    return part;
}

} // namespace ta
