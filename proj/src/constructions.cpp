#include "ta/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "ta/geometry.hpp"
#include "ta/gf.hpp"

namespace ta {

UnorderedTripleArray agrawal(const BlockDesign& s, int sigma) {
    if (sigma < 0 || sigma >= s.v) throw std::invalid_argument("agrawal: sigma out of range");
    if (!is_symmetric(s)) throw std::invalid_argument("agrawal: design must be a symmetric 2-design");

    // points other than sigma become symbols 0..v-1, order preserved
    std::vector<int> symbol(s.v, -1);
    int next = 0;
    for (int p = 0; p < s.v; ++p)
        if (p != sigma) symbol[p] = next++;

    UnorderedTripleArray u;
    u.v = s.v - 1;
    for (const auto& blk : s.blocks) {
        bool has_sigma = std::binary_search(blk.begin(), blk.end(), sigma);
        if (has_sigma) {
            // complement of the block, sigma excluded
            std::vector<int> row;
            size_t bi = 0;
            for (int p = 0; p < s.v; ++p) {
                if (bi < blk.size() && blk[bi] == p) {
                    ++bi;
                    continue;
                }
                if (p != sigma) row.push_back(symbol[p]);
            }
            u.row_sets.push_back(std::move(row));
        } else {
            std::vector<int> col;
            for (int p : blk) col.push_back(symbol[p]);
            u.col_sets.push_back(std::move(col));
        }
    }
    return u;
}

BlockDesign agrawal_reverse(const UnorderedTripleArray& u) {
    long long r = u.r(), c = u.c();
    if (u.v != r + c - 1) throw std::invalid_argument("agrawal_reverse: UTA must be extremal (v = r+c-1)");
    if (!verify_uta(u)) throw std::invalid_argument("agrawal_reverse: not a valid UTA");

    BlockDesign d;
    d.v = u.v + 1; // sigma = point index v
    for (const auto& col : u.col_sets) d.blocks.push_back(col);
    for (const auto& row : u.row_sets) {
        std::vector<int> blk;
        size_t t = 0;
        for (int p = 0; p < u.v; ++p) {
            if (t < row.size() && row[t] == p) {
                ++t;
                continue;
            }
            blk.push_back(p);
        }
        blk.push_back(u.v); // sigma
        d.blocks.push_back(std::move(blk));
    }
    return d;
}

UnorderedTripleArray ruta(const BlockDesign& s, const Resolution& res, const std::vector<int>& class_order) {
    int r = s.v;
    if (s.b() != r) throw std::invalid_argument("ruta: S must be symmetric (b = v)");
    auto sp = verify_two_design(s);
    if (!sp) throw std::invalid_argument("ruta: S is not a 2-design");
    if (static_cast<int>(res.classes.size()) != r)
        throw std::invalid_argument("ruta: resolution must have r parallel classes");
    if (static_cast<int>(class_order.size()) != r)
        throw std::invalid_argument("ruta: class_order must be a permutation of 0..r-1");
    {
        std::vector<char> seen(r, 0);
        for (int x : class_order) {
            if (x < 0 || x >= r || seen[x]) throw std::invalid_argument("ruta: class_order not a permutation");
            seen[x] = 1;
        }
    }
    int e = static_cast<int>(sp->k);
    int k = static_cast<int>(res.classes[0].size());
    for (const auto& cls : res.classes)
        if (static_cast<int>(cls.size()) != k) throw std::invalid_argument("ruta: ragged parallel classes");
    const BlockDesign& cd = res.design;
    // column design must be a 2-(c, v, r, e, lambda_cc) design
    if (cd.b() != r * k) throw std::invalid_argument("ruta: block count mismatch");
    for (const auto& blk : cd.blocks)
        if (static_cast<int>(blk.size()) != e)
            throw std::invalid_argument("ruta: resolution block size must equal e of S");

    int c = cd.v;
    UnorderedTripleArray u;
    u.v = r * k; // one symbol per block B_xy

    // symbol of block: slot x = position in class_order, y = index within class
    std::vector<int> symbol_of_block(cd.b(), -1);
    for (int x = 0; x < r; ++x) {
        const auto& cls = res.classes[class_order[x]];
        for (int y = 0; y < k; ++y) symbol_of_block[cls[y]] = x * k + y;
    }

    u.row_sets.assign(r, {});
    for (int i = 0; i < r; ++i) {
        for (int x = 0; x < r; ++x) {
            // i ∈ S_x: class slot x contributes all its symbols to row i
            if (!std::binary_search(s.blocks[x].begin(), s.blocks[x].end(), i)) continue;
            for (int y = 0; y < k; ++y) u.row_sets[i].push_back(x * k + y);
        }
        std::sort(u.row_sets[i].begin(), u.row_sets[i].end());
    }
    u.col_sets.assign(c, {});
    for (int bi = 0; bi < cd.b(); ++bi)
        for (int j : cd.blocks[bi]) u.col_sets[j].push_back(symbol_of_block[bi]);
    for (auto& cs : u.col_sets) std::sort(cs.begin(), cs.end());
    return u;
}

BlockDesign quadratic_residue_design(int q) {
    if (q % 4 != 3) throw std::invalid_argument("quadratic_residue_design: q must be 3 (mod 4)");
    FiniteField F(q);
    BlockDesign d;
    d.v = q;
    for (int i = 0; i < q; ++i) {
        std::vector<int> blk;
        for (int s : F.squares()) blk.push_back(F.add(s, i));
        std::sort(blk.begin(), blk.end());
        d.blocks.push_back(std::move(blk));
    }
    return d;
}

BlockDesign trivial_symmetric_design(int q) {
    BlockDesign d;
    d.v = q + 1;
    for (int skip = 0; skip <= q; ++skip) {
        std::vector<int> blk;
        for (int p = 0; p <= q; ++p)
            if (p != skip) blk.push_back(p);
        d.blocks.push_back(std::move(blk));
    }
    return d;
}

UnorderedTripleArray family_ag(int q, int n) {
    if (n < 2) throw std::invalid_argument("family_ag: n >= 2 required");
    BlockDesign s = n == 2 ? trivial_symmetric_design(q) : complement(pg_design(n - 1, n - 2, q).design);
    Resolution res = hyperplane_resolution(ag_design(n, n - 1, q));
    std::vector<int> ident(s.v);
    for (int i = 0; i < s.v; ++i) ident[i] = i;
    return ruta(s, res, ident);
}

UnorderedTripleArray family_hadamard(const BlockDesign& d) {
    auto p = verify_two_design(d);
    if (!p || p->b != p->v || p->v % 4 != 3 || p->k != (p->v - 1) / 2 || p->lambda != (p->v - 3) / 4)
        throw std::invalid_argument("family_hadamard: need a symmetric 2-(4m-1, 2m-1, m-1) design");
    int m = static_cast<int>((p->v + 1) / 4);
    int v4 = 4 * m; // points of the resolvable design, sigma last

    Resolution res;
    res.design.v = v4;
    for (int i = 0; i < d.b(); ++i) {
        std::vector<int> with_sigma = d.blocks[i];
        with_sigma.push_back(v4 - 1);
        std::vector<int> without;
        size_t t = 0;
        for (int pt = 0; pt < v4 - 1; ++pt) {
            if (t < d.blocks[i].size() && d.blocks[i][t] == pt) {
                ++t;
                continue;
            }
            without.push_back(pt);
        }
        res.design.blocks.push_back(std::move(with_sigma));
        res.design.blocks.push_back(std::move(without));
        res.classes.push_back({2 * i, 2 * i + 1});
    }

    BlockDesign s = complement(d);
    std::vector<int> ident(s.v);
    for (int i = 0; i < s.v; ++i) ident[i] = i;
    return ruta(s, res, ident);
}

UnorderedTripleArray family_pg3(int q, const Resolution& packing) {
    BlockDesign s = pg_design(2, 1, q).design;
    if (static_cast<int>(packing.classes.size()) != s.v)
        throw std::invalid_argument("family_pg3: packing must have q^2+q+1 parallel classes");
    std::vector<int> ident(s.v);
    for (int i = 0; i < s.v; ++i) ident[i] = i;
    return ruta(s, packing, ident);
}

bool paley_resolvable_conditions(int q, int a, int b) {
    FiniteField F(q);
    if (a == 0 || b == 0) return false;
    int t = F.mul(F.sub(a, 1), F.add(b, 1));
    return F.is_square(t) && F.is_square(F.mul(a, b));
}

TripleArray paley(const PaleyInput& in) {
    int q = in.q;
    if (q < 7 || q % 4 != 3 || !is_prime_power(q)) // q ≡ 3 (mod 4) is preserved by prime powers
        throw std::invalid_argument("paley: q must be a prime power ≡ 3 (mod 4), q >= 7");
    FiniteField F(q);
    if (in.a == 0 || in.b == 0) throw std::invalid_argument("paley: a, b must be nonzero");
    int am1 = F.sub(in.a, 1);
    int cond = F.mul(am1, F.add(in.b, 1));
    if (!F.is_square(cond))
        throw std::invalid_argument("paley: (a-1)(b+1) must be a nonzero square");
    if (F.is_nonsquare(am1) && !F.is_square(F.mul(in.a, in.b)))
        throw std::invalid_argument("paley: when a-1 is a non-square, ab must be a square");

    std::vector<int> w = F.enumeration(); // w[0] = 0, then generator powers
    TripleArray t;
    t.r = q;
    t.c = q + 1;
    t.v = 2 * q; // symbol x unprimed = x, primed copy = q + x
    t.cells.assign(static_cast<size_t>(t.r) * t.c, -1);
    int ainv = F.inv(in.a), binv = F.inv(in.b);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            int diff = F.sub(w[i], w[j]);
            if (F.is_square(diff)) {
                t.at(i, j) = F.sub(w[i], F.mul(diff, ainv));
            } else {
                t.at(i, j) = q + F.add(w[i], F.mul(diff, binv));
            }
        }
        t.at(i, q) = w[i];
    }
    return t;
}

} // namespace ta
