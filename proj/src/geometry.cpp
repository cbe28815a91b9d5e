#include "ta/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "ta/gf.hpp"

namespace ta {

namespace {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

// All d x m matrices in reduced row echelon form of rank d over GF(q):
// one matrix per d-dimensional subspace of GF(q)^m, enumerated
// deterministically (pivot columns lex, then free entries lex).
void enumerate_rref(const FiniteField& F, int d, int m, const std::function<void(const Mat&)>& emit) {
    std::vector<int> pivots(d);
    std::function<void(int, int)> choose = [&](int t, int from) {
        if (t == d) {
            // fill free entries
            Mat mat(d, Vec(m, 0));
            for (int r = 0; r < d; ++r) mat[r][pivots[r]] = 1;
            std::vector<std::pair<int, int>> free_cells;
            for (int r = 0; r < d; ++r)
                for (int c = pivots[r] + 1; c < m; ++c)
                    if (!std::binary_search(pivots.begin(), pivots.end(), c)) free_cells.push_back({r, c});
            std::function<void(size_t)> fill = [&](size_t idx) {
                if (idx == free_cells.size()) {
                    emit(mat);
                    return;
                }
                auto [r, c] = free_cells[idx];
                for (int val = 0; val < F.q(); ++val) {
                    mat[r][c] = val;
                    fill(idx + 1);
                }
                mat[r][c] = 0;
            };
            fill(0);
            return;
        }
        for (int c = from; c <= m - (d - t); ++c) {
            pivots[t] = c;
            choose(t + 1, c + 1);
        }
    };
    choose(0, 0);
}

// All nonzero linear combinations of the rows of mat.
std::vector<Vec> span_nonzero(const FiniteField& F, const Mat& mat, int m) {
    int d = static_cast<int>(mat.size());
    std::vector<Vec> out;
    std::vector<int> coef(d, 0);
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= F.q();
    for (long long code = 1; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < d; ++i) {
            coef[i] = static_cast<int>(c % F.q());
            c /= F.q();
        }
        Vec v(m, 0);
        for (int i = 0; i < d; ++i) {
            if (coef[i] == 0) continue;
            for (int j = 0; j < m; ++j) v[j] = F.add(v[j], F.mul(coef[i], mat[i][j]));
        }
        out.push_back(std::move(v));
    }
    return out;
}

Vec normalize_projective(const FiniteField& F, Vec v) {
    for (int j = 0; j < static_cast<int>(v.size()); ++j)
        if (v[j] != 0) {
            int s = F.inv(v[j]);
            for (int t = j; t < static_cast<int>(v.size()); ++t) v[t] = F.mul(s, v[t]);
            break;
        }
    return v;
}

} // namespace

GeometryDesign pg_design(int n, int i, int q) {
    if (n < 2 || i < 1 || i >= n) throw std::invalid_argument("pg_design: require n >= 2, 1 <= i < n");
    FiniteField F(q);
    int m = n + 1;

    // points: normalized representatives of 1-dim subspaces, lex-ordered
    std::map<Vec, int> point_id;
    std::vector<Vec> points;
    {
        std::set<Vec> seen;
        Vec v(m, 0);
        std::function<void(int)> gen = [&](int pos) {
            if (pos == m) {
                if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; }))
                    seen.insert(normalize_projective(F, v));
                return;
            }
            for (int val = 0; val < q; ++val) {
                v[pos] = val;
                gen(pos + 1);
            }
            v[pos] = 0;
        };
        gen(0);
        for (const auto& p : seen) {
            point_id[p] = static_cast<int>(points.size());
            points.push_back(p);
        }
    }

    GeometryDesign g{GeometryDesign::Kind::PG, n, i, q, {}};
    g.design.v = static_cast<int>(points.size());
    enumerate_rref(F, i + 1, m, [&](const Mat& mat) {
        std::set<int> blk;
        for (const auto& v : span_nonzero(F, mat, m)) blk.insert(point_id.at(normalize_projective(F, v)));
        g.design.blocks.emplace_back(blk.begin(), blk.end());
    });
    return g;
}

GeometryDesign ag_design(int n, int i, int q) {
    if (n < 2 || i < 1 || i >= n) throw std::invalid_argument("ag_design: require n >= 2, 1 <= i < n");
    FiniteField F(q);

    long long npts = 1;
    for (int t = 0; t < n; ++t) npts *= q;
    auto point_index = [&](const Vec& v) {
        long long idx = 0;
        for (int t = n - 1; t >= 0; --t) idx = idx * q + v[t];
        return static_cast<int>(idx);
    };
    auto point_vec = [&](int idx) {
        Vec v(n);
        for (int t = 0; t < n; ++t) {
            v[t] = idx % q;
            idx /= q;
        }
        return v;
    };

    GeometryDesign g{GeometryDesign::Kind::AG, n, i, q, {}};
    g.design.v = static_cast<int>(npts);

    // cosets of each i-dim linear subspace, ordered by (subspace, min point)
    enumerate_rref(F, i, n, [&](const Mat& mat) {
        std::vector<Vec> members = span_nonzero(F, mat, n);
        members.push_back(Vec(n, 0));
        std::vector<char> claimed(npts, 0);
        std::vector<std::vector<int>> cosets;
        for (int rep = 0; rep < npts; ++rep) {
            if (claimed[rep]) continue;
            Vec rv = point_vec(rep);
            std::vector<int> blk;
            for (const auto& mv : members) {
                Vec w(n);
                for (int t = 0; t < n; ++t) w[t] = F.add(rv[t], mv[t]);
                int id = point_index(w);
                claimed[id] = 1;
                blk.push_back(id);
            }
            std::sort(blk.begin(), blk.end());
            cosets.push_back(std::move(blk));
        }
        for (auto& c : cosets) g.design.blocks.push_back(std::move(c));
    });
    return g;
}

Resolution hyperplane_resolution(const GeometryDesign& d) {
    if (d.kind != GeometryDesign::Kind::AG || d.i != d.n - 1)
        throw std::invalid_argument("hyperplane_resolution: expects AG_{n-1}(n,q)");

    // Blocks were generated per linear subspace; each direction contributes
    // exactly q parallel cosets, consecutively.
    int q = d.q;
    Resolution res;
    res.design = d.design;
    int b = d.design.b();
    if (b % q != 0) throw std::logic_error("hyperplane_resolution: unexpected block count");
    for (int start = 0; start < b; start += q) {
        std::vector<int> cls(q);
        for (int t = 0; t < q; ++t) cls[t] = start + t;
        res.classes.push_back(std::move(cls));
    }
    return res;
}

} // namespace ta
