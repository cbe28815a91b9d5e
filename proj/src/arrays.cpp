#include "ta/arrays.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <stdexcept>

#include "ta/bitvec.hpp"

namespace ta {

ArrayParams params_for(long long r, long long c, long long v) {
    if (r < 1 || c < 1 || v < 1) throw std::invalid_argument("params_for: r, c, v must be positive");
    ArrayParams p;
    p.r = r;
    p.c = c;
    p.v = v;
    p.e = Rational(r * c, v);
    p.lambda_rc = p.e;
    // vacuous intersection conditions for a single row/column
    p.lambda_rr = (r > 1) ? Rational(c * (p.e.num - p.e.den), (r - 1) * p.e.den) : Rational(0);
    p.lambda_cc = (c > 1) ? Rational(r * (p.e.num - p.e.den), (c - 1) * p.e.den) : Rational(0);
    p.lambda_rrc = (r > 1) ? Rational(p.e.num * (p.e.num - p.e.den), (r - 1) * p.e.den * p.e.den)
                           : Rational(0);
    p.k = Rational(c * p.e.den, p.e.num);
    p.ta_admissible = p.e.integral() && p.lambda_rr.integral() && p.lambda_cc.integral();
    p.quad_admissible = p.ta_admissible && p.lambda_rrc.integral();
    p.resolvable_admissible = p.quad_admissible && p.k.integral();
    return p;
}

namespace {

bool structurally_valid(const UnorderedTripleArray& u) {
    if (u.v < 1 || u.row_sets.empty() || u.col_sets.empty()) return false;
    auto ok_set = [&](const std::vector<int>& s) {
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= u.v) return false;
            if (i > 0 && s[i] <= s[i - 1]) return false;
        }
        return true;
    };
    for (const auto& s : u.row_sets)
        if (!ok_set(s)) return false;
    for (const auto& s : u.col_sets)
        if (!ok_set(s)) return false;
    return true;
}

} // namespace

bool verify_uta(const UnorderedTripleArray& u) {
    if (!structurally_valid(u)) return false;
    long long r = u.r(), c = u.c(), v = u.v;
    if ((r * c) % v != 0) return false;
    ArrayParams p = params_for(r, c, v);
    if (!p.ta_admissible) return false;
    long long e = p.e.as_int();

    for (const auto& s : u.row_sets)
        if (static_cast<long long>(s.size()) != c) return false;
    for (const auto& s : u.col_sets)
        if (static_cast<long long>(s.size()) != r) return false;

    std::vector<int> rowdeg(u.v, 0), coldeg(u.v, 0);
    std::vector<BitVec> R, C;
    for (const auto& s : u.row_sets) {
        R.push_back(to_bitvec(u.v, s));
        for (int a : s) ++rowdeg[a];
    }
    for (const auto& s : u.col_sets) {
        C.push_back(to_bitvec(u.v, s));
        for (int a : s) ++coldeg[a];
    }
    for (int a = 0; a < u.v; ++a)
        if (rowdeg[a] != e || coldeg[a] != e) return false;

    long long lrc = p.lambda_rc.as_int(), lrr = p.lambda_rr.as_int(), lcc = p.lambda_cc.as_int();
    for (size_t i = 0; i < R.size(); ++i)
        for (size_t j = 0; j < C.size(); ++j)
            if (R[i].intersect_count(C[j]) != lrc) return false;
    for (size_t i = 0; i < R.size(); ++i)
        for (size_t s = i + 1; s < R.size(); ++s)
            if (R[i].intersect_count(R[s]) != lrr) return false;
    for (size_t j = 0; j < C.size(); ++j)
        for (size_t t = j + 1; t < C.size(); ++t)
            if (C[j].intersect_count(C[t]) != lcc) return false;
    return true;
}

bool verify_ta(const TripleArray& t) {
    if (t.v < 1 || t.r < 1 || t.c < 1) return false;
    if (static_cast<int>(t.cells.size()) != t.r * t.c) return false;
    for (int x : t.cells)
        if (x < 0 || x >= t.v) return false;
    if ((static_cast<long long>(t.r) * t.c) % t.v != 0) return false;

    // binary
    for (int i = 0; i < t.r; ++i) {
        BitVec seen(t.v);
        for (int j = 0; j < t.c; ++j) {
            if (seen.test(t.at(i, j))) return false;
            seen.set(t.at(i, j));
        }
    }
    for (int j = 0; j < t.c; ++j) {
        BitVec seen(t.v);
        for (int i = 0; i < t.r; ++i) {
            if (seen.test(t.at(i, j))) return false;
            seen.set(t.at(i, j));
        }
    }

    ArrayParams p = params_for(t.r, t.c, t.v);
    if (!p.ta_admissible) return false;
    long long e = p.e.as_int();
    std::vector<int> deg(t.v, 0);
    for (int x : t.cells) ++deg[x];
    for (int a = 0; a < t.v; ++a)
        if (deg[a] != e) return false;

    return verify_uta(underlying(t));
}

UnorderedTripleArray underlying(const TripleArray& t) {
    UnorderedTripleArray u;
    u.v = t.v;
    u.row_sets.assign(t.r, {});
    u.col_sets.assign(t.c, {});
    for (int i = 0; i < t.r; ++i)
        for (int j = 0; j < t.c; ++j) {
            u.row_sets[i].push_back(t.at(i, j));
            u.col_sets[j].push_back(t.at(i, j));
        }
    for (auto& s : u.row_sets) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("underlying: array is not binary");
    }
    for (auto& s : u.col_sets) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("underlying: array is not binary");
    }
    return u;
}

std::pair<BlockDesign, BlockDesign> component_designs(const UnorderedTripleArray& u) {
    BlockDesign rd, cd;
    rd.v = u.r();
    cd.v = u.c();
    rd.blocks.assign(u.v, {});
    cd.blocks.assign(u.v, {});
    for (int i = 0; i < u.r(); ++i)
        for (int a : u.row_sets[i]) rd.blocks[a].push_back(i);
    for (int j = 0; j < u.c(); ++j)
        for (int a : u.col_sets[j]) cd.blocks[a].push_back(j);
    return {rd, cd};
}

std::optional<ResolutionWitness> detect_resolution(const UnorderedTripleArray& u) {
    ArrayParams p = params_for(u.r(), u.c(), u.v);
    if (!p.resolvable_admissible) return std::nullopt;
    long long k = p.k.as_int();

    // group symbols on exact row-incidence vectors
    std::map<BitVec, std::vector<int>> groups;
    std::vector<BitVec> row_inc(u.v, BitVec(u.r()));
    for (int i = 0; i < u.r(); ++i)
        for (int a : u.row_sets[i]) row_inc[a].set(i);
    for (int a = 0; a < u.v; ++a) groups[row_inc[a]].push_back(a);

    if (static_cast<int>(groups.size()) != u.r()) return std::nullopt;
    ResolutionWitness w;
    for (auto& [inc, members] : groups) {
        if (static_cast<long long>(members.size()) != k) return std::nullopt;
        int miss = -1;
        if (inc.count() == u.r() - 1) {
            for (int i = 0; i < u.r(); ++i)
                if (!inc.test(i)) miss = i;
        }
        w.groups.push_back(members);
        w.missing_row.push_back(miss);
    }

    std::vector<int> group_of(u.v, -1);
    for (size_t g = 0; g < w.groups.size(); ++g)
        for (int a : w.groups[g]) group_of[a] = static_cast<int>(g);
    for (const auto& cs : u.col_sets) {
        std::vector<int> seen(w.groups.size(), 0);
        for (int a : cs) ++seen[group_of[a]];
        for (int cnt : seen)
            if (cnt != 1) return std::nullopt;
    }
    return w;
}

bool is_quad(const UnorderedTripleArray& u) {
    ArrayParams p = params_for(u.r(), u.c(), u.v);
    if (!p.quad_admissible) return false;
    long long lrrc = p.lambda_rrc.as_int();
    std::vector<BitVec> R, C;
    for (const auto& s : u.row_sets) R.push_back(to_bitvec(u.v, s));
    for (const auto& s : u.col_sets) C.push_back(to_bitvec(u.v, s));
    for (size_t i = 0; i < R.size(); ++i)
        for (size_t s = i + 1; s < R.size(); ++s)
            for (size_t j = 0; j < C.size(); ++j)
                if (BitVec::intersect3_count(R[i], R[s], C[j]) != lrrc) return false;
    return true;
}

bool is_quad(const TripleArray& t) { return is_quad(underlying(t)); }

TripleArray transpose(const TripleArray& t) {
    TripleArray out;
    out.v = t.v;
    out.r = t.c;
    out.c = t.r;
    out.cells.resize(t.cells.size());
    for (int i = 0; i < t.r; ++i)
        for (int j = 0; j < t.c; ++j) out.at(j, i) = t.at(i, j);
    return out;
}

UnorderedTripleArray transpose(const UnorderedTripleArray& u) {
    UnorderedTripleArray out;
    out.v = u.v;
    out.row_sets = u.col_sets;
    out.col_sets = u.row_sets;
    return out;
}

namespace {

std::vector<long long> divisors_of(long long n) {
    std::vector<long long> ds;
    for (long long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    std::sort(ds.begin(), ds.end());
    return ds;
}

bool nontrivial_quad_ok(long long r, long long c, long long e) {
    if (r <= e || c <= e) return false; // non-trivial needs v > max(r, c)
    if ((r * c) % e != 0) return false;
    if ((c * (e - 1)) % (r - 1) != 0) return false;
    if ((r * (e - 1)) % (c - 1) != 0) return false;
    if ((e * (e - 1)) % (r - 1) != 0) return false;
    return true;
}

} // namespace

std::vector<ArrayParams> scan_quad_admissible(long long e_max) {
    std::vector<ArrayParams> out;
    for (long long e = 2; e <= e_max; ++e) {
        for (long long d1 : divisors_of(e * (e - 1))) {
            long long r = d1 + 1;
            if (r <= e) continue;
            for (long long d2 : divisors_of(r * (e - 1))) {
                long long c = d2 + 1;
                if (c <= e) continue;
                if (!nontrivial_quad_ok(r, c, e)) continue;
                out.push_back(params_for(r, c, r * c / e));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ArrayParams& a, const ArrayParams& b) {
        return std::tuple(a.e.num, a.r, a.c) < std::tuple(b.e.num, b.r, b.c);
    });
    return out;
}

std::vector<ArrayParams> scan_quad_transpose(long long e_max) {
    std::vector<ArrayParams> out;
    for (long long e = 2; e <= e_max; ++e) {
        auto ds = divisors_of(e * (e - 1));
        for (long long d1 : ds) {
            long long r = d1 + 1;
            if (r <= e) continue;
            for (long long d2 : ds) {
                long long c = d2 + 1;
                if (c <= r) continue; // unordered pair, r < c (r = c never non-trivial)
                if (!nontrivial_quad_ok(r, c, e)) continue;
                if (!nontrivial_quad_ok(c, r, e)) continue;
                out.push_back(params_for(r, c, r * c / e));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ArrayParams& a, const ArrayParams& b) {
        return std::tuple(a.e.num, a.r, a.c) < std::tuple(b.e.num, b.r, b.c);
    });
    return out;
}

} // namespace ta
