#include "ta/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>

namespace ta {

namespace {
constexpr uint32_t kSep = 0xFFFFFFFFu;
constexpr uint32_t kIndiv = 0xFFFFFFFEu;
} // namespace

// ---------------------------------------------------------------- refinement

void Canonicalizer::refine(std::vector<int>& worklist) {
    std::vector<int>& touched_cells = touched_cells_;
    std::vector<int>& touched_verts = touched_verts_;
    while (!worklist.empty()) {
        if (nonsingleton_ == 0) {
            // discrete already: the pending splitters cannot refine further
            for (int w : worklist) in_work_[w] = 0;
            worklist.clear();
            break;
        }
        ++stats.splitters;
        int ws = worklist.back();
        worklist.pop_back();
        in_work_[ws] = 0;
        int wlen = cell_len_[ws];

        // count neighbors in the splitter cell
        touched_cells.clear();
        touched_verts.clear();
        for (int p = ws; p < ws + wlen; ++p) {
            int v = lab_[p];
            stats.refine_ops += adj_off_[v + 1] - adj_off_[v];
            for (int ai = adj_off_[v]; ai < adj_off_[v + 1]; ++ai) {
                int u = adj_dat_[ai];
                if (cnt_[u]++ == 0) touched_verts.push_back(u);
                int cs = cell_start_[pos_[u]];
                if (cell_len_[cs] > 1 && !cell_touched_[cs]) {
                    cell_touched_[cs] = 1;
                    touched_cells.push_back(cs);
                }
            }
        }
        std::sort(touched_cells.begin(), touched_cells.end());

        for (int cs : touched_cells) {
            ++stats.touched;
            cell_touched_[cs] = 0;
            int L = cell_len_[cs];

            // uniform neighbor counts leave the cell whole
            int lo = cnt_[lab_[cs]], hi = lo;
            for (int p = cs + 1; p < cs + L; ++p) {
                int x = cnt_[lab_[p]];
                lo = x < lo ? x : lo;
                hi = x > hi ? x : hi;
            }
            trace_.push_back(static_cast<uint32_t>(cs));
            if (lo == hi) {
                trace_.push_back(static_cast<uint32_t>(lo));
                continue;
            }

            // sort cell members in place by count (ascending, ids on ties)
            int* begin = lab_.data() + cs;
            if (L <= 24) {
                for (int i = 1; i < L; ++i) {
                    int x = begin[i], cx = cnt_[x], j = i - 1;
                    while (j >= 0 && (cnt_[begin[j]] > cx || (cnt_[begin[j]] == cx && begin[j] > x))) {
                        begin[j + 1] = begin[j];
                        --j;
                    }
                    begin[j + 1] = x;
                }
            } else {
                std::sort(begin, begin + L, [&](int a, int b) {
                    return cnt_[a] != cnt_[b] ? cnt_[a] < cnt_[b] : a < b;
                });
            }
            for (int p = cs; p < cs + L; ++p) pos_[lab_[p]] = p;

            // detect fragments
            int frag_begin = cs;
            int largest_start = cs, largest_len = 0;
            --nonsingleton_; // cs was non-singleton; re-add surviving fragments
            for (int p = cs + 1; p <= cs + L; ++p) {
                if (p == cs + L || cnt_[lab_[p]] != cnt_[lab_[frag_begin]]) {
                    int flen = p - frag_begin;
                    if (flen > 1) ++nonsingleton_;
                    cell_len_[frag_begin] = flen;
                    for (int t = frag_begin; t < p; ++t) cell_start_[t] = frag_begin;
                    trace_.push_back(static_cast<uint32_t>(frag_begin));
                    trace_.push_back(static_cast<uint32_t>(flen));
                    trace_.push_back(static_cast<uint32_t>(cnt_[lab_[frag_begin]]));
                    if (flen > largest_len) {
                        largest_len = flen;
                        largest_start = frag_begin;
                    }
                    frag_begin = p;
                }
            }
            bool parent_pending = in_work_[cs] != 0;
            for (int p = cs; p < cs + L; p += cell_len_[p]) {
                bool skip = !parent_pending && p == largest_start;
                if (!skip && !in_work_[p]) {
                    in_work_[p] = 1;
                    worklist.push_back(p);
                }
            }
        }
        for (int u : touched_verts) cnt_[u] = 0;
        trace_.push_back(kSep);
    }
}

int Canonicalizer::first_nonsingleton_cell() const {
    int best = -1, best_len = 0;
    for (int p = 0; p < n_;) {
        int L = cell_len_[p];
        if (L > 1 && (best < 0 || L < best_len)) {
            best = p;
            best_len = L;
        }
        p += L;
    }
    return best;
}

void Canonicalizer::build_cert(std::vector<uint32_t>& cert) const {
    cert.clear();
    for (int v = 0; v < n_; ++v) {
        uint32_t i = static_cast<uint32_t>(pos_[v]);
        for (int ai = adj_off_[v]; ai < adj_off_[v + 1]; ++ai) {
            uint32_t j = static_cast<uint32_t>(pos_[adj_dat_[ai]]);
            if (i < j) cert.push_back(i * static_cast<uint32_t>(n_) + j);
        }
    }
    std::sort(cert.begin(), cert.end());
}

void Canonicalizer::save_state(Frame& f) const {
    f.lab = lab_;
    f.pos = pos_;
    f.cell_start = cell_start_;
    f.cell_len = cell_len_;
    f.nonsingleton = nonsingleton_;
}

void Canonicalizer::restore_state(const Frame& f) {
    lab_ = f.lab;
    pos_ = f.pos;
    cell_start_ = f.cell_start;
    cell_len_ = f.cell_len;
    nonsingleton_ = f.nonsingleton;
}

// Compares a level segment against a recorded leaf's segment for `depth`.
// Returns -1 (current less), 0 (equal), 1 (current greater).
int Canonicalizer::compare_segment(const Leaf& ref, int depth, const uint32_t* seg,
                                   int seg_len) const {
    if (depth >= static_cast<int>(ref.level_end.size())) return 1; // ref path is shorter
    int ref_begin = depth == 0 ? 0 : ref.level_end[depth - 1];
    int ref_len = ref.level_end[depth] - ref_begin;
    int m = std::min(seg_len, ref_len);
    for (int i = 0; i < m; ++i) {
        uint32_t a = seg[i], b = ref.trace[ref_begin + i];
        if (a != b) return a < b ? -1 : 1;
    }
    if (seg_len != ref_len) return seg_len < ref_len ? -1 : 1;
    return 0;
}

void Canonicalizer::individualize_refine(int v) {
    int s = cell_start_[pos_[v]];
    int u0 = lab_[s], pv = pos_[v];
    lab_[s] = v;
    lab_[pv] = u0;
    pos_[v] = s;
    pos_[u0] = pv;
    int L = cell_len_[s];
    cell_len_[s] = 1;
    cell_len_[s + 1] = L - 1;
    if (L == 2) --nonsingleton_;
    for (int p = s + 1; p < s + L; ++p) cell_start_[p] = s + 1;
    trace_.push_back(kIndiv);
    trace_.push_back(static_cast<uint32_t>(s));
    worklist_.clear();
    in_work_[s] = 1;
    worklist_.push_back(s);
    refine(worklist_);
}

// --------------------------------------------------------------------- search

void Canonicalizer::search(int depth, int cmp_first, int cmp_best) {
    Frame& f = stack_[depth]; // stack_ pre-sized in run(), reference stays valid
    ++stats.nodes;
    f.trace_len = static_cast<int>(trace_.size());
    f.cmp_first = cmp_first;
    f.cmp_best = cmp_best;

    int target = first_nonsingleton_cell();
    if (target < 0) {
        ++stats.leaves;
        // leaf: discrete partition
        std::vector<uint32_t> cert;
        build_cert(cert);
        std::vector<int> ends(depth + 1);
        for (int d = 0; d <= depth; ++d) ends[d] = stack_[d].trace_len;

        if (!first_.set) {
            first_.trace = trace_;
            first_.level_end = ends;
            first_.cert = cert;
            first_.labeling = pos_;
            first_.set = true;
            best_ = first_;
            return;
        }
        if (f.cmp_first == 0 && cert == first_.cert) {
            Perm g(n_);
            for (int u = 0; u < n_; ++u) g[u] = lab_[first_.labeling[u]];
            if (!is_identity(g)) gens_.push_back(std::move(g));
            return;
        }
        bool replace = false;
        if (f.cmp_best == 1) {
            replace = true;
        } else if (f.cmp_best == 0) {
            if (static_cast<int>(best_.level_end.size()) > depth + 1) {
                // best leaf is deeper with an equal trace prefix: keep best
            } else if (cert > best_.cert) {
                replace = true;
            } else if (cert == best_.cert) {
                Perm g(n_);
                for (int u = 0; u < n_; ++u) g[u] = lab_[best_.labeling[u]];
                if (!is_identity(g)) gens_.push_back(std::move(g));
                return;
            }
        }
        if (replace) {
            best_.trace = trace_;
            best_.level_end = std::move(ends);
            best_.cert = std::move(cert);
            best_.labeling = pos_;
            best_.set = true;
            for (int d = 0; d <= depth; ++d) stack_[d].cmp_best = 0;
        }
        return;
    }

    // branch on the target cell, pruned three ways: discovered automorphisms
    // that fix the current individualization prefix; children whose one-step
    // refinement trace is below the sibling maximum (they cannot carry the
    // canonical leaf, and automorphism-relevant children always sit at the
    // maximum); and the first-leaf/best-leaf prefix comparisons
    std::vector<int> cand(lab_.begin() + target, lab_.begin() + target + cell_len_[target]);
    std::sort(cand.begin(), cand.end());
    save_state(f);

    // pass 1: one-step trace segment of every child
    f.evals.clear();
    for (int v : cand) {
        ++stats.evals;
        individualize_refine(v);
        f.evals.emplace_back(v, std::vector<uint32_t>(trace_.begin() + f.trace_len, trace_.end()));
        trace_.resize(f.trace_len);
        restore_state(f);
    }
    const std::vector<uint32_t>* sibmax = &f.evals[0].second;
    for (const auto& [v, seg] : f.evals)
        if (seg > *sibmax) sibmax = &seg;

    std::vector<int> tried;
    std::vector<int> uf;
    size_t built_gens = static_cast<size_t>(-1);
    auto uf_find = [&](int x) {
        while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        return x;
    };
    auto rebuild_uf = [&]() {
        uf.assign(n_, 0);
        for (int i = 0; i < n_; ++i) uf[i] = i;
        for (const Perm& g : gens_) {
            bool fixes = true;
            for (int p : prefix_)
                if (g[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int i = 0; i < n_; ++i) {
                int a = uf_find(i), b = uf_find(g[i]);
                if (a != b) uf[std::max(a, b)] = std::min(a, b);
            }
        }
        built_gens = gens_.size();
    };

    for (const auto& [v, seg] : f.evals) {
        // sibling-maximum rule; children matching the first path's segment
        // survive for automorphism discovery
        bool first_track =
            f.cmp_first == 0 &&
            compare_segment(first_, depth + 1, seg.data(), static_cast<int>(seg.size())) == 0;
        if (!(seg == *sibmax) && !first_track) continue;

        if (gens_.size() != built_gens) rebuild_uf();
        bool pruned = false;
        for (int w : tried)
            if (uf_find(v) == uf_find(w)) {
                pruned = true;
                break;
            }
        if (pruned) continue;
        tried.push_back(v);

        int child_first = f.cmp_first;
        int child_best = f.cmp_best;
        if (child_first != 2) {
            if (child_first == 0 && !first_track) child_first = 1;
            if (child_best == 0)
                child_best = compare_segment(best_, depth + 1, seg.data(), static_cast<int>(seg.size()));
        }
        if (child_first == 1 && child_best == -1) continue;

        restore_state(f);
        trace_.resize(f.trace_len);
        individualize_refine(v);
        prefix_.push_back(v);
        search(depth + 1, child_first, child_best);
        prefix_.pop_back();

        if (f.cmp_first == 2 && first_.set) {
            // this node lies on the just-recorded first path (= initial best)
            f.cmp_first = 0;
            f.cmp_best = 0;
        }
    }
    restore_state(f);
    trace_.resize(f.trace_len);
}

// ------------------------------------------------------------------ top level

const GraphCanon& Canonicalizer::run(const ColoredGraph& g, bool want_key) {
    g_ = &g;
    n_ = g.n;
    result_ = GraphCanon{};

    adj_off_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) adj_off_[v + 1] = adj_off_[v] + static_cast<int>(g.adj[v].size());
    adj_dat_.resize(adj_off_[n_]);
    {
        std::vector<int> w(adj_off_.begin(), adj_off_.end() - 1);
        for (int v = 0; v < n_; ++v)
            for (int u : g.adj[v]) adj_dat_[w[v]++] = u;
    }

    lab_.resize(n_);
    pos_.resize(n_);
    cell_start_.assign(n_, 0);
    cell_len_.assign(n_, 0);
    cnt_.assign(n_, 0);
    in_work_.assign(n_, 0);
    cell_touched_.assign(n_, 0);
    trace_.clear();
    first_ = Leaf{};
    best_ = Leaf{};
    gens_.clear();
    prefix_.clear();

    if (n_ == 0) {
        result_.aut_order = 1;
        if (want_key) result_.key = "G0";
        return result_;
    }
    stack_.resize(n_ + 2);

    for (int v = 0; v < n_; ++v) lab_[v] = v;
    std::sort(lab_.begin(), lab_.end(), [&](int a, int b) {
        return g.color[a] != g.color[b] ? g.color[a] < g.color[b] : a < b;
    });
    std::vector<int> wl;
    for (int p = 0; p < n_;) {
        int q = p;
        while (q < n_ && g.color[lab_[q]] == g.color[lab_[p]]) ++q;
        for (int t = p; t < q; ++t) {
            pos_[lab_[t]] = t;
            cell_start_[t] = p;
        }
        cell_len_[p] = q - p;
        in_work_[p] = 1;
        wl.push_back(p);
        p = q;
    }
    nonsingleton_ = 0;
    for (int p = 0; p < n_;) {
        if (cell_len_[p] > 1) ++nonsingleton_;
        p += cell_len_[p];
    }
    refine(wl);
    search(0, 2, 0);

    result_.labeling = best_.labeling;
    result_.generators = gens_;
    result_.aut_order = group_order(n_, gens_);

    if (want_key) {
        std::string& key = result_.key;
        auto put32 = [&key](uint32_t x) {
            char b[4];
            std::memcpy(b, &x, 4);
            key.append(b, 4);
        };
        key.push_back('G');
        put32(static_cast<uint32_t>(n_));
        std::map<int, int> hist; // color value -> class size

        for (int v = 0; v < n_; ++v) ++hist[g.color[v]];
        put32(static_cast<uint32_t>(hist.size()));
        for (auto& [c, m] : hist) {
            put32(static_cast<uint32_t>(c));
            put32(static_cast<uint32_t>(m));
        }
        std::vector<uint32_t> cert;
        // rebuild cert from the best labeling
        pos_ = best_.labeling;
        build_cert(cert);
        for (uint32_t e : cert) put32(e);
    }
    return result_;
}

GraphCanon canonicalize(const ColoredGraph& g, bool want_key) {
    thread_local Canonicalizer canon;
    return canon.run(g, want_key);
}

// ------------------------------------------------------------------ encodings

ColoredGraph encode(const BlockDesign& d) {
    ColoredGraph g;
    g.n = d.v + d.b();
    g.color.assign(g.n, 0);
    g.adj.assign(g.n, {});
    for (int bi = 0; bi < d.b(); ++bi) {
        g.color[d.v + bi] = 1;
        for (int p : d.blocks[bi]) g.add_edge(p, d.v + bi);
    }
    return g;
}

ColoredGraph encode(const Resolution& r) {
    const BlockDesign& d = r.design;
    ColoredGraph g;
    int nc = static_cast<int>(r.classes.size());
    g.n = d.v + d.b() + nc;
    g.color.assign(g.n, 0);
    g.adj.assign(g.n, {});
    for (int bi = 0; bi < d.b(); ++bi) {
        g.color[d.v + bi] = 1;
        for (int p : d.blocks[bi]) g.add_edge(p, d.v + bi);
    }
    for (int ci = 0; ci < nc; ++ci) {
        g.color[d.v + d.b() + ci] = 2;
        for (int bi : r.classes[ci]) g.add_edge(d.v + bi, d.v + d.b() + ci);
    }
    return g;
}

ColoredGraph encode(const UnorderedTripleArray& u) {
    ColoredGraph g;
    int r = u.r(), c = u.c();
    g.n = u.v + r + c;
    g.color.assign(g.n, 0);
    g.adj.assign(g.n, {});
    for (int i = 0; i < r; ++i) {
        g.color[u.v + i] = 1;
        for (int a : u.row_sets[i]) g.add_edge(a, u.v + i);
    }
    for (int j = 0; j < c; ++j) {
        g.color[u.v + r + j] = 2;
        for (int a : u.col_sets[j]) g.add_edge(a, u.v + r + j);
    }
    return g;
}

ColoredGraph encode(const TripleArray& t) {
    ColoredGraph g;
    int r = t.r, c = t.c, v = t.v;
    g.n = r + c + v + r * c;
    g.color.assign(g.n, 0);
    g.adj.assign(g.n, {});
    for (int i = 0; i < r; ++i) g.color[i] = 0;
    for (int j = 0; j < c; ++j) g.color[r + j] = 1;
    for (int a = 0; a < v; ++a) g.color[r + c + a] = 2;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            int cell = r + c + v + i * c + j;
            g.color[cell] = 3;
            g.add_edge(cell, i);
            g.add_edge(cell, r + j);
            g.add_edge(cell, r + c + t.at(i, j));
        }
    return g;
}

// ---------------------------------------------------------------- object keys

namespace {

void put32(std::string& s, uint32_t x) {
    char b[4];
    std::memcpy(b, &x, 4);
    s.append(b, 4);
}

} // namespace

CanonicalForm canonical_form(const BlockDesign& d) {
    thread_local Canonicalizer canon;
    ColoredGraph g = encode(d);
    const GraphCanon& gc = canon.run(g);
    CanonicalForm cf;
    cf.aut_order = gc.aut_order;
    cf.generators = gc.generators;
    std::string& key = cf.key;
    key.push_back('D');
    put32(key, static_cast<uint32_t>(d.v));
    put32(key, static_cast<uint32_t>(d.b()));
    // blocks in canonical block order, contents in canonical point ids
    std::vector<std::vector<int>> blocks(d.b());
    for (int bi = 0; bi < d.b(); ++bi) {
        std::vector<int> blk;
        for (int p : d.blocks[bi]) blk.push_back(gc.labeling[p]);
        std::sort(blk.begin(), blk.end());
        blocks[gc.labeling[d.v + bi] - d.v] = std::move(blk);
    }
    for (const auto& blk : blocks) {
        put32(key, static_cast<uint32_t>(blk.size()));
        for (int p : blk) put32(key, static_cast<uint32_t>(p));
    }
    return cf;
}

CanonicalForm canonical_form(const Resolution& r) {
    thread_local Canonicalizer canon;
    ColoredGraph g = encode(r);
    const GraphCanon& gc = canon.run(g);
    const BlockDesign& d = r.design;
    CanonicalForm cf;
    cf.aut_order = gc.aut_order;
    cf.generators = gc.generators;
    std::string& key = cf.key;
    key.push_back('R');
    put32(key, static_cast<uint32_t>(d.v));
    put32(key, static_cast<uint32_t>(d.b()));
    put32(key, static_cast<uint32_t>(r.classes.size()));
    std::vector<std::vector<int>> blocks(d.b());
    for (int bi = 0; bi < d.b(); ++bi) {
        std::vector<int> blk;
        for (int p : d.blocks[bi]) blk.push_back(gc.labeling[p]);
        std::sort(blk.begin(), blk.end());
        blocks[gc.labeling[d.v + bi] - d.v] = std::move(blk);
    }
    for (const auto& blk : blocks) {
        put32(key, static_cast<uint32_t>(blk.size()));
        for (int p : blk) put32(key, static_cast<uint32_t>(p));
    }
    std::vector<std::vector<int>> classes(r.classes.size());
    for (size_t ci = 0; ci < r.classes.size(); ++ci) {
        std::vector<int> cls;
        for (int bi : r.classes[ci]) cls.push_back(gc.labeling[d.v + bi] - d.v);
        std::sort(cls.begin(), cls.end());
        classes[gc.labeling[d.v + d.b() + ci] - d.v - d.b()] = std::move(cls);
    }
    for (const auto& cls : classes) {
        put32(key, static_cast<uint32_t>(cls.size()));
        for (int bi : cls) put32(key, static_cast<uint32_t>(bi));
    }
    return cf;
}

CanonicalForm canonical_form(const UnorderedTripleArray& u) {
    thread_local Canonicalizer canon;
    ColoredGraph g = encode(u);
    const GraphCanon& gc = canon.run(g);
    int r = u.r(), c = u.c();
    CanonicalForm cf;
    cf.aut_order = gc.aut_order;
    cf.generators = gc.generators;
    std::string& key = cf.key;
    key.push_back('U');
    put32(key, static_cast<uint32_t>(r));
    put32(key, static_cast<uint32_t>(c));
    put32(key, static_cast<uint32_t>(u.v));
    std::vector<std::vector<int>> rows(r), cols(c);
    for (int i = 0; i < r; ++i) {
        std::vector<int> s;
        for (int a : u.row_sets[i]) s.push_back(gc.labeling[a]);
        std::sort(s.begin(), s.end());
        rows[gc.labeling[u.v + i] - u.v] = std::move(s);
    }
    for (int j = 0; j < c; ++j) {
        std::vector<int> s;
        for (int a : u.col_sets[j]) s.push_back(gc.labeling[a]);
        std::sort(s.begin(), s.end());
        cols[gc.labeling[u.v + r + j] - u.v - r] = std::move(s);
    }
    for (const auto& s : rows)
        for (int a : s) put32(key, static_cast<uint32_t>(a));
    for (const auto& s : cols)
        for (int a : s) put32(key, static_cast<uint32_t>(a));
    return cf;
}

std::string ta_key_from_labeling(const TripleArray& t, const std::vector<int>& labeling) {
    int r = t.r, c = t.c, v = t.v;
    std::string key;
    key.reserve(13 + static_cast<size_t>(r) * c * (v <= 255 ? 1 : 4));
    key.push_back('T');
    put32(key, static_cast<uint32_t>(r));
    put32(key, static_cast<uint32_t>(c));
    put32(key, static_cast<uint32_t>(v));
    std::vector<int> grid(static_cast<size_t>(r) * c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            int ri = labeling[i];
            int cj = labeling[r + j] - r;
            int sym = labeling[r + c + t.at(i, j)] - r - c;
            grid[static_cast<size_t>(ri) * c + cj] = sym;
        }
    if (v <= 255) {
        for (int x : grid) key.push_back(static_cast<char>(x));
    } else {
        for (int x : grid) put32(key, static_cast<uint32_t>(x));
    }
    return key;
}

CanonicalForm canonical_form(const TripleArray& t) {
    thread_local Canonicalizer canon;
    ColoredGraph g = encode(t);
    const GraphCanon& gc = canon.run(g);
    CanonicalForm cf;
    cf.aut_order = gc.aut_order;
    cf.generators = gc.generators;
    cf.key = ta_key_from_labeling(t, gc.labeling);
    return cf;
}

std::string canonical_key(const BlockDesign& d) { return canonical_form(d).key; }
std::string canonical_key(const Resolution& r) { return canonical_form(r).key; }
std::string canonical_key(const UnorderedTripleArray& u) { return canonical_form(u).key; }
std::string canonical_key(const TripleArray& t) { return canonical_form(t).key; }

std::string key_to_hex(const std::string& key) {
    static const char* hexd = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (unsigned char ch : key) {
        out.push_back(hexd[ch >> 4]);
        out.push_back(hexd[ch & 15]);
    }
    return out;
}

} // namespace ta
