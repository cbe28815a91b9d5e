#include "ta/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "ta/constructions.hpp"
#include "ta/geometry.hpp"
#include "ta/io.hpp"
#include "ta/ordering.hpp"

namespace ta {

namespace {

using u128 = unsigned __int128;

// Orderings of one fixed labeled UTA fall into isotopy classes that are
// exactly the orbits of Aut(U) acting on solutions: an isotopism between two
// orderings of U induces an automorphism of U and vice versa. The dedup key
// of a solution is therefore the lexicographic minimum of its grid over the
// (fully enumerated) automorphism group, and |Aut T| is the stabilizer size,
// counted during the same scan.
class OrbitDedup {
public:
    // elements act on (symbols, row slots, column slots)
    explicit OrbitDedup(const UnorderedTripleArray& u) : r_(u.r()), c_(u.c()), v_(u.v) {
        CanonicalForm cf = canonical_form(u);
        aut_u_ = cf.aut_order;
        if (aut_u_ > 2'000'000)
            throw std::invalid_argument("enumerate_tas: automorphism group too large to enumerate");
        int n = v_ + r_ + c_;
        // closure of the generators, as permutations of the joint index set
        std::set<Perm> closure;
        closure.insert(identity_perm(n));
        std::vector<Perm> frontier{identity_perm(n)};
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const Perm& g : frontier)
                for (const Perm& s : cf.generators) {
                    Perm h = compose(g, s);
                    if (closure.insert(h).second) next.push_back(std::move(h));
                }
            frontier = std::move(next);
        }
        if (closure.size() != aut_u_)
            throw std::logic_error("enumerate_tas: group closure does not match the group order");
        for (const Perm& g : closure) {
            if (is_identity(g)) continue;
            Element e;
            e.sym.resize(v_);
            e.row_src.resize(r_);
            e.col_src.resize(c_);
            for (int a = 0; a < v_; ++a) e.sym[a] = g[a];
            for (int i = 0; i < r_; ++i) e.row_src[g[v_ + i] - v_] = i;          // inverse action
            for (int j = 0; j < c_; ++j) e.col_src[g[v_ + r_ + j] - v_ - r_] = j;
            elements_.push_back(std::move(e));
        }
    }

    unsigned long long aut_u() const { return aut_u_; }

    // orbit-minimal key and stabilizer order of a solution grid
    std::pair<std::string, unsigned long long> run(const TripleArray& t) {
        min_.assign(t.cells.begin(), t.cells.end());
        unsigned long long stab = 1;
        for (const Element& e : elements_) {
            // image grid in row-major target order, compared on the fly
            int k = 0, total = r_ * c_;
            int cmp = 0;
            for (; k < total; ++k) {
                int val = e.sym[t.cells[e.row_src[k / c_] * c_ + e.col_src[k % c_]]];
                if (val != min_[k]) {
                    cmp = val < min_[k] ? -1 : 1;
                    break;
                }
            }
            if (cmp == 0) {
                ++stab;
            } else if (cmp < 0) {
                // strictly smaller image: materialize it as the new minimum
                scratch_.resize(total);
                std::copy(min_.begin(), min_.begin() + k, scratch_.begin());
                for (int k2 = k; k2 < total; ++k2)
                    scratch_[k2] = e.sym[t.cells[e.row_src[k2 / c_] * c_ + e.col_src[k2 % c_]]];
                std::swap(min_, scratch_);
                stab = 1;
            }
        }
        std::string key;
        key.reserve(13 + min_.size());
        key.push_back('O');
        for (int x : {r_, c_, v_})
            key.append(reinterpret_cast<const char*>(&x), 4);
        if (v_ <= 255) {
            for (int x : min_) key.push_back(static_cast<char>(x));
        } else {
            for (int x : min_) key.append(reinterpret_cast<const char*>(&x), 4);
        }
        return {std::move(key), stab};
    }

private:
    struct Element {
        std::vector<int> sym;     // symbol image
        std::vector<int> row_src; // target row -> source row
        std::vector<int> col_src; // target col -> source col
    };
    int r_, c_, v_;
    unsigned long long aut_u_ = 1;
    std::vector<Element> elements_;
    std::vector<int> min_, scratch_;
};

struct Shard {
    std::unordered_map<std::string, ClassEntry> classes;
    unsigned long long constructed = 0;
};

// Upserts one constructed object into a shard.
template <typename MakeWitness>
void record(Shard& sh, std::string key, unsigned long long aut, int source, MakeWitness make_witness) {
    ++sh.constructed;
    auto it = sh.classes.find(key);
    if (it == sh.classes.end()) {
        ClassEntry e;
        e.key = std::move(key);
        e.aut = aut;
        e.count = 1;
        e.source = source;
        e.witness = make_witness();
        sh.classes.emplace(e.key, std::move(e));
    } else {
        ++it->second.count;
        if (it->second.source != source) it->second.source = -2; // cross-source collision
    }
}

void merge_into(Shard& into, Shard&& from) {
    into.constructed += from.constructed;
    for (auto& [key, e] : from.classes) {
        auto it = into.classes.find(key);
        if (it == into.classes.end()) {
            into.classes.emplace(key, std::move(e));
        } else {
            it->second.count += e.count;
            if (it->second.source != e.source) it->second.source = -2;
        }
    }
}

void finalize(EnumerationReport& rep, Shard&& sh) {
    rep.total_constructed = sh.constructed;
    rep.classes.reserve(sh.classes.size());
    for (auto& [key, e] : sh.classes) rep.classes.push_back(std::move(e));
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const ClassEntry& a, const ClassEntry& b) { return a.key < b.key; });
    for (const auto& e : rep.classes) ++rep.aut_hist[e.aut];
}

void fail_check(EnumerationReport& rep, const std::string& note) {
    rep.checks_passed = false;
    rep.notes.push_back(note);
}

// Runs fn(begin, end, shard) over a chunked index range on `threads` threads
// and merges the shards in chunk order (deterministic result).
template <typename Fn>
Shard run_chunked(unsigned long long total, int threads, Fn fn) {
    threads = std::max(1, threads);
    unsigned long long per = threads > 1 ? (total + threads - 1) / threads : total;
    std::vector<Shard> shards(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        unsigned long long b = std::min<unsigned long long>(total, t * per);
        unsigned long long e = std::min<unsigned long long>(total, (t + 1) * per);
        if (threads == 1) {
            fn(b, e, shards[t]);
        } else {
            pool.emplace_back([&, t, b, e] { fn(b, e, shards[t]); });
        }
    }
    for (auto& th : pool) th.join();
    Shard out = std::move(shards[0]);
    for (int t = 1; t < threads; ++t) merge_into(out, std::move(shards[t]));
    return out;
}

std::vector<int> perm_by_index(int n, unsigned long long idx) {
    std::vector<int> avail(n), perm(n);
    for (int i = 0; i < n; ++i) avail[i] = i;
    std::vector<unsigned long long> fact(n, 1);
    for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
    for (int i = 0; i < n; ++i) {
        unsigned long long f = fact[n - 1 - i];
        int d = static_cast<int>(idx / f);
        idx %= f;
        perm[i] = avail[d];
        avail.erase(avail.begin() + d);
    }
    return perm;
}

} // namespace

std::string EnumerationReport::to_text() const {
    std::ostringstream os;
    os << "report " << pipeline << " r " << r << " c " << c << " v " << v << '\n';
    os << "classes " << classes.size() << " constructed " << total_constructed << '\n';
    for (const auto& e : classes) {
        os << "class " << key_to_hex(e.key) << " aut " << e.aut << " count " << e.count;
        if (e.source >= 0) os << " source " << e.source;
        os << '\n';
    }
    for (const auto& [aut, n] : aut_hist) os << "hist " << aut << ' ' << n << '\n';
    os << "checks " << (checks_passed ? "pass" : "FAIL") << '\n';
    for (const auto& n : notes) os << "note " << n << '\n';
    return os.str();
}

EnumerationReport enumerate_extremal_utas(const std::vector<BlockDesign>& designs, int threads) {
    if (designs.empty()) throw std::invalid_argument("enumerate_extremal_utas: no designs");
    EnumerationReport rep;
    rep.pipeline = "extremal";

    std::vector<unsigned long long> aut_s(designs.size());
    TwoDesignParams ref{};
    for (size_t di = 0; di < designs.size(); ++di) {
        auto p = verify_two_design(designs[di]);
        if (!p || p->b != p->v)
            throw std::invalid_argument("enumerate_extremal_utas: input not a symmetric 2-design");
        if (di == 0)
            ref = *p;
        else if (!(*p == ref))
            throw std::invalid_argument("enumerate_extremal_utas: mixed parameter sets");
        aut_s[di] = canonical_form(designs[di]).aut_order;
    }
    int pts = static_cast<int>(ref.v);
    rep.r = ref.k;
    rep.c = ref.v - ref.k;
    rep.v = ref.v - 1;

    unsigned long long total = designs.size() * static_cast<unsigned long long>(pts);
    Shard sh = run_chunked(total, threads, [&](unsigned long long b, unsigned long long e, Shard& out) {
        for (unsigned long long idx = b; idx < e; ++idx) {
            int di = static_cast<int>(idx / pts);
            int sigma = static_cast<int>(idx % pts);
            UnorderedTripleArray u = agrawal(designs[di], sigma);
            CanonicalForm cf = canonical_form(u);
            record(out, std::move(cf.key), cf.aut_order, di, [&] { return write_uta(u); });
        }
    });
    finalize(rep, std::move(sh));

    std::vector<unsigned long long> per_source(designs.size(), 0);
    for (const auto& e : rep.classes) {
        if (e.source < 0) {
            fail_check(rep, "isomorphic arrays from non-isomorphic designs: " + key_to_hex(e.key));
            continue;
        }
        per_source[e.source] += e.count;
        if (e.aut * static_cast<u128>(e.count) != static_cast<u128>(aut_s[e.source]))
            fail_check(rep, "orbit-stabilizer failure at class " + key_to_hex(e.key));
    }
    for (size_t di = 0; di < designs.size(); ++di)
        if (per_source[di] != static_cast<unsigned long long>(pts))
            fail_check(rep, "per-design copy count mismatch at design " + std::to_string(di));
    return rep;
}

EnumerationReport enumerate_rutas(const BlockDesign& s, const Resolution& res, int threads) {
    EnumerationReport rep;
    rep.pipeline = "ruta";
    int r = s.v;
    if (r > 14) throw std::invalid_argument("enumerate_rutas: r! too large to enumerate");
    unsigned long long total = 1;
    for (int i = 2; i <= r; ++i) total *= i;

    unsigned long long aut_sd = canonical_form(s).aut_order;
    unsigned long long aut_rr = canonical_form(res).aut_order;
    {
        std::vector<int> ident(r);
        for (int i = 0; i < r; ++i) ident[i] = i;
        UnorderedTripleArray probe = ruta(s, res, ident);
        rep.r = probe.r();
        rep.c = probe.c();
        rep.v = probe.v;
    }

    Shard sh = run_chunked(total, threads, [&](unsigned long long b, unsigned long long e, Shard& out) {
        if (b >= e) return;
        std::vector<int> perm = perm_by_index(r, b);
        for (unsigned long long idx = b; idx < e; ++idx) {
            UnorderedTripleArray u = ruta(s, res, perm);
            CanonicalForm cf = canonical_form(u);
            record(out, std::move(cf.key), cf.aut_order, -1, [&] { return write_uta(u); });
            std::next_permutation(perm.begin(), perm.end());
        }
    });
    finalize(rep, std::move(sh));

    u128 rhs = static_cast<u128>(aut_sd) * aut_rr;
    unsigned long long sum = 0;
    for (const auto& e : rep.classes) {
        sum += e.count;
        if (static_cast<u128>(e.aut) * e.count != rhs)
            fail_check(rep, "orbit-stabilizer failure at class " + key_to_hex(e.key));
    }
    if (sum != total) fail_check(rep, "permutation count mismatch");
    return rep;
}

EnumerationReport enumerate_tas(const UnorderedTripleArray& u, uint64_t node_budget) {
    EnumerationReport rep;
    rep.pipeline = "orderings";
    rep.r = u.r();
    rep.c = u.c();
    rep.v = u.v;
    if (!verify_uta(u)) throw std::invalid_argument("enumerate_tas: input is not a valid UTA");
    OrbitDedup canon(u);
    unsigned long long aut_u = canon.aut_u();

    Shard sh;
    bool rep_ok = true;
    SolveStats st = enumerate_orderings(
        u,
        [&](const TripleArray& t) {
            auto [key, aut] = canon.run(t);
            record(sh, std::move(key), aut, -1, [&] {
                // first representative of a new class: full re-verification
                if (!verify_ta(t)) rep_ok = false;
                UnorderedTripleArray back = underlying(t);
                if (!(back.row_sets == u.row_sets && back.col_sets == u.col_sets)) rep_ok = false;
                return write_ta(t);
            });
            return true;
        },
        node_budget);
    finalize(rep, std::move(sh));

    if (!rep_ok) fail_check(rep, "a decoded ordering failed re-verification");
    if (st.exhausted_budget) fail_check(rep, "node budget exhausted before completing the search");
    unsigned long long sum = 0;
    for (const auto& e : rep.classes) {
        sum += e.count;
        if (static_cast<u128>(e.aut) * e.count != static_cast<u128>(aut_u))
            fail_check(rep, "orbit-stabilizer failure at class " + key_to_hex(e.key));
    }
    if (sum != st.solutions) fail_check(rep, "solution count mismatch");
    return rep;
}

std::string Resolvable71535Result::to_text() const {
    std::ostringstream os;
    os << "report resolvable-71535\n";
    for (const auto& p : parades) {
        os << "parade " << p.label << " utas " << p.utas.size() << " tas " << p.ta_total
           << " unorderable " << p.unorderable << '\n';
        for (const auto& [aut, n] : p.uta_hist) os << "  uta-hist " << aut << ' ' << n << '\n';
        for (const auto& e : p.utas) {
            os << "  uta " << key_to_hex(e.key).substr(0, 16) << " aut " << e.aut << " tas "
               << e.ta_classes;
            for (const auto& [aut, n] : e.ta_hist) os << " [" << aut << "]x" << n;
            os << '\n';
        }
    }
    os << "total utas " << total_utas << " tas " << total_tas << " unorderable " << total_unorderable
       << '\n';
    for (const auto& [aut, n] : ta_hist) os << "ta-hist " << aut << ' ' << n << '\n';
    os << "checks " << (checks_passed ? "pass" : "FAIL") << '\n';
    for (const auto& n : notes) os << "note " << n << '\n';
    return os.str();
}

Resolvable71535Result enumerate_resolvable_71535(
    const std::vector<std::pair<std::string, Resolution>>& parades, int threads) {
    Resolvable71535Result out;
    BlockDesign fano = pg_design(2, 1, 2).design;

    std::unordered_map<std::string, std::string> seen_global; // uta key -> parade label
    for (const auto& [label, parade] : parades) {
        EnumerationReport rutas = enumerate_rutas(fano, parade, threads);
        if (!rutas.checks_passed) {
            out.checks_passed = false;
            for (const auto& n : rutas.notes) out.notes.push_back(label + ": " + n);
        }
        Resolvable71535Result::PerParade pp;
        pp.label = label;

        // order the TA enumerations per UTA deterministically, run in parallel
        std::vector<Resolvable71535Result::PerUta> rows(rutas.classes.size());
        std::vector<EnumerationReport> ta_reps(rutas.classes.size());
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= rutas.classes.size()) break;
                std::istringstream iss(rutas.classes[i].witness);
                UnorderedTripleArray u = read_uta(iss);
                ta_reps[i] = enumerate_tas(u);
            }
        };
        int nt = std::max(1, threads);
        if (nt == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        for (size_t i = 0; i < rutas.classes.size(); ++i) {
            const auto& cls = rutas.classes[i];
            auto ins = seen_global.emplace(cls.key, label);
            if (!ins.second) {
                out.checks_passed = false;
                out.notes.push_back("uta shared between parades " + ins.first->second + " and " + label);
            }
            Resolvable71535Result::PerUta row;
            row.key = cls.key;
            row.aut = cls.aut;
            const EnumerationReport& tr = ta_reps[i];
            if (!tr.checks_passed) {
                out.checks_passed = false;
                for (const auto& n : tr.notes) out.notes.push_back(label + "/uta: " + n);
            }
            row.ta_classes = static_cast<long long>(tr.classes.size());
            for (const auto& [aut, n] : tr.aut_hist) row.ta_hist[aut] += n;
            pp.ta_total += row.ta_classes;
            if (row.ta_classes == 0) ++pp.unorderable;
            ++pp.uta_hist[row.aut];
            for (const auto& [aut, n] : row.ta_hist) out.ta_hist[aut] += n;
            pp.utas.push_back(std::move(row));
        }
        out.total_utas += static_cast<long long>(pp.utas.size());
        out.total_tas += pp.ta_total;
        out.total_unorderable += pp.unorderable;
        out.parades.push_back(std::move(pp));
    }
    return out;
}

} // namespace ta
