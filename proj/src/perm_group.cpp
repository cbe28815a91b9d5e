#include "ta/perm_group.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace ta {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
}

Perm inverse(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

bool is_identity(const Perm& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != static_cast<int>(i)) return false;
    return true;
}

namespace {

// Stabilizer chain built to a fixpoint. The generator set of level i is
// every stored generator fixing base[0..i) pointwise (cumulative semantics);
// after each addition all orbits are rebuilt and the Schreier conditions are
// re-scanned until a full pass adds nothing. Each addition strictly grows an
// orbit or extends the base, so the scan terminates; at the fixpoint the
// chain is strong (Sims).
struct StabChain {
    int n;
    std::vector<Perm> gens;
    std::vector<int> base;
    struct Level {
        std::vector<int> orbit;
        std::vector<Perm> transversal; // by point; empty = outside orbit
        std::vector<char> in_orbit;
    };
    std::vector<Level> levels;

    explicit StabChain(int n_) : n(n_) {}

    bool fixes_prefix(const Perm& g, size_t k) const {
        for (size_t i = 0; i < k; ++i)
            if (g[base[i]] != base[i]) return false;
        return true;
    }

    void rebuild_all() {
        levels.assign(base.size(), {});
        for (size_t li = 0; li < base.size(); ++li) {
            Level& L = levels[li];
            L.transversal.assign(n, {});
            L.in_orbit.assign(n, 0);
            L.orbit.push_back(base[li]);
            L.in_orbit[base[li]] = 1;
            L.transversal[base[li]] = identity_perm(n);
            for (size_t qi = 0; qi < L.orbit.size(); ++qi) {
                int p = L.orbit[qi];
                for (const Perm& g : gens) {
                    if (!fixes_prefix(g, li)) continue;
                    int q = g[p];
                    if (!L.in_orbit[q]) {
                        L.in_orbit[q] = 1;
                        L.orbit.push_back(q);
                        L.transversal[q] = compose(L.transversal[p], g);
                    }
                }
            }
        }
    }

    // Strips g through levels >= from; returns the residue.
    Perm sift(Perm g, size_t from) const {
        for (size_t li = from; li < levels.size(); ++li) {
            int img = g[base[li]];
            if (!levels[li].in_orbit[img]) return g;
            g = compose(g, inverse(levels[li].transversal[img]));
        }
        return g;
    }

    void add_gen(Perm g) {
        if (fixes_prefix(g, base.size())) {
            int moved = -1;
            for (int i = 0; i < n; ++i)
                if (g[i] != i) {
                    moved = i;
                    break;
                }
            base.push_back(moved);
        }
        gens.push_back(std::move(g));
        rebuild_all();
    }

    void make_strong() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t li = 0; li < levels.size() && !changed; ++li) {
                const Level& L = levels[li];
                for (size_t qi = 0; qi < L.orbit.size() && !changed; ++qi) {
                    int p = L.orbit[qi];
                    for (size_t gi = 0; gi < gens.size() && !changed; ++gi) {
                        if (!fixes_prefix(gens[gi], li)) continue;
                        int q = gens[gi][p];
                        Perm schreier =
                            compose(compose(L.transversal[p], gens[gi]), inverse(L.transversal[q]));
                        Perm res = sift(std::move(schreier), li + 1);
                        if (!is_identity(res)) {
                            add_gen(std::move(res));
                            changed = true;
                        }
                    }
                }
            }
        }
    }
};

} // namespace

unsigned long long group_order(int n, const std::vector<Perm>& gens) {
    StabChain chain(n);
    for (const Perm& g : gens) {
        if (static_cast<int>(g.size()) != n) throw std::invalid_argument("group_order: bad degree");
        if (is_identity(g)) continue;
        Perm res = chain.sift(g, 0);
        if (!is_identity(res)) chain.add_gen(std::move(res));
    }
    chain.make_strong();
    unsigned __int128 order = 1;
    for (const auto& L : chain.levels) order *= static_cast<unsigned>(L.orbit.size());
    if (order > static_cast<unsigned __int128>(~0ull)) throw std::overflow_error("group order exceeds 64 bits");
    return static_cast<unsigned long long>(order);
}

std::vector<int> orbit_representatives(int n, const std::vector<Perm>& gens) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Perm& g : gens)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(g[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> reps(n);
    for (int i = 0; i < n; ++i) reps[i] = find(i);
    return reps;
}

} // namespace ta
