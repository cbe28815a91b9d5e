#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ta/arrays.hpp"
#include "ta/canonical.hpp"
#include "ta/design.hpp"

namespace ta {

/// One isomorphism (or isotopy) class found by a pipeline.
struct ClassEntry {
    std::string key;                 // canonical key (binary)
    unsigned long long aut = 1;      // |Aut| of the representative
    unsigned long long count = 0;    // N(.): labeled copies constructed
    int source = -1;                 // index of the source design, when applicable
    std::string witness;             // representative in its text format
};

struct EnumerationReport {
    std::string pipeline;
    long long r = 0, c = 0, v = 0;
    std::vector<ClassEntry> classes; // sorted by key
    std::map<unsigned long long, long long> aut_hist;
    unsigned long long total_constructed = 0;
    bool checks_passed = true;
    std::vector<std::string> notes;

    std::string to_text() const;
};

/// Applies the point-split construction to every (design, sigma) pair and
/// removes isomorphic copies. Enforces |Aut U| * N(U) = |Aut S| per class.
EnumerationReport enumerate_extremal_utas(const std::vector<BlockDesign>& designs, int threads = 1);

/// Applies the resolution construction for every permutation of the parallel
/// classes and removes isomorphic copies. Enforces
/// |Aut U| * N(U) = |Aut S| * |Aut R| per class.
EnumerationReport enumerate_rutas(const BlockDesign& s, const Resolution& res, int threads = 1);

/// Streams all orderings of u and removes isotopic copies. Enforces
/// |Aut T| * N(T) = |Aut U| per class. A node budget of 0 means unlimited;
/// budget exhaustion fails the checks (reported, never silent).
EnumerationReport enumerate_tas(const UnorderedTripleArray& u, uint64_t node_budget = 0);

/// Full reproduction driver for the resolvable (7 x 15, 35) landscape.
struct Resolvable71535Result {
    struct PerUta {
        std::string key;
        unsigned long long aut = 1;
        long long ta_classes = 0;
        std::map<unsigned long long, long long> ta_hist;
    };
    struct PerParade {
        std::string label;
        std::vector<PerUta> utas;       // sorted by key
        long long ta_total = 0;
        long long unorderable = 0;
        std::map<unsigned long long, long long> uta_hist;
    };
    std::vector<PerParade> parades;
    long long total_utas = 0, total_tas = 0, total_unorderable = 0;
    std::map<unsigned long long, long long> ta_hist;
    bool checks_passed = true;
    std::vector<std::string> notes;

    std::string to_text() const;
};

Resolvable71535Result enumerate_resolvable_71535(
    const std::vector<std::pair<std::string, Resolution>>& parades, int threads = 1);

} // namespace ta
