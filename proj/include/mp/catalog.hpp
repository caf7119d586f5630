#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mp/coloring.hpp"
#include "mp/multipole.hpp"

namespace mp {

struct CatalogBounds {
    int max_m = 8;
    int max_n = 10;
};

struct CatalogQuery {
    int m = 2;
    int n = 0;
    bool connected_only = false;
    bool colorable_only = false;
    CatalogBounds bounds;
};

struct CatalogEntry {
    Multipole multipole;
    std::string certificate;  // IgnoreSemiedgeLabels mode
    mutable std::optional<StateSet> state_cache;
};

// State set of an entry, computed once and cached.
const StateSet& entry_states(const CatalogEntry& entry);

// Exactly one representative per isomorphism class with q.m semiedges and
// q.n vertices (no loops, multiplicity <= 2, every component carrying a
// semiedge), sorted by certificate.
std::vector<CatalogEntry> generate(const CatalogQuery& q, int workers = 1);

// Union of generate over all n <= n_max with n == m (mod 2).
std::vector<CatalogEntry> generate_up_to(int m, int n_max, bool connected_only = false,
                                         bool colorable_only = false, int workers = 1,
                                         CatalogBounds bounds = {});

int count(const CatalogQuery& q);

// Uniform-ish random valid multipole matching (m, n), for spot checks.
Multipole random_multipole(int m, int n, uint64_t seed);

}  // namespace mp
