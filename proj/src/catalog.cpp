#include "mp/catalog.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "mp/parallel.hpp"

namespace mp {

const StateSet& entry_states(const CatalogEntry& entry) {
    if (!entry.state_cache) entry.state_cache = states(entry.multipole);
    return *entry.state_cache;
}

namespace {

// Enumerate loopless multigraphs (multiplicity <= 2) with the given residual
// degrees, processing vertices in order; every edge is decided at its lower
// endpoint.
void enumerate_graphs(int v, int u, std::vector<int>& residual,
                      std::vector<std::vector<int>>& mult,
                      const std::function<void()>& emit) {
    int n = static_cast<int>(residual.size());
    if (v == n) {
        emit();
        return;
    }
    if (residual[v] == 0) {
        enumerate_graphs(v + 1, v + 2, residual, mult, emit);
        return;
    }
    if (u >= n) return;  // residual left over, dead end
    int cap = std::min({2, residual[v], residual[u]});
    for (int k = 0; k <= cap; ++k) {
        mult[v][u] = k;
        residual[v] -= k;
        residual[u] -= k;
        if (residual[v] == 0)
            enumerate_graphs(v + 1, v + 2, residual, mult, emit);
        else
            enumerate_graphs(v, u + 1, residual, mult, emit);
        residual[v] += k;
        residual[u] += k;
        mult[v][u] = 0;
    }
}

// Non-increasing attachment-count sequences a[0..n-1], entries 0..3, sum k.
void enumerate_attachments(int pos, int remaining, int prev, std::vector<int>& a,
                           const std::function<void()>& emit) {
    int n = static_cast<int>(a.size());
    if (pos == n) {
        if (remaining == 0) emit();
        return;
    }
    int left = n - pos;
    for (int x = std::min({prev, 3, remaining}); x >= 0; --x) {
        if (remaining - x > 3 * (left - 1)) continue;
        a[pos] = x;
        enumerate_attachments(pos + 1, remaining - x, x, a, emit);
    }
}

Multipole assemble(int n, int free_edges, const std::vector<int>& attach,
                   const std::vector<std::vector<int>>& mult) {
    Multipole mp;
    mp.vertex_count = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int k = 0; k < mult[u][v]; ++k) mp.edges.emplace_back(u, v);
    for (int v = 0; v < n; ++v)
        for (int s = 0; s < attach[v]; ++s) mp.semiedges.push_back(Semiedge::attached(v));
    for (int f = 0; f < free_edges; ++f) {
        int base = mp.m();
        mp.semiedges.push_back(Semiedge::free_paired(base + 1));
        mp.semiedges.push_back(Semiedge::free_paired(base));
    }
    return mp;
}

bool every_component_has_semiedge(const Multipole& mp) {
    for (const auto& [nv, ms] : components(mp).parts)
        if (ms == 0) return false;
    return true;
}

std::vector<Multipole> labeled_universe(const CatalogQuery& q) {
    std::vector<Multipole> out;
    for (int f = 0; 2 * f <= q.m; ++f) {
        int attached = q.m - 2 * f;
        if (attached > 3 * q.n) continue;
        if (q.n == 0 && attached > 0) continue;
        // A vertex component without any semiedge is excluded, so n > 0
        // requires at least one attached semiedge.
        if (q.n > 0 && attached == 0) continue;
        std::vector<int> a(q.n, 0);
        auto with_attachment = [&] {
            std::vector<int> residual(q.n);
            for (int v = 0; v < q.n; ++v) residual[v] = 3 - a[v];
            std::vector<std::vector<int>> mult(q.n, std::vector<int>(q.n, 0));
            enumerate_graphs(0, 1, residual, mult, [&] {
                Multipole mp = assemble(q.n, f, a, mult);
                if (!every_component_has_semiedge(mp)) return;
                if (q.connected_only && !is_connected(mp)) return;
                out.push_back(std::move(mp));
            });
        };
        if (q.n == 0) {
            if (attached == 0) with_attachment();
        } else {
            enumerate_attachments(0, attached, 3, a, with_attachment);
        }
    }
    return out;
}

}  // namespace

std::vector<CatalogEntry> generate(const CatalogQuery& q, int workers) {
    if (q.m < 1 || q.n < 0) throw MultipoleError("catalog: need m >= 1, n >= 0");
    if ((q.m - q.n) % 2 != 0) throw MultipoleError("catalog: parity n≡m violated");
    if (q.m > q.bounds.max_m || q.n > q.bounds.max_n)
        throw MultipoleError("catalog: query exceeds configured bounds");

    std::vector<Multipole> labeled = labeled_universe(q);
    std::vector<std::string> certs(labeled.size());
    parallel_for(labeled.size(), workers, [&](size_t i) {
        certs[i] = canonical_certificate(labeled[i], CertMode::IgnoreSemiedgeLabels);
    });

    std::map<std::string, size_t> first;  // certificate -> labeled index
    for (size_t i = 0; i < labeled.size(); ++i) first.emplace(certs[i], i);

    std::vector<CatalogEntry> entries;
    entries.reserve(first.size());
    for (const auto& [cert, idx] : first)
        entries.push_back({std::move(labeled[idx]), cert, std::nullopt});

    if (q.colorable_only) {
        std::vector<char> keep(entries.size(), 0);
        parallel_for(entries.size(), workers,
                     [&](size_t i) { keep[i] = is_colorable(entries[i].multipole); });
        std::vector<CatalogEntry> kept;
        for (size_t i = 0; i < entries.size(); ++i)
            if (keep[i]) kept.push_back(std::move(entries[i]));
        entries = std::move(kept);
    }
    return entries;  // map iteration already sorted by certificate
}

std::vector<CatalogEntry> generate_up_to(int m, int n_max, bool connected_only,
                                         bool colorable_only, int workers,
                                         CatalogBounds bounds) {
    std::vector<CatalogEntry> all;
    for (int n = m % 2; n <= n_max; n += 2) {
        CatalogQuery q{m, n, connected_only, colorable_only, bounds};
        auto part = generate(q, workers);
        for (auto& e : part) all.push_back(std::move(e));
    }
    return all;
}

int count(const CatalogQuery& q) { return static_cast<int>(generate(q).size()); }

Multipole random_multipole(int m, int n, uint64_t seed) {
    if ((m - n) % 2 != 0 || m < 1 || n < 0)
        throw MultipoleError("random_multipole: invalid (m, n)");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        // Pick a feasible number of free edges, then attachment counts.
        std::vector<int> feasible;
        for (int f = 0; 2 * f <= m; ++f) {
            int attached = m - 2 * f;
            if (attached <= 3 * n && (n > 0 || attached == 0)) feasible.push_back(f);
        }
        if (feasible.empty()) throw MultipoleError("random_multipole: infeasible (m, n)");
        int f = feasible[rng() % feasible.size()];
        int attached = m - 2 * f;
        std::vector<int> a(n, 0);
        bool ok = true;
        for (int i = 0; i < attached; ++i) {
            std::vector<int> open;
            for (int v = 0; v < n; ++v)
                if (a[v] < 3) open.push_back(v);
            if (open.empty()) { ok = false; break; }
            a[open[rng() % open.size()]] += 1;
        }
        if (!ok) continue;
        // Configuration model on the remaining stubs.
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int s = a[v]; s < 3; ++s) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Multipole mp;
        mp.vertex_count = n;
        bool bad = false;
        std::map<Edge, int> mult;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) { bad = true; break; }
            Edge e(stubs[i], stubs[i + 1]);
            if (++mult[e] > 2) { bad = true; break; }
            mp.edges.push_back(e);
        }
        if (bad) continue;
        std::sort(mp.edges.begin(), mp.edges.end());
        for (int v = 0; v < n; ++v)
            for (int s = 0; s < a[v]; ++s) mp.semiedges.push_back(Semiedge::attached(v));
        for (int i = 0; i < f; ++i) {
            int base = mp.m();
            mp.semiedges.push_back(Semiedge::free_paired(base + 1));
            mp.semiedges.push_back(Semiedge::free_paired(base));
        }
        if (!every_component_has_semiedge(mp)) continue;
        if (!validate(mp).empty()) continue;
        return mp;
    }
    throw MultipoleError("random_multipole: rejection sampling failed");
}

}  // namespace mp
