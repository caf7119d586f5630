#include "mp/multipole.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace mp {

Multipole make_free_edge() {
    Multipole m;
    m.semiedges = {Semiedge::free_paired(1), Semiedge::free_paired(0)};
    return m;
}

Multipole make_vertex_pole() {
    Multipole m;
    m.vertex_count = 1;
    m.semiedges = {Semiedge::attached(0), Semiedge::attached(0), Semiedge::attached(0)};
    return m;
}

Multipole make_minimal(int m) {
    if (m < 2) throw MultipoleError("make_minimal: m must be >= 2");
    Multipole res;
    if (m % 2 == 1) res = make_vertex_pole();
    for (int i = res.m(); i < m; i += 2) {
        res.semiedges.push_back(Semiedge::free_paired(i + 1));
        res.semiedges.push_back(Semiedge::free_paired(i));
    }
    return res;
}

Multipole make_tree(const std::vector<int>& parent_list) {
    int k = static_cast<int>(parent_list.size()) + 1;
    Multipole res;
    res.vertex_count = k;
    std::vector<int> degree(k, 0);
    for (int i = 0; i < k - 1; ++i) {
        int p = parent_list[i];
        if (p < 0 || p > i)
            throw MultipoleError("make_tree: parent_list[" + std::to_string(i) +
                                 "] must reference an earlier vertex");
        res.edges.emplace_back(p, i + 1);
        ++degree[p];
        ++degree[i + 1];
    }
    for (int v = 0; v < k; ++v)
        if (degree[v] > 3) throw MultipoleError("make_tree: vertex degree exceeds 3");
    // Pad to degree 3, semiedge order by vertex then slot.
    for (int v = 0; v < k; ++v)
        for (int s = degree[v]; s < 3; ++s)
            res.semiedges.push_back(Semiedge::attached(v));
    return res;
}

Multipole make_path_tree(int m) {
    if (m < 3) throw MultipoleError("make_path_tree: m must be >= 3");
    std::vector<int> parents(m - 3);
    std::iota(parents.begin(), parents.end(), 0);
    return make_tree(parents);
}

Multipole make_cycle(int m) {
    if (m < 3) throw MultipoleError("make_cycle: m must be >= 3");
    Multipole res;
    res.vertex_count = m;
    for (int i = 0; i < m; ++i) res.edges.emplace_back(i, (i + 1) % m);
    for (int i = 0; i < m; ++i) res.semiedges.push_back(Semiedge::attached(i));
    return res;
}

Multipole disjoint_union(const Multipole& a, const Multipole& b) {
    Multipole res = a;
    res.vertex_count += b.vertex_count;
    for (const Edge& e : b.edges)
        res.edges.emplace_back(e.u + a.vertex_count, e.v + a.vertex_count);
    int offset = a.m();
    for (const Semiedge& s : b.semiedges) {
        if (s.kind == SemiKind::Attached)
            res.semiedges.push_back(Semiedge::attached(s.ref + a.vertex_count));
        else
            res.semiedges.push_back(Semiedge::free_paired(s.ref + offset));
    }
    return res;
}

namespace {

int edge_multiplicity(const Multipole& m, int u, int v) {
    Edge e(u, v);
    return static_cast<int>(std::count(m.edges.begin(), m.edges.end(), e));
}

// Remove semiedges at the given (sorted, distinct) indices, remapping the
// partner references of the survivors.
Multipole drop_semiedges(const Multipole& m, std::vector<int> drop) {
    std::sort(drop.begin(), drop.end());
    std::vector<int> remap(m.m(), -1);
    int next = 0;
    for (int i = 0; i < m.m(); ++i) {
        if (std::binary_search(drop.begin(), drop.end(), i)) continue;
        remap[i] = next++;
    }
    Multipole res;
    res.vertex_count = m.vertex_count;
    res.edges = m.edges;
    for (int i = 0; i < m.m(); ++i) {
        if (remap[i] < 0) continue;
        Semiedge s = m.semiedges[i];
        if (s.kind == SemiKind::FreePaired) s.ref = remap[s.ref];
        res.semiedges.push_back(s);
    }
    return res;
}

}  // namespace

Multipole join(const Multipole& m, int i, int j) {
    if (i == j) throw MultipoleError("join: semiedge joined with itself");
    if (i < 0 || j < 0 || i >= m.m() || j >= m.m())
        throw MultipoleError("join: semiedge index out of range");
    const Semiedge& a = m.semiedges[i];
    const Semiedge& b = m.semiedges[j];

    if (a.kind == SemiKind::FreePaired && a.ref == j) {
        // Joining the two halves of one free edge yields a closed edge,
        // which is dropped entirely.
        return drop_semiedges(m, {i, j});
    }
    if (a.kind == SemiKind::Attached && b.kind == SemiKind::Attached) {
        if (a.ref == b.ref) throw MultipoleError("join: would create a loop");
        if (edge_multiplicity(m, a.ref, b.ref) >= 2)
            throw MultipoleError("join: would exceed edge multiplicity 2");
        Multipole res = drop_semiedges(m, {i, j});
        res.edges.emplace_back(a.ref, b.ref);
        return res;
    }
    if (a.kind != b.kind) {
        // Attached + free half: the free edge is absorbed, its far half
        // becomes a semiedge of the attached one's vertex.
        int vertex = (a.kind == SemiKind::Attached) ? a.ref : b.ref;
        int far = (a.kind == SemiKind::Attached) ? b.ref : a.ref;
        Multipole res = m;
        res.semiedges[far] = Semiedge::attached(vertex);
        return drop_semiedges(res, {i, j});
    }
    // Two halves of different free edges: the far halves pair up.
    Multipole res = m;
    res.semiedges[a.ref] = Semiedge::free_paired(b.ref);
    res.semiedges[b.ref] = Semiedge::free_paired(a.ref);
    return drop_semiedges(res, {i, j});
}

Multipole junction(const Multipole& a, const Multipole& b, const JunctionSpec& spec) {
    for (size_t p = 0; p < spec.pairs.size(); ++p)
        for (size_t q = p + 1; q < spec.pairs.size(); ++q)
            if (spec.pairs[p].first == spec.pairs[q].first ||
                spec.pairs[p].second == spec.pairs[q].second)
                throw MultipoleError("junction: repeated semiedge in spec");
    Multipole res = disjoint_union(a, b);
    // Track where each original semiedge currently sits.
    std::vector<int> pos_a(a.m()), pos_b(b.m());
    std::iota(pos_a.begin(), pos_a.end(), 0);
    for (int i = 0; i < b.m(); ++i) pos_b[i] = a.m() + i;
    for (const auto& [i, j] : spec.pairs) {
        if (i < 0 || i >= a.m() || j < 0 || j >= b.m())
            throw MultipoleError("junction: semiedge index out of range");
        int pi = pos_a[i], pj = pos_b[j];
        res = join(res, pi, pj);
        int lo = std::min(pi, pj), hi = std::max(pi, pj);
        auto shift = [&](int& p) {
            if (p > hi) p -= 2;
            else if (p > lo) p -= 1;
        };
        for (int& p : pos_a) shift(p);
        for (int& p : pos_b) shift(p);
    }
    return res;
}

Multipole cut_edge(const Multipole& m, Edge e) {
    auto it = std::find(m.edges.begin(), m.edges.end(), e);
    if (it == m.edges.end()) throw MultipoleError("cut_edge: edge not present");
    Multipole res = m;
    res.edges.erase(res.edges.begin() + (it - m.edges.begin()));
    res.semiedges.push_back(Semiedge::attached(e.u));
    res.semiedges.push_back(Semiedge::attached(e.v));
    return res;
}

Multipole delete_semiedge_vertex(const Multipole& m, int semiedge) {
    if (semiedge < 0 || semiedge >= m.m())
        throw MultipoleError("delete_semiedge_vertex: index out of range");
    if (m.semiedges[semiedge].kind != SemiKind::Attached)
        throw MultipoleError("delete_semiedge_vertex: semiedge is not attached");
    int v = m.semiedges[semiedge].ref;

    // The two remaining slots at v are edges and/or other semiedges.
    std::vector<int> edge_slots;  // indices into m.edges
    std::vector<int> semi_slots;  // indices into m.semiedges, != semiedge
    for (int i = 0; i < static_cast<int>(m.edges.size()); ++i) {
        if (m.edges[i].u == v) edge_slots.push_back(i);
        if (m.edges[i].v == v) edge_slots.push_back(i);
    }
    for (int i = 0; i < m.m(); ++i)
        if (i != semiedge && m.semiedges[i].kind == SemiKind::Attached &&
            m.semiedges[i].ref == v)
            semi_slots.push_back(i);

    Multipole res = m;
    std::vector<int> drop = {semiedge};
    if (edge_slots.size() == 2) {
        // Both cut edge ends become new attached semiedges, appended sorted
        // by far endpoint then edge position.
        std::vector<std::pair<int, int>> ends;
        for (int ei : edge_slots) {
            const Edge& e = m.edges[ei];
            ends.emplace_back(e.u == v ? e.v : e.u, ei);
        }
        std::sort(ends.begin(), ends.end());
        for (auto& [far, ei] : ends) res.semiedges.push_back(Semiedge::attached(far));
        std::vector<int> dead = {edge_slots[0], edge_slots[1]};
        std::sort(dead.begin(), dead.end());
        res.edges.erase(res.edges.begin() + dead[1]);
        res.edges.erase(res.edges.begin() + dead[0]);
    } else if (edge_slots.size() == 1 && semi_slots.size() == 1) {
        // Smoothing through v: the dangling edge concatenates with the cut
        // edge, so the surviving semiedge re-attaches to the far endpoint.
        const Edge& e = m.edges[edge_slots[0]];
        int far = (e.u == v) ? e.v : e.u;
        res.semiedges[semi_slots[0]] = Semiedge::attached(far);
        res.edges.erase(res.edges.begin() + edge_slots[0]);
    } else if (semi_slots.size() == 2) {
        // Both remaining slots are semiedges of v: they pair into a free edge.
        res.semiedges[semi_slots[0]] = Semiedge::free_paired(semi_slots[1]);
        res.semiedges[semi_slots[1]] = Semiedge::free_paired(semi_slots[0]);
    } else {
        throw MultipoleError("delete_semiedge_vertex: vertex is not cubic");
    }
    res = drop_semiedges(res, drop);
    // Shift vertex indices past v down by one.
    res.vertex_count -= 1;
    for (Edge& e : res.edges) e = Edge(e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v);
    for (Semiedge& s : res.semiedges)
        if (s.kind == SemiKind::Attached && s.ref > v) s.ref -= 1;
    return res;
}

namespace {

std::vector<std::vector<int>> adjacency(const Multipole& m) {
    std::vector<std::vector<int>> adj(m.vertex_count);
    for (const Edge& e : m.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

}  // namespace

std::optional<int> semiedge_distance(const Multipole& m, int a, int b) {
    if (a < 0 || b < 0 || a >= m.m() || b >= m.m())
        throw MultipoleError("semiedge_distance: index out of range");
    if (m.semiedges[a].kind != SemiKind::Attached ||
        m.semiedges[b].kind != SemiKind::Attached)
        throw MultipoleError("semiedge_distance: defined only for attached semiedges");
    int u = m.semiedges[a].ref, v = m.semiedges[b].ref;
    if (u == v) return 0;
    auto adj = adjacency(m);
    std::vector<int> dist(m.vertex_count, -1);
    std::queue<int> queue;
    dist[u] = 0;
    queue.push(u);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop();
        for (int y : adj[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                if (y == v) return dist[y];
                queue.push(y);
            }
    }
    return std::nullopt;
}

ComponentSummary components(const Multipole& m) {
    std::vector<int> comp(m.vertex_count, -1);
    auto adj = adjacency(m);
    int c = 0;
    for (int v = 0; v < m.vertex_count; ++v) {
        if (comp[v] >= 0) continue;
        std::queue<int> queue;
        comp[v] = c;
        queue.push(v);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop();
            for (int y : adj[x])
                if (comp[y] < 0) {
                    comp[y] = c;
                    queue.push(y);
                }
        }
        ++c;
    }
    ComponentSummary summary;
    std::vector<std::pair<int, int>> vertex_parts(c, {0, 0});
    for (int v = 0; v < m.vertex_count; ++v) vertex_parts[comp[v]].first += 1;
    for (const Semiedge& s : m.semiedges)
        if (s.kind == SemiKind::Attached) vertex_parts[comp[s.ref]].second += 1;
    summary.parts = vertex_parts;
    // Each free edge is its own component with 0 vertices and 2 semiedges.
    for (int i = 0; i < m.m(); ++i)
        if (m.semiedges[i].kind == SemiKind::FreePaired && m.semiedges[i].ref > i)
            summary.parts.emplace_back(0, 2);
    summary.component_count = static_cast<int>(summary.parts.size());
    return summary;
}

bool is_forest(const Multipole& m) {
    auto summary = components(m);
    return m.n() == m.m() - 2 * summary.component_count;
}

bool is_connected(const Multipole& m) { return components(m).component_count == 1; }

std::vector<std::string> validate(const Multipole& m) {
    std::vector<std::string> out;
    if (m.vertex_count < 0) out.push_back("negative vertex count");
    for (const Edge& e : m.edges) {
        if (e.u < 0 || e.v >= m.vertex_count) {
            out.push_back("edge endpoint out of range");
            return out;
        }
        if (e.u == e.v) out.push_back("loop edge");
    }
    std::map<Edge, int> mult;
    for (const Edge& e : m.edges) mult[e] += 1;
    for (const auto& [e, k] : mult)
        if (k > 2)
            out.push_back("edge multiplicity " + std::to_string(k) + " exceeds 2 on (" +
                          std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    for (int i = 0; i < m.m(); ++i) {
        const Semiedge& s = m.semiedges[i];
        if (s.kind == SemiKind::Attached) {
            if (s.ref < 0 || s.ref >= m.vertex_count) {
                out.push_back("semiedge " + std::to_string(i) + " attached out of range");
                return out;
            }
        } else {
            if (s.ref < 0 || s.ref >= m.m() || s.ref == i ||
                m.semiedges[s.ref].kind != SemiKind::FreePaired ||
                m.semiedges[s.ref].ref != i)
                out.push_back("free pairing broken at semiedge " + std::to_string(i));
        }
    }
    std::vector<int> degree(m.vertex_count, 0);
    for (const Edge& e : m.edges) {
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    for (const Semiedge& s : m.semiedges)
        if (s.kind == SemiKind::Attached) degree[s.ref] += 1;
    for (int v = 0; v < m.vertex_count; ++v)
        if (degree[v] != 3)
            out.push_back("cubic condition violated at vertex " + std::to_string(v) +
                          " (degree " + std::to_string(degree[v]) + ")");
    if ((m.n() - m.m()) % 2 != 0) out.push_back("parity n≡m (mod 2) violated");
    return out;
}

void require_valid(const Multipole& m) {
    auto violations = validate(m);
    if (!violations.empty()) {
        std::ostringstream oss;
        oss << "invalid multipole:";
        for (const auto& v : violations) oss << " " << v << ";";
        throw MultipoleError(oss.str());
    }
}

Multipole relabel_vertices(const Multipole& m, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != m.vertex_count)
        throw MultipoleError("relabel_vertices: permutation size mismatch");
    Multipole res = m;
    for (size_t i = 0; i < m.edges.size(); ++i)
        res.edges[i] = Edge(perm[m.edges[i].u], perm[m.edges[i].v]);
    for (int i = 0; i < m.m(); ++i)
        if (m.semiedges[i].kind == SemiKind::Attached)
            res.semiedges[i].ref = perm[m.semiedges[i].ref];
    return res;
}

}  // namespace mp
