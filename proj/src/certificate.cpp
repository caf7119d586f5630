#include "mp/multipole.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mp {

namespace {

// Attachment count and edge multiplicity matrix of G[M].
struct VertexGraph {
    int n = 0;
    std::vector<int> attach;            // semiedges attached per vertex
    std::vector<std::vector<int>> mult; // n x n multiplicities

    explicit VertexGraph(const Multipole& m)
        : n(m.vertex_count), attach(m.vertex_count, 0),
          mult(m.vertex_count, std::vector<int>(m.vertex_count, 0)) {
        for (const Edge& e : m.edges) {
            mult[e.u][e.v] += 1;
            mult[e.v][e.u] += 1;
        }
        for (const Semiedge& s : m.semiedges)
            if (s.kind == SemiKind::Attached) attach[s.ref] += 1;
    }
};

// Min-lex canonical ordering of the attachment-colored multigraph: row i of
// the code is (attach, multiplicities to the already placed vertices). Row i
// depends only on the vertex placed at i and the prefix, so following the
// minimal row at each depth (branching on ties) reaches exactly the minimal
// codes; leaves are compared to keep the overall best.
struct CanonSearch {
    const VertexGraph& g;
    std::vector<int> placed;       // original index by canonical position
    std::vector<int> code, best_code;
    bool have_best = false;

    explicit CanonSearch(const VertexGraph& graph) : g(graph) {}

    void run() {
        placed.clear();
        code.clear();
        dfs();
    }

    void dfs() {
        int depth = static_cast<int>(placed.size());
        if (depth == g.n) {
            if (!have_best || code < best_code) {
                best_code = code;
                have_best = true;
            }
            return;
        }
        // Candidate rows for the next position; keep only the minimal row.
        std::vector<int> row_best;
        std::vector<int> candidates;
        std::vector<char> used(g.n, 0);
        for (int p : placed) used[p] = 1;
        for (int v = 0; v < g.n; ++v) {
            if (used[v]) continue;
            std::vector<int> row;
            row.reserve(depth + 1);
            row.push_back(g.attach[v]);
            for (int p : placed) row.push_back(g.mult[v][p]);
            if (candidates.empty() || row < row_best) {
                row_best = row;
                candidates = {v};
            } else if (row == row_best) {
                candidates.push_back(v);
            }
        }
        size_t base = code.size();
        for (int v : candidates) {
            code.insert(code.end(), row_best.begin(), row_best.end());
            placed.push_back(v);
            dfs();
            placed.pop_back();
            code.resize(base);
        }
    }
};

std::string ignore_labels_certificate(const Multipole& m) {
    VertexGraph g(m);
    int free_edges = 0;
    for (const Semiedge& s : m.semiedges)
        if (s.kind == SemiKind::FreePaired) ++free_edges;
    free_edges /= 2;

    std::ostringstream oss;
    oss << "n" << g.n << "f" << free_edges << ":";
    if (g.n > 0) {
        CanonSearch search(g);
        search.run();
        for (int x : search.best_code) oss << x << ".";
    }
    return oss.str();
}

std::string respect_order_certificate(const Multipole& m) {
    // An isomorphism must fix every semiedge position, so only vertex labels
    // vary. Brute-force min-lex over all vertex orderings (desk scale n).
    int n = m.vertex_count;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::string best;
    do {
        std::vector<int> perm(n);  // original -> canonical
        for (int i = 0; i < n; ++i) perm[order[i]] = i;
        std::ostringstream oss;
        oss << "n" << n << ":";
        for (const Semiedge& s : m.semiedges) {
            if (s.kind == SemiKind::Attached)
                oss << "A" << perm[s.ref] << ",";
            else
                oss << "F" << s.ref << ",";
        }
        std::vector<std::pair<int, int>> edges;
        for (const Edge& e : m.edges) {
            int a = perm[e.u], b = perm[e.v];
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        oss << "|";
        for (auto& [a, b] : edges) oss << a << "-" << b << ",";
        std::string cand = oss.str();
        if (best.empty() || cand < best) best = std::move(cand);
    } while (std::next_permutation(order.begin(), order.end()));
    if (best.empty()) {
        // Vertex-free multipole: nothing to permute.
        std::ostringstream oss;
        oss << "n0:";
        for (const Semiedge& s : m.semiedges) oss << "F" << s.ref << ",";
        oss << "|";
        best = oss.str();
    }
    return best;
}

}  // namespace

std::string canonical_certificate(const Multipole& m, CertMode mode) {
    if (mode == CertMode::IgnoreSemiedgeLabels) return ignore_labels_certificate(m);
    return respect_order_certificate(m);
}

}  // namespace mp
