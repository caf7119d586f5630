#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mp {

struct MultipoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SemiKind : uint8_t { Attached, FreePaired };

// One entry of the ordered semiedge list. `ref` is a vertex index for
// Attached and the partner's semiedge index for FreePaired.
struct Semiedge {
    SemiKind kind;
    int ref;

    static Semiedge attached(int vertex) { return {SemiKind::Attached, vertex}; }
    static Semiedge free_paired(int partner) { return {SemiKind::FreePaired, partner}; }
    bool operator==(const Semiedge&) const = default;
};

// Undirected edge instance; parallel edges appear as repeated entries
// (multiplicity at most 2), loops are not representable by construction.
struct Edge {
    int u, v;  // normalized u <= v

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

// A cubic multipole: vertices 0..vertex_count-1, an edge multiset, and an
// ordered list of m semiedges, each attached to a vertex or paired with
// another semiedge to form a free edge.
struct Multipole {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Semiedge> semiedges;

    int n() const { return vertex_count; }
    int m() const { return static_cast<int>(semiedges.size()); }
    bool operator==(const Multipole&) const = default;
};

struct SemiedgeRef {
    int index = 0;
};

struct ComponentSummary {
    int component_count = 0;
    // (vertices, semiedges) per component; vertex components first by
    // smallest vertex index, then free edges by smallest semiedge index.
    std::vector<std::pair<int, int>> parts;
};

struct JunctionSpec {
    // (semiedge of first operand, semiedge of second operand)
    std::vector<std::pair<int, int>> pairs;
    int r() const { return static_cast<int>(pairs.size()); }
};

// Constructors.
Multipole make_free_edge();
Multipole make_vertex_pole();
Multipole make_minimal(int m);
// parent_list[i] = parent of vertex i+1; vertex 0 is the root. Every vertex
// is padded with semiedges to degree 3.
Multipole make_tree(const std::vector<int>& parent_list);
Multipole make_path_tree(int m);  // the path-shaped tree m-pole
Multipole make_cycle(int m);

// Structural operations (all pure; inputs are never modified).
Multipole disjoint_union(const Multipole& a, const Multipole& b);
Multipole join(const Multipole& m, int i, int j);
Multipole junction(const Multipole& a, const Multipole& b, const JunctionSpec& spec);
Multipole cut_edge(const Multipole& m, Edge e);
Multipole delete_semiedge_vertex(const Multipole& m, int semiedge);

// Graph distance in G[M] between the incident vertices of two attached
// semiedges; nullopt across components. Free-paired refs are an error.
std::optional<int> semiedge_distance(const Multipole& m, int a, int b);

ComponentSummary components(const Multipole& m);
bool is_forest(const Multipole& m);    // every component of G[M] is a tree; free edges count
bool is_connected(const Multipole& m); // exactly one component (free edges included)

std::vector<std::string> validate(const Multipole& m);
void require_valid(const Multipole& m);  // throws MultipoleError on violations

// Relabel vertices by `perm` (perm[old] = new); semiedge order is unchanged.
Multipole relabel_vertices(const Multipole& m, const std::vector<int>& perm);

enum class CertMode { IgnoreSemiedgeLabels, RespectSemiedgeOrder };

// Equal certificates iff isomorphic in the chosen mode.
std::string canonical_certificate(const Multipole& m, CertMode mode);

}  // namespace mp
