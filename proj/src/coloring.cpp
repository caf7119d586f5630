#include "mp/coloring.hpp"

#include <algorithm>
#include <array>

namespace mp {

PackedState pack_state(const std::vector<Color>& tuple) {
    PackedState s = 0;
    for (Color c : tuple) s = (s << 2) | static_cast<PackedState>(c - 1);
    return s;
}

std::vector<Color> unpack_state(PackedState s, int m) {
    std::vector<Color> tuple(m);
    for (int i = m - 1; i >= 0; --i) {
        tuple[i] = static_cast<Color>((s & 3) + 1);
        s >>= 2;
    }
    return tuple;
}

std::string state_to_string(PackedState s, int m) {
    std::string out(m, '0');
    auto tuple = unpack_state(s, m);
    for (int i = 0; i < m; ++i) out[i] = static_cast<char>('0' + tuple[i]);
    return out;
}

PackedState state_from_string(const std::string& text) {
    std::vector<Color> tuple;
    for (char c : text) {
        if (c < '1' || c > '3') throw MultipoleError("state_from_string: bad digit");
        tuple.push_back(static_cast<Color>(c - '0'));
    }
    return pack_state(tuple);
}

PackedState canonical_state(PackedState s, int m) {
    auto tuple = unpack_state(s, m);
    std::array<Color, 4> map{};  // old color -> new, 0 = unseen
    Color next = 1;
    for (Color& c : tuple) {
        if (map[c] == 0) map[c] = next++;
        c = map[c];
    }
    return pack_state(tuple);
}

PackedState permute_state(PackedState s, int m, const std::vector<int>& perm) {
    auto tuple = unpack_state(s, m);
    std::vector<Color> out(m);
    for (int i = 0; i < m; ++i) out[i] = tuple[perm[i]];
    return canonical_state(pack_state(out), m);
}

bool parity_check(PackedState s, int m) {
    int counts[3] = {0, 0, 0};
    for (Color c : unpack_state(s, m)) counts[c - 1] += 1;
    for (int i = 0; i < 3; ++i)
        if ((counts[i] - m) % 2 != 0) return false;
    return true;
}

bool StateSet::contains(PackedState s) const {
    return std::binary_search(states.begin(), states.end(), s);
}

bool StateSet::subset_of(const StateSet& other) const {
    return std::includes(other.states.begin(), other.states.end(), states.begin(),
                         states.end());
}

bool StateSet::intersects(const StateSet& other) const {
    auto a = states.begin();
    auto b = other.states.begin();
    while (a != states.end() && b != other.states.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else return true;
    }
    return false;
}

void StateSet::insert(PackedState s) {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || *it != s) states.insert(it, s);
}

std::vector<std::string> StateSet::to_strings() const {
    std::vector<std::string> out;
    out.reserve(states.size());
    for (PackedState s : states) out.push_back(state_to_string(s, m));
    return out;
}

namespace {

// Backtracking over edges (by index) then semiedges (by index, a free pair
// assigned at its lower half), colors ascending.
struct Enumerator {
    const Multipole& mp;
    std::vector<Color> fixed;  // per semiedge, 0 = unconstrained
    const std::function<bool(const TaitColoring&)>& fn;
    TaitColoring coloring;
    std::vector<uint8_t> used;  // per-vertex color bitmask
    bool stopped = false;

    Enumerator(const Multipole& m, std::vector<Color> fixed_colors,
               const std::function<bool(const TaitColoring&)>& callback)
        : mp(m), fixed(std::move(fixed_colors)), fn(callback) {
        coloring.edge_colors.assign(mp.edges.size(), 0);
        coloring.semi_colors.assign(mp.m(), 0);
        used.assign(mp.vertex_count, 0);
    }

    void run() { assign_edge(0); }

    void assign_edge(int k) {
        if (stopped) return;
        if (k == static_cast<int>(mp.edges.size())) {
            assign_semi(0);
            return;
        }
        const Edge& e = mp.edges[k];
        for (Color c = 1; c <= kNumColors; ++c) {
            uint8_t bit = static_cast<uint8_t>(1 << c);
            if ((used[e.u] | used[e.v]) & bit) continue;
            used[e.u] |= bit;
            used[e.v] |= bit;
            coloring.edge_colors[k] = c;
            assign_edge(k + 1);
            used[e.u] &= static_cast<uint8_t>(~bit);
            used[e.v] &= static_cast<uint8_t>(~bit);
            if (stopped) return;
        }
        coloring.edge_colors[k] = 0;
    }

    void assign_semi(int k) {
        if (stopped) return;
        if (k == mp.m()) {
            if (fn(coloring)) stopped = true;
            return;
        }
        const Semiedge& s = mp.semiedges[k];
        if (s.kind == SemiKind::FreePaired && s.ref < k) {
            // Already colored together with its partner.
            assign_semi(k + 1);
            return;
        }
        for (Color c = 1; c <= kNumColors; ++c) {
            if (fixed[k] != 0 && fixed[k] != c) continue;
            if (s.kind == SemiKind::Attached) {
                uint8_t bit = static_cast<uint8_t>(1 << c);
                if (used[s.ref] & bit) continue;
                used[s.ref] |= bit;
                coloring.semi_colors[k] = c;
                assign_semi(k + 1);
                used[s.ref] &= static_cast<uint8_t>(~bit);
            } else {
                if (fixed[s.ref] != 0 && fixed[s.ref] != c) continue;
                coloring.semi_colors[k] = c;
                coloring.semi_colors[s.ref] = c;
                assign_semi(k + 1);
                coloring.semi_colors[s.ref] = 0;
            }
            if (stopped) return;
        }
        coloring.semi_colors[k] = 0;
    }
};

}  // namespace

void for_each_coloring(const Multipole& m,
                       const std::function<bool(const TaitColoring&)>& fn) {
    Enumerator e(m, std::vector<Color>(m.m(), 0), fn);
    e.run();
}

std::vector<TaitColoring> enumerate_colorings(const Multipole& m) {
    std::vector<TaitColoring> out;
    for_each_coloring(m, [&](const TaitColoring& c) {
        out.push_back(c);
        return false;
    });
    return out;
}

bool verify_coloring(const Multipole& m, const TaitColoring& coloring) {
    if (coloring.edge_colors.size() != m.edges.size() ||
        coloring.semi_colors.size() != static_cast<size_t>(m.m()))
        return false;
    for (Color c : coloring.edge_colors)
        if (c < 1 || c > 3) return false;
    for (Color c : coloring.semi_colors)
        if (c < 1 || c > 3) return false;
    std::vector<uint8_t> used(m.vertex_count, 0);
    auto mark = [&](int v, Color c) {
        uint8_t bit = static_cast<uint8_t>(1 << c);
        if (used[v] & bit) return false;
        used[v] |= bit;
        return true;
    };
    for (size_t i = 0; i < m.edges.size(); ++i) {
        if (!mark(m.edges[i].u, coloring.edge_colors[i])) return false;
        if (!mark(m.edges[i].v, coloring.edge_colors[i])) return false;
    }
    for (int i = 0; i < m.m(); ++i) {
        const Semiedge& s = m.semiedges[i];
        if (s.kind == SemiKind::Attached) {
            if (!mark(s.ref, coloring.semi_colors[i])) return false;
        } else if (coloring.semi_colors[i] != coloring.semi_colors[s.ref]) {
            return false;
        }
    }
    return true;
}

PackedState coloring_state(const Multipole& m, const TaitColoring& coloring) {
    return pack_state(coloring.semi_colors);
}

StateSet states(const Multipole& m) {
    StateSet set;
    set.m = m.m();
    for_each_coloring(m, [&](const TaitColoring& c) {
        set.insert(canonical_state(pack_state(c.semi_colors), set.m));
        return false;
    });
    return set;
}

bool is_colorable(const Multipole& m) {
    bool found = false;
    for_each_coloring(m, [&](const TaitColoring&) {
        found = true;
        return true;
    });
    return found;
}

namespace {

void admissible_rec(int m, int pos, Color max_seen, int c1, int c2, int c3,
                    std::vector<Color>& tuple, StateSet& out) {
    if (pos == m) {
        if ((c1 - m) % 2 == 0 && (c2 - m) % 2 == 0 && (c3 - m) % 2 == 0)
            out.states.push_back(pack_state(tuple));
        return;
    }
    Color limit = std::min<Color>(static_cast<Color>(max_seen + 1), 3);
    for (Color c = 1; c <= limit; ++c) {
        tuple[pos] = c;
        admissible_rec(m, pos + 1, std::max(max_seen, c), c1 + (c == 1), c2 + (c == 2),
                       c3 + (c == 3), tuple, out);
    }
}

}  // namespace

StateSet admissible_states(int m) {
    if (m < 1) throw MultipoleError("admissible_states: m must be >= 1");
    if (m > kMaxStateLen) throw MultipoleError("admissible_states: m too large");
    StateSet out;
    out.m = m;
    std::vector<Color> tuple(m);
    // Restricted-growth generation emits canonical tuples in ascending order.
    admissible_rec(m, 0, 0, 0, 0, 0, tuple, out);
    return out;
}

namespace {

struct Incidence {
    bool is_edge;
    int index;
};

}  // namespace

TaitColoring kempe_interchange(const Multipole& m, const TaitColoring& coloring,
                               const KempeRequest& req) {
    if (req.start < 0 || req.start >= m.m())
        throw MultipoleError("kempe_interchange: start out of range");
    Color a = req.color_a, b = req.color_b;
    if (a == b || a < 1 || a > 3 || b < 1 || b > 3)
        throw MultipoleError("kempe_interchange: invalid color pair");
    Color start_color = coloring.semi_colors[req.start];
    if (start_color != a && start_color != b)
        throw MultipoleError("kempe_interchange: start color not in pair");

    TaitColoring result = coloring;
    auto flip = [&](Color c) { return c == a ? b : (c == b ? a : c); };

    const Semiedge& start = m.semiedges[req.start];
    if (start.kind == SemiKind::FreePaired) {
        result.semi_colors[req.start] = flip(result.semi_colors[req.start]);
        result.semi_colors[start.ref] = flip(result.semi_colors[start.ref]);
        return result;
    }

    std::vector<std::vector<Incidence>> incid(m.vertex_count);
    for (int i = 0; i < static_cast<int>(m.edges.size()); ++i) {
        incid[m.edges[i].u].push_back({true, i});
        incid[m.edges[i].v].push_back({true, i});
    }
    for (int i = 0; i < m.m(); ++i)
        if (m.semiedges[i].kind == SemiKind::Attached)
            incid[m.semiedges[i].ref].push_back({false, i});

    // Walk the alternating chain from the free end inwards, flipping as we go.
    result.semi_colors[req.start] = flip(start_color);
    Color want = flip(start_color);  // color of the next chain item
    int vertex = start.ref;
    Incidence prev{false, req.start};
    while (true) {
        const Incidence* next = nullptr;
        for (const Incidence& inc : incid[vertex]) {
            if (inc.is_edge == prev.is_edge && inc.index == prev.index) continue;
            Color c = inc.is_edge ? result.edge_colors[inc.index]
                                  : result.semi_colors[inc.index];
            if (c == want) {
                next = &inc;
                break;
            }
        }
        if (next == nullptr)
            throw MultipoleError("kempe_interchange: broken chain (coloring invalid?)");
        if (next->is_edge) {
            result.edge_colors[next->index] = flip(want);
            const Edge& e = m.edges[next->index];
            // Digon care: when u == v is impossible (no loops), the far end is
            // the other endpoint even if both incidences sit in our list.
            vertex = (e.u == vertex) ? e.v : e.u;
            prev = *next;
            want = flip(want);
        } else {
            result.semi_colors[next->index] = flip(want);
            break;  // exits through a free end
        }
    }
    return result;
}

bool realizable(const Multipole& m, const std::vector<std::pair<int, Color>>& pattern) {
    std::vector<Color> fixed(m.m(), 0);
    for (const auto& [idx, c] : pattern) {
        if (idx < 0 || idx >= m.m()) throw MultipoleError("realizable: index out of range");
        if (c < 1 || c > 3) throw MultipoleError("realizable: bad color");
        if (fixed[idx] != 0 && fixed[idx] != c) return false;
        fixed[idx] = c;
    }
    bool found = false;
    std::function<bool(const TaitColoring&)> cb = [&](const TaitColoring&) {
        found = true;
        return true;
    };
    Enumerator e(m, fixed, cb);
    e.run();
    return found;
}

}  // namespace mp
