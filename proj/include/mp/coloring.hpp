#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mp/multipole.hpp"

namespace mp {

// Colors are 1..3 (C = {1,2,3}).
using Color = uint8_t;
inline constexpr int kNumColors = 3;

// Colors of every edge instance and every semiedge of a fixed multipole.
struct TaitColoring {
    std::vector<Color> edge_colors;
    std::vector<Color> semi_colors;
    bool operator==(const TaitColoring&) const = default;
};

// An m-tuple of semiedge colors packed 2 bits per position (color-1), slot 0
// in the most significant position so integer order equals tuple order.
using PackedState = uint64_t;
inline constexpr int kMaxStateLen = 31;

PackedState pack_state(const std::vector<Color>& tuple);
std::vector<Color> unpack_state(PackedState s, int m);
std::string state_to_string(PackedState s, int m);   // e.g. "1122"
PackedState state_from_string(const std::string& text);

// First-appearance color relabeling; unique representative per color orbit.
PackedState canonical_state(PackedState s, int m);

// Reorder positions: result[i] = s[perm[i]], then canonicalize.
PackedState permute_state(PackedState s, int m, const std::vector<int>& perm);

bool parity_check(PackedState s, int m);

// Canonical states, sorted ascending.
struct StateSet {
    int m = 0;
    std::vector<PackedState> states;

    int count() const { return static_cast<int>(states.size()); }
    bool empty() const { return states.empty(); }
    bool contains(PackedState s) const;
    bool subset_of(const StateSet& other) const;
    bool intersects(const StateSet& other) const;
    void insert(PackedState s);  // keeps order, ignores duplicates
    std::vector<std::string> to_strings() const;
    bool operator==(const StateSet&) const = default;
};

// Yields every Tait coloring once, deterministically (edges then semiedges by
// index, colors ascending). Return true from the callback to stop early.
void for_each_coloring(const Multipole& m, const std::function<bool(const TaitColoring&)>& fn);
std::vector<TaitColoring> enumerate_colorings(const Multipole& m);

bool verify_coloring(const Multipole& m, const TaitColoring& coloring);
PackedState coloring_state(const Multipole& m, const TaitColoring& coloring);

StateSet states(const Multipole& m);
bool is_colorable(const Multipole& m);

// All canonical m-tuples allowed by the Parity Lemma.
StateSet admissible_states(int m);

struct KempeRequest {
    int start = 0;           // semiedge index; its color must be in the pair
    Color color_a = 1, color_b = 2;
};

TaitColoring kempe_interchange(const Multipole& m, const TaitColoring& coloring,
                               const KempeRequest& req);

// True iff some Tait coloring matches the given (position, color) pattern
// exactly on the given positions.
bool realizable(const Multipole& m, const std::vector<std::pair<int, Color>>& pattern);

}  // namespace mp
