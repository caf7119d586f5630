#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mp/catalog.hpp"
#include "mp/coloring.hpp"
#include "mp/multipole.hpp"

namespace mp {

enum class VerdictKind {
    Complete,
    NotComplete,
    ClosedSufficient,
    ClosedUpToBound,
    NotClosed,
    Reducible,
    IrreducibleUpToExhaustion,
    Separable,
    NotSeparable,
};

std::string to_string(VerdictKind kind);

struct AnalysisVerdict {
    VerdictKind kind;
    std::optional<Multipole> witness;
    std::vector<int> witness_order;        // semiedge permutation of the witness
    std::optional<PackedState> state;      // missing admissible state, etc.
    int bound_n_max = -1;                  // catalog bound behind the verdict
    std::string note;

    bool holds() const;  // the positive reading used by the CLI exit code
};

AnalysisVerdict is_color_complete(const Multipole& m);

// True iff no disconnected catalog entry with m <= max_m, n <= n_max is
// color complete.
bool complete_implies_connected_check(int max_m, int n_max, int workers = 1);

// Nonnegative (r1,r2,r3) with r1+r2+r3=r satisfying the per-color junction
// congruences, or nullopt.
std::optional<std::array<int, 3>> junction_state_feasibility(
    const std::array<int, 3>& m1_counts, const std::array<int, 3>& m2_counts, int r);

// Independent parity criterion: solutions exist iff for each color
// m^{(1)} - m_i^{(1)} == m^{(2)} - m_i^{(2)} (mod 2) and the residue sum fits r.
bool junction_parity_criterion(const std::array<int, 3>& m1_counts,
                               const std::array<int, 3>& m2_counts, int r);

bool verify_junction_completeness(const Multipole& a, const Multipole& b,
                                  const JunctionSpec& spec);

std::optional<std::pair<int, Multipole>> min_complete_order(int m, int n_max,
                                                            int workers = 1);

// Minimum |states| over colorable catalog entries with n <= n_max.
int mu_bounded(int m, int n_max, int workers = 1);

AnalysisVerdict is_color_closed(const Multipole& m, int n_max, int workers = 1);

AnalysisVerdict is_reducible(const Multipole& m, int workers = 1);

AnalysisVerdict is_separable(const Multipole& m, int workers = 1);

struct VLowerBoundRow {
    int m;
    bool tree_irreducible;
    bool cycle_irreducible;  // cycles need m >= 3
    int implied_lower;       // max of m-2 (tree) and m for m >= 5 (cycle)
    std::optional<int> known_exact;
    std::optional<int> known_lower;
    bool consistent;
};

std::vector<VLowerBoundRow> v_lower_bound_report(int m_max, int workers = 1);

}  // namespace mp
