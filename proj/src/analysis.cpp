#include "mp/analysis.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "mp/formulas.hpp"
#include "mp/parallel.hpp"

namespace mp {

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Complete: return "complete";
        case VerdictKind::NotComplete: return "not-complete";
        case VerdictKind::ClosedSufficient: return "closed (sufficient condition)";
        case VerdictKind::ClosedUpToBound: return "closed (up to bound)";
        case VerdictKind::NotClosed: return "not-closed";
        case VerdictKind::Reducible: return "reducible";
        case VerdictKind::IrreducibleUpToExhaustion: return "irreducible (exhaustive)";
        case VerdictKind::Separable: return "separable";
        case VerdictKind::NotSeparable: return "not-separable";
    }
    return "?";
}

bool AnalysisVerdict::holds() const {
    switch (kind) {
        case VerdictKind::Complete:
        case VerdictKind::ClosedSufficient:
        case VerdictKind::ClosedUpToBound:
        case VerdictKind::Reducible:
        case VerdictKind::Separable:
            return true;
        default:
            return false;
    }
}

AnalysisVerdict is_color_complete(const Multipole& m) {
    require_valid(m);
    StateSet have = states(m);
    StateSet want = admissible_states(m.m());
    if (have == want) return {VerdictKind::Complete};
    AnalysisVerdict v{VerdictKind::NotComplete};
    for (PackedState s : want.states)
        if (!have.contains(s)) {
            v.state = s;
            break;
        }
    return v;
}

bool complete_implies_connected_check(int max_m, int n_max, int workers) {
    for (int m = 2; m <= max_m; ++m) {
        auto entries = generate_up_to(m, n_max, false, false, workers);
        for (const auto& e : entries) {
            if (is_connected(e.multipole)) continue;
            if (is_color_complete(e.multipole).kind == VerdictKind::Complete)
                return false;
        }
    }
    return true;
}

std::optional<std::array<int, 3>> junction_state_feasibility(
    const std::array<int, 3>& m1_counts, const std::array<int, 3>& m2_counts, int r) {
    int m1 = m1_counts[0] + m1_counts[1] + m1_counts[2];
    int m2 = m2_counts[0] + m2_counts[1] + m2_counts[2];
    for (int r1 = 0; r1 <= r; ++r1)
        for (int r2 = 0; r1 + r2 <= r; ++r2) {
            std::array<int, 3> ri = {r1, r2, r - r1 - r2};
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                if ((m1_counts[i] + ri[i] - m1 - r) % 2 != 0) ok = false;
                if ((m2_counts[i] + ri[i] - m2 - r) % 2 != 0) ok = false;
            }
            if (ok) return ri;
        }
    return std::nullopt;
}

bool junction_parity_criterion(const std::array<int, 3>& m1_counts,
                               const std::array<int, 3>& m2_counts, int r) {
    int m1 = m1_counts[0] + m1_counts[1] + m1_counts[2];
    int m2 = m2_counts[0] + m2_counts[1] + m2_counts[2];
    int residue_sum = 0;
    for (int i = 0; i < 3; ++i) {
        if (((m1 - m1_counts[i]) - (m2 - m2_counts[i])) % 2 != 0) return false;
        residue_sum += ((m1 + r - m1_counts[i]) % 2 + 2) % 2;
    }
    return residue_sum <= r && (residue_sum - r) % 2 == 0;
}

bool verify_junction_completeness(const Multipole& a, const Multipole& b,
                                  const JunctionSpec& spec) {
    int r = spec.r();
    if (r % 2 == 0 ? r < 2 : r < 3)
        throw MultipoleError("verify_junction_completeness: need r>=2 even or r>=3 odd");
    if (a.m() - r < 1 || b.m() - r < 1)
        throw MultipoleError("verify_junction_completeness: no semiedges would remain");
    if (is_color_complete(a).kind != VerdictKind::Complete ||
        is_color_complete(b).kind != VerdictKind::Complete)
        throw MultipoleError("verify_junction_completeness: operands must be complete");
    Multipole joined = junction(a, b, spec);
    return is_color_complete(joined).kind == VerdictKind::Complete;
}

std::optional<std::pair<int, Multipole>> min_complete_order(int m, int n_max,
                                                            int workers) {
    for (int n = m % 2; n <= n_max; n += 2) {
        CatalogQuery q{m, n, false, false, {std::max(m, 8), std::max(n_max, 10)}};
        auto entries = generate(q, workers);
        StateSet want = admissible_states(m);
        std::vector<char> hit(entries.size(), 0);
        parallel_for(entries.size(), workers,
                     [&](size_t i) { hit[i] = (entry_states(entries[i]) == want); });
        for (size_t i = 0; i < entries.size(); ++i)
            if (hit[i]) return std::make_pair(n, entries[i].multipole);
    }
    return std::nullopt;
}

int mu_bounded(int m, int n_max, int workers) {
    auto entries = generate_up_to(m, n_max, false, true, workers,
                                  {std::max(m, 8), std::max(n_max, 10)});
    if (entries.empty()) throw MultipoleError("mu_bounded: no colorable entry in bounds");
    std::vector<int> counts(entries.size(), 0);
    parallel_for(entries.size(), workers,
                 [&](size_t i) { counts[i] = entry_states(entries[i]).count(); });
    return *std::min_element(counts.begin(), counts.end());
}

namespace {

using CountTriple = std::array<int, 3>;

CountTriple state_count_triple(PackedState s, int m) {
    CountTriple t = {0, 0, 0};
    for (Color c : unpack_state(s, m)) t[c - 1] += 1;
    std::sort(t.begin(), t.end());
    return t;
}

std::map<CountTriple, int> signature(const StateSet& set) {
    std::map<CountTriple, int> sig;
    for (PackedState s : set.states) sig[state_count_triple(s, set.m)] += 1;
    return sig;
}

// Ordering-invariant necessary condition for subset-under-some-ordering.
bool signature_dominated(const StateSet& sub, const StateSet& super) {
    auto a = signature(sub);
    auto b = signature(super);
    for (const auto& [t, k] : a) {
        auto it = b.find(t);
        if (it == b.end() || it->second < k) return false;
    }
    return true;
}

// Lexicographically least ordering of `candidate`'s positions under which its
// canonical states all land inside `target`, if any.
std::optional<std::vector<int>> subset_order(const StateSet& candidate,
                                             const StateSet& target) {
    int m = candidate.m;
    if (!signature_dominated(candidate, target)) return std::nullopt;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (PackedState s : candidate.states)
            if (!target.contains(permute_state(s, m, perm))) {
                ok = false;
                break;
            }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// Some ordering of `candidate` under which it shares no state with `target`.
std::optional<std::vector<int>> disjoint_order(const StateSet& candidate,
                                               const StateSet& target) {
    int m = candidate.m;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool disjoint = true;
        for (PackedState s : candidate.states)
            if (target.contains(permute_state(s, m, perm))) {
                disjoint = false;
                break;
            }
        if (disjoint) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace

AnalysisVerdict is_color_closed(const Multipole& m, int n_max, int workers) {
    require_valid(m);
    int mm = m.m();
    StateSet own = states(m);
    BigInt sig = sigma(mm);

    const auto& known = known_constants();
    auto mu_it = known.mu.find(mm);
    if (mu_it != known.mu.end()) {
        if (BigInt(own.count()) > sig - mu_it->second)
            return {VerdictKind::ClosedSufficient, std::nullopt, {}, std::nullopt, -1,
                    "pigeonhole with known mu"};
    } else {
        int mu_hat = mu_bounded(mm, n_max, workers);
        if (BigInt(own.count()) > sig - mu_hat)
            return {VerdictKind::ClosedSufficient, std::nullopt, {}, std::nullopt, n_max,
                    "pigeonhole with bounded mu (weakened test)"};
    }

    auto entries = generate_up_to(mm, n_max, false, true, workers,
                                  {std::max(mm, 8), std::max(n_max, 10)});
    for (const auto& entry : entries) {
        const StateSet& other = entry_states(entry);
        if (auto perm = disjoint_order(other, own)) {
            return {VerdictKind::NotClosed, entry.multipole, *perm, std::nullopt, n_max,
                    "disjoint opponent found"};
        }
    }
    return {VerdictKind::ClosedUpToBound, std::nullopt, {}, std::nullopt, n_max, ""};
}

AnalysisVerdict is_reducible(const Multipole& m, int workers) {
    require_valid(m);
    StateSet own = states(m);
    if (own.empty())
        return {VerdictKind::IrreducibleUpToExhaustion, std::nullopt, {}, std::nullopt,
                m.n() - 2, "uncolorable: no witness can have a non-empty subset"};
    int n_bound = m.n() - 2;
    if (n_bound >= 0) {
        auto entries = generate_up_to(m.m(), n_bound, false, true, workers,
                                      {std::max(m.m(), 8), std::max(n_bound, 10)});
        for (const auto& entry : entries) {
            const StateSet& other = entry_states(entry);
            if (other.empty()) continue;
            if (auto perm = subset_order(other, own))
                return {VerdictKind::Reducible, entry.multipole, *perm, std::nullopt,
                        n_bound, ""};
        }
    }
    return {VerdictKind::IrreducibleUpToExhaustion, std::nullopt, {}, std::nullopt,
            std::max(n_bound, -1), "candidate space fully enumerated"};
}

AnalysisVerdict is_separable(const Multipole& m, int workers) {
    require_valid(m);
    StateSet own = states(m);
    int own_components = components(m).component_count;
    if (own.empty())
        return {VerdictKind::NotSeparable, std::nullopt, {}, std::nullopt, m.n(),
                "uncolorable: no witness can have a non-empty subset"};
    CatalogQuery q{m.m(), m.n(), false, true,
                   {std::max(m.m(), 8), std::max(m.n(), 10)}};
    auto entries = generate(q, workers);
    for (const auto& entry : entries) {
        if (components(entry.multipole).component_count <= own_components) continue;
        const StateSet& other = entry_states(entry);
        if (other.empty()) continue;
        if (auto perm = subset_order(other, own))
            return {VerdictKind::Separable, entry.multipole, *perm, std::nullopt, m.n(), ""};
    }
    return {VerdictKind::NotSeparable, std::nullopt, {}, std::nullopt, m.n(),
            "candidate space fully enumerated"};
}

std::vector<VLowerBoundRow> v_lower_bound_report(int m_max, int workers) {
    std::vector<VLowerBoundRow> rows;
    const auto& known = known_constants();
    for (int m = 2; m <= m_max; ++m) {
        VLowerBoundRow row{};
        row.m = m;
        Multipole tree = (m == 2) ? make_free_edge() : make_path_tree(m);
        row.tree_irreducible =
            is_reducible(tree, workers).kind == VerdictKind::IrreducibleUpToExhaustion;
        row.cycle_irreducible =
            m >= 3 && is_reducible(make_cycle(m), workers).kind ==
                          VerdictKind::IrreducibleUpToExhaustion;
        row.implied_lower = m - 2;
        if (m >= 5 && row.cycle_irreducible) row.implied_lower = m;
        if (auto it = known.v_exact.find(m); it != known.v_exact.end())
            row.known_exact = it->second;
        if (auto it = known.v_lower.find(m); it != known.v_lower.end())
            row.known_lower = it->second;
        row.consistent = row.tree_irreducible;
        if (m >= 5) row.consistent = row.consistent && row.cycle_irreducible;
        if (row.known_exact && row.implied_lower > *row.known_exact)
            row.consistent = false;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mp
