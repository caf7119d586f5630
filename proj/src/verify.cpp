#include "mp/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "mp/analysis.hpp"
#include "mp/catalog.hpp"
#include "mp/coloring.hpp"
#include "mp/formulas.hpp"
#include "mp/multipole.hpp"

namespace mp {

namespace {

struct Check {
    std::ostringstream detail;
    bool pass = true;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

// Brute-force sigma oracle: canonical parity-admissible m-tuples via a plain
// 3^m filter, independent of the restricted-growth generator.
long brute_force_sigma(int m) {
    std::set<PackedState> seen;
    std::vector<Color> tuple(m, 1);
    while (true) {
        int counts[3] = {0, 0, 0};
        for (Color c : tuple) counts[c - 1] += 1;
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            if ((counts[i] - m) % 2 != 0) ok = false;
        if (ok) seen.insert(canonical_state(pack_state(tuple), m));
        int pos = m - 1;
        while (pos >= 0 && tuple[pos] == 3) tuple[pos--] = 1;
        if (pos < 0) break;
        tuple[pos] += 1;
    }
    return static_cast<long>(seen.size());
}

CriterionResult criterion_sigma(int) {
    Check c;
    for (int m = 1; m <= 12; ++m)
        c.expect(sigma(m) == brute_force_sigma(m), "sigma(" + std::to_string(m) + ")");
    c.expect(sigma(1) == 0 && sigma(4) == 4 && sigma(5) == 10 && sigma(6) == 31,
             "sigma anchors");
    c.expect(sigma_recurrence_check(12), "sigma recurrence");
    c.expect(sigma_superadditive_check(20), "sigma superadditivity");
    return {1, "sigma oracle (m=1..12, brute force vs closed form)", c.pass,
            c.detail.str()};
}

CriterionResult criterion_rho(int) {
    Check c;
    for (int m = 2; m <= 12; ++m)
        c.expect(BigInt(states(make_minimal(m)).count()) == rho(m),
                 "rho(" + std::to_string(m) + ")");
    c.expect(rho(2) == 1 && rho(6) == 5, "rho anchors");
    return {2, "rho oracle (minimal m-poles, m=2..12)", c.pass, c.detail.str()};
}

CriterionResult criterion_trees(int workers) {
    Check c;
    for (int m = 3; m <= 8; ++m) {
        CatalogQuery q{m, m - 2, true, false, {8, 10}};
        auto entries = generate(q, workers);
        c.expect(!entries.empty(), "no tree " + std::to_string(m) + "-poles");
        for (const auto& e : entries) {
            c.expect(is_forest(e.multipole), "non-tree entry at m=" + std::to_string(m));
            c.expect(BigInt(entry_states(e).count()) == tree_count(m),
                     "tree state count at m=" + std::to_string(m));
        }
    }
    return {3, "tree count t(m)=2^(m-3) over all tree m-poles (m<=8)", c.pass,
            c.detail.str()};
}

CriterionResult criterion_cycles(int) {
    Check c;
    for (int m = 3; m <= 14; ++m)
        c.expect(BigInt(states(make_cycle(m)).count()) == cycle_count(m),
                 "c(" + std::to_string(m) + ")");
    return {4, "cycle count c(m) (m=3..14)", c.pass, c.detail.str()};
}

CriterionResult criterion_forests(int workers) {
    Check c;
    for (int m = 2; m <= 8; ++m) {
        for (int n = m % 2; n <= m - 2; n += 2) {
            CatalogQuery q{m, n, false, false, {8, 10}};
            for (const auto& e : generate(q, workers)) {
                if (!is_forest(e.multipole)) continue;
                c.expect(BigInt(entry_states(e).count()) == forest_count(n, m),
                         "f(" + std::to_string(n) + "," + std::to_string(m) + ")");
            }
        }
    }
    for (int m = 2; m <= 12; ++m)
        for (int n = m % 2; n <= m - 2; n += 2) {
            c.expect(forest_count(n, m) == forest_count_recurrence(n, m),
                     "recurrence route");
            for (int k = 0; n <= m - 2 * (k + 1); ++k)
                c.expect(forest_count_binomial(n, m, k) == forest_count(n, m),
                         "binomial route");
        }
    for (int k = 0; 2 * k + 3 <= 12; ++k) {
        BigInt pow3 = 1;
        for (int i = 0; i < k; ++i) pow3 *= 3;
        c.expect(forest_count(0, 2 * k + 2) == (pow3 + 1) / 2, "f(0,2k+2) closed form");
        c.expect(forest_count(1, 2 * k + 3) == pow3, "f(1,2k+3) closed form");
    }
    return {5, "forest triangle f(n,m): enumeration, recurrence, binomial sum", c.pass,
            c.detail.str()};
}

CriterionResult criterion_mu(int workers) {
    Check c;
    c.expect(mu_bounded(4, 6, workers) == 2, "mu(4)");
    c.expect(mu_bounded(5, 7, workers) == 3, "mu(5)");
    c.expect(mu_bounded(6, 6, workers) == 5, "mu(6)");
    return {6, "mu values: mu(4)=2, mu(5)=3, mu(6)=5", c.pass, c.detail.str()};
}

CriterionResult criterion_forbidden_patterns(int) {
    Check c;
    for (int m = 5; m <= 10; ++m) {
        Multipole cycle = make_cycle(m);
        for (int i = 0; i < m; ++i) {
            for (Color a = 1; a <= 3; ++a)
                for (Color b = 1; b <= 3; ++b) {
                    if (a == b) continue;
                    c.expect(!realizable(cycle, {{i, a}, {(i + 1) % m, b}, {(i + 2) % m, a}}),
                             "(a,b,a) realizable in C" + std::to_string(m));
                    Color cc = static_cast<Color>(6 - a - b);
                    c.expect(!realizable(cycle, {{i, a},
                                                 {(i + 1) % m, a},
                                                 {(i + 2) % m, b},
                                                 {(i + 3) % m, b},
                                                 {(i + 4) % m, cc}}),
                             "(a,a,b,b,c) realizable in C" + std::to_string(m));
                }
        }
    }
    return {7, "forbidden cycle patterns (a,b,a) and (a,a,b,b,c) (m=5..10)", c.pass,
            c.detail.str()};
}

CriterionResult criterion_irreducibility(int workers) {
    Check c;
    for (int m = 3; m <= 7; ++m) {
        CatalogQuery q{m, m - 2, true, false, {8, 10}};
        for (const auto& e : generate(q, workers))
            c.expect(is_reducible(e.multipole, workers).kind ==
                         VerdictKind::IrreducibleUpToExhaustion,
                     "tree " + std::to_string(m) + "-pole reducible");
    }
    for (int m = 2; m <= 6; ++m)
        for (int n = m % 2; n <= m - 2; n += 2) {
            CatalogQuery q{m, n, false, false, {8, 10}};
            for (const auto& e : generate(q, workers)) {
                if (!is_forest(e.multipole)) continue;
                c.expect(is_reducible(e.multipole, workers).kind ==
                             VerdictKind::IrreducibleUpToExhaustion,
                         "forest (" + std::to_string(n) + "," + std::to_string(m) +
                             ") reducible");
            }
        }
    for (int m = 5; m <= 7; ++m)
        c.expect(is_reducible(make_cycle(m), workers).kind ==
                     VerdictKind::IrreducibleUpToExhaustion,
                 "C" + std::to_string(m) + " reducible");
    auto c4 = is_reducible(make_cycle(4), workers);
    c.expect(c4.kind == VerdictKind::Reducible, "C4 not reducible");
    if (c4.witness) {
        c.expect(c4.witness->n() == 0 && c4.witness->m() == 4, "C4 witness shape");
        c.expect(canonical_certificate(*c4.witness, CertMode::IgnoreSemiedgeLabels) ==
                     canonical_certificate(make_minimal(4), CertMode::IgnoreSemiedgeLabels),
                 "C4 witness is not two free edges");
    } else {
        c.expect(false, "C4 witness missing");
    }
    return {8, "irreducibility: trees m<=7, forests m<=6, C5..C7; C4 reducible", c.pass,
            c.detail.str()};
}

CriterionResult criterion_free_edge_stability(int workers) {
    Check c;
    for (int m = 2; m <= 5; ++m) {
        auto entries = generate_up_to(m, 5, false, true, workers, {8, 10});
        for (const auto& e : entries) {
            if (is_reducible(e.multipole, workers).kind !=
                VerdictKind::IrreducibleUpToExhaustion)
                continue;
            Multipole extended = disjoint_union(e.multipole, make_free_edge());
            c.expect(is_reducible(extended, workers).kind ==
                         VerdictKind::IrreducibleUpToExhaustion,
                     "M+e reducible for an irreducible entry (m=" + std::to_string(m) +
                         ")");
        }
    }
    return {9, "free-edge stability: irreducible M (m<=5) keeps M+e irreducible", c.pass,
            c.detail.str()};
}

CriterionResult criterion_junction(int workers) {
    Check c;
    std::vector<Multipole> complete_poles;
    if (auto m3 = min_complete_order(3, 3, workers)) complete_poles.push_back(m3->second);
    if (auto m4 = min_complete_order(4, 8, workers)) complete_poles.push_back(m4->second);
    c.expect(!complete_poles.empty(), "no complete multipole found");
    int tested = 0;
    for (const auto& a : complete_poles)
        for (const auto& b : complete_poles)
            for (int r : {2, 3}) {
                if (r % 2 == 1 && r < 3) continue;
                if (a.m() - r < 1 || b.m() - r < 1) continue;
                JunctionSpec spec;
                for (int k = 0; k < r; ++k) spec.pairs.emplace_back(k, k);
                c.expect(verify_junction_completeness(a, b, spec),
                         "junction lost completeness (r=" + std::to_string(r) + ")");
                ++tested;
            }
    c.expect(tested > 0, "no junction satisfied the preconditions");

    for (int s1 = 0; s1 <= 6; ++s1)
        for (int x1 = 0; x1 <= s1; ++x1)
            for (int x2 = 0; x1 + x2 <= s1; ++x2)
                for (int s2 = 0; s2 <= 6; ++s2)
                    for (int y1 = 0; y1 <= s2; ++y1)
                        for (int y2 = 0; y1 + y2 <= s2; ++y2)
                            for (int r = 0; r <= 6; ++r) {
                                std::array<int, 3> mc1 = {x1, x2, s1 - x1 - x2};
                                std::array<int, 3> mc2 = {y1, y2, s2 - y1 - y2};
                                bool found =
                                    junction_state_feasibility(mc1, mc2, r).has_value();
                                c.expect(found == junction_parity_criterion(mc1, mc2, r),
                                         "feasibility vs parity criterion mismatch");
                            }
    return {10, "junction completeness criterion and state feasibility parity", c.pass,
            c.detail.str()};
}

CriterionResult criterion_min_order(int workers) {
    Check c;
    c.expect(!min_complete_order(5, 5, workers).has_value(), "complete 5-pole with n<=5");
    c.expect(!min_complete_order(4, 2, workers).has_value(), "complete 4-pole with n<=2");
    auto m3 = min_complete_order(3, 3, workers);
    c.expect(m3 && m3->first == 1, "n(3) != 1");
    return {11, "minimum complete order: none at m=5,n<=5 or m=4,n<=2; n(3)=1", c.pass,
            c.detail.str()};
}

CriterionResult criterion_closed_existence(int workers) {
    Check c;
    bool found = false;
    for (int n = 0; n <= 6 && !found; n += 2) {
        CatalogQuery q{4, n, false, true, {8, 10}};
        for (const auto& e : generate(q, workers)) {
            if (entry_states(e).count() != 3) continue;
            auto verdict = is_color_closed(e.multipole, 8, workers);
            if (verdict.kind == VerdictKind::ClosedSufficient ||
                verdict.kind == VerdictKind::ClosedUpToBound) {
                found = true;
                break;
            }
        }
    }
    c.expect(found, "no color closed 4-pole with exactly 3 states found");
    return {12, "color closed 4-pole with exactly 3 states exists (bounded)", c.pass,
            c.detail.str()};
}

CriterionResult criterion_properties(int workers) {
    Check c;
    // Parity Lemma over every colorable catalog entry, m <= 7.
    for (int m = 2; m <= 7; ++m) {
        auto entries = generate_up_to(m, 7, false, true, workers, {8, 10});
        for (const auto& e : entries)
            for (PackedState s : entry_states(e).states)
                c.expect(parity_check(s, m), "parity violated at m=" + std::to_string(m));
    }
    // Forest bound across the full catalog: n >= m-2c, equality iff forest.
    for (int m = 2; m <= 7; ++m)
        for (int n = m % 2; n <= 7; n += 2) {
            CatalogQuery q{m, n, false, false, {8, 10}};
            for (const auto& e : generate(q, workers)) {
                int comps = components(e.multipole).component_count;
                c.expect(n >= m - 2 * comps, "n >= m-2c violated");
                c.expect((n == m - 2 * comps) == is_forest(e.multipole),
                         "forest bound equality mismatch");
            }
        }
    // Kempe interchange: validity-preserving involution, 1000 randomized cases.
    std::mt19937_64 rng(20240901);
    const std::vector<std::pair<int, int>> shapes = {{4, 2}, {4, 4}, {5, 3},
                                                     {5, 5}, {6, 4}, {6, 6}, {7, 5}};
    int cases = 0;
    uint64_t seed = 1;
    while (cases < 1000) {
        auto [m, n] = shapes[rng() % shapes.size()];
        Multipole mp = random_multipole(m, n, seed++);
        auto colorings = enumerate_colorings(mp);
        if (colorings.empty()) continue;
        const TaitColoring& phi = colorings[rng() % colorings.size()];
        KempeRequest req;
        req.start = static_cast<int>(rng() % mp.m());
        Color current = phi.semi_colors[req.start];
        Color other = static_cast<Color>(1 + rng() % 3);
        if (other == current) other = static_cast<Color>(current % 3 + 1);
        req.color_a = current;
        req.color_b = other;
        TaitColoring once = kempe_interchange(mp, phi, req);
        c.expect(verify_coloring(mp, once), "Kempe produced an invalid coloring");
        TaitColoring twice = kempe_interchange(mp, once, req);
        c.expect(twice == phi, "Kempe interchange is not an involution");
        ++cases;
    }
    return {13, "property suite: parity lemma, forest bound, Kempe involution x1000",
            c.pass, c.detail.str()};
}

CriterionResult criterion_determinism(int) {
    Check c;
    // The same pipeline must serialize identically across worker counts.
    auto snapshot = [&](int workers) {
        std::ostringstream oss;
        for (int m = 2; m <= 6; ++m) {
            auto entries = generate_up_to(m, 6, false, false, workers, {8, 10});
            for (const auto& e : entries)
                oss << e.certificate << "=" << entry_states(e).count() << "\n";
        }
        oss << to_string(is_reducible(make_cycle(4), 1).kind) << "\n";
        oss << to_string(is_reducible(make_cycle(4), 3).kind) << "\n";
        return oss.str();
    };
    c.expect(snapshot(1) == snapshot(4), "catalog snapshot differs across worker counts");
    return {14, "determinism across worker counts", c.pass, c.detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int workers) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_sigma(workers));
    out.push_back(criterion_rho(workers));
    out.push_back(criterion_trees(workers));
    out.push_back(criterion_cycles(workers));
    out.push_back(criterion_forests(workers));
    out.push_back(criterion_mu(workers));
    out.push_back(criterion_forbidden_patterns(workers));
    out.push_back(criterion_irreducibility(workers));
    out.push_back(criterion_free_edge_stability(workers));
    out.push_back(criterion_junction(workers));
    out.push_back(criterion_min_order(workers));
    out.push_back(criterion_closed_existence(workers));
    out.push_back(criterion_properties(workers));
    out.push_back(criterion_determinism(workers));
    return out;
}

std::string acceptance_report(const std::vector<CriterionResult>& results) {
    std::ostringstream oss;
    int passed = 0;
    for (const auto& r : results) {
        oss << (r.pass ? "PASS" : "FAIL") << " " << r.id << ": " << r.name;
        if (!r.pass && !r.detail.empty()) oss << " [" << r.detail << "]";
        oss << "\n";
        if (r.pass) ++passed;
    }
    oss << passed << "/" << results.size() << " criteria passed\n";
    return oss.str();
}

}  // namespace mp
