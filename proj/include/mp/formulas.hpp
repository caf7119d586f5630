#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace mp {

using BigInt = boost::multiprecision::cpp_int;

// Number of admissible states of an m-pole: (3^{m-1} + 2 + 3*(-1)^m) / 8.
BigInt sigma(int m);

// sigma(m) = 2*sigma(m-1) + 3*sigma(m-2) - 1 for 4 <= m <= max_m.
bool sigma_recurrence_check(int max_m);

// sigma(m1)*sigma(m2) < sigma(m1+m2) for all m1,m2 >= 2, m1+m2 <= max_m.
bool sigma_superadditive_check(int max_m);

// States of the minimal m-pole: 3^{(m-3)/2} (odd), (3^{m/2-1}+1)/2 (even).
BigInt rho(int m);

// States of a tree m-pole: 2^{m-3}.
BigInt tree_count(int m);

// States of the cycle m-pole: (2^{m-1} + (-1)^m) / 3.
BigInt cycle_count(int m);

// Raw 3-edge-coloring count of the m-cycle before dividing by 3! = 2^m + 2*(-1)^m.
BigInt cycle_coloring_count(int m);

// States of a forest m-pole with n vertices (n <= m-2, n == m mod 2).
BigInt forest_count(int n, int m);

// Cross-check routes for forest_count.
BigInt forest_count_recurrence(int n, int m);               // f(n,m)=f(n,m-2)+f(n+1,m-1)
BigInt forest_count_binomial(int n, int m, int k);          // binomial sum over C(k,i)

struct ForestTableRow {
    int n, m;
    BigInt value;
    bool cycle_diagonal;  // the n == m entries hold cycle_count(m)
};
std::vector<ForestTableRow> forest_table(int max_m);
std::string render_forest_table(int max_m);

struct KnownConstants {
    std::map<int, int> mu;        // mu(4)=2, mu(5)=3, mu(6)=5
    std::map<int, int> v_exact;   // v(2)=0, v(3)=1, v(4)=2, v(5)=5
    std::map<int, int> v_lower;   // v(6)>=12, v(7)>=11
    // n(m) bounds: m+2 <= n(m) <= 10m-37 (odd m), 10m-40 (even m), m >= 5.
    int n_lower(int m) const { return m + 2; }
    int n_upper(int m) const { return m % 2 ? 10 * m - 37 : 10 * m - 40; }
};
const KnownConstants& known_constants();

}  // namespace mp
