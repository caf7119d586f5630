#include "mp/formulas.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "mp/multipole.hpp"

namespace mp {

namespace {

BigInt ipow(int base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

int sign(int m) { return m % 2 == 0 ? 1 : -1; }

}  // namespace

BigInt sigma(int m) {
    if (m < 1) throw MultipoleError("sigma: m must be >= 1");
    BigInt num = ipow(3, m - 1) + 2 + 3 * sign(m);
    if (num % 8 != 0) throw MultipoleError("sigma: divisibility failure");
    return num / 8;
}

bool sigma_recurrence_check(int max_m) {
    if (max_m < 4) throw MultipoleError("sigma_recurrence_check: max_m must be >= 4");
    for (int m = 4; m <= max_m; ++m)
        if (sigma(m) != 2 * sigma(m - 1) + 3 * sigma(m - 2) - 1) return false;
    return true;
}

bool sigma_superadditive_check(int max_m) {
    if (max_m < 4) throw MultipoleError("sigma_superadditive_check: max_m must be >= 4");
    for (int m1 = 2; m1 <= max_m - 2; ++m1)
        for (int m2 = 2; m1 + m2 <= max_m; ++m2)
            if (sigma(m1) * sigma(m2) >= sigma(m1 + m2)) return false;
    return true;
}

BigInt rho(int m) {
    if (m < 2) throw MultipoleError("rho: m must be >= 2");
    if (m % 2 == 1) return ipow(3, (m - 3) / 2);
    BigInt num = ipow(3, m / 2 - 1) + 1;
    return num / 2;
}

BigInt tree_count(int m) {
    if (m < 3) throw MultipoleError("tree_count: m must be >= 3");
    return ipow(2, m - 3);
}

BigInt cycle_count(int m) {
    if (m < 1) throw MultipoleError("cycle_count: m must be >= 1");
    BigInt num = ipow(2, m - 1) + sign(m);
    if (num % 3 != 0) throw MultipoleError("cycle_count: divisibility failure");
    return num / 3;
}

BigInt cycle_coloring_count(int m) {
    if (m < 1) throw MultipoleError("cycle_coloring_count: m must be >= 1");
    return ipow(2, m) + 2 * sign(m);
}

namespace {

void check_forest_args(int n, int m) {
    if (m < 2 || n < 0) throw MultipoleError("forest_count: need m >= 2, n >= 0");
    if ((m - n) % 2 != 0) throw MultipoleError("forest_count: parity n≡m violated");
    if (n > m - 2) throw MultipoleError("forest_count: need n <= m-2");
}

}  // namespace

BigInt forest_count(int n, int m) {
    check_forest_args(n, m);
    if (n == 0) {
        // (3^{(m-2)/2} + 1) / 2
        return (ipow(3, (m - 2) / 2) + 1) / 2;
    }
    // 2^{n-1} * 3^{(m-n)/2 - 1}
    return ipow(2, n - 1) * ipow(3, (m - n) / 2 - 1);
}

BigInt forest_count_recurrence(int n, int m) {
    check_forest_args(n, m);
    if (n == m - 2) {
        // Tree diagonal: t(m) = 2^{m-3}, with f(0,2) = 1.
        return n == 0 ? BigInt(1) : ipow(2, n - 1);
    }
    return forest_count_recurrence(n, m - 2) + forest_count_recurrence(n + 1, m - 1);
}

BigInt forest_count_binomial(int n, int m, int k) {
    check_forest_args(n, m);
    if (k < 0 || n > m - 2 * (k + 1))
        throw MultipoleError("forest_count_binomial: need n <= m - 2(k+1)");
    BigInt total = 0;
    BigInt binom = 1;
    for (int i = 0; i <= k; ++i) {
        total += forest_count(n + i, m - 2 * k + i) * binom;
        binom = binom * (k - i) / (i + 1);
    }
    return total;
}

std::vector<ForestTableRow> forest_table(int max_m) {
    if (max_m < 2) throw MultipoleError("forest_table: max_m must be >= 2");
    std::vector<ForestTableRow> rows;
    for (int m = 2; m <= max_m; ++m) {
        for (int n = m % 2; n <= m - 2; n += 2)
            rows.push_back({n, m, forest_count(n, m), false});
        if (m >= 3) rows.push_back({m, m, cycle_count(m), true});
    }
    return rows;
}

std::string render_forest_table(int max_m) {
    auto rows = forest_table(max_m);
    std::ostringstream oss;
    oss << std::setw(4) << "n\\m";
    for (int m = 2; m <= max_m; ++m) oss << std::setw(8) << m;
    oss << "\n";
    for (int n = 0; n <= max_m; ++n) {
        bool any = false;
        std::ostringstream line;
        line << std::setw(4) << n;
        for (int m = 2; m <= max_m; ++m) {
            bool hit = false;
            for (const auto& row : rows)
                if (row.n == n && row.m == m) {
                    line << std::setw(8) << row.value.str()
                         << (row.cycle_diagonal ? "c" : " ");
                    hit = true;
                    any = true;
                    break;
                }
            if (!hit) line << std::setw(9) << ".";
        }
        if (any) oss << line.str() << "\n";
    }
    return oss.str();
}

const KnownConstants& known_constants() {
    static const KnownConstants k = [] {
        KnownConstants c;
        c.mu = {{4, 2}, {5, 3}, {6, 5}};
        c.v_exact = {{2, 0}, {3, 1}, {4, 2}, {5, 5}};
        c.v_lower = {{6, 12}, {7, 11}};
        return c;
    }();
    return k;
}

}  // namespace mp
