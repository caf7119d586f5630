// Runs the full verification suite and prints one line per criterion.
#include <cstdlib>
#include <iostream>

#include "mp/verify.hpp"

int main(int argc, char** argv) {
    int workers = 4;
    if (argc > 1) workers = std::atoi(argv[1]);
    auto results = mp::run_acceptance(workers);
    std::cout << mp::acceptance_report(results);
    for (const auto& r : results) {
        if (!r.pass) {
            std::cerr << "criterion " << r.id << " failed: " << r.detail << "\n";
            return 1;
        }
    }
    return 0;
}
