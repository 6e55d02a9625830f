#pragma once

#include <string>
#include <vector>

namespace mahlerkit {

// Knobs for the verification suite. The defaults pin the full-scale run;
// smaller truncation orders shrink the verified ranges but every criterion
// still runs.
struct RunConfig {
    long n = 5000;     // main truncation order
    long max_dim = 10; // guessing dimension bound
    long d_m = 3;      // operator degree bound in M_k
    long d_x = 4;      // operator coefficient degree bound
    long r_max = 8;    // exponent bound for n^r chi(n)
    long s_max = 4;    // preceq witness bound
    std::vector<long> q_list = {3, 5, 7};
    unsigned long long seed = 0x6d61686c65726bULL;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double millis = 0.0;
};

// Runs the twelve verification criteria in order; deterministic for a fixed
// config apart from the timings.
std::vector<CriterionResult> run_all_criteria(const RunConfig& cfg);

} // namespace mahlerkit
