#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Divergence statistics between two ranking lists of the same universities:
// Spearman rank correlation, per-university shift statistics, the paired
// t-test on per-researcher scaled productivity values, and the normalized
// rank-divergence indicator R' (sum of absolute shifts over the maximum
// attainable under perfect inversion, as a percentage).

namespace fssrank {

struct SpearmanResult {
    double rho = 0.0;
    double p_value = 1.0;  // two-sided, t approximation with n-2 df
    std::string stars;
};

struct PairedTestResult {
    std::string university_id;
    double t_statistic = 0.0;
    int degrees_of_freedom = 0;  // n - 1
    double p_value = 1.0;
    std::string stars;
};

struct ShiftStats {
    // signed_shifts[i] = rank_a[i] - rank_b[i]; positive means the entry
    // improved (smaller rank number) under the second ranking.
    std::vector<int> signed_shifts;
    std::vector<int> abs_shifts;
    int max_shift = 0;
    long long sum_shift = 0;   // sum of |d|
    double mean_shift = 0.0;   // sum_shift / n, zeros included
    int n_shifted = 0;         // entries with |d| > 0
    double percent_shifted = 0.0;
};

struct RPrimeResult {
    long long sum_abs_diff = 0;
    long long max_sum = 0;  // n^2/2 for even n, (n-1)*((n-1)/2 + 1) for odd n
    double r_prime = 0.0;   // percentage in [0, 100]
};

// Maximum of sum |sigma(i) - i| over all permutations sigma of 1..n.
long long max_rank_displacement(int n);

// rho = 1 - 6*sum(d^2) / (n(n^2-1)). Inputs must be equal-length
// permutations of 1..n with n >= 2, aligned entry by entry.
SpearmanResult spearman_rho(const std::vector<int>& rank_a, const std::vector<int>& rank_b);

// Exact two-sided permutation p-value for Spearman's rho, n <= 10.
double spearman_exact_p(const std::vector<int>& rank_a, const std::vector<int>& rank_b);

// Paired t on aligned per-researcher values; d_i = a_i - b_i,
// t = mean(d) / (s/sqrt(n)) with s the sample standard deviation (n-1
// divisor). s = 0 reports t = 0, p = 1.
PairedTestResult paired_t_test(const std::vector<double>& scaled_a,
                               const std::vector<double>& scaled_b);

ShiftStats rank_shift_stats(const std::vector<int>& rank_a, const std::vector<int>& rank_b);

RPrimeResult r_prime(const std::vector<int>& rank_a, const std::vector<int>& rank_b);

}  // namespace fssrank
