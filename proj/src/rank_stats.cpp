#include "fssrank/rank_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "fssrank/errors.hpp"
#include "fssrank/student_t.hpp"

namespace fssrank {

namespace {

void check_aligned_permutations(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) {
        throw LengthMismatchError("rank lists have different lengths: " +
                                  std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
    if (a.size() < 2) {
        throw TooFewObservationsError("rank comparison needs at least 2 entries");
    }
    const int n = static_cast<int>(a.size());
    std::vector<bool> seen_a(static_cast<std::size_t>(n), false);
    std::vector<bool> seen_b(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (a[i] < 1 || a[i] > n || seen_a[static_cast<std::size_t>(a[i] - 1)]) {
            throw NotAPermutationError("first rank list is not a permutation of 1.." +
                                       std::to_string(n));
        }
        if (b[i] < 1 || b[i] > n || seen_b[static_cast<std::size_t>(b[i] - 1)]) {
            throw NotAPermutationError("second rank list is not a permutation of 1.." +
                                       std::to_string(n));
        }
        seen_a[static_cast<std::size_t>(a[i] - 1)] = true;
        seen_b[static_cast<std::size_t>(b[i] - 1)] = true;
    }
}

}  // namespace

long long max_rank_displacement(int n) {
    if (n < 2) throw TooFewObservationsError("max_rank_displacement needs n >= 2");
    const long long ln = n;
    if (n % 2 == 0) return ln * ln / 2;
    return (ln - 1) * ((ln - 1) / 2 + 1);
}

SpearmanResult spearman_rho(const std::vector<int>& rank_a, const std::vector<int>& rank_b) {
    check_aligned_permutations(rank_a, rank_b);
    const long long n = static_cast<long long>(rank_a.size());

    long long sum_d2 = 0;
    for (std::size_t i = 0; i < rank_a.size(); ++i) {
        const long long d = rank_a[i] - rank_b[i];
        sum_d2 += d * d;
    }

    SpearmanResult out;
    const long long denom = n * (n * n - 1);
    out.rho = 1.0 - 6.0 * static_cast<double>(sum_d2) / static_cast<double>(denom);

    if (std::fabs(out.rho) >= 1.0) {
        out.p_value = 0.0;
    } else if (n == 2) {
        // |rho| is always 1 for n = 2; unreachable, kept for completeness.
        out.p_value = 1.0;
    } else {
        const double df = static_cast<double>(n - 2);
        const double t = out.rho * std::sqrt(df / (1.0 - out.rho * out.rho));
        out.p_value = student_t_two_sided_p(t, df);
    }
    out.stars = significance_stars(out.p_value);
    return out;
}

double spearman_exact_p(const std::vector<int>& rank_a, const std::vector<int>& rank_b) {
    check_aligned_permutations(rank_a, rank_b);
    const int n = static_cast<int>(rank_a.size());
    if (n > 10) {
        throw std::invalid_argument("spearman_exact_p enumerates all n! permutations; n <= 10");
    }

    long long sum_d2_obs = 0;
    for (int i = 0; i < n; ++i) {
        const long long d = rank_a[i] - rank_b[i];
        sum_d2_obs += d * d;
    }

    // |rho| >= |rho_obs| compared in exact integers:
    // rho = 1 - 6 S / D, so |D - 6 S| >= |D - 6 S_obs|.
    const long long denom = static_cast<long long>(n) * (n * static_cast<long long>(n) - 1);
    const long long obs_dev = std::llabs(denom - 6 * sum_d2_obs);

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    long long total = 0;
    long long extreme = 0;
    do {
        long long s = 0;
        for (int i = 0; i < n; ++i) {
            const long long d = perm[static_cast<std::size_t>(i)] - (i + 1);
            s += d * d;
        }
        if (std::llabs(denom - 6 * s) >= obs_dev) ++extreme;
        ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));

    return static_cast<double>(extreme) / static_cast<double>(total);
}

PairedTestResult paired_t_test(const std::vector<double>& scaled_a,
                               const std::vector<double>& scaled_b) {
    if (scaled_a.size() != scaled_b.size()) {
        throw LengthMismatchError("paired samples have different lengths: " +
                                  std::to_string(scaled_a.size()) + " vs " +
                                  std::to_string(scaled_b.size()));
    }
    if (scaled_a.size() < 2) {
        throw TooFewObservationsError("paired t-test needs at least 2 observations");
    }

    const std::size_t n = scaled_a.size();
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = scaled_a[i] - scaled_b[i];

    double sum = 0.0;
    for (double v : d) sum += v;
    const double mean = sum / static_cast<double>(n);

    double ss = 0.0;
    for (double v : d) {
        const double dev = v - mean;
        ss += dev * dev;
    }
    const double s = std::sqrt(ss / static_cast<double>(n - 1));

    PairedTestResult out;
    out.degrees_of_freedom = static_cast<int>(n) - 1;
    if (s == 0.0) {
        out.t_statistic = 0.0;
        out.p_value = 1.0;
    } else {
        out.t_statistic = mean / (s / std::sqrt(static_cast<double>(n)));
        out.p_value =
            student_t_two_sided_p(out.t_statistic, static_cast<double>(out.degrees_of_freedom));
    }
    out.stars = significance_stars(out.p_value);
    return out;
}

ShiftStats rank_shift_stats(const std::vector<int>& rank_a, const std::vector<int>& rank_b) {
    check_aligned_permutations(rank_a, rank_b);
    const std::size_t n = rank_a.size();

    ShiftStats out;
    out.signed_shifts.resize(n);
    out.abs_shifts.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int d = rank_a[i] - rank_b[i];
        out.signed_shifts[i] = d;
        out.abs_shifts[i] = std::abs(d);
        out.sum_shift += out.abs_shifts[i];
        out.max_shift = std::max(out.max_shift, out.abs_shifts[i]);
        if (d != 0) ++out.n_shifted;
    }
    out.mean_shift = static_cast<double>(out.sum_shift) / static_cast<double>(n);
    out.percent_shifted = 100.0 * static_cast<double>(out.n_shifted) / static_cast<double>(n);
    return out;
}

RPrimeResult r_prime(const std::vector<int>& rank_a, const std::vector<int>& rank_b) {
    check_aligned_permutations(rank_a, rank_b);

    RPrimeResult out;
    for (std::size_t i = 0; i < rank_a.size(); ++i) {
        out.sum_abs_diff += std::llabs(static_cast<long long>(rank_a[i]) - rank_b[i]);
    }
    out.max_sum = max_rank_displacement(static_cast<int>(rank_a.size()));
    out.r_prime = 100.0 * static_cast<double>(out.sum_abs_diff) / static_cast<double>(out.max_sum);
    return out;
}

}  // namespace fssrank
