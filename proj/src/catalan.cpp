#include "dab/catalan.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dab {

namespace {

// Memo tables grow on demand and are never evicted. Entries are
// write-once, so concurrent callers always observe the same values.
struct ExactTable {
    std::mutex mu;
    std::vector<BigCount> c;

    BigCount get(long n) {
        std::lock_guard<std::mutex> lock(mu);
        if (c.empty()) c.push_back(1);  // C_0
        while (static_cast<long>(c.size()) <= n) {
            // Segner ratio identity: C_{n+1} (n+2) = C_n 2(2n+1).
            long k = static_cast<long>(c.size()) - 1;
            c.push_back(c.back() * (2 * (2 * k + 1)) / (k + 2));
        }
        return c[static_cast<size_t>(n)];
    }
};

struct LogTable {
    std::mutex mu;
    std::vector<double> lc;

    double get(long n) {
        std::lock_guard<std::mutex> lock(mu);
        while (static_cast<long>(lc.size()) <= n) {
            // log-gamma of the binomial form, not a running ratio, so the
            // error does not drift with n; extended precision keeps the
            // absolute error of the log near 1e-14 even at n = 1e4
            long k = static_cast<long>(lc.size());
            long double v = std::lgammal(2.0L * k + 1.0L) -
                            std::lgammal(k + 2.0L) - std::lgammal(k + 1.0L);
            lc.push_back(static_cast<double>(v));
        }
        return lc[static_cast<size_t>(n)];
    }
};

ExactTable& exact_table() {
    static ExactTable t;
    return t;
}

LogTable& log_table() {
    static LogTable t;
    return t;
}

double log_sum_exp(const std::vector<double>& terms) {
    double hi = -std::numeric_limits<double>::infinity();
    for (double t : terms) hi = std::max(hi, t);
    if (!std::isfinite(hi)) return hi;
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - hi);
    return hi + std::log(acc);
}

// Counts Dyck paths of length 2*len by explicit backtracking, keeping
// those whose first return to the axis occurs at step <= first_return_cap.
long long count_paths(int step, int height, int len2, int first_return_cap,
                      bool returned) {
    if (step == len2) return height == 0 ? 1 : 0;
    // Once the first return has happened the cap no longer constrains us,
    // but a path that has not yet returned by the cap is dead.
    if (!returned && step >= first_return_cap) return 0;
    long long total = 0;
    // up step: must still be able to come back down
    if (height + 1 <= len2 - step - 1)
        total += count_paths(step + 1, height + 1, len2, first_return_cap,
                             returned);
    // down step
    if (height > 0) {
        bool ret = returned || (height == 1);
        total += count_paths(step + 1, height - 1, len2, first_return_cap, ret);
    }
    return total;
}

}  // namespace

BigCount catalan(long n) {
    if (n < -1) throw std::invalid_argument("catalan: n < -1");
    if (n == -1) return 0;
    return exact_table().get(n);
}

double catalan_log(long n) {
    if (n < 0) throw std::invalid_argument("catalan_log: n < 0");
    return log_table().get(n);
}

double catalan_asymptotic(long n) {
    if (n < 1) throw std::invalid_argument("catalan_asymptotic: n < 1");
    double ln = n * std::log(4.0) - 0.5 * std::log(M_PI) - 1.5 * std::log((double)n);
    return std::exp(ln);
}

BigCount partial_convolution(long r, long s) {
    if (r < 1 || s < 1)
        throw std::invalid_argument("partial_convolution: r, s must be >= 1");
    BigCount total = 0;
    for (long k = 1; k <= s; ++k)
        total += catalan(r + s - k - 1) * catalan(k - 1);
    return total;
}

double partial_convolution_log(long r, long s) {
    if (r < 1 || s < 1)
        throw std::invalid_argument("partial_convolution_log: r, s must be >= 1");
    std::vector<double> terms;
    terms.reserve(static_cast<size_t>(s));
    for (long k = 1; k <= s; ++k)
        terms.push_back(catalan_log(r + s - k - 1) + catalan_log(k - 1));
    return log_sum_exp(terms);
}

BigCount dyck_oracle(long r, long s) {
    if (r < 1 || s < 1)
        throw std::invalid_argument("dyck_oracle: r, s must be >= 1");
    if (r + s - 1 > 14)
        throw std::invalid_argument("dyck_oracle: r+s-1 exceeds enumeration bound 14");
    int len2 = static_cast<int>(2 * (r + s - 1));
    return count_paths(0, 0, len2, static_cast<int>(2 * s), false);
}

}  // namespace dab
