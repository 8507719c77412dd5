#include "dab/sample.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dab/catalan.hpp"

namespace dab {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over seed advanced by the index
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<double> first_value_distribution(long m) {
    if (m < 1) throw std::invalid_argument("first_value_distribution: m must be >= 1");
    std::vector<double> q(static_cast<size_t>(m));
    if (m <= 1000) {
        // Catalan-ratio recurrence: q_0 = C_{m-1}/C_m, and
        // q_{k+1}/q_k = (C_{k+1}/C_k) / (C_{m-k-1}/C_{m-k-2}).
        double v = static_cast<double>(m + 1) / (2.0 * (2 * m - 1));
        for (long k = 0; k < m; ++k) {
            q[static_cast<size_t>(k)] = v;
            if (k + 1 < m)
                v *= (2.0 * (2 * k + 1) / (k + 2)) *
                     (static_cast<double>(m - k) / (2.0 * (2 * (m - k) - 2 - 1)));
        }
    } else {
        double lcm = catalan_log(m);
        double mx = -std::numeric_limits<double>::infinity();
        std::vector<double> lq(static_cast<size_t>(m));
        for (long k = 0; k < m; ++k) {
            lq[static_cast<size_t>(k)] =
                catalan_log(k) + catalan_log(m - k - 1) - lcm;
            mx = std::max(mx, lq[static_cast<size_t>(k)]);
        }
        for (long k = 0; k < m; ++k)
            q[static_cast<size_t>(k)] = std::exp(lq[static_cast<size_t>(k)] - mx);
    }
    double total = 0.0;
    for (double v : q) total += v;
    for (double& v : q) v /= total;
    return q;
}

namespace {

// A pending window: write a member of B_{2*half} (complemented iff flip)
// into positions [pos0, pos0+2*half) with values [val0, val0+2*half).
struct Task {
    long pos0, val0, half;
    bool flip;
};

long draw_k(long m, RngState& rng) {
    std::vector<double> q = first_value_distribution(m);
    double u = rng.next_unit();
    double cum = 0.0;
    for (long k = 0; k < m; ++k) {
        cum += q[static_cast<size_t>(k)];
        if (u < cum) return k;
    }
    return m - 1;  // numerical tail
}

}  // namespace

Permutation sample_even(long m, RngState& rng) {
    if (m < 0) throw std::invalid_argument("sample_even: m must be >= 0");
    Permutation sigma(static_cast<size_t>(2 * m), 0);
    std::vector<Task> stack;
    stack.push_back({0, 1, m, false});
    while (!stack.empty()) {
        Task t = stack.back();
        stack.pop_back();
        if (t.half == 0) continue;
        long k = draw_k(t.half, rng);
        long len = 2 * t.half;
        // decomposition 2341[1, tau^c, 1, omega] with block sizes
        // (1, 2(half-k-1), 1, 2k); under a flip the fixed points and value
        // windows mirror, and the middle block's complement cancels.
        if (!t.flip) {
            sigma[static_cast<size_t>(t.pos0)] = static_cast<int>(t.val0 + 2 * k);
            sigma[static_cast<size_t>(t.pos0 + len - 2 * k - 1)] =
                static_cast<int>(t.val0 + len - 1);
        } else {
            sigma[static_cast<size_t>(t.pos0)] =
                static_cast<int>(t.val0 + len - 2 * k - 1);
            sigma[static_cast<size_t>(t.pos0 + len - 2 * k - 1)] =
                static_cast<int>(t.val0);
        }
        // omega window, then the middle window on top so the draw order
        // follows the permutation left to right
        stack.push_back({t.pos0 + len - 2 * k,
                         t.flip ? t.val0 + len - 2 * k : t.val0, k, t.flip});
        stack.push_back({t.pos0 + 1, t.flip ? t.val0 + 1 : t.val0 + 2 * k + 1,
                         t.half - k - 1, !t.flip});
    }
    return sigma;
}

Permutation sample_odd(long m, RngState& rng) {
    if (m < 0) throw std::invalid_argument("sample_odd: m must be >= 0");
    Permutation tau = sample_even(m, rng);
    Permutation sigma(static_cast<size_t>(2 * m + 1));
    sigma[0] = 1;
    int n = static_cast<int>(2 * m);
    for (size_t i = 0; i < tau.size(); ++i)
        sigma[i + 1] = 1 + (n + 1 - tau[i]);
    return sigma;
}

SampleBatch sample_batch(long m, long count, std::uint64_t seed, bool odd) {
    if (m < 0 || count < 1)
        throw std::invalid_argument("sample_batch: need m >= 0 and count >= 1");
    SampleBatch batch;
    batch.m = m;
    batch.count = count;
    batch.seed = seed;
    batch.odd = odd;
    batch.permutations.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        RngState rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        batch.permutations.push_back(odd ? sample_odd(m, rng)
                                         : sample_even(m, rng));
    }
    return batch;
}

std::vector<std::vector<double>> empirical_matrix(long m, long count,
                                                  std::uint64_t seed) {
    if (m < 1 || count < 1)
        throw std::invalid_argument("empirical_matrix: need m >= 1 and count >= 1");
    size_t n = static_cast<size_t>(2 * m);
    std::vector<std::vector<long long>> hits(n, std::vector<long long>(n, 0));
    for (long s = 0; s < count; ++s) {
        RngState rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
        Permutation sigma = sample_even(m, rng);
        for (size_t i = 0; i < n; ++i)
            ++hits[i][static_cast<size_t>(sigma[i]) - 1];
    }
    std::vector<std::vector<double>> freq(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            freq[i][j] = static_cast<double>(hits[i][j]) / static_cast<double>(count);
    return freq;
}

}  // namespace dab
