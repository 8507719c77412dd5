#include "dab/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace dab {

Permutation inverse(const Permutation& sigma) {
    Permutation inv(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i)
        inv[static_cast<size_t>(sigma[i]) - 1] = static_cast<int>(i) + 1;
    return inv;
}

Permutation complement(const Permutation& sigma) {
    int n = static_cast<int>(sigma.size());
    Permutation out(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) out[i] = n + 1 - sigma[i];
    return out;
}

Permutation inflate(const Permutation& sigma,
                    const std::vector<Permutation>& parts) {
    if (sigma.size() != parts.size())
        throw std::invalid_argument("inflate: parts count must match pattern length");
    size_t total = 0;
    for (const auto& p : parts) total += p.size();

    // Value offset of block i = total size of blocks with smaller pattern value.
    std::vector<size_t> val_offset(sigma.size(), 0);
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t t = 0; t < sigma.size(); ++t)
            if (sigma[t] < sigma[i]) val_offset[i] += parts[t].size();

    Permutation out(total);
    size_t pos = 0;
    for (size_t i = 0; i < sigma.size(); ++i) {
        for (int v : parts[i]) out[pos++] = static_cast<int>(val_offset[i]) + v;
    }
    return out;
}

bool is_alternating(const Permutation& sigma) {
    for (size_t i = 0; i + 1 < sigma.size(); ++i) {
        bool ascent = sigma[i] < sigma[i + 1];
        if (ascent != (i % 2 == 0)) return false;
    }
    return true;
}

bool is_baxter(const Permutation& sigma) {
    int n = static_cast<int>(sigma.size());
    // For each j the forbidden shapes reduce to an extremal witness over
    // i < j combined with an existence scan over k > j.
    for (int j = 1; j <= n - 1; ++j) {
        int sj = sigma[static_cast<size_t>(j) - 1];
        int sj1 = sigma[static_cast<size_t>(j)];
        if (sj1 < sj) {
            // shape sigma(j+1) < sigma(i) < sigma(k) < sigma(j):
            // the smallest admissible sigma(i) gives the widest k-window
            int lo = sj1, hi = sj;
            int best = hi;
            for (int i = 1; i < j; ++i) {
                int si = sigma[static_cast<size_t>(i) - 1];
                if (si > lo && si < hi) best = std::min(best, si);
            }
            if (best < hi) {
                for (int k = j + 1; k <= n; ++k) {
                    int sk = sigma[static_cast<size_t>(k) - 1];
                    if (sk > best && sk < hi) return false;
                }
            }
        } else {
            // shape sigma(j) < sigma(k) < sigma(i) < sigma(j+1):
            // the largest admissible sigma(i) gives the widest k-window
            int lo = sj, hi = sj1;
            int best = lo;
            for (int i = 1; i < j; ++i) {
                int si = sigma[static_cast<size_t>(i) - 1];
                if (si > lo && si < hi) best = std::max(best, si);
            }
            if (best > lo) {
                for (int k = j + 1; k <= n; ++k) {
                    int sk = sigma[static_cast<size_t>(k) - 1];
                    if (sk > lo && sk < best) return false;
                }
            }
        }
    }
    return true;
}

bool is_dab(const Permutation& sigma) {
    return is_alternating(sigma) && is_alternating(inverse(sigma)) &&
           is_baxter(sigma);
}

namespace {

// Backtracks over positions left to right, keeping sigma alternating and
// the partial inverse's alternation consistent. Baxter is not prefix-closed
// under this construction, so it is checked at the leaves.
struct DabEnumerator {
    int n;
    Permutation word;
    std::vector<bool> placed;  // placed[v-1]
    std::vector<Permutation> out;

    explicit DabEnumerator(int n_) : n(n_), placed(static_cast<size_t>(n_), false) {
        word.reserve(static_cast<size_t>(n_));
    }

    // Value pairs (v-1, v) and (v, v+1) of the inverse-alternation pattern:
    // pos(v) < pos(v+1) for v odd, pos(v) > pos(v+1) for v even. Positions
    // are assigned in increasing order, so placing v now fixes both checks.
    bool inverse_ok(int v) const {
        if (v >= 2 && placed[static_cast<size_t>(v) - 2] != ((v - 1) % 2 == 1))
            return false;
        if (v <= n - 1 && placed[static_cast<size_t>(v)] != (v % 2 == 0))
            return false;
        return true;
    }

    void run() {
        if (n == 0) {
            out.push_back({});
            return;
        }
        extend();
    }

    void extend() {
        int t = static_cast<int>(word.size()) + 1;  // position being filled
        for (int v = 1; v <= n; ++v) {
            if (placed[static_cast<size_t>(v) - 1]) continue;
            if (t >= 2) {
                int prev = word.back();
                bool need_ascent = (t % 2 == 0);
                if ((v > prev) != need_ascent) continue;
            }
            if (!inverse_ok(v)) continue;
            word.push_back(v);
            placed[static_cast<size_t>(v) - 1] = true;
            if (t == n) {
                if (is_baxter(word)) out.push_back(word);
            } else {
                extend();
            }
            placed[static_cast<size_t>(v) - 1] = false;
            word.pop_back();
        }
    }
};

}  // namespace

std::vector<Permutation> enumerate_dab(int n) {
    if (n < 0 || n > 13)
        throw std::invalid_argument("enumerate_dab: n outside oracle bound [0, 13]");
    DabEnumerator e(n);
    e.run();
    return e.out;
}

std::vector<std::vector<long long>> brute_count_matrix(int n) {
    auto all = enumerate_dab(n);
    std::vector<std::vector<long long>> mat(
        static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (const auto& sigma : all)
        for (int i = 0; i < n; ++i)
            ++mat[static_cast<size_t>(i)][static_cast<size_t>(sigma[static_cast<size_t>(i)]) - 1];
    return mat;
}

}  // namespace dab
