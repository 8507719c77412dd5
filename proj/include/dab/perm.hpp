#pragma once

#include <vector>

namespace dab {

/// One-line notation: word[i] = sigma(i+1), values in 1..n.
using Permutation = std::vector<int>;

Permutation inverse(const Permutation& sigma);

/// Pointwise complement sigma(i) -> n+1-sigma(i).
Permutation complement(const Permutation& sigma);

/// Inflation sigma[tau_1,...,tau_n]: block substitution of the patterns
/// into the positions of sigma, blocks shifted to preserve relative order.
/// Parts may be empty; throws on a length mismatch.
Permutation inflate(const Permutation& sigma,
                    const std::vector<Permutation>& parts);

/// Up-down alternation sigma(1) < sigma(2) > sigma(3) < ...
/// Vacuously true for length <= 1.
bool is_alternating(const Permutation& sigma);

/// True iff no indices i < j < k realize either forbidden vincular shape
///   sigma(j+1) < sigma(i) < sigma(k) < sigma(j)   or
///   sigma(j)   < sigma(k) < sigma(i) < sigma(j+1).
/// O(n^2) window-extrema scan.
bool is_baxter(const Permutation& sigma);

/// Doubly alternating Baxter: Baxter, alternating, and inverse alternating.
bool is_dab(const Permutation& sigma);

/// All doubly alternating Baxter permutations of length n, in lexicographic
/// order, by backtracking over the alternation constraints with the Baxter
/// check at the leaves. Enumeration bound n <= 13.
std::vector<Permutation> enumerate_dab(int n);

/// M[i-1][j-1] = #{sigma in B_n : sigma(i) = j}, by exhaustive enumeration.
std::vector<std::vector<long long>> brute_count_matrix(int n);

}  // namespace dab
