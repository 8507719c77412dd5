#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dab/perm.hpp"

namespace dab {

/// Seedable deterministic random source. mt19937_64 has a fully specified
/// output sequence, so identical seeds reproduce identical permutations on
/// every platform; unit doubles are built by explicit bit manipulation for
/// the same reason.
class RngState {
  public:
    explicit RngState(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1), 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

/// splitmix64 step, used to derive independent per-sample child seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// q_k = C_k C_{m-k-1} / C_m for k = 0..m-1, the law of (sigma(1)-1)/2
/// over B_{2m}. Catalan-ratio recurrence in doubles for m <= 1000,
/// log space with normalization above.
std::vector<double> first_value_distribution(long m);

/// Uniform draw from B_{2m} by the recursive block decomposition.
/// Iterative (explicit work stack), safe at m = 2000 and beyond.
Permutation sample_even(long m, RngState& rng);

/// Uniform draw from B_{2m+1}: prepend 1 to the shifted complement of a
/// uniform member of B_{2m}.
Permutation sample_odd(long m, RngState& rng);

struct SampleBatch {
    long m = 0;
    long count = 0;
    std::uint64_t seed = 0;
    bool odd = false;
    std::vector<Permutation> permutations;
};

/// count independent draws; sample i uses the child seed
/// derive_seed(seed, i), so batches are reproducible and order-independent.
SampleBatch sample_batch(long m, long count, std::uint64_t seed, bool odd = false);

/// Empirical frequency matrix: entry (i,j) = #{samples with sigma(i)=j}/count.
std::vector<std::vector<double>> empirical_matrix(long m, long count,
                                                  std::uint64_t seed);

}  // namespace dab
