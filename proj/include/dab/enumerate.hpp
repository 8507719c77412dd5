#pragma once

#include <string>
#include <vector>

#include "dab/catalan.hpp"

namespace dab {

enum class MatrixMode { Exact, Float };

/// 2m x 2m table of B(m,i,j) (exact) or P(m,i,j) = B/C_m (float).
struct CountMatrix {
    long m = 0;
    MatrixMode mode = MatrixMode::Exact;
    std::vector<std::vector<BigCount>> ints;    // exact mode
    std::vector<std::vector<double>> floats;    // float mode
};

/// B(m,i,j) by the closed summation formula, valid on 1 <= i <= j <= 2m-i.
/// Keyed only on the parity of j; a = ceil(i/2) absorbs the parity of i.
BigCount count_b_lemma(long m, long i, long j);

/// B(m,i,j) by the independent two-sum recurrence (conditioning on the
/// position of the maximum value), memoized, valid on all 1 <= i,j <= 2m.
BigCount count_b_recurrence(long m, long i, long j);

/// B(m,i,j) for all 1 <= i,j <= 2m: reflects into the summation formula's
/// region; anti-diagonal cells i+j = 2m+1, which the reflections fix, are
/// routed through the recurrence.
BigCount count_b(long m, long i, long j);

/// Full 2m x 2m matrix. Exact mode (m <= 256) uses bigint arithmetic;
/// float mode (m <= 4000) evaluates the same sums in log space and stores
/// probabilities P(m,i,j). Only the fundamental domain is computed; the
/// rest is filled by the reflection symmetries.
CountMatrix count_matrix(long m, MatrixMode mode);

/// P(m,i,j) = B(m,i,j)/C_m. Exact bigint ratio for m <= 256, log space
/// above (m <= 4000).
double probability(long m, long i, long j);

/// P(m,i,j) evaluated entirely in log space, regardless of m.
double probability_float(long m, long i, long j);

struct CornerEntry {
    std::string label;
    long i = 0;
    long j = 0;
    BigCount numerator;    // B(m,i,j)
    BigCount denominator;  // C_m
    double value = 0.0;
};

/// The six corner probabilities: P(m,1,1), P(m,1,2m-1), P(m,2,2m-1) equal
/// C_{m-1}/C_m exactly; P(m,1,2), P(m,1,2m), P(m,2,2) equal 0 exactly.
std::vector<CornerEntry> corner_probabilities(long m);

}  // namespace dab
