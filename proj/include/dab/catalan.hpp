#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dab {

/// Arbitrary-precision nonnegative count.
using BigCount = boost::multiprecision::cpp_int;

/// n-th Catalan number. Accepts n = -1 and returns 0 (empty-structure
/// convention); rejects n < -1.
BigCount catalan(long n);

/// Natural log of C_n, accurate to ~1e-12 relative in exp for n <= 1e4.
double catalan_log(long n);

/// Leading-order asymptotic 4^n / (sqrt(pi) n^{3/2}), evaluated in log
/// space so it stays finite for n up to ~1e6. Requires n >= 1.
double catalan_asymptotic(long n);

/// Partial Catalan convolution
///   p_{r,s} = sum_{k=1}^{s} C_{r+s-k-1} * C_{k-1},
/// the number of Dyck paths of length 2(r+s-1) whose first return to the
/// axis happens by step 2s. Requires r, s >= 1.
BigCount partial_convolution(long r, long s);

/// log(p_{r,s}), computed by log-sum-exp over the defining sum.
double partial_convolution_log(long r, long s);

/// Counts the same paths as partial_convolution by explicit generation.
/// Test oracle; hard-capped at r+s-1 <= 14.
BigCount dyck_oracle(long r, long s);

}  // namespace dab
