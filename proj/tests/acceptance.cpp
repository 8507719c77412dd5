// End-to-end acceptance suite: one pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dab/catalan.hpp"
#include "dab/enumerate.hpp"
#include "dab/perm.hpp"
#include "dab/sample.hpp"
#include "dab/surface.hpp"

namespace {

int failures = 0;

void report(int id, const char* what, bool ok, double seconds,
            const std::string& detail = "") {
    std::printf("%s  %2d  %-58s  %7.2fs%s%s\n", ok ? "PASS" : "FAIL", id, what,
                seconds, detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <class F>
void criterion(int id, const char* what, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    report(id, what, ok, dt, detail);
}

double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    for (int i = index; i > 0; i /= base) {
        f /= base;
        r += f * (i % base);
    }
    return r;
}

// round x to the nearest even integer, ties upward
long round_even(double x) {
    return 2 * static_cast<long>(std::floor(x / 2.0 + 0.5));
}

}  // namespace

int main() {
    criterion(1, "enumeration counts are Catalan through length 13",
              [](std::string& detail) {
                  for (int n = 0; n <= 6; ++n) {
                      auto even = dab::enumerate_dab(2 * n);
                      auto odd = dab::enumerate_dab(2 * n + 1);
                      auto cn = dab::catalan(n).convert_to<std::size_t>();
                      if (even.size() != cn || odd.size() != cn) {
                          detail = "mismatch at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(2, "closed formula matches brute force on every cell, m <= 6",
              [](std::string& detail) {
                  for (long m = 1; m <= 6; ++m) {
                      auto oracle = dab::brute_count_matrix(static_cast<int>(2 * m));
                      for (long i = 1; i <= 2 * m; ++i)
                          for (long j = 1; j <= 2 * m; ++j)
                              if (dab::count_b(m, i, j) != oracle[i - 1][j - 1]) {
                                  detail = "m=" + std::to_string(m) + " i=" +
                                           std::to_string(i) + " j=" +
                                           std::to_string(j);
                                  return false;
                              }
                  }
                  return true;
              });

    criterion(3, "summation formula equals the recurrence, m <= 12",
              [](std::string& detail) {
                  for (long m = 1; m <= 12; ++m)
                      for (long i = 1; i <= 2 * m; ++i)
                          for (long j = i; j <= 2 * m - i; ++j)
                              if (dab::count_b_lemma(m, i, j) !=
                                  dab::count_b_recurrence(m, i, j)) {
                                  detail = "m=" + std::to_string(m) + " i=" +
                                           std::to_string(i) + " j=" +
                                           std::to_string(j);
                                  return false;
                              }
                  return true;
              });

    criterion(4, "rows sum to C_m and both reflections hold, m <= 12",
              [](std::string& detail) {
                  for (long m = 1; m <= 12; ++m) {
                      auto mat = dab::count_matrix(m, dab::MatrixMode::Exact);
                      dab::BigCount cm = dab::catalan(m);
                      for (long i = 0; i < 2 * m; ++i) {
                          dab::BigCount row = 0;
                          for (long j = 0; j < 2 * m; ++j) {
                              row += mat.ints[i][j];
                              if (mat.ints[i][j] != mat.ints[j][i] ||
                                  mat.ints[i][j] !=
                                      mat.ints[2 * m - 1 - j][2 * m - 1 - i]) {
                                  detail = "symmetry break at m=" + std::to_string(m);
                                  return false;
                              }
                          }
                          if (row != cm) {
                              detail = "row sum break at m=" + std::to_string(m);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(5, "corner spikes C_{m-1}/C_m and exact zeros, m <= 500",
              [](std::string& detail) {
                  for (long m = 2; m <= 500; ++m) {
                      dab::BigCount cm1 = dab::catalan(m - 1);
                      if (dab::count_b(m, 1, 1) != cm1 ||
                          dab::count_b(m, 1, 2 * m - 1) != cm1 ||
                          dab::count_b(m, 2, 2 * m - 1) != cm1 ||
                          dab::count_b(m, 1, 2) != 0 ||
                          dab::count_b(m, 1, 2 * m) != 0 ||
                          dab::count_b(m, 2, 2) != 0) {
                          detail = "m=" + std::to_string(m);
                          return false;
                      }
                  }
                  // ratio is (m+1)/(2(2m-1)) and sits within 1/m of 1/4
                  long m = 500;
                  if (dab::catalan(m - 1) * (2 * (2 * m - 1)) !=
                      dab::catalan(m) * (m + 1)) {
                      detail = "closed ratio form";
                      return false;
                  }
                  double ratio = static_cast<double>(m + 1) / (2.0 * (2 * m - 1));
                  if (std::abs(ratio - 0.25) > 1.0 / m) {
                      detail = "limit gap";
                      return false;
                  }
                  return true;
              });

    criterion(6, "2 p_{n-k,k} / C_{n-1} within 0.05 of 1, n=400, bulk k",
              [](std::string& detail) {
                  const long n = 400;
                  const double cut = std::pow(static_cast<double>(n), 0.75);
                  const long lo = static_cast<long>(std::floor(cut)) + 1;
                  const long hi = static_cast<long>(std::ceil(n - cut)) - 1;
                  const dab::BigCount cn1 = dab::catalan(n - 1);
                  const dab::BigCount scale(1000000000000LL);
                  double worst = 0.0;
                  for (long k = lo; k <= hi; ++k) {
                      dab::BigCount q =
                          2 * dab::partial_convolution(n - k, k) * scale / cn1;
                      worst = std::max(worst,
                                       std::abs(q.convert_to<double>() / 1e12 - 1.0));
                  }
                  detail = "max deviation " + std::to_string(worst);
                  return worst <= 0.05;
              });

    criterion(7, "sampler: chi-square at m=3, validity, reproducibility",
              [](std::string& detail) {
                  const long N = 100000;
                  auto outcomes = dab::enumerate_dab(6);
                  auto batch = dab::sample_batch(3, N, 20260823);
                  auto again = dab::sample_batch(3, N, 20260823);
                  if (batch.permutations != again.permutations) {
                      detail = "batch not reproducible";
                      return false;
                  }
                  std::map<dab::Permutation, long> hits;
                  for (const auto& s : batch.permutations) {
                      if (!dab::is_dab(s)) {
                          detail = "invalid draw";
                          return false;
                      }
                      ++hits[s];
                  }
                  double expected = static_cast<double>(N) / 5.0;
                  double chi2 = 0;
                  for (const auto& o : outcomes) {
                      double d = static_cast<double>(hits[o]) - expected;
                      chi2 += d * d / expected;
                  }
                  detail = "chi2 = " + std::to_string(chi2);
                  return hits.size() == 5 && chi2 < 18.467;  // df=4, 1 - 1e-3
              });

    criterion(8, "1D reduction vs 2D quadrature; antiderivative identity",
              [](std::string& detail) {
                  double worst = 0.0;
                  for (int t = 1; t <= 20; ++t) {
                      double beta = 0.15 + 0.7 * halton(t, 2);
                      double cap = std::min(beta, 1.0 - beta);
                      double alpha = 0.02 + (0.9 * cap - 0.02) * halton(t, 3);
                      double a = dab::phi(alpha, beta, 1e-8);
                      double b = dab::phi_reduced(alpha, beta, 1e-8);
                      worst = std::max(worst, std::abs(a - b));
                  }
                  detail = "max |phi2d - phi1d| = " + std::to_string(worst);
                  if (worst > 1e-7) return false;
                  std::mt19937_64 gen(31415);
                  std::uniform_real_distribution<double> unit(0.0, 1.0);
                  for (int t = 0; t < 100; ++t) {
                      double beta = 0.15 + 0.7 * unit(gen);
                      double y = 0.05 + 0.4 * unit(gen);
                      double x = beta * (0.05 + 0.85 * unit(gen));
                      double target = std::pow((x + y) * (beta - x), -1.5) *
                                      (y + beta) * (y + beta) / 2.0;
                      double h = 1e-3 * std::min(x, beta - x);
                      auto d = [&](double hh) {
                          return (dab::inner_antiderivative(x + hh, y, beta) -
                                  dab::inner_antiderivative(x - hh, y, beta)) /
                                 (2 * hh);
                      };
                      double est = (4.0 * d(h / 2) - d(h)) / 3.0;
                      if (std::abs(est - target) / target > 1e-9) {
                          detail = "derivative identity";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "|m P - phi| strictly decreasing, m in {250,500,1000,2000}",
              [](std::string& detail) {
                  // float mode must first track exact mode to 1e-9 relative
                  for (long m : {10L, 25L, 40L, 60L}) {
                      auto fl = dab::count_matrix(m, dab::MatrixMode::Float);
                      auto ex = dab::count_matrix(m, dab::MatrixMode::Exact);
                      dab::BigCount cm = dab::catalan(m);
                      for (long i = 0; i < 2 * m; ++i)
                          for (long j = 0; j < 2 * m; ++j) {
                              dab::BigCount scaled =
                                  ex.ints[i][j] * dab::BigCount(1000000000000000LL) /
                                  cm;
                              double p = scaled.convert_to<double>() / 1e15;
                              double f = fl.floats[i][j];
                              bool ok = (p == 0.0) ? (f == 0.0)
                                                   : std::abs(f - p) / p <= 1e-9;
                              if (!ok) {
                                  detail = "float/exact gap at m=" + std::to_string(m);
                                  return false;
                              }
                          }
                  }
                  const double alpha = 0.075, beta = 0.5;
                  const double limit = dab::phi_reduced(alpha, beta, 1e-10);
                  double prev = -1.0;
                  detail = "gaps:";
                  for (long m : {250L, 500L, 1000L, 2000L}) {
                      long i = round_even(2 * alpha * m);
                      long j = round_even(2 * beta * m);
                      double gap =
                          std::abs(m * dab::probability_float(m, i, j) - limit);
                      detail += " " + std::to_string(gap);
                      if (prev >= 0.0 && gap >= prev) return false;
                      prev = gap;
                  }
                  return true;
              });

    criterion(10, "values along alpha = beta - 1e-3 reach 3/2 +- 0.05",
              [](std::string& detail) {
                  double last = 0.0;
                  for (double d : {0.05, 0.02, 0.01, 0.005, 0.002, 0.001, 0.0005,
                                   0.0002, 0.0001, 0.00005, 0.00002, 0.00001,
                                   0.000002}) {
                      double beta = 0.5005 - d;
                      last = dab::phi_reduced(beta - 1e-3, beta, 1e-6);
                  }
                  detail = "closest value " + std::to_string(last);
                  return std::abs(last - 1.5) <= 0.05;
              });

    criterion(11, "G=100 grid satisfies every dihedral symmetry to 1e-5",
              [](std::string& detail) {
                  auto grid = dab::surface_grid(100, 1e-6);
                  const int G = 100;
                  double worst = 0.0;
                  for (int u = 0; u < G; ++u)
                      for (int v = 0; v < G; ++v) {
                          double x = grid.values[u][v];
                          if (x <= 0.0) {
                              detail = "nonpositive cell";
                              return false;
                          }
                          worst = std::max(worst, std::abs(x - grid.values[v][u]));
                          worst = std::max(
                              worst, std::abs(x - grid.values[G - 1 - v][G - 1 - u]));
                          worst = std::max(
                              worst, std::abs(x - grid.values[G - 1 - u][G - 1 - v]));
                      }
                  detail = "max asymmetry " + std::to_string(worst);
                  return worst <= 1e-5;
              });

    if (failures == 0) {
        std::printf("all 11 criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
